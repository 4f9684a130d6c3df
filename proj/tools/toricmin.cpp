#include <iostream>

#include <CLI11.hpp>

#include "toricmin/morse.hpp"
#include "toricmin/report.hpp"

using namespace toricmin;

int main(int argc, char** argv) {
  CLI::App app{"Minimal models of complexified toric and hyperplane arrangement complements"};
  std::string command, path;
  report::Options opts;
  bool json = false;
  std::string base;
  app.add_option("command", command, "layers|faces|nbc|poincare|salvetti|matching|homology|verify|report")
      ->required()
      ->check(CLI::IsMember(report::commands()));
  app.add_option("file", path, "arrangement file")->required();
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--max-deg", opts.max_deg, "highest homology degree")->check(CLI::NonNegativeNumber);
  app.add_option("--base-chamber", base, "base chamber of A0 as a sign string, e.g. +-+");
  app.add_flag("--skip-colimit", opts.skip_colimit, "skip the colimit reconstruction in verify");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (!base.empty()) opts.base_chamber = base;

  try {
    auto spec = io::parse_file(path);
    auto result = report::run(command, spec, opts);
    if (json) {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << report::render(command, result);
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const morse::SearchExhausted& e) {
    std::cerr << "verification failed: search exhausted: " << e.what() << "\n";
    return 2;
  } catch (const morse::NoMatching& e) {
    std::cerr << "verification failed: no matching: " << e.what() << "\n";
    return 2;
  }
}

#include <doctest.h>

#include <filesystem>

#include "toricmin/io.hpp"
#include "toricmin/report.hpp"

using namespace toricmin;
using namespace toricmin::io;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_string(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the running example") {
  auto s = parse_string("toric 2\n1 0 @ 0/1\n1 -1 @ 0/1\n1 1 @ 0/1\n");
  CHECK(s.kind == Kind::toric);
  CHECK(s.dim == 2);
  REQUIRE(s.vectors.size() == 3);
  CHECK(s.vectors[1](1) == -1);
  CHECK(s.constants[2] == 0);
}

TEST_CASE("comments, spacing and bare integers") {
  auto s = parse_string("# header comment\n\n  central 2   # trailing\n1 0=0\n\t0 1 = 0/1\n");
  CHECK(s.kind == Kind::central);
  CHECK(s.vectors.size() == 2);
  auto t = parse_string("toric 1\n1@1/3\n");
  CHECK(t.constants[0] == Rational(1, 3));
  auto a = parse_string("affine 2\r\n1 1 = -3/6\r\n");
  CHECK(a.constants[0] == Rational(-1, 2));
}

TEST_CASE("round trip through the canonical text") {
  for (const char* text : {"toric 2\n1 0 @ 0/1\n1 -1 @ 1/2\n", "affine 3\n1 2 3 = -5/2\n0 0 1 = 0/1\n",
                           "central 1\n1 = 0/1\n", "toric 2\n"}) {
    auto s = parse_string(text);
    CHECK(serialize(s) == text);
    CHECK(parse_string(serialize(s)) == s);
  }
  auto s = parse_string("affine 2\n2 0 = 4/2\n");
  CHECK(serialize(s) == "affine 2\n2 0 = 2/1\n");
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_of("") == "line 0: missing header");
  CHECK(error_of("torus 2\n") == "line 1: unknown arrangement kind 'torus'");
  CHECK(error_of("toric 2\n1 0 @ 0/1\n1 x @ 0/1\n") == "line 3: expected an integer, got 'x'");
  CHECK(error_of("toric 2\n\n0 0 @ 0/1\n") == "line 3: zero character");
  CHECK(error_of("toric 1\n1 @ 1/1\n") == "line 2: level must lie in [0,1)");
  CHECK(error_of("toric 1\n1 @ 1/0\n") == "line 2: zero denominator");
  CHECK(error_of("affine 2\n1 0 @ 0\n") == "line 2: '@' does not belong in a affine file");
  CHECK(error_of("central 2\n1 0 = 1\n") == "line 2: central hyperplanes need constant 0");
  CHECK(error_of("affine 2\n1 0 0 = 1\n").rfind("line 2: expected 2 integers", 0) == 0);
  CHECK(error_of("affine 2\n1 0 = 1/-2\n") == "line 2: denominator must be unsigned");
}

TEST_CASE("conversions") {
  auto t = to_toric(parse_string("toric 1\n2 @ 0/1\n"));
  CHECK(t.size() == 1);
  CHECK_THROWS_AS(to_hyperplanes(parse_string("toric 1\n1 @ 0/1\n")), InputError);
  std::vector<std::string> warnings;
  auto h = to_hyperplanes(parse_string("affine 2\n1 0 = 1\n2 0 = 2\n0 1 = 0\n"), &warnings);
  CHECK(h.size() == 2);
  CHECK(warnings.size() == 1);
}

TEST_CASE("report commands") {
  auto run = [](const std::string& cmd, const std::string& text) {
    return report::run(cmd, parse_string(text), {});
  };
  const std::string running = "toric 2\n1 0 @ 0/1\n1 -1 @ 0/1\n1 1 @ 0/1\n";
  CHECK(report::render("poincare", run("poincare", running)) == "1 + 5t + 7t^2\n");
  CHECK(run("layers", running)["layers"]["count"] == 6);
  auto m = run("matching", "toric 1\n1 @ 0/1\n1 @ 1/2\n");
  CHECK(m["matching"]["census"] == report::Json({1, 3}));
  CHECK(report::render("matching", m).find("matching.census: (1,3)\n") != std::string::npos);
  auto v = run("verify", running);
  CHECK(v["verify"]["passed"] == true);
  CHECK(run("homology", "central 2\n1 0 = 0\n0 1 = 0\n")["homology"]["betti"] == report::Json({1, 2, 1}));
  CHECK(run("poincare", "toric 2\n")["poincare"]["polynomial"] == "1 + 2t + t^2");
  CHECK_THROWS_AS(run("faces", "toric 2\n"), InputError);
  CHECK_THROWS_AS(run("nonsense", running), InputError);

  report::Options bad;
  bad.base_chamber = "++";
  CHECK_THROWS_AS(report::run("salvetti", parse_string(running), bad), InputError);

  report::Options trunc;
  trunc.max_deg = 1;
  auto h = report::run("homology", parse_string(running), trunc);
  CHECK(h["homology"]["betti"] == report::Json({1, 5}));
  CHECK(h["homology"]["truncated"] == true);
}

TEST_CASE("every corpus file parses and round-trips") {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(TORICMIN_CORPUS_DIR)) {
    auto s = parse_file(entry.path().string());
    CHECK(parse_string(serialize(s)) == s);
    ++files;
  }
  CHECK(files >= 10);
  CHECK_THROWS_AS(parse_file("/nonexistent/file.txt"), InputError);
}

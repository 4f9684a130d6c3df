#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricmin/io.hpp"

namespace toricmin::report {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

struct Options {
  std::optional<std::string> base_chamber;  // signs over the hyperplanes of A0
  int max_deg = -1;                         // -1: full height
  bool skip_colimit = false;
};

const std::vector<std::string>& commands();

// Runs one command. InputError and VerificationError propagate.
Json run(const std::string& command, const io::InputSpec& spec, const Options& opts);

// Human-readable rendering of run()'s result.
std::string render(const std::string& command, const Json& result);

}  // namespace toricmin::report

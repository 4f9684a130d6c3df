#pragma once

#include <istream>
#include <string>
#include <vector>

#include "toricmin/exact.hpp"
#include "toricmin/hyperplane.hpp"
#include "toricmin/toric.hpp"

namespace toricmin::io {

enum class Kind { toric, affine, central };

// One arrangement in the text format:
//   toric <d>        then lines  a1 ... ad @ p/q   (level in [0,1))
//   affine <d>       then lines  a1 ... ad = p/q
//   central <d>      then lines  a1 ... ad = 0
// '#' starts a comment; a constant may also be a bare integer.
struct InputSpec {
  Kind kind = Kind::toric;
  int dim = 0;
  std::vector<IntVector> vectors;
  std::vector<Rational> constants;
};

std::string kind_name(Kind k);

// Throws InputError carrying the offending line number.
InputSpec parse(std::istream& in);
InputSpec parse_string(const std::string& text);
InputSpec parse_file(const std::string& path);

// Canonical text; parse(serialize(s)) == s.
std::string serialize(const InputSpec& s);
bool operator==(const InputSpec& a, const InputSpec& b);

toric::ToricArrangement to_toric(const InputSpec& s);
// Repeated hyperplanes are merged; one warning per dropped copy.
hyper::Arrangement to_hyperplanes(const InputSpec& s, std::vector<std::string>* warnings = nullptr);

}  // namespace toricmin::io

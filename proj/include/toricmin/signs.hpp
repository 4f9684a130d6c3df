#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toricmin {

// Entries are -1, 0, +1; lexicographic comparison orders - < 0 < +.
using SignVector = std::vector<std::int8_t>;

// F∘G: F where F is nonzero, G elsewhere.
SignVector compose(const SignVector& f, const SignVector& g);
// Face order: F <= G iff G agrees with F wherever F is nonzero.
bool face_leq(const SignVector& f, const SignVector& g);
bool is_chamber(const SignVector& s);
// Positions where c and d have opposite nonzero signs.
std::vector<int> separation(const SignVector& c, const SignVector& d);
SignVector restrict(const SignVector& s, const std::vector<int>& positions);
SignVector opposite(const SignVector& s);
std::vector<int> zero_set(const SignVector& s);

std::string to_string(const SignVector& s);  // e.g. "+-0"
SignVector parse_signs(const std::string& text);  // accepts "+-0" and "+,-,0"

}  // namespace toricmin

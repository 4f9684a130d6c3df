#include "toricmin/signs.hpp"

#include <cctype>

#include "toricmin/exact.hpp"

namespace toricmin {

SignVector compose(const SignVector& f, const SignVector& g) {
  SignVector out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[i] != 0 ? f[i] : g[i];
  return out;
}

bool face_leq(const SignVector& f, const SignVector& g) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0 && f[i] != g[i]) return false;
  return true;
}

bool is_chamber(const SignVector& s) {
  for (auto x : s)
    if (x == 0) return false;
  return true;
}

std::vector<int> separation(const SignVector& c, const SignVector& d) {
  std::vector<int> out;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0 && c[i] == -d[i]) out.push_back(static_cast<int>(i));
  return out;
}

SignVector restrict(const SignVector& s, const std::vector<int>& positions) {
  SignVector out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(s[p]);
  return out;
}

SignVector opposite(const SignVector& s) {
  SignVector out(s.size());
  for (size_t i = 0; i < s.size(); ++i) out[i] = static_cast<std::int8_t>(-s[i]);
  return out;
}

std::vector<int> zero_set(const SignVector& s) {
  std::vector<int> out;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] == 0) out.push_back(static_cast<int>(i));
  return out;
}

std::string to_string(const SignVector& s) {
  std::string out;
  for (auto x : s) out += x > 0 ? '+' : x < 0 ? '-' : '0';
  return out;
}

SignVector parse_signs(const std::string& text) {
  SignVector out;
  for (char ch : text) {
    if (ch == '+') out.push_back(1);
    else if (ch == '-') out.push_back(-1);
    else if (ch == '0') out.push_back(0);
    else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    else throw InputError(std::string("bad sign character '") + ch + "'");
  }
  return out;
}

}  // namespace toricmin

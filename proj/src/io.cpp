#include "toricmin/io.hpp"

#include <fstream>
#include <sstream>

namespace toricmin::io {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

bool is_integer_token(const std::string& t) {
  size_t i = (t.size() > 1 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

Integer parse_integer(const std::string& t, int line) {
  if (!is_integer_token(t)) fail(line, "expected an integer, got '" + t + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

Rational parse_rational(const std::string& t, int line) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, line));
  Integer p = parse_integer(t.substr(0, slash), line);
  std::string qs = t.substr(slash + 1);
  if (!qs.empty() && (qs[0] == '-' || qs[0] == '+')) fail(line, "denominator must be unsigned");
  Integer q = parse_integer(qs, line);
  if (q == 0) fail(line, "zero denominator");
  return Rational(p, q);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::toric: return "toric";
    case Kind::affine: return "affine";
    case Kind::central: return "central";
  }
  return "";
}

InputSpec parse(std::istream& in) {
  InputSpec spec;
  bool header = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // '@' and '=' may touch their neighbours.
    std::string spaced;
    for (char c : line) {
      if (c == '@' || c == '=') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    auto tok = tokens(spaced);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2) fail(line_no, "expected 'toric <d>', 'affine <d>' or 'central <d>'");
      if (tok[0] == "toric") spec.kind = Kind::toric;
      else if (tok[0] == "affine") spec.kind = Kind::affine;
      else if (tok[0] == "central") spec.kind = Kind::central;
      else fail(line_no, "unknown arrangement kind '" + tok[0] + "'");
      Integer d = parse_integer(tok[1], line_no);
      if (d < 0 || d > 64) fail(line_no, "dimension out of range");
      spec.dim = static_cast<int>(d);
      header = true;
      continue;
    }
    const int d = spec.dim;
    const std::string sep = spec.kind == Kind::toric ? "@" : "=";
    const std::string wrong = spec.kind == Kind::toric ? "=" : "@";
    if (static_cast<int>(tok.size()) != d + 2 || tok[d] != sep) {
      for (const auto& t : tok)
        if (t == wrong)
          fail(line_no, "'" + wrong + "' does not belong in a " + kind_name(spec.kind) + " file");
      fail(line_no, "expected " + std::to_string(d) + " integers, '" + sep + "' and a rational");
    }
    IntVector v(d);
    for (int i = 0; i < d; ++i) v(i) = parse_integer(tok[i], line_no);
    if (content(v) == 0) fail(line_no, spec.kind == Kind::toric ? "zero character" : "zero normal vector");
    Rational c = parse_rational(tok[d + 1], line_no);
    if (spec.kind == Kind::toric && (c < 0 || c >= 1)) fail(line_no, "level must lie in [0,1)");
    if (spec.kind == Kind::central && c != 0) fail(line_no, "central hyperplanes need constant 0");
    spec.vectors.push_back(v);
    spec.constants.push_back(c);
  }
  if (!header) throw InputError("line " + std::to_string(line_no) + ": missing header");
  return spec;
}

InputSpec parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

InputSpec parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse(in);
}

std::string serialize(const InputSpec& s) {
  std::ostringstream out;
  out << kind_name(s.kind) << " " << s.dim << "\n";
  const char* sep = s.kind == Kind::toric ? " @ " : " = ";
  for (size_t i = 0; i < s.vectors.size(); ++i) {
    for (Eigen::Index j = 0; j < s.vectors[i].size(); ++j) out << (j ? " " : "") << s.vectors[i](j);
    out << sep << to_string(s.constants[i]) << "\n";
  }
  return out.str();
}

bool operator==(const InputSpec& a, const InputSpec& b) {
  return a.kind == b.kind && a.dim == b.dim && a.vectors == b.vectors && a.constants == b.constants;
}

toric::ToricArrangement to_toric(const InputSpec& s) {
  if (s.kind != Kind::toric) throw InputError("not a toric arrangement");
  std::vector<toric::Item> items;
  for (size_t i = 0; i < s.vectors.size(); ++i) items.push_back({s.vectors[i], s.constants[i]});
  return toric::ToricArrangement(s.dim, items);
}

hyper::Arrangement to_hyperplanes(const InputSpec& s, std::vector<std::string>* warnings) {
  if (s.kind == Kind::toric) throw InputError("not a hyperplane arrangement");
  std::vector<hyper::Hyperplane> hs;
  for (size_t i = 0; i < s.vectors.size(); ++i) hs.push_back({to_rational(s.vectors[i]), s.constants[i]});
  int removed = hyper::remove_duplicates(hs);
  if (warnings)
    for (int i = 0; i < removed; ++i) warnings->push_back("merged a repeated hyperplane");
  return hyper::Arrangement(s.dim, hs);
}

}  // namespace toricmin::io

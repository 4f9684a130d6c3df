#pragma once

// Brute-force reference computations. They share only the number types with
// the library: ranks, minors and solvability are recomputed here by subset
// enumeration and plain Gaussian elimination.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "toricmin/exact.hpp"

namespace oracle {

using toricmin::Integer;
using toricmin::Rational;
using Rows = std::vector<std::vector<long>>;

inline int rank_of(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Rational>> pick(const Rows& a, const std::vector<int>& s,
                                               const std::vector<Rational>* b = nullptr) {
  std::vector<std::vector<Rational>> m;
  for (int i : s) {
    std::vector<Rational> row(a[i].begin(), a[i].end());
    if (b) row.push_back((*b)[i]);
    m.push_back(row);
  }
  return m;
}

template <typename F>
void each_subset(int n, F f) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    f(s);
  }
}

inline std::vector<int> trimmed(const std::vector<Integer>& p) {
  std::vector<int> out;
  for (const auto& c : p) out.push_back(static_cast<int>(c));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Whitney: pi(t) = sum over subsets S with nonempty intersection of
// (-1)^|S| (-t)^rank S. Works for affine and central arrangements.
inline std::vector<int> whitney_poincare(int d, const Rows& a, const std::vector<Rational>& b) {
  std::vector<Integer> p(d + 1, 0);
  each_subset(static_cast<int>(a.size()), [&](const std::vector<int>& s) {
    int r = rank_of(pick(a, s));
    if (rank_of(pick(a, s, &b)) != r) return;
    p[r] += ((s.size() + r) % 2 ? -1 : 1);
  });
  return trimmed(p);
}

inline int whitney_chambers(int d, const Rows& a, const std::vector<Rational>& b) {
  auto p = whitney_poincare(d, a, b);
  return std::accumulate(p.begin(), p.end(), 0);
}

inline Integer det(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return boost::multiprecision::numerator(d);
}

// gcd of the r x r minors of the rows s of a, r their rank.
inline Integer minor_gcd(const Rows& a, const std::vector<int>& s, int r) {
  if (r == 0) return 1;
  const int d = static_cast<int>(a[0].size());
  Integer g = 0;
  each_subset(static_cast<int>(s.size()), [&](const std::vector<int>& rows) {
    if (static_cast<int>(rows.size()) != r) return;
    each_subset(d, [&](const std::vector<int>& cols) {
      if (static_cast<int>(cols.size()) != r) return;
      std::vector<std::vector<Rational>> m;
      for (int i : rows) {
        std::vector<Rational> row;
        for (int j : cols) row.push_back(a[s[i]][j]);
        m.push_back(row);
      }
      g = boost::multiprecision::gcd(g, abs(det(m)));
    });
  });
  return g;
}

// Is {x in R^d : <a_i, x> = b_i mod 1, i in s} nonempty? With x reduced to
// [0,1)^d, the integer shifts z_i = <a_i, x> - b_i are bounded by the row's
// l1 norm plus one, so a finite search over z decides it.
inline bool torus_solvable(const Rows& a, const std::vector<Rational>& b, const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  if (k == 0) return true;
  std::vector<long> bound;
  for (int i : s) {
    long l1 = 1;
    for (long x : a[i]) l1 += std::labs(x);
    bound.push_back(l1);
  }
  const int r = rank_of(pick(a, s));
  std::vector<long> z(k);
  for (int i = 0; i < k; ++i) z[i] = -bound[i];
  while (true) {
    std::vector<Rational> shifted(a.size());
    for (int i = 0; i < k; ++i) shifted[s[i]] = b[s[i]] + z[i];
    if (rank_of(pick(a, s, &shifted)) == r) return true;
    int i = 0;
    while (i < k && z[i] == bound[i]) z[i] = -bound[i], ++i;
    if (i == k) return false;
    ++z[i];
  }
}

// Poincare polynomial of a complexified toric arrangement from its
// multiplicities: sum over S of (-1)^|S| m(S) (-t)^r (1+t)^(d-r), where m(S)
// counts the connected components of the intersection.
inline std::vector<int> toric_poincare(int d, const Rows& a, const std::vector<Rational>& b) {
  std::vector<Integer> p(d + 1, 0);
  each_subset(static_cast<int>(a.size()), [&](const std::vector<int>& s) {
    if (!torus_solvable(a, b, s)) return;
    const int r = rank_of(pick(a, s));
    Integer m = minor_gcd(a, s, r);
    // (1+t)^(d-r) t^r with sign (-1)^(|S|+r)
    Integer binom = 1;
    for (int j = 0; j <= d - r; ++j) {
      p[r + j] += ((s.size() + r) % 2 ? -1 : 1) * m * binom;
      binom = binom * (d - r - j) / (j + 1);
    }
  });
  return trimmed(p);
}

}  // namespace oracle

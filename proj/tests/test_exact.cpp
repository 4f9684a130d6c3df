#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricmin/exact.hpp"

using namespace toricmin;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (auto r : rows) {
    int j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVector ivec(std::initializer_list<long> xs) {
  IntVector v(xs.size());
  int i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

bool unimodular(const IntMatrix& m) {
  auto d = oracle::det([&] {
    std::vector<std::vector<Rational>> r(m.rows(), std::vector<Rational>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
    return r;
  }());
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("floor and fractional part") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(frac(Rational(-1, 2)) == Rational(1, 2));
  CHECK(floor(Rational(7, 3)) == 2);
  CHECK(is_integer(Rational(4, 2)));
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("rank, determinant, nullspace, solve") {
  RatMatrix m = to_rational(ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  RatMatrix n = nullspace(m);
  REQUIRE(n.cols() == 1);
  CHECK((m * n).isZero());
  RatMatrix a = to_rational(ints({{2, 1}, {1, 3}}));
  CHECK(determinant(a) == 5);
  RatVector b(2);
  b << Rational(1), Rational(2);
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  b << Rational(1), Rational(3);
  CHECK_FALSE(solve(to_rational(ints({{1, 1}, {2, 2}})), b));
}

TEST_CASE("smith normal form of a 2x2 matrix") {
  IntMatrix m = ints({{2, 4}, {6, 8}});
  auto s = snf(m);
  CHECK(s.D == ints({{2, 0}, {0, 4}}));
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.V * s.Vinv == IntMatrix::Identity(2, 2));
  CHECK(unimodular(s.U));
  CHECK(unimodular(s.V));
}

TEST_CASE("invariant factors multiply to the absolute determinant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    IntMatrix m(n, n);
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i][j] = Rational(m(i, j) = entry(rng));
    Integer product = 1;
    auto f = invariant_factors(m);
    for (const auto& x : f) product *= x;
    Integer d = abs(oracle::det(r));
    if (d == 0) {
      CHECK(static_cast<int>(f.size()) < n);
    } else {
      CHECK(product == d);
    }
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
    auto s = snf(m);
    CHECK(s.U * m * s.V == s.D);
  }
}

TEST_CASE("content and primitive part") {
  CHECK(content(ivec({4, -6})) == 2);
  CHECK(primitive_part(ivec({4, -6})) == ivec({2, -3}));
  CHECK(content(ivec({0, 0})) == 0);
  CHECK(primitive_part(ivec({0, 5})) == ivec({0, 1}));
}

TEST_CASE("hermite basis and reduction modulo a lattice") {
  IntMatrix h = hermite_basis(ints({{2, 2}, {0, 4}, {4, 0}}));
  CHECK(h == ints({{2, 2}, {0, 4}}));
  CHECK(lattice_rank(ints({{1, 2}, {2, 4}})) == 1);
  // (3, 5) = (2, 2) + (1, 3); (1, 3) = (1, -1) mod 4 in the second entry
  IntVector r = reduce_mod_lattice(ivec({3, 5}), h);
  CHECK(r == reduce_mod_lattice(ivec({1, 3}), h));
  CHECK(reduce_mod_lattice(ivec({2, 6}), h) == ivec({0, 0}));
}

TEST_CASE("saturation") {
  CHECK(saturation(ints({{2, 0}, {0, 2}})) == IntMatrix::Identity(2, 2));
  CHECK(saturation(ints({{2, 2}})) == ints({{1, 1}}));
  CHECK(saturation(ints({{2, 4, 6}, {1, 0, 1}})).rows() == 2);
}

TEST_CASE("unimodular completion keeps the given rows") {
  IntMatrix rows = ints({{2, 3, 0}});
  IntMatrix u = unimodular_completion(rows);
  CHECK(u.rows() == 3);
  CHECK(u.row(0) == rows.row(0));
  CHECK(unimodular(u));
}

TEST_CASE("adapted basis of a chain of lattices") {
  // <(1,1,0)> inside <(1,1,0),(0,2,1)>: saturated spans must appear as prefixes.
  std::vector<IntMatrix> chain{ints({{2, 2, 0}}), ints({{1, 1, 0}, {0, 2, 1}})};
  auto ab = adapted_basis(chain, 3);
  CHECK(ab.prefix_ranks == std::vector<int>{1, 2});
  CHECK(unimodular(ab.basis));
  RatMatrix first = to_rational(IntMatrix(ab.basis.topRows(1)));
  CHECK(in_row_span(first, to_rational(ivec({1, 1, 0}))));
  RatMatrix two = to_rational(IntMatrix(ab.basis.topRows(2)));
  CHECK(in_row_span(two, to_rational(ivec({0, 2, 1}))));
  CHECK(in_row_span(two, to_rational(ivec({1, 1, 0}))));

  CHECK_THROWS_AS(adapted_basis({ints({{1, 0, 0}}), ints({{0, 1, 0}})}, 3), InputError);
}

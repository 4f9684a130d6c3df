#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "toricmin/homology.hpp"
#include "toricmin/hyperplane.hpp"

using namespace toricmin;
using namespace toricmin::hyper;

namespace {

Arrangement make(int d, const oracle::Rows& normals, std::vector<Rational> offsets = {}) {
  offsets.resize(normals.size(), Rational(0));
  std::vector<Hyperplane> hs;
  for (size_t i = 0; i < normals.size(); ++i) {
    RatVector n(d);
    for (int j = 0; j < d; ++j) n(j) = Rational(normals[i][j]);
    hs.push_back({n, offsets[i]});
  }
  return Arrangement(d, hs);
}

std::vector<int> betti(const AcyclicCategory& c) {
  return homology::homology(homology::nerve_chain_complex(c), -1).betti;
}

SignVector sv(const std::string& s) { return parse_signs(s); }

}  // namespace

TEST_CASE("face enumeration") {
  CHECK(face_poset(make(2, {})).size() == 1);
  auto boolean = face_poset(make(2, {{1, 0}, {0, 1}}));
  CHECK(boolean.size() == 9);
  CHECK(boolean.f_vector() == std::vector<int>{1, 4, 4});
  auto three = face_poset(make(2, {{1, 0}, {1, -1}, {1, 1}}));
  CHECK(three.size() == 13);
  CHECK(three.f_vector() == std::vector<int>{1, 6, 6});
  CHECK(face_poset(make(1, {{1}})).chambers().size() == 2);
}

TEST_CASE("every face carries a witness with its own sign vector") {
  auto a = make(2, {{1, 0}, {0, 1}, {1, 1}, {1, -2}}, {0, 0, Rational(1), Rational(1, 2)});
  auto f = face_poset(a);
  for (const auto& face : f.faces()) CHECK(a.signs_at(face.witness) == face.signs);
  // Euler characteristic of the plane from bounded and unbounded faces
  int euler = 0;
  auto fv = f.f_vector();
  for (size_t k = 0; k < fv.size(); ++k) euler += (k % 2 ? -1 : 1) * fv[k];
  CHECK(euler == 1);
}

TEST_CASE("face order: a vertex lies below the rays and chambers around it") {
  auto f = face_poset(make(2, {{1, 0}, {0, 1}}));
  int p = f.find(sv("00"));
  int ray = f.find(sv("+0"));
  int ch = f.find(sv("+-"));
  CHECK(f.leq(p, ray));
  CHECK(f.leq(ray, ch));
  CHECK_FALSE(f.leq(ch, ray));
  CHECK(face_leq(sv("+0"), sv("+-")));
  CHECK_FALSE(face_leq(sv("+0"), sv("--")));
}

TEST_CASE("sign vector operations") {
  CHECK(compose(sv("+0"), sv("--")) == sv("+-"));
  CHECK(compose(sv("00"), sv("-+")) == sv("-+"));
  CHECK(separation(sv("+-+"), sv("+-+")).empty());
  CHECK(separation(sv("---"), sv("+++")) == std::vector<int>{0, 1, 2});
  CHECK(opposite(sv("+0-")) == sv("-0+"));
  CHECK(zero_set(sv("+0-0")) == std::vector<int>{1, 3});
  CHECK(to_string(parse_signs("+,-,0")) == "+-0");
}

TEST_CASE("intersection poset") {
  auto boolean = intersection_poset(face_poset(make(2, {{1, 0}, {0, 1}})));
  CHECK(boolean.size() == 4);
  auto figure = intersection_poset(face_poset(make(2, {{1, 0}, {3, -4}, {3, 4}})));
  REQUIRE(figure.size() == 5);
  CHECK(figure.front().hyperplanes.empty());
  CHECK(figure.back().hyperplanes == std::vector<int>{0, 1, 2});
  auto generic = intersection_poset(face_poset(make(2, {{1, 0}, {0, 1}}, {Rational(1), Rational(2)})));
  CHECK(generic.size() == 4);
}

TEST_CASE("nbc sets") {
  RatMatrix one(1, 2);
  one << Rational(1), Rational(0);
  CHECK(nbc_sets(one) == std::vector<std::vector<int>>{{}, {0}});
  RatMatrix three(3, 2);
  three << Rational(1), Rational(0), Rational(1), Rational(-1), Rational(1), Rational(1);
  auto sets = nbc_sets(three);
  std::set<std::vector<int>> got(sets.begin(), sets.end());
  CHECK(got == std::set<std::vector<int>>{{}, {0}, {1}, {2}, {0, 1}, {0, 2}});
  CHECK(nbc_counts(three) == std::vector<int>{1, 3, 2});
  RatMatrix boolean(2, 2);
  boolean << Rational(1), Rational(0), Rational(0), Rational(1);
  CHECK(nbc_sets(boolean).size() == 4);
}

TEST_CASE("Zaslavsky and Whitney on random central arrangements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const int n = 2 + trial % 4;
    oracle::Rows rows;
    while (static_cast<int>(rows.size()) < n) {
      std::vector<long> r(d);
      bool zero = true;
      for (auto& x : r) zero = (x = entry(rng)) == 0 && zero;
      if (!zero) rows.push_back(r);
    }
    auto a = make(d, rows);
    RatMatrix normals = a.normals();
    auto counts = nbc_counts(normals);
    auto chambers = face_poset(a).chambers().size();
    std::vector<Rational> zeros(rows.size(), Rational(0));
    CHECK(static_cast<int>(chambers) == oracle::whitney_chambers(d, rows, zeros));
    auto w = oracle::whitney_poincare(d, rows, zeros);
    CHECK(counts == w);
  }
}

TEST_CASE("region order") {
  auto f = face_poset(make(1, {{1}}));
  auto line = region_order(chambers(f), sv("+"));
  CHECK(line.chambers == std::vector<SignVector>{sv("+"), sv("-")});

  auto b = region_order(chambers(face_poset(make(2, {{1, 0}, {0, 1}}))), sv("++"));
  CHECK(b.chambers == std::vector<SignVector>{sv("++"), sv("-+"), sv("+-"), sv("--")});
  CHECK(b.pos(sv("--")) == 3);

  auto three = face_poset(make(2, {{1, 0}, {1, -1}, {1, 1}}));
  auto ch = chambers(three);
  auto base = default_base(ch);
  auto o = region_order(ch, base);
  CHECK(o.chambers.front() == base);
  CHECK(o.chambers.back() == opposite(base));
  CHECK_THROWS(region_order(ch, sv("000")));
}

TEST_CASE("mu sections") {
  auto ch = chambers(face_poset(make(2, {{1, 0}, {1, -1}, {1, 1}})));
  auto o = region_order(ch, default_base(ch));
  const SignVector& b = o.base();
  // mu of the chamber of A1 containing B is B itself
  CHECK(mu(o, {0}, restrict(b, {0})) == b);
  CHECK(mu(o, {0, 1, 2}, o.chambers[3]) == o.chambers[3]);
  // across H1: the least chamber on the other side
  SignVector across = restrict(opposite(b), {0});
  SignVector m = mu(o, {0}, across);
  for (const auto& c : o.chambers) {
    if (restrict(c, {0}) == across) {
      CHECK(c == m);
      break;
    }
  }
}

TEST_CASE("X_C on the stratification example") {
  // H1: x = 0, H2: 3x - 4y = 0, H3: 3x + 4y = 0; chambers B, C1, ..., C5 in the
  // order of their indices, B on the left, C1..C4 above and below, C5 on the right.
  RatMatrix n(3, 2);
  n << Rational(1), Rational(0), Rational(3), Rational(-4), Rational(3), Rational(4);
  std::vector<SignVector> order{sv("---"), sv("--+"), sv("+-+"), sv("-+-"), sv("++-"), sv("+++")};
  OrderedCentral a(n, order.front(), order);
  const auto& s = a.sub({0, 1, 2});
  std::vector<std::vector<int>> expected{{}, {2}, {0}, {1}, {0, 1, 2}, {0, 1, 2}};
  REQUIRE(s.chambers.size() == 6);
  for (int p = 0; p < 6; ++p) {
    CHECK(s.chambers[p] == order[p]);
    CHECK(s.flats[s.x_flat[p]] == expected[p]);
  }
  // an order that is not a linear extension is rejected
  std::vector<SignVector> bad{sv("---"), sv("+++"), sv("--+"), sv("+-+"), sv("-+-"), sv("++-")};
  CHECK_THROWS(OrderedCentral(n, bad.front(), bad));
}

TEST_CASE("X_C can fail for a bad base chamber") {
  RatMatrix n(4, 3);
  n << 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1;
  std::vector<std::vector<int>> all{{0, 1, 2, 3}};
  CHECK_THROWS_AS(ordered_central(n, sv("++++"), all), InputError);
  auto ok = ordered_central(n, std::nullopt, all);
  CHECK(ok.order().base() != sv("++++"));
}

TEST_CASE("Salvetti poset") {
  // Boolean arrangement: 1 x 4 + 4 x 2 + 4 x 1 cells
  auto f = face_poset(make(2, {{1, 0}, {0, 1}}));
  auto s = salvetti_poset(f);
  CHECK(s.cells.size() == 16);
  CHECK(betti(s.category) == std::vector<int>{1, 2, 1});
  auto line = salvetti_poset(face_poset(make(1, {{1}})));
  CHECK(line.cells.size() == 4);
  CHECK(betti(line.category) == std::vector<int>{1, 1});
  // top cells are pairs (P, C): one per chamber
  auto three = face_poset(make(2, {{1, 0}, {1, -1}, {1, 1}}));
  auto st = salvetti_poset(three);
  int top = 0;
  for (int c = 0; c < st.category.object_count(); ++c) top += st.category.rank(c) == 2;
  CHECK(top == 6);
  CHECK(betti(st.category) == std::vector<int>{1, 3, 2});
}

TEST_CASE("central strata partition the Salvetti poset") {
  auto f = face_poset(make(2, {{1, 0}, {3, -4}, {3, 4}}));
  auto s = salvetti_poset(f);
  auto ch = chambers(f);
  auto o = region_order(ch, default_base(ch));
  auto strata = strata_central(f, s, o);
  CHECK(strata.size() == 6);
  std::vector<int> seen(s.cells.size(), 0);
  for (const auto& st : strata)
    for (int c : st.cells) ++seen[c];
  CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
  // sizes are the face counts of the restrictions A^{X_C}
  std::vector<size_t> sizes;
  for (const auto& st : strata) sizes.push_back(st.cells.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 1, 3, 3, 3, 13});
}

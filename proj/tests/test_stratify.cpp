#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "toricmin/homology.hpp"
#include "toricmin/stratify.hpp"

using namespace toricmin;

namespace {

IntVector chi(std::initializer_list<long> xs) {
  IntVector v(xs.size());
  int i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

homology::Homology nerve(const AcyclicCategory& c) {
  return homology::homology(homology::nerve_chain_complex(c), -1);
}

struct ToricRun {
  toric::FaceCategory f;
  strat::FaceModel m;
  hyper::OrderedCentral a0;
  strat::SalvettiCategory sal;
  strat::Stratification st;
  strat::SalvettiMatching sm;

  explicit ToricRun(const toric::ToricArrangement& a)
      : f(a),
        m(strat::face_model(f)),
        a0(strat::ordered_a0(m)),
        sal(strat::salvetti_category(m, a0)),
        st(strat::stratify(m, a0, sal)),
        sm(strat::salvetti_matching(m, sal, st, strat::toric_matcher(f))) {}
};

struct AffineRun {
  hyper::Arrangement a;
  hyper::FacePoset faces;
  strat::FaceModel m;
  hyper::OrderedCentral a0;
  strat::SalvettiCategory sal;
  strat::Stratification st;
  strat::SalvettiMatching sm;

  AffineRun(int d, const oracle::Rows& rows, const std::vector<Rational>& b)
      : a(make(d, rows, b)),
        faces(hyper::face_poset(a)),
        m(strat::face_model(a, faces)),
        a0(strat::ordered_a0(m)),
        sal(strat::salvetti_category(m, a0)),
        st(strat::stratify(m, a0, sal)),
        sm(strat::salvetti_matching(m, sal, st, strat::affine_matcher())) {}

  static hyper::Arrangement make(int d, const oracle::Rows& rows, const std::vector<Rational>& b) {
    std::vector<hyper::Hyperplane> hs;
    for (size_t i = 0; i < rows.size(); ++i) {
      RatVector n(d);
      for (int j = 0; j < d; ++j) n(j) = Rational(rows[i][j]);
      hs.push_back({n, b[i]});
    }
    return hyper::Arrangement(d, hs);
  }
};

void check_affine(int d, const oracle::Rows& rows, const std::vector<Rational>& b) {
  AffineRun r(d, rows, b);
  auto expected = oracle::whitney_poincare(d, rows, b);
  auto census = r.sm.report.census;
  census.resize(expected.size(), 0);
  CHECK(r.sm.report.valid);
  CHECK(census == expected);
  auto h = nerve(r.sal.category);
  h.betti.resize(expected.size(), 0);
  CHECK(h.betti == expected);
  CHECK(h.torsion_free());
  auto colimit = strat::verify_colimit(r.m, r.a0, r.sal);
  CHECK(colimit.sal_objects == r.sal.category.object_count());
  CHECK(strat::verify_local_orders(r.m, r.a0, r.st) > 0);
}

}  // namespace

TEST_CASE("running example: Salvetti category and strata") {
  ToricRun r(toric::ToricArrangement(2, {{chi({1, 0}), 0}, {chi({1, -1}), 0}, {chi({1, 1}), 0}}));
  // objects: 6 + 4 at the vertices, 2 per edge, 1 per region
  CHECK(r.sal.category.object_count() == 23);
  auto h = nerve(r.sal.category);
  CHECK(h.betti == std::vector<int>{1, 5, 7});
  CHECK(h.torsion_free());

  CHECK(r.st.y_counts == std::vector<int>{3, 3, 1});
  std::vector<size_t> sizes;
  for (const auto& s : r.st.strata) sizes.push_back(s.objects.size());
  std::sort(sizes.rbegin(), sizes.rend());
  CHECK(sizes == std::vector<size_t>{10, 4, 4, 2, 1, 1, 1});

  // strata partition the objects, and each is isomorphic to the faces inside its layer
  std::vector<int> seen(r.sal.category.object_count(), 0);
  for (const auto& s : r.st.strata) {
    for (int x : s.objects) ++seen[x];
    CHECK(s.objects.size() == s.faces.objects.size());
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
}

TEST_CASE("running example: matching census") {
  ToricRun r(toric::ToricArrangement(2, {{chi({1, 0}), 0}, {chi({1, -1}), 0}, {chi({1, 1}), 0}}));
  CHECK(r.sm.report.valid);
  CHECK(r.sm.report.cycle_free);
  CHECK(r.sm.report.extension_found);
  CHECK(r.sm.report.census == std::vector<int>{1, 5, 7});
  CHECK(r.sm.report.critical.size() == 13);
  auto rep = strat::verify_colimit(r.m, r.a0, r.sal);
  CHECK(rep.face_objects == 10);
  CHECK(rep.face_morphisms == 40);
  CHECK(rep.sal_objects == 23);
  CHECK(rep.sal_morphisms == 147);
  CHECK(strat::verify_local_orders(r.m, r.a0, r.st) > 0);
}

TEST_CASE("d = 1 toric family: Betti and census (1, n + 1)") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<toric::Item> items;
    for (int k = 0; k < n; ++k) items.push_back({chi({1}), Rational(k, n)});
    ToricRun r(toric::ToricArrangement(1, items));
    CHECK(r.sal.category.object_count() == 3 * n);
    CHECK(nerve(r.sal.category).betti == std::vector<int>{1, n + 1});
    CHECK(r.sm.report.census == std::vector<int>{1, n + 1});
  }
}

TEST_CASE("toric census matches the multiplicity formula") {
  oracle::Rows rows{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  std::vector<Rational> b{0, 0, Rational(1, 2), 0};
  std::vector<toric::Item> items;
  for (size_t i = 0; i < rows.size(); ++i) items.push_back({chi({rows[i][0], rows[i][1]}), b[i]});
  ToricRun r(toric::ToricArrangement(2, items));
  auto expected = oracle::toric_poincare(2, rows, b);
  CHECK(expected == std::vector<int>{1, 6, 10});
  CHECK(r.sm.report.census == expected);
  CHECK(nerve(r.sal.category).betti == expected);
}

TEST_CASE("affine arrangements: census equals Betti equals Whitney") {
  check_affine(2, {{1, 0}, {0, 1}}, {1, 2});                        // two generic lines
  check_affine(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 0});             // three concurrent lines
  check_affine(2, {{1, 0}, {0, 1}}, {0, 0});                        // Boolean
  check_affine(1, {{1}}, {0});
  check_affine(2, {{1, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 1, 0, Rational(1, 2)});
  check_affine(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {0, 0, 0, 0});
  check_affine(2, {{1, 0}, {3, -4}, {3, 4}}, {0, 0, 0});
}

TEST_CASE("affine census values") {
  AffineRun generic(2, {{1, 0}, {0, 1}}, {1, 2});
  CHECK(generic.sm.report.census == std::vector<int>{1, 2, 1});
  AffineRun concurrent(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 0});
  CHECK(concurrent.sm.report.census == std::vector<int>{1, 3, 2});
  // y counts by dimension: three lines and the origin, plus the plane
  CHECK(concurrent.st.y_counts == std::vector<int>{2, 3, 1});
}

TEST_CASE("an explicit base chamber is checked") {
  hyper::Arrangement a = AffineRun::make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {0, 0, 0, 0});
  auto faces = hyper::face_poset(a);
  auto m = strat::face_model(a, faces);
  CHECK_THROWS_AS(strat::ordered_a0(m, parse_signs("++++")), InputError);
  auto good = strat::ordered_a0(m);
  auto again = strat::ordered_a0(m, good.order().base());
  CHECK(again.order().chambers == good.order().chambers);
}

TEST_CASE("Poincare polynomial of an affine arrangement from its flats") {
  auto a = AffineRun::make(2, {{1, 0}, {1, 0}, {0, 1}}, {0, 1, 0});
  auto p = strat::poincare_hyperplane(a, hyper::face_poset(a));
  CHECK(p.to_ints() == oracle::whitney_poincare(2, {{1, 0}, {1, 0}, {0, 1}}, {0, 1, 0}));
  CHECK(p.to_ints() == std::vector<int>{1, 3, 2});
}

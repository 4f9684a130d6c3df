#include "toricmin/stratify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>

namespace toricmin::strat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> map_positions(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out;
  for (int i : inner) {
    auto it = std::lower_bound(outer.begin(), outer.end(), i);
    if (it == outer.end() || *it != i) throw VerificationError("local arrangement is not nested");
    out.push_back(static_cast<int>(it - outer.begin()));
  }
  return out;
}

std::vector<int> pick(const std::vector<int>& items, const std::vector<int>& positions) {
  std::vector<int> out;
  for (int p : positions) out.push_back(items[p]);
  return out;
}

}  // namespace

std::vector<int> FaceModel::positions(int m) const {
  return map_positions(local[faces.source(m)], local[faces.target(m)]);
}

SignVector FaceModel::push(int m, const SignVector& s) const {
  SignVector out = face_sign[m];
  auto pos = positions(m);
  for (size_t p = 0; p < pos.size(); ++p) out[pos[p]] = s[p];
  return out;
}

FaceModel face_model(const toric::FaceCategory& f) {
  FaceModel m;
  m.dim = f.dim();
  m.normals = f.arrangement().normals();
  m.faces = f.category();
  for (const auto& c : f.cells()) {
    m.cell_dim.push_back(c.dim);
    m.local.push_back(c.local);
  }
  for (int i = 0; i < m.faces.morphism_count(); ++i) m.face_sign.push_back(f.local_sign(f.morphism_of(i)));
  for (const auto& y : f.layers()) {
    m.layer_items.push_back(y.items);
    m.layer_dim.push_back(y.dim);
  }
  m.layer_through = [&f](int cell, const std::vector<int>& items) { return f.layer_through(cell, items); };
  m.layer_contains = [&f](int layer, int cell) { return f.contains(layer, cell); };
  return m;
}

FaceModel face_model(const hyper::Arrangement& a, const hyper::FacePoset& faces) {
  FaceModel m;
  m.dim = a.dim();
  m.normals = a.normals();
  std::vector<int> ranks;
  for (const auto& f : faces.faces()) {
    ranks.push_back(f.dim);
    m.cell_dim.push_back(f.dim);
    m.local.push_back(zero_set(f.signs));
  }
  m.faces = poset_category(ranks, [&](int x, int y) { return faces.leq(x, y); });
  for (int i = 0; i < m.faces.morphism_count(); ++i)
    m.face_sign.push_back(restrict(faces[m.faces.target(i)].signs, m.local[m.faces.source(i)]));
  auto flats = hyper::intersection_poset(faces);
  auto index = std::make_shared<std::map<std::vector<int>, int>>();
  for (int i = 0; i < static_cast<int>(flats.size()); ++i) {
    m.layer_items.push_back(flats[i].hyperplanes);
    m.layer_dim.push_back(flats[i].dim);
    (*index)[flats[i].hyperplanes] = i;
  }
  m.layer_through = [index](int, const std::vector<int>& items) {
    auto it = index->find(items);
    if (it == index->end()) throw VerificationError("items do not form a flat");
    return it->second;
  };
  auto items = m.layer_items;
  auto local = m.local;
  m.layer_contains = [items, local](int layer, int cell) {
    return std::includes(local[cell].begin(), local[cell].end(), items[layer].begin(),
                         items[layer].end());
  };
  return m;
}

hyper::OrderedCentral ordered_a0(const FaceModel& m, std::optional<SignVector> base) {
  std::set<std::vector<int>> subsets(m.local.begin(), m.local.end());
  subsets.insert(m.layer_items.begin(), m.layer_items.end());
  return hyper::ordered_central(m.normals, base, {subsets.begin(), subsets.end()});
}

SalvettiCategory salvetti_category(const FaceModel& m, const hyper::OrderedCentral& a0) {
  SalvettiCategory sal;
  const AcyclicCategory& fc = m.faces;
  sal.object_index.resize(m.cell_count());
  for (int f = 0; f < m.cell_count(); ++f) {
    const auto& sub = a0.sub(m.local[f]);
    for (int k = 0; k < static_cast<int>(sub.chambers.size()); ++k) {
      sal.object_index[f].push_back(static_cast<int>(sal.objects.size()));
      sal.objects.push_back({f, k});
      sal.category.add_object(m.dim - m.cell_dim[f]);
    }
  }
  // by_face[n][K2] -> Salvetti morphism
  std::vector<std::vector<int>> by_face(fc.morphism_count());
  for (int n = 0; n < fc.morphism_count(); ++n) {
    const int f2 = fc.source(n), f1 = fc.target(n);
    const auto& sub2 = a0.sub(m.local[f2]);
    const auto& sub1 = a0.sub(m.local[f1]);
    auto pos = m.positions(n);
    for (int k2 = 0; k2 < static_cast<int>(sub2.chambers.size()); ++k2) {
      SignVector k1 = restrict(compose(m.face_sign[n], sub2.chambers[k2]), pos);
      int k1i = sub1.chamber_index(k1);
      if (k1i < 0) throw VerificationError("Salvetti morphism without source chamber");
      by_face[n].push_back(static_cast<int>(sal.morphisms.size()));
      sal.morphisms.push_back({n, k2});
      sal.category.add_morphism(sal.object_index[f1][k1i], sal.object_index[f2][k2]);
    }
  }
  const AcyclicCategory& sc = sal.category;
  for (int a = 0; a < sc.morphism_count(); ++a)
    for (int b : sc.outgoing(sc.target(a))) {
      // a uses n: F2 -> F1, b uses n': F3 -> F2; the composite uses n o n'.
      int nn = fc.compose(sal.morphisms[b].first, sal.morphisms[a].first);
      sal.category.set_composite(a, b, by_face[nn][sal.morphisms[b].second]);
    }
  sal.category.finalize();
  return sal;
}

Stratification stratify(const FaceModel& m, const hyper::OrderedCentral& a0,
                        const SalvettiCategory& sal) {
  Stratification st;
  const int d = m.dim;
  st.y_counts.assign(d + 1, 0);
  for (int l = 0; l < static_cast<int>(m.layer_items.size()); ++l) {
    const auto& sub = a0.sub(m.layer_items[l]);
    std::vector<int> all(m.layer_items[l].size());
    std::iota(all.begin(), all.end(), 0);
    const int whole = sub.flat_index(all);
    for (int c = 0; c < static_cast<int>(sub.chambers.size()); ++c)
      if (sub.x_flat[c] == whole) {
        st.y.push_back({l, c, sub.mu[c]});
        ++st.y_counts[m.layer_dim[l]];
      }
  }
  std::stable_sort(st.y.begin(), st.y.end(), [](const YElement& a, const YElement& b) {
    return std::tie(a.mu, a.layer, a.chamber) < std::tie(b.mu, b.layer, b.chamber);
  });
  std::map<std::pair<int, int>, int> y_index;
  for (int i = 0; i < static_cast<int>(st.y.size()); ++i) y_index[{st.y[i].layer, st.y[i].chamber}] = i;

  // theta(F, K) = (X(F, K), K restricted to A[X]).
  const AcyclicCategory& sc = sal.category;
  const int n = sc.object_count();
  st.theta.resize(n);
  std::vector<std::vector<int>> preimage(st.y.size());
  for (int x = 0; x < n; ++x) {
    auto [f, k] = sal.objects[x];
    const auto& sub = a0.sub(m.local[f]);
    const auto& flat = sub.flats[sub.x_flat[k]];
    std::vector<int> items = pick(m.local[f], flat);
    int layer = m.layer_through(f, items);
    if (m.layer_items[layer] != items) throw VerificationError("theta: layer items mismatch");
    int c = a0.sub(items).chamber_index(restrict(sub.chambers[k], flat));
    auto it = y_index.find({layer, c});
    if (it == y_index.end()) throw VerificationError("theta leaves the set Y");
    st.theta[x] = it->second;
    preimage[it->second].push_back(x);
  }

  // S_y is the down-closure of theta^{-1}(y); N_y removes earlier strata.
  st.stratum_of.assign(n, -1);
  for (int yi = 0; yi < static_cast<int>(st.y.size()); ++yi) {
    std::vector<bool> in_s(n, false);
    for (int x : preimage[yi]) in_s[x] = true;
    std::vector<int> stack = preimage[yi];
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : sc.incoming(x)) {
        int s = sc.source(e);
        if (!in_s[s]) {
          in_s[s] = true;
          stack.push_back(s);
        }
      }
    }
    Stratum s;
    s.y = st.y[yi];
    for (int x = 0; x < n; ++x)
      if (in_s[x] && st.stratum_of[x] < 0) {
        st.stratum_of[x] = yi;
        s.objects.push_back(x);
      }
    st.strata.push_back(std::move(s));
  }
  for (int x = 0; x < n; ++x)
    if (st.stratum_of[x] < 0) throw VerificationError("strata do not cover the Salvetti category");

  // N_y = F(A^Y)^op through (F, K) -> F.
  for (auto& s : st.strata) {
    const int layer = s.y.layer;
    std::vector<int> cells;
    for (int f = 0; f < m.cell_count(); ++f)
      if (m.layer_contains(layer, f)) cells.push_back(f);
    s.faces = full_subcategory(m.faces, cells);
    if (s.objects.size() != cells.size())
      throw VerificationError("stratum size differs from the face count of its layer");
    std::vector<int> seen(cells.size(), 0);
    for (int x : s.objects) {
      int f = sal.objects[x].first;
      int p = s.faces.object_index[f];
      if (p < 0) throw VerificationError("stratum object over a face outside its layer");
      if (sc.rank(x) != d - m.cell_dim[f]) throw VerificationError("stratum rank mismatch");
      ++seen[p];
      s.face_of.push_back(p);
    }
    for (int c : seen)
      if (c != 1) throw VerificationError("stratum is not in bijection with the faces of its layer");
    std::map<int, int> where;
    for (size_t i = 0; i < s.objects.size(); ++i) where[s.objects[i]] = static_cast<int>(i);
    for (size_t i = 0; i < s.objects.size(); ++i) {
      std::map<int, std::set<int>> into;  // target position -> face morphisms
      for (int e : sc.outgoing(s.objects[i])) {
        auto it = where.find(sc.target(e));
        if (it == where.end()) continue;
        if (!into[it->second].insert(sal.morphisms[e].first).second)
          throw VerificationError("stratum map is not injective on morphisms");
      }
      const int fi = sal.objects[s.objects[i]].first;
      for (size_t j = 0; j < s.objects.size(); ++j) {
        if (i == j) continue;
        const int fj = sal.objects[s.objects[j]].first;
        auto direct = m.faces.between(fj, fi);
        std::set<int> expect(direct.begin(), direct.end());
        if (into[static_cast<int>(j)] != expect)
          throw VerificationError("stratum is not isomorphic to the opposite face category");
      }
    }
  }
  return st;
}

morse::TorusMatching layer_torus_matching(const toric::FaceCategory& f, int layer,
                                          const Subcategory& faces, const morse::SearchOptions& opts) {
  const auto& y = f.layers()[layer];
  const int k = y.dim;
  const RatMatrix normals = f.arrangement().normals();
  auto rank_of = [&](const std::vector<int>& r) {
    if (r.empty()) return 0;
    RatMatrix mm(static_cast<Eigen::Index>(r.size()), normals.cols());
    for (size_t i = 0; i < r.size(); ++i) mm.row(i) = normals.row(r[i]);
    return rank(mm);
  };
  const int base_rank = rank_of(y.items);
  std::vector<int> binom(k + 1, 1);
  for (int r = 1; r <= k; ++r) binom[r] = binom[r - 1] * (k - r + 1) / r;

  // Fibration over the Boolean poset: k items cutting Y transversally at a
  // vertex P whose walls meet in P alone. Each wall is the layer through P
  // cut out by Y's items and one chosen item.
  bool has_vertex = false;
  for (int vertex : faces.objects) {
    if (f.cells()[vertex].dim != 0) continue;
    has_vertex = true;
    const auto& at_p = f.cells()[vertex].local;
    std::vector<int> candidates;
    for (int i : at_p)
      if (!std::binary_search(y.items.begin(), y.items.end(), i)) candidates.push_back(i);
    std::vector<int> chosen;
    std::function<std::optional<morse::TorusMatching>(size_t)> pick = [&](size_t from) -> std::optional<morse::TorusMatching> {
      if (static_cast<int>(chosen.size()) == k) {
        std::vector<int> walls;
        for (int i : chosen) {
          std::vector<int> gens = y.items;
          gens.push_back(i);
          const int r = rank_of(gens);
          std::vector<int> closed;
          for (int it : at_p) {
            std::vector<int> test = gens;
            test.push_back(it);
            if (rank_of(test) == r) closed.push_back(it);
          }
          walls.push_back(f.layer_through(vertex, closed));
        }
        std::vector<std::vector<int>> labels(faces.objects.size());
        int full = 0;
        for (size_t x = 0; x < faces.objects.size(); ++x) {
          for (int j = 0; j < k; ++j)
            if (f.contains(walls[j], faces.objects[x])) labels[x].push_back(j);
          full += static_cast<int>(labels[x].size()) == k;
        }
        if (full != 1) return std::nullopt;
        try {
          return morse::torus_matching(faces.category, labels, k, opts);
        } catch (const morse::NoMatching&) {
          return std::nullopt;
        }
      }
      for (size_t c = from; c < candidates.size(); ++c) {
        std::vector<int> rows = y.items;
        rows.insert(rows.end(), chosen.begin(), chosen.end());
        rows.push_back(candidates[c]);
        if (rank_of(rows) != base_rank + static_cast<int>(chosen.size()) + 1) continue;
        chosen.push_back(candidates[c]);
        if (auto found = pick(c + 1)) return found;
        chosen.pop_back();
      }
      return std::nullopt;
    };
    if (auto found = pick(0)) return *found;
  }
  if (!has_vertex) throw InputError("layer without vertices; the decomposition is not regular");

  // No sound fibration: search the face category directly.
  morse::TorusMatching out;
  out.matching = morse::census_matching(faces.category, binom, opts);
  out.report = morse::validate_matching(faces.category, out.matching);
  return out;
}

morse::TorusMatching face_torus_matching(const toric::FaceCategory& f, const morse::SearchOptions& opts) {
  std::vector<int> all(f.cells().size());
  std::iota(all.begin(), all.end(), 0);
  const int torus = static_cast<int>(f.layers().size()) - 1;
  return layer_torus_matching(f, torus, full_subcategory(f.category(), all), opts);
}

StratumMatcher toric_matcher(const toric::FaceCategory& f, const morse::SearchOptions& opts) {
  return [&f, opts](const FaceModel&, const Stratum& s) {
    return layer_torus_matching(f, s.y.layer, s.faces, opts).matching;
  };
}

StratumMatcher affine_matcher(const morse::SearchOptions& opts) {
  return [opts](const FaceModel&, const Stratum& s) {
    return morse::one_critical_matching(s.faces.category, opts);
  };
}

SalvettiMatching salvetti_matching(const FaceModel& m, const SalvettiCategory& sal,
                                   Stratification& strata, const StratumMatcher& matcher) {
  const AcyclicCategory& sc = sal.category;
  std::vector<std::vector<int>> fibers;
  for (auto& s : strata.strata) {
    std::vector<int> local = matcher(m, s);
    // A face morphism n: F -> G inside Y is the Salvetti morphism over G's
    // object in N_y ending at F's object.
    std::map<int, int> obj_of_face;
    for (size_t i = 0; i < s.objects.size(); ++i) obj_of_face[s.faces.objects[s.face_of[i]]] = s.objects[i];
    std::vector<int> lifted;
    for (int e : local) {
      int n = s.faces.morphisms[e];
      int target = obj_of_face.at(m.faces.source(n));
      int found = -1;
      for (int g : sc.incoming(target))
        if (sal.morphisms[g].first == n && sc.source(g) == obj_of_face.at(m.faces.target(n))) found = g;
      if (found < 0) throw VerificationError("matched face morphism has no Salvetti counterpart");
      lifted.push_back(found);
    }
    s.matching = lifted;
    fibers.push_back(lifted);
  }
  SalvettiMatching out;
  out.matching = morse::patchwork(sc, strata.stratum_of, [](int a, int b) { return a <= b; }, fibers);
  out.report = morse::validate_matching(sc, out.matching);
  if (!out.report.valid) throw VerificationError("Salvetti matching: " + out.report.reason);
  std::set<int> critical(out.report.critical.begin(), out.report.critical.end());
  for (auto& s : strata.strata) {
    s.census.assign(m.dim + 1, 0);
    for (int x : s.objects)
      if (critical.count(x)) ++s.census[sc.rank(x)];
  }
  return out;
}

ColimitReport verify_colimit(const FaceModel& m, const hyper::OrderedCentral& a0,
                             const SalvettiCategory& sal) {
  ColimitReport rep;
  const AcyclicCategory& fc = m.faces;
  const int cells = m.cell_count();

  // Geometricity: i_m(G_n) = F_{n o m}, and i_{n o m} = i_m o i_n.
  for (int a = 0; a < fc.morphism_count(); ++a)
    for (int b : fc.outgoing(fc.target(a))) {
      int ba = fc.compose(a, b);
      if (m.push(a, m.face_sign[b]) != m.face_sign[ba])
        throw VerificationError("diagram is not geometric: i_m(G_n) differs from F_(n o m)");
      for (const auto& s : a0.sub(m.local[fc.target(b)]).covectors)
        if (m.push(ba, s) != m.push(a, m.push(b, s)))
          throw VerificationError("diagram is not a functor");
      ++rep.checked_compositions;
    }

  // Colimit of the local face posets.
  std::vector<int> offset(cells + 1, 0);
  std::vector<std::map<SignVector, int>> cov(cells);
  for (int f = 0; f < cells; ++f) {
    const auto& c = a0.sub(m.local[f]).covectors;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) cov[f][c[i]] = i;
    offset[f + 1] = offset[f] + static_cast<int>(c.size());
  }
  UnionFind uf(offset[cells]);
  for (int e = 0; e < fc.morphism_count(); ++e) {
    const int f = fc.source(e), g = fc.target(e);
    for (const auto& [s, i] : cov[g]) {
      SignVector t = m.push(e, s);
      if (zero_set(t) != pick(m.positions(e), zero_set(s)))
        throw VerificationError("i_m does not preserve zero sets");
      auto it = cov[f].find(t);
      if (it == cov[f].end()) throw VerificationError("i_m leaves the local face poset");
      uf.unite(offset[g] + i, offset[f] + it->second);
    }
  }
  std::map<int, int> zero_in_class;
  for (int f = 0; f < cells; ++f) {
    int z = uf.find(offset[f] + cov[f].at(SignVector(m.local[f].size(), 0)));
    if (zero_in_class.count(z)) throw VerificationError("colimit identifies two faces");
    zero_in_class[z] = f;
  }
  std::set<int> classes;
  for (int x = 0; x < offset[cells]; ++x) classes.insert(uf.find(x));
  if (classes.size() != zero_in_class.size())
    throw VerificationError("colimit has objects without a face");
  rep.face_objects = static_cast<int>(classes.size());

  // Morphisms: F_m over the morphisms out of F is a bijection onto the local
  // faces, and the class of (F, F_m) is the target of m.
  for (int f = 0; f < cells; ++f) {
    std::set<SignVector> hit{SignVector(m.local[f].size(), 0)};
    for (int e : fc.outgoing(f)) {
      if (!hit.insert(m.face_sign[e]).second) throw VerificationError("two morphisms share F_m");
      int cls = uf.find(offset[f] + cov[f].at(m.face_sign[e]));
      if (zero_in_class.at(cls) != fc.target(e)) throw VerificationError("F_m points at the wrong face");
    }
    if (hit.size() != cov[f].size()) throw VerificationError("local face without a morphism");
    rep.face_morphisms += static_cast<int>(hit.size());
  }
  if (rep.face_morphisms != fc.morphism_count() + cells)
    throw VerificationError("colimit morphism count differs");

  // Colimit of the local Salvetti posets: elements (F, [s, C]).
  std::vector<std::map<std::pair<SignVector, SignVector>, int>> cellmap(cells);
  std::vector<int> soff(cells + 1, 0);
  for (int f = 0; f < cells; ++f) {
    const auto& sub = a0.sub(m.local[f]);
    int i = 0;
    for (const auto& s : sub.covectors)
      for (const auto& c : sub.chambers)
        if (face_leq(s, c)) cellmap[f][{s, c}] = i++;
    soff[f + 1] = soff[f] + i;
  }
  UnionFind su(soff[cells]);
  for (int e = 0; e < fc.morphism_count(); ++e) {
    const int f = fc.source(e), g = fc.target(e);
    for (const auto& [sc, i] : cellmap[g]) {
      auto key = std::make_pair(m.push(e, sc.first), m.push(e, sc.second));
      auto it = cellmap[f].find(key);
      if (it == cellmap[f].end()) throw VerificationError("Salvetti diagram map leaves its target");
      su.unite(soff[g] + i, soff[f] + it->second);
    }
  }
  std::map<int, int> psi;  // class -> Salvetti object
  for (int x = 0; x < static_cast<int>(sal.objects.size()); ++x) {
    auto [f, k] = sal.objects[x];
    const auto& sub = a0.sub(m.local[f]);
    int cls = su.find(soff[f] + cellmap[f].at({SignVector(m.local[f].size(), 0), sub.chambers[k]}));
    if (!psi.emplace(cls, x).second) throw VerificationError("Salvetti colimit identifies two objects");
  }
  std::set<int> sclasses;
  for (int x = 0; x < soff[cells]; ++x) sclasses.insert(su.find(x));
  if (sclasses.size() != psi.size()) throw VerificationError("Salvetti colimit has extra objects");
  rep.sal_objects = static_cast<int>(psi.size());

  // Morphisms: Psi(n, K2) = (F2, [F_n, i_n(K1)] <= [0, K2]); every local
  // relation [s, C] <= [0, K] arises this way exactly once.
  const AcyclicCategory& sc = sal.category;
  int relations = 0;
  for (int f = 0; f < cells; ++f) {
    const auto& sub = a0.sub(m.local[f]);
    for (const auto& [cell, i] : cellmap[f]) {
      const auto& [s, c] = cell;
      for (int k = 0; k < static_cast<int>(sub.chambers.size()); ++k)
        if (compose(s, sub.chambers[k]) == c) ++relations;
    }
  }
  for (int e = 0; e < sc.morphism_count(); ++e) {
    auto [n, k2] = sal.morphisms[e];
    const int f2 = fc.source(n);
    const auto& sub = a0.sub(m.local[f2]);
    auto [f1, k1] = sal.objects[sc.source(e)];
    SignVector low = m.push(n, a0.sub(m.local[f1]).chambers[k1]);
    if (compose(m.face_sign[n], sub.chambers[k2]) != low)
      throw VerificationError("Salvetti morphism violates the F_m criterion");
    int cls = su.find(soff[f2] + cellmap[f2].at({m.face_sign[n], low}));
    if (psi.at(cls) != sc.source(e)) throw VerificationError("Psi does not preserve sources");
  }
  rep.sal_morphisms = relations;
  if (relations != sc.morphism_count() + sc.object_count())
    throw VerificationError("Salvetti colimit morphism count differs");
  return rep;
}

int verify_local_orders(const FaceModel& m, const hyper::OrderedCentral& a0,
                        const Stratification& strata) {
  int checked = 0;
  for (int f = 0; f < m.cell_count(); ++f) {
    const auto& subf = a0.sub(m.local[f]);
    std::set<int> image;
    for (const auto& y : strata.y) {
      if (!m.layer_contains(y.layer, f)) continue;
      const auto& items = m.layer_items[y.layer];
      const auto& suby = a0.sub(items);
      auto pos = map_positions(m.local[f], items);
      // mu[A[Y], A[F]](C): first chamber of A[F] in its induced order over C.
      int xi = -1;
      for (int k = 0; k < static_cast<int>(subf.chambers.size()) && xi < 0; ++k)
        if (restrict(subf.chambers[k], pos) == suby.chambers[y.chamber]) xi = k;
      if (xi < 0) throw VerificationError("no chamber of A[F] over a chamber of A[Y]");
      if (subf.mu[xi] != suby.mu[y.chamber]) throw VerificationError("mu composition law fails");
      if (pick(m.local[f], subf.flats[subf.x_flat[xi]]) != items)
        throw VerificationError("X(F, xi_F(y)) differs from Y");
      if (!image.insert(xi).second) throw VerificationError("xi_F is not injective");
      ++checked;
    }
    if (image.size() != subf.chambers.size()) throw VerificationError("xi_F is not surjective");
  }
  return checked;
}

homology::Polynomial poincare_hyperplane(const hyper::Arrangement& a, const hyper::FacePoset& faces) {
  const RatMatrix normals = a.normals();
  std::vector<Integer> coeffs(a.dim() + 1, Integer(0));
  for (const auto& x : hyper::intersection_poset(faces)) {
    const int codim = a.dim() - x.dim;
    RatMatrix local(static_cast<Eigen::Index>(x.hyperplanes.size()), a.dim());
    for (size_t r = 0; r < x.hyperplanes.size(); ++r) local.row(r) = normals.row(x.hyperplanes[r]);
    auto counts = x.hyperplanes.empty() ? std::vector<int>{1} : hyper::nbc_counts(local);
    if (codim < static_cast<int>(counts.size())) coeffs[codim] += counts[codim];
  }
  return homology::Polynomial(coeffs);
}

}  // namespace toricmin::strat

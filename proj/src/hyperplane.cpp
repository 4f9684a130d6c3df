#include "toricmin/hyperplane.hpp"

#include <set>

namespace toricmin::hyper {

Hyperplane normalize(const Hyperplane& h) {
  Integer scale = 1;
  for (Eigen::Index i = 0; i < h.normal.size(); ++i) scale = lcm(scale, denominator(h.normal(i)));
  IntVector v(h.normal.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = numerator(h.normal(i) * Rational(scale));
  Integer g = content(v);
  if (g == 0) throw InputError("hyperplane with zero normal");
  Eigen::Index lead = 0;
  while (v(lead) == 0) ++lead;
  Rational factor = Rational(scale) / Rational(g);
  if (v(lead).sign() < 0) factor = -factor;
  return {(h.normal * factor).eval(), h.offset * factor};
}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
  if (dim < 0) throw InputError("negative dimension");
  for (auto& h : hyperplanes) {
    if (h.normal.size() != dim) throw InputError("hyperplane has wrong dimension");
    hyperplanes_.push_back(normalize(h));
  }
}

bool Arrangement::central() const {
  for (const auto& h : hyperplanes_)
    if (h.offset != 0) return false;
  return true;
}

RatMatrix Arrangement::normals() const {
  RatMatrix m(size(), dim_);
  for (int i = 0; i < size(); ++i) m.row(i) = hyperplanes_[i].normal.transpose();
  return m;
}

SignVector Arrangement::signs_at(const RatVector& x) const {
  SignVector s(size());
  for (int i = 0; i < size(); ++i)
    s[i] = static_cast<std::int8_t>(sign(Rational(hyperplanes_[i].normal.dot(x)) - hyperplanes_[i].offset));
  return s;
}

int remove_duplicates(std::vector<Hyperplane>& hyperplanes) {
  std::vector<Hyperplane> kept;
  int removed = 0;
  for (const auto& h : hyperplanes) {
    Hyperplane n = normalize(h);
    bool dup = false;
    for (const auto& k : kept)
      if (k.normal == n.normal && k.offset == n.offset) dup = true;
    if (dup) ++removed;
    else kept.push_back(n);
  }
  hyperplanes = std::move(kept);
  return removed;
}

namespace {

struct Covector {
  SignVector signs;
  RatVector witness;
};

SignVector signs_of(const RatMatrix& rows, const RatVector& x) {
  SignVector s(rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    s[i] = static_cast<std::int8_t>(sign(Rational(rows.row(i).dot(x))));
  return s;
}

void combinations(int n, int k, int start, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == k) {
    visit(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, visit);
    cur.pop_back();
  }
}

RatMatrix select_rows(const RatMatrix& m, const std::vector<int>& rows) {
  RatMatrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(i) = m.row(rows[i]);
  return out;
}

// All covectors of the central arrangement with the given rows, each with a
// witness vector. Covectors are compositions of cocircuits.
std::vector<Covector> covector_closure(const RatMatrix& rows) {
  const int m = static_cast<int>(rows.rows());
  const int r = rank(rows);
  std::vector<Covector> cocircuits;
  std::set<SignVector> seen_cocircuits;
  std::vector<std::vector<int>> found_flats;
  if (r > 0) {
    std::vector<int> cur;
    combinations(m, r - 1, 0, cur, [&](const std::vector<int>& subset) {
      for (const auto& flat : found_flats)
        if (std::includes(flat.begin(), flat.end(), subset.begin(), subset.end())) return;
      RatMatrix sub = select_rows(rows, subset);
      if (!subset.empty() && rank(sub) != r - 1) return;
      RatMatrix kernel = subset.empty() ? RatMatrix(RatMatrix::Identity(rows.cols(), rows.cols()))
                                        : nullspace(sub);
      for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
        RatVector v = kernel.col(c);
        SignVector s = signs_of(rows, v);
        bool nonzero = false;
        for (auto x : s) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        found_flats.push_back(zero_set(s));
        if (seen_cocircuits.insert(s).second) {
          cocircuits.push_back({s, v});
          cocircuits.push_back({opposite(s), (-v).eval()});
          seen_cocircuits.insert(opposite(s));
        }
        break;
      }
    });
  }

  std::vector<Covector> all;
  std::map<SignVector, int> index;
  all.push_back({SignVector(m, 0), RatVector::Zero(rows.cols())});
  index[all[0].signs] = 0;
  for (size_t q = 0; q < all.size(); ++q) {
    for (const auto& c : cocircuits) {
      SignVector s = compose(all[q].signs, c.signs);
      if (index.count(s)) continue;
      const RatVector& w = all[q].witness;
      // Step from w towards c small enough to keep every nonzero sign of w.
      Rational eps = 1;
      for (int i = 0; i < m; ++i) {
        if (all[q].signs[i] == 0) continue;
        Rational a = rows.row(i).dot(w), b = rows.row(i).dot(c.witness);
        if (b != 0 && sign(a) != sign(b)) {
          Rational bound = abs(a) / abs(b) / 2;
          if (bound < eps) eps = bound;
        }
      }
      RatVector x = w + eps * c.witness;
      if (signs_of(rows, x) != s) throw VerificationError("covector witness failed");
      index[s] = static_cast<int>(all.size());
      all.push_back({s, x});
    }
  }
  return all;
}

}  // namespace

FacePoset::FacePoset(int dim, std::vector<Face> faces) : dim_(dim), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.signs < b.signs;
  });
  for (int i = 0; i < size(); ++i) index_[faces_[i].signs] = i;
}

int FacePoset::find(const SignVector& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FacePoset::chambers() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (faces_[i].dim == dim_) out.push_back(i);
  return out;
}

std::vector<int> FacePoset::f_vector() const {
  std::vector<int> f(dim_ + 1, 0);
  for (const auto& face : faces_) ++f[face.dim];
  return f;
}

FacePoset face_poset(const Arrangement& a) {
  const int d = a.dim(), n = a.size();
  // Homogenize: row 0 is x0, row i+1 is (-offset_i, normal_i).
  RatMatrix rows(n + 1, d + 1);
  rows.row(0) = RatVector::Unit(d + 1, 0).transpose();
  for (int i = 0; i < n; ++i) {
    rows(i + 1, 0) = -a[i].offset;
    rows.block(i + 1, 1, 1, d) = a[i].normal.transpose();
  }
  std::map<std::vector<int>, int> rank_cache;
  std::vector<Face> faces;
  for (const auto& c : covector_closure(rows)) {
    if (c.signs[0] <= 0) continue;
    Face f;
    f.signs.assign(c.signs.begin() + 1, c.signs.end());
    f.witness = c.witness.tail(d) / c.witness(0);
    std::vector<int> zeros = zero_set(f.signs);
    auto it = rank_cache.find(zeros);
    if (it == rank_cache.end()) {
      std::vector<int> shifted;
      for (int z : zeros) shifted.push_back(z + 1);
      it = rank_cache.emplace(zeros, rank(select_rows(rows, shifted))).first;
    }
    f.dim = d - it->second;
    if (a.signs_at(f.witness) != f.signs) throw VerificationError("face witness failed");
    faces.push_back(std::move(f));
  }
  return FacePoset(d, std::move(faces));
}

std::vector<SignVector> central_covectors(const RatMatrix& normals) {
  std::vector<SignVector> out;
  for (auto& c : covector_closure(normals)) out.push_back(std::move(c.signs));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> chambers(const FacePoset& faces) {
  std::vector<SignVector> out;
  for (int i : faces.chambers()) out.push_back(faces[i].signs);
  return out;
}

std::vector<Flat> intersection_poset(const FacePoset& faces) {
  std::map<std::vector<int>, int> flats;
  for (const auto& f : faces.faces()) flats.emplace(zero_set(f.signs), f.dim);
  std::vector<Flat> out;
  for (auto& [hyps, dim] : flats) out.push_back({hyps, dim});
  std::stable_sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.hyperplanes < b.hyperplanes;
  });
  return out;
}

namespace {

// N is nbc iff independent and no normal j outside N lies in the span of the
// members of N larger than j.
bool is_nbc(const RatMatrix& normals, const std::vector<int>& set) {
  if (!set.empty() && rank(select_rows(normals, set)) != static_cast<int>(set.size())) return false;
  for (int j = 0; j < normals.rows(); ++j) {
    if (std::find(set.begin(), set.end(), j) != set.end()) continue;
    std::vector<int> larger;
    for (int i : set)
      if (i > j) larger.push_back(i);
    if (larger.empty()) continue;
    if (in_row_span(select_rows(normals, larger), normals.row(j).transpose())) return false;
  }
  return true;
}

void nbc_extend(const RatMatrix& normals, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int i = start; i < normals.rows(); ++i) {
    cur.push_back(i);
    if (is_nbc(normals, cur)) nbc_extend(normals, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> nbc_sets(const RatMatrix& normals) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  nbc_extend(normals, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> nbc_counts(const RatMatrix& normals) {
  std::vector<int> counts;
  for (const auto& s : nbc_sets(normals)) {
    if (counts.size() <= s.size()) counts.resize(s.size() + 1, 0);
    ++counts[s.size()];
  }
  return counts;
}

int RegionOrder::pos(const SignVector& c) const {
  auto it = position.find(c);
  if (it == position.end()) throw InputError("not a chamber: " + to_string(c));
  return it->second;
}

RegionOrder region_order(std::vector<SignVector> chambers, const SignVector& base) {
  if (std::find(chambers.begin(), chambers.end(), base) == chambers.end())
    throw InputError("base is not a chamber: " + to_string(base));
  std::sort(chambers.begin(), chambers.end(), [&](const SignVector& a, const SignVector& b) {
    size_t sa = separation(a, base).size(), sb = separation(b, base).size();
    if (sa != sb) return sa < sb;
    return a < b;
  });
  RegionOrder o;
  o.chambers = std::move(chambers);
  for (int i = 0; i < static_cast<int>(o.chambers.size()); ++i) o.position[o.chambers[i]] = i;
  return o;
}

RegionOrder region_order(const std::vector<SignVector>& chambers, const SignVector& base,
                         const std::vector<SignVector>& explicit_order) {
  std::set<SignVector> all(chambers.begin(), chambers.end());
  std::set<SignVector> given(explicit_order.begin(), explicit_order.end());
  if (given != all || explicit_order.size() != chambers.size())
    throw InputError("explicit order is not a permutation of the chambers");
  if (explicit_order.front() != base) throw InputError("explicit order must start at the base");
  for (size_t i = 0; i < explicit_order.size(); ++i)
    for (size_t j = i + 1; j < explicit_order.size(); ++j) {
      auto si = separation(explicit_order[i], base), sj = separation(explicit_order[j], base);
      if (sj.size() < si.size() && std::includes(si.begin(), si.end(), sj.begin(), sj.end()))
        throw InputError("explicit order is not a linear extension");
    }
  RegionOrder o;
  o.chambers = explicit_order;
  for (int i = 0; i < static_cast<int>(o.chambers.size()); ++i) o.position[o.chambers[i]] = i;
  return o;
}

SignVector default_base(const std::vector<SignVector>& chambers) {
  if (chambers.empty()) throw InputError("no chambers");
  return *std::max_element(chambers.begin(), chambers.end());
}

SignVector mu(const RegionOrder& order0, const std::vector<int>& sub, const SignVector& c) {
  for (const auto& k : order0.chambers)
    if (restrict(k, sub) == c) return k;
  throw VerificationError("mu: no chamber of A0 restricts to " + to_string(c));
}

int x_c(const std::vector<SignVector>& ordered, int p, const std::vector<std::vector<int>>& flats) {
  std::vector<int> q;
  for (int f = 0; f < static_cast<int>(flats.size()); ++f) {
    bool ok = true;
    for (int e = 0; e < p && ok; ++e) {
      auto sep = separation(ordered[p], ordered[e]);
      bool meets = false;
      for (int h : sep)
        if (std::binary_search(flats[f].begin(), flats[f].end(), h)) meets = true;
      ok = meets;
    }
    if (ok) q.push_back(f);
  }
  int found = -1;
  for (int f : q) {
    bool below_all = true;
    for (int g : q)
      if (!std::includes(flats[g].begin(), flats[g].end(), flats[f].begin(), flats[f].end()))
        below_all = false;
    if (below_all) {
      if (found >= 0) throw XcUndefined("x_c: minimal flat is not unique");
      found = f;
    }
  }
  if (found < 0) throw XcUndefined("x_c: no unique minimal flat");
  return found;
}

int SubArrangement::chamber_index(const SignVector& c) const {
  auto it = std::find(chambers.begin(), chambers.end(), c);
  if (it == chambers.end()) throw VerificationError("not a chamber of the subarrangement");
  return static_cast<int>(it - chambers.begin());
}

int SubArrangement::flat_index(const std::vector<int>& positions) const {
  auto it = std::find(flats.begin(), flats.end(), positions);
  if (it == flats.end()) throw VerificationError("not a flat of the subarrangement");
  return static_cast<int>(it - flats.begin());
}

OrderedCentral::OrderedCentral(const RatMatrix& normals, std::optional<SignVector> base,
                               std::optional<std::vector<SignVector>> explicit_order)
    : normals_(normals), covectors_(central_covectors(normals)) {
  std::vector<SignVector> chambers;
  for (const auto& c : covectors_)
    if (is_chamber(c)) chambers.push_back(c);
  SignVector b = base ? *base : default_base(chambers);
  if (static_cast<int>(b.size()) != size()) throw InputError("base chamber has wrong length");
  order_ = explicit_order ? region_order(chambers, b, *explicit_order) : region_order(chambers, b);
}

const SubArrangement& OrderedCentral::sub(const std::vector<int>& indices) const {
  auto it = cache_.find(indices);
  if (it != cache_.end()) return it->second;
  SubArrangement s;
  s.indices = indices;
  std::set<SignVector> cov;
  for (const auto& c : covectors_) cov.insert(restrict(c, indices));
  s.covectors.assign(cov.begin(), cov.end());
  std::set<SignVector> seen;
  for (int p = 0; p < static_cast<int>(order_.chambers.size()); ++p) {
    SignVector r = restrict(order_.chambers[p], indices);
    if (seen.insert(r).second) {
      s.chambers.push_back(r);
      s.mu.push_back(p);
    }
  }
  std::set<std::vector<int>> flats;
  for (const auto& c : s.covectors) flats.insert(zero_set(c));
  s.flats.assign(flats.begin(), flats.end());
  std::stable_sort(s.flats.begin(), s.flats.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  s.rank = indices.empty() ? 0 : rank(select_rows(normals_, indices));
  for (int p = 0; p < static_cast<int>(s.chambers.size()); ++p)
    s.x_flat.push_back(x_c(s.chambers, p, s.flats));
  return cache_.emplace(indices, std::move(s)).first->second;
}

OrderedCentral ordered_central(const RatMatrix& normals, std::optional<SignVector> base,
                               const std::vector<std::vector<int>>& subsets) {
  auto works = [&](const OrderedCentral& a0) {
    try {
      for (const auto& s : subsets) a0.sub(s);
      return true;
    } catch (const XcUndefined&) {
      return false;
    }
  };
  if (base) {
    OrderedCentral a0(normals, base);
    if (!works(a0)) throw InputError("X_C is not well defined for base chamber " + to_string(*base));
    return a0;
  }
  std::vector<SignVector> chambers;
  for (const auto& c : central_covectors(normals))
    if (is_chamber(c)) chambers.push_back(c);
  std::sort(chambers.rbegin(), chambers.rend());
  for (const auto& b : chambers) {
    OrderedCentral a0(normals, b);
    if (works(a0)) return a0;
  }
  throw VerificationError("no base chamber gives a well defined X_C");
}

SalvettiPoset salvetti_poset(const FacePoset& faces) {
  SalvettiPoset sal;
  std::vector<int> ch = faces.chambers();
  std::vector<int> ranks;
  for (int f = 0; f < faces.size(); ++f)
    for (int c : ch)
      if (faces.leq(f, c)) {
        sal.index[{f, c}] = static_cast<int>(sal.cells.size());
        sal.cells.push_back({f, c});
        ranks.push_back(faces.dim() - faces[f].dim);
      }
  sal.category = poset_category(ranks, [&](int a, int b) {
    auto [f1, c1] = sal.cells[a];
    auto [f2, c2] = sal.cells[b];
    if (!faces.leq(f2, f1)) return false;
    return compose(faces[f1].signs, faces[c2].signs) == faces[c1].signs;
  });
  return sal;
}

std::vector<CentralStratum> strata_central(const FacePoset& faces, const SalvettiPoset& sal,
                                           const RegionOrder& order) {
  int bottom = faces.find(SignVector(faces.size() ? faces[0].signs.size() : 0, 0));
  if (bottom < 0 || faces[bottom].dim != 0)
    throw InputError("strata_central needs an essential central arrangement");
  std::vector<std::vector<int>> flats;
  for (const auto& f : intersection_poset(faces)) flats.push_back(f.hyperplanes);

  const AcyclicCategory& cat = sal.category;
  std::vector<bool> taken(sal.cells.size(), false);
  std::vector<CentralStratum> out;
  for (int p = 0; p < static_cast<int>(order.chambers.size()); ++p) {
    CentralStratum st;
    st.chamber = order.chambers[p];
    st.x_flat = flats[x_c(order.chambers, p, flats)];
    int top = sal.index.at({bottom, faces.find(st.chamber)});
    std::vector<int> down{top};
    for (int m : cat.incoming(top)) down.push_back(cat.source(m));
    std::sort(down.begin(), down.end());
    for (int cell : down)
      if (!taken[cell]) {
        taken[cell] = true;
        st.cells.push_back(cell);
        st.faces.push_back(sal.cells[cell].first);
      }
    // N_C is the opposite of the face poset of A^{X_C}, via [F,K] -> F.
    std::vector<int> expected;
    for (int f = 0; f < faces.size(); ++f) {
      bool inside = true;
      for (int h : st.x_flat) inside = inside && faces[f].signs[h] == 0;
      if (inside) expected.push_back(f);
    }
    std::vector<int> got = st.faces;
    std::sort(got.begin(), got.end());
    if (got != expected) throw VerificationError("N_C does not match the faces of X_C");
    for (size_t a = 0; a < st.cells.size(); ++a)
      for (size_t b = 0; b < st.cells.size(); ++b) {
        if (a == b) continue;
        bool sal_leq = !cat.between(st.cells[a], st.cells[b]).empty();
        if (sal_leq != faces.leq(st.faces[b], st.faces[a]))
          throw VerificationError("N_C is not anti-isomorphic to the face poset of X_C");
      }
    out.push_back(std::move(st));
  }
  for (bool t : taken)
    if (!t) throw VerificationError("central strata do not cover the Salvetti poset");
  return out;
}

}  // namespace toricmin::hyper

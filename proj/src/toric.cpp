#include "toricmin/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toricmin::toric {

ToricArrangement::ToricArrangement(int dim, std::vector<Item> items)
    : dim_(dim), items_(std::move(items)) {
  if (dim < 0) throw InputError("negative dimension");
  for (const auto& it : items_) {
    if (it.character.size() != dim) throw InputError("character has wrong dimension");
    if (content(it.character) == 0) throw InputError("zero character");
    if (it.level < 0 || it.level >= 1) throw InputError("level must lie in [0,1)");
  }
}

IntMatrix ToricArrangement::characters() const {
  IntMatrix m(size(), dim_);
  for (int i = 0; i < size(); ++i) m.row(i) = items_[i].character.transpose();
  return m;
}

int ToricArrangement::rank() const { return size() == 0 ? 0 : lattice_rank(characters()); }

namespace {

Item orient(Item it) {
  Eigen::Index lead = 0;
  while (it.character(lead) == 0) ++lead;
  if (it.character(lead).sign() < 0) {
    it.character = (-it.character).eval();
    it.level = frac(-it.level);
  }
  return it;
}

std::string describe(const Item& it) {
  std::string s;
  for (Eigen::Index j = 0; j < it.character.size(); ++j) s += (j ? " " : "") + it.character(j).str();
  return s + " @ " + to_string(it.level);
}

std::vector<Item> dedupe(const std::vector<Item>& items, std::vector<std::string>& warnings) {
  std::vector<Item> out;
  for (const auto& it : items) {
    bool dup = false;
    for (const auto& k : out)
      if (k.character == it.character && k.level == it.level) dup = true;
    if (dup) warnings.push_back("dropped repeated item " + describe(it));
    else out.push_back(it);
  }
  return out;
}

}  // namespace

Normalized normalize(const ToricArrangement& a) {
  Normalized out;
  std::vector<Item> items;
  for (const auto& it : a.items()) {
    Integer g = content(it.character);
    if (g == 1) {
      items.push_back(orient(it));
      continue;
    }
    out.warnings.push_back("split non-primitive item " + describe(it) + " into " + g.str() +
                           " components");
    IntVector prim = primitive_part(it.character);
    for (Integer j = 0; j < g; ++j)
      items.push_back(orient({prim, frac((it.level + Rational(j)) / Rational(g))}));
  }
  items = dedupe(items, out.warnings);
  const int d = a.dim();
  int r = 0;
  if (!items.empty()) {
    IntMatrix chars(static_cast<Eigen::Index>(items.size()), d);
    for (size_t i = 0; i < items.size(); ++i) chars.row(i) = items[i].character.transpose();
    r = lattice_rank(chars);
    if (r < d) {
      IntMatrix basis = saturation(chars);
      RatMatrix bt = to_rational(basis).transpose();
      for (auto& it : items) {
        auto c = solve(bt, to_rational(it.character));
        IntVector coords(r);
        for (int k = 0; k < r; ++k) coords(k) = numerator((*c)(k));
        it = orient({coords, it.level});
      }
      out.warnings.push_back("arrangement is not essential; reduced from dimension " +
                             std::to_string(d) + " to " + std::to_string(r));
      items = dedupe(items, out.warnings);
    }
  }
  out.deficiency = d - r;
  out.arrangement = ToricArrangement(r, items);
  return out;
}

hyper::Arrangement lift(const ToricArrangement& a, int pad) {
  std::vector<hyper::Hyperplane> hs;
  for (const auto& it : a.items()) {
    Integer lo = 0, hi = 0;
    for (Eigen::Index j = 0; j < it.character.size(); ++j) {
      Integer x = it.character(j) * (-pad), y = it.character(j) * (1 + pad);
      lo += std::min(x, y);
      hi += std::max(x, y);
    }
    for (Integer k = lo - 1; k <= hi; ++k) {
      Rational v = it.level + Rational(k);
      if (v < Rational(lo) || v > Rational(hi)) continue;
      hs.push_back({to_rational(it.character), v});
    }
  }
  return hyper::Arrangement(a.dim(), hs);
}

namespace {

struct VertexRep {
  RatVector point;
  std::vector<int> items;
  std::vector<SignVector> covectors;
};

struct Canonical {
  std::vector<Integer> label;
  IntVector shift;  // canonical label = label translated by shift
  std::vector<RatVector> vertices;
  RatVector barycenter;
};

bool label_leq(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (g[i] % 2 == 0) {
      if (f[i] != g[i]) return false;
    } else if (f[i] - g[i] > 1 || g[i] - f[i] > 1) {
      return false;
    }
  }
  return true;
}

RatVector frac_vector(const RatVector& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = frac(v(i));
  return out;
}

std::vector<Rational> as_key(const RatVector& v) { return {v.data(), v.data() + v.size()}; }

void each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      visit(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

class Builder {
 public:
  explicit Builder(const ToricArrangement& a) : a_(a), normals_(a.normals()) {}

  Rational value(int i, const RatVector& x) const {
    return Rational(normals_.row(i).dot(x)) - a_[i].level;
  }

  std::vector<VertexRep> vertex_reps() {
    const int d = a_.dim(), n = a_.size();
    std::set<std::vector<Rational>> seen;
    std::vector<VertexRep> reps;
    each_subset(n, d, [&](const std::vector<int>& s) {
      RatMatrix m(d, d);
      RatVector q(d);
      for (int r = 0; r < d; ++r) {
        m.row(r) = normals_.row(s[r]);
        q(r) = a_[s[r]].level;
      }
      Rational det = determinant(m);
      if (det == 0) return;
      Integer range = numerator(abs(det));
      std::vector<Integer> k(d, Integer(0));
      while (true) {
        RatVector rhs = q;
        for (int r = 0; r < d; ++r) rhs(r) += Rational(k[r]);
        RatVector x = frac_vector(*solve(m, rhs));
        if (seen.insert(as_key(x)).second) reps.push_back({x, {}, {}});
        int pos = 0;
        while (pos < d && ++k[pos] == range) k[pos++] = 0;
        if (pos == d) break;
      }
    });
    std::sort(reps.begin(), reps.end(),
              [](const VertexRep& x, const VertexRep& y) { return as_key(x.point) < as_key(y.point); });
    std::map<std::vector<int>, std::vector<SignVector>> cov_cache;
    for (auto& v : reps) {
      for (int i = 0; i < n; ++i)
        if (is_integer(value(i, v.point))) v.items.push_back(i);
      auto it = cov_cache.find(v.items);
      if (it == cov_cache.end()) {
        RatMatrix local(static_cast<Eigen::Index>(v.items.size()), d);
        for (size_t r = 0; r < v.items.size(); ++r) local.row(r) = normals_.row(v.items[r]);
        it = cov_cache.emplace(v.items, hyper::central_covectors(local)).first;
      }
      v.covectors = it->second;
    }
    return reps;
  }

  std::vector<Integer> label(const VertexRep& v, const SignVector& f) const {
    std::vector<Integer> out(a_.size());
    size_t p = 0;
    for (int i = 0; i < a_.size(); ++i) {
      Rational x = value(i, v.point);
      if (p < v.items.size() && v.items[p] == i) out[i] = 2 * numerator(x) + f[p++];
      else out[i] = 2 * floor(x) + 1;
    }
    return out;
  }

  std::vector<RatVector> polytope_vertices(const std::vector<Integer>& l) const {
    const int d = a_.dim(), n = a_.size();
    std::vector<int> eq, odd;
    for (int i = 0; i < n; ++i) (l[i] % 2 == 0 ? eq : odd).push_back(i);
    auto lower = [&](int i) { return a_[i].level + Rational(floor(Rational(l[i] - 1, 2))); };
    auto feasible = [&](const RatVector& x) {
      for (int i : odd) {
        Rational v = Rational(normals_.row(i).dot(x)) - lower(i);
        if (v < 0 || v > 1) return false;
      }
      return true;
    };
    const int req = d - (eq.empty() ? 0 : rank(select(eq)));
    std::set<std::vector<Rational>> seen;
    std::vector<RatVector> out;
    each_subset(static_cast<int>(odd.size()), req, [&](const std::vector<int>& pick) {
      std::vector<int> rows = eq;
      for (int p : pick) rows.push_back(odd[p]);
      RatMatrix m = select(rows);
      if (rank(m) != d) return;
      for (int mask = 0; mask < (1 << req); ++mask) {
        RatVector rhs(static_cast<Eigen::Index>(rows.size()));
        for (size_t r = 0; r < eq.size(); ++r)
          rhs(r) = a_[eq[r]].level + Rational(l[eq[r]] / 2);
        for (int p = 0; p < req; ++p)
          rhs(eq.size() + p) = lower(odd[pick[p]]) + ((mask >> p) & 1);
        auto x = solve(m, rhs);
        if (!x || !feasible(*x)) continue;
        if (seen.insert(as_key(*x)).second) out.push_back(*x);
      }
    });
    if (out.empty()) throw VerificationError("cell without vertices");
    std::sort(out.begin(), out.end(),
              [](const RatVector& x, const RatVector& y) { return as_key(x) < as_key(y); });
    return out;
  }

  std::vector<Integer> translate(const std::vector<Integer>& l, const IntVector& t) const {
    std::vector<Integer> out = l;
    for (int i = 0; i < a_.size(); ++i) out[i] += 2 * Integer(a_[i].character.dot(t));
    return out;
  }

  Canonical canonical(const std::vector<Integer>& l) const {
    Canonical c;
    auto verts = polytope_vertices(l);
    RatVector bary = RatVector::Zero(a_.dim());
    for (const auto& v : verts) bary += v;
    bary /= Rational(static_cast<long>(verts.size()));
    c.shift = IntVector(a_.dim());
    for (int j = 0; j < a_.dim(); ++j) c.shift(j) = -floor(bary(j));
    RatVector s = to_rational(c.shift);
    c.label = translate(l, c.shift);
    c.barycenter = bary + s;
    for (auto& v : verts) c.vertices.push_back(v + s);
    return c;
  }

  RatMatrix select(const std::vector<int>& rows) const {
    RatMatrix m(static_cast<Eigen::Index>(rows.size()), a_.dim());
    for (size_t r = 0; r < rows.size(); ++r) m.row(r) = normals_.row(rows[r]);
    return m;
  }

 private:
  const ToricArrangement& a_;
  RatMatrix normals_;
};

}  // namespace

FaceCategory::FaceCategory(const ToricArrangement& a) : arr_(a) {
  if (a.size() == 0) throw InputError("empty arrangement: no cell structure");
  if (a.rank() != a.dim()) throw InputError("arrangement is not essential; normalize first");
  const int d = a.dim(), n = a.size();
  Builder b(a);
  std::vector<VertexRep> reps = b.vertex_reps();
  std::map<std::vector<Rational>, int> rep_index;
  for (int r = 0; r < static_cast<int>(reps.size()); ++r) rep_index[as_key(reps[r].point)] = r;

  // Canonical cells from the faces around every vertex.
  std::map<std::vector<Integer>, Canonical> canon;
  std::vector<std::vector<std::pair<std::vector<Integer>, IntVector>>> near(reps.size());
  for (size_t r = 0; r < reps.size(); ++r)
    for (const auto& f : reps[r].covectors) {
      Canonical c = b.canonical(b.label(reps[r], f));
      near[r].push_back({c.label, (-c.shift).eval()});
      canon.emplace(c.label, c);
    }
  for (auto& [label, c] : canon) {
    Cell cell;
    cell.label = label;
    std::vector<int> even;
    for (int i = 0; i < n; ++i)
      if (label[i] % 2 == 0) even.push_back(i);
    cell.local = even;
    cell.dim = d - (even.empty() ? 0 : rank(b.select(even)));
    cell.vertices = c.vertices;
    cell.barycenter = c.barycenter;
    cells_.push_back(std::move(cell));
  }
  std::stable_sort(cells_.begin(), cells_.end(), [](const Cell& x, const Cell& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.label < y.label;
  });
  std::map<std::vector<Integer>, int> cell_index;
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i) cell_index[cells_[i].label] = i;

  // Morphisms into each cell come from the faces around its vertices.
  std::set<std::tuple<int, int, std::vector<Integer>>> found;
  for (int g = 0; g < static_cast<int>(cells_.size()); ++g)
    for (const auto& u : cells_[g].vertices) {
      RatVector v = frac_vector(u);
      int r = rep_index.at(as_key(v));
      IntVector delta(d);
      for (int j = 0; j < d; ++j) delta(j) = numerator(u(j) - v(j));
      for (const auto& [label, off] : near[r]) {
        IntVector total = off + delta;
        if (!label_leq(b.translate(label, total), cells_[g].label)) continue;
        found.insert({cell_index.at(label), g, std::vector<Integer>(total.data(), total.data() + d)});
      }
    }
  std::vector<std::tuple<int, int, std::vector<Integer>>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    return std::get<2>(x) < std::get<2>(y);
  });
  identity_.assign(cells_.size(), -1);
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c) category_.add_object(cells_[c].dim);
  for (const auto& [s, t, off] : sorted) {
    int m = static_cast<int>(morphisms_.size());
    IntVector o(d);
    for (int j = 0; j < d; ++j) o(j) = off[j];
    morphisms_.push_back({s, t, o});
    morphism_index_[{s, t, off}] = m;
    if (s == t) {
      if (!o.isZero()) throw VerificationError("cell meets its own translate");
      identity_[s] = m;
      to_category_.push_back(-1);
    } else {
      to_category_.push_back(category_.add_morphism(s, t));
      from_category_.push_back(m);
    }
  }
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c)
    if (identity_[c] < 0) throw VerificationError("missing identity morphism");
  for (int f = 0; f < category_.morphism_count(); ++f)
    for (int g : category_.outgoing(category_.target(f))) {
      int gf = compose(from_category_[f], from_category_[g]);
      category_.set_composite(f, g, to_category_[gf]);
    }
  category_.finalize();

  // Layers through each vertex, one per flat of its local arrangement.
  for (const auto& v : reps) {
    std::set<std::vector<int>> flats;
    for (const auto& f : v.covectors) {
      std::vector<int> items;
      for (int p : zero_set(f)) items.push_back(v.items[p]);
      flats.insert(items);
    }
    for (const auto& items : flats) {
      std::vector<Integer> levels;
      for (int i : items) levels.push_back(numerator(b.value(i, v.point)));
      auto key = layer_key(items, levels);
      if (layer_index_.count({items, key})) continue;
      Layer y;
      y.items = items;
      y.key = key;
      y.dim = d - (items.empty() ? 0 : rank(b.select(items)));
      y.point = v.point;
      layer_index_[{items, key}] = 0;
      layers_.push_back(std::move(y));
    }
  }
  std::stable_sort(layers_.begin(), layers_.end(), [](const Layer& x, const Layer& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.items != y.items) return x.items < y.items;
    return x.key < y.key;
  });
  for (int i = 0; i < static_cast<int>(layers_.size()); ++i)
    layer_index_[{layers_[i].items, layers_[i].key}] = i;
}

std::vector<int> FaceCategory::f_vector() const {
  std::vector<int> f(dim() + 1, 0);
  for (const auto& c : cells_) ++f[c.dim];
  return f;
}

int FaceCategory::find(int source, int target, const IntVector& offset) const {
  auto it = morphism_index_.find(
      {source, target, std::vector<Integer>(offset.data(), offset.data() + offset.size())});
  return it == morphism_index_.end() ? -1 : it->second;
}

int FaceCategory::compose(int m, int n) const {
  const auto& a = morphisms_[m];
  const auto& b = morphisms_[n];
  if (a.target != b.source) throw VerificationError("face morphisms are not composable");
  int r = find(a.source, b.target, a.offset + b.offset);
  if (r < 0) throw VerificationError("face category is not closed under composition");
  return r;
}

std::vector<int> FaceCategory::between(int source, int target) const {
  std::vector<int> out;
  for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m)
    if (morphisms_[m].source == source && morphisms_[m].target == target) out.push_back(m);
  return out;
}

std::vector<Integer> FaceCategory::translate(const std::vector<Integer>& label,
                                             const IntVector& offset) const {
  std::vector<Integer> out = label;
  for (int i = 0; i < arr_.size(); ++i) out[i] += 2 * Integer(arr_[i].character.dot(offset));
  return out;
}

SignVector FaceCategory::local_sign(int m) const {
  const auto& mor = morphisms_[m];
  const Cell& f = cells_[mor.source];
  const Cell& g = cells_[mor.target];
  auto lifted = translate(f.label, mor.offset);
  SignVector s;
  for (int i : f.local) {
    Integer diff = g.label[i] - lifted[i];
    if (diff > 1 || diff < -1) throw VerificationError("lift is not in the closure");
    s.push_back(static_cast<std::int8_t>(diff.convert_to<int>()));
  }
  return s;
}

SignVector FaceCategory::push(int m, const SignVector& s) const {
  const auto& mor = morphisms_[m];
  const auto& lf = cells_[mor.source].local;
  const auto& lg = cells_[mor.target].local;
  SignVector base = local_sign(m);
  for (size_t p = 0; p < lf.size(); ++p) {
    auto it = std::lower_bound(lg.begin(), lg.end(), lf[p]);
    if (it != lg.end() && *it == lf[p]) base[p] = s[it - lg.begin()];
  }
  return base;
}

std::vector<Integer> FaceCategory::layer_key(const std::vector<int>& items,
                                             const std::vector<Integer>& levels) const {
  if (items.empty()) return {};
  auto it = hnf_cache_.find(items);
  if (it == hnf_cache_.end()) {
    IntMatrix gens(arr_.dim(), static_cast<Eigen::Index>(items.size()));
    for (size_t c = 0; c < items.size(); ++c) gens.col(c) = arr_[items[c]].character;
    it = hnf_cache_.emplace(items, hermite_basis(gens)).first;
  }
  IntVector v(static_cast<Eigen::Index>(levels.size()));
  for (size_t i = 0; i < levels.size(); ++i) v(i) = levels[i];
  IntVector r = reduce_mod_lattice(v, it->second);
  return {r.data(), r.data() + r.size()};
}

int FaceCategory::find_layer(int cell, const std::vector<int>& items) const {
  std::vector<Integer> levels;
  for (int i : items) {
    const Integer& l = cells_[cell].label[i];
    if (l % 2 != 0) return -1;
    levels.push_back(l / 2);
  }
  auto it = layer_index_.find({items, layer_key(items, levels)});
  return it == layer_index_.end() ? -1 : it->second;
}

int FaceCategory::layer_through(int cell, const std::vector<int>& items) const {
  int y = find_layer(cell, items);
  if (y < 0) throw VerificationError("no layer through the cell with these items");
  return y;
}

bool FaceCategory::contains(int layer, int cell) const {
  return find_layer(cell, layers_[layer].items) == layer;
}

std::vector<int> FaceCategory::cells_in(int layer) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c)
    if (contains(layer, c)) out.push_back(c);
  return out;
}

bool FaceCategory::layer_leq(int y, int z) const {
  const auto& iy = layers_[y].items;
  const auto& iz = layers_[z].items;
  if (!std::includes(iz.begin(), iz.end(), iy.begin(), iy.end())) return false;
  std::vector<Integer> levels;
  for (int i : iy) {
    size_t p = std::lower_bound(iz.begin(), iz.end(), i) - iz.begin();
    levels.push_back(layers_[z].key[p]);
  }
  return layer_key(iy, levels) == layers_[y].key;
}

std::vector<LocalNbc> local_nbc(const FaceCategory& f) {
  std::vector<LocalNbc> out;
  const RatMatrix normals = f.arrangement().normals();
  for (int y = 0; y < static_cast<int>(f.layers().size()); ++y) {
    const auto& items = f.layers()[y].items;
    const size_t j = static_cast<size_t>(f.dim() - f.layers()[y].dim);
    RatMatrix local(static_cast<Eigen::Index>(items.size()), f.dim());
    for (size_t r = 0; r < items.size(); ++r) local.row(r) = normals.row(items[r]);
    for (const auto& s : hyper::nbc_sets(local)) {
      if (s.size() != j) continue;
      std::vector<int> global;
      for (int p : s) global.push_back(items[p]);
      out.push_back({y, global});
    }
  }
  return out;
}

std::vector<int> local_nbc_counts(const FaceCategory& f) {
  std::vector<int> counts(f.dim() + 1, 0);
  for (const auto& x : local_nbc(f)) ++counts[x.items.size()];
  return counts;
}

homology::Polynomial poincare_toric(const std::vector<int>& nbc_counts, int dim, int deficiency) {
  using homology::Polynomial;
  Polynomial p;
  for (int j = 0; j < static_cast<int>(nbc_counts.size()); ++j) {
    std::vector<Integer> tj(j + 1, Integer(0));
    tj[j] = nbc_counts[j];
    p = p + Polynomial(tj) * homology::one_plus_t_power(dim - j);
  }
  return p * homology::one_plus_t_power(deficiency);
}

}  // namespace toricmin::toric

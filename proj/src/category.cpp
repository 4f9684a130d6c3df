#include "toricmin/category.hpp"

#include <algorithm>
#include <string>

#include "toricmin/exact.hpp"

namespace toricmin {

int AcyclicCategory::add_object(int rank) {
  rank_.push_back(rank);
  out_.emplace_back();
  in_.emplace_back();
  return object_count() - 1;
}

int AcyclicCategory::add_morphism(int source, int target) {
  if (rank_[source] >= rank_[target])
    throw VerificationError("morphism does not raise rank");
  source_.push_back(source);
  target_.push_back(target);
  int m = morphism_count() - 1;
  out_[source].push_back(m);
  in_[target].push_back(m);
  return m;
}

void AcyclicCategory::set_composite(int f, int g, int gf) {
  if (target_[f] != source_[g] || source_[gf] != source_[f] || target_[gf] != target_[g])
    throw VerificationError("composite has wrong endpoints");
  composite_[key(f, g)] = gf;
}

void AcyclicCategory::finalize() {
  decomposable_.assign(source_.size(), false);
  for (int f = 0; f < morphism_count(); ++f)
    for (int g : out_[target_[f]]) {
      auto it = composite_.find(key(f, g));
      if (it == composite_.end()) throw VerificationError("missing composite");
      decomposable_[it->second] = true;
    }
}

int AcyclicCategory::max_rank() const {
  int r = 0;
  for (int x : rank_) r = std::max(r, x);
  return r;
}

std::vector<int> AcyclicCategory::between(int x, int y) const {
  std::vector<int> out;
  for (int m : out_[x])
    if (target_[m] == y) out.push_back(m);
  return out;
}

int AcyclicCategory::compose(int f, int g) const {
  auto it = composite_.find(key(f, g));
  if (it == composite_.end()) throw VerificationError("morphisms are not composable");
  return it->second;
}

AcyclicCategory poset_category(const std::vector<int>& ranks,
                               const std::function<bool(int, int)>& leq) {
  AcyclicCategory c;
  const int n = static_cast<int>(ranks.size());
  for (int r : ranks) c.add_object(r);
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq(a, b)) rel[a][b] = c.add_morphism(a, b);
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.outgoing(c.target(f))) {
      int gf = rel[c.source(f)][c.target(g)];
      if (gf < 0) throw VerificationError("relation is not transitive");
      c.set_composite(f, g, gf);
    }
  c.finalize();
  return c;
}

Subcategory full_subcategory(const AcyclicCategory& parent, const std::vector<int>& objects) {
  Subcategory s;
  s.objects = objects;
  s.object_index.assign(parent.object_count(), -1);
  for (size_t i = 0; i < objects.size(); ++i) {
    s.object_index[objects[i]] = static_cast<int>(i);
    s.category.add_object(parent.rank(objects[i]));
  }
  std::vector<int> morphism_index(parent.morphism_count(), -1);
  for (int x : objects)
    for (int m : parent.outgoing(x)) {
      int y = parent.target(m);
      if (s.object_index[y] < 0) continue;
      morphism_index[m] = s.category.add_morphism(s.object_index[x], s.object_index[y]);
      s.morphisms.push_back(m);
    }
  for (int f : s.morphisms)
    for (int g : parent.outgoing(parent.target(f))) {
      if (morphism_index[g] < 0) continue;
      s.category.set_composite(morphism_index[f], morphism_index[g],
                               morphism_index[parent.compose(f, g)]);
    }
  s.category.finalize();
  return s;
}

}  // namespace toricmin

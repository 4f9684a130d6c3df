#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace toricmin {

// Finite ranked acyclic category. Only non-identity morphisms are stored;
// every morphism strictly raises the rank. Composition must be closed:
// for f: x -> y and g: y -> z, compose(f, g) is the stored g∘f.
class AcyclicCategory {
 public:
  int add_object(int rank);
  int add_morphism(int source, int target);
  void set_composite(int f, int g, int gf);
  // Checks ranks and that every composable pair has a recorded composite.
  void finalize();

  int object_count() const { return static_cast<int>(rank_.size()); }
  int morphism_count() const { return static_cast<int>(source_.size()); }
  int rank(int object) const { return rank_[object]; }
  int source(int m) const { return source_[m]; }
  int target(int m) const { return target_[m]; }
  int max_rank() const;
  const std::vector<int>& outgoing(int object) const { return out_[object]; }
  const std::vector<int>& incoming(int object) const { return in_[object]; }
  std::vector<int> between(int x, int y) const;
  int compose(int f, int g) const;  // g∘f
  bool indecomposable(int m) const { return !decomposable_[m]; }

 private:
  static std::uint64_t key(int f, int g) {
    return (static_cast<std::uint64_t>(f) << 32) | static_cast<std::uint32_t>(g);
  }
  std::vector<int> rank_;
  std::vector<int> source_, target_;
  std::vector<std::vector<int>> out_, in_;
  std::unordered_map<std::uint64_t, int> composite_;
  std::vector<bool> decomposable_;
};

// Poset as an acyclic category: one morphism per strict relation.
// leq must be a partial order compatible with the ranks.
AcyclicCategory poset_category(const std::vector<int>& ranks,
                               const std::function<bool(int, int)>& leq);

// Full subcategory on a set of objects, with index maps back to the parent.
struct Subcategory {
  AcyclicCategory category;
  std::vector<int> objects;    // sub object -> parent object
  std::vector<int> morphisms;  // sub morphism -> parent morphism
  std::vector<int> object_index;  // parent object -> sub object or -1
};

Subcategory full_subcategory(const AcyclicCategory& parent, const std::vector<int>& objects);

}  // namespace toricmin

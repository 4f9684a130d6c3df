#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "toricmin/category.hpp"
#include "toricmin/exact.hpp"
#include "toricmin/homology.hpp"
#include "toricmin/hyperplane.hpp"
#include "toricmin/signs.hpp"

namespace toricmin::toric {

// The subtorus {x : <character, x> = level mod 1} of R^d / Z^d.
struct Item {
  IntVector character;
  Rational level;  // in [0, 1)
};

class ToricArrangement {
 public:
  ToricArrangement(int dim, std::vector<Item> items);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(items_.size()); }
  const Item& operator[](int i) const { return items_[i]; }
  const std::vector<Item>& items() const { return items_; }
  IntMatrix characters() const;  // one row per item
  RatMatrix normals() const { return to_rational(characters()); }
  int rank() const;

 private:
  int dim_;
  std::vector<Item> items_;
};

// Primitive characters with positive leading entry, no repeated items, and
// essential after passing to coordinates on the saturated character lattice.
// A non-primitive item splits into its connected components.
struct Normalized {
  ToricArrangement arrangement{0, {}};
  int deficiency = 0;  // dim - rank; the complement gains a (C^*)^deficiency factor
  std::vector<std::string> warnings;
};

Normalized normalize(const ToricArrangement& a);

// Periodic lift restricted to the translates meeting [-pad, 1 + pad]^d.
hyper::Arrangement lift(const ToricArrangement& a, int pad = 0);

// A layer is a connected component of an intersection of items.
struct Layer {
  std::vector<int> items;   // every item containing the layer
  std::vector<Integer> key;  // canonical coset of the integer levels on items
  int dim = 0;
  RatVector point;          // a vertex on the layer, in [0,1)^d
};

// A cell is a face of the periodic lift up to integer translation. Labels
// record, per item, 2k on the k-th translate and 2k+1 strictly between the
// k-th and (k+1)-th; the stored lift has its vertex barycenter in [0,1)^d.
struct Cell {
  std::vector<Integer> label;
  int dim = 0;
  std::vector<int> local;  // items whose translates contain the lift
  std::vector<RatVector> vertices;
  RatVector barycenter;
};

// A morphism F -> G is a lift F + offset in the closure of the stored lift of G.
struct FaceMorphism {
  int source = 0, target = 0;
  IntVector offset;
};

class FaceCategory {
 public:
  explicit FaceCategory(const ToricArrangement& a);

  const ToricArrangement& arrangement() const { return arr_; }
  int dim() const { return arr_.dim(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<FaceMorphism>& morphisms() const { return morphisms_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<int> f_vector() const;

  // Non-identity morphisms; category morphism i is morphisms()[morphism_of(i)].
  const AcyclicCategory& category() const { return category_; }
  int morphism_of(int category_morphism) const { return from_category_[category_morphism]; }
  int category_morphism(int m) const { return to_category_[m]; }  // -1 for identities
  int identity(int cell) const { return identity_[cell]; }
  int find(int source, int target, const IntVector& offset) const;  // -1 when absent
  int compose(int m, int n) const;  // n after m
  std::vector<int> between(int source, int target) const;  // including identities

  // F_m: sign vector of the target relative to the lifted source, on local(source).
  SignVector local_sign(int m) const;
  // i_m: a local face of the target, over local(target), to one over local(source).
  SignVector push(int m, const SignVector& s) const;

  // The layer through a cell cut out by a closed set of its local items.
  int layer_through(int cell, const std::vector<int>& items) const;
  bool contains(int layer, int cell) const;
  std::vector<int> cells_in(int layer) const;
  bool layer_leq(int y, int z) const;  // z is contained in y

 private:
  int find_layer(int cell, const std::vector<int>& items) const;  // -1 when absent
  std::vector<Integer> translate(const std::vector<Integer>& label, const IntVector& offset) const;
  std::vector<Integer> layer_key(const std::vector<int>& items, const std::vector<Integer>& levels) const;

  ToricArrangement arr_;
  std::vector<Cell> cells_;
  std::vector<FaceMorphism> morphisms_;
  std::vector<Layer> layers_;
  std::map<std::pair<std::vector<int>, std::vector<Integer>>, int> layer_index_;
  std::map<std::tuple<int, int, std::vector<Integer>>, int> morphism_index_;
  std::vector<int> identity_, from_category_, to_category_;
  AcyclicCategory category_;
  mutable std::map<std::vector<int>, IntMatrix> hnf_cache_;
};

// Local NBC sets: pairs (layer X, N) with N a top-degree NBC set of A[X].
struct LocalNbc {
  int layer;
  std::vector<int> items;
};

std::vector<LocalNbc> local_nbc(const FaceCategory& f);
std::vector<int> local_nbc_counts(const FaceCategory& f);  // by codimension j

// sum_j |N_j| (1+t)^(d-j) t^j, times (1+t)^deficiency.
homology::Polynomial poincare_toric(const std::vector<int>& nbc_counts, int dim, int deficiency = 0);

}  // namespace toricmin::toric

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricmin/category.hpp"
#include "toricmin/exact.hpp"
#include "toricmin/signs.hpp"

namespace toricmin::hyper {

// {x : <normal, x> = offset}; the positive side is <normal, x> > offset.
struct Hyperplane {
  RatVector normal;
  Rational offset;
};

// Scales to a primitive integer normal whose first nonzero entry is positive.
Hyperplane normalize(const Hyperplane& h);

class Arrangement {
 public:
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const Hyperplane& operator[](int i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  bool central() const;
  RatMatrix normals() const;  // one row per hyperplane
  SignVector signs_at(const RatVector& x) const;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
};

// Drops repeated hyperplanes after normalization; returns the number removed.
int remove_duplicates(std::vector<Hyperplane>& hyperplanes);

struct Face {
  SignVector signs;
  int dim = 0;
  RatVector witness;  // a point of the face
};

class FacePoset {
 public:
  FacePoset() = default;
  FacePoset(int dim, std::vector<Face> faces);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(faces_.size()); }
  const Face& operator[](int i) const { return faces_[i]; }
  const std::vector<Face>& faces() const { return faces_; }
  int find(const SignVector& s) const;  // -1 when absent
  std::vector<int> chambers() const;
  bool leq(int a, int b) const { return face_leq(faces_[a].signs, faces_[b].signs); }
  std::vector<int> f_vector() const;

 private:
  int dim_ = 0;
  std::vector<Face> faces_;  // sorted by dimension, then sign vector
  std::map<SignVector, int> index_;
};

// Every face with a certified rational witness point.
FacePoset face_poset(const Arrangement& a);
// Sign vectors of all faces of the central arrangement {<n_i, x> = 0}.
// Rows of normals may repeat.
std::vector<SignVector> central_covectors(const RatMatrix& normals);
std::vector<SignVector> chambers(const FacePoset& faces);

// A flat is recorded by the sorted set of hyperplanes containing it.
struct Flat {
  std::vector<int> hyperplanes;
  int dim = 0;
};

// Sorted by decreasing dimension, then hyperplane set.
std::vector<Flat> intersection_poset(const FacePoset& faces);
inline bool flat_leq(const Flat& x, const Flat& y) {
  return std::includes(y.hyperplanes.begin(), y.hyperplanes.end(), x.hyperplanes.begin(),
                       x.hyperplanes.end());
}

// NBC sets of the central arrangement with the given normals, in index order.
std::vector<std::vector<int>> nbc_sets(const RatMatrix& normals);
std::vector<int> nbc_counts(const RatMatrix& normals);  // by size

// Chambers listed along a linear extension of the poset of regions.
struct RegionOrder {
  std::vector<SignVector> chambers;  // chambers[0] is the base chamber
  std::map<SignVector, int> position;

  const SignVector& base() const { return chambers.front(); }
  int pos(const SignVector& c) const;
};

// Sort by |S(C,B)|, then lexicographically with - < 0 < +.
RegionOrder region_order(std::vector<SignVector> chambers, const SignVector& base);
// Validates that explicit_order starts at base and is a linear extension.
RegionOrder region_order(const std::vector<SignVector>& chambers, const SignVector& base,
                         const std::vector<SignVector>& explicit_order);
// Lexicographically greatest chamber.
SignVector default_base(const std::vector<SignVector>& chambers);

// The least chamber of A0 (in the order) restricting to c on positions sub.
SignVector mu(const RegionOrder& order0, const std::vector<int>& sub, const SignVector& c);

// The flats meeting every earlier separation set have no least element.
// This happens for some base chambers, whatever the linear extension.
struct XcUndefined : VerificationError {
  using VerificationError::VerificationError;
};

// Index of the unique minimal flat X with S(C,C') meeting X for all C' before
// position p. Flats are sets of positions.
int x_c(const std::vector<SignVector>& ordered, int p, const std::vector<std::vector<int>>& flats);

// A subarrangement of an ordered central arrangement with the induced data.
struct SubArrangement {
  std::vector<int> indices;                 // positions in A0
  std::vector<SignVector> chambers;         // in induced order, over indices
  std::vector<int> mu;                      // order-0 position of mu(chamber)
  std::vector<SignVector> covectors;        // all faces, over indices
  std::vector<std::vector<int>> flats;      // closed sets, as positions into indices
  std::vector<int> x_flat;                  // per chamber, index into flats
  int rank = 0;

  int chamber_index(const SignVector& c) const;
  int flat_index(const std::vector<int>& positions) const;
};

class OrderedCentral {
 public:
  OrderedCentral() = default;
  // base defaults to default_base; an explicit order overrides the canonical one.
  OrderedCentral(const RatMatrix& normals, std::optional<SignVector> base,
                 std::optional<std::vector<SignVector>> explicit_order = std::nullopt);

  int size() const { return static_cast<int>(normals_.rows()); }
  const RatMatrix& normals() const { return normals_; }
  const RegionOrder& order() const { return order_; }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const SubArrangement& sub(const std::vector<int>& indices) const;

 private:
  RatMatrix normals_;
  std::vector<SignVector> covectors_;
  RegionOrder order_;
  mutable std::map<std::vector<int>, SubArrangement> cache_;
};

// Ordered A0 whose X_C is well defined on every listed subarrangement. A
// given base is checked (InputError when it fails); otherwise chambers are
// tried in decreasing lexicographic order.
OrderedCentral ordered_central(const RatMatrix& normals, std::optional<SignVector> base,
                               const std::vector<std::vector<int>>& subsets);

// Cells [F,C] with F <= C; [F1,C1] <= [F2,C2] iff F2 <= F1 and (C2)_{F1} = C1.
struct SalvettiPoset {
  std::vector<std::pair<int, int>> cells;  // (face, chamber) indices into the face poset
  AcyclicCategory category;                // rank is the codimension of the face
  std::map<std::pair<int, int>, int> index;
};

SalvettiPoset salvetti_poset(const FacePoset& faces);

// N_C for a central arrangement: the cells below [P,C] not below [P,D] for
// any earlier D, with the isomorphism to the opposite face poset of A^{X_C}.
struct CentralStratum {
  SignVector chamber;
  std::vector<int> x_flat;   // hyperplanes containing X_C
  std::vector<int> cells;    // Salvetti cells of N_C
  std::vector<int> faces;    // faces of A^{X_C}; cells[i] sits over faces[i]
};

std::vector<CentralStratum> strata_central(const FacePoset& faces, const SalvettiPoset& sal,
                                           const RegionOrder& order);

}  // namespace toricmin::hyper

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toricmin/category.hpp"
#include "toricmin/homology.hpp"
#include "toricmin/hyperplane.hpp"
#include "toricmin/morse.hpp"
#include "toricmin/signs.hpp"
#include "toricmin/toric.hpp"

// Salvetti categories, their stratification and the perfect matching, built
// over any face model: the toric face category or the face poset of an
// affine arrangement.
namespace toricmin::strat {

// Local data of a polyhedral decomposition. Every face F carries the central
// arrangement A[F] (items through F, with normals from A0), and every
// morphism m: F -> G carries F_m, the face of A[F] pointing towards G.
struct FaceModel {
  int dim = 0;
  RatMatrix normals;  // A0, one row per item
  AcyclicCategory faces;  // non-identity morphisms
  std::vector<int> cell_dim;
  std::vector<std::vector<int>> local;  // sorted items of A[F]
  std::vector<SignVector> face_sign;    // F_m over local(source), per morphism
  std::vector<std::vector<int>> layer_items;
  std::vector<int> layer_dim;
  std::function<int(int, const std::vector<int>&)> layer_through;  // (cell, closed items)
  std::function<bool(int, int)> layer_contains;                      // (layer, cell)

  int cell_count() const { return faces.object_count(); }
  // i_m: a face of A[target] to a face of A[source].
  SignVector push(int m, const SignVector& s) const;
  // Positions of local(target) inside local(source).
  std::vector<int> positions(int m) const;
};

FaceModel face_model(const toric::FaceCategory& f);
FaceModel face_model(const hyper::Arrangement& a, const hyper::FacePoset& faces);

// A0 with a base chamber for which X_C is defined on every A[F] and A[Y].
hyper::OrderedCentral ordered_a0(const FaceModel& m, std::optional<SignVector> base = std::nullopt);

struct SalvettiCategory {
  // Objects (F, K): K a chamber of A[F], listed as an index into
  // a0.sub(local F).chambers. Rank is d - dim F.
  std::vector<std::pair<int, int>> objects;
  // Morphism (n, K2): n: F2 -> F1 a face morphism, K2 a chamber of A[F2];
  // it goes from (F1, K1) to (F2, K2) where i_n(K1) = (F_n)K2.
  std::vector<std::pair<int, int>> morphisms;
  AcyclicCategory category;
  std::vector<std::vector<int>> object_index;  // [cell][chamber] -> object
};

SalvettiCategory salvetti_category(const FaceModel& m, const hyper::OrderedCentral& a0);

// y = (Y, C) with C a chamber of A[Y] and X(Y, C) = Y.
struct YElement {
  int layer = 0;
  int chamber = 0;  // index into a0.sub(items of Y).chambers
  int mu = 0;       // position of mu(C) in the order of A0
};

struct Stratum {
  YElement y;
  std::vector<int> objects;  // Salvetti objects of N_y
  Subcategory faces;         // F(A^Y): faces of the model inside Y
  std::vector<int> face_of;  // N_y object position -> faces.objects position
  std::vector<int> matching;  // Salvetti morphisms
  std::vector<int> census;    // critical objects of N_y by Salvetti rank
};

struct Stratification {
  std::vector<YElement> y;  // in the order used for the filtration
  std::vector<int> theta;   // per Salvetti object, index into y
  std::vector<int> stratum_of;
  std::vector<Stratum> strata;
  std::vector<int> y_counts;  // by dimension of Y
};

// Builds theta, S_y and N_y, checks the partition and each isomorphism
// N_y = F(A^Y)^op via (F, K) -> F.
Stratification stratify(const FaceModel& m, const hyper::OrderedCentral& a0,
                        const SalvettiCategory& sal);

// Matching on F(A^Y), in morphisms of faces.category.
using StratumMatcher = std::function<std::vector<int>(const FaceModel&, const Stratum&)>;

// Perfect matching of the faces inside a layer through the fibration over
// the Boolean poset of k transversal subtori at a vertex.
morse::TorusMatching layer_torus_matching(const toric::FaceCategory& f, int layer,
                                          const Subcategory& faces, const morse::SearchOptions& opts = {});
morse::TorusMatching face_torus_matching(const toric::FaceCategory& f, const morse::SearchOptions& opts = {});

// Perfect matching of F(A^Y) through the toric fibration.
StratumMatcher toric_matcher(const toric::FaceCategory& f, const morse::SearchOptions& opts = {});
// One critical face, a chamber of A^Y.
StratumMatcher affine_matcher(const morse::SearchOptions& opts = {});

struct SalvettiMatching {
  std::vector<int> matching;
  morse::MatchingReport report;
};

// Transports each stratum matching to N_y and patchworks along the chain of
// strata; the result is validated.
SalvettiMatching salvetti_matching(const FaceModel& m, const SalvettiCategory& sal,
                                   Stratification& strata, const StratumMatcher& matcher);

struct ColimitReport {
  int face_objects = 0, face_morphisms = 0;  // morphisms include identities
  int sal_objects = 0, sal_morphisms = 0;
  int checked_compositions = 0;
};

// Rebuilds F and Sal as colimits of the local face posets and local
// Salvetti posets and compares them with the direct constructions.
ColimitReport verify_colimit(const FaceModel& m, const hyper::OrderedCentral& a0,
                             const SalvettiCategory& sal);

// mu[A[Y],A0] = mu[A[F],A0] o mu[A[Y],A[F]] for every face F inside a layer Y,
// plus bijectivity of xi_F and X(F, xi_F(y)) = Y. Returns the number of chains checked.
int verify_local_orders(const FaceModel& m, const hyper::OrderedCentral& a0,
                        const Stratification& strata);

// sum over flats X of |nbc_codim(A_X)| t^codim X.
homology::Polynomial poincare_hyperplane(const hyper::Arrangement& a, const hyper::FacePoset& faces);

}  // namespace toricmin::strat

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes every argument of a cpp_int constructor for a byte
// container, which is a hard error for Eigen expressions. Opt them out.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageKind; }
struct is_byte_container<C> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace toricmin {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;

// Errors shared by every module. The CLI maps InputError to exit code 1 and
// VerificationError to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

Integer floor(const Rational& x);
Rational frac(const Rational& x);  // x - floor(x), in [0,1)
bool is_integer(const Rational& x);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);  // always "p/q"

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// Reduced row echelon form over Q.
struct Echelon {
  RatMatrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon row_echelon(const RatMatrix& m);
int rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
int rank(const IntMatrix& m);
// Basis of {x : m x = 0}, as columns.
RatMatrix nullspace(const RatMatrix& m);
// Unique or particular solution of a x = b, if any.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
bool in_row_span(const RatMatrix& rows, const RatVector& v);

// U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next. Vinv is V^{-1}.
struct SmithForm {
  IntMatrix U, D, V, Vinv;
  int rank = 0;
  std::vector<Integer> invariant_factors() const;
};

SmithForm snf(const IntMatrix& m);
// Nonzero invariant factors only, without tracking transforms.
std::vector<Integer> invariant_factors(IntMatrix m);

Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
IntVector primitive_part(const IntVector& v);

int lattice_rank(const IntMatrix& generators);  // generators are rows
// Hermite normal form basis of the row lattice: echelon rows, positive
// pivots, entries above a pivot reduced to [0, pivot).
IntMatrix hermite_basis(const IntMatrix& generators);
// Canonical representative of v modulo the row lattice of an HNF basis.
IntVector reduce_mod_lattice(IntVector v, const IntMatrix& hnf);
// Basis (rows, in Hermite form) of (Q-span of generators) intersected with Z^d.
IntMatrix saturation(const IntMatrix& generators);
// Extend primitive rows to a unimodular matrix whose top rows are the input.
IntMatrix unimodular_completion(const IntMatrix& rows);

// Basis u of Z^d such that for every lattice of the chain, the first
// prefix_ranks[j] rows span its saturation. The chain must be nested; Z^d
// is appended when missing.
struct AdaptedBasis {
  IntMatrix basis;
  std::vector<int> prefix_ranks;
};

AdaptedBasis adapted_basis(const std::vector<IntMatrix>& chain, int dim);

}  // namespace toricmin

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricmin/category.hpp"
#include "toricmin/exact.hpp"

namespace toricmin::homology {

// Column-major sparse integer matrix.
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Integer>>> columns;
};

// boundary[k] maps C_k to C_{k-1}; boundary[0] is empty.
struct ChainComplex {
  std::vector<int> dims;
  std::vector<SparseMatrix> boundary;
};

// Normalized nerve: degree-k generators are chains of k composable
// non-identity morphisms, with the alternating sum of face maps.
ChainComplex nerve_chain_complex(const AcyclicCategory& c, int max_deg = -1);

bool boundary_squares_to_zero(const ChainComplex& cc);

// Nonzero invariant factors. Unit pivots are eliminated sparsely first and
// the remainder goes through a dense Smith normal form.
std::vector<Integer> invariant_factors(const SparseMatrix& m);

struct Homology {
  std::vector<int> betti;
  std::vector<std::vector<Integer>> torsion;  // invariant factors > 1 per degree
  bool torsion_free() const;
};

// Degrees 0..dims.size()-2 when the top degree is only used as a boundary
// source; pass the full degree range otherwise.
Homology homology(const ChainComplex& cc, int max_deg);

struct Polynomial {
  std::vector<Integer> coeffs;  // coeffs[i] multiplies t^i

  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> c);
  static Polynomial from_ints(const std::vector<int>& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  Integer at(const Integer& t) const;
  std::vector<int> to_ints() const;
  std::string str() const;  // "1 + 5t + 7t^2"
};

Polynomial one_plus_t_power(int n);

}  // namespace toricmin::homology

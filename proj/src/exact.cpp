#include "toricmin/exact.hpp"

#include <algorithm>
#include <utility>

namespace toricmin {

Integer floor(const Rational& x) {
  Integer n = numerator(x), d = denominator(x);
  Integer q = n / d;
  if (n.sign() < 0 && q * d != n) q -= 1;
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Echelon row_echelon(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Rational inv = Rational(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return e;
}

int rank(const RatMatrix& m) { return static_cast<int>(row_echelon(m).pivots.size()); }

Rational determinant(const RatMatrix& m) {
  RatMatrix a = m;
  const Eigen::Index n = a.rows();
  Rational det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

int rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix nullspace(const RatMatrix& m) {
  Echelon e = row_echelon(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  RatMatrix basis = RatMatrix::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  Echelon e = row_echelon(aug);
  RatVector x = RatVector::Zero(a.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, a.cols());
  }
  return x;
}

bool in_row_span(const RatMatrix& rows, const RatVector& v) {
  if (rows.rows() == 0) return v.isZero();
  RatMatrix stacked(rows.rows() + 1, rows.cols());
  stacked << rows, v.transpose();
  return rank(stacked) == rank(rows);
}

namespace {

Integer abs_int(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

// Smallest nonzero |entry| in the block starting at (t, t), row-major ties.
bool find_pivot(const IntMatrix& d, Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
  bool found = false;
  Integer best;
  for (Eigen::Index i = t; i < d.rows(); ++i)
    for (Eigen::Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs_int(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

struct SmithWork {
  IntMatrix d;
  IntMatrix* u = nullptr;
  IntMatrix* v = nullptr;
  IntMatrix* vinv = nullptr;

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    if (u) u->row(a).swap(u->row(b));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    if (v) v->col(a).swap(v->col(b));
    if (vinv) vinv->row(a).swap(vinv->row(b));
  }
  // row_i += q * row_t
  void add_row(Eigen::Index i, Eigen::Index t, const Integer& q) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) d(i, j) += q * d(t, j);
    if (u)
      for (Eigen::Index j = 0; j < u->cols(); ++j) (*u)(i, j) += q * (*u)(t, j);
  }
  // col_j += q * col_t
  void add_col(Eigen::Index j, Eigen::Index t, const Integer& q) {
    for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, j) += q * d(i, t);
    if (v)
      for (Eigen::Index i = 0; i < v->rows(); ++i) (*v)(i, j) += q * (*v)(i, t);
    if (vinv)
      for (Eigen::Index k = 0; k < vinv->cols(); ++k) (*vinv)(t, k) -= q * (*vinv)(j, k);
  }
  void negate_row(Eigen::Index i) {
    d.row(i) = (-d.row(i)).eval();
    if (u) u->row(i) = (-u->row(i)).eval();
  }

  int run() {
    const Eigen::Index m = d.rows(), n = d.cols();
    Eigen::Index t = 0;
    for (; t < std::min(m, n); ++t) {
      Eigen::Index pi, pj;
      if (!find_pivot(d, t, pi, pj)) break;
      while (true) {
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (Eigen::Index i = t + 1; i < m; ++i) {
          if (d(i, t) == 0) continue;
          add_row(i, t, -(d(i, t) / d(t, t)));
          if (d(i, t) != 0) clean = false;
        }
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (d(t, j) == 0) continue;
          add_col(j, t, -(d(t, j) / d(t, t)));
          if (d(t, j) != 0) clean = false;
        }
        if (clean) {
          // Enforce the divisibility chain.
          Eigen::Index bad = -1;
          for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
            for (Eigen::Index j = t + 1; j < n; ++j)
              if (d(i, j) % d(t, t) != 0) {
                bad = i;
                break;
              }
          if (bad < 0) break;
          add_row(t, bad, Integer(1));
        }
        find_pivot(d, t, pi, pj);
      }
      if (d(t, t).sign() < 0) negate_row(t);
    }
    return static_cast<int>(t);
  }
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (int i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm s;
  s.U = IntMatrix::Identity(m.rows(), m.rows());
  s.V = IntMatrix::Identity(m.cols(), m.cols());
  s.Vinv = IntMatrix::Identity(m.cols(), m.cols());
  SmithWork w{m, &s.U, &s.V, &s.Vinv};
  s.rank = w.run();
  s.D = std::move(w.d);
  return s;
}

std::vector<Integer> invariant_factors(IntMatrix m) {
  SmithWork w{std::move(m)};
  int r = w.run();
  std::vector<Integer> out;
  for (int i = 0; i < r; ++i) out.push_back(w.d(i, i));
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs_int(v(i)));
  return g;
}

IntVector primitive_part(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw InputError("primitive_part: zero vector");
  IntVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

int lattice_rank(const IntMatrix& generators) { return rank(generators); }

IntMatrix hermite_basis(const IntMatrix& generators) {
  IntMatrix a = generators;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best < 0 || abs_int(a(i, c)) < abs_int(a(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) a.row(best).swap(a.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = a(i, c) / a(r, c);
        a.row(i) = (a.row(i) - q * a.row(r)).eval();
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c).sign() < 0) a.row(r) = (-a.row(r)).eval();
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = floor(Rational(a(i, c), a(r, c)));
      if (q != 0) a.row(i) = (a.row(i) - q * a.row(r)).eval();
    }
    pivots.push_back(c);
    ++r;
  }
  return a.topRows(r);
}

IntVector reduce_mod_lattice(IntVector v, const IntMatrix& hnf) {
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) {
    Eigen::Index p = 0;
    while (hnf(i, p) == 0) ++p;
    Integer q = floor(Rational(v(p), hnf(i, p)));
    if (q != 0) v = (v - q * hnf.row(i).transpose()).eval();
  }
  return v;
}

IntMatrix saturation(const IntMatrix& generators) {
  if (generators.rows() == 0) return IntMatrix(0, generators.cols());
  SmithForm s = snf(generators);
  return hermite_basis(s.Vinv.topRows(s.rank));
}

IntMatrix unimodular_completion(const IntMatrix& rows) {
  const Eigen::Index r = rows.rows(), n = rows.cols();
  if (r == 0) return IntMatrix::Identity(n, n);
  SmithForm s = snf(rows);
  for (int i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) throw InputError("unimodular_completion: rows are not primitive");
  if (s.rank != r) throw InputError("unimodular_completion: rows are dependent");
  IntMatrix out(n, n);
  out << rows, s.Vinv.bottomRows(n - r);
  return out;
}

AdaptedBasis adapted_basis(const std::vector<IntMatrix>& chain, int dim) {
  std::vector<IntMatrix> sat;
  for (const IntMatrix& g : chain) {
    if (g.rows() > 0 && g.cols() != dim) throw InputError("adapted_basis: dimension mismatch");
    sat.push_back(g.rows() == 0 ? IntMatrix(0, dim) : saturation(g));
  }
  for (size_t j = 0; j + 1 < chain.size(); ++j) {
    RatMatrix next = to_rational(sat[j + 1]);
    for (Eigen::Index i = 0; i < chain[j].rows(); ++i)
      if (!in_row_span(next, to_rational(IntVector(chain[j].row(i).transpose()))))
        throw InputError("adapted_basis: chain is not nested");
  }
  const bool appended = sat.empty() || sat.back().rows() != dim;
  if (appended) sat.push_back(IntMatrix::Identity(dim, dim));

  AdaptedBasis out;
  IntMatrix current(0, dim);
  for (const IntMatrix& lattice : sat) {
    if (lattice.rows() == current.rows()) {
      out.prefix_ranks.push_back(static_cast<int>(current.rows()));
      continue;
    }
    // Coordinates of the current basis in the basis of the larger lattice.
    RatMatrix wt = to_rational(lattice).transpose();
    IntMatrix coords(current.rows(), lattice.rows());
    for (Eigen::Index i = 0; i < current.rows(); ++i) {
      auto c = solve(wt, to_rational(IntVector(current.row(i).transpose())));
      if (!c) throw InputError("adapted_basis: chain is not nested");
      for (Eigen::Index k = 0; k < c->size(); ++k) {
        if (!is_integer((*c)(k))) throw InputError("adapted_basis: chain is not nested");
        coords(i, k) = numerator((*c)(k));
      }
    }
    current = unimodular_completion(coords) * lattice;
    out.prefix_ranks.push_back(static_cast<int>(current.rows()));
  }
  if (appended) out.prefix_ranks.pop_back();
  out.basis = current;
  return out;
}

}  // namespace toricmin

#include "toricmin/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricmin::homology {

ChainComplex nerve_chain_complex(const AcyclicCategory& c, int max_deg) {
  if (max_deg < 0) max_deg = c.max_rank();
  ChainComplex cc;
  std::vector<std::vector<std::vector<int>>> chains(1);
  std::vector<std::map<std::vector<int>, int>> index(1);
  for (int x = 0; x < c.object_count(); ++x) {
    chains[0].push_back({x});
    index[0][{x}] = x;
  }
  // degree 1 and up store morphism sequences
  for (int k = 1; k <= max_deg; ++k) {
    chains.emplace_back();
    index.emplace_back();
    if (k == 1) {
      for (int m = 0; m < c.morphism_count(); ++m) chains[1].push_back({m});
    } else {
      for (const auto& ch : chains[k - 1])
        for (int m : c.outgoing(c.target(ch.back()))) {
          auto next = ch;
          next.push_back(m);
          chains[k].push_back(std::move(next));
        }
    }
    for (int i = 0; i < static_cast<int>(chains[k].size()); ++i) index[k][chains[k][i]] = i;
    if (chains[k].empty()) break;
  }
  for (const auto& ch : chains) cc.dims.push_back(static_cast<int>(ch.size()));
  cc.boundary.resize(cc.dims.size());
  for (size_t k = 1; k < chains.size(); ++k) {
    SparseMatrix& b = cc.boundary[k];
    b.rows = cc.dims[k - 1];
    b.cols = cc.dims[k];
    b.columns.resize(b.cols);
    for (int j = 0; j < b.cols; ++j) {
      const auto& ch = chains[k][j];
      std::map<int, Integer> col;
      if (k == 1) {
        col[c.target(ch[0])] += 1;
        col[c.source(ch[0])] -= 1;
      } else {
        const int kk = static_cast<int>(k);
        for (int i = 0; i <= kk; ++i) {
          std::vector<int> face;
          if (i == 0) face.assign(ch.begin() + 1, ch.end());
          else if (i == kk) face.assign(ch.begin(), ch.end() - 1);
          else {
            face.assign(ch.begin(), ch.begin() + (i - 1));
            face.push_back(c.compose(ch[i - 1], ch[i]));
            face.insert(face.end(), ch.begin() + i + 1, ch.end());
          }
          col[index[k - 1].at(face)] += (i % 2 == 0) ? 1 : -1;
        }
      }
      for (auto& [r, v] : col)
        if (v != 0) b.columns[j].push_back({r, v});
    }
  }
  return cc;
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
  for (size_t k = 2; k < cc.boundary.size(); ++k) {
    const SparseMatrix& hi = cc.boundary[k];
    const SparseMatrix& lo = cc.boundary[k - 1];
    for (const auto& col : hi.columns) {
      std::map<int, Integer> acc;
      for (const auto& [r, v] : col)
        for (const auto& [r2, v2] : lo.columns[r]) acc[r2] += v * v2;
      for (const auto& [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

std::vector<Integer> invariant_factors(const SparseMatrix& m) {
  std::vector<std::map<int, Integer>> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[j]) {
      rows[r][j] = v;
      col_rows[j].insert(r);
    }
  std::vector<bool> row_alive(m.rows, true);
  int units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int p = 0; p < m.rows; ++p) {
      if (!row_alive[p] || rows[p].empty()) continue;
      int q = -1;
      size_t best = 0;
      for (const auto& [j, v] : rows[p])
        if ((v == 1 || v == -1) && (q < 0 || col_rows[j].size() < best)) {
          q = j;
          best = col_rows[j].size();
        }
      if (q < 0) continue;
      const Integer a = rows[p].at(q);
      std::vector<int> targets(col_rows[q].begin(), col_rows[q].end());
      for (int r : targets) {
        if (r == p) continue;
        Integer f = rows[r].at(q) * a;
        for (const auto& [j, v] : rows[p]) {
          Integer nv = rows[r][j] - f * v;
          if (nv == 0) {
            rows[r].erase(j);
            col_rows[j].erase(r);
          } else {
            rows[r][j] = nv;
            col_rows[j].insert(r);
          }
        }
      }
      for (const auto& [j, v] : rows[p]) col_rows[j].erase(p);
      rows[p].clear();
      row_alive[p] = false;
      ++units;
      progress = true;
    }
  }
  std::vector<int> live_rows, live_cols;
  std::map<int, int> col_pos;
  for (int p = 0; p < m.rows; ++p)
    if (row_alive[p] && !rows[p].empty()) live_rows.push_back(p);
  for (int j = 0; j < m.cols; ++j)
    if (!col_rows[j].empty()) {
      col_pos[j] = static_cast<int>(live_cols.size());
      live_cols.push_back(j);
    }
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty()) {
    IntMatrix dense = IntMatrix::Zero(static_cast<Eigen::Index>(live_rows.size()),
                                      static_cast<Eigen::Index>(live_cols.size()));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [j, v] : rows[live_rows[i]]) dense(i, col_pos.at(j)) = v;
    for (auto& f : toricmin::invariant_factors(std::move(dense))) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Homology::torsion_free() const {
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

Homology homology(const ChainComplex& cc, int max_deg) {
  const int top = static_cast<int>(cc.dims.size()) - 1;
  if (max_deg < 0 || max_deg > top) max_deg = top;
  std::vector<std::vector<Integer>> factors(cc.dims.size() + 1);
  for (int k = 1; k <= top; ++k) factors[k] = invariant_factors(cc.boundary[k]);
  Homology h;
  for (int k = 0; k <= max_deg; ++k) {
    int rank_out = k >= 1 ? static_cast<int>(factors[k].size()) : 0;
    int rank_in = k + 1 <= top ? static_cast<int>(factors[k + 1].size()) : 0;
    h.betti.push_back(cc.dims[k] - rank_out - rank_in);
    std::vector<Integer> tors;
    if (k + 1 <= top)
      for (const auto& f : factors[k + 1])
        if (f > 1) tors.push_back(f);
    h.torsion.push_back(tors);
  }
  return h;
}

Polynomial::Polynomial(std::vector<Integer> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Polynomial Polynomial::from_ints(const std::vector<int>& c) {
  std::vector<Integer> v;
  for (int x : c) v.push_back(x);
  return Polynomial(v);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Integer> c(std::max(coeffs.size(), o.coeffs.size()), Integer(0));
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
  return Polynomial(c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return Polynomial();
  std::vector<Integer> c(coeffs.size() + o.coeffs.size() - 1, Integer(0));
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
  return Polynomial(c);
}

bool Polynomial::operator==(const Polynomial& o) const { return coeffs == o.coeffs; }

Integer Polynomial::at(const Integer& t) const {
  Integer acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

std::vector<int> Polynomial::to_ints() const {
  std::vector<int> out;
  for (const auto& c : coeffs) out.push_back(static_cast<int>(c));
  return out;
}

std::string Polynomial::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Integer c = coeffs[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (i == 0 || c != 1) out += c.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial one_plus_t_power(int n) {
  Polynomial p({Integer(1)});
  for (int i = 0; i < n; ++i) p = p * Polynomial({Integer(1), Integer(1)});
  return p;
}

}  // namespace toricmin::homology

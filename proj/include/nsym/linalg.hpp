#pragma once

#include <map>
#include <vector>

#include "nsym/rational.hpp"

namespace nsym {

// Row of a linear system with rational coefficients and a right-hand side
// living in any Q-vector space V (polynomials, forms, ...). V must provide
// operator-, scaled(s) for rational s, and is_zero().
template <class V>
struct LinRow {
  std::map<int, Rational> a;
  V rhs;
  int tag = -1;  // caller-provided id, reported on inconsistency
};

template <class V>
struct LinSolution {
  bool consistent = true;
  int bad_row_tag = -1;            // tag of the first inconsistent row
  std::vector<V> x;                // solution with free unknowns set to zero
  std::vector<int> free_cols;      // unknowns not determined by the system
};

// Gauss-Jordan over Q with V-valued right-hand sides. Small dense-ish
// systems only; everything in this project is a few hundred unknowns at most.
template <class V>
LinSolution<V> solve_linear_system(std::vector<LinRow<V>> rows, int ncols, const V& zero) {
  LinSolution<V> out;
  std::vector<int> pivot_row(ncols, -1);
  size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t p = rank;
    while (p < rows.size()) {
      auto it = rows[p].a.find(col);
      if (it != rows[p].a.end() && !it->second.is_zero()) break;
      ++p;
    }
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Rational piv = rows[rank].a[col];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      auto it = rows[r].a.find(col);
      if (it == rows[r].a.end() || it->second.is_zero()) continue;
      Rational f = it->second / piv;
      for (const auto& [c, v] : rows[rank].a) {
        Rational nv = rows[r].a[c] - f * v;
        if (nv.is_zero())
          rows[r].a.erase(c);
        else
          rows[r].a[c] = nv;
      }
      rows[r].rhs = rows[r].rhs - rows[rank].rhs.scaled(f);
    }
    pivot_row[col] = static_cast<int>(rank);
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r) {
    bool allzero = true;
    for (const auto& [c, v] : rows[r].a)
      if (!v.is_zero()) {
        allzero = false;
        break;
      }
    if (allzero && !rows[r].rhs.is_zero()) {
      out.consistent = false;
      out.bad_row_tag = rows[r].tag;
      return out;
    }
  }
  out.x.assign(ncols, zero);
  for (int col = 0; col < ncols; ++col) {
    if (pivot_row[col] < 0) {
      out.free_cols.push_back(col);
      continue;
    }
    const auto& row = rows[pivot_row[col]];
    out.x[col] = row.rhs.scaled(Rational(1) / row.a.at(col));
  }
  return out;
}

// Reduced row echelon form of a dense rational matrix, in place.
// Returns the pivot column of each pivot row.
inline std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t p = rank;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    Rational piv = m[rank][col];
    for (size_t c = col; c < cols; ++c) m[rank][c] /= piv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  return pivots;
}

// Exact nullspace basis of the matrix (rows are equations).
inline std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m,
                                                       size_t ncols) {
  if (m.empty()) {
    std::vector<std::vector<Rational>> basis;
    for (size_t j = 0; j < ncols; ++j) {
      std::vector<Rational> v(ncols);
      v[j] = Rational(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(ncols);
    v[j] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nsym

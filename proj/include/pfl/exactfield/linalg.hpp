#pragma once

#include <vector>

#include "pfl/exactfield/field.hpp"

namespace pfl {

/// Row reduction of a dense matrix (list of rows). Returns the rank; `rows` is left in row
/// echelon form.
template <FieldElement E>
int row_reduce(std::vector<std::vector<E>>& rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const E inv = rows[rank][c].inverse();
    for (auto& v : rows[rank]) v = v * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const E f = rows[r][c];
      for (size_t k = c; k < cols; ++k)
        if (!rows[rank][k].is_zero()) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

template <FieldElement E>
int matrix_rank(std::vector<std::vector<E>> rows) {
  return row_reduce(rows);
}

/// Basis of the solution space of rows * v = 0.
template <FieldElement E>
std::vector<std::vector<E>> kernel_basis(std::vector<std::vector<E>> rows, size_t cols, const E& unit) {
  std::vector<std::vector<E>> out;
  if (rows.empty()) {
    for (size_t c = 0; c < cols; ++c) {
      std::vector<E> v(cols, unit.zero_like());
      v[c] = unit;
      out.push_back(v);
    }
    return out;
  }
  const int rank = row_reduce(rows);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r)
    for (size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero()) {
        pivot_col[r] = static_cast<int>(c);
        is_pivot[c] = true;
        break;
      }
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<E> v(cols, unit.zero_like());
    v[f] = unit;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][f];
    out.push_back(v);
  }
  return out;
}

}  // namespace pfl

#pragma once

#include <vector>

#include "folkit/number_field.hpp"

namespace folkit {

// Basis (as rows) of the right kernel over Q of an m x ncols matrix.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> mat,
                                                   int ncols);

int rational_rank(std::vector<std::vector<Rational>> mat, int ncols);

// Basis of { v in Z^ncols : A v = 0 }, computed by unimodular column
// reduction. The result is a basis of the full (saturated) kernel lattice and
// every basis vector is primitive.
std::vector<std::vector<Integer>> integer_kernel(std::vector<std::vector<Integer>> mat,
                                                 int ncols);

// Row Hermite normal form of the lattice spanned by the given rows: pivots
// positive, zeros below each pivot, entries above reduced into [0, pivot).
// Zero rows are dropped.
std::vector<std::vector<Integer>> hnf_rows(std::vector<std::vector<Integer>> rows, int ncols);

// Right-kernel basis over an arbitrary exact field. F needs +, -, *, /, ==
// and is_zero(); zero and one supply the field context for fresh entries.
template <class F>
std::vector<std::vector<F>> field_kernel(std::vector<std::vector<F>> mat, int ncols,
                                         const F& zero, const F& one) {
  const int nrows = static_cast<int>(mat.size());
  std::vector<int> pivot_of_col(ncols, -1);
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!mat[r][col].is_zero()) { piv = r; break; }
    }
    if (piv < 0) continue;
    std::swap(mat[rank], mat[piv]);
    F lead = mat[rank][col];
    for (int c = col; c < ncols; ++c) mat[rank][c] = mat[rank][c] / lead;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || mat[r][col].is_zero()) continue;
      F factor = mat[r][col];
      for (int c = col; c < ncols; ++c) mat[r][c] = mat[r][c] - factor * mat[rank][c];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::vector<F>> basis;
  for (int col = 0; col < ncols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<F> v(ncols, zero);
    v[col] = one;
    for (int c = 0; c < ncols; ++c) {
      int pr = pivot_of_col[c];
      if (pr >= 0) v[c] = zero - mat[pr][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace folkit

#include "folkit/linalg.hpp"

#include <algorithm>

namespace folkit {

namespace {

// Gauss-Jordan over Q; returns pivot row of each column (-1 for free).
std::vector<int> rref(std::vector<std::vector<Rational>>& mat, int ncols) {
  const int nrows = static_cast<int>(mat.size());
  std::vector<int> pivot_of_col(ncols, -1);
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (mat[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(mat[rank], mat[piv]);
    Rational lead = mat[rank][col];
    for (int c = col; c < ncols; ++c) mat[rank][c] /= lead;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      Rational f = mat[r][col];
      for (int c = col; c < ncols; ++c) mat[r][c] -= f * mat[rank][c];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  return pivot_of_col;
}

}  // namespace

std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> mat,
                                                   int ncols) {
  std::vector<int> pivot_of_col = rref(mat, ncols);
  std::vector<std::vector<Rational>> basis;
  for (int col = 0; col < ncols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[col] = 1;
    for (int c = 0; c < ncols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -mat[pivot_of_col[c]][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rational_rank(std::vector<std::vector<Rational>> mat, int ncols) {
  std::vector<int> pivots = rref(mat, ncols);
  return static_cast<int>(std::count_if(pivots.begin(), pivots.end(),
                                        [](int p) { return p >= 0; }));
}

std::vector<std::vector<Integer>> integer_kernel(std::vector<std::vector<Integer>> mat,
                                                 int ncols) {
  const int nrows = static_cast<int>(mat.size());

  // Column reduction by unimodular transforms, mirrored into u. Columns of u
  // over the zeroed columns of mat are then a basis of the kernel lattice;
  // unimodularity makes it saturated and every column primitive.
  std::vector<std::vector<Integer>> u(ncols, std::vector<Integer>(ncols, 0));
  for (int i = 0; i < ncols; ++i) u[i][i] = 1;

  std::vector<bool> active(ncols, true);
  for (int r = 0; r < nrows; ++r) {
    int pivot = -1;
    for (int c = 0; c < ncols; ++c) {
      if (!active[c] || mat[r][c] == 0) continue;
      if (pivot < 0) { pivot = c; continue; }
      // Combine columns pivot and c so that column c zeroes out in row r.
      Integer a = mat[r][pivot], b = mat[r][c], g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      for (int rr = 0; rr < nrows; ++rr) {
        Integer mp = mat[rr][pivot], mc = mat[rr][c];
        mat[rr][pivot] = x * mp + y * mc;
        mat[rr][c] = -bg * mp + ag * mc;
      }
      for (int rr = 0; rr < ncols; ++rr) {
        Integer up = u[rr][pivot], uc = u[rr][c];
        u[rr][pivot] = x * up + y * uc;
        u[rr][c] = -bg * up + ag * uc;
      }
    }
    if (pivot >= 0) active[pivot] = false;
  }

  std::vector<std::vector<Integer>> basis;
  for (int c = 0; c < ncols; ++c) {
    if (!active[c]) continue;
    std::vector<Integer> v(ncols);
    for (int r = 0; r < ncols; ++r) v[r] = u[r][c];
    // Canonical sign: first nonzero entry positive.
    for (const Integer& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (Integer& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<std::vector<Integer>> hnf_rows(std::vector<std::vector<Integer>> rows, int ncols) {
  const int nrows = static_cast<int>(rows.size());
  int top = 0;
  for (int col = 0; col < ncols && top < nrows; ++col) {
    // Clear the column below `top` with row gcd steps.
    for (int r = top + 1; r < nrows; ++r) {
      while (rows[r][col] != 0) {
        if (rows[top][col] == 0) {
          std::swap(rows[top], rows[r]);
          continue;
        }
        Integer q = rows[r][col] / rows[top][col];  // mpz division truncates toward zero
        for (int c = 0; c < ncols; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) std::swap(rows[top], rows[r]);
      }
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (int c = 0; c < ncols; ++c) rows[top][c] = -rows[top][c];
    // Reduce the entries above the pivot into [0, pivot).
    for (int r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      if (q != 0)
        for (int c = 0; c < ncols; ++c) rows[r][c] -= q * rows[top][c];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

}  // namespace folkit

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "trigstrata/rational.hpp"

namespace trigstrata {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw input_error("matrix dimensions must be positive");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(IntMatrix a) {
  if (a.rows() != a.cols()) throw input_error("determinant of non-square matrix");
  const int n = a.rows();
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int pr = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          pr = i;
          break;
        }
      if (pr < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pr, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

struct SmithResult {
  std::vector<Int> diagonal;  // nonnegative, d_i | d_{i+1}
  IntMatrix left;             // unimodular, rows x rows
  IntMatrix right;            // unimodular, cols x cols
};

// left * M * right = diag(diagonal).
inline SmithResult smith_normal_form(const IntMatrix& m) {
  using boost::multiprecision::abs;
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const int rows = m.rows(), cols = m.cols();

  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (int j = 0; j < rows; ++j) std::swap(left.at(r1, j), left.at(r2, j));
  };
  auto swap_cols = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (int i = 0; i < cols; ++i) std::swap(right.at(i, c1), right.at(i, c2));
  };
  auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < cols; ++j) a.at(dst, j) += f * a.at(src, j);
    for (int j = 0; j < rows; ++j) left.at(dst, j) += f * left.at(src, j);
  };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < rows; ++i) a.at(i, dst) += f * a.at(i, src);
    for (int i = 0; i < cols; ++i) right.at(i, dst) += f * right.at(i, src);
  };
  auto negate_row = [&](int r) {
    for (int j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
    for (int j = 0; j < rows; ++j) left.at(r, j) = -left.at(r, j);
  };

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    // Smallest-magnitude nonzero pivot in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a.at(i, j) != 0 &&
            (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (bool settled = false; !settled;) {
      settled = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        const Int q = a.at(i, t) / a.at(t, t);
        add_row(i, t, -q);
        if (a.at(i, t) != 0) {  // remainder is a strictly smaller pivot
          swap_rows(t, i);
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        const Int q = a.at(t, j) / a.at(t, t);
        add_col(j, t, -q);
        if (a.at(t, j) != 0) {
          swap_cols(t, j);
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      // Force the pivot to divide the rest of the block, so the final
      // diagonal forms a divisibility chain.
      for (int i = t + 1; i < rows && settled; ++i)
        for (int j = t + 1; j < cols && settled; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row(t, i, Int(1));
            settled = false;
          }
    }
    if (a.at(t, t) < 0) negate_row(t);
  }

  SmithResult res{std::vector<Int>(), std::move(left), std::move(right)};
  res.diagonal.reserve(static_cast<size_t>(steps));
  for (int t = 0; t < steps; ++t) res.diagonal.push_back(a.at(t, t));
  return res;
}

}  // namespace trigstrata

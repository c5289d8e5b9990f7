#pragma once

// Smith normal form over the integers with overflow-checked int64 arithmetic.
//
// Pivot rule: the nonzero entry of minimal absolute value in the remaining
// submatrix, ties broken by lowest row, then lowest column. The output is a
// deterministic function of the input.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/checked.hpp"
#include "gammaspace/error.hpp"

namespace gammaspace {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InvalidArgument("Matrix: data has wrong size");
  }
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("Matrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  bool is_zero() const {
    for (auto v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Elementary operations.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row a += k * row b
  void add_row(std::size_t a, std::size_t b, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(b, c) != 0) (*this)(a, c) = checked::fma((*this)(a, c), k, (*this)(b, c));
  }
  /// col a += k * col b
  void add_col(std::size_t a, std::size_t b, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, b) != 0) (*this)(r, a) = checked::fma((*this)(r, a), k, (*this)(r, b));
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(a, c) = checked::neg((*this)(a, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("Matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = checked::fma(c(i, j), aik, b(k, j));
    }
  return c;
}

/// U * A * V = D with U, V unimodular; u_inverse and v_inverse are their
/// inverses. The transforms are only populated when requested.
struct SmithResult {
  Matrix d;
  Matrix u, u_inverse;
  Matrix v, v_inverse;
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<std::int64_t> invariant_factors() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

inline std::int64_t abs64(std::int64_t x) { return x < 0 ? checked::neg(x) : x; }

// Floor-free quotient: a = q*b + r with |r| < |b|, r possibly negative.
inline std::int64_t quotient(std::int64_t a, std::int64_t b) { return a / b; }

class SmithReducer {
 public:
  SmithReducer(const Matrix& a, bool transforms) : transforms_(transforms) {
    res_.d = a;
    if (transforms_) {
      res_.u = res_.u_inverse = Matrix::identity(a.rows());
      res_.v = res_.v_inverse = Matrix::identity(a.cols());
    }
  }

  SmithResult run() {
    Matrix& m = res_.d;
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!move_pivot(t)) break;
      while (true) {
        if (!clear_line(t)) continue;
        // Row and column t are clear; enforce divisibility of the remainder.
        const std::int64_t piv = m(t, t);
        bool divisible = true;
        if (piv == 1 || piv == -1) break;
        for (std::size_t i = t + 1; i < m.rows() && divisible; ++i)
          for (std::size_t j = t + 1; j < m.cols(); ++j)
            if (m(i, j) % piv != 0) {
              row_add(t, i, 1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (m(t, t) < 0) row_negate(t);
    }
    res_.rank = t;
    return std::move(res_);
  }

 private:
  // Brings the minimal nonzero entry of the submatrix at (t, t) into position,
  // ties going to the lowest row, then the lowest column.
  bool move_pivot(std::size_t t) {
    Matrix& m = res_.d;
    std::size_t br = 0, bc = 0;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m.rows() && best != 1; ++i)
      for (std::size_t j = t; j < m.cols(); ++j) {
        const auto v = m(i, j);
        if (v == 0) continue;
        const auto a = abs64(v);
        if (best == 0 || a < best) best = a, br = i, bc = j;
        if (best == 1) break;
      }
    if (best == 0) return false;
    row_swap(t, br);
    col_swap(t, bc);
    return true;
  }

  // Reduces row and column t against the pivot. Returns true when both are
  // clear; otherwise a smaller remainder has been moved into the pivot.
  bool clear_line(std::size_t t) {
    Matrix& m = res_.d;
    const std::int64_t piv = m(t, t);
    bool clean = true;
    for (std::size_t i = t + 1; i < m.rows(); ++i)
      if (m(i, t) != 0) {
        row_add(i, t, checked::neg(quotient(m(i, t), piv)));
        if (m(i, t) != 0) clean = false;
      }
    // Columns left of t are already reduced, so once column t is clear below
    // the pivot a column operation only changes row t of the matrix.
    const bool column_clear = clean;
    for (std::size_t j = t + 1; j < m.cols(); ++j)
      if (m(t, j) != 0) {
        const std::int64_t k = checked::neg(quotient(m(t, j), piv));
        if (column_clear) {
          m(t, j) = checked::fma(m(t, j), k, piv);
          if (transforms_) {
            res_.v.add_col(j, t, k);
            res_.v_inverse.add_row(t, j, checked::neg(k));
          }
        } else {
          col_add(j, t, k);
        }
        if (m(t, j) != 0) clean = false;
      }
    if (clean) return true;
    // Move the smallest nonzero remainder on row/column t into the pivot.
    std::size_t br = t, bc = t;
    std::int64_t best = abs64(piv);
    for (std::size_t i = t + 1; i < m.rows(); ++i)
      if (m(i, t) != 0 && abs64(m(i, t)) < best) best = abs64(m(i, t)), br = i, bc = t;
    for (std::size_t j = t + 1; j < m.cols(); ++j)
      if (m(t, j) != 0 && abs64(m(t, j)) < best) best = abs64(m(t, j)), br = t, bc = j;
    row_swap(t, br);
    col_swap(t, bc);
    return false;
  }

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    res_.d.swap_rows(a, b);
    if (transforms_) {
      res_.u.swap_rows(a, b);
      res_.u_inverse.swap_cols(a, b);
    }
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    res_.d.swap_cols(a, b);
    if (transforms_) {
      res_.v.swap_cols(a, b);
      res_.v_inverse.swap_rows(a, b);
    }
  }
  void row_add(std::size_t a, std::size_t b, std::int64_t k) {
    res_.d.add_row(a, b, k);
    if (transforms_) {
      res_.u.add_row(a, b, k);
      res_.u_inverse.add_col(b, a, checked::neg(k));
    }
  }
  void col_add(std::size_t a, std::size_t b, std::int64_t k) {
    res_.d.add_col(a, b, k);
    if (transforms_) {
      res_.v.add_col(a, b, k);
      res_.v_inverse.add_row(b, a, checked::neg(k));
    }
  }
  void row_negate(std::size_t a) {
    res_.d.negate_row(a);
    if (transforms_) {
      res_.u.negate_row(a);
      for (std::size_t r = 0; r < res_.u_inverse.rows(); ++r)
        res_.u_inverse(r, a) = checked::neg(res_.u_inverse(r, a));
    }
  }

  SmithResult res_;
  bool transforms_;
};

}  // namespace detail

inline SmithResult smith_normal_form(const Matrix& a, bool transforms = true) {
  return detail::SmithReducer(a, transforms).run();
}

/// Certificate check: U A V = D, U Uinv = I, V Vinv = I, D diagonal with the
/// divisibility chain and positive entries. Requires transforms.
inline bool verify_smith(const Matrix& a, const SmithResult& r) {
  if (!(r.u * a * r.v == r.d)) return false;
  if (!(r.u * r.u_inverse == Matrix::identity(a.rows()))) return false;
  if (!(r.v * r.v_inverse == Matrix::identity(a.cols()))) return false;
  for (std::size_t i = 0; i < r.d.rows(); ++i)
    for (std::size_t j = 0; j < r.d.cols(); ++j) {
      const auto v = r.d(i, j);
      if (i != j && v != 0) return false;
      if (i == j && i < r.rank && v <= 0) return false;
      if (i == j && i >= r.rank && v != 0) return false;
    }
  for (std::size_t i = 1; i < r.rank; ++i)
    if (r.d(i, i) % r.d(i - 1, i - 1) != 0) return false;
  return true;
}

}  // namespace gammaspace

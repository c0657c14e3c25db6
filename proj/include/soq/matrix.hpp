#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact rational matrices.
 *
 * Matrix is an immutable value: every operation returns a fresh result.
 * The determinant uses fraction-free (Bareiss) elimination on an integer
 * matrix obtained by clearing row denominators; the inverse uses
 * Gauss-Jordan elimination over Q. In both, the pivot is the nonzero
 * candidate with the fewest bits, which only affects coefficient growth.
 */

#include <soq/error.hpp>
#include <soq/rational.hpp>

#include <cassert>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace soq {

class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw error(errc::dimension_mismatch, "matrix dimensions must be positive");
  }

  /// Row-major entries; entries.size() must equal rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw error(errc::dimension_mismatch, "matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw error(errc::dimension_mismatch, "entry count does not match shape");
  }

  Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : Matrix(from_rows(std::vector<std::vector<Rational>>(rows.begin(), rows.end()))) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty()) throw error(errc::dimension_mismatch, "empty matrix");
    const std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw error(errc::dimension_mismatch, "ragged rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
  }

  /// Fills entry (i, j) with f(i, j).
  static Matrix generate(std::size_t rows, std::size_t cols,
                         const std::function<Rational(std::size_t, std::size_t)>& f) {
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) entries.push_back(f(i, j));
    return Matrix(rows, cols, std::move(entries));
  }

  static Matrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
  }

  static Matrix diagonal(const std::vector<Rational>& diag) {
    return generate(diag.size(), diag.size(),
                    [&](std::size_t i, std::size_t j) { return i == j ? diag[i] : Rational(); });
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(data_).subspan(i * cols_, cols_);
  }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  std::span<const Rational> entries() const noexcept { return data_; }

  /// Top-left k x k block.
  Matrix top_left(std::size_t k) const {
    if (k == 0 || k > rows_ || k > cols_) throw error(errc::dimension_mismatch, "block size out of range");
    return generate(k, k, [&](std::size_t i, std::size_t j) { return (*this)(i, j); });
  }

  /// Largest numerator/denominator bit length over all entries.
  std::size_t max_entry_bits() const {
    std::size_t best = 0;
    for (const auto& x : data_) best = std::max(best, x.height_bits());
    return best;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error(errc::dimension_mismatch, "addition");
  return Matrix::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error(errc::dimension_mismatch, "subtraction");
  return Matrix::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

inline Matrix operator-(const Matrix& a) {
  return Matrix::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return -a(i, j); });
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw error(errc::dimension_mismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<Rational> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out.push_back(std::move(acc));
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(out));
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Matrix mat_transpose(const Matrix& a) {
  return Matrix::generate(a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

namespace detail {

inline Integer lcm(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

/// Index of the nonzero entry in [from, end) with the smallest cost, or end.
template <typename Cost>
std::size_t cheapest_pivot(std::size_t from, std::size_t end, Cost cost) {
  std::size_t best = end;
  std::size_t best_cost = 0;
  for (std::size_t r = from; r < end; ++r) {
    const auto c = cost(r);
    if (!c) continue;
    if (best == end || *c < best_cost) {
      best = r;
      best_cost = *c;
    }
  }
  return best;
}

}  // namespace detail

/// Exact determinant via Bareiss elimination. Row i is scaled by the lcm
/// of its denominators; the product of those scales is divided out at
/// the end.
inline Rational mat_det(const Matrix& a) {
  if (!a.is_square()) throw error(errc::not_square, "determinant");
  const std::size_t n = a.rows();

  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (const auto& x : a.row(i)) row_lcm = detail::lcm(row_lcm, x.den());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).num() * (row_lcm / a(i, j).den());
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = detail::cheapest_pivot(k, n, [&](std::size_t r) -> std::optional<std::size_t> {
      if (m[r][k].is_zero()) return std::nullopt;
      return bit_length(m[r][k]);
    });
    if (p == n) return Rational();
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return Rational(sign * m[n - 1][n - 1], scale);
}

/// Exact inverse by Gauss-Jordan elimination over Q.
inline Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw error(errc::not_square, "inverse");
  const std::size_t n = a.rows();

  std::vector<std::vector<Rational>> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i].assign(a.row(i).begin(), a.row(i).end());
    right[i].assign(n, Rational());
    right[i][i] = Rational(1);
  }

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = detail::cheapest_pivot(k, n, [&](std::size_t r) -> std::optional<std::size_t> {
      if (left[r][k].is_zero()) return std::nullopt;
      return left[r][k].total_bits();
    });
    if (p == n) throw error(errc::singular);
    std::swap(left[p], left[k]);
    std::swap(right[p], right[k]);

    const Rational inv = left[k][k].reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      if (!left[k][j].is_zero()) left[k][j] *= inv;
      if (!right[k][j].is_zero()) right[k][j] *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || left[i][k].is_zero()) continue;
      const Rational f = left[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        if (!left[k][j].is_zero()) left[i][j] -= f * left[k][j];
        if (!right[k][j].is_zero()) right[i][j] -= f * right[k][j];
      }
    }
  }
  Matrix inv = Matrix::from_rows(right);
  assert(mat_mul(a, inv) == Matrix::identity(n));
  return inv;
}

/// n x n matrix with m in the top-left block and identity elsewhere.
inline Matrix embed_topleft(const Matrix& m, std::size_t n) {
  if (!m.is_square()) throw error(errc::not_square, "embed_topleft");
  if (m.rows() > n) {
    throw error(errc::size_exceeds_target, std::to_string(m.rows()) + " > " + std::to_string(n));
  }
  const std::size_t k = m.rows();
  return Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (i < k && j < k) return m(i, j);
    return Rational(i == j ? 1 : 0);
  });
}

/// True iff the last row and last column are both (0, ..., 0, 1).
inline bool has_omega_form(const Matrix& m) {
  if (!m.is_square() || m.rows() < 2) return false;
  const std::size_t last = m.rows() - 1;
  if (m(last, last) != Rational(1)) return false;
  for (std::size_t i = 0; i < last; ++i) {
    if (!m(i, last).is_zero() || !m(last, i).is_zero()) return false;
  }
  return true;
}

/// m * m^T == I exactly.
inline bool is_orthogonal(const Matrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational dot;
      for (std::size_t k = 0; k < n; ++k) dot += m(i, k) * m(j, k);
      if (dot != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

inline bool is_special_orthogonal(const Matrix& m) {
  return is_orthogonal(m) && mat_det(m) == Rational(1);
}

inline bool is_skew_symmetric(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

}  // namespace soq

#pragma once

/**
 * @file factor.hpp
 * @brief Recursive factorization of SO(n, Q) into stereographic blocks.
 *
 * Every O in SO(n, Q) is written as
 *
 *   O = O[y_1] * embed(O[y_2]) * ... * embed(O[y_{n-1}])
 *
 * where y_j has n - j coordinates (or is infinity) and embed() places a
 * smaller rotation in the top-left corner of an n x n identity. The
 * first factor shares its last column with O, so O[y_1]^T * O fixes the
 * last basis vector and the remainder is a rotation of one dimension
 * less.
 */

#include <soq/cayley.hpp>
#include <soq/error.hpp>
#include <soq/matrix.hpp>
#include <soq/rational.hpp>
#include <soq/sphere.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace soq {

/// Parameter levels of a factorization; level j (zero-based) has length
/// n - 1 - j.
class FactorChain {
 public:
  FactorChain(std::size_t dim, std::vector<ExtParam> levels) : dim_(dim), levels_(std::move(levels)) {
    if (dim_ < 2) throw error(errc::malformed_chain, "dimension must be at least 2");
    if (levels_.size() != dim_ - 1) {
      throw error(errc::malformed_chain, "expected " + std::to_string(dim_ - 1) + " levels, got " +
                                             std::to_string(levels_.size()));
    }
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      if (levels_[j].size() != dim_ - 1 - j) {
        throw error(errc::malformed_chain, "level " + std::to_string(j) + " has length " +
                                               std::to_string(levels_[j].size()) + ", expected " +
                                               std::to_string(dim_ - 1 - j));
      }
    }
  }

  /// All levels zero; composes to the identity.
  static FactorChain zero(std::size_t dim) {
    std::vector<ExtParam> levels;
    for (std::size_t j = 0; j + 1 < dim; ++j) levels.emplace_back(StereoCoords::zero(dim - 1 - j));
    return FactorChain(dim, std::move(levels));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExtParam>& levels() const noexcept { return levels_; }

  /// Number of scalar parameter slots, n(n-1)/2.
  std::size_t slot_count() const noexcept {
    std::size_t total = 0;
    for (const auto& l : levels_) total += l.size();
    return total;
  }

  friend bool operator==(const FactorChain&, const FactorChain&) = default;

 private:
  std::size_t dim_;
  std::vector<ExtParam> levels_;
};

/// The n x n factors of the product, in multiplication order.
inline std::vector<Matrix> chain_factors(const FactorChain& chain) {
  std::vector<Matrix> out;
  out.reserve(chain.levels().size());
  for (const auto& level : chain.levels()) out.push_back(embed_topleft(rotation_from_params(level), chain.dim()));
  return out;
}

inline Matrix compose(const FactorChain& chain) {
  Matrix acc = Matrix::identity(chain.dim());
  for (const auto& level : chain.levels()) acc = acc * embed_topleft(rotation_from_params(level), chain.dim());
  return acc;
}

/// compose() with each finite factor built as cayley_transform(A[y])
/// instead of the closed form. Same result, slower; used for cross-checks
/// and benchmarking.
inline Matrix compose_via_cayley(const FactorChain& chain) {
  Matrix acc = Matrix::identity(chain.dim());
  for (const auto& level : chain.levels()) {
    const Matrix block = level.is_infinite() ? infinity_rotation(level.size() + 1)
                                             : cayley_transform(skew_param_matrix(level.finite()));
    acc = acc * embed_topleft(block, chain.dim());
  }
  return acc;
}

/// Single peeling step: returns the level for o's last column and the
/// residual rotation of size n - 1.
inline std::pair<ExtParam, Matrix> peel(const Matrix& o) {
  const std::size_t n = o.rows();
  const SpherePoint last_col(o.column(n - 1));
  ExtParam level = stereo_forward_ext(last_col);
  const Matrix omega = mat_transpose(rotation_from_params(level)) * o;
  if (!has_omega_form(omega)) {
    throw error(errc::internal_invariant_violation, "residual factor lost its block form at size " + std::to_string(n));
  }
  return {std::move(level), omega.top_left(n - 1)};
}

inline FactorChain decompose(const Matrix& o) {
  if (!o.is_square() || o.rows() < 2) throw error(errc::not_special_orthogonal, "need a square matrix of size >= 2");
  if (!is_special_orthogonal(o)) throw error(errc::not_special_orthogonal);

  std::vector<ExtParam> levels;
  levels.reserve(o.rows() - 1);
  Matrix rest = o;
  while (rest.rows() >= 2) {
    auto [level, next] = peel(rest);
    levels.push_back(std::move(level));
    rest = std::move(next);
  }
  if (rest(0, 0) != Rational(1)) {
    throw error(errc::internal_invariant_violation, "1x1 residual is " + rest(0, 0).to_string());
  }
  return FactorChain(o.rows(), std::move(levels));
}

struct DotFailure {
  std::size_t first;
  std::size_t second;
  Rational dot;
};

/// Diagnostics for a square matrix against the SO(n) conditions.
struct VerifyReport {
  std::size_t dim = 0;
  bool orthogonal = false;
  Rational det;
  bool special = false;
  /// Squared norm of each column.
  std::vector<Rational> column_norms;
  std::vector<bool> unit_columns;
  /// Column pairs (i < j) with nonzero dot product.
  std::vector<DotFailure> dot_failures;
  /// Last row and column equal to the last standard basis vector.
  bool omega_form = false;
};

inline VerifyReport verify_report(const Matrix& o) {
  if (!o.is_square()) throw error(errc::not_square, "verify");
  const std::size_t n = o.rows();
  VerifyReport r;
  r.dim = n;
  std::vector<std::vector<Rational>> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(o.column(j));

  for (std::size_t j = 0; j < n; ++j) {
    r.column_norms.push_back(squared_norm(cols[j]));
    r.unit_columns.push_back(r.column_norms.back() == Rational(1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational dot;
      for (std::size_t k = 0; k < n; ++k) dot += cols[i][k] * cols[j][k];
      if (!dot.is_zero()) r.dot_failures.push_back({i, j, dot});
    }
  }
  r.orthogonal = r.dot_failures.empty();
  for (const bool u : r.unit_columns) r.orthogonal = r.orthogonal && u;
  r.det = mat_det(o);
  r.special = r.orthogonal && r.det == Rational(1);
  r.omega_form = has_omega_form(o);
  return r;
}

}  // namespace soq

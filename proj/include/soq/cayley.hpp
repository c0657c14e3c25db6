#pragma once

/**
 * @file cayley.hpp
 * @brief Cayley transform O = (1 + A)(1 - A)^{-1}, its inverse, and the
 * closed-form rotation O[y] built from stereographic parameters.
 *
 * O[y] is the Cayley image of the bordered skew matrix A[y] whose only
 * nonzero entries are the last column (y, 0) and the last row (-y, 0).
 * rotation_from_params evaluates it entry by entry without elimination;
 * cayley_transform(skew_param_matrix(y)) is the independent route used
 * to cross-check it.
 */

#include <soq/error.hpp>
#include <soq/matrix.hpp>
#include <soq/rational.hpp>
#include <soq/sphere.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace soq {

/// A rational point (alpha, beta) on the unit circle.
class PlanarUnit {
 public:
  PlanarUnit(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ * alpha_ + beta_ * beta_ != Rational(1)) throw error(errc::not_unit_norm, "planar unit");
  }

  /// (alpha, beta) from the circle's stereographic parameter t.
  static PlanarUnit from_param(const Rational& t) {
    const SpherePoint p = stereo_inverse(StereoCoords({t}));
    return PlanarUnit(p[1], p[0]);
  }

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }

 private:
  Rational alpha_;
  Rational beta_;
};

/// The n x n bordered skew matrix A[y], n = y.size() + 1.
inline Matrix skew_param_matrix(const StereoCoords& y) {
  const std::size_t n = y.size() + 1;
  const std::size_t last = n - 1;
  return Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (j == last && i < last) return y[i];
    if (i == last && j < last) return -y[j];
    return Rational();
  });
}

/// (1 + A)(1 - A)^{-1} for skew-symmetric A.
inline Matrix cayley_transform(const Matrix& a) {
  if (!is_skew_symmetric(a)) throw error(errc::not_skew_symmetric);
  const Matrix id = Matrix::identity(a.rows());
  Matrix inv = [&] {
    try {
      return mat_inverse(id - a);
    } catch (const error& e) {
      if (e.code() != errc::singular) throw;
      // 1 - A has no kernel when A is skew: its eigenvalues are 1 - i*t.
      throw error(errc::internal_invariant_violation, "1 - A singular for skew-symmetric A");
    }
  }();
  return (id + a) * inv;
}

/// (O - 1)(O + 1)^{-1}. Fails with cayley_undefined when O has eigenvalue -1.
inline Matrix cayley_inverse(const Matrix& o) {
  if (!o.is_square()) throw error(errc::not_square, "cayley_inverse");
  const Matrix id = Matrix::identity(o.rows());
  const Matrix plus = o + id;
  if (mat_det(plus).is_zero()) throw error(errc::cayley_undefined);
  return (o - id) * mat_inverse(plus);
}

/// Identity with the last two diagonal entries replaced by -1; the
/// rotation attached to the south pole. n >= 2.
inline Matrix infinity_rotation(std::size_t n) {
  if (n < 2) throw error(errc::dimension_mismatch, "infinity rotation needs n >= 2");
  return Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (i != j) return Rational();
    return Rational(i + 2 >= n ? -1 : 1);
  });
}

/// O[y] from closed forms. With D = 1 + |y|^2:
///   column n:           stereo_inverse(y)
///   column k < n, row k: 1 - 2 y_k^2 / D
///   column k, row s:     -2 y_k y_s / D   (s != k, s < n)
///   column k, row n:     -2 y_k / D
inline Matrix rotation_from_params(const StereoCoords& y) {
  const std::size_t n = y.size() + 1;
  const std::size_t last = n - 1;
  const Rational two_over_d = Rational(2) / y.denominator();
  const SpherePoint e_last = stereo_inverse(y);

  std::vector<Rational> scaled(y.size());  // 2 y_k / D
  for (std::size_t k = 0; k < y.size(); ++k) scaled[k] = y[k] * two_over_d;

  return Matrix::generate(n, n, [&](std::size_t s, std::size_t k) {
    if (k == last) return e_last[s];
    if (s == last) return -scaled[k];
    if (s == k) return Rational(1) - scaled[k] * y[k];
    return -(scaled[k] * y[s]);
  });
}

inline Matrix rotation_from_params(const ExtParam& p) {
  if (p.is_infinite()) return infinity_rotation(p.size() + 1);
  return rotation_from_params(p.finite());
}

/// Rotation by (alpha, beta) in the (p, q) coordinate plane of Q^n;
/// indices are zero-based with p < q < n.
inline Matrix elementary_rotation(std::size_t p, std::size_t q, const PlanarUnit& u, std::size_t n) {
  if (!(p < q && q < n)) {
    throw error(errc::bad_plane_indices,
                "p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n));
  }
  return Matrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if ((i == p && j == p) || (i == q && j == q)) return u.alpha();
    if (i == p && j == q) return -u.beta();
    if (i == q && j == p) return u.beta();
    return Rational(i == j ? 1 : 0);
  });
}

}  // namespace soq

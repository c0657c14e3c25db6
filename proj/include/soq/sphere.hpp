#pragma once

/**
 * @file sphere.hpp
 * @brief Stereographic projection between the rational unit sphere and
 * the equatorial hyperplane, taken from the south pole (0, ..., 0, -1).
 *
 *   forward:  y_s = x_s / (1 + x_n),                s = 1..n-1
 *   inverse:  D = 1 + sum y_i^2,
 *             x_n = (1 - sum y_i^2) / D,  x_s = 2 y_s / D
 *
 * Both directions are rational, so rational points correspond exactly.
 * The south pole itself is paired with the parameter "infinity".
 */

#include <soq/error.hpp>
#include <soq/rational.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace soq {

/// Sum of squares, exact.
inline Rational squared_norm(const std::vector<Rational>& v) {
  Rational acc;
  for (const auto& x : v) acc += x * x;
  return acc;
}

/// A point with exact unit norm in Q^n, n >= 2. Validated on construction.
class SpherePoint {
 public:
  explicit SpherePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw error(errc::dimension_mismatch, "sphere point needs at least 2 coordinates");
    if (squared_norm(coords_) != Rational(1)) throw error(errc::not_unit_norm);
  }

  static SpherePoint south_pole(std::size_t n) {
    std::vector<Rational> c(n);
    if (n > 0) c.back() = Rational(-1);
    return SpherePoint(std::move(c));
  }

  static SpherePoint north_pole(std::size_t n) {
    std::vector<Rational> c(n);
    if (n > 0) c.back() = Rational(1);
    return SpherePoint(std::move(c));
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_south_pole() const { return coords_.back() == Rational(-1); }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Coordinates (y_1, ..., y_{n-1}) on the equatorial hyperplane.
class StereoCoords {
 public:
  explicit StereoCoords(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw error(errc::dimension_mismatch, "stereographic coordinates need length >= 1");
  }

  static StereoCoords zero(std::size_t length) { return StereoCoords(std::vector<Rational>(length)); }

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// 1 + sum y_i^2; never zero.
  Rational denominator() const { return Rational(1) + squared_norm(coords_); }

  friend bool operator==(const StereoCoords&, const StereoCoords&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Stereographic parameter extended by the point at infinity. Infinity
/// keeps its ambient length n-1 so chain shapes stay checkable.
class ExtParam {
 public:
  struct Infinity {
    std::size_t length;
    friend bool operator==(const Infinity&, const Infinity&) = default;
  };

  ExtParam(StereoCoords finite) : value_(std::move(finite)) {}  // NOLINT(google-explicit-constructor)

  static ExtParam infinity(std::size_t length) {
    if (length == 0) throw error(errc::dimension_mismatch, "infinity parameter needs length >= 1");
    return ExtParam(Infinity{length});
  }

  bool is_infinite() const noexcept { return std::holds_alternative<Infinity>(value_); }

  /// n - 1, where n is the size of the rotation this parameter describes.
  std::size_t size() const noexcept {
    if (const auto* inf = std::get_if<Infinity>(&value_)) return inf->length;
    return std::get<StereoCoords>(value_).size();
  }

  /// Precondition: !is_infinite().
  const StereoCoords& finite() const { return std::get<StereoCoords>(value_); }

  friend bool operator==(const ExtParam&, const ExtParam&) = default;

 private:
  explicit ExtParam(Infinity inf) : value_(inf) {}

  std::variant<StereoCoords, Infinity> value_;
};

/// y_s = x_s / (1 + x_n). Throws south_pole when x_n = -1.
inline StereoCoords stereo_forward(const SpherePoint& x) {
  if (x.is_south_pole()) throw error(errc::south_pole);
  const std::size_t n = x.dim();
  const Rational scale = (Rational(1) + x[n - 1]).reciprocal();
  std::vector<Rational> y;
  y.reserve(n - 1);
  for (std::size_t s = 0; s + 1 < n; ++s) y.push_back(x[s] * scale);
  return StereoCoords(std::move(y));
}

/// Point whose stereographic coordinates are y. Total on Q^{n-1}.
inline SpherePoint stereo_inverse(const StereoCoords& y) {
  const Rational sum = squared_norm(y.coords());
  const Rational inv_d = (Rational(1) + sum).reciprocal();
  std::vector<Rational> x;
  x.reserve(y.size() + 1);
  for (const auto& ys : y.coords()) x.push_back(Rational(2) * ys * inv_d);
  x.push_back((Rational(1) - sum) * inv_d);
  return SpherePoint(std::move(x));
}

/// stereo_forward with the south pole mapped to Infinity.
inline ExtParam stereo_forward_ext(const SpherePoint& x) {
  if (x.is_south_pole()) return ExtParam::infinity(x.dim() - 1);
  return stereo_forward(x);
}

}  // namespace soq

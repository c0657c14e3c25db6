#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * A Rational is always stored in canonical form: the denominator is
 * positive, numerator and denominator are coprime, and zero is 0/1.
 * Canonicalization happens in the constructor, so structural equality
 * of (num, den) is value equality everywhere.
 */

#include <soq/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace soq {

using Integer = boost::multiprecision::cpp_int;

/// Number of bits in |v|; zero has bit length 0.
inline std::size_t bit_length(const Integer& v) {
  if (v.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral I>
  Rational(I value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error(errc::zero_denominator);
    normalize();
  }

  template <std::integral I, std::integral J>
  Rational(I num, J den) : Rational(Integer(num), Integer(den)) {}

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  /// Bit length of the larger of |num| and den.
  std::size_t height_bits() const {
    return std::max(bit_length(num_), bit_length(den_));
  }

  /// Bits needed for numerator plus denominator; used as a pivot cost.
  std::size_t total_bits() const { return bit_length(num_) + bit_length(den_); }

  Rational reciprocal() const {
    if (is_zero()) throw error(errc::division_by_zero);
    return Rational(den_, num_);
  }

  /// Canonical textual form: "p" when the denominator is 1, else "p/q".
  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Accepts "p", "p/q", optional signs on either part, any unreduced
  /// fraction. Surrounding whitespace is not allowed.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den.is_zero()) throw error(errc::zero_denominator, std::string(text));
    return Rational(parse_integer(text.substr(0, slash)), std::move(den));
  }

  /// Exact parse of a decimal literal such as "0.125" or "-3". Also
  /// accepts anything Rational::parse accepts.
  static Rational parse_decimal(std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse(text);
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw error(errc::parse_error, std::string(text));
    digits.append(frac);
    if (digits.empty() || digits == "-" || digits == "+")
      throw error(errc::parse_error, std::string(text));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(parse_integer(digits), std::move(scale));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    // Cross-reduce first so the product is already coprime.
    const Integer g1 = gcd(a.num_, b.den_);
    const Integer g2 = gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw error(errc::division_by_zero);
    return a * b.reciprocal();
  }
  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::abs(boost::multiprecision::gcd(a, b));
  }

  static Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) throw error(errc::parse_error, "empty integer in '" + std::string(text) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (c < '0' || c > '9') throw error(errc::parse_error, "bad digit in '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
  }

  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const Integer g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

}  // namespace soq

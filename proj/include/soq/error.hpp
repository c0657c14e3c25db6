#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace soq {

/// Failure categories raised by the library. Every throw site uses
/// soq::error with one of these codes.
enum class errc {
  zero_denominator,
  division_by_zero,
  dimension_mismatch,
  not_square,
  singular,
  size_exceeds_target,
  not_unit_norm,
  south_pole,
  not_skew_symmetric,
  cayley_undefined,
  bad_plane_indices,
  malformed_chain,
  not_special_orthogonal,
  internal_invariant_violation,
  parse_error,
  invalid_config,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::zero_denominator: return "zero denominator";
    case errc::division_by_zero: return "division by zero";
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::not_square: return "matrix is not square";
    case errc::singular: return "matrix is singular";
    case errc::size_exceeds_target: return "block size exceeds target size";
    case errc::not_unit_norm: return "point is not on the unit sphere";
    case errc::south_pole: return "point is the south pole";
    case errc::not_skew_symmetric: return "matrix is not skew-symmetric";
    case errc::cayley_undefined: return "inverse Cayley transform undefined (det(O+1) = 0)";
    case errc::bad_plane_indices: return "bad plane indices";
    case errc::malformed_chain: return "malformed factor chain";
    case errc::not_special_orthogonal: return "not special orthogonal";
    case errc::internal_invariant_violation: return "internal invariant violation";
    case errc::parse_error: return "parse error";
    case errc::invalid_config: return "invalid configuration";
  }
  return "unknown error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                          : std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  explicit error(errc code) : error(code, std::string()) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace soq

#pragma once

/**
 * @file generate.hpp
 * @brief Seeded random rational parameters, factor chains and rotations.
 *
 * The generator is std::mt19937_64 (fully specified by the C++ standard)
 * and integers in a range are drawn by rejection, never through
 * std::uniform_int_distribution, whose algorithm is implementation
 * defined. Given a seed, every output is therefore identical on every
 * platform.
 *
 * Draw order for sample_chain, level by level from the largest:
 *   1. if 0 < inf_weight: one draw u in [0, q) with inf_weight = p/q;
 *      the level is infinity iff u < p.
 *   2. for a finite level, slot by slot: numerator in [-B, B], then
 *      denominator in [1, B].
 * With B = 0 nothing is drawn and every level is zero.
 */

#include <soq/error.hpp>
#include <soq/factor.hpp>
#include <soq/matrix.hpp>
#include <soq/rational.hpp>
#include <soq/sphere.hpp>

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace soq {

struct GenConfig {
  std::size_t dim = 3;
  std::uint64_t bound = 10;
  Rational inf_weight;  // probability of an infinity level, in [0, 1)
  std::uint64_t seed = 0;

  void validate() const {
    if (dim < 2) throw error(errc::invalid_config, "dim must be at least 2");
    if (inf_weight.sign() < 0 || inf_weight >= Rational(1))
      throw error(errc::invalid_config, "inf_weight must lie in [0, 1)");
    if (bound > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw error(errc::invalid_config, "bound too large");
  }
};

/// Explicit random stream; copyable so a state can be replayed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, range), range >= 1.
  std::uint64_t below(std::uint64_t range) {
    // Reject the top 2^64 mod range values so every residue is equally likely.
    const std::uint64_t threshold = (0 - range) % range;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % range;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
  }

 private:
  std::mt19937_64 engine_;
};

inline Rational sample_rational(const GenConfig& cfg, Rng& rng) {
  if (cfg.bound == 0) return Rational();
  const auto b = static_cast<std::int64_t>(cfg.bound);
  const std::int64_t num = rng.between(-b, b);
  const std::int64_t den = rng.between(1, b);
  return Rational(num, den);
}

inline bool sample_infinity(const GenConfig& cfg, Rng& rng) {
  if (cfg.bound == 0 || cfg.inf_weight.is_zero()) return false;
  const Integer& p = cfg.inf_weight.num();
  const Integer& q = cfg.inf_weight.den();
  if (q > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw error(errc::invalid_config, "inf_weight denominator exceeds 64 bits");
  return Integer(rng.below(static_cast<std::uint64_t>(q))) < p;
}

inline StereoCoords sample_coords(const GenConfig& cfg, std::size_t length, Rng& rng) {
  std::vector<Rational> y;
  y.reserve(length);
  for (std::size_t i = 0; i < length; ++i) y.push_back(sample_rational(cfg, rng));
  return StereoCoords(std::move(y));
}

inline FactorChain sample_chain(const GenConfig& cfg, Rng& rng) {
  cfg.validate();
  std::vector<ExtParam> levels;
  levels.reserve(cfg.dim - 1);
  for (std::size_t j = 0; j + 1 < cfg.dim; ++j) {
    const std::size_t length = cfg.dim - 1 - j;
    if (sample_infinity(cfg, rng)) {
      levels.push_back(ExtParam::infinity(length));
    } else {
      levels.emplace_back(sample_coords(cfg, length, rng));
    }
  }
  return FactorChain(cfg.dim, std::move(levels));
}

inline Matrix random_rotation(const GenConfig& cfg, Rng& rng) { return compose(sample_chain(cfg, rng)); }

/// Stream for the index-th item of a batch: seeded with seed + index.
inline Rng item_stream(const GenConfig& cfg, std::uint64_t index) { return Rng(cfg.seed + index); }

}  // namespace soq

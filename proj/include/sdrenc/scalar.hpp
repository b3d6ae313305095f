#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sdrenc/errors.hpp"
#include "sdrenc/hash.hpp"
#include "sdrenc/sdr.hpp"
#include "sdrenc/validation.hpp"

namespace sdrenc {

struct ScalarEncoderConfig {
  double min = 0.0;
  double max = 1.0;
  std::size_t n = 100;
  std::size_t w = 21;

  // Width of one bucket; min maps to bucket 0 and max to bucket n - w.
  double resolution() const { return (max - min) / static_cast<double>(n - w); }

  friend bool operator==(const ScalarEncoderConfig&, const ScalarEncoderConfig&) = default;
};

struct CyclicEncoderConfig {
  double period = 1.0;
  std::size_t n = 100;
  std::size_t w = 21;

  double resolution() const { return period / static_cast<double>(n); }

  friend bool operator==(const CyclicEncoderConfig&, const CyclicEncoderConfig&) = default;
};

// Bounded scalar encoder applied to the change between consecutive inputs;
// min/max describe the expected range of that change.
struct DeltaEncoderConfig {
  ScalarEncoderConfig inner;

  friend bool operator==(const DeltaEncoderConfig&, const DeltaEncoderConfig&) = default;
};

struct UnboundedScalarEncoderConfig {
  double resolution = 1.0;
  std::size_t n = 1000;
  std::size_t w = 21;
  std::uint64_t seed = 0;

  friend bool operator==(const UnboundedScalarEncoderConfig&, const UnboundedScalarEncoderConfig&) = default;
};

namespace detail {

inline void check_active_bits(Findings& out, std::size_t n, std::size_t w) {
  if (n == 0) out.push_back({Severity::error, "n", "n must be positive"});
  if (w == 0) out.push_back({Severity::error, "w", "w must be at least 1"});
  if (w > n) out.push_back({Severity::error, "w", "w=" + std::to_string(w) + " exceeds n=" + std::to_string(n)});
}

inline void require_finite(double v) {
  if (!std::isfinite(v)) throw InputError("input value must be finite");
}

}  // namespace detail

inline Findings validate(const ScalarEncoderConfig& cfg) {
  Findings out;
  detail::check_active_bits(out, cfg.n, cfg.w);
  if (!std::isfinite(cfg.min) || !std::isfinite(cfg.max)) {
    out.push_back({Severity::error, "min", "range bounds must be finite"});
  } else if (!(cfg.min < cfg.max)) {
    out.push_back({Severity::error, "max", "empty range: min must be below max"});
  }
  if (cfg.w >= 1 && cfg.w == cfg.n) {
    out.push_back({Severity::error, "w", "n - w must be at least 1"});
  }
  if (!has_errors(out) && !(cfg.resolution() > 0.0 && std::isfinite(cfg.resolution()))) {
    out.push_back({Severity::error, "resolution", "derived resolution must be positive"});
  }
  detail::size_guidance(out, cfg.n, cfg.w, true);
  return out;
}

inline Findings validate(const CyclicEncoderConfig& cfg) {
  Findings out;
  detail::check_active_bits(out, cfg.n, cfg.w);
  if (!(cfg.period > 0.0) || !std::isfinite(cfg.period)) {
    out.push_back({Severity::error, "period", "period must be positive and finite"});
  }
  detail::size_guidance(out, cfg.n, cfg.w, true);
  return out;
}

inline Findings validate(const DeltaEncoderConfig& cfg) { return validate(cfg.inner); }

inline Findings validate(const UnboundedScalarEncoderConfig& cfg) {
  Findings out;
  detail::check_active_bits(out, cfg.n, cfg.w);
  if (!(cfg.resolution > 0.0) || !std::isfinite(cfg.resolution)) {
    out.push_back({Severity::error, "resolution", "resolution must be positive and finite"});
  }
  detail::size_guidance(out, cfg.n, cfg.w, true);
  return out;
}

/// Bounded scalar encoder: w contiguous bits starting at the value's bucket.
/// Values outside [min, max] clamp to the end representations.
class ScalarEncoder {
 public:
  explicit ScalarEncoder(ScalarEncoderConfig cfg) : cfg_(cfg) {
    detail::throw_on_errors(validate(cfg_));
    resolution_ = cfg_.resolution();
  }

  const ScalarEncoderConfig& config() const noexcept { return cfg_; }
  std::size_t size() const noexcept { return cfg_.n; }

  std::size_t bucket(double v) const {
    detail::require_finite(v);
    const double clamped = std::clamp(v, cfg_.min, cfg_.max);
    const double b = std::floor((clamped - cfg_.min) / resolution_);
    const auto last = static_cast<double>(cfg_.n - cfg_.w);
    return static_cast<std::size_t>(std::clamp(b, 0.0, last));
  }

  Sdr encode(double v) const { return encode_bucket(bucket(v)); }

  Sdr encode_bucket(std::size_t b) const {
    std::vector<Sdr::Index> active(cfg_.w);
    for (std::size_t i = 0; i < cfg_.w; ++i) active[i] = static_cast<Sdr::Index>(b + i);
    return Sdr(cfg_.n, std::move(active));
  }

 private:
  ScalarEncoderConfig cfg_;
  double resolution_ = 0.0;
};

/// Wrapping scalar encoder for periodic quantities (day of week, hour of day).
/// The window starts at the value's bucket and wraps past bit n-1 to bit 0.
class CyclicEncoder {
 public:
  explicit CyclicEncoder(CyclicEncoderConfig cfg) : cfg_(cfg) {
    detail::throw_on_errors(validate(cfg_));
    resolution_ = cfg_.resolution();
  }

  const CyclicEncoderConfig& config() const noexcept { return cfg_; }
  std::size_t size() const noexcept { return cfg_.n; }

  std::size_t bucket(double v) const {
    detail::require_finite(v);
    const double phase = std::fmod(std::fmod(v, cfg_.period) + cfg_.period, cfg_.period);
    const auto b = static_cast<std::size_t>(std::floor(phase / resolution_));
    return b % cfg_.n;
  }

  Sdr encode(double v) const {
    const auto b = bucket(v);
    std::vector<Sdr::Index> active(cfg_.w);
    for (std::size_t i = 0; i < cfg_.w; ++i) active[i] = static_cast<Sdr::Index>((b + i) % cfg_.n);
    return Sdr::from_unsorted(cfg_.n, std::move(active));
  }

 private:
  CyclicEncoderConfig cfg_;
  double resolution_ = 0.0;
};

/// Encodes the difference from the previous input. The first input encodes a
/// delta of 0. One instance per input stream; not safe for concurrent use.
class DeltaEncoder {
 public:
  explicit DeltaEncoder(DeltaEncoderConfig cfg) : inner_(cfg.inner) {}

  DeltaEncoderConfig config() const { return {inner_.config()}; }
  std::size_t size() const noexcept { return inner_.size(); }
  std::optional<double> previous() const noexcept { return previous_; }

  Sdr encode(double v) {
    detail::require_finite(v);
    const double delta = previous_ ? v - *previous_ : 0.0;
    detail::require_finite(delta);
    auto out = inner_.encode(delta);
    previous_ = v;
    return out;
  }

  void reset() noexcept { previous_.reset(); }

 private:
  ScalarEncoder inner_;
  std::optional<double> previous_;
};

/// Scalar encoder without range bounds: each of the w consecutive buckets
/// starting at floor(v / resolution) is hashed to a bit. Buckets d apart share
/// w - d hashed buckets; collisions can drop the bit count below w.
class UnboundedScalarEncoder {
 public:
  explicit UnboundedScalarEncoder(UnboundedScalarEncoderConfig cfg) : cfg_(cfg) { detail::throw_on_errors(validate(cfg_)); }

  const UnboundedScalarEncoderConfig& config() const noexcept { return cfg_; }
  std::size_t size() const noexcept { return cfg_.n; }

  std::int64_t bucket(double v) const {
    detail::require_finite(v);
    const double q = std::floor(v / cfg_.resolution);
    // 2^63 is exactly representable; anything at or beyond it does not fit.
    constexpr double limit = 9223372036854775808.0;
    if (!(q >= -limit && q < limit)) throw RangeError("bucket index of " + std::to_string(v) + " overflows 64 bits");
    const auto b = static_cast<std::int64_t>(q);
    if (b > std::numeric_limits<std::int64_t>::max() - static_cast<std::int64_t>(cfg_.w - 1)) {
      throw RangeError("bucket window of " + std::to_string(v) + " overflows 64 bits");
    }
    return b;
  }

  Sdr encode(double v) const { return encode_bucket(bucket(v)); }

  Sdr encode_bucket(std::int64_t b) const {
    std::vector<Sdr::Index> active(cfg_.w);
    for (std::size_t i = 0; i < cfg_.w; ++i) {
      active[i] = coordinate_hash(bucket_cell(b + static_cast<std::int64_t>(i)), cfg_.seed, cfg_.n).bit_index;
    }
    return Sdr::from_unsorted(cfg_.n, std::move(active));
  }

 private:
  UnboundedScalarEncoderConfig cfg_;
};

}  // namespace sdrenc

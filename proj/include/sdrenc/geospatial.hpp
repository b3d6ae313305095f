#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sdrenc/errors.hpp"
#include "sdrenc/hash.hpp"
#include "sdrenc/sdr.hpp"
#include "sdrenc/validation.hpp"

namespace sdrenc {

enum class GeoVariant { fixed, topw };

struct GeoEncoderConfig {
  std::size_t n = 2048;
  // Bits selected by the top-w variant. The fixed variant uses the whole
  // (2R+1)^2 neighborhood instead, see active_bits().
  std::size_t w = 41;
  int radius = 2;
  std::uint64_t seed = 0;
  double speed_scale = 0.0;
  int radius_min = 2;
  int radius_max = 2;
  GeoVariant variant = GeoVariant::fixed;
  // Meters per cell when inputs are lat/lon; unset means inputs are grid cells.
  std::optional<double> cell_size;

  std::size_t active_bits() const {
    if (variant == GeoVariant::topw) return w;
    const auto side = static_cast<std::size_t>(2 * radius + 1);
    return side * side;
  }

  friend bool operator==(const GeoEncoderConfig&, const GeoEncoderConfig&) = default;
};

constexpr std::size_t neighborhood_size(int radius) noexcept {
  const auto side = static_cast<std::size_t>(2 * static_cast<std::int64_t>(radius) + 1);
  return side * side;
}

inline Findings validate(const GeoEncoderConfig& cfg) {
  Findings out;
  if (cfg.n == 0) out.push_back({Severity::error, "n", "n must be positive"});
  if (cfg.radius < 0) out.push_back({Severity::error, "radius", "radius must be non-negative"});
  if (cfg.radius_min < 0) out.push_back({Severity::error, "radius_min", "radius_min must be non-negative"});
  if (cfg.radius_min > cfg.radius_max) out.push_back({Severity::error, "radius_max", "radius_min exceeds radius_max"});
  if (!std::isfinite(cfg.speed_scale) || cfg.speed_scale < 0.0) {
    out.push_back({Severity::error, "speed_scale", "speed_scale must be finite and non-negative"});
  }
  if (cfg.cell_size && !(*cfg.cell_size > 0.0 && std::isfinite(*cfg.cell_size))) {
    out.push_back({Severity::error, "cell_size", "cell_size must be positive"});
  }
  if (cfg.variant == GeoVariant::topw && cfg.radius >= 0 && cfg.radius_min >= 0) {
    const auto smallest = std::min(neighborhood_size(cfg.radius_min), neighborhood_size(cfg.radius));
    if (cfg.w == 0 || cfg.w > smallest) {
      out.push_back({Severity::error, "w", "w=" + std::to_string(cfg.w) + " must be in [1, " + std::to_string(smallest) + "] (smallest neighborhood)"});
    }
  }
  if (has_errors(out)) return out;

  const auto w = cfg.active_bits();
  detail::size_guidance(out, cfg.n, w, true);
  const double expected_pairs = static_cast<double>(w) * static_cast<double>(w) / static_cast<double>(cfg.n);
  if (expected_pairs > 1.0) {
    out.push_back({Severity::warning, "n", "w^2/n=" + std::to_string(expected_pairs) + " > 1; expect hash collisions to remove active bits"});
  }
  return out;
}

/// Forward spherical-mercator projection (sphere radius 6378137 m) divided
/// into square cells of `cell_size` meters.
inline GridCoordinate gps_to_grid(double lat, double lon, double cell_size) {
  constexpr double kEarthRadius = 6378137.0;
  constexpr double kMaxLatitude = 85.05113;
  if (!std::isfinite(lat) || !(std::abs(lat) < kMaxLatitude)) {
    throw ProjectionError("latitude " + std::to_string(lat) + " is outside the mercator range");
  }
  if (!std::isfinite(lon) || std::abs(lon) > 180.0) throw ProjectionError("longitude " + std::to_string(lon) + " is outside [-180, 180]");
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) throw InputError("cell_size must be positive");

  constexpr double deg = std::numbers::pi / 180.0;
  const double mx = kEarthRadius * lon * deg;
  // atanh(sin(lat)) equals ln(tan(pi/4 + lat/2)) but is exactly 0 on the equator.
  const double my = kEarthRadius * std::atanh(std::sin(lat * deg));
  const double cx = std::floor(mx / cell_size);
  const double cy = std::floor(my / cell_size);
  constexpr double lo = std::numeric_limits<std::int32_t>::min();
  constexpr double hi = std::numeric_limits<std::int32_t>::max();
  if (cx < lo || cx > hi || cy < lo || cy > hi) throw RangeError("grid cell does not fit in 32 bits; increase cell_size");
  return {static_cast<std::int32_t>(cx), static_cast<std::int32_t>(cy)};
}

/// Encodes grid positions by hashing every cell of the square neighborhood
/// around them. Nearby positions share neighborhood cells and therefore bits.
class GeoEncoder {
 public:
  explicit GeoEncoder(GeoEncoderConfig cfg) : cfg_(std::move(cfg)) { detail::throw_on_errors(validate(cfg_)); }

  const GeoEncoderConfig& config() const noexcept { return cfg_; }
  std::size_t size() const noexcept { return cfg_.n; }

  /// The (2R+1)^2 cells within Chebyshev distance `radius`, x-major order.
  static std::vector<GridCoordinate> neighborhood(GridCoordinate c, int radius) {
    if (radius < 0) throw InputError("radius must be non-negative");
    constexpr std::int64_t lo = std::numeric_limits<std::int32_t>::min();
    constexpr std::int64_t hi = std::numeric_limits<std::int32_t>::max();
    const std::int64_t r = radius;
    if (c.x - r < lo || c.x + r > hi || c.y - r < lo || c.y + r > hi) {
      throw RangeError("neighborhood of (" + std::to_string(c.x) + ", " + std::to_string(c.y) + ") leaves the 32-bit grid");
    }
    std::vector<GridCoordinate> cells;
    cells.reserve(neighborhood_size(radius));
    for (std::int64_t dx = -r; dx <= r; ++dx) {
      for (std::int64_t dy = -r; dy <= r; ++dy) {
        cells.push_back({static_cast<std::int32_t>(c.x + dx), static_cast<std::int32_t>(c.y + dy)});
      }
    }
    return cells;
  }

  /// Cells picked by the top-w variant: the w highest order keys in the
  /// neighborhood, ties broken by ascending (x, y).
  std::vector<GridCoordinate> selected_cells(GridCoordinate c, int radius) const {
    if (radius < 0) throw InputError("radius must be non-negative");
    if (cfg_.w == 0 || cfg_.w > neighborhood_size(radius)) {
      throw ConfigError("w", "w=" + std::to_string(cfg_.w) + " exceeds the " + std::to_string(neighborhood_size(radius)) + "-cell neighborhood at radius " + std::to_string(radius));
    }
    struct Keyed {
      std::uint64_t key;
      GridCoordinate cell;
    };
    std::vector<Keyed> keyed;
    for (auto cell : neighborhood(c, radius)) keyed.push_back({coordinate_hash(cell, cfg_.seed, cfg_.n).order_key, cell});
    auto before = [](const Keyed& a, const Keyed& b) { return a.key != b.key ? a.key > b.key : a.cell < b.cell; };
    std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(cfg_.w), keyed.end(), before);
    std::vector<GridCoordinate> out;
    out.reserve(cfg_.w);
    for (std::size_t i = 0; i < cfg_.w; ++i) out.push_back(keyed[i].cell);
    return out;
  }

  Sdr encode_fixed(GridCoordinate c) const { return bits_of(neighborhood(c, cfg_.radius)); }

  Sdr encode_topw(GridCoordinate c, int radius) const { return bits_of(selected_cells(c, radius)); }

  int radius_from_speed(double speed) const {
    if (!std::isfinite(speed) || speed < 0.0) throw InputError("speed must be finite and non-negative");
    const double grown = static_cast<double>(cfg_.radius_min) + std::floor(speed * cfg_.speed_scale);
    return static_cast<int>(std::clamp(grown, static_cast<double>(cfg_.radius_min), static_cast<double>(cfg_.radius_max)));
  }

  /// Dispatches on the configured variant. A speed only matters for top-w,
  /// where it replaces the base radius.
  Sdr encode(GridCoordinate c, std::optional<double> speed = std::nullopt) const {
    if (cfg_.variant == GeoVariant::fixed) return encode_fixed(c);
    return encode_topw(c, speed ? radius_from_speed(*speed) : cfg_.radius);
  }

 private:
  Sdr bits_of(const std::vector<GridCoordinate>& cells) const {
    std::vector<Sdr::Index> bits;
    bits.reserve(cells.size());
    for (auto cell : cells) bits.push_back(coordinate_hash(cell, cfg_.seed, cfg_.n).bit_index);
    return Sdr::from_unsorted(cfg_.n, std::move(bits));
  }

  GeoEncoderConfig cfg_;
};

}  // namespace sdrenc

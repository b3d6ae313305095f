#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

namespace sdrenc {

/// Integer cell on a flattened 2-D grid.
struct GridCoordinate {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend auto operator<=>(const GridCoordinate&, const GridCoordinate&) = default;
};

// splitmix64 finalizer. Normative: golden vectors in tests/fixtures depend on
// every constant here.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kOrderKeySalt = 0x5851F42D4C957F2DULL;

// x in the high word, y in the low word, both as unsigned 32-bit patterns.
constexpr std::uint64_t pack_coordinate(GridCoordinate c) noexcept {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y));
}

struct CoordinateHash {
  std::uint32_t bit_index = 0;
  // Strict selection priority; order_key / 2^64 is the [0, 1) weight.
  std::uint64_t order_key = 0;

  friend bool operator==(const CoordinateHash&, const CoordinateHash&) = default;
};

/// Maps a grid cell to its bit in an `n`-bit SDR and to its fixed weight.
/// Requires n >= 1.
constexpr CoordinateHash coordinate_hash(GridCoordinate c, std::uint64_t seed, std::size_t n) noexcept {
  const std::uint64_t key = pack_coordinate(c);
  const std::uint64_t h1 = mix64(key ^ seed);
  const std::uint64_t h2 = mix64(key ^ seed ^ kOrderKeySalt);
  return {static_cast<std::uint32_t>(h1 % n), h2};
}

constexpr double order_weight(std::uint64_t order_key) noexcept {
  return static_cast<double>(order_key >> 11) * 0x1.0p-53;
}

/// One-dimensional view of the coordinate hash: bucket b becomes the cell
/// (b, 0) whenever b fits in 32 bits. Larger buckets carry their high part in
/// y so that distinct 64-bit buckets never share a cell.
constexpr GridCoordinate bucket_cell(std::int64_t bucket) noexcept {
  const auto x = static_cast<std::int32_t>(static_cast<std::uint32_t>(static_cast<std::uint64_t>(bucket)));
  // (bucket - x) is a multiple of 2^32; computed mod 2^64 so INT64_MAX does not overflow.
  const auto high = (static_cast<std::uint64_t>(bucket) - static_cast<std::uint64_t>(std::int64_t{x})) >> 32;
  return {x, static_cast<std::int32_t>(static_cast<std::uint32_t>(high))};
}

}  // namespace sdrenc

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sdrenc/sdr.hpp"

namespace sdrenc::test {

// Random SDR with each bit on with probability `density`.
inline Sdr random_sdr(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<Sdr::Index> active;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) active.push_back(static_cast<Sdr::Index>(i));
  }
  return Sdr(n, std::move(active));
}

// Uniform real in [lo, hi) from the raw engine output (portable across standard libraries).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace sdrenc::test

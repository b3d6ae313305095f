#pragma once

#include <cstdint>

#include "sdrenc/hash.hpp"

namespace sdrenc::golden {

// Frozen from tests/oracles/golden_vectors.py. Same content as tests/fixtures.
struct Mix64Vector {
  std::uint64_t key;
  std::uint64_t value;
};

inline constexpr Mix64Vector kMix64[] = {
    {0x0000000000000000ULL, 0xe220a8397b1dcdafULL}, {0x0000000000000001ULL, 0x910a2dec89025cc1ULL},
    {0x0000000000000002ULL, 0x975835de1c9756ceULL}, {0x000000000000002aULL, 0xbdd732262feb6e95ULL},
    {0x9e3779b97f4a7c15ULL, 0x6e789e6aa1b965f4ULL}, {0xffffffffffffffffULL, 0xe4d971771b652c20ULL},
    {0x8000000000000000ULL, 0x481ec0a212a9f3dbULL}, {0xdeadbeefcafebabeULL, 0x0d7d93560d1929d2ULL},
};

struct CoordinateVector {
  GridCoordinate cell;
  std::uint64_t seed;
  std::size_t n;
  std::uint32_t bit_index;
  std::uint64_t order_key;
};

inline constexpr CoordinateVector kCoordinates[] = {
    {{5, 10}, 0, 100, 96, 13196963132351923944ULL},
    {{6, 10}, 0, 100, 83, 13306801777160948208ULL},
    {{0, 0}, 0, 100, 35, 13441156890354882375ULL},
    {{-1, -1}, 0, 100, 36, 673816163787505614ULL},
    {{3, 8}, 42, 1000, 878, 4296119873410644788ULL},
    {{7, 12}, 42, 1000, 311, 1735005669635149522ULL},
    {{-2147483647 - 1, 2147483647}, 7, 2048, 1806, 3778861178274799157ULL},
    {{2147483647, -2147483647 - 1}, 7, 2048, 117, 3161621992395489981ULL},
    {{123456, -654321}, 3735928559ULL, 134, 80, 12073903414203525853ULL},
    {{0, 1}, 1, 1, 0, 13441156890354882375ULL},
    {{1, 0}, 1, 2, 1, 18407969383731537959ULL},
    {{-5, 10}, 99, 100, 9, 9371396623915275516ULL},
};

}  // namespace sdrenc::golden

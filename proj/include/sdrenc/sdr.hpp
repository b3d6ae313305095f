#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdrenc/errors.hpp"

namespace sdrenc {

/// Sparse Distributed Representation: a binary vector of `size()` bits kept
/// as the strictly increasing list of its one-bit positions.
///
/// Values are immutable once built, so they can be shared freely across
/// threads.
class Sdr {
 public:
  using Index = std::uint32_t;

  Sdr() = default;

  // Takes indices that must already be strictly increasing and < n.
  Sdr(std::size_t n, std::vector<Index> active) : n_(n), active_(std::move(active)) {
    if (n_ > std::size_t{std::numeric_limits<Index>::max()} + 1) {
      throw InvalidSdr("SDR size " + std::to_string(n_) + " exceeds the 32-bit index range");
    }
    for (std::size_t i = 0; i < active_.size(); ++i) {
      if (active_[i] >= n_) {
        throw InvalidSdr("active index " + std::to_string(active_[i]) + " out of range for n=" + std::to_string(n_));
      }
      if (i > 0 && active_[i - 1] >= active_[i]) {
        throw InvalidSdr("active indices must be strictly increasing");
      }
    }
  }

  // Sorts and deduplicates; hash-based encoders use this since collisions are allowed.
  static Sdr from_unsorted(std::size_t n, std::vector<Index> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return Sdr(n, std::move(indices));
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t count() const noexcept { return active_.size(); }
  std::span<const Index> active() const noexcept { return active_; }

  bool test(std::size_t bit) const { return std::binary_search(active_.begin(), active_.end(), bit); }

  friend bool operator==(const Sdr&, const Sdr&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Index> active_;
};

/// Number of one-bits shared by `a` and `b`.
inline std::size_t overlap(const Sdr& a, const Sdr& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  auto x = a.active();
  auto y = b.active();
  std::size_t i = 0, j = 0, shared = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

inline double sparsity(const Sdr& a) {
  if (a.size() == 0) throw InvalidSdr("sparsity of an SDR with n=0");
  return static_cast<double>(a.count()) / static_cast<double>(a.size());
}

// Bit 0 is the leftmost character.
inline std::string to_dense_string(const Sdr& a) {
  std::string out(a.size(), '0');
  for (auto i : a.active()) out[i] = '1';
  return out;
}

inline Sdr from_dense_string(std::string_view text) {
  std::vector<Sdr::Index> active;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      active.push_back(static_cast<Sdr::Index>(i));
    } else if (text[i] != '0') {
      throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
    }
  }
  return Sdr(text.size(), std::move(active));
}

/// "1,4" form; with `self_describing` the size is prefixed as "n=8;1,4".
inline std::string to_sparse_string(const Sdr& a, bool self_describing = false) {
  std::string out;
  if (self_describing) out = "n=" + std::to_string(a.size()) + ";";
  bool first = true;
  for (auto i : a.active()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out;
}

/// Parses the self-describing sparse form "n=<N>;i,j,...".
inline Sdr from_sparse_string(std::string_view text) {
  if (!text.starts_with("n=")) throw ParseError(0, "expected 'n=' prefix");
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError(text.size(), "expected ';' after size");

  auto parse_number = [&](std::size_t begin, std::size_t end) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end || begin == end) throw ParseError(begin, "expected an unsigned integer");
    return value;
  };

  auto n = parse_number(2, semi);
  std::vector<Sdr::Index> active;
  std::size_t pos = semi + 1;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto value = parse_number(pos, comma);
    if (value > std::numeric_limits<Sdr::Index>::max()) throw ParseError(pos, "index out of range");
    active.push_back(static_cast<Sdr::Index>(value));
    pos = comma + 1;
    if (comma + 1 == text.size()) throw ParseError(comma, "trailing comma");
  }
  try {
    return Sdr(static_cast<std::size_t>(n), std::move(active));
  } catch (const InvalidSdr& e) {
    throw ParseError(semi + 1, e.what());
  }
}

}  // namespace sdrenc

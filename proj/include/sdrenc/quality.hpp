#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdrenc/errors.hpp"
#include "sdrenc/hash.hpp"
#include "sdrenc/sdr.hpp"

namespace sdrenc {

template <class Input>
using DistanceScore = std::function<double(const Input&, const Input&)>;

template <class Input>
using EncodeFn = std::function<Sdr(const Input&)>;

inline constexpr double kAxiomTolerance = 1e-9;
inline constexpr std::size_t kMaxReportedPairs = 16;
inline constexpr std::size_t kMaxExhaustiveSamples = 40;

struct IndexPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct AxiomViolations {
  std::size_t count = 0;
  std::vector<IndexPair> examples;  // first kMaxReportedPairs offenders

  void record(std::size_t i, std::size_t j) {
    ++count;
    if (examples.size() < kMaxReportedPairs) examples.push_back({i, j});
  }
};

struct AxiomReport {
  std::size_t samples_checked = 0;
  std::size_t pairs_checked = 0;
  AxiomViolations non_negativity;
  AxiomViolations symmetry;
  AxiomViolations identity;

  std::size_t total() const { return non_negativity.count + symmetry.count + identity.count; }
};

struct ConsistencyReport {
  std::size_t samples = 0;
  std::size_t quadruples_sampled = 0;
  std::size_t discordant = 0;
  double discordance_rate = 0.0;
  double rank_correlation = 0.0;
  // Overlap never varied across the evaluated pairs, so the ordering says nothing.
  bool uninformative = false;
  bool exhaustive = false;
};

struct EvaluationReport {
  AxiomReport axioms;
  ConsistencyReport consistency;
};

namespace detail {

template <class Input>
double call_distance(const DistanceScore<Input>& d, const std::vector<Input>& samples, std::size_t i, std::size_t j) {
  try {
    return d(samples[i], samples[j]);
  } catch (const std::exception& e) {
    throw EvaluationError(i, j, e.what());
  }
}

inline std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace detail

/// Spearman correlation with average ranks for ties. Returns 0 when either
/// side has no variance.
inline double rank_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InputError("rank_correlation needs equal-length inputs");
  if (xs.size() < 2) return 0.0;
  const auto rx = detail::average_ranks(xs);
  const auto ry = detail::average_ranks(ys);
  const double mean = (static_cast<double>(xs.size()) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

/// Strict violation of "more overlap <=> smaller distance". Ties on either
/// side never count.
constexpr bool is_discordant(std::size_t overlap1, double distance1, std::size_t overlap2, double distance2) noexcept {
  return (overlap1 > overlap2 && distance1 > distance2) || (overlap1 < overlap2 && distance1 < distance2);
}

/// Sample index for slot `slot` of quadruple `ordinal`. Depends only on
/// (seed, ordinal, slot), so quadruples can be evaluated in any partition.
inline std::size_t quadruple_index(std::uint64_t seed, std::uint64_t ordinal, unsigned slot, std::size_t m) {
  const std::uint64_t h = mix64(seed ^ mix64(4 * ordinal + slot));
  return static_cast<std::size_t>((static_cast<unsigned __int128>(h) * m) >> 64);
}

/// Checks non-negativity, symmetry and zero self-distance on every sample pair.
template <class Input>
AxiomReport check_distance_axioms(const DistanceScore<Input>& d, const std::vector<Input>& samples) {
  if (samples.size() < 2) throw InputError("axiom check needs at least 2 samples");
  AxiomReport report;
  report.samples_checked = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const double dij = detail::call_distance(d, samples, i, j);
      ++report.pairs_checked;
      if (i == j) {
        if (!(dij >= 0.0)) report.non_negativity.record(i, j);
        if (!(std::abs(dij) <= kAxiomTolerance)) report.identity.record(i, j);
        continue;
      }
      const double dji = detail::call_distance(d, samples, j, i);
      ++report.pairs_checked;
      if (!(dij >= 0.0)) report.non_negativity.record(i, j);
      if (!(dji >= 0.0)) report.non_negativity.record(j, i);
      if (!(std::abs(dij - dji) <= kAxiomTolerance)) report.symmetry.record(i, j);
    }
  }
  return report;
}

namespace detail {

template <class Input>
std::vector<Sdr> encode_all(const EncodeFn<Input>& encode, const std::vector<Input>& samples) {
  std::vector<Sdr> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    out.push_back(encode(s));
    if (out.back().size() != out.front().size()) throw DimensionMismatch(out.front().size(), out.back().size());
  }
  return out;
}

inline void finish(ConsistencyReport& r, const std::vector<double>& overlaps, const std::vector<double>& distances) {
  r.discordance_rate = r.quadruples_sampled ? static_cast<double>(r.discordant) / static_cast<double>(r.quadruples_sampled) : 0.0;
  r.uninformative = std::adjacent_find(overlaps.begin(), overlaps.end(), std::not_equal_to<>()) == overlaps.end();
  r.rank_correlation = rank_correlation(overlaps, distances);
}

}  // namespace detail

/// Counts strict discordances over `quadruple_count` seeded
/// quadruples (w, x, y, z) comparing overlap(f(w), f(x)) against d(w, x) and
/// overlap(f(y), f(z)) against d(y, z).
template <class Input>
ConsistencyReport evaluate_semantic_consistency(const EncodeFn<Input>& encode, const DistanceScore<Input>& d,
                                                const std::vector<Input>& samples, std::size_t quadruple_count,
                                                std::uint64_t seed) {
  if (samples.size() < 4) throw InputError("semantic consistency needs at least 4 samples");
  const auto codes = detail::encode_all(encode, samples);
  const auto m = samples.size();

  ConsistencyReport report;
  report.samples = m;
  report.quadruples_sampled = quadruple_count;
  std::vector<double> overlaps, distances;
  overlaps.reserve(2 * quadruple_count);
  distances.reserve(2 * quadruple_count);
  for (std::uint64_t q = 0; q < quadruple_count; ++q) {
    std::size_t idx[4];
    for (unsigned k = 0; k < 4; ++k) idx[k] = quadruple_index(seed, q, k, m);
    const auto o1 = overlap(codes[idx[0]], codes[idx[1]]);
    const auto o2 = overlap(codes[idx[2]], codes[idx[3]]);
    const double d1 = detail::call_distance(d, samples, idx[0], idx[1]);
    const double d2 = detail::call_distance(d, samples, idx[2], idx[3]);
    if (is_discordant(o1, d1, o2, d2)) ++report.discordant;
    overlaps.push_back(static_cast<double>(o1));
    overlaps.push_back(static_cast<double>(o2));
    distances.push_back(d1);
    distances.push_back(d2);
  }
  detail::finish(report, overlaps, distances);
  return report;
}

/// Every ordered quadruple over at most 40 samples (m^4 comparisons).
template <class Input>
ConsistencyReport evaluate_semantic_consistency_exhaustive(const EncodeFn<Input>& encode, const DistanceScore<Input>& d,
                                                           const std::vector<Input>& samples) {
  if (samples.size() < 4) throw InputError("semantic consistency needs at least 4 samples");
  if (samples.size() > kMaxExhaustiveSamples) {
    throw InputError("exhaustive mode supports at most " + std::to_string(kMaxExhaustiveSamples) + " samples");
  }
  const auto codes = detail::encode_all(encode, samples);
  const auto m = samples.size();
  std::vector<double> overlaps, distances;
  std::vector<std::size_t> pair_overlap;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      pair_overlap.push_back(overlap(codes[i], codes[j]));
      overlaps.push_back(static_cast<double>(pair_overlap.back()));
      distances.push_back(detail::call_distance(d, samples, i, j));
    }
  }
  ConsistencyReport report;
  report.samples = m;
  report.exhaustive = true;
  report.quadruples_sampled = pair_overlap.size() * pair_overlap.size();
  for (std::size_t p = 0; p < pair_overlap.size(); ++p) {
    for (std::size_t q = 0; q < pair_overlap.size(); ++q) {
      if (is_discordant(pair_overlap[p], distances[p], pair_overlap[q], distances[q])) ++report.discordant;
    }
  }
  detail::finish(report, overlaps, distances);
  return report;
}

template <class Input>
EvaluationReport evaluate(const EncodeFn<Input>& encode, const DistanceScore<Input>& d, const std::vector<Input>& samples,
                          std::size_t quadruple_count, std::uint64_t seed, bool exhaustive = false) {
  EvaluationReport report;
  report.axioms = check_distance_axioms(d, samples);
  report.consistency = exhaustive ? evaluate_semantic_consistency_exhaustive(encode, d, samples)
                                  : evaluate_semantic_consistency(encode, d, samples, quadruple_count, seed);
  return report;
}

// Built-in distances. These are conveniences for the evaluator, not part of
// any encoder's contract.
namespace distances {

inline double absolute(const double& a, const double& b) { return std::abs(a - b); }

inline DistanceScore<double> circular(double period) {
  return [period](const double& a, const double& b) {
    const double diff = std::fmod(std::abs(a - b), period);
    return std::min(diff, period - diff);
  };
}

template <class T>
double discrete(const T& a, const T& b) {
  return a == b ? 0.0 : 1.0;
}

inline double chebyshev(const GridCoordinate& a, const GridCoordinate& b) {
  return static_cast<double>(std::max(std::abs(std::int64_t{a.x} - b.x), std::abs(std::int64_t{a.y} - b.y)));
}

}  // namespace distances

}  // namespace sdrenc

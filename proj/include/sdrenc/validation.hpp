#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "sdrenc/errors.hpp"

namespace sdrenc {

enum class Severity { warning, error };

struct Finding {
  Severity severity = Severity::warning;
  std::string key;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

using Findings = std::vector<Finding>;

// Sizing guidance for numeric encoders.
inline constexpr std::size_t kMinRecommendedActiveBits = 20;
inline constexpr std::size_t kMinRecommendedTotalBits = 100;
inline constexpr double kMinRecommendedSparsity = 0.01;
inline constexpr double kMaxRecommendedSparsity = 0.35;
// Children of a multi-field encoder whose w differ by more than this factor trigger a warning.
inline constexpr double kDominanceRatio = 3.0;

inline bool has_errors(const Findings& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) { return f.severity == Severity::error; });
}

inline std::string describe(const Finding& f) {
  std::string out = f.severity == Severity::error ? "error" : "warning";
  if (!f.key.empty()) out += " [" + f.key + "]";
  return out + ": " + f.message;
}

inline std::string prefixed(const std::string& prefix, const std::string& key) {
  if (prefix.empty()) return key;
  if (key.empty()) return prefix;
  return prefix + "." + key;
}

namespace detail {

// Warnings about n, w and w/n. Structural errors are reported by the caller.
inline void size_guidance(Findings& out, std::size_t n, std::size_t w, bool check_sparsity, const std::string& prefix = {}) {
  if (w < kMinRecommendedActiveBits) {
    out.push_back({Severity::warning, prefixed(prefix, "w"),
                   "w=" + std::to_string(w) + " is below 20; representations with fewer than 20-25 one bits are fragile under noise and subsampling"});
  }
  if (n < kMinRecommendedTotalBits) {
    out.push_back({Severity::warning, prefixed(prefix, "n"),
                   "n=" + std::to_string(n) + " is below 100; too few bits to distinguish many values"});
  }
  if (check_sparsity && n > 0) {
    const double s = static_cast<double>(w) / static_cast<double>(n);
    if (s < kMinRecommendedSparsity || s > kMaxRecommendedSparsity) {
      std::ostringstream msg;
      msg << "sparsity w/n=" << s << " is outside the recommended range [0.01, 0.35]";
      out.push_back({Severity::warning, prefixed(prefix, "w"), msg.str()});
    }
  }
}

inline void throw_on_errors(const Findings& findings) {
  for (const auto& f : findings) {
    if (f.severity == Severity::error) throw ConfigError(f.key, f.message);
  }
}

}  // namespace detail

}  // namespace sdrenc

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sdrenc/errors.hpp"
#include "sdrenc/sdr.hpp"
#include "sdrenc/validation.hpp"

namespace sdrenc {

enum class UnknownPolicy { error, catch_all };

struct CategoryEncoderConfig {
  std::vector<std::string> categories;
  std::size_t w = 21;
  UnknownPolicy unknown_policy = UnknownPolicy::error;

  std::size_t blocks() const { return categories.size() + (unknown_policy == UnknownPolicy::catch_all ? 1 : 0); }
  std::size_t n() const { return blocks() * w; }

  friend bool operator==(const CategoryEncoderConfig&, const CategoryEncoderConfig&) = default;
};

inline Findings validate(const CategoryEncoderConfig& cfg) {
  Findings out;
  if (cfg.categories.empty()) out.push_back({Severity::error, "categories", "at least one category is required"});
  if (cfg.w == 0) out.push_back({Severity::error, "w", "w must be at least 1"});
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < cfg.categories.size(); ++i) {
    if (!seen.emplace(cfg.categories[i], i).second) {
      out.push_back({Severity::error, "categories", "duplicate category '" + cfg.categories[i] + "'"});
    }
  }
  // Categories may legitimately use a large share of n, so no sparsity band here.
  if (cfg.w > 0 && cfg.w < kMinRecommendedActiveBits) {
    out.push_back({Severity::warning, "w", "w=" + std::to_string(cfg.w) + " is below 20; representations with fewer than 20-25 one bits are fragile under noise and subsampling"});
  }
  return out;
}

/// Gives every category its own block of w bits. Blocks follow the declared
/// order; distinct categories never overlap.
class CategoryEncoder {
 public:
  explicit CategoryEncoder(CategoryEncoderConfig cfg) : cfg_(std::move(cfg)) {
    for (const auto& f : validate(cfg_)) {
      if (f.severity == Severity::error) throw ConfigError(f.key, f.message);
    }
    for (std::size_t i = 0; i < cfg_.categories.size(); ++i) index_.emplace(cfg_.categories[i], i);
  }

  const CategoryEncoderConfig& config() const noexcept { return cfg_; }
  std::size_t size() const { return cfg_.n(); }

  // Block index for a label; the catch-all block comes after the declared ones.
  std::size_t block(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    if (cfg_.unknown_policy == UnknownPolicy::catch_all) return cfg_.categories.size();
    throw UnknownCategory(std::string(label));
  }

  Sdr encode(std::string_view label) const {
    const auto start = block(label) * cfg_.w;
    std::vector<Sdr::Index> active(cfg_.w);
    for (std::size_t i = 0; i < cfg_.w; ++i) active[i] = static_cast<Sdr::Index>(start + i);
    return Sdr(size(), std::move(active));
  }

 private:
  CategoryEncoderConfig cfg_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace sdrenc

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "json.hpp"

#include "sdrenc/composite.hpp"
#include "sdrenc/errors.hpp"

namespace sdrenc {

using Json = nlohmann::json;

// Anything a "type" key can select: one child encoder or a multi-field encoder.
using AnyEncoderConfig = std::variant<EncoderConfig, MultiEncoderConfig>;

namespace config_detail {

class Object {
 public:
  Object(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  std::string key_path(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

  // Unknown keys are errors: a typo must not silently change an encoding.
  void allow(std::initializer_list<std::string_view> keys) const {
    for (const auto& [k, v] : j_.items()) {
      bool known = false;
      for (auto allowed : keys) known = known || k == allowed;
      if (!known) throw ConfigError(key_path(k), "unknown key");
    }
  }

  bool has(std::string_view key) const { return j_.contains(std::string(key)); }

  const Json& at(std::string_view key) const {
    auto it = j_.find(std::string(key));
    if (it == j_.end()) throw ConfigError(key_path(key), "required key is missing");
    return *it;
  }

  double real(std::string_view key) const {
    const auto& v = at(key);
    if (!v.is_number()) throw ConfigError(key_path(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(key_path(key), "expected a finite number");
    return d;
  }

  double real(std::string_view key, double fallback) const { return has(key) ? real(key) : fallback; }

  std::size_t count(std::string_view key) const {
    const auto& v = at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      throw ConfigError(key_path(key), "expected a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  std::size_t count(std::string_view key, std::size_t fallback) const { return has(key) ? count(key) : fallback; }

  int integer(std::string_view key) const {
    const auto& v = at(key);
    if (!v.is_number_integer()) throw ConfigError(key_path(key), "expected an integer");
    const auto i = v.get<std::int64_t>();
    if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) throw ConfigError(key_path(key), "integer out of range");
    return static_cast<int>(i);
  }

  int integer(std::string_view key, int fallback) const { return has(key) ? integer(key) : fallback; }

  // Seeds may be given as a JSON integer or as a decimal / 0x-hex string.
  std::uint64_t seed(std::string_view key) const {
    if (!has(key)) return 0;
    const auto& v = at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_string()) {
      auto s = v.get<std::string>();
      int base = 10;
      std::string_view digits = s;
      if (digits.starts_with("0x") || digits.starts_with("0X")) {
        base = 16;
        digits.remove_prefix(2);
      }
      std::uint64_t out = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out, base);
      if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) return out;
    }
    throw ConfigError(key_path(key), "expected an unsigned 64-bit integer");
  }

  std::string text(std::string_view key) const {
    const auto& v = at(key);
    if (!v.is_string()) throw ConfigError(key_path(key), "expected a string");
    return v.get<std::string>();
  }

 private:
  const Json& j_;
  std::string path_;
};

inline void check_derived_resolution(const Object& o, double derived) {
  if (!o.has("resolution")) return;
  const double given = o.real("resolution");
  if (std::abs(given - derived) > 1e-9 * std::max(1.0, std::abs(derived))) {
    std::ostringstream msg;
    msg << "resolution is derived (" << derived << "); given " << given;
    throw ConfigError(o.key_path("resolution"), msg.str());
  }
}

inline ScalarEncoderConfig scalar_fields(const Object& o) {
  ScalarEncoderConfig c{o.real("min"), o.real("max"), o.count("n"), o.count("w")};
  if (c.n > c.w && c.min < c.max) check_derived_resolution(o, c.resolution());
  return c;
}

inline std::optional<ComponentSize> component(const Object& parent, std::string_view key, bool weekend) {
  if (!parent.has(key)) return std::nullopt;
  const auto& v = parent.at(key);
  if (v.is_boolean()) {
    if (!v.get<bool>()) return std::nullopt;
    return weekend ? ComponentSize{42, 21} : ComponentSize{};
  }
  Object o(v, parent.key_path(key));
  o.allow({"n", "w"});
  ComponentSize s;
  s.w = o.count("w", 21);
  s.n = o.count("n", weekend ? 2 * s.w : 100);
  return s;
}

inline void throw_first_error(const Findings& findings, const std::string& prefix) {
  for (const auto& f : findings) {
    if (f.severity == Severity::error) throw ConfigError(prefixed(prefix, f.key), f.message);
  }
}

}  // namespace config_detail

inline EncoderConfig parse_encoder_config(const Json& j, const std::string& path = "") {
  using config_detail::Object;
  Object o(j, path);
  const auto type = o.text("type");
  EncoderConfig out;
  if (type == "scalar") {
    o.allow({"type", "min", "max", "n", "w", "resolution"});
    out = config_detail::scalar_fields(o);
  } else if (type == "delta") {
    o.allow({"type", "min", "max", "n", "w", "resolution"});
    out = DeltaEncoderConfig{config_detail::scalar_fields(o)};
  } else if (type == "cyclic") {
    o.allow({"type", "period", "n", "w", "resolution"});
    CyclicEncoderConfig c{o.real("period"), o.count("n"), o.count("w")};
    if (c.n > 0 && c.period > 0) config_detail::check_derived_resolution(o, c.resolution());
    out = c;
  } else if (type == "scalar_unbounded") {
    o.allow({"type", "resolution", "n", "w", "seed"});
    out = UnboundedScalarEncoderConfig{o.real("resolution"), o.count("n"), o.count("w"), o.seed("seed")};
  } else if (type == "category") {
    o.allow({"type", "categories", "w", "unknown_policy"});
    CategoryEncoderConfig c;
    const auto& cats = o.at("categories");
    if (!cats.is_array()) throw ConfigError(o.key_path("categories"), "expected a list of strings");
    for (const auto& label : cats) {
      if (!label.is_string()) throw ConfigError(o.key_path("categories"), "expected a list of strings");
      c.categories.push_back(label.get<std::string>());
    }
    c.w = o.count("w");
    if (o.has("unknown_policy")) {
      const auto policy = o.text("unknown_policy");
      if (policy == "error") {
        c.unknown_policy = UnknownPolicy::error;
      } else if (policy == "catch_all") {
        c.unknown_policy = UnknownPolicy::catch_all;
      } else {
        throw ConfigError(o.key_path("unknown_policy"), "expected 'error' or 'catch_all'");
      }
    }
    out = c;
  } else if (type == "geospatial") {
    o.allow({"type", "n", "w", "radius", "radius_min", "radius_max", "speed_scale", "seed", "variant", "cell_size"});
    GeoEncoderConfig c;
    c.n = o.count("n");
    c.radius = o.integer("radius");
    c.radius_min = o.integer("radius_min", c.radius);
    c.radius_max = o.integer("radius_max", std::max(c.radius, c.radius_min));
    c.speed_scale = o.real("speed_scale", 0.0);
    c.seed = o.seed("seed");
    const auto variant = o.has("variant") ? o.text("variant") : std::string("fixed");
    if (variant == "fixed") {
      c.variant = GeoVariant::fixed;
      c.w = c.active_bits();
      if (o.has("w") && o.count("w") != c.w) {
        throw ConfigError(o.key_path("w"), "fixed variant activates the whole neighborhood; w must be (2*radius+1)^2 = " + std::to_string(c.w));
      }
    } else if (variant == "topw") {
      c.variant = GeoVariant::topw;
      c.w = o.count("w");
    } else {
      throw ConfigError(o.key_path("variant"), "expected 'fixed' or 'topw'");
    }
    if (o.has("cell_size")) c.cell_size = o.real("cell_size");
    out = c;
  } else if (type == "datetime") {
    o.allow({"type", "weekend", "day_of_week", "time_of_day", "month_of_year", "day_of_month"});
    DatetimeEncoderConfig c;
    c.weekend = config_detail::component(o, "weekend", true);
    c.day_of_week = config_detail::component(o, "day_of_week", false);
    c.time_of_day = config_detail::component(o, "time_of_day", false);
    c.month_of_year = config_detail::component(o, "month_of_year", false);
    c.day_of_month = config_detail::component(o, "day_of_month", false);
    out = c;
  } else if (type == "multi") {
    throw ConfigError(o.key_path("type"), "'multi' is only allowed at the top level");
  } else {
    throw ConfigError(o.key_path("type"), "unknown encoder type '" + type + "'");
  }
  config_detail::throw_first_error(validate(out), path);
  return out;
}

inline MultiEncoderConfig parse_multi_config(const Json& j, const std::string& path = "") {
  using config_detail::Object;
  Object o(j, path);
  o.allow({"type", "parts"});
  if (o.text("type") != "multi") throw ConfigError(o.key_path("type"), "expected 'multi'");
  const auto& parts = o.at("parts");
  if (!parts.is_array()) throw ConfigError(o.key_path("parts"), "expected a list");
  MultiEncoderConfig cfg;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto where = o.key_path("parts[" + std::to_string(i) + "]");
    Object part(parts[i], where);
    part.allow({"field", "encoder"});
    cfg.parts.push_back({part.text("field"), parse_encoder_config(part.at("encoder"), part.key_path("encoder"))});
  }
  config_detail::throw_first_error(validate(cfg), path);
  return cfg;
}

inline AnyEncoderConfig parse_any_config(const Json& j, const std::string& path = "") {
  if (j.is_object() && j.contains("type") && j["type"] == "multi") return parse_multi_config(j, path);
  return parse_encoder_config(j, path);
}

// Canonical form: derived values (scalar resolution, category n) are omitted.
inline Json to_json(const EncoderConfig& cfg) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarEncoderConfig>) {
          return {{"type", "scalar"}, {"min", c.min}, {"max", c.max}, {"n", c.n}, {"w", c.w}};
        } else if constexpr (std::is_same_v<T, DeltaEncoderConfig>) {
          return {{"type", "delta"}, {"min", c.inner.min}, {"max", c.inner.max}, {"n", c.inner.n}, {"w", c.inner.w}};
        } else if constexpr (std::is_same_v<T, CyclicEncoderConfig>) {
          return {{"type", "cyclic"}, {"period", c.period}, {"n", c.n}, {"w", c.w}};
        } else if constexpr (std::is_same_v<T, UnboundedScalarEncoderConfig>) {
          return {{"type", "scalar_unbounded"}, {"resolution", c.resolution}, {"n", c.n}, {"w", c.w}, {"seed", c.seed}};
        } else if constexpr (std::is_same_v<T, CategoryEncoderConfig>) {
          return {{"type", "category"},
                  {"categories", c.categories},
                  {"w", c.w},
                  {"unknown_policy", c.unknown_policy == UnknownPolicy::error ? "error" : "catch_all"}};
        } else if constexpr (std::is_same_v<T, GeoEncoderConfig>) {
          Json j = {{"type", "geospatial"}, {"n", c.n}, {"radius", c.radius}, {"radius_min", c.radius_min},
                    {"radius_max", c.radius_max}, {"speed_scale", c.speed_scale}, {"seed", c.seed},
                    {"variant", c.variant == GeoVariant::fixed ? "fixed" : "topw"}};
          if (c.variant == GeoVariant::topw) j["w"] = c.w;
          if (c.cell_size) j["cell_size"] = *c.cell_size;
          return j;
        } else {
          Json j = {{"type", "datetime"}};
          auto put = [&](const char* key, const std::optional<ComponentSize>& s) {
            if (s) j[key] = {{"n", s->n}, {"w", s->w}};
          };
          put("weekend", c.weekend);
          put("day_of_week", c.day_of_week);
          put("time_of_day", c.time_of_day);
          put("month_of_year", c.month_of_year);
          put("day_of_month", c.day_of_month);
          return j;
        }
      },
      cfg);
}

inline Json to_json(const MultiEncoderConfig& cfg) {
  Json parts = Json::array();
  for (const auto& p : cfg.parts) parts.push_back({{"field", p.field}, {"encoder", to_json(p.encoder)}});
  return {{"type", "multi"}, {"parts", parts}};
}

inline Json to_json(const AnyEncoderConfig& cfg) {
  return std::visit([](const auto& c) { return to_json(c); }, cfg);
}

}  // namespace sdrenc

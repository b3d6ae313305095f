#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_set>
#include <variant>
#include <vector>

#include "sdrenc/category.hpp"
#include "sdrenc/errors.hpp"
#include "sdrenc/geospatial.hpp"
#include "sdrenc/scalar.hpp"
#include "sdrenc/sdr.hpp"
#include "sdrenc/validation.hpp"

namespace sdrenc {

/// Concatenates SDRs; part i's bits are shifted by the total size of parts 0..i-1.
inline Sdr concat(std::span<const Sdr> parts) {
  if (parts.empty()) throw InputError("concat needs at least one part");
  std::size_t n = 0;
  std::vector<Sdr::Index> active;
  for (const auto& part : parts) {
    for (auto i : part.active()) active.push_back(static_cast<Sdr::Index>(n + i));
    n += part.size();
  }
  return Sdr(n, std::move(active));
}

// ---------------------------------------------------------------------------
// Datetime

/// Calendar instant in a timezone the caller already resolved.
struct Timestamp {
  int year = 1970;
  unsigned month = 1;  // 1..12
  unsigned day = 1;    // 1..31
  unsigned hour = 0;
  unsigned minute = 0;
  double second = 0.0;

  friend bool operator==(const Timestamp&, const Timestamp&) = default;

  std::chrono::year_month_day date() const {
    return {std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  }

  bool valid() const {
    return date().ok() && hour < 24 && minute < 60 && second >= 0.0 && second < 60.0;
  }

  // 0 = Sunday ... 6 = Saturday.
  unsigned weekday() const { return std::chrono::weekday{std::chrono::sys_days{date()}}.c_encoding(); }

  double hour_of_day() const { return hour + minute / 60.0 + second / 3600.0; }

  unsigned days_in_month() const {
    using namespace std::chrono;
    return static_cast<unsigned>((year_month_day_last{std::chrono::year{year}, month_day_last{std::chrono::month{month}}}).day());
  }
};

/// Accepts "YYYY-MM-DD", "YYYY-MM-DD HH:MM", "YYYY-MM-DDTHH:MM:SS" (fractional seconds allowed).
inline Timestamp parse_timestamp(std::string_view text) {
  Timestamp t;
  auto fail = [&](const std::string& why) -> Timestamp { throw InputError("invalid timestamp '" + std::string(text) + "': " + why); };
  auto number = [&](std::size_t pos, std::size_t len, auto& out) {
    if (pos + len > text.size()) return false;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
    return ec == std::errc() && ptr == text.data() + pos + len;
  };
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return fail("expected YYYY-MM-DD");
  if (!number(0, 4, t.year) || !number(5, 2, t.month) || !number(8, 2, t.day)) return fail("bad date digits");
  if (text.size() > 10) {
    if ((text[10] != ' ' && text[10] != 'T') || text.size() < 16 || text[13] != ':') return fail("expected HH:MM after the date");
    if (!number(11, 2, t.hour) || !number(14, 2, t.minute)) return fail("bad time digits");
    if (text.size() > 16) {
      if (text[16] != ':' || text.size() < 19) return fail("expected :SS");
      auto rest = text.substr(17);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t.second);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) return fail("bad seconds");
    }
  }
  if (!t.valid()) return fail("not a valid calendar instant");
  return t;
}

struct ComponentSize {
  std::size_t n = 100;
  std::size_t w = 21;

  friend bool operator==(const ComponentSize&, const ComponentSize&) = default;
};

/// Enabled components are encoded in this fixed order: weekend, day_of_week,
/// time_of_day, month_of_year, day_of_month.
struct DatetimeEncoderConfig {
  // Two blocks (weekday, weekend) of w bits; n must equal 2w.
  std::optional<ComponentSize> weekend;
  std::optional<ComponentSize> day_of_week;
  std::optional<ComponentSize> time_of_day;
  std::optional<ComponentSize> month_of_year;
  std::optional<ComponentSize> day_of_month;

  friend bool operator==(const DatetimeEncoderConfig&, const DatetimeEncoderConfig&) = default;
};

inline Findings validate(const DatetimeEncoderConfig& cfg) {
  Findings out;
  if (!cfg.weekend && !cfg.day_of_week && !cfg.time_of_day && !cfg.month_of_year && !cfg.day_of_month) {
    out.push_back({Severity::error, "", "at least one datetime component must be enabled"});
  }
  if (cfg.weekend) {
    if (cfg.weekend->n != 2 * cfg.weekend->w) {
      out.push_back({Severity::error, "weekend.n", "weekend uses two blocks, so n must be 2*w"});
    }
    for (auto f : validate(CategoryEncoderConfig{{"weekday", "weekend"}, cfg.weekend->w, UnknownPolicy::error})) {
      f.key = prefixed("weekend", f.key);
      out.push_back(std::move(f));
    }
  }
  auto cyclic = [&](const char* name, const std::optional<ComponentSize>& size, double period) {
    if (!size) return;
    for (auto f : validate(CyclicEncoderConfig{period, size->n, size->w})) {
      f.key = prefixed(name, f.key);
      out.push_back(std::move(f));
    }
  };
  cyclic("day_of_week", cfg.day_of_week, 7.0);
  cyclic("time_of_day", cfg.time_of_day, 24.0);
  cyclic("month_of_year", cfg.month_of_year, 12.0);
  cyclic("day_of_month", cfg.day_of_month, 31.0);
  return out;
}

/// Concatenation of calendar features. Continuous features carry the time of
/// day as a fraction so that e.g. Sunday evening sits between Sunday noon and
/// Monday morning.
class DatetimeEncoder {
 public:
  explicit DatetimeEncoder(DatetimeEncoderConfig cfg) : cfg_(cfg) {
    detail::throw_on_errors(validate(cfg_));
    if (cfg_.weekend) weekend_.emplace(CategoryEncoderConfig{{"weekday", "weekend"}, cfg_.weekend->w, UnknownPolicy::error});
    auto make = [](const std::optional<ComponentSize>& s, double period) -> std::optional<CyclicEncoder> {
      if (!s) return std::nullopt;
      return CyclicEncoder(CyclicEncoderConfig{period, s->n, s->w});
    };
    day_of_week_ = make(cfg_.day_of_week, 7.0);
    time_of_day_ = make(cfg_.time_of_day, 24.0);
    month_of_year_ = make(cfg_.month_of_year, 12.0);
    day_of_month_ = make(cfg_.day_of_month, 31.0);
  }

  const DatetimeEncoderConfig& config() const noexcept { return cfg_; }

  std::size_t size() const {
    std::size_t n = weekend_ ? weekend_->size() : 0;
    for (const auto* c : {&day_of_week_, &time_of_day_, &month_of_year_, &day_of_month_}) {
      if (*c) n += (*c)->size();
    }
    return n;
  }

  std::size_t active_bits() const {
    std::size_t w = weekend_ ? cfg_.weekend->w : 0;
    for (const auto* c : {&day_of_week_, &time_of_day_, &month_of_year_, &day_of_month_}) {
      if (*c) w += (*c)->config().w;
    }
    return w;
  }

  Sdr encode(const Timestamp& t) const {
    if (!t.valid()) throw InputError("invalid timestamp");
    const double hours = t.hour_of_day();
    std::vector<Sdr> parts;
    if (weekend_) {
      const auto wd = t.weekday();
      parts.push_back(weekend_->encode(wd == 0 || wd == 6 ? "weekend" : "weekday"));
    }
    if (day_of_week_) parts.push_back(day_of_week_->encode(t.weekday() + hours / 24.0));
    if (time_of_day_) parts.push_back(time_of_day_->encode(hours));
    if (month_of_year_) {
      parts.push_back(month_of_year_->encode((t.month - 1) + (t.day - 1 + hours / 24.0) / t.days_in_month()));
    }
    if (day_of_month_) parts.push_back(day_of_month_->encode((t.day - 1) + hours / 24.0));
    return concat(parts);
  }

 private:
  DatetimeEncoderConfig cfg_;
  std::optional<CategoryEncoder> weekend_;
  std::optional<CyclicEncoder> day_of_week_;
  std::optional<CyclicEncoder> time_of_day_;
  std::optional<CyclicEncoder> month_of_year_;
  std::optional<CyclicEncoder> day_of_month_;
};

// ---------------------------------------------------------------------------
// Multi-field records

using EncoderConfig = std::variant<ScalarEncoderConfig, CyclicEncoderConfig, DeltaEncoderConfig, UnboundedScalarEncoderConfig,
                                   CategoryEncoderConfig, GeoEncoderConfig, DatetimeEncoderConfig>;

inline Findings validate(const EncoderConfig& cfg) {
  return std::visit([](const auto& c) { return validate(c); }, cfg);
}

// One-bits a child contributes before hash collisions.
inline std::size_t nominal_active_bits(const EncoderConfig& cfg) {
  return std::visit(
      [](const auto& c) -> std::size_t {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DeltaEncoderConfig>) {
          return c.inner.w;
        } else if constexpr (std::is_same_v<T, GeoEncoderConfig>) {
          return c.active_bits();
        } else if constexpr (std::is_same_v<T, DatetimeEncoderConfig>) {
          std::size_t w = 0;
          for (const auto* s : {&c.weekend, &c.day_of_week, &c.time_of_day, &c.month_of_year, &c.day_of_month}) {
            if (*s) w += (*s)->w;
          }
          return w;
        } else {
          return c.w;
        }
      },
      cfg);
}

// True for children whose bits come from the coordinate hash.
inline bool is_hash_based(const EncoderConfig& cfg) {
  return std::holds_alternative<UnboundedScalarEncoderConfig>(cfg) || std::holds_alternative<GeoEncoderConfig>(cfg);
}

struct FieldPart {
  std::string field;
  EncoderConfig encoder;

  friend bool operator==(const FieldPart&, const FieldPart&) = default;
};

struct MultiEncoderConfig {
  std::vector<FieldPart> parts;

  friend bool operator==(const MultiEncoderConfig&, const MultiEncoderConfig&) = default;
};

inline Findings validate(const MultiEncoderConfig& cfg) {
  Findings out;
  if (cfg.parts.empty()) out.push_back({Severity::error, "parts", "at least one part is required"});
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < cfg.parts.size(); ++i) {
    const auto& part = cfg.parts[i];
    const auto where = "parts[" + std::to_string(i) + "]";
    if (part.field.empty()) out.push_back({Severity::error, where + ".field", "field name must not be empty"});
    if (!names.insert(part.field).second) out.push_back({Severity::error, where + ".field", "duplicate field '" + part.field + "'"});
    for (auto f : validate(part.encoder)) {
      f.key = prefixed(where + ".encoder", f.key);
      out.push_back(std::move(f));
    }
  }
  if (cfg.parts.size() > 1) {
    auto cmp = [](const FieldPart& a, const FieldPart& b) { return nominal_active_bits(a.encoder) < nominal_active_bits(b.encoder); };
    const auto [lo, hi] = std::minmax_element(cfg.parts.begin(), cfg.parts.end(), cmp);
    const auto w_lo = nominal_active_bits(lo->encoder);
    const auto w_hi = nominal_active_bits(hi->encoder);
    if (w_lo > 0 && static_cast<double>(w_hi) > kDominanceRatio * static_cast<double>(w_lo)) {
      out.push_back({Severity::warning, "parts",
                     "field '" + hi->field + "' (w=" + std::to_string(w_hi) + ") has more than 3x the one bits of field '" + lo->field +
                         "' (w=" + std::to_string(w_lo) + ") and will dominate the combined encoding"});
    }
  }
  return out;
}

/// Raw field values by name, typically one CSV row. Geospatial fields read
/// "<field>.x"/"<field>.y" (or ".lat"/".lon" when cell_size is set) and an
/// optional "<field>.speed".
using Record = std::map<std::string, std::string, std::less<>>;

namespace detail {

inline const std::string& lookup(const Record& record, const std::string& key) {
  auto it = record.find(key);
  if (it == record.end()) throw MissingField(key);
  return it->second;
}

inline double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("'" + std::string(text) + "' is not a number");
  }
  return value;
}

inline std::int32_t parse_cell(std::string_view text) {
  const double v = parse_real(text);
  if (v != std::floor(v) || v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max()) {
    throw InputError("'" + std::string(text) + "' is not a 32-bit grid index");
  }
  return static_cast<std::int32_t>(v);
}

}  // namespace detail

/// Column names a part reads from a record.
inline std::vector<std::string> columns_of(const FieldPart& part) {
  if (const auto* geo = std::get_if<GeoEncoderConfig>(&part.encoder)) {
    if (geo->cell_size) return {part.field + ".lat", part.field + ".lon"};
    return {part.field + ".x", part.field + ".y"};
  }
  return {part.field};
}

using FieldEncoder =
    std::variant<ScalarEncoder, CyclicEncoder, DeltaEncoder, UnboundedScalarEncoder, CategoryEncoder, GeoEncoder, DatetimeEncoder>;

inline FieldEncoder make_encoder(const EncoderConfig& cfg) {
  return std::visit(
      [](const auto& c) -> FieldEncoder {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarEncoderConfig>) return ScalarEncoder(c);
        if constexpr (std::is_same_v<T, CyclicEncoderConfig>) return CyclicEncoder(c);
        if constexpr (std::is_same_v<T, DeltaEncoderConfig>) return DeltaEncoder(c);
        if constexpr (std::is_same_v<T, UnboundedScalarEncoderConfig>) return UnboundedScalarEncoder(c);
        if constexpr (std::is_same_v<T, CategoryEncoderConfig>) return CategoryEncoder(c);
        if constexpr (std::is_same_v<T, GeoEncoderConfig>) return GeoEncoder(c);
        if constexpr (std::is_same_v<T, DatetimeEncoderConfig>) return DatetimeEncoder(c);
      },
      cfg);
}

inline std::size_t encoder_size(const FieldEncoder& enc) {
  return std::visit([](const auto& e) { return e.size(); }, enc);
}

/// Encodes one field of a record with its child encoder.
inline Sdr encode_field(FieldEncoder& enc, const std::string& field, const Record& record) {
  return std::visit(
      [&](auto& e) -> Sdr {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, CategoryEncoder>) {
          return e.encode(detail::lookup(record, field));
        } else if constexpr (std::is_same_v<T, DatetimeEncoder>) {
          return e.encode(parse_timestamp(detail::lookup(record, field)));
        } else if constexpr (std::is_same_v<T, GeoEncoder>) {
          GridCoordinate cell;
          if (const auto& cs = e.config().cell_size) {
            cell = gps_to_grid(detail::parse_real(detail::lookup(record, field + ".lat")),
                               detail::parse_real(detail::lookup(record, field + ".lon")), *cs);
          } else {
            cell = {detail::parse_cell(detail::lookup(record, field + ".x")), detail::parse_cell(detail::lookup(record, field + ".y"))};
          }
          std::optional<double> speed;
          if (auto it = record.find(field + ".speed"); it != record.end() && !it->second.empty()) {
            speed = detail::parse_real(it->second);
          }
          return e.encode(cell, speed);
        } else {
          return e.encode(detail::parse_real(detail::lookup(record, field)));
        }
      },
      enc);
}

/// Encodes each declared field with its child encoder and concatenates the
/// results in declaration order. Delta children keep per-stream state, so use
/// one instance per input stream.
class MultiEncoder {
 public:
  explicit MultiEncoder(MultiEncoderConfig cfg) : cfg_(std::move(cfg)) {
    detail::throw_on_errors(validate(cfg_));
    for (const auto& part : cfg_.parts) encoders_.push_back(make_encoder(part.encoder));
  }

  const MultiEncoderConfig& config() const noexcept { return cfg_; }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& e : encoders_) n += encoder_size(e);
    return n;
  }

  Sdr encode(const Record& record) {
    // Fail on a missing field before touching any delta state.
    for (const auto& part : cfg_.parts) {
      for (const auto& column : columns_of(part)) {
        if (!record.contains(column)) throw MissingField(column);
      }
    }
    std::vector<Sdr> parts;
    parts.reserve(encoders_.size());
    for (std::size_t i = 0; i < encoders_.size(); ++i) {
      const auto& field = cfg_.parts[i].field;
      try {
        parts.push_back(encode_field(encoders_[i], field, record));
      } catch (const MissingField&) {
        throw;
      } catch (const Error& e) {
        throw FieldError(field, e.what());
      }
    }
    return concat(parts);
  }

 private:
  MultiEncoderConfig cfg_;
  std::vector<FieldEncoder> encoders_;
};

}  // namespace sdrenc

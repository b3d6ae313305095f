#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sdrenc/composite.hpp"
#include "sdrenc/config.hpp"
#include "sdrenc/csv.hpp"
#include "sdrenc/errors.hpp"
#include "sdrenc/expression.hpp"
#include "sdrenc/quality.hpp"
#include "sdrenc/sdr.hpp"

namespace sdrenc {

// Process exit statuses shared by the CLI commands.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitData = 3, kExitAxioms = 4 };

enum class OutputFormat { dense, sparse, sparse_n };

inline OutputFormat parse_output_format(const std::string& text, const std::string& key = "format") {
  if (text == "dense") return OutputFormat::dense;
  if (text == "sparse") return OutputFormat::sparse;
  if (text == "sparse-n") return OutputFormat::sparse_n;
  throw ConfigError(key, "expected 'dense', 'sparse' or 'sparse-n'");
}

inline std::string format_sdr(const Sdr& sdr, OutputFormat format) {
  switch (format) {
    case OutputFormat::dense: return to_dense_string(sdr);
    case OutputFormat::sparse: return to_sparse_string(sdr);
    case OutputFormat::sparse_n: return to_sparse_string(sdr, true);
  }
  return {};
}

struct DistanceSpec {
  enum class Kind { absolute, circular, discrete, chebyshev, expression };
  Kind kind = Kind::absolute;
  double period = 0.0;
  std::string expression;
};

/// Parsed pipeline file. A single encoder binds to `field`; a multi encoder
/// names its fields per part.
struct PipelineConfig {
  AnyEncoderConfig encoder;
  std::optional<std::string> field;
  OutputFormat format = OutputFormat::dense;
  char delimiter = ',';
  std::optional<DistanceSpec> distance;

  MultiEncoderConfig as_multi() const {
    if (const auto* multi = std::get_if<MultiEncoderConfig>(&encoder)) return *multi;
    return MultiEncoderConfig{{FieldPart{*field, std::get<EncoderConfig>(encoder)}}};
  }
};

inline DistanceSpec parse_distance(const Json& j) {
  config_detail::Object o(j, "distance");
  const auto type = o.text("type");
  DistanceSpec spec;
  if (type == "absolute") {
    o.allow({"type"});
  } else if (type == "circular") {
    o.allow({"type", "period"});
    spec.kind = DistanceSpec::Kind::circular;
    spec.period = o.real("period");
    if (!(spec.period > 0.0)) throw ConfigError("distance.period", "period must be positive");
  } else if (type == "discrete") {
    o.allow({"type"});
    spec.kind = DistanceSpec::Kind::discrete;
  } else if (type == "chebyshev") {
    o.allow({"type"});
    spec.kind = DistanceSpec::Kind::chebyshev;
  } else if (type == "expression") {
    o.allow({"type", "expr"});
    spec.kind = DistanceSpec::Kind::expression;
    spec.expression = o.text("expr");
    try {
      DistanceExpression::parse(spec.expression);
    } catch (const ParseError& e) {
      throw ConfigError("distance.expr", e.what());
    }
  } else {
    throw ConfigError("distance.type", "unknown distance '" + type + "'");
  }
  return spec;
}

inline Json to_json(const DistanceSpec& d) {
  switch (d.kind) {
    case DistanceSpec::Kind::absolute: return {{"type", "absolute"}};
    case DistanceSpec::Kind::circular: return {{"type", "circular"}, {"period", d.period}};
    case DistanceSpec::Kind::discrete: return {{"type", "discrete"}};
    case DistanceSpec::Kind::chebyshev: return {{"type", "chebyshev"}};
    case DistanceSpec::Kind::expression: return {{"type", "expression"}, {"expr", d.expression}};
  }
  return {};
}

inline PipelineConfig parse_pipeline_config(const Json& j) {
  config_detail::Object o(j, "");
  o.allow({"encoder", "field", "format", "delimiter", "distance"});
  PipelineConfig cfg;
  cfg.encoder = parse_any_config(o.at("encoder"), "encoder");
  const bool multi = std::holds_alternative<MultiEncoderConfig>(cfg.encoder);
  if (multi && o.has("field")) throw ConfigError("field", "a multi encoder names its fields per part");
  if (!multi) {
    cfg.field = o.text("field");
    if (cfg.field->empty()) throw ConfigError("field", "field name must not be empty");
  }
  if (o.has("format")) cfg.format = parse_output_format(o.text("format"));
  if (o.has("delimiter")) {
    const auto d = o.text("delimiter");
    if (d.size() != 1 || d == "\"" || d == "\n" || d == "\r") throw ConfigError("delimiter", "expected a single character");
    cfg.delimiter = d[0];
  }
  if (o.has("distance")) cfg.distance = parse_distance(o.at("distance"));
  return cfg;
}

inline Json to_json(const PipelineConfig& cfg) {
  Json j = {{"encoder", to_json(cfg.encoder)}};
  if (cfg.field) j["field"] = *cfg.field;
  j["format"] = cfg.format == OutputFormat::dense ? "dense" : cfg.format == OutputFormat::sparse ? "sparse" : "sparse-n";
  j["delimiter"] = std::string(1, cfg.delimiter);
  if (cfg.distance) j["distance"] = to_json(*cfg.distance);
  return j;
}

inline PipelineConfig load_pipeline_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_pipeline_config(j);
}

inline Findings pipeline_findings(const PipelineConfig& cfg) { return validate(cfg.as_multi()); }

// ---------------------------------------------------------------------------

struct EncodeOptions {
  std::optional<OutputFormat> format;
  // Drop the first row's output (useful when a delta field has no predecessor).
  bool skip_first = false;
};

namespace pipeline_detail {

inline bool blank(const std::vector<std::string>& fields) { return fields.size() == 1 && fields[0].empty(); }

struct Header {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

inline Header read_header(CsvReader& csv) {
  Header h;
  if (!csv.next(h.names)) throw InputError("input has no header row");
  for (std::size_t i = 0; i < h.names.size(); ++i) h.index.emplace(h.names[i], i);
  return h;
}

inline std::string column_of(const Error& e) {
  if (const auto* m = dynamic_cast<const MissingField*>(&e)) return m->field();
  if (const auto* f = dynamic_cast<const FieldError*>(&e)) return f->field();
  return {};
}

inline void report_data_error(std::ostream& diag, std::size_t row, std::size_t line, const std::string& column, const std::string& what) {
  diag << "data error: row " << row << " (line " << line << ")";
  if (!column.empty()) diag << ", column '" << column << "'";
  diag << ": " << what << "\n";
}

}  // namespace pipeline_detail

/// Encodes every CSV data row to one output line. Warnings go to `diag`;
/// `out` only ever carries encodings.
inline int run_encode(const PipelineConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag, const EncodeOptions& opts = {}) {
  for (const auto& f : pipeline_findings(cfg)) diag << describe(f) << "\n";
  MultiEncoder encoder(cfg.as_multi());
  const auto format = opts.format.value_or(cfg.format);

  CsvReader csv(in, cfg.delimiter);
  pipeline_detail::Header header;
  try {
    header = pipeline_detail::read_header(csv);
  } catch (const Error& e) {
    diag << "data error: " << e.what() << "\n";
    return kExitData;
  }
  for (const auto& part : encoder.config().parts) {
    for (const auto& column : columns_of(part)) {
      if (!header.index.contains(column)) {
        diag << "data error: header is missing column '" << column << "'\n";
        return kExitData;
      }
    }
  }

  std::vector<std::string> fields;
  Record record;
  std::size_t row = 0;
  for (;;) {
    try {
      if (!csv.next(fields)) break;
    } catch (const Error& e) {
      pipeline_detail::report_data_error(diag, row + 1, csv.line(), "", e.what());
      out.flush();
      return kExitData;
    }
    if (pipeline_detail::blank(fields)) continue;
    ++row;
    if (fields.size() != header.names.size()) {
      pipeline_detail::report_data_error(diag, row, csv.line(), "",
                                         "expected " + std::to_string(header.names.size()) + " fields, found " + std::to_string(fields.size()));
      out.flush();
      return kExitData;
    }
    record.clear();
    for (std::size_t i = 0; i < fields.size(); ++i) record.emplace(header.names[i], std::move(fields[i]));
    try {
      auto sdr = encoder.encode(record);
      if (!(opts.skip_first && row == 1)) out << format_sdr(sdr, format) << '\n';
    } catch (const Error& e) {
      pipeline_detail::report_data_error(diag, row, csv.line(), pipeline_detail::column_of(e), e.what());
      out.flush();
      return kExitData;
    }
  }
  out.flush();
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EvaluateOptions {
  std::size_t quadruples = 10000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

namespace pipeline_detail {

inline std::string distance_name(const DistanceSpec& d) {
  switch (d.kind) {
    case DistanceSpec::Kind::absolute: return "absolute";
    case DistanceSpec::Kind::circular: return "circular";
    case DistanceSpec::Kind::discrete: return "discrete";
    case DistanceSpec::Kind::chebyshev: return "chebyshev";
    case DistanceSpec::Kind::expression: return "expression";
  }
  return {};
}

inline void write_violations(std::ostream& out, const char* name, const AxiomViolations& v) {
  out << "  " << name << ": " << v.count;
  if (!v.examples.empty()) {
    out << "  # e.g.";
    for (const auto& p : v.examples) out << " (" << p.first << "," << p.second << ")";
  }
  out << "\n";
}

inline void write_report(std::ostream& out, const PipelineConfig& cfg, const EvaluationReport& r, const EvaluateOptions& opts) {
  out << std::setprecision(10);
  out << "report: semantic-consistency\n";
  out << "encoder: " << to_json(cfg.encoder).dump() << "\n";
  out << "field: " << cfg.field.value_or("") << "\n";
  out << "distance: " << to_json(*cfg.distance).dump() << "\n";
  out << "samples_checked: " << r.axioms.samples_checked << "\n";
  out << "pairs_checked: " << r.axioms.pairs_checked << "\n";
  out << "axiom_violations: " << r.axioms.total() << "\n";
  write_violations(out, "non_negativity", r.axioms.non_negativity);
  write_violations(out, "symmetry", r.axioms.symmetry);
  write_violations(out, "identity", r.axioms.identity);
  out << "mode: " << (r.consistency.exhaustive ? "exhaustive" : "sampled") << "\n";
  if (!r.consistency.exhaustive) out << "seed: " << opts.seed << "\n";
  out << "quadruples_sampled: " << r.consistency.quadruples_sampled << "\n";
  out << "discordant: " << r.consistency.discordant << "\n";
  out << "discordance_rate: " << r.consistency.discordance_rate << "\n";
  out << "rank_correlation: " << r.consistency.rank_correlation << "\n";
  out << "overlap_spread: " << (r.consistency.uninformative ? "uninformative" : "informative") << "\n";
  out << "axioms: " << (r.axioms.total() == 0 ? "pass" : "fail") << "\n";
}

template <class Input>
EvaluationReport evaluate_inputs(const EncodeFn<Input>& encode, const DistanceScore<Input>& d, const std::vector<Input>& samples,
                                 const EvaluateOptions& opts) {
  return evaluate(encode, d, samples, opts.quadruples, opts.seed, opts.exhaustive);
}

inline DistanceScore<double> numeric_distance(const DistanceSpec& spec) {
  switch (spec.kind) {
    case DistanceSpec::Kind::absolute: return distances::absolute;
    case DistanceSpec::Kind::circular: return distances::circular(spec.period);
    case DistanceSpec::Kind::discrete: return distances::discrete<double>;
    case DistanceSpec::Kind::expression: {
      auto expr = DistanceExpression::parse(spec.expression);
      return [expr](const double& a, const double& b) { return expr(a, b); };
    }
    case DistanceSpec::Kind::chebyshev: break;
  }
  throw ConfigError("distance.type", "chebyshev distance needs geospatial inputs");
}

}  // namespace pipeline_detail

/// Scores one encoder against one distance over the samples in column
/// `cfg.field`. Returns kExitAxioms when the distance breaks an axiom; the
/// discordance rate never changes the status.
inline int run_evaluate(const PipelineConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag, const EvaluateOptions& opts = {}) {
  using Kind = DistanceSpec::Kind;
  const auto started = std::chrono::steady_clock::now();
  if (!cfg.distance) {
    diag << "config error: evaluate needs a 'distance' entry\n";
    return kExitConfig;
  }
  const auto* single = std::get_if<EncoderConfig>(&cfg.encoder);
  if (single == nullptr || std::holds_alternative<DeltaEncoderConfig>(*single) || std::holds_alternative<DatetimeEncoderConfig>(*single)) {
    diag << "config error [encoder]: evaluate supports one scalar, cyclic, scalar_unbounded, category or geospatial encoder\n";
    return kExitConfig;
  }
  for (const auto& f : pipeline_findings(cfg)) diag << describe(f) << "\n";

  const FieldPart part{*cfg.field, *single};
  const auto columns = columns_of(part);
  CsvReader csv(in, cfg.delimiter);
  std::vector<Record> rows;
  try {
    const auto header = pipeline_detail::read_header(csv);
    for (const auto& column : columns) {
      if (!header.index.contains(column)) {
        diag << "data error: header is missing column '" << column << "'\n";
        return kExitData;
      }
    }
    std::vector<std::string> fields;
    while (csv.next(fields)) {
      if (pipeline_detail::blank(fields)) continue;
      if (fields.size() != header.names.size()) {
        pipeline_detail::report_data_error(diag, rows.size() + 1, csv.line(), "", "wrong number of fields");
        return kExitData;
      }
      Record r;
      for (const auto& column : columns) r.emplace(column, fields[header.index.at(column)]);
      rows.push_back(std::move(r));
    }
  } catch (const Error& e) {
    diag << "data error: " << e.what() << "\n";
    return kExitData;
  }

  EvaluationReport report;
  try {
    if (const auto* cat = std::get_if<CategoryEncoderConfig>(single)) {
      if (cfg.distance->kind != Kind::discrete) {
        diag << "config error [distance.type]: category inputs need the 'discrete' distance\n";
        return kExitConfig;
      }
      CategoryEncoder enc(*cat);
      std::vector<std::string> samples;
      for (auto& r : rows) samples.push_back(r.at(part.field));
      report = pipeline_detail::evaluate_inputs<std::string>([&](const std::string& s) { return enc.encode(s); },
                                                             distances::discrete<std::string>, samples, opts);
    } else if (const auto* geo = std::get_if<GeoEncoderConfig>(single)) {
      DistanceScore<GridCoordinate> d;
      if (cfg.distance->kind == Kind::chebyshev) {
        d = distances::chebyshev;
      } else if (cfg.distance->kind == Kind::discrete) {
        d = distances::discrete<GridCoordinate>;
      } else {
        diag << "config error [distance.type]: geospatial inputs need 'chebyshev' or 'discrete'\n";
        return kExitConfig;
      }
      GeoEncoder enc(*geo);
      std::vector<GridCoordinate> samples;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
          if (geo->cell_size) {
            samples.push_back(gps_to_grid(detail::parse_real(rows[i].at(columns[0])), detail::parse_real(rows[i].at(columns[1])), *geo->cell_size));
          } else {
            samples.push_back({detail::parse_cell(rows[i].at(columns[0])), detail::parse_cell(rows[i].at(columns[1]))});
          }
        } catch (const Error& e) {
          pipeline_detail::report_data_error(diag, i + 1, i + 2, part.field, e.what());
          return kExitData;
        }
      }
      report = pipeline_detail::evaluate_inputs<GridCoordinate>([&](const GridCoordinate& c) { return enc.encode(c); }, d, samples, opts);
    } else {
      auto encoder = make_encoder(*single);
      std::vector<double> samples;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
          samples.push_back(detail::parse_real(rows[i].at(part.field)));
        } catch (const Error& e) {
          pipeline_detail::report_data_error(diag, i + 1, i + 2, part.field, e.what());
          return kExitData;
        }
      }
      EncodeFn<double> encode = [&](const double& v) {
        return std::visit(
            [&](const auto& e) -> Sdr {
              using T = std::decay_t<decltype(e)>;
              if constexpr (std::is_same_v<T, ScalarEncoder> || std::is_same_v<T, CyclicEncoder> || std::is_same_v<T, UnboundedScalarEncoder>) {
                return e.encode(v);
              } else {
                throw ConfigError("encoder", "not a numeric encoder");
              }
            },
            encoder);
      };
      report = pipeline_detail::evaluate_inputs<double>(encode, pipeline_detail::numeric_distance(*cfg.distance), samples, opts);
    }
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    diag << "data error: " << e.what() << "\n";
    return kExitData;
  }

  pipeline_detail::write_report(out, cfg, report, opts);
  out.flush();
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  diag << "elapsed_ms: " << elapsed << "\n";
  return report.axioms.total() == 0 ? kExitOk : kExitAxioms;
}

}  // namespace sdrenc

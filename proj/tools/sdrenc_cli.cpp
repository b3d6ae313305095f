// sdrenc: encode CSV records to SDRs and score encoders.
//
//   sdrenc encode --config pipeline.json [--input rows.csv] [--output out.txt] [--format dense|sparse|sparse-n]
//   sdrenc evaluate --config pipeline.json --input samples.csv [--quadruples N] [--seed S] [--exhaustive]
//   sdrenc selftest-hash

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "golden_vectors.hpp"
#include "sdrenc/sdrenc.hpp"

namespace {

int selftest_hash() {
  int mismatches = 0;
  std::printf("# key,mix64(key) as 0x-prefixed 16-digit hex\n");
  for (const auto& v : sdrenc::golden::kMix64) {
    const auto got = sdrenc::mix64(v.key);
    std::printf("0x%016" PRIx64 ",0x%016" PRIx64 "\n", v.key, got);
    if (got != v.value) {
      ++mismatches;
      std::fprintf(stderr, "MISMATCH mix64(0x%016" PRIx64 ")\n", v.key);
    }
  }
  std::printf("# x,y,seed,n,bit_index,order_key\n");
  for (const auto& v : sdrenc::golden::kCoordinates) {
    const auto got = sdrenc::coordinate_hash(v.cell, v.seed, v.n);
    std::printf("%" PRId32 ",%" PRId32 ",%" PRIu64 ",%zu,%" PRIu32 ",%" PRIu64 "\n", v.cell.x, v.cell.y, v.seed, v.n, got.bit_index,
                got.order_key);
    if (got.bit_index != v.bit_index || got.order_key != v.order_key) {
      ++mismatches;
      std::fprintf(stderr, "MISMATCH coordinate_hash(%" PRId32 ",%" PRId32 ")\n", v.cell.x, v.cell.y);
    }
  }
  std::fflush(stdout);
  if (mismatches) std::fprintf(stderr, "%d golden vector(s) differ\n", mismatches);
  return mismatches ? 1 : 0;
}

std::optional<sdrenc::PipelineConfig> load(const std::string& path) {
  try {
    return sdrenc::load_pipeline_config(path);
  } catch (const sdrenc::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse distributed representation encoders"};
  app.require_subcommand(1);

  std::string config_path, input_path, output_path, format;
  bool skip_first = false;
  auto* encode = app.add_subcommand("encode", "Encode CSV rows, one SDR per line");
  encode->add_option("--config", config_path, "Pipeline config (JSON)")->required();
  encode->add_option("--input", input_path, "Input CSV (default: stdin)");
  encode->add_option("--output", output_path, "Output file (default: stdout)");
  encode->add_option("--format", format, "dense | sparse | sparse-n")->check(CLI::IsMember({"dense", "sparse", "sparse-n"}));
  encode->add_flag("--skip-first", skip_first, "Suppress the first row's output");

  sdrenc::EvaluateOptions eval_opts;
  auto* evaluate = app.add_subcommand("evaluate", "Check a distance's axioms and an encoder's ordering consistency");
  evaluate->add_option("--config", config_path, "Pipeline config with a 'distance' entry")->required();
  evaluate->add_option("--input", input_path, "Sample CSV")->required();
  evaluate->add_option("--quadruples", eval_opts.quadruples, "Quadruples to sample")->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", eval_opts.seed, "Sampling seed");
  evaluate->add_flag("--exhaustive", eval_opts.exhaustive, "Enumerate every quadruple (at most 40 samples)");

  auto* selftest = app.add_subcommand("selftest-hash", "Print and verify the golden hash vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : sdrenc::kExitConfig;
  }

  if (*selftest) return selftest_hash();

  auto cfg = load(config_path);
  if (!cfg) return sdrenc::kExitConfig;

  std::ifstream in_file;
  if (!input_path.empty()) {
    in_file.open(input_path);
    if (!in_file) {
      std::cerr << "data error: cannot open input '" << input_path << "'\n";
      return sdrenc::kExitData;
    }
  }
  std::istream& in = input_path.empty() ? std::cin : in_file;

  if (*evaluate) return sdrenc::run_evaluate(*cfg, in, std::cout, std::cerr, eval_opts);

  std::ofstream out_file;
  if (!output_path.empty()) {
    out_file.open(output_path);
    if (!out_file) {
      std::cerr << "cannot open output '" << output_path << "'\n";
      return sdrenc::kExitData;
    }
  }
  std::ostream& out = output_path.empty() ? std::cout : out_file;
  sdrenc::EncodeOptions opts;
  if (!format.empty()) opts.format = sdrenc::parse_output_format(format, "--format");
  opts.skip_first = skip_first;
  return sdrenc::run_encode(*cfg, in, out, std::cerr, opts);
}

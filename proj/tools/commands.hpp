#pragma once

#include "clifflines/hopf.hpp"
#include "clifflines/hurwitz_radon.hpp"
#include "clifflines/representation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clifflines::cli {

struct Config {
  double tol = 1e-8;
  double h = 1e-3;
  int samples = kDefaultLineSamples;
  int lines = 200;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool ndjson = false;
};

/// Throws InvalidArgument unless tolerances and counts are positive.
void validate(const Config& config);

struct CommandOutput {
  nlohmann::json summary;
  std::vector<nlohmann::json> records;  // per-line records, when the command has any
  std::string text;                     // plain-text rendering, if requested
  int exit_code = 0;
};

/// Pretty JSON (records embedded under "records"), NDJSON (one record per
/// line, summary last), or the plain text when set.
std::string render(const CommandOutput& out, bool ndjson);

/// Builtin name or path to a representation JSON file. Representations with
/// a non-identity metric come back orthonormalized.
Representation load_representation(const std::string& spec);

nlohmann::json read_json_file(const std::string& path);

CommandOutput cmd_classify(int r, bool as_json);

struct LineOptions {
  HopfForm form = HopfForm::local;
  double step = 1.0;
  std::vector<Vec> directions;  // empty: config.lines seeded random directions
  std::optional<Vec> offset;
};

CommandOutput cmd_verify_hopf(const std::string& rep_spec, const LineOptions& lines,
                              const Config& config);

CommandOutput cmd_sample_line(const std::string& rep_spec, const LineOptions& lines,
                              const Config& config);

/// Input: a row-major matrix, or {"matrix": ...}.
CommandOutput cmd_detect_cm(const nlohmann::json& input, const Config& config);

CommandOutput cmd_decompose(const nlohmann::json& gamma, FactorMode mode, const Config& config);

CommandOutput cmd_reconstruct(const nlohmann::json& map, const Config& config, bool richardson);

/// Comma- or space-separated list of numbers.
Vec parse_vector(const std::string& text);

}  // namespace clifflines::cli

#include "commands.hpp"

#include "clifflines/circle.hpp"
#include "clifflines/clifford.hpp"
#include "clifflines/error.hpp"
#include "clifflines/jet.hpp"
#include "clifflines/local_map.hpp"
#include "clifflines/parallel.hpp"
#include "clifflines/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace clifflines::cli {

using nlohmann::json;

void validate(const Config& c) {
  if (!(c.tol > 0)) throw InvalidArgument("--tol must be positive");
  if (!(c.h > 0)) throw InvalidArgument("--fd-step must be positive");
  if (c.samples < 3) throw InvalidArgument("--samples must be at least 3");
  if (c.lines < 1) throw InvalidArgument("--lines must be at least 1");
  if (c.jobs < 1) throw InvalidArgument("--jobs must be at least 1");
}

std::string render(const CommandOutput& out, bool ndjson) {
  if (!out.text.empty()) return out.text;
  if (ndjson) {
    std::string s;
    for (const json& r : out.records) s += r.dump() + "\n";
    return s + out.summary.dump() + "\n";
  }
  json doc = out.summary;
  if (!out.records.empty()) doc["records"] = out.records;
  return doc.dump(2) + "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

Representation load_representation(const std::string& spec) {
  const auto& names = builtin_names();
  const Representation rep = std::find(names.begin(), names.end(), spec) != names.end()
                                 ? builtin(spec)
                                 : representation_from_json(read_json_file(spec));
  return rep.metric_is_identity() ? rep : rep.orthonormalized();
}

Vec parse_vector(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<double> values;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse '" + tok + "' as a number");
    }
  }
  if (values.empty()) throw InvalidArgument("empty vector");
  return Eigen::Map<const Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

CommandOutput cmd_classify(int r, bool as_json) {
  const AlgebraDescriptor d = classify(r);
  CommandOutput out;
  out.summary = to_json(d);
  std::string algebra = describe(d);
  if (r >= 8) {
    long long periodic = 1;
    for (int k = 0; k < r / 8; ++k) periodic *= 16;
    const std::string factor = "R[" + std::to_string(periodic) + "]";
    algebra = describe(classify(r % 8)) + " ⊗ " + factor + " = " + algebra;
    out.summary["bott"] = {{"base_r", r % 8}, {"periodic_factor", factor}};
  }
  out.summary["text"] = "Cliff(" + std::to_string(r) + ") = " + algebra + ", min rep dim " +
                        std::to_string(min_rep_dim(r));
  if (!as_json) out.text = out.summary["text"].get<std::string>() + "\n";
  return out;
}

namespace {

struct LineResult {
  json record;
  bool ok = false;
  double relative_residual = 0.0;
  std::string kind;
};

std::vector<Vec> line_directions(const HopfMap& map, const LineOptions& lines, const Config& config) {
  if (!lines.directions.empty()) {
    for (const Vec& d : lines.directions)
      if (d.size() != map.domain_dim())
        throw DimensionMismatch("--direction needs " + std::to_string(map.domain_dim()) + " components");
    return lines.directions;
  }
  return random_directions(map.domain_dim(), config.lines, config.seed);
}

std::vector<LineResult> run_lines(const HopfMap& map, const LineOptions& lines, const Config& config,
                                  bool with_points) {
  const auto dirs = line_directions(map, lines, config);
  std::vector<LineResult> results(dirs.size());
  parallel_for(dirs.size(), config.jobs, [&](std::size_t i) {
    LineResult& res = results[i];
    res.record = {{"index", i}, {"line", vector_to_json(dirs[i])}};
    if (lines.offset) res.record["offset"] = vector_to_json(*lines.offset);
    LineGerm germ{dirs[i], lines.step, config.samples, lines.offset};
    try {
      const auto pts = line_image(map, germ);
      if (with_points) {
        json p = json::array();
        for (const Vec& v : pts) p.push_back(vector_to_json(v));
        res.record["points"] = std::move(p);
      }
      const auto c = classify_points(pts, config.tol);
      res.record["classification"] = to_json(c);
      res.ok = true;
      res.relative_residual = c.relative_residual();
      res.kind = to_string(c.kind);
    } catch (const Error& e) {
      res.record["classification"] = nullptr;
      res.record["error"] = error_to_json(e);
    }
  });
  return results;
}

json form_name(HopfForm form) { return form == HopfForm::local ? "local" : "global"; }

}  // namespace

CommandOutput cmd_verify_hopf(const std::string& rep_spec, const LineOptions& lines,
                              const Config& config) {
  validate(config);
  const HopfMap map(load_representation(rep_spec), lines.form);
  const auto results = run_lines(map, lines, config, false);

  CommandOutput out;
  std::size_t passed = 0;
  double worst = 0.0;
  json counts = {{"point", 0}, {"line", 0}, {"circle", 0}};
  for (const auto& r : results) {
    out.records.push_back(r.record);
    if (!r.ok) continue;
    ++passed;
    worst = std::max(worst, r.relative_residual);
    counts[r.kind] = counts[r.kind].get<int>() + 1;
  }
  out.summary = {{"command", "verify-hopf"},
                 {"rep", rep_spec},
                 {"form", form_name(lines.form)},
                 {"lines", results.size()},
                 {"classified", passed},
                 {"counts", counts},
                 {"max_relative_residual", worst},
                 {"tol", config.tol},
                 {"seed", config.seed},
                 {"passed", passed == results.size()}};
  out.exit_code = passed == results.size() ? 0 : 1;
  return out;
}

CommandOutput cmd_sample_line(const std::string& rep_spec, const LineOptions& lines,
                              const Config& config) {
  validate(config);
  const HopfMap map(load_representation(rep_spec), lines.form);
  const auto results = run_lines(map, lines, config, true);
  CommandOutput out;
  bool all = true;
  for (const auto& r : results) {
    out.records.push_back(r.record);
    all = all && r.ok;
  }
  out.summary = {{"command", "sample-line"},
                 {"rep", rep_spec},
                 {"form", form_name(lines.form)},
                 {"lines", results.size()},
                 {"passed", all}};
  out.exit_code = all ? 0 : 1;
  return out;
}

CommandOutput cmd_detect_cm(const json& input, const Config& config) {
  validate(config);
  const Mat a = matrix_from_json(input.is_object() ? input.at("matrix") : input);
  CommandOutput out;
  out.summary = to_json(detect_complex_multiplication(a, config.tol));
  out.summary["command"] = "detect-cm";
  out.exit_code = 0;
  return out;
}

CommandOutput cmd_decompose(const json& gamma_json, FactorMode mode, const Config& config) {
  validate(config);
  const BilinearMap gamma = bilinear_from_json(gamma_json);
  const auto f = factor(gamma, config.tol, mode);
  const double residual = reconstruction_residual(gamma, f, 1000, config.seed);
  CommandOutput out;
  out.summary = to_json(f);
  out.summary["command"] = "decompose";
  out.summary["reconstruction_residual"] = residual;
  const bool ok = residual < std::max(config.tol, 1e-9);
  out.summary["passed"] = ok;
  out.exit_code = ok ? 0 : 1;
  return out;
}

CommandOutput cmd_reconstruct(const json& map_json, const Config& config, bool richardson) {
  validate(config);
  const LocalProjection phi = local_projection_from_json(map_json);
  ReconstructOptions opts;
  opts.step = config.h;
  opts.richardson = richardson;
  opts.tol = config.tol;
  opts.lines = config.lines;
  opts.samples = config.samples;
  opts.seed = config.seed;
  opts.jobs = config.jobs;
  opts.throw_on_mismatch = false;
  const ReconstructReport rep = reconstruct(phi, opts);

  CommandOutput out;
  for (const auto& c : rep.comparisons) {
    json rec = {{"index", c.index},
                {"line", vector_to_json(c.direction)},
                {"degenerate", c.degenerate},
                {"matched", c.matched}};
    rec["phi"] = c.phi_circle ? to_json(*c.phi_circle) : json(nullptr);
    rec["normal_form"] = c.normal_circle ? to_json(*c.normal_circle) : json(nullptr);
    if (!c.error.empty()) rec["error"] = c.error;
    out.records.push_back(std::move(rec));
  }
  out.summary = {{"command", "reconstruct"},
                 {"passed", rep.passed()},
                 {"lines", rep.comparisons.size()},
                 {"matched", rep.matched},
                 {"degenerate", rep.degenerate},
                 {"mismatched", rep.mismatched},
                 {"tol", config.tol},
                 {"seed", config.seed},
                 {"local_projection_defect", rep.local_projection_defect},
                 {"lemma", to_json(rep.lemma)},
                 {"jet", to_json(rep.jet)},
                 {"factorization", to_json(*rep.factorization)},
                 {"scope", "circle germs of vector lines are compared; the maps need not agree pointwise"}};
  out.exit_code = rep.passed() ? 0 : 1;
  return out;
}

}  // namespace clifflines::cli

#include "commands.hpp"

#include "clifflines/error.hpp"
#include "clifflines/serialize.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using clifflines::cli::CommandOutput;
using clifflines::cli::Config;
using clifflines::cli::LineOptions;
using nlohmann::json;

/// Config-file reader accepting either a flat JSON object or TOML/INI.
class JsonOrTomlConfig : public CLI::ConfigTOML {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::stringstream buffer;
    buffer << input.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream toml(text);
      return CLI::ConfigTOML::from_config(toml);
    }
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError("config", e.what());
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      } else {
        item.inputs.push_back(value.is_string() ? value.get<std::string>() : value.dump());
      }
      items.push_back(std::move(item));
    }
    return items;
  }
};

clifflines::HopfForm parse_form(const std::string& s) {
  return s == "global" ? clifflines::HopfForm::global : clifflines::HopfForm::local;
}

clifflines::FactorMode parse_mode(const std::string& s) {
  if (s == "normal-form") return clifflines::FactorMode::normal_form;
  if (s == "hurwitz") return clifflines::FactorMode::hurwitz;
  return clifflines::FactorMode::automatic;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw clifflines::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford representations, Hopf maps and line-to-circle maps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonOrTomlConfig>());
  app.set_config("--config", "", "TOML or JSON file with option defaults (flags win)");

  Config config;
  std::string output;
  app.add_option("--tol", config.tol, "Relative tolerance")->capture_default_str();
  app.add_option("--fd-step", config.h, "Finite-difference step for jet extraction")->capture_default_str();
  app.add_option("--samples", config.samples, "Samples per line")->capture_default_str();
  app.add_option("--lines", config.lines, "Number of random lines")->capture_default_str();
  app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  app.add_flag("--ndjson", config.ndjson, "Emit newline-delimited JSON records");
  app.add_option("-o,--output", output, "Write output to a file instead of stdout");

  int rank = 0;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify", "Describe Cliff(r) and its minimal representation");
  classify->add_option("r", rank, "Number of generators")->required()->check(CLI::NonNegativeNumber);
  classify->add_flag("--json", classify_json, "JSON instead of text");

  std::string rep;
  std::string form = "local";
  double step = 1.0;
  std::vector<std::string> directions;
  std::string offset;
  auto add_line_options = [&](CLI::App* sub) {
    sub->add_option("rep", rep, "Builtin representation name or representation JSON file")->required();
    sub->add_option("--form", form, "Hopf form")->check(CLI::IsMember({"local", "global"}))->capture_default_str();
    sub->add_option("--step", step, "Line parameter scale")->capture_default_str();
    sub->add_option("--direction", directions, "Line direction (comma separated; repeatable)");
    sub->add_option("--offset", offset, "Line offset (comma separated)");
  };
  auto* verify = app.add_subcommand("verify-hopf", "Check that random lines map to circles");
  add_line_options(verify);
  auto* sample = app.add_subcommand("sample-line", "Emit sampled line images with classifications");
  add_line_options(sample);

  std::string input;
  auto* detect = app.add_subcommand("detect-cm", "Detect a complex multiplication from a matrix");
  detect->add_option("--input", input, "Matrix JSON file")->required();

  std::string mode = "auto";
  auto* decompose = app.add_subcommand("decompose", "Factor a bilinear map through a Clifford representation");
  decompose->add_option("--input", input, "Bilinear map JSON file")->required();
  decompose->add_option("--mode", mode, "Factorization mode")
      ->check(CLI::IsMember({"auto", "normal-form", "hurwitz"}))
      ->capture_default_str();

  std::string report;
  bool no_richardson = false;
  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct a Clifford structure from a map germ");
  reconstruct->add_option("--input", input, "Map JSON file")->required();
  reconstruct->add_option("--report", report, "Write the full JSON report to this file");
  reconstruct->add_flag("--no-richardson", no_richardson, "Use plain central differences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    LineOptions lines;
    lines.form = parse_form(form);
    lines.step = step;
    for (const auto& d : directions) lines.directions.push_back(clifflines::cli::parse_vector(d));
    if (!offset.empty()) lines.offset = clifflines::cli::parse_vector(offset);

    CommandOutput out;
    if (*classify) {
      out = clifflines::cli::cmd_classify(rank, classify_json);
    } else if (*verify) {
      out = clifflines::cli::cmd_verify_hopf(rep, lines, config);
    } else if (*sample) {
      out = clifflines::cli::cmd_sample_line(rep, lines, config);
    } else if (*detect) {
      out = clifflines::cli::cmd_detect_cm(clifflines::cli::read_json_file(input), config);
    } else if (*decompose) {
      out = clifflines::cli::cmd_decompose(clifflines::cli::read_json_file(input), parse_mode(mode), config);
    } else if (*reconstruct) {
      out = clifflines::cli::cmd_reconstruct(clifflines::cli::read_json_file(input), config, !no_richardson);
      if (!report.empty()) emit(clifflines::cli::render(out, false), report);
    }
    emit(clifflines::cli::render(out, config.ndjson), output);
    return out.exit_code;
  } catch (const clifflines::InvalidArgument& e) {
    std::cerr << clifflines::error_to_json(e).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << clifflines::error_to_json(e).dump() << "\n";
    return 1;
  }
}

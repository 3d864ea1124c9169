#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homlie/errors.hpp"
#include "homlie/io/driver.hpp"
#include "homlie/io/fixtures.hpp"
#include "homlie/io/report_io.hpp"
#include "homlie/io/structure_file.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kLoad = 3;

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream in(item);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (!name.empty()) out.push_back(name);
    }
  }
  return out;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return static_cast<bool>(out);
}

std::optional<homlie::StructureDocument> load(const std::string& source, int& code) {
  try {
    return homlie::load_document(source);
  } catch (const homlie::Error& e) {
    std::cerr << "error: " << source << ": " << e.what() << "\n";
    code = kLoad;
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for hom-Lie algebroid structures"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> only;
  std::string seed_text;
  std::size_t samples = homlie::kDefaultSamples;
  std::string json_out;
  bool timings = false;

  auto* check = app.add_subcommand("check", "Verify a structure file (or builtin:<name>)");
  check->add_option("file", file, "Structure file or builtin:<name>")->required();
  check->add_option("--only", only, "Comma-separated checks to run");
  check->add_option("--seed", seed_text, "Seed for random samples (decimal or 0x hex)");
  check->add_option("--samples", samples, "Random samples per law");
  check->add_option("--json", json_out, "Write the JSON report to this path ('-' for stdout)");
  check->add_flag("--timings", timings, "Include per-check timings");

  std::string ps_out;
  auto* phase = app.add_subcommand("phase-space", "Write the phase space of a structure");
  phase->add_option("file", file, "Structure file or builtin:<name>")->required();
  phase->add_option("-o,--output", ps_out, "Output path ('-' for stdout)")->required();

  auto* describe = app.add_subcommand("describe", "Pretty-print a structure");
  describe->add_option("file", file, "Structure file or builtin:<name>")->required();

  auto* examples = app.add_subcommand("examples", "Builtin example structures");
  examples->require_subcommand(1);
  auto* list = examples->add_subcommand("list", "List builtin examples");
  std::string example_name;
  std::string example_out = "-";
  auto* write = examples->add_subcommand("write", "Write a builtin example file");
  write->add_option("name", example_name, "Example name")->required();
  write->add_option("-o,--output", example_out, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  int code = kPass;
  if (check->parsed()) {
    homlie::CheckOptions options;
    options.samples = samples;
    bool seed_given = false;
    if (!seed_text.empty()) {
      try {
        std::size_t used = 0;
        options.seed = std::stoull(seed_text, &used, 0);
        if (used != seed_text.size()) throw std::invalid_argument("trailing characters");
        seed_given = true;
      } catch (const std::exception&) {
        std::cerr << "error: --seed expects an unsigned integer, got '" << seed_text << "'\n";
        return kUsage;
      }
    }
    auto doc = load(file, code);
    if (!doc) return code;
    homlie::DriverReport report;
    try {
      report = homlie::run_checks(*doc, split_names(only), options, seed_given);
    } catch (const homlie::AttachmentError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    homlie::RenderOptions render;
    render.timings = timings;
    if (json_out != "-") std::cout << homlie::render_text(report, render);
    if (!json_out.empty() && !write_output(json_out, homlie::render_json(report, render))) return kUsage;
    return report.passed() ? kPass : kFail;
  }

  if (phase->parsed()) {
    auto doc = load(file, code);
    if (!doc) return code;
    try {
      const homlie::StructureDocument out = homlie::emit_phase_space(*doc);
      if (!write_output(ps_out, homlie::serialize_structure(out))) return kUsage;
    } catch (const homlie::AttachmentError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const homlie::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kFail;
    }
    return kPass;
  }

  if (describe->parsed()) {
    auto doc = load(file, code);
    if (!doc) return code;
    std::cout << homlie::describe_structure(*doc);
    return kPass;
  }

  if (list->parsed()) {
    for (const auto& f : homlie::builtin_fixtures()) {
      std::cout << f.name << (f.mutant ? "  [mutant]  " : "  ") << f.summary << "\n";
    }
    return kPass;
  }

  if (write->parsed()) {
    const homlie::Fixture* f = homlie::find_fixture(example_name);
    if (f == nullptr) {
      std::cerr << "error: no builtin example named '" << example_name << "'\n";
      return kUsage;
    }
    return write_output(example_out, std::string(f->text) + "\n") ? kPass : kUsage;
  }
  return kUsage;
}

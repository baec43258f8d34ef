#include "vogan/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Corpus spec document: every field optional, defaults as in CorpusSpec.
// "families" lists "GL", "Sp", "SO" ("SO" covers both parities).
vogan::CorpusSpec parse_corpus_spec(const std::string& text, int modulus, uint64_t seed) {
  vogan::CorpusSpec spec;
  spec.unit_modulus = modulus;
  spec.seed = seed;
  if (text.empty()) return spec;

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::invalid_argument(std::string("parse error: ") + ex.what());
  }
  if (!j.is_object()) throw std::invalid_argument("parse error: corpus spec must be an object");

  if (j.contains("families")) {
    const auto& fams = j["families"];
    if (!fams.is_array()) throw std::invalid_argument("parse error: families must be an array");
    spec.families.clear();
    for (const auto& f : fams) {
      if (!f.is_string()) throw std::invalid_argument("parse error: family must be a string");
      std::string name = f.get<std::string>();
      if (name == "GL") {
        spec.families.insert(vogan::Family::GeneralLinear);
      } else if (name == "Sp") {
        spec.families.insert(vogan::Family::Symplectic);
      } else if (name == "SO") {
        spec.families.insert(vogan::Family::EvenOrthogonal);
        spec.families.insert(vogan::Family::OddOrthogonal);
      } else {
        throw std::invalid_argument("parse error: family must be \"GL\", \"Sp\" or \"SO\"");
      }
    }
  }
  auto take_int = [&j](const char* name, int& slot) {
    if (!j.contains(name)) return;
    if (!j[name].is_number_integer()) {
      throw std::invalid_argument(std::string("parse error: field '") + name +
                                  "' must be an integer");
    }
    slot = j[name].get<int>();
  };
  take_int("max_size", spec.max_size);
  take_int("gl_size", spec.gl_size);
  take_int("sp_size", spec.sp_size);
  take_int("so_size", spec.so_size);
  take_int("gl_exp2_bound", spec.gl_exp2_bound);
  take_int("classical_exp2_bound", spec.classical_exp2_bound);
  take_int("unit_modulus", spec.unit_modulus);
  take_int("random_count", spec.random_count);
  take_int("random_min_size", spec.random_min_size);
  take_int("random_max_size", spec.random_max_size);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw std::invalid_argument("parse error: field 'seed' must be an integer");
    }
    spec.seed = j["seed"].get<uint64_t>();
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit analysis for graded dual-group parameter spaces"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  int modulus = 4;
  bool json_out = false;
  app.add_option("--seed", seed, "seed for sampled orbit searches");
  app.add_option("--unit-modulus", modulus,
                 "unit-class modulus applied when a document omits unit_modulus");
  app.add_flag("--json", json_out, "emit machine-readable reports");

  std::string analyze_path, survey_path, dual_path, spec_path;
  int jobs = 1;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "full verdict sheet for one parameter");
  cmd_analyze->add_option("input", analyze_path, "parameter document (path, - for stdin)");
  CLI::App* cmd_survey =
      app.add_subcommand("survey", "orbit table for a parameter's grading");
  cmd_survey->add_option("input", survey_path, "parameter document (path, - for stdin)");
  CLI::App* cmd_dual = app.add_subcommand("dual", "dual orbit of a parameter's orbit");
  cmd_dual->add_option("input", dual_path, "parameter document (path, - for stdin)");
  CLI::App* cmd_corpus =
      app.add_subcommand("corpus-check", "run every invariant over a generated corpus");
  cmd_corpus->add_option("--spec", spec_path, "corpus spec document (optional)");
  cmd_corpus->add_option("--jobs", jobs, "worker threads for the corpus run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_analyze->parsed()) {
      vogan::ParsedSpec parsed = vogan::parse_spec(read_input(analyze_path), modulus);
      vogan::AnalysisReport rep = vogan::analyze(vogan::langlands_of(parsed), seed);
      std::cout << (json_out ? vogan::to_json(rep) : vogan::to_text(rep));
    } else if (cmd_survey->parsed()) {
      vogan::ParsedSpec parsed = vogan::parse_spec(read_input(survey_path), modulus);
      vogan::SurveyReport rep =
          vogan::survey(vogan::infinitesimal_of(vogan::langlands_of(parsed)), seed);
      std::cout << (json_out ? vogan::to_json(rep) : vogan::to_text(rep));
    } else if (cmd_dual->parsed()) {
      vogan::ParsedSpec parsed = vogan::parse_spec(read_input(dual_path), modulus);
      vogan::DualReport rep = vogan::dual_report(vogan::langlands_of(parsed), seed);
      std::cout << (json_out ? vogan::to_json(rep) : vogan::to_text(rep));
    } else if (cmd_corpus->parsed()) {
      std::string text = spec_path.empty() ? std::string() : read_input(spec_path);
      vogan::CorpusSpec spec = parse_corpus_spec(text, modulus, seed);
      vogan::CheckReport rep = vogan::check_all(spec, jobs);
      std::cout << (json_out ? vogan::to_json(rep) : vogan::to_text(rep));
      if (!rep.violations.empty()) return 2;
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "internal check failed: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}

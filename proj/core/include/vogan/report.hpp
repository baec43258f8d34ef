#ifndef VOGAN_REPORT_HPP
#define VOGAN_REPORT_HPP

#include "vogan/corpus.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vogan {

struct OrbitSummary {
  int dim = 0;
  RankSignature signature;
};

// Everything the analyze entry point knows about one parameter. Assembled by
// analyze(), rendered by to_json / to_text.
struct AnalysisReport {
  LanglandsParam parameter;
  InfinitesimalParam grading;
  int dim_v = 0;
  int orbit_dim = 0;
  bool open = false;
  bool tempered = false;
  std::optional<ArthurParam> arthur;
  bool discrete = false;
  int l_adjoint_order = 0;
  ComponentGroup components;
  OrbitSummary dual_orbit;
  bool q_distinguished = false;
  std::vector<int> witness_partition;  // empty when there is no witness
};

AnalysisReport analyze(const LanglandsParam& phi, uint64_t seed = 0);

struct SurveyRow {
  int dim = 0;
  RankSignature signature;
  bool open = false;
  bool closed = false;
  OrbitSummary dual;
};

struct SurveyReport {
  InfinitesimalParam grading;
  int dim_v = 0;
  bool complete = false;
  std::vector<SurveyRow> rows;                // census order: by (dim, signature)
  std::vector<std::pair<int, int>> hasse;     // cover relations, row indices
  std::vector<std::string> warnings;
};

SurveyReport survey(const InfinitesimalParam& lam, uint64_t seed = 0);

struct DualReport {
  LanglandsParam parameter;
  OrbitSummary orbit;
  OrbitSummary dual;
};

DualReport dual_report(const LanglandsParam& phi, uint64_t seed = 0);

using ParsedSpec = std::variant<LanglandsParam, ArthurParam>;

// Parses a parameter document: {"dual_group": {"family": "GL"|"Sp"|"SO",
// "size": N}, "unit_modulus": m, "summands": [{"u", "e", "a"}, ...]} or,
// with "triples": [{"u", "a", "b"}, ...], a ladder parameter. Exponents are
// strings like "1/2" or plain integers. Malformed documents and invariant
// violations both raise std::invalid_argument; the message names the field
// or the violated invariant. default_modulus applies when the document
// omits unit_modulus.
ParsedSpec parse_spec(const std::string& text, int default_modulus = 4);

// The parameter a parsed document analyzes as (ladders are expanded).
LanglandsParam langlands_of(const ParsedSpec& parsed);

// Parameter document that parse_spec accepts back; round-trips exactly.
std::string serialize(const LanglandsParam& phi);

// JSON renderings: schema_version 1, two-space indent, trailing newline,
// exponents as exact strings. to_json(AnalysisReport) throws
// std::logic_error when the openness/order cross-check fails; that must
// reach the user as a loud failure, not a report.
std::string to_json(const AnalysisReport& r);
std::string to_json(const SurveyReport& r);
std::string to_json(const DualReport& r);
std::string to_json(const CheckReport& r);

// Plain-text renderings of the same data.
std::string to_text(const AnalysisReport& r);
std::string to_text(const SurveyReport& r);
std::string to_text(const DualReport& r);
std::string to_text(const CheckReport& r);

}  // namespace vogan

#endif

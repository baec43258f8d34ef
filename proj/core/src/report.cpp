#include "vogan/report.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace vogan {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string family_str(const DualGroupSpec& g) {
  switch (g.family) {
    case Family::GeneralLinear: return "GL";
    case Family::Symplectic: return "Sp";
    default: return "SO";
  }
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw std::invalid_argument(std::string("parse error: ") + ex.what());
  }
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("parse error: missing field '") + name + "'");
  }
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) {
    throw std::invalid_argument(std::string("parse error: field '") + name +
                                "' must be an integer");
  }
  return f.get<int>();
}

HalfInt half_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (f.is_string()) return parse_half(f.get<std::string>());
  if (f.is_number_integer()) return HalfInt::whole(f.get<int>());
  throw std::invalid_argument(std::string("parse error: field '") + name +
                              "' must be an integer or a string like \"1/2\"");
}

DualGroupSpec group_field(const json& j) {
  const json& g = field(j, "dual_group");
  if (!g.is_object()) throw std::invalid_argument("parse error: dual_group must be an object");
  const json& fam = field(g, "family");
  if (!fam.is_string()) {
    throw std::invalid_argument("parse error: field 'family' must be a string");
  }
  std::string name = fam.get<std::string>();
  int size = int_field(g, "size");
  if (name == "GL") return {Family::GeneralLinear, size};
  if (name == "Sp") return {Family::Symplectic, size};
  if (name == "SO") {
    return {size % 2 == 1 ? Family::OddOrthogonal : Family::EvenOrthogonal, size};
  }
  throw std::invalid_argument("parse error: family must be \"GL\", \"Sp\" or \"SO\"");
}

ordered_json group_json(const DualGroupSpec& g) {
  ordered_json j;
  j["family"] = family_str(g);
  j["size"] = g.size;
  return j;
}

ordered_json param_json(const LanglandsParam& phi) {
  ordered_json j;
  j["dual_group"] = group_json(phi.group);
  j["unit_modulus"] = phi.unit_modulus;
  ordered_json arr = ordered_json::array();
  for (const Summand& s : phi.summands) {
    ordered_json e;
    e["u"] = s.u;
    e["e"] = s.e.str();
    e["a"] = s.a;
    arr.push_back(e);
  }
  j["summands"] = arr;
  return j;
}

ordered_json grading_json(const InfinitesimalParam& lam) {
  ordered_json arr = ordered_json::array();
  for (const auto& [l, c] : lam.mult) {
    ordered_json e;
    e["u"] = l.u;
    e["e"] = HalfInt(l.e2).str();
    e["mult"] = c;
    arr.push_back(e);
  }
  return arr;
}

ordered_json signature_json(const RankSignature& sig) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, rank] : sig) {
    ordered_json e;
    e["u"] = key[0];
    e["lo"] = HalfInt(key[1]).str();
    e["hi"] = HalfInt(key[2]).str();
    e["rank"] = rank;
    arr.push_back(e);
  }
  return arr;
}

ordered_json orbit_json(const OrbitSummary& o) {
  ordered_json j;
  j["dim"] = o.dim;
  j["signature"] = signature_json(o.signature);
  return j;
}

ordered_json arthur_json(const std::optional<ArthurParam>& a) {
  ordered_json j;
  j["is_arthur_type"] = a.has_value();
  if (a) {
    ordered_json arr = ordered_json::array();
    for (const ArthurTriple& t : a->triples) {
      ordered_json e;
      e["u"] = t.u;
      e["a"] = t.a;
      e["b"] = t.b;
      arr.push_back(e);
    }
    j["witness"] = arr;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

void ensure_consistent(const AnalysisReport& r) {
  if (r.open != (r.l_adjoint_order == 0)) {
    throw std::logic_error(
        "analysis cross-check failed: openness disagrees with the adjoint order for " +
        param_str(r.parameter));
  }
}

std::string signature_str(const RankSignature& sig) {
  if (sig.empty()) return "(empty)";
  std::string out;
  for (const auto& [key, rank] : sig) {
    if (!out.empty()) out += "; ";
    out += "u=" + std::to_string(key[0]) + " [" + HalfInt(key[1]).str() + "," +
           HalfInt(key[2]).str() + "] rank " + std::to_string(rank);
  }
  return out;
}

std::string grading_str(const InfinitesimalParam& lam) {
  std::string out = lam.group.name() + " m=" + std::to_string(lam.unit_modulus) + " {";
  bool first = true;
  for (const auto& [l, c] : lam.mult) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(l.u) + "," + HalfInt(l.e2).str() + ")x" + std::to_string(c);
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void put(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(20) << key << value << "\n";
}

}  // namespace

AnalysisReport analyze(const LanglandsParam& phi, uint64_t seed) {
  AnalysisReport r;
  r.parameter = phi;
  r.grading = infinitesimal_of(phi);

  MatrixRealization mr = realize(phi);
  VoganSpaces sp = build_spaces(mr.ctx);
  r.dim_v = sp.v.dim();
  r.orbit_dim = tangent_dim(mr.ctx, sp, mr.x);
  r.l_adjoint_order = commutant(sp.v_star, mr.x).dim();
  r.open = r.orbit_dim == r.dim_v;

  r.tempered = is_tempered(phi);
  r.arthur = is_arthur_type(phi);
  r.discrete = is_discrete(phi);
  r.components = component_group(phi);

  DualOrbit d = pyasetskii_dual(mr.ctx, sp, mr.x, Direction::Raise, seed);
  r.dual_orbit = {d.dim, d.signature};

  r.q_distinguished = is_q_distinguished(r.grading);
  if (r.q_distinguished) {
    PipelineResult res = heiermann_pipeline(r.grading, seed);
    r.witness_partition = res.witness_partition;
  }
  return r;
}

SurveyReport survey(const InfinitesimalParam& lam, uint64_t seed) {
  SurveyReport s;
  s.grading = lam;
  OrbitCensus census = enumerate_orbits(lam, seed);
  s.dim_v = census.spaces.v.dim();
  s.complete = census.complete;
  s.warnings = census.warnings;
  for (const OrbitRecord& rec : census.orbits) {
    DualOrbit d = pyasetskii_dual(census.ctx, census.spaces, rec.rep, Direction::Raise, seed);
    s.rows.push_back({rec.dim, rec.signature, rec.open, rec.closed, {d.dim, d.signature}});
  }
  int k = static_cast<int>(census.orbits.size());
  auto strictly_below = [&census](int i, int j) {
    return i != j && closure_leq(census.orbits[i], census.orbits[j]);
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!strictly_below(i, j)) continue;
      bool cover = true;
      for (int l = 0; l < k && cover; ++l) {
        if (strictly_below(i, l) && strictly_below(l, j)) cover = false;
      }
      if (cover) s.hasse.emplace_back(i, j);
    }
  }
  return s;
}

DualReport dual_report(const LanglandsParam& phi, uint64_t seed) {
  DualReport d;
  d.parameter = phi;
  MatrixRealization mr = realize(phi);
  VoganSpaces sp = build_spaces(mr.ctx);
  d.orbit = {tangent_dim(mr.ctx, sp, mr.x), signature_of(mr.ctx, mr.x, Direction::Raise)};
  DualOrbit du = pyasetskii_dual(mr.ctx, sp, mr.x, Direction::Raise, seed);
  d.dual = {du.dim, du.signature};
  return d;
}

ParsedSpec parse_spec(const std::string& text, int default_modulus) {
  json j = parse_document(text);
  if (!j.is_object()) throw std::invalid_argument("parse error: document must be an object");
  DualGroupSpec g = group_field(j);
  int m = j.contains("unit_modulus") ? int_field(j, "unit_modulus") : default_modulus;

  bool has_summands = j.contains("summands");
  bool has_triples = j.contains("triples");
  if (has_summands == has_triples) {
    throw std::invalid_argument(
        "parse error: exactly one of 'summands' or 'triples' is required");
  }
  if (has_summands) {
    const json& arr = field(j, "summands");
    if (!arr.is_array()) throw std::invalid_argument("parse error: summands must be an array");
    std::vector<Summand> summands;
    for (const json& e : arr) {
      if (!e.is_object()) throw std::invalid_argument("parse error: summand must be an object");
      summands.push_back({int_field(e, "u"), half_field(e, "e"), int_field(e, "a")});
    }
    return make_langlands(g, m, summands);
  }
  const json& arr = field(j, "triples");
  if (!arr.is_array()) throw std::invalid_argument("parse error: triples must be an array");
  std::vector<ArthurTriple> triples;
  for (const json& e : arr) {
    if (!e.is_object()) throw std::invalid_argument("parse error: triple must be an object");
    triples.push_back({int_field(e, "u"), int_field(e, "a"), int_field(e, "b")});
  }
  return make_arthur(g, m, triples);
}

LanglandsParam langlands_of(const ParsedSpec& parsed) {
  if (const auto* phi = std::get_if<LanglandsParam>(&parsed)) return *phi;
  return arthur_to_langlands(std::get<ArthurParam>(parsed));
}

std::string serialize(const LanglandsParam& phi) { return param_json(phi).dump(2) + "\n"; }

std::string to_json(const AnalysisReport& r) {
  ensure_consistent(r);
  ordered_json j;
  j["schema_version"] = 1;
  j["parameter"] = param_json(r.parameter);
  j["grading"] = grading_json(r.grading);
  j["dim_v"] = r.dim_v;
  j["orbit_dim"] = r.orbit_dim;
  j["is_open"] = r.open;
  j["is_tempered"] = r.tempered;
  j["arthur"] = arthur_json(r.arthur);
  j["is_discrete"] = r.discrete;
  j["l_adjoint_order"] = r.l_adjoint_order;
  ordered_json comp;
  comp["gl_factors"] = r.components.gl_factors;
  comp["orthogonal_factors"] = r.components.orthogonal_factors;
  comp["two_rank"] = r.components.two_rank;
  j["component_group"] = comp;
  j["dual_orbit"] = orbit_json(r.dual_orbit);
  j["q_distinguished"] = r.q_distinguished;
  if (r.witness_partition.empty()) {
    j["distinguished_witness"] = nullptr;
  } else {
    j["distinguished_witness"] = r.witness_partition;
  }
  return j.dump(2) + "\n";
}

std::string to_json(const SurveyReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["dual_group"] = group_json(r.grading.group);
  j["unit_modulus"] = r.grading.unit_modulus;
  j["grading"] = grading_json(r.grading);
  j["dim_v"] = r.dim_v;
  j["complete"] = r.complete;
  ordered_json rows = ordered_json::array();
  for (const SurveyRow& row : r.rows) {
    ordered_json e;
    e["dim"] = row.dim;
    e["signature"] = signature_json(row.signature);
    e["open"] = row.open;
    e["closed"] = row.closed;
    e["dual"] = orbit_json(row.dual);
    rows.push_back(e);
  }
  j["orbits"] = rows;
  ordered_json edges = ordered_json::array();
  for (const auto& [lo, hi] : r.hasse) edges.push_back(ordered_json::array({lo, hi}));
  j["hasse"] = edges;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string to_json(const DualReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["parameter"] = param_json(r.parameter);
  j["orbit"] = orbit_json(r.orbit);
  j["dual_orbit"] = orbit_json(r.dual);
  return j.dump(2) + "\n";
}

std::string to_json(const CheckReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["corpus_size"] = r.corpus_size;
  j["distinct_gradings"] = r.distinct_gradings;
  ordered_json cov;
  for (const auto& [name, count] : r.coverage) cov[name] = count;
  j["coverage"] = cov;
  ordered_json viols = ordered_json::array();
  for (const Violation& v : r.violations) {
    ordered_json e;
    e["property"] = v.property;
    e["parameter"] = v.parameter;
    e["expected"] = v.expected;
    e["actual"] = v.actual;
    viols.push_back(e);
  }
  j["violations"] = viols;
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  ensure_consistent(r);
  std::ostringstream os;
  put(os, "parameter", param_str(r.parameter));
  put(os, "unit modulus", std::to_string(r.parameter.unit_modulus));
  put(os, "grading", grading_str(r.grading));
  put(os, "dim V", std::to_string(r.dim_v));
  put(os, "orbit dim", std::to_string(r.orbit_dim));
  put(os, "open", yes_no(r.open));
  put(os, "tempered", yes_no(r.tempered));
  if (r.arthur) {
    std::string w;
    for (const ArthurTriple& t : r.arthur->triples) {
      if (!w.empty()) w += " ";
      w += "(" + std::to_string(t.u) + "," + std::to_string(t.a) + "," + std::to_string(t.b) +
           ")";
    }
    put(os, "arthur type", "yes: " + w);
  } else {
    put(os, "arthur type", "no");
  }
  put(os, "discrete", yes_no(r.discrete));
  put(os, "l-adjoint order", std::to_string(r.l_adjoint_order));
  put(os, "component 2-rank",
      std::to_string(r.components.two_rank) + " (gl " + std::to_string(r.components.gl_factors) +
          ", orthogonal " + std::to_string(r.components.orthogonal_factors) + ")");
  put(os, "dual orbit dim", std::to_string(r.dual_orbit.dim));
  put(os, "dual signature", signature_str(r.dual_orbit.signature));
  put(os, "q-distinguished", yes_no(r.q_distinguished));
  if (r.witness_partition.empty()) {
    put(os, "witness partition", "(none)");
  } else {
    std::string p;
    for (size_t i = 0; i < r.witness_partition.size(); ++i) {
      if (i) p += ",";
      p += std::to_string(r.witness_partition[i]);
    }
    put(os, "witness partition", "[" + p + "]");
  }
  return os.str();
}

std::string to_text(const SurveyReport& r) {
  std::ostringstream os;
  put(os, "grading", grading_str(r.grading));
  put(os, "dim V", std::to_string(r.dim_v));
  put(os, "complete", yes_no(r.complete));
  put(os, "orbits", std::to_string(r.rows.size()));
  os << std::left << std::setw(5) << "#" << std::setw(5) << "dim" << std::setw(6) << "open"
     << std::setw(8) << "closed" << std::setw(9) << "dual" << "signature" << "\n";
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const SurveyRow& row = r.rows[i];
    os << std::left << std::setw(5) << i << std::setw(5) << row.dim << std::setw(6)
       << yes_no(row.open) << std::setw(8) << yes_no(row.closed) << std::setw(9) << row.dual.dim
       << signature_str(row.signature) << "\n";
  }
  std::string edges;
  for (const auto& [lo, hi] : r.hasse) {
    if (!edges.empty()) edges += " ";
    edges += std::to_string(lo) + "<" + std::to_string(hi);
  }
  put(os, "closure edges", edges.empty() ? "(none)" : edges);
  for (const std::string& w : r.warnings) put(os, "warning", w);
  return os.str();
}

std::string to_text(const DualReport& r) {
  std::ostringstream os;
  put(os, "parameter", param_str(r.parameter));
  put(os, "orbit dim", std::to_string(r.orbit.dim));
  put(os, "orbit signature", signature_str(r.orbit.signature));
  put(os, "dual dim", std::to_string(r.dual.dim));
  put(os, "dual signature", signature_str(r.dual.signature));
  return os.str();
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  put(os, "corpus size", std::to_string(r.corpus_size));
  put(os, "distinct gradings", std::to_string(r.distinct_gradings));
  os << "coverage\n";
  for (const auto& [name, count] : r.coverage) {
    os << "  " << std::left << std::setw(28) << name << count << "\n";
  }
  put(os, "violations", std::to_string(r.violations.size()));
  for (const Violation& v : r.violations) {
    os << "  " << v.property << " at " << v.parameter << ": expected " << v.expected << ", got "
       << v.actual << "\n";
  }
  return os.str();
}

}  // namespace vogan

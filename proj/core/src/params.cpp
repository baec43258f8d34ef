#include "vogan/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace vogan {

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }

HalfInt parse_half(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("bad half-integer: '" + s + "'"); };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw bad();
      return HalfInt::whole(v);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (den != "2") throw bad();
    size_t used = 0;
    int v = std::stoi(num, &used);
    if (used != num.size()) throw bad();
    if (v % 2 == 0) throw bad();  // "2/2" and friends are not canonical
    return HalfInt(v);
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

Summand dual_summand(const Summand& s, int m) {
  return Summand{norm_unit(-s.u, m), -s.e, s.a};
}

Label dual_label(const Label& l, int m) { return Label{norm_unit(-l.u, m), -l.e2}; }

bool self_dual(const Summand& s, int m) {
  return s.e.twice == 0 && norm_unit(2 * s.u, m) == 0;
}

bool summand_orthogonal(const Summand& s) { return s.a % 2 == 1; }

bool right_type(const DualGroupSpec& g, const Summand& s) {
  if (g.family == Family::Symplectic) return !summand_orthogonal(s);
  return summand_orthogonal(s);
}

bool triple_orthogonal(const ArthurTriple& t) { return (t.a - t.b) % 2 == 0; }

bool right_type(const DualGroupSpec& g, const ArthurTriple& t) {
  if (g.family == Family::Symplectic) return !triple_orthogonal(t);
  return triple_orthogonal(t);
}

namespace {

template <typename T>
std::map<T, int> to_multiset(const std::vector<T>& v) {
  std::map<T, int> m;
  for (const T& x : v) ++m[x];
  return m;
}

void check_classical_closure(const LanglandsParam& phi) {
  if (!phi.group.is_classical()) return;
  const int m = phi.unit_modulus;
  auto ms = to_multiset(phi.summands);
  for (const auto& [s, k] : ms) {
    auto it = ms.find(dual_summand(s, m));
    if (it == ms.end() || it->second != k)
      throw std::invalid_argument("invariant violated: duality_closure (summand " + summand_str(s) + ")");
    if (self_dual(s, m) && !right_type(phi.group, s) && k % 2 != 0)
      throw std::invalid_argument("invariant violated: self_dual_type_multiplicity (summand " +
                                  summand_str(s) + " occurs " + std::to_string(k) + " times)");
  }
  if (phi.group.is_orthogonal()) {
    int det = 0;
    for (const Summand& s : phi.summands) det = norm_unit(det + s.a * s.u, m);
    if (det != 0)
      throw std::invalid_argument("invariant violated: orthogonal_determinant (unit part " +
                                  std::to_string(det) + " mod " + std::to_string(m) + ")");
  }
}

}  // namespace

LanglandsParam make_langlands(DualGroupSpec g, int unit_modulus, std::vector<Summand> summands) {
  g.validate();
  if (unit_modulus < 1) throw std::invalid_argument("unit modulus must be >= 1");
  int total = 0;
  for (Summand& s : summands) {
    if (s.a < 1) throw std::invalid_argument("summand dimension must be >= 1");
    s.u = norm_unit(s.u, unit_modulus);
    total += s.a;
  }
  if (total != g.size)
    throw std::invalid_argument("invariant violated: size_sum (" + std::to_string(total) +
                                " != " + std::to_string(g.size) + ")");
  std::sort(summands.begin(), summands.end());
  LanglandsParam phi{g, unit_modulus, std::move(summands)};
  check_classical_closure(phi);
  return phi;
}

ArthurParam make_arthur(DualGroupSpec g, int unit_modulus, std::vector<ArthurTriple> triples) {
  g.validate();
  if (unit_modulus < 1) throw std::invalid_argument("unit modulus must be >= 1");
  int total = 0;
  for (ArthurTriple& t : triples) {
    if (t.a < 1 || t.b < 1) throw std::invalid_argument("ladder dimensions must be >= 1");
    t.u = norm_unit(t.u, unit_modulus);
    total += t.a * t.b;
  }
  if (total != g.size)
    throw std::invalid_argument("invariant violated: size_sum (" + std::to_string(total) +
                                " != " + std::to_string(g.size) + ")");
  std::sort(triples.begin(), triples.end());
  ArthurParam psi{g, unit_modulus, std::move(triples)};
  if (g.is_classical()) {
    const int m = unit_modulus;
    auto ms = to_multiset(psi.triples);
    for (const auto& [t, k] : ms) {
      ArthurTriple d{norm_unit(-t.u, m), t.a, t.b};
      auto it = ms.find(d);
      if (it == ms.end() || it->second != k)
        throw std::invalid_argument("invariant violated: duality_closure (ladder)");
      if (norm_unit(2 * t.u, m) == 0 && !right_type(g, t) && k % 2 != 0)
        throw std::invalid_argument("invariant violated: self_dual_type_multiplicity (ladder)");
    }
    if (g.is_orthogonal()) {
      int det = 0;
      for (const ArthurTriple& t : psi.triples) det = norm_unit(det + t.a * t.b * t.u, m);
      if (det != 0) throw std::invalid_argument("invariant violated: orthogonal_determinant (ladder)");
    }
  }
  return psi;
}

InfinitesimalParam make_infinitesimal(DualGroupSpec g, int unit_modulus,
                                      const std::vector<std::pair<Label, int>>& mults) {
  g.validate();
  if (unit_modulus < 1) throw std::invalid_argument("unit modulus must be >= 1");
  InfinitesimalParam lam{g, unit_modulus, {}};
  int total = 0;
  for (const auto& [l, k] : mults) {
    if (k < 1) throw std::invalid_argument("label multiplicity must be >= 1");
    lam.mult[Label{norm_unit(l.u, unit_modulus), l.e2}] += k;
    total += k;
  }
  if (total != g.size)
    throw std::invalid_argument("invariant violated: size_sum (" + std::to_string(total) +
                                " != " + std::to_string(g.size) + ")");
  if (g.is_classical()) {
    const int m = unit_modulus;
    for (const auto& [l, k] : lam.mult) {
      Label d = dual_label(l, m);
      auto it = lam.mult.find(d);
      if (it == lam.mult.end() || it->second != k)
        throw std::invalid_argument("invariant violated: duality_closure (label)");
      if (g.family == Family::Symplectic && d == l && k % 2 != 0)
        throw std::invalid_argument("invariant violated: symplectic_self_dual_multiplicity");
    }
    if (g.is_orthogonal()) {
      int det = 0;
      for (const auto& [l, k] : lam.mult) det = norm_unit(det + l.u * k, m);
      if (det != 0) throw std::invalid_argument("invariant violated: orthogonal_determinant (label)");
    }
  }
  return lam;
}

InfinitesimalParam infinitesimal_of(const LanglandsParam& phi) {
  std::vector<std::pair<Label, int>> mults;
  for (const Summand& s : phi.summands)
    for (int j = 0; j < s.a; ++j)
      mults.push_back({Label{s.u, s.e.twice + (s.a - 1) - 2 * j}, 1});
  return make_infinitesimal(phi.group, phi.unit_modulus, mults);
}

LanglandsParam arthur_to_langlands(const ArthurParam& psi) {
  std::vector<Summand> ss;
  for (const ArthurTriple& t : psi.triples)
    for (int j = 0; j < t.b; ++j) ss.push_back(Summand{t.u, HalfInt(t.b - 1 - 2 * j), t.a});
  return make_langlands(psi.group, psi.unit_modulus, std::move(ss));
}

bool is_tempered(const LanglandsParam& phi) {
  return std::all_of(phi.summands.begin(), phi.summands.end(),
                     [](const Summand& s) { return s.e.twice == 0; });
}

std::optional<ArthurParam> is_arthur_type(const LanglandsParam& phi) {
  auto remaining = to_multiset(phi.summands);
  auto take = [&](const Summand& s) -> bool {
    auto it = remaining.find(s);
    if (it == remaining.end()) return false;
    if (--it->second == 0) remaining.erase(it);
    return true;
  };
  std::vector<ArthurTriple> triples;
  while (!remaining.empty()) {
    // The ladder containing a summand of maximal exponent must have it as its
    // top rung, which pins the ladder completely.
    auto top = std::max_element(remaining.begin(), remaining.end(),
                                [](const auto& x, const auto& y) { return x.first.e < y.first.e; });
    Summand s = top->first;
    if (s.e.twice < 0) return std::nullopt;
    int b = s.e.twice + 1;
    for (int j = 0; j < b; ++j)
      if (!take(Summand{s.u, HalfInt(s.e.twice - 2 * j), s.a})) return std::nullopt;
    triples.push_back(ArthurTriple{s.u, s.a, b});
  }
  if (phi.group.is_classical()) {
    const int m = phi.unit_modulus;
    auto ms = to_multiset(triples);
    for (const auto& [t, k] : ms) {
      ArthurTriple d{norm_unit(-t.u, m), t.a, t.b};
      auto it = ms.find(d);
      if (it == ms.end() || it->second != k) return std::nullopt;
      if (norm_unit(2 * t.u, m) == 0 && !right_type(phi.group, t) && k % 2 != 0) return std::nullopt;
    }
  }
  return make_arthur(phi.group, phi.unit_modulus, std::move(triples));
}

bool is_discrete(const LanglandsParam& phi) {
  if (!phi.group.is_classical()) return phi.summands.size() == 1 && phi.summands[0].e.twice == 0;
  if (!is_tempered(phi)) return false;
  auto ms = to_multiset(phi.summands);
  for (const auto& [s, k] : ms) {
    if (k != 1) return false;
    if (!self_dual(s, phi.unit_modulus) || !right_type(phi.group, s)) return false;
  }
  return true;
}

ComponentGroup component_group(const LanglandsParam& phi) {
  ComponentGroup cg;
  auto ms = to_multiset(phi.summands);
  if (!phi.group.is_classical()) {
    cg.gl_factors = static_cast<int>(ms.size());
    return cg;
  }
  const int m = phi.unit_modulus;
  for (const auto& [s, k] : ms) {
    (void)k;
    if (self_dual(s, m)) {
      // Right-type pieces carry an orthogonal multiplicity space (an O
      // factor); wrong-type ones a symplectic space, which is connected.
      if (right_type(phi.group, s)) ++cg.orthogonal_factors;
    } else {
      Summand d = dual_summand(s, m);
      if (s < d) ++cg.gl_factors;
    }
  }
  if (phi.group.family == Family::Symplectic) {
    cg.two_rank = cg.orthogonal_factors;
  } else {
    cg.two_rank = std::max(0, cg.orthogonal_factors - 1);
  }
  return cg;
}

LanglandsParam induce(const std::vector<LanglandsParam>& gl_parts,
                      const std::optional<LanglandsParam>& classical_part,
                      const DualGroupSpec& group) {
  group.validate();
  int m = classical_part ? classical_part->unit_modulus
                         : (gl_parts.empty() ? 4 : gl_parts[0].unit_modulus);
  int gl_total = 0;
  for (const LanglandsParam& p : gl_parts) {
    if (p.group.family != Family::GeneralLinear)
      throw std::invalid_argument("induce: non-classical blocks must be general linear");
    if (p.unit_modulus != m) throw std::invalid_argument("induce: unit modulus mismatch");
    gl_total += p.group.size;
  }
  std::vector<Summand> ss;
  if (!group.is_classical()) {
    if (classical_part) throw std::invalid_argument("induce: classical block in a general linear target");
    if (gl_total != group.size) throw std::invalid_argument("induce: sizes do not add up");
    for (const LanglandsParam& p : gl_parts)
      ss.insert(ss.end(), p.summands.begin(), p.summands.end());
    return make_langlands(group, m, std::move(ss));
  }
  int cl = 0;
  if (classical_part) {
    if (classical_part->group.family != group.family)
      throw std::invalid_argument("induce: classical block family mismatch");
    cl = classical_part->group.size;
    ss.insert(ss.end(), classical_part->summands.begin(), classical_part->summands.end());
  }
  if (2 * gl_total + cl != group.size) throw std::invalid_argument("induce: sizes do not add up");
  for (const LanglandsParam& p : gl_parts)
    for (const Summand& s : p.summands) {
      ss.push_back(s);
      ss.push_back(dual_summand(s, m));
    }
  return make_langlands(group, m, std::move(ss));
}

std::string summand_str(const Summand& s) {
  return "(" + std::to_string(s.u) + "," + s.e.str() + "," + std::to_string(s.a) + ")";
}

std::string param_str(const LanglandsParam& phi) {
  std::string out = phi.group.name() + "{";
  for (size_t i = 0; i < phi.summands.size(); ++i) {
    if (i) out += ",";
    out += summand_str(phi.summands[i]);
  }
  return out + "}";
}

}  // namespace vogan

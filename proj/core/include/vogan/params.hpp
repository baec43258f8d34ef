#ifndef VOGAN_PARAMS_HPP
#define VOGAN_PARAMS_HPP

#include "vogan/lie.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vogan {

// Half-integers are stored doubled so that all arithmetic stays in Z.
struct HalfInt {
  int twice = 0;

  HalfInt() = default;
  explicit HalfInt(int t) : twice(t) {}
  static HalfInt whole(int e) { return HalfInt(2 * e); }

  bool is_integer() const { return twice % 2 == 0; }
  HalfInt operator-() const { return HalfInt(-twice); }
  std::string str() const;

  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

HalfInt operator+(HalfInt a, HalfInt b);
HalfInt operator-(HalfInt a, HalfInt b);

// Parses "0", "-2", "1/2", "-3/2". Throws std::invalid_argument otherwise.
HalfInt parse_half(const std::string& s);

inline int norm_unit(int u, int m) { return ((u % m) + m) % m; }

// A basis label: unit class u in Z/m plus a (doubled) exponent. The unramified
// part of a one-dimensional piece acts through the u-th power of a fixed
// finite-order character, the q-power part through the exponent.
struct Label {
  int u = 0;
  int e2 = 0;

  friend auto operator<=>(const Label&, const Label&) = default;
};

// Indecomposable piece: unit class u, center exponent e, dimension a. It
// covers the labels (u, e + (a-1)/2 - j) for j = 0..a-1.
struct Summand {
  int u = 0;
  HalfInt e;
  int a = 1;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

struct LanglandsParam {
  DualGroupSpec group;
  int unit_modulus = 4;
  std::vector<Summand> summands;  // canonically sorted by make_langlands
};

// Ladder (u, a, b): dimension-a piece tensored with the b-dimensional
// symmetric power, centered at exponent 0.
struct ArthurTriple {
  int u = 0;
  int a = 1;
  int b = 1;

  friend auto operator<=>(const ArthurTriple&, const ArthurTriple&) = default;
};

struct ArthurParam {
  DualGroupSpec group;
  int unit_modulus = 4;
  std::vector<ArthurTriple> triples;
};

struct InfinitesimalParam {
  DualGroupSpec group;
  int unit_modulus = 4;
  std::map<Label, int> mult;  // label -> multiplicity (> 0)
};

// Factories normalize unit classes mod m, sort, and validate; validation
// errors are std::invalid_argument naming the violated invariant.
LanglandsParam make_langlands(DualGroupSpec g, int unit_modulus, std::vector<Summand> summands);
ArthurParam make_arthur(DualGroupSpec g, int unit_modulus, std::vector<ArthurTriple> triples);
InfinitesimalParam make_infinitesimal(DualGroupSpec g, int unit_modulus,
                                      const std::vector<std::pair<Label, int>>& mults);

Summand dual_summand(const Summand& s, int m);
Label dual_label(const Label& l, int m);
bool self_dual(const Summand& s, int m);

// A self-dual summand is orthogonal iff a is odd (the unit character is
// always orthogonal, the a-dimensional symmetric power alternates).
bool summand_orthogonal(const Summand& s);
// Family-required self-dual type: symplectic groups need symplectic pieces
// (a even), orthogonal groups orthogonal ones (a odd).
bool right_type(const DualGroupSpec& g, const Summand& s);

// Ladder type: orthogonal iff a and b have the same parity.
bool triple_orthogonal(const ArthurTriple& t);
bool right_type(const DualGroupSpec& g, const ArthurTriple& t);

InfinitesimalParam infinitesimal_of(const LanglandsParam& phi);
LanglandsParam arthur_to_langlands(const ArthurParam& psi);

bool is_tempered(const LanglandsParam& phi);

// Unique decomposition of the summand multiset into ladders centered at
// exponent 0, if one exists (plus the classical duality/type closure).
// Every ladder top is forced, so a greedy scan is a complete decision
// procedure; there is nothing to backtrack over.
std::optional<ArthurParam> is_arthur_type(const LanglandsParam& phi);

bool is_discrete(const LanglandsParam& phi);

struct ComponentGroup {
  int gl_factors = 0;          // dual pairs {tau, tau*}, tau != tau*
  int orthogonal_factors = 0;  // self-dual pieces of the family-required type
  int two_rank = 0;            // rank of the elementary 2-group of components
};

ComponentGroup component_group(const LanglandsParam& phi);

// Parabolic induction on parameters: GL blocks contribute their summands
// plus (for classical groups) the duals, a same-family classical block
// passes through unchanged. Sizes must add up to the target.
LanglandsParam induce(const std::vector<LanglandsParam>& gl_parts,
                      const std::optional<LanglandsParam>& classical_part,
                      const DualGroupSpec& group);

std::string summand_str(const Summand& s);
std::string param_str(const LanglandsParam& phi);

}  // namespace vogan

#endif

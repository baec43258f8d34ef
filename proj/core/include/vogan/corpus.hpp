#ifndef VOGAN_CORPUS_HPP
#define VOGAN_CORPUS_HPP

#include "vogan/orbits.hpp"
#include "vogan/sl2.hpp"

#include <set>
#include <string>
#include <vector>

namespace vogan {

// Generation bounds. Defaults are the desk-scale corpus: exhaustive general
// linear up to size 6 with |e| <= 3/2, exhaustive Sp up to 6 and SO up to 7
// over unit modulus 4 with |e| <= 1, plus 200 seeded random classical
// parameters (half of them biased toward discrete ones). The per-family
// size knobs refine the single ceiling so each family stays at the scale
// its enumeration can afford; max_size stays the hard cap for everything.
struct CorpusSpec {
  std::set<Family> families = {Family::GeneralLinear, Family::Symplectic,
                               Family::EvenOrthogonal, Family::OddOrthogonal};
  int max_size = 12;  // hard ceiling, enforced
  int gl_size = 6;
  int sp_size = 6;
  int so_size = 7;
  int gl_exp2_bound = 3;         // doubled label bound for gl enumeration
  int classical_exp2_bound = 2;  // doubled label bound for Sp/SO enumeration
  int unit_modulus = 4;
  int random_count = 200;
  int random_min_size = 4;
  int random_max_size = 10;
  uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument on bad bounds
};

// Deterministic, order-stable, globally deduplicated parameter list.
std::vector<LanglandsParam> generate(const CorpusSpec& spec);

struct Violation {
  std::string property;
  std::string parameter;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::vector<Violation> violations;
  std::map<std::string, long> coverage;  // property name -> checks executed
  int corpus_size = 0;
  int distinct_gradings = 0;
};

// Runs every theorem-level invariant over the corpus: the openness/order
// equivalence, conormal dimension identity, tempered/Arthur equivalence,
// duality on orbit censuses, relabeling invariance, triple identities,
// Dynkin label bounds, the discrete pipeline, and the partition
// cross-classification. Violations are data, not errors. jobs > 1 fans
// per-parameter and per-grading work over threads; results are merged by
// index, so output is identical for any job count.
CheckReport check_all(const CorpusSpec& spec, int jobs = 1);

}  // namespace vogan

#endif

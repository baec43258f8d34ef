#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vogan/corpus.hpp"

using namespace vogan;

namespace {

CorpusSpec gl_only(int size, int bound, int modulus) {
  CorpusSpec s;
  s.families = {Family::GeneralLinear};
  s.gl_size = size;
  s.gl_exp2_bound = bound;
  s.unit_modulus = modulus;
  s.random_count = 0;
  return s;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(CorpusSpec{}.validate());
  CorpusSpec bad;
  bad.max_size = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CorpusSpec swapped;
  swapped.random_min_size = 9;
  swapped.random_max_size = 4;
  CHECK_THROWS_AS(swapped.validate(), std::invalid_argument);
  CorpusSpec zero_mod;
  zero_mod.unit_modulus = 0;
  CHECK_THROWS_AS(zero_mod.validate(), std::invalid_argument);
  CorpusSpec none;
  none.families = {};
  CHECK_THROWS_AS(none.validate(), std::invalid_argument);
}

TEST_CASE("generation is deterministic") {
  CorpusSpec spec;
  spec.gl_size = 3;
  spec.sp_size = 4;
  spec.so_size = 5;
  spec.random_count = 20;
  auto a = generate(spec);
  auto b = generate(spec);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(param_str(a[i]) == param_str(b[i]));
}

TEST_CASE("unramified rank two enumeration is exactly seven strong") {
  // Trivial unit class, exponent window 1/2: six multisets of two singles
  // from exponents -1/2, 0, 1/2, plus the full two-chain.
  auto params = generate(gl_only(2, 1, 1));
  std::vector<std::string> size2;
  for (const LanglandsParam& p : params)
    if (p.group.size == 2) size2.push_back(param_str(p));
  CHECK(size2.size() == 7);
  std::set<std::string> uniq(size2.begin(), size2.end());
  CHECK(uniq.size() == 7);
  CHECK(uniq.count("GL(2){(0,0,2)}") == 1);
  CHECK(uniq.count("GL(2){(0,-1/2,1),(0,1/2,1)}") == 1);
}

TEST_CASE("generated parameters are deduplicated and within bounds") {
  CorpusSpec spec;
  spec.gl_size = 3;
  spec.sp_size = 4;
  spec.so_size = 5;
  spec.random_count = 30;
  spec.random_min_size = 4;
  spec.random_max_size = 6;
  auto params = generate(spec);
  std::set<std::string> seen;
  for (const LanglandsParam& p : params) {
    std::string key = p.group.name() + "#" + param_str(p);
    CHECK(seen.insert(key).second);
    CHECK(p.group.size <= spec.max_size);
  }
  // All four families actually appear.
  std::set<Family> fams;
  for (const LanglandsParam& p : params) fams.insert(p.group.family);
  CHECK(fams.size() == 4);
}

TEST_CASE("every theorem-level property holds on a small corpus") {
  CorpusSpec spec;
  spec.families = {Family::GeneralLinear, Family::Symplectic};
  spec.gl_size = 3;
  spec.sp_size = 4;
  spec.gl_exp2_bound = 2;
  spec.classical_exp2_bound = 2;
  spec.unit_modulus = 2;
  spec.random_count = 6;
  spec.random_min_size = 4;
  spec.random_max_size = 4;

  CheckReport report = check_all(spec);
  CHECK(report.corpus_size > 0);
  CHECK(report.distinct_gradings > 0);
  for (const Violation& v : report.violations) {
    CAPTURE(v.property);
    CAPTURE(v.parameter);
    CAPTURE(v.expected);
    CAPTURE(v.actual);
    CHECK(false);
  }

  const char* properties[] = {
      "realization_verified", "conormal_dimension",  "open_iff_zero_order",
      "order_equals_codim",   "tempered_implies_open", "tempered_iff_open_arthur",
      "relabeling_invariance", "jm_identities",      "dynkin_labels",
      "discrete_pipeline",    "census_open_closed",  "dual_open_closed",
      "dual_dim_bound",       "gl_signature_separates", "gl_double_dual",
      "gl_closure_order",     "partition_classification"};
  for (const char* name : properties) {
    CAPTURE(name);
    auto it = report.coverage.find(name);
    REQUIRE(it != report.coverage.end());
    CHECK(it->second > 0);
  }
}

TEST_CASE("the report does not depend on the number of jobs") {
  CorpusSpec spec = gl_only(3, 2, 2);
  CheckReport one = check_all(spec, 1);
  CheckReport four = check_all(spec, 4);
  CHECK(one.corpus_size == four.corpus_size);
  CHECK(one.distinct_gradings == four.distinct_gradings);
  CHECK(one.violations.size() == four.violations.size());
  CHECK(one.coverage == four.coverage);
}

#include "doctest.h"

#include <stdexcept>

#include "vogan/realization.hpp"
#include "vogan/sl2.hpp"

using namespace vogan;

namespace {

const DualGroupSpec gl2{Family::GeneralLinear, 2};
const DualGroupSpec gl3{Family::GeneralLinear, 3};
const DualGroupSpec gl4{Family::GeneralLinear, 4};
const DualGroupSpec sp4{Family::Symplectic, 4};
const DualGroupSpec so4{Family::EvenOrthogonal, 4};
const DualGroupSpec so5{Family::OddOrthogonal, 5};

Summand sm(int u, int e2, int a) { return Summand{u, HalfInt(e2), a}; }

RatMatrix unit(int n, int r, int c) {
  RatMatrix m(n, n);
  m.at(r, c) = 1;
  return m;
}

RatMatrix diag(const std::vector<int>& d) {
  RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

LieElement realized(const DualGroupSpec& g, const std::vector<Summand>& sums) {
  return make_element(g, realize(make_langlands(g, 4, sums)).x);
}

}  // namespace

TEST_CASE("jordan types from rank profiles") {
  CHECK(jordan_partition(unit(2, 0, 1)) == std::vector<int>{2});
  CHECK(jordan_partition(RatMatrix(2, 2)) == std::vector<int>{1, 1});
  CHECK(jordan_partition(realize(make_langlands(sp4, 4, {sm(0, 0, 4)})).x) ==
        std::vector<int>{4});
  CHECK(jordan_partition(unit(4, 0, 1) + unit(4, 2, 3)) == std::vector<int>{2, 2});
  CHECK_THROWS_AS(jordan_partition(RatMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("triple completion of a single raising entry") {
  Sl2Triple t = jm_triple(make_element(gl2, unit(2, 0, 1)));
  CHECK(t.h.m == diag({1, -1}));
  CHECK(t.f.m == unit(2, 1, 0));
  CHECK(bracket(t.h, t.e).m == Rat(2) * t.e.m);
  CHECK(bracket(t.h, t.f).m == Rat(-2) * t.f.m);
  CHECK(bracket(t.e, t.f).m == t.h.m);
}

TEST_CASE("triple completion of the regular nilpotent") {
  Sl2Triple t = jm_triple(make_element(gl3, unit(3, 0, 1) + unit(3, 1, 2)));
  CHECK(t.h.m == diag({2, 0, -2}));
  CHECK(bracket(t.e, t.f).m == t.h.m);
}

TEST_CASE("triples inside a classical algebra stay inside it") {
  LieElement e = realized(sp4, {sm(0, 0, 4)});
  Sl2Triple t = jm_triple(e);
  CHECK(is_member(sp4, t.h.m));
  CHECK(is_member(sp4, t.f.m));
  CHECK(bracket(t.e, t.f).m == t.h.m);
}

TEST_CASE("no diagonal completion exists for a non-adapted nilpotent") {
  // E_{01} + E_{02} needs the same weight on coordinates 1 and 2 but
  // gives them different string positions.
  CHECK_THROWS(jm_triple(make_element(gl3, unit(3, 0, 1) + unit(3, 0, 2))));
  CHECK_THROWS_AS(jm_triple(make_element(gl2, RatMatrix(2, 2))), std::invalid_argument);
}

TEST_CASE("weighted Dynkin labels of small orbits") {
  CHECK(weighted_dynkin(make_element(gl2, unit(2, 0, 1))) == std::vector<int>{2});
  CHECK(weighted_dynkin(make_element(gl3, unit(3, 0, 1) + unit(3, 1, 2))) ==
        std::vector<int>{2, 2});
  CHECK(weighted_dynkin(make_element(gl4, unit(4, 0, 1) + unit(4, 2, 3))) ==
        std::vector<int>{0, 2, 0});
  CHECK(weighted_dynkin(realized(sp4, {sm(0, 0, 4)})) == std::vector<int>{2, 2});
  CHECK(weighted_dynkin(realized(so4, {sm(0, 0, 3), sm(0, 0, 1)})) == std::vector<int>{2, 2});
  CHECK(weighted_dynkin(realized(so5, {sm(0, 0, 5)})) == std::vector<int>{2, 2});
}

TEST_CASE("ad-eigenspace dimensions of a diagonal element") {
  std::map<int, int> g = grading_dims(gl2, diag({1, -1}));
  CHECK(g == std::map<int, int>{{-2, 1}, {0, 2}, {2, 1}});

  std::map<int, int> s = grading_dims(sp4, diag({3, 1, -1, -3}));
  CHECK(s.at(0) == 2);
  CHECK(s.at(2) == 2);
  int total = 0;
  for (const auto& [w, d] : s) total += d;
  CHECK(total == sp4.algebra_dim());

  // Root values must be integers; entries of gamma need not be, so the
  // symmetric half-integer pair passes while a lone half fails.
  RatMatrix half(2, 2);
  half.at(0, 0) = Rat(1, 2);
  half.at(1, 1) = Rat(-1, 2);
  CHECK(grading_dims(gl2, half) == std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});
  RatMatrix lone(2, 2);
  lone.at(0, 0) = Rat(1, 2);
  CHECK_THROWS_AS(grading_dims(gl2, lone), std::invalid_argument);
}

TEST_CASE("distinguished nilpotents by grading balance") {
  CHECK(is_distinguished(make_element(gl2, unit(2, 0, 1))));
  CHECK_FALSE(is_distinguished(make_element(gl4, unit(4, 0, 1) + unit(4, 2, 3))));
  CHECK(is_distinguished(realized(sp4, {sm(0, 0, 4)})));
  CHECK_FALSE(is_distinguished(realized(sp4, {sm(0, 0, 2), sm(0, 0, 2)})));
}

TEST_CASE("distinguished partitions by combinatorics") {
  CHECK(distinguished_partition(gl4, {4}));
  CHECK_FALSE(distinguished_partition(gl4, {2, 2}));
  CHECK(distinguished_partition(sp4, {4}));
  CHECK_FALSE(distinguished_partition(sp4, {2, 2}));
  CHECK(distinguished_partition(DualGroupSpec{Family::Symplectic, 6}, {4, 2}));
  CHECK(distinguished_partition(so5, {5}));
  CHECK(distinguished_partition(so4, {3, 1}));
  CHECK_FALSE(distinguished_partition(so5, {3, 1, 1}));
  CHECK_FALSE(distinguished_partition(DualGroupSpec{Family::EvenOrthogonal, 6}, {3, 3}));
}

TEST_CASE("the two distinguished notions agree on realized orbits") {
  for (auto [g, sums] : std::vector<std::pair<DualGroupSpec, std::vector<Summand>>>{
           {sp4, {sm(0, 0, 4)}},
           {sp4, {sm(0, 0, 2), sm(0, 0, 2)}},
           {DualGroupSpec{Family::Symplectic, 6}, {sm(0, 0, 4), sm(0, 0, 2)}},
           {so5, {sm(0, 0, 5)}},
           {so4, {sm(0, 0, 3), sm(0, 0, 1)}}}) {
    LieElement e = realized(g, sums);
    CHECK(is_distinguished(e) == distinguished_partition(g, jordan_partition(e.m)));
  }
}

TEST_CASE("q-distinguished gradings") {
  InfinitesimalParam chain =
      infinitesimal_of(make_langlands(gl2, 4, {sm(0, 0, 2)}));
  CHECK(is_q_distinguished(chain));

  InfinitesimalParam flat = make_infinitesimal(gl2, 4, {{Label{0, 0}, 2}});
  CHECK_FALSE(is_q_distinguished(flat));

  CHECK(is_q_distinguished(infinitesimal_of(make_langlands(sp4, 4, {sm(0, 0, 4)}))));
}

TEST_CASE("the discrete pipeline produces a verified witness") {
  PipelineResult gl = heiermann_pipeline(infinitesimal_of(make_langlands(gl2, 4, {sm(0, 0, 2)})));
  CHECK(gl.q_distinguished);
  REQUIRE(gl.witness.has_value());
  CHECK(gl.witness_partition == std::vector<int>{2});

  PipelineResult nu4 = heiermann_pipeline(infinitesimal_of(make_langlands(sp4, 4, {sm(0, 0, 4)})));
  CHECK(nu4.q_distinguished);
  REQUIRE(nu4.witness.has_value());
  CHECK(nu4.witness_partition == std::vector<int>{4});

  PipelineResult nu5 = heiermann_pipeline(infinitesimal_of(make_langlands(so5, 4, {sm(0, 0, 5)})));
  CHECK(nu5.q_distinguished);
  CHECK(nu5.witness_partition == std::vector<int>{5});

  PipelineResult flat = heiermann_pipeline(make_infinitesimal(gl2, 4, {{Label{0, 0}, 2}}));
  CHECK_FALSE(flat.q_distinguished);
  CHECK_FALSE(flat.witness.has_value());
}

TEST_CASE("the pipeline handles several unit classes at once") {
  // Two symplectic classes: the dense point is (2,2), distinguished in
  // Sp(2) x Sp(2) though not in sp_4.
  InfinitesimalParam lam =
      infinitesimal_of(make_langlands(sp4, 4, {sm(0, 0, 2), sm(2, 0, 2)}));
  CHECK(is_q_distinguished(lam));
  PipelineResult r = heiermann_pipeline(lam);
  CHECK(r.q_distinguished);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness_partition == std::vector<int>{2, 2});
}

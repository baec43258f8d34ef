#include "doctest.h"

#include <stdexcept>

#include "vogan/params.hpp"

using namespace vogan;

namespace {

const DualGroupSpec gl2{Family::GeneralLinear, 2};
const DualGroupSpec gl3{Family::GeneralLinear, 3};
const DualGroupSpec gl4{Family::GeneralLinear, 4};
const DualGroupSpec sp4{Family::Symplectic, 4};
const DualGroupSpec so5{Family::OddOrthogonal, 5};

Summand sm(int u, int e2, int a) { return Summand{u, HalfInt(e2), a}; }

}  // namespace

TEST_CASE("half integers print in lowest terms") {
  CHECK(HalfInt::whole(0).str() == "0");
  CHECK(HalfInt::whole(-2).str() == "-2");
  CHECK(HalfInt(1).str() == "1/2");
  CHECK(HalfInt(-3).str() == "-3/2");
  CHECK(HalfInt(1).is_integer() == false);
  CHECK(HalfInt::whole(3).is_integer());
  CHECK((HalfInt(1) + HalfInt(1)).str() == "1");
  CHECK((HalfInt::whole(1) - HalfInt(1)).str() == "1/2");
}

TEST_CASE("parse_half accepts canonical spellings only") {
  CHECK(parse_half("2").twice == 4);
  CHECK(parse_half("-1/2").twice == -1);
  CHECK(parse_half("0").twice == 0);
  CHECK_THROWS_AS(parse_half("2/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_half("x"), std::invalid_argument);
}

TEST_CASE("unit normalization and duality") {
  CHECK(norm_unit(-1, 4) == 3);
  CHECK(norm_unit(5, 4) == 1);
  Summand s = sm(1, 2, 3);
  Summand d = dual_summand(s, 4);
  CHECK(d.u == 3);
  CHECK(d.e.twice == -2);
  CHECK(d.a == 3);
  CHECK(self_dual(sm(0, 0, 2), 4));
  CHECK(self_dual(sm(2, 0, 2), 4));
  CHECK_FALSE(self_dual(sm(1, 0, 2), 4));
  CHECK_FALSE(self_dual(sm(0, 1, 2), 4));
}

TEST_CASE("summand types follow parity of the dimension") {
  CHECK(summand_orthogonal(sm(0, 0, 3)));
  CHECK_FALSE(summand_orthogonal(sm(0, 0, 2)));
  CHECK(right_type(sp4, sm(0, 0, 2)));
  CHECK_FALSE(right_type(sp4, sm(0, 0, 3)));
  CHECK(right_type(so5, sm(0, 0, 3)));
}

TEST_CASE("make_langlands validates and canonicalizes") {
  LanglandsParam phi = make_langlands(gl2, 4, {sm(0, 0, 2)});
  CHECK(param_str(phi) == "GL(2){(0,0,2)}");

  // Units are reduced mod m and summands sorted.
  LanglandsParam psi = make_langlands(gl2, 4, {sm(-1, 0, 1), sm(0, 0, 1)});
  CHECK(param_str(psi) == "GL(2){(0,0,1),(3,0,1)}");

  CHECK_THROWS_AS(make_langlands(gl2, 4, {sm(0, 0, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(make_langlands(gl2, 0, {sm(0, 0, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(make_langlands(gl2, 4, {sm(0, 0, 1), Summand{0, HalfInt::whole(0), 0}}),
                  std::invalid_argument);
}

TEST_CASE("classical parameters must be closed under duality") {
  // (1,0,2) without its dual (3,0,2) is rejected; adding it passes.
  CHECK_THROWS_AS(make_langlands(sp4, 4, {sm(1, 0, 2), sm(0, 0, 2)}), std::invalid_argument);
  CHECK_NOTHROW(make_langlands(sp4, 4, {sm(1, 0, 2), sm(3, 0, 2)}));
}

TEST_CASE("wrong-type self-dual pieces need even multiplicity") {
  // a = 3 and a = 1 are orthogonal pieces, the wrong type inside Sp(4).
  CHECK_THROWS_AS(make_langlands(sp4, 4, {sm(0, 0, 3), sm(0, 0, 1)}), std::invalid_argument);
  CHECK_NOTHROW(make_langlands(sp4, 4, {sm(0, 0, 1), sm(0, 0, 1), sm(0, 0, 2)}));
  // a = 2 is symplectic, the wrong type inside SO(5).
  CHECK_THROWS_AS(make_langlands(so5, 4, {sm(0, 0, 2), sm(0, 0, 3)}), std::invalid_argument);
  CHECK_NOTHROW(make_langlands(so5, 4, {sm(0, 0, 2), sm(0, 0, 2), sm(0, 0, 1)}));
}

TEST_CASE("orthogonal parameters carry a trivial determinant unit") {
  // Unit parts 2+2+... : (2,0,1) twice plus (0,0,3) sums to 4+0 = 0 mod 4.
  CHECK_NOTHROW(make_langlands(so5, 4, {sm(2, 0, 1), sm(2, 0, 1), sm(0, 0, 3)}));
  // (2,0,1) with (0,0,4)-type filler would leave determinant 2: rejected.
  CHECK_THROWS_AS(make_langlands(so5, 4, {sm(2, 0, 3), sm(0, 0, 1), sm(0, 0, 1)}),
                  std::invalid_argument);
}

TEST_CASE("arthur ladders expand to diagonal shifts") {
  ArthurParam one_two = make_arthur(gl2, 4, {ArthurTriple{0, 1, 2}});
  LanglandsParam phi = arthur_to_langlands(one_two);
  CHECK(param_str(phi) == "GL(2){(0,-1/2,1),(0,1/2,1)}");

  ArthurParam two_one = make_arthur(gl2, 4, {ArthurTriple{0, 2, 1}});
  CHECK(param_str(arthur_to_langlands(two_one)) == "GL(2){(0,0,2)}");

  ArthurParam one_three = make_arthur(gl3, 4, {ArthurTriple{0, 1, 3}});
  CHECK(param_str(arthur_to_langlands(one_three)) == "GL(3){(0,-1,1),(0,0,1),(0,1,1)}");
}

TEST_CASE("arthur type detection inverts the ladder expansion") {
  LanglandsParam st = make_langlands(gl2, 4, {sm(0, 0, 2)});
  auto w = is_arthur_type(st);
  REQUIRE(w.has_value());
  REQUIRE(w->triples.size() == 1);
  CHECK(w->triples[0].u == 0);
  CHECK(w->triples[0].a == 2);
  CHECK(w->triples[0].b == 1);

  // Half-shifted pair: a genuine (1,2) ladder.
  LanglandsParam pair = make_langlands(gl2, 4, {sm(0, 1, 1), sm(0, -1, 1)});
  auto w2 = is_arthur_type(pair);
  REQUIRE(w2.has_value());
  CHECK(w2->triples[0].a == 1);
  CHECK(w2->triples[0].b == 2);

  // Exponents 1 and 0 do not form a centered ladder.
  LanglandsParam skew = make_langlands(gl2, 4, {sm(0, 2, 1), sm(0, 0, 1)});
  CHECK_FALSE(is_arthur_type(skew).has_value());

  // Round trip on a two-ladder parameter.
  ArthurParam psi = make_arthur(sp4, 4, {ArthurTriple{0, 2, 1}, ArthurTriple{0, 1, 2}});
  auto back = is_arthur_type(arthur_to_langlands(psi));
  REQUIRE(back.has_value());
  CHECK(param_str(arthur_to_langlands(*back)) == param_str(arthur_to_langlands(psi)));
}

TEST_CASE("tempered means every exponent vanishes") {
  CHECK(is_tempered(make_langlands(gl2, 4, {sm(0, 0, 2)})));
  CHECK_FALSE(is_tempered(make_langlands(gl2, 4, {sm(0, 1, 1), sm(0, -1, 1)})));
}

TEST_CASE("discreteness needs distinct self-dual right-type pieces") {
  CHECK(is_discrete(make_langlands(gl2, 4, {sm(0, 0, 2)})));
  CHECK(is_discrete(make_langlands(sp4, 4, {sm(0, 0, 4)})));
  CHECK(is_discrete(make_langlands(sp4, 4, {sm(0, 0, 2), sm(2, 0, 2)})));
  // Repetition kills it.
  CHECK_FALSE(is_discrete(make_langlands(sp4, 4, {sm(0, 0, 2), sm(0, 0, 2)})));
  // A non-tempered parameter is never discrete.
  CHECK_FALSE(is_discrete(make_langlands(gl2, 4, {sm(0, 1, 1), sm(0, -1, 1)})));
}

TEST_CASE("component groups") {
  ComponentGroup st = component_group(make_langlands(gl2, 4, {sm(0, 0, 2)}));
  CHECK(st.gl_factors == 1);
  CHECK(st.two_rank == 0);

  ComponentGroup nu4 = component_group(make_langlands(sp4, 4, {sm(0, 0, 4)}));
  CHECK(nu4.orthogonal_factors == 1);
  CHECK(nu4.two_rank == 1);

  ComponentGroup two = component_group(make_langlands(sp4, 4, {sm(0, 0, 2), sm(2, 0, 2)}));
  CHECK(two.orthogonal_factors == 2);
  CHECK(two.two_rank == 2);

  // SO discounts one global sign: a single orthogonal factor is connected.
  ComponentGroup so = component_group(make_langlands(so5, 4, {sm(0, 0, 5)}));
  CHECK(so.orthogonal_factors == 1);
  CHECK(so.two_rank == 0);

  // A dual pair contributes a connected gl factor.
  ComponentGroup pr = component_group(make_langlands(sp4, 4, {sm(1, 0, 2), sm(3, 0, 2)}));
  CHECK(pr.gl_factors == 1);
  CHECK(pr.two_rank == 0);
}

TEST_CASE("infinitesimal labels expand summands into exponent strings") {
  InfinitesimalParam lam = infinitesimal_of(make_langlands(gl3, 4, {sm(0, 0, 3)}));
  CHECK(lam.group == gl3);
  // nu_3 spreads over exponents 1, 0, -1: doubled labels 2, 0, -2.
  REQUIRE(lam.mult.size() == 3);
  int total = 0;
  for (const auto& [l, k] : lam.mult) total += k;
  CHECK(total == 3);
  CHECK(lam.mult.count(Label{0, 2}) == 1);
  CHECK(lam.mult.count(Label{0, 0}) == 1);
  CHECK(lam.mult.count(Label{0, -2}) == 1);
}

TEST_CASE("induction assembles a classical parameter from gl blocks") {
  LanglandsParam gl_part = make_langlands(gl2, 4, {sm(1, 0, 2)});
  LanglandsParam core = make_langlands(sp4, 4, {sm(0, 0, 4)});
  LanglandsParam ind = induce({gl_part}, core, DualGroupSpec{Family::Symplectic, 8});
  CHECK(ind.group.size == 8);
  CHECK(param_str(ind) == "Sp(8){(0,0,4),(1,0,2),(3,0,2)}");
  CHECK_THROWS_AS(induce({gl_part}, core, DualGroupSpec{Family::Symplectic, 6}),
                  std::invalid_argument);
}

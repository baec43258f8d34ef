#include "doctest.h"

#include "vogan/realization.hpp"

using namespace vogan;

namespace {

const DualGroupSpec gl2{Family::GeneralLinear, 2};
const DualGroupSpec gl3{Family::GeneralLinear, 3};
const DualGroupSpec sp4{Family::Symplectic, 4};

Summand sm(int u, int e2, int a) { return Summand{u, HalfInt(e2), a}; }

RatMatrix unit(int n, int r, int c) {
  RatMatrix m(n, n);
  m.at(r, c) = 1;
  return m;
}

LanglandsParam steinberg() { return make_langlands(gl2, 4, {sm(0, 0, 2)}); }
LanglandsParam reg3() { return make_langlands(gl3, 4, {sm(0, 0, 3)}); }
LanglandsParam mid3() { return make_langlands(gl3, 4, {sm(0, 1, 2), sm(0, -2, 1)}); }
LanglandsParam zero3() {
  return make_langlands(gl3, 4, {sm(0, 2, 1), sm(0, 0, 1), sm(0, -2, 1)});
}

}  // namespace

TEST_CASE("arrangement sorts labels by descending exponent") {
  Arrangement ctx = arrange(infinitesimal_of(reg3()));
  REQUIRE(ctx.size() == 3);
  CHECK(ctx.labels[0].e2 == 2);
  CHECK(ctx.labels[1].e2 == 0);
  CHECK(ctx.labels[2].e2 == -2);
  CHECK(ctx.positions_of(Label{0, 0}) == std::vector<int>{1});
}

TEST_CASE("graded pieces of a regular chain") {
  Arrangement ctx = arrange(infinitesimal_of(reg3()));
  VoganSpaces sp = build_spaces(ctx);
  CHECK(sp.v.dim() == 2);
  CHECK(sp.v_star.dim() == 2);
  CHECK(sp.h.dim() == 3);
  CHECK(graded_piece(ctx, 2).dim() == 1);
  CHECK(graded_piece(ctx, 3).dim() == 0);
  CHECK(contains(sp.v, flatten(unit(3, 0, 1))));
  CHECK(contains(sp.v_star, flatten(unit(3, 1, 0))));
  CHECK_FALSE(contains(sp.v, flatten(unit(3, 1, 0))));
}

TEST_CASE("graded pieces never mix unit classes") {
  // Two classes 1 and 3 with matching exponent drops inside each.
  InfinitesimalParam lam = make_infinitesimal(
      sp4, 4, {{Label{1, 1}, 1}, {Label{1, -1}, 1}, {Label{3, 1}, 1}, {Label{3, -1}, 1}});
  Arrangement ctx = arrange(lam);
  VoganSpaces sp = build_spaces(ctx);
  for (const RatVec& v : sp.v.vectors) {
    RatMatrix m = unflatten(4, v);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (m.at(i, j) != 0) CHECK(ctx.labels[i].u == ctx.labels[j].u);
  }
}

TEST_CASE("the Steinberg parameter realizes as a single raising entry") {
  MatrixRealization r = realize(steinberg());
  CHECK(r.x == unit(2, 0, 1));
  CHECK(build_spaces(r.ctx).v.dim() == 1);
}

TEST_CASE("the regular symplectic parameter realizes with full nilpotent order") {
  MatrixRealization r = realize(make_langlands(sp4, 4, {sm(0, 0, 4)}));
  RatMatrix p = r.x;
  CHECK(rank(p) == 3);
  p = p * r.x;
  CHECK(rank(p) == 2);
  p = p * r.x;
  CHECK(rank(p) == 1);
  p = p * r.x;
  CHECK(rank(p) == 0);
  CHECK(is_member(sp4, r.x));
}

TEST_CASE("tangent dimension distinguishes the chain orbits") {
  Arrangement ctx = arrange(infinitesimal_of(reg3()));
  VoganSpaces sp = build_spaces(ctx);
  CHECK(tangent_dim(ctx, sp, realize_in(ctx, reg3()).x) == 2);
  CHECK(tangent_dim(ctx, sp, realize_in(ctx, mid3()).x) == 1);
  CHECK(tangent_dim(ctx, sp, realize_in(ctx, zero3()).x) == 0);
}

TEST_CASE("commutant of the subregular point in the lowering piece") {
  Arrangement ctx = arrange(infinitesimal_of(reg3()));
  VoganSpaces sp = build_spaces(ctx);
  RatMatrix x = realize_in(ctx, mid3()).x;
  CHECK(x == unit(3, 0, 1));
  SubspaceBasis c = commutant(sp.v_star, x);
  CHECK(same_span(c, make_span(9, {flatten(unit(3, 2, 1))})));
}

TEST_CASE("adjoint order counts the conormal directions") {
  CHECK(l_adjoint_order(reg3()) == 0);
  CHECK(l_adjoint_order(mid3()) == 1);
  CHECK(l_adjoint_order(zero3()) == 2);
  CHECK(is_open(reg3()));
  CHECK_FALSE(is_open(mid3()));
}

TEST_CASE("orbit and fiber dimensions fill the space") {
  ConormalCheck c = conormal_fiber_check(mid3());
  CHECK(c.orbit_dim == 1);
  CHECK(c.fiber_dim == 1);
  CHECK(c.dim_v == 2);
  CHECK(c.holds());
  CHECK(conormal_fiber_check(reg3()).holds());
  CHECK(conormal_fiber_check(zero3()).holds());
}

TEST_CASE("separated exponent ladders do not interact") {
  // Exponents 1 and -1: no raising arrows at all, the point sits alone.
  LanglandsParam gap2 = make_langlands(gl2, 4, {sm(0, 2, 1), sm(0, -2, 1)});
  MatrixRealization r = realize(gap2);
  VoganSpaces sp = build_spaces(r.ctx);
  CHECK(sp.v.dim() == 0);
  CHECK(r.x.is_zero());
  CHECK(l_adjoint_order(gap2) == 0);

  // Exponents 1/2 and -1/2: one arrow, which the point misses.
  LanglandsParam gap1 = make_langlands(gl2, 4, {sm(0, 1, 1), sm(0, -1, 1)});
  CHECK(l_adjoint_order(gap1) == 1);
  CHECK_FALSE(is_open(gap1));
}

TEST_CASE("permuted arrangements give the same invariants") {
  for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Arrangement ctx = arrange_permuted(infinitesimal_of(reg3()), seed);
    VoganSpaces sp = build_spaces(ctx);
    CHECK(sp.v.dim() == 2);
    CHECK(tangent_dim(ctx, sp, realize_in(ctx, mid3()).x) == 1);
    CHECK(commutant(sp.v_star, realize_in(ctx, mid3()).x).dim() == 1);
  }
}

TEST_CASE("realization fails loudly on a grading mismatch") {
  Arrangement ctx = arrange(infinitesimal_of(reg3()));
  // Steinberg labels do not live inside the chain arrangement of gl_3.
  CHECK_THROWS(realize_in(ctx, steinberg()));
}

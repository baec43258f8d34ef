#include "doctest.h"

#include <algorithm>
#include <set>

#include "vogan/orbits.hpp"

using namespace vogan;

namespace {

const DualGroupSpec gl2{Family::GeneralLinear, 2};
const DualGroupSpec gl3{Family::GeneralLinear, 3};
const DualGroupSpec sp4{Family::Symplectic, 4};

Summand sm(int u, int e2, int a) { return Summand{u, HalfInt(e2), a}; }

LanglandsParam reg3() { return make_langlands(gl3, 4, {sm(0, 0, 3)}); }

}  // namespace

TEST_CASE("realized parameters have their predicted rank signature") {
  for (const LanglandsParam& phi :
       {make_langlands(gl2, 4, {sm(0, 0, 2)}), reg3(),
        make_langlands(gl3, 4, {sm(0, 1, 2), sm(0, -2, 1)}),
        make_langlands(sp4, 4, {sm(0, 0, 4)}),
        make_langlands(sp4, 4, {sm(0, 0, 2), sm(2, 0, 2)})}) {
    MatrixRealization r = realize(phi);
    CHECK(signature_of(r.ctx, r.x, Direction::Raise) == expected_signature(r.ctx, phi));
  }
}

TEST_CASE("the chain census lists every orbit once") {
  OrbitCensus census = enumerate_orbits(infinitesimal_of(reg3()));
  CHECK(census.complete);
  CHECK(census.warnings.empty());
  REQUIRE(census.orbits.size() == 4);
  CHECK(census.generated == 4);

  std::vector<int> dims;
  for (const OrbitRecord& o : census.orbits) dims.push_back(o.dim);
  CHECK(dims == std::vector<int>{0, 1, 1, 2});

  int open = 0, closed = 0;
  for (const OrbitRecord& o : census.orbits) {
    open += o.open ? 1 : 0;
    closed += o.closed ? 1 : 0;
  }
  CHECK(open == 1);
  CHECK(closed == 1);
  CHECK(census.orbits.front().closed);
  CHECK(census.orbits.back().open);
}

TEST_CASE("closure order on the chain is the diamond") {
  OrbitCensus census = enumerate_orbits(infinitesimal_of(reg3()));
  REQUIRE(census.orbits.size() == 4);
  const auto& o = census.orbits;
  CHECK(closure_leq(o[0], o[1]));
  CHECK(closure_leq(o[0], o[2]));
  CHECK(closure_leq(o[1], o[3]));
  CHECK(closure_leq(o[2], o[3]));
  CHECK_FALSE(closure_leq(o[1], o[2]));
  CHECK_FALSE(closure_leq(o[2], o[1]));
  CHECK(closure_leq(o[3], o[3]));
  CHECK_FALSE(closure_leq(o[3], o[0]));
}

TEST_CASE("interleaved parities stay independent") {
  // Labels -2, -1, 0: the only raising arrow joins 0 to -2 across the
  // odd label sitting between them.
  InfinitesimalParam lam = make_infinitesimal(
      gl3, 4, {{Label{0, -2}, 1}, {Label{0, -1}, 1}, {Label{0, 0}, 1}});
  OrbitCensus census = enumerate_orbits(lam);
  CHECK(census.complete);
  CHECK(census.spaces.v.dim() == 1);
  REQUIRE(census.orbits.size() == 2);
  CHECK(census.orbits[0].closed);
  CHECK(census.orbits[1].open);
  CHECK(census.orbits[1].dim == 1);
}

TEST_CASE("every window appears in a signature, rank zero included") {
  OrbitCensus census = enumerate_orbits(infinitesimal_of(reg3()));
  // Windows of the chain 2,0,-2: two adjacent steps plus the full span.
  for (const OrbitRecord& o : census.orbits) CHECK(o.signature.size() == 3);
  for (const auto& [key, r] : census.orbits.front().signature) CHECK(r == 0);
  // The open orbit composes to full rank over the whole chain.
  CHECK(census.orbits.back().signature.at(SignatureKey{0, -2, 2}) == 1);
}

TEST_CASE("the open representative is dense") {
  Arrangement ctx = arrange(infinitesimal_of(reg3()));
  VoganSpaces sp = build_spaces(ctx);
  RatMatrix x = open_orbit_rep(ctx, sp);
  CHECK(tangent_dim(ctx, sp, x) == sp.v.dim());
}

TEST_CASE("classical censuses keep zero and the dense orbit") {
  InfinitesimalParam lam = infinitesimal_of(make_langlands(sp4, 4, {sm(0, 0, 4)}));
  OrbitCensus census = enumerate_orbits(lam);
  CHECK_FALSE(census.complete);
  REQUIRE(census.orbits.size() >= 2);
  CHECK(census.orbits.front().dim == 0);
  CHECK(census.orbits.front().closed);
  CHECK(census.orbits.back().open);
  CHECK(census.orbits.back().dim == census.spaces.v.dim());
  // Signatures are distinct after dedup.
  std::set<RankSignature> sigs;
  for (const OrbitRecord& o : census.orbits) sigs.insert(o.signature);
  CHECK(sigs.size() == census.orbits.size());
}

TEST_CASE("duality swaps open and closed on the Steinberg grading") {
  LanglandsParam st = make_langlands(gl2, 4, {sm(0, 0, 2)});
  MatrixRealization r = realize(st);
  VoganSpaces sp = build_spaces(r.ctx);

  DualOrbit of_open = pyasetskii_dual(r.ctx, sp, r.x, Direction::Raise);
  CHECK(of_open.dim == 0);

  RatMatrix zero(2, 2);
  DualOrbit of_zero = pyasetskii_dual(r.ctx, sp, zero, Direction::Raise);
  CHECK(of_zero.dim == 1);
  CHECK(of_zero.dim == sp.v_star.dim());
}

TEST_CASE("general linear duality is an involution on the chain") {
  OrbitCensus census = enumerate_orbits(infinitesimal_of(reg3()));
  for (const OrbitRecord& o : census.orbits) {
    DualOrbit d = pyasetskii_dual(census.ctx, census.spaces, o.rep, Direction::Raise);
    // dim C* >= dim V - dim C, with equality exactly on this grading.
    CHECK(d.dim >= census.spaces.v.dim() - o.dim);
    DualOrbit dd = pyasetskii_dual(census.ctx, census.spaces, d.rep, Direction::Lower);
    CHECK(dd.signature == o.signature);
    CHECK(dd.dim == o.dim);
  }
}

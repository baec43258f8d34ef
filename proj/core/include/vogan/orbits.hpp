#ifndef VOGAN_ORBITS_HPP
#define VOGAN_ORBITS_HPP

#include "vogan/realization.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vogan {

// Raise: the operator increases exponents (lives in the shift +1 piece).
// Lower: it decreases them (shift -1). Signature keys are direction-free.
enum class Direction { Raise, Lower };

// Key {u, lo2, hi2}: unit class and a doubled exponent window inside one
// parity chain. Value: rank of the composite map from the hi2 coordinate
// block all the way to lo2 (Raise) or from lo2 up to hi2 (Lower).
using SignatureKey = std::array<int, 3>;
using RankSignature = std::map<SignatureKey, int>;

// Every admissible window of the arrangement appears as a key, including
// rank-0 ones, so signatures over a fixed arrangement compare pointwise.
RankSignature signature_of(const Arrangement& ctx, const RatMatrix& x, Direction dir);

// The signature the parameter's realization must have: the rank over a
// window counts the summands whose exponent ladder covers it.
RankSignature expected_signature(const Arrangement& ctx, const LanglandsParam& phi);

struct OrbitRecord {
  RankSignature signature;
  int dim = 0;
  RatMatrix rep;
  bool open = false;
  bool closed = false;  // the zero orbit
};

struct OrbitCensus {
  Arrangement ctx;
  VoganSpaces spaces;
  std::vector<OrbitRecord> orbits;  // sorted by (dim, signature)
  bool complete = false;            // general linear enumeration is exhaustive
  int generated = 0;                // raw representatives before signature dedup
  std::vector<std::string> warnings;
};

// General linear: every orbit, via interval multisets on each parity chain.
// Classical: zero, the open orbit, and deduplicated seeded samples; complete
// stays false. Same-signature different-dimension collisions are reported in
// warnings, never silently merged.
OrbitCensus enumerate_orbits(const InfinitesimalParam& lam, uint64_t seed = 0);

// Closure order: pointwise signature comparison, strict unless equal.
bool closure_leq(const OrbitRecord& a, const OrbitRecord& b);

// Representative of the dense orbit: the sum of the block basis, then seeded
// draws, each verified by tangent rank. Throws after a bounded number of
// failed draws.
RatMatrix open_orbit_rep(const Arrangement& ctx, const VoganSpaces& sp, uint64_t seed = 0);

struct DualOrbit {
  int dim = 0;
  RankSignature signature;
  RatMatrix rep;
};

// Microlocal dual: the dense orbit of the conormal fiber over the orbit of
// x, i.e. of the commutant of x in the opposite graded piece. Found by
// seeded sampling inside the commutant; maximal dimension wins, ties broken
// by the lexicographically smallest signature.
DualOrbit pyasetskii_dual(const Arrangement& ctx, const VoganSpaces& sp, const RatMatrix& x,
                          Direction dir, uint64_t seed = 0);

}  // namespace vogan

#endif

#ifndef VOGAN_SL2_HPP
#define VOGAN_SL2_HPP

#include "vogan/realization.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vogan {

struct Sl2Triple {
  LieElement e;
  LieElement h;  // diagonal, integer entries
  LieElement f;
};

// Jordan type of a nilpotent matrix, parts descending. Throws when the
// matrix is not nilpotent.
std::vector<int> jordan_partition(const RatMatrix& x);

// Completes a nonzero nilpotent to an sl_2 triple with h diagonal: the
// Jordan weight strings (a-1, a-3, ..., 1-a) are distributed over the
// support constraints d_i = d_j + 2 of e, then f is solved from
// [h,f] = -2f, [e,f] = h inside the algebra. All three bracket identities
// are verified exactly. Throws when no diagonal completion exists (the
// nilpotent is not adapted to the torus).
Sl2Triple jm_triple(const LieElement& e);

// Simple-root values of the dominant representative of jm h. Entries lie in
// {0,1,2}; that bound is asserted at runtime. Simple roots are the standard
// ones: e_i - e_{i+1} everywhere, plus 2e_k (symplectic), e_k (odd
// orthogonal), e_{k-1} + e_k (even orthogonal).
std::vector<int> weighted_dynkin(const LieElement& e);

// Dimensions of the ad-eigenspaces of a diagonal gamma on the algebra.
// Throws when some root value is not an integer.
std::map<int, int> grading_dims(const DualGroupSpec& g, const RatMatrix& gamma);

// dim g(0) == dim g(2) in the jm grading.
bool is_distinguished(const LieElement& e);

// Independent combinatorial criterion on the Jordan type: gl needs a single
// part, symplectic distinct even parts, orthogonal distinct odd parts.
bool distinguished_partition(const DualGroupSpec& g, const std::vector<int>& parts);

// Inside the derived subalgebra, the eigenvalue-q space of the grading has
// the dimension of the fixed space. (For gl the fixed space loses the
// one-dimensional center; elsewhere the algebra is already semisimple.)
bool is_q_distinguished(const InfinitesimalParam& lam);

struct PipelineResult {
  bool q_distinguished = false;
  std::optional<LieElement> witness;  // verified distinguished, in the shift +1 piece
  std::vector<int> witness_partition;
};

// If the grading is q-distinguished, produces a dense-orbit witness and
// verifies it is a distinguished nilpotent. A verification failure is a
// std::runtime_error: it signals a bug, not a mathematical outcome.
PipelineResult heiermann_pipeline(const InfinitesimalParam& lam, uint64_t seed = 0);

}  // namespace vogan

#endif

#ifndef VOGAN_REALIZATION_HPP
#define VOGAN_REALIZATION_HPP

#include "vogan/params.hpp"

#include <map>
#include <vector>

namespace vogan {

// An ordered assignment of infinitesimal labels to the coordinates of the
// standard representation. For classical families position i and N-1-i
// always carry dual labels, so the fixed antidiagonal form pairs them; the
// odd middle position (if any) carries the unique self-dual odd-multiplicity
// label.
struct Arrangement {
  DualGroupSpec group;
  int unit_modulus = 4;
  std::vector<Label> labels;

  const std::vector<int>& positions_of(const Label& l) const;
  int size() const { return static_cast<int>(labels.size()); }

  // Lazily built label -> ascending positions index.
  mutable std::map<Label, std::vector<int>> index_;
};

// Canonical arrangement: labels sorted by descending exponent (unit class
// ascending inside a tie), mirror-paired from the outside in for classical
// families.
Arrangement arrange(const InfinitesimalParam& lam);

// Seeded relabeling used by the invariance checks. General linear: full
// shuffle. Classical: a shuffle of the front half, mirrored onto the back so
// the arrangement stays form-compatible.
Arrangement arrange_permuted(const InfinitesimalParam& lam, uint64_t seed);

// The span of matrix positions whose row label exceeds the column label by
// `shift` in the exponent (same unit class), intersected with the algebra.
// shift +1 is the q-eigenspace of the adjoint action of the parameter's
// unramified part, shift 0 its centralizer, shift -1 the q^{-1} space.
SubspaceBasis graded_piece(const Arrangement& ctx, int shift);

struct VoganSpaces {
  SubspaceBasis v;       // shift +1
  SubspaceBasis v_star;  // shift -1
  SubspaceBasis h;       // shift 0 (centralizer algebra)
};

VoganSpaces build_spaces(const Arrangement& ctx);

struct MatrixRealization {
  Arrangement ctx;
  RatMatrix form;  // the fixed antidiagonal form (identity for gl)
  RatMatrix x;     // supported on the shift +1 blocks, member of the algebra
};

// Deterministic matrix model of a parameter inside the canonical arrangement
// of its infinitesimal labels. Construction: an abstract summand model with
// an explicit invariant pairing, then an exact label-preserving isometry
// onto the antidiagonal coordinate form. Verified (membership, block
// support, rank signature); verification failure is a std::runtime_error.
MatrixRealization realize(const LanglandsParam& phi);
MatrixRealization realize_in(const Arrangement& ctx, const LanglandsParam& phi);

// Rank of z -> [z, x] on the centralizer algebra: the dimension of the orbit
// of x under the stabilizer of the grading.
int tangent_dim(const Arrangement& ctx, const VoganSpaces& sp, const RatMatrix& x);

// {y in `from` : [x, y] = 0}.
SubspaceBasis commutant(const SubspaceBasis& from, const RatMatrix& x);

// dim of the pairing-degree filtration step at x: the commutant of x inside
// the opposite graded piece. Zero exactly when the orbit of x is open.
int l_adjoint_order(const LanglandsParam& phi);

// Openness by tangent-space rank (independent of l_adjoint_order).
bool is_open(const LanglandsParam& phi);

struct ConormalCheck {
  int orbit_dim = 0;
  int fiber_dim = 0;
  int dim_v = 0;

  bool holds() const { return orbit_dim + fiber_dim == dim_v; }
};

// The conormal-variety dimension identity at the parameter's orbit.
ConormalCheck conormal_fiber_check(const LanglandsParam& phi);

}  // namespace vogan

#endif

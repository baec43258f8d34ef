#ifndef VOGAN_LIE_HPP
#define VOGAN_LIE_HPP

#include "vogan/matrix.hpp"

#include <string>
#include <vector>

namespace vogan {

enum class Family { GeneralLinear, Symplectic, EvenOrthogonal, OddOrthogonal };

// A classical matrix group given by the size N of its standard representation.
// Conventions are fixed once and for all:
//   * the bilinear form is antidiagonal;
//   * orthogonal families: every antidiagonal entry is +1;
//   * symplectic: +1 above the center, -1 below (rows 0..N/2-1 carry +1);
//   * diagonal torus elements read diag(t_1..t_k, [1,] t_k^-1..t_1^-1).
struct DualGroupSpec {
  Family family = Family::GeneralLinear;
  int size = 0;

  void validate() const;  // throws std::invalid_argument on a bad family/size combination
  bool is_classical() const { return family != Family::GeneralLinear; }
  bool is_orthogonal() const {
    return family == Family::EvenOrthogonal || family == Family::OddOrthogonal;
  }
  // Dimension of the Lie algebra: N^2, N(N+1)/2 or N(N-1)/2.
  int algebra_dim() const;
  std::string name() const;

  friend bool operator==(const DualGroupSpec&, const DualGroupSpec&) = default;
};

// Antidiagonal form sign of row i. Meaningless for GeneralLinear.
int form_sign(const DualGroupSpec& g, int i);

// The form as a matrix (identity placeholder for GeneralLinear, where
// membership is unconstrained).
RatMatrix form_matrix(const DualGroupSpec& g);

// Membership test for the Lie algebra: X^T J + J X = 0 for classical
// families, everything for gl.
bool is_member(const DualGroupSpec& g, const RatMatrix& m);

struct LieElement {
  DualGroupSpec group;
  RatMatrix m;
};

// Validates membership; throws std::invalid_argument otherwise.
LieElement make_element(const DualGroupSpec& g, RatMatrix m);

// [a, b] = ab - ba. Both arguments must live in the same algebra.
LieElement bracket(const LieElement& a, const LieElement& b);

// Canonical ordered basis of the algebra as N x N matrices. For classical
// families each element is supported on an entry-mirror orbit of the form
// involution (a,b) <-> (N-1-b, N-1-a), with the sign solved from the form.
std::vector<RatMatrix> algebra_basis(const DualGroupSpec& g);

// Same basis flattened into Q^(N^2).
SubspaceBasis algebra_span(const DualGroupSpec& g);

RatVec flatten(const RatMatrix& m);
RatMatrix unflatten(int n, const RatVec& v);

}  // namespace vogan

#endif

#ifndef VOGAN_MATRIX_HPP
#define VOGAN_MATRIX_HPP

#include "vogan/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vogan {

using RatVec = std::vector<Rat>;

// Dense rational matrix, row-major. Sizes stay small (ambient dimension is a
// matrix algebra of rank <= 12, so <= 144 columns); density is the right
// trade-off at that scale.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static RatMatrix identity(int n);

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool is_zero() const;
  RatMatrix transpose() const;

  friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator*(const Rat& c, const RatMatrix& x);
  friend bool operator==(const RatMatrix& x, const RatMatrix& y);
};

// Rank by fraction-free (Bareiss) elimination: rows are cleared to integers
// first, then every intermediate entry is an exact minor divided by the
// previous pivot, which bounds entry growth without leaving Z.
int rank(const RatMatrix& m);

// Right kernel {v : m v = 0}. Basis vectors are canonical: one per free
// column (free coordinate set to 1, other free coordinates 0, pivots
// back-substituted), then scaled to a primitive integer vector whose first
// nonzero entry is positive. Deterministic for fixed input.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Reduced row echelon form; pivot column indices appended to *pivots if given.
RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots = nullptr);

// One exact solution of A x = b, or nullopt if inconsistent (free coordinates
// are set to 0, so the answer is deterministic).
std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b);

// Exact inverse of a square matrix, nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// A linear subspace of Q^ambient, stored as an independent spanning set.
// make_span() instances are canonical (RREF + primitive integer scaling), so
// equality of spans is equality of the vector lists.
struct SubspaceBasis {
  int ambient = 0;
  std::vector<RatVec> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
};

SubspaceBasis make_span(int ambient, const std::vector<RatVec>& vectors);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
bool contains(const SubspaceBasis& space, const RatVec& v);
bool same_span(const SubspaceBasis& a, const SubspaceBasis& b);

// Seeded deterministic combination of the basis: each coefficient is drawn
// uniformly from [1, 10^4] (never zero, so no basis direction drops out).
// An empty basis yields the zero vector.
RatVec random_vector(const SubspaceBasis& space, uint64_t seed);

// Coefficient stream behind random_vector, exposed for other seeded draws.
class CoeffStream {
 public:
  explicit CoeffStream(uint64_t seed);
  // Uniform in [1, 10^4].
  int next();
  // Uniform in [lo, hi], inclusive.
  int next_in(int lo, int hi);

 private:
  uint64_t state_;
};

}  // namespace vogan

#endif

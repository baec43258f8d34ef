#include "vogan/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace vogan {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch in +");
  RatMatrix r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch in -");
  RatMatrix r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in *");
  RatMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j) == 0) continue;
        r.at(i, j) += v * y.at(k, j);
      }
    }
  return r;
}

RatMatrix operator*(const Rat& c, const RatMatrix& x) {
  RatMatrix r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = c * x.a[i];
  return r;
}

bool operator==(const RatMatrix& x, const RatMatrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

namespace {

struct IntEchelon {
  std::vector<std::vector<Int>> m;  // row echelon, fraction-free
  std::vector<int> pivot_cols;      // pivot column of echelon row i
  int cols = 0;
};

// Clear denominators row by row, then run Bareiss elimination with row
// pivoting. Every division below is exact (Sylvester's identity).
IntEchelon bareiss_echelon(const RatMatrix& src) {
  IntEchelon e;
  e.cols = src.cols;
  e.m.assign(src.rows, std::vector<Int>(src.cols));
  for (int i = 0; i < src.rows; ++i) {
    Int l = 1;
    for (int j = 0; j < src.cols; ++j) l = boost::multiprecision::lcm(l, rat_den(src.at(i, j)));
    for (int j = 0; j < src.cols; ++j) e.m[i][j] = rat_num(src.at(i, j)) * (l / rat_den(src.at(i, j)));
  }

  Int prev = 1;
  int row = 0;
  const int rows = src.rows;
  for (int col = 0; col < src.cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (e.m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(e.m[p], e.m[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < src.cols; ++j) {
        Int t = e.m[row][col] * e.m[i][j] - e.m[i][col] * e.m[row][j];
        e.m[i][j] = t / prev;
      }
      e.m[i][col] = 0;
    }
    prev = e.m[row][col];
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

// Primitive integer scaling, first nonzero entry positive. Canonical form
// for kernel and span bases so identical subspaces print identically.
void canonicalize(RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
  Int g = 0;
  for (const Rat& x : v) g = boost::multiprecision::gcd(g, Int(rat_num(x) * (l / rat_den(x))));
  if (g == 0) return;
  Rat scale(l, g);
  for (const Rat& x : v)
    if (x != 0) {
      if (x * scale < 0) scale = -scale;
      break;
    }
  for (Rat& x : v) x *= scale;
}

}  // namespace

int rank(const RatMatrix& m) {
  return static_cast<int>(bareiss_echelon(m).pivot_cols.size());
}

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  IntEchelon e = bareiss_echelon(m);
  const int r = static_cast<int>(e.pivot_cols.size());
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols, Rat(0));
    v[f] = 1;
    for (int i = r - 1; i >= 0; --i) {
      int pc = e.pivot_cols[i];
      Rat s = 0;
      for (int j = pc + 1; j < m.cols; ++j)
        if (v[j] != 0) s += Rat(e.m[i][j]) * v[j];
      v[pc] = -s / Rat(e.m[i][pc]);
    }
    canonicalize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots) {
  RatMatrix r = m;
  int row = 0;
  for (int col = 0; col < r.cols && row < r.rows; ++col) {
    int p = -1;
    for (int i = row; i < r.rows; ++i)
      if (r.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < r.cols; ++j) std::swap(r.at(p, j), r.at(row, j));
    Rat inv = Rat(1) / r.at(row, col);
    for (int j = col; j < r.cols; ++j) r.at(row, j) *= inv;
    for (int i = 0; i < r.rows; ++i) {
      if (i == row || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (int j = col; j < r.cols; ++j) r.at(i, j) -= f * r.at(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return r;
}

std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: rhs size mismatch");
  RatMatrix aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> piv;
  RatMatrix r = rref(aug, &piv);
  for (int c : piv)
    if (c == A.cols) return std::nullopt;  // pivot in the rhs column: inconsistent
  RatVec x(A.cols, Rat(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(static_cast<int>(i), A.cols);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: matrix not square");
  int n = m.rows;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  RatMatrix r = rref(aug, &piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

SubspaceBasis make_span(int ambient, const std::vector<RatVec>& vectors) {
  for (const RatVec& v : vectors)
    if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("make_span: vector size mismatch");
  SubspaceBasis s;
  s.ambient = ambient;
  if (vectors.empty()) return s;
  RatMatrix m(static_cast<int>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i)
    for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
  std::vector<int> piv;
  RatMatrix r = rref(m, &piv);
  for (size_t i = 0; i < piv.size(); ++i) {
    RatVec v(ambient);
    for (int j = 0; j < ambient; ++j) v[j] = r.at(static_cast<int>(i), j);
    canonicalize(v);
    s.vectors.push_back(std::move(v));
  }
  return s;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis{a.ambient, {}};
  // x in span(a) cap span(b) iff x = sum alpha_i a_i = sum beta_j b_j; the
  // (alpha, beta) pairs form the kernel of the column-stacked system.
  RatMatrix m(a.ambient, a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int r = 0; r < a.ambient; ++r) m.at(r, i) = a.vectors[i][r];
  for (int j = 0; j < b.dim(); ++j)
    for (int r = 0; r < a.ambient; ++r) m.at(r, a.dim() + j) = -b.vectors[j][r];
  std::vector<RatVec> gens;
  for (const RatVec& k : kernel_basis(m)) {
    RatVec x(a.ambient, Rat(0));
    for (int i = 0; i < a.dim(); ++i)
      if (k[i] != 0)
        for (int r = 0; r < a.ambient; ++r) x[r] += k[i] * a.vectors[i][r];
    gens.push_back(std::move(x));
  }
  return make_span(a.ambient, gens);
}

bool contains(const SubspaceBasis& space, const RatVec& v) {
  if (static_cast<int>(v.size()) != space.ambient) throw std::invalid_argument("contains: size mismatch");
  if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return true;
  RatMatrix m(space.dim() + 1, space.ambient);
  for (int i = 0; i < space.dim(); ++i)
    for (int j = 0; j < space.ambient; ++j) m.at(i, j) = space.vectors[i][j];
  for (int j = 0; j < space.ambient; ++j) m.at(space.dim(), j) = v[j];
  return rank(m) == space.dim();
}

bool same_span(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
  for (const RatVec& v : b.vectors)
    if (!contains(a, v)) return false;
  return true;
}

CoeffStream::CoeffStream(uint64_t seed) : state_(seed) {}

int CoeffStream::next() { return next_in(1, 10000); }

int CoeffStream::next_in(int lo, int hi) {
  // splitmix64 step: stable across platforms, unlike std distributions.
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(z % span);
}

RatVec random_vector(const SubspaceBasis& space, uint64_t seed) {
  RatVec x(space.ambient, Rat(0));
  CoeffStream cs(seed);
  for (const RatVec& bvec : space.vectors) {
    int c = cs.next();
    for (int r = 0; r < space.ambient; ++r)
      if (bvec[r] != 0) x[r] += Rat(c) * bvec[r];
  }
  return x;
}

}  // namespace vogan

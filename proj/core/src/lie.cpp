#include "vogan/lie.hpp"

#include <stdexcept>

namespace vogan {

void DualGroupSpec::validate() const {
  if (size < 1) throw std::invalid_argument("group size must be >= 1");
  switch (family) {
    case Family::GeneralLinear:
      return;
    case Family::Symplectic:
      if (size % 2 != 0) throw std::invalid_argument("symplectic size must be even");
      return;
    case Family::EvenOrthogonal:
      if (size % 2 != 0) throw std::invalid_argument("even orthogonal size must be even");
      return;
    case Family::OddOrthogonal:
      if (size % 2 == 0) throw std::invalid_argument("odd orthogonal size must be odd");
      return;
  }
  throw std::invalid_argument("unknown family");
}

int DualGroupSpec::algebra_dim() const {
  switch (family) {
    case Family::GeneralLinear: return size * size;
    case Family::Symplectic: return size * (size + 1) / 2;
    default: return size * (size - 1) / 2;
  }
}

std::string DualGroupSpec::name() const {
  switch (family) {
    case Family::GeneralLinear: return "GL(" + std::to_string(size) + ")";
    case Family::Symplectic: return "Sp(" + std::to_string(size) + ")";
    default: return "SO(" + std::to_string(size) + ")";
  }
}

int form_sign(const DualGroupSpec& g, int i) {
  if (g.family == Family::Symplectic) return i < g.size / 2 ? 1 : -1;
  return 1;
}

RatMatrix form_matrix(const DualGroupSpec& g) {
  RatMatrix j(g.size, g.size);
  if (!g.is_classical()) return RatMatrix::identity(g.size);
  for (int i = 0; i < g.size; ++i) j.at(i, g.size - 1 - i) = form_sign(g, i);
  return j;
}

bool is_member(const DualGroupSpec& g, const RatMatrix& m) {
  if (m.rows != g.size || m.cols != g.size) return false;
  if (!g.is_classical()) return true;
  // (X^T J + J X)_{ij} = s_{n-1-j} X_{n-1-j,i} + s_i X_{n-1-i,j}
  const int n = g.size;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat t = Rat(form_sign(g, n - 1 - j)) * m.at(n - 1 - j, i) +
              Rat(form_sign(g, i)) * m.at(n - 1 - i, j);
      if (t != 0) return false;
    }
  return true;
}

LieElement make_element(const DualGroupSpec& g, RatMatrix m) {
  g.validate();
  if (!is_member(g, m)) throw std::invalid_argument("matrix is not a member of " + g.name());
  return LieElement{g, std::move(m)};
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (!(a.group == b.group)) throw std::invalid_argument("bracket: algebra mismatch");
  return LieElement{a.group, a.m * b.m - b.m * a.m};
}

std::vector<RatMatrix> algebra_basis(const DualGroupSpec& g) {
  g.validate();
  const int n = g.size;
  std::vector<RatMatrix> basis;
  if (!g.is_classical()) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        RatMatrix e(n, n);
        e.at(a, b) = 1;
        basis.push_back(std::move(e));
      }
    return basis;
  }
  // Entry (a,b) is tied to (a',b') = (n-1-b, n-1-a) by
  //   X_{a'b'} = -(s_{n-1-a}/s_{n-1-b}) X_{ab}.
  // One basis element per orbit; self-paired entries survive iff the sign
  // works out to +1 (always in sp on the antidiagonal, never in so).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int a2 = n - 1 - b, b2 = n - 1 - a;
      int c = -form_sign(g, n - 1 - a) * form_sign(g, n - 1 - b);
      if (a2 == a && b2 == b) {
        if (c != 1) continue;
        RatMatrix e(n, n);
        e.at(a, b) = 1;
        basis.push_back(std::move(e));
      } else if (std::make_pair(a, b) < std::make_pair(a2, b2)) {
        RatMatrix e(n, n);
        e.at(a, b) = 1;
        e.at(a2, b2) = c;
        basis.push_back(std::move(e));
      }
    }
  return basis;
}

SubspaceBasis algebra_span(const DualGroupSpec& g) {
  std::vector<RatVec> vs;
  for (const RatMatrix& m : algebra_basis(g)) vs.push_back(flatten(m));
  return make_span(g.size * g.size, vs);
}

RatVec flatten(const RatMatrix& m) { return m.a; }

RatMatrix unflatten(int n, const RatVec& v) {
  if (static_cast<int>(v.size()) != n * n) throw std::invalid_argument("unflatten: size mismatch");
  RatMatrix m(n, n);
  m.a = v;
  return m;
}

}  // namespace vogan

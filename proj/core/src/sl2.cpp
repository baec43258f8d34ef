#include "vogan/sl2.hpp"

#include "vogan/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vogan {

std::vector<int> jordan_partition(const RatMatrix& x) {
  if (x.rows != x.cols) throw std::invalid_argument("jordan_partition: matrix not square");
  const int n = x.rows;
  std::vector<int> r{n};  // r[k] = rank of x^k
  RatMatrix p = x;
  while (r.back() > 0) {
    r.push_back(rank(p));
    if (static_cast<int>(r.size()) > n + 1 && r.back() > 0)
      throw std::invalid_argument("jordan_partition: matrix not nilpotent");
    p = p * x;
  }
  std::vector<int> parts;
  for (int k = 1; k < static_cast<int>(r.size()); ++k) {
    int rk1 = k + 1 < static_cast<int>(r.size()) ? r[k + 1] : 0;
    int mult = r[k - 1] - 2 * r[k] + rk1;
    for (int c = 0; c < mult; ++c) parts.push_back(k);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

namespace {

// Support components of e with relative weights: d_i = d_j + 2 whenever
// e_ij != 0, propagated by BFS. Inconsistency means no diagonal h at all.
struct WeightComponents {
  std::vector<int> comp;  // position -> component id
  std::vector<int> rel;   // position -> weight relative to the component root
  int count = 0;
};

WeightComponents weight_components(const RatMatrix& x) {
  const int n = x.rows;
  WeightComponents wc;
  wc.comp.assign(n, -1);
  wc.rel.assign(n, 0);
  for (int s = 0; s < n; ++s) {
    if (wc.comp[s] >= 0) continue;
    int id = wc.count++;
    std::vector<int> queue{s};
    wc.comp[s] = id;
    wc.rel[s] = 0;
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        // e_ij != 0 forces d_i = d_j + 2; e_ji != 0 forces d_j = d_i + 2.
        for (int dir = 0; dir < 2; ++dir) {
          bool edge = dir == 0 ? x.at(i, j) != 0 : x.at(j, i) != 0;
          if (!edge) continue;
          int w = dir == 0 ? wc.rel[i] - 2 : wc.rel[i] + 2;
          if (wc.comp[j] < 0) {
            wc.comp[j] = id;
            wc.rel[j] = w;
            queue.push_back(j);
          } else if (wc.rel[j] != w) {
            throw std::runtime_error("jm_triple: inconsistent weight constraints");
          }
        }
      }
    }
  }
  return wc;
}

struct OffsetSearch {
  const std::vector<std::vector<int>>& members;
  const std::vector<int>& rel;
  bool mirror = false;  // classical: require d_{n-1-i} = -d_i
  int n = 0;
  std::vector<int> offset;

  bool run(size_t id, const std::map<int, int>& rem, std::vector<int>& d) {
    if (id == members.size()) {
      for (size_t c = 0; c < members.size(); ++c)
        for (int i : members[c]) d[i] = offset[c] + rel[i];
      if (mirror)
        for (int i = 0; i < n; ++i)
          if (d[i] != -d[n - 1 - i]) return false;
      return true;
    }
    std::vector<int> candidates;
    for (const auto& [w, c] : rem)
      if (c > 0) candidates.push_back(w - rel[members[id][0]]);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int o : candidates) {
      std::map<int, int> next = rem;
      bool feasible = true;
      for (int i : members[id]) {
        auto it = next.find(o + rel[i]);
        if (it == next.end() || it->second == 0) {
          feasible = false;
          break;
        }
        --it->second;
      }
      if (!feasible) continue;
      offset[id] = o;
      if (run(id + 1, next, d)) return true;
    }
    return false;
  }
};

}  // namespace

Sl2Triple jm_triple(const LieElement& e) {
  const DualGroupSpec& g = e.group;
  const RatMatrix& x = e.m;
  const int n = x.rows;
  if (x.is_zero()) throw std::invalid_argument("jm_triple: zero element");
  std::vector<int> parts = jordan_partition(x);

  std::map<int, int> weights;
  for (int a : parts)
    for (int j = 0; j < a; ++j) ++weights[a - 1 - 2 * j];

  WeightComponents wc = weight_components(x);
  std::vector<std::vector<int>> members(wc.count);
  for (int i = 0; i < n; ++i) members[wc.comp[i]].push_back(i);

  std::vector<int> d(n, 0);
  OffsetSearch srch{members, wc.rel, g.is_classical(), n, std::vector<int>(wc.count, 0)};
  if (!srch.run(0, weights, d))
    throw std::runtime_error("jm_triple: no diagonal completion exists");

  RatMatrix h(n, n);
  for (int i = 0; i < n; ++i) h.at(i, i) = d[i];

  // f from the linear system [h,f] = -2f, [e,f] = h over the algebra basis.
  std::vector<RatMatrix> basis = algebra_basis(g);
  const int k = static_cast<int>(basis.size());
  RatMatrix sys(2 * n * n, k);
  RatVec rhs(static_cast<size_t>(2) * n * n, Rat(0));
  for (int c = 0; c < k; ++c) {
    RatMatrix hb = h * basis[c] - basis[c] * h + Rat(2) * basis[c];
    RatMatrix eb = x * basis[c] - basis[c] * x;
    RatVec v1 = flatten(hb), v2 = flatten(eb);
    for (int r = 0; r < n * n; ++r) {
      sys.at(r, c) = v1[r];
      sys.at(n * n + r, c) = v2[r];
    }
  }
  {
    RatVec hv = flatten(h);
    for (int r = 0; r < n * n; ++r) rhs[n * n + r] = hv[r];
  }
  auto coeffs = solve(sys, rhs);
  if (!coeffs) throw std::runtime_error("jm_triple: no f completes the triple");
  RatMatrix f(n, n);
  for (int c = 0; c < k; ++c)
    if ((*coeffs)[c] != 0) f = f + (*coeffs)[c] * basis[c];

  RatMatrix he = h * x - x * h;
  RatMatrix hf = h * f - f * h;
  RatMatrix ef = x * f - f * x;
  if (!(he == Rat(2) * x) || !(hf == Rat(-2) * f) || !(ef == h))
    throw std::runtime_error("jm_triple: bracket identities failed");
  return Sl2Triple{e, make_element(g, h), make_element(g, f)};
}

std::vector<int> weighted_dynkin(const LieElement& e) {
  Sl2Triple t = jm_triple(e);
  const int n = e.m.rows;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) {
    Rat v = t.h.m.at(i, i);
    w[i] = static_cast<int>(rat_num(v));  // h entries are integers by construction
  }
  std::sort(w.rbegin(), w.rend());

  std::vector<int> labels;
  auto push = [&labels](int v) {
    if (v < 0 || v > 2)
      throw std::runtime_error("weighted_dynkin: label outside {0,1,2}");
    labels.push_back(v);
  };
  switch (e.group.family) {
    case Family::GeneralLinear:
      for (int i = 0; i + 1 < n; ++i) push(w[i] - w[i + 1]);
      break;
    case Family::Symplectic: {
      int k = n / 2;
      for (int i = 0; i + 1 < k; ++i) push(w[i] - w[i + 1]);
      push(2 * w[k - 1]);  // long root 2e_k
      break;
    }
    case Family::OddOrthogonal: {
      int k = n / 2;
      for (int i = 0; i + 1 < k; ++i) push(w[i] - w[i + 1]);
      push(w[k - 1]);  // short root e_k
      break;
    }
    case Family::EvenOrthogonal: {
      int k = n / 2;
      for (int i = 0; i + 1 < k; ++i) push(w[i] - w[i + 1]);
      if (k >= 2) push(w[k - 2] + w[k - 1]);  // fork root e_{k-1} + e_k
      break;
    }
  }
  return labels;
}

std::map<int, int> grading_dims(const DualGroupSpec& g, const RatMatrix& gamma) {
  const int n = gamma.rows;
  std::map<int, int> dims;
  for (const RatMatrix& b : algebra_basis(g)) {
    std::optional<Rat> weight;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.at(i, j) != 0) {
          Rat w = gamma.at(i, i) - gamma.at(j, j);
          if (weight && *weight != w)
            throw std::invalid_argument("grading_dims: gamma does not respect the root spaces");
          weight = w;
        }
    if (!weight) continue;
    if (rat_den(*weight) != 1)
      throw std::invalid_argument("grading_dims: non-integral root value");
    ++dims[static_cast<int>(rat_num(*weight))];
  }
  return dims;
}

bool is_distinguished(const LieElement& e) {
  Sl2Triple t = jm_triple(e);
  std::map<int, int> dims = grading_dims(e.group, t.h.m);
  auto dim_at = [&dims](int i) {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  };
  // The criterion lives in the derived algebra: gl carries its center in
  // degree 0, so that dimension is discounted by one.
  int center = e.group.is_classical() ? 0 : 1;
  return dim_at(0) - center == dim_at(2);
}

bool distinguished_partition(const DualGroupSpec& g, const std::vector<int>& parts) {
  switch (g.family) {
    case Family::GeneralLinear:
      return parts.size() == 1;
    case Family::Symplectic: {
      std::set<int> seen;
      for (int a : parts)
        if (a % 2 != 0 || !seen.insert(a).second) return false;
      return true;
    }
    case Family::OddOrthogonal:
    case Family::EvenOrthogonal: {
      std::set<int> seen;
      for (int a : parts)
        if (a % 2 == 0 || !seen.insert(a).second) return false;
      return true;
    }
  }
  return false;
}

bool is_q_distinguished(const InfinitesimalParam& lam) {
  Arrangement ctx = arrange(lam);
  VoganSpaces sp = build_spaces(ctx);
  int fixed = sp.h.dim();
  if (!lam.group.is_classical()) fixed -= 1;  // drop the center of gl
  return sp.v.dim() == fixed;
}

namespace {

// Carter test for the dense-orbit witness inside the centralizer of the
// unit-class part of the grading. The witness never mixes unit classes, and
// with several classes present the ambient algebra splits into one factor
// per class pair; a distinguished element of the product is distinguished
// factor by factor, never in the full algebra. Each pair {u, -u} of distinct
// classes contributes a general linear factor whose one-dimensional center
// sits in degree 0 and is discounted.
bool distinguished_for(const InfinitesimalParam& lam, const Arrangement& ctx,
                       const LieElement& e) {
  const int n = e.group.size;
  std::vector<Rat> d(n, Rat(0));
  if (!e.m.is_zero()) {
    Sl2Triple t = jm_triple(e);
    for (int i = 0; i < n; ++i) d[i] = t.h.m.at(i, i);
  }
  int dim0 = 0, dim2 = 0;
  for (const RatMatrix& b : algebra_basis(e.group)) {
    int si = -1, sj = -1;
    bool same_class = true;
    for (int i = 0; i < n && same_class; ++i) {
      for (int j = 0; j < n; ++j) {
        if (b.at(i, j) == 0) continue;
        if (ctx.labels[i].u != ctx.labels[j].u) {
          same_class = false;
          break;
        }
        if (si < 0) {
          si = i;
          sj = j;
        }
      }
    }
    if (!same_class || si < 0) continue;
    Rat w = d[si] - d[sj];
    if (w == 0) ++dim0;
    if (w == 2) ++dim2;
  }
  std::set<int> classes;
  for (const Label& l : ctx.labels) classes.insert(l.u);
  int center = 0;
  if (!lam.group.is_classical()) {
    center = static_cast<int>(classes.size());
  } else {
    for (int u : classes) {
      if (u < norm_unit(-u, lam.unit_modulus)) ++center;
    }
  }
  return dim0 - center == dim2;
}

}  // namespace

PipelineResult heiermann_pipeline(const InfinitesimalParam& lam, uint64_t seed) {
  PipelineResult res;
  res.q_distinguished = is_q_distinguished(lam);
  if (!res.q_distinguished) return res;
  Arrangement ctx = arrange(lam);
  VoganSpaces sp = build_spaces(ctx);
  RatMatrix x = open_orbit_rep(ctx, sp, seed);
  LieElement witness = make_element(lam.group, x);
  if (!distinguished_for(lam, ctx, witness))
    throw std::runtime_error("heiermann_pipeline: dense-orbit witness is not distinguished");
  res.witness_partition = jordan_partition(x);
  res.witness = std::move(witness);
  return res;
}

}  // namespace vogan

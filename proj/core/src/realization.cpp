#include "vogan/realization.hpp"

#include "vogan/orbits.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vogan {

namespace {

// Arrangement order: exponent descending, unit class ascending inside a tie.
bool arr_less(const Label& a, const Label& b) {
  if (a.e2 != b.e2) return a.e2 > b.e2;
  return a.u < b.u;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("realization: " + what);
}

}  // namespace

const std::vector<int>& Arrangement::positions_of(const Label& l) const {
  if (index_.empty()) {
    for (int i = 0; i < size(); ++i) index_[labels[i]].push_back(i);
  }
  static const std::vector<int> kEmpty;
  auto it = index_.find(l);
  return it == index_.end() ? kEmpty : it->second;
}

Arrangement arrange(const InfinitesimalParam& lam) {
  Arrangement ctx;
  ctx.group = lam.group;
  ctx.unit_modulus = lam.unit_modulus;
  const int n = lam.group.size;

  std::vector<Label> order;
  for (const auto& [l, c] : lam.mult) order.push_back(l);
  std::sort(order.begin(), order.end(), arr_less);

  if (!lam.group.is_classical()) {
    for (const Label& l : order)
      ctx.labels.insert(ctx.labels.end(), lam.mult.at(l), l);
    if (ctx.size() != n) fail("label multiplicities do not fill the group size");
    return ctx;
  }

  std::map<Label, int> rem = lam.mult;
  std::vector<Label> front;
  std::optional<Label> middle;
  for (const Label& l : order) {
    Label ld = dual_label(l, lam.unit_modulus);
    if (l == ld) {
      int c = rem[l];
      rem[l] = 0;
      if (c % 2 == 1) {
        if (middle) fail("two self-dual labels of odd multiplicity");
        middle = l;
        --c;
      }
      for (int i = 0; i < c / 2; ++i) front.push_back(l);
    } else if (arr_less(l, ld)) {
      auto it = rem.find(ld);
      int c = rem[l];
      if (it == rem.end() || it->second != c) fail("labels not closed under duality");
      for (int i = 0; i < c; ++i) front.push_back(l);
      rem[l] = 0;
      it->second = 0;
    }
  }
  const int f = static_cast<int>(front.size());
  if (2 * f + (middle ? 1 : 0) != n) fail("label multiplicities do not fill the group size");
  if (middle && n % 2 == 0) fail("odd self-dual multiplicity in an even-size group");

  ctx.labels.assign(n, Label{});
  for (int i = 0; i < f; ++i) {
    ctx.labels[i] = front[i];
    ctx.labels[n - 1 - i] = dual_label(front[i], lam.unit_modulus);
  }
  if (middle) ctx.labels[n / 2] = *middle;
  return ctx;
}

Arrangement arrange_permuted(const InfinitesimalParam& lam, uint64_t seed) {
  Arrangement ctx = arrange(lam);
  const int n = ctx.size();
  CoeffStream cs(seed);
  if (!ctx.group.is_classical()) {
    for (int i = n - 1; i > 0; --i)
      std::swap(ctx.labels[i], ctx.labels[cs.next_in(0, i)]);
  } else {
    // Shuffle the front half; mirror duals onto the back half so positions i
    // and n-1-i still pair under the form.
    const int f = n / 2;
    for (int i = f - 1; i > 0; --i)
      std::swap(ctx.labels[i], ctx.labels[cs.next_in(0, i)]);
    for (int i = 0; i < f; ++i)
      ctx.labels[n - 1 - i] = dual_label(ctx.labels[i], ctx.unit_modulus);
  }
  ctx.index_.clear();
  return ctx;
}

SubspaceBasis graded_piece(const Arrangement& ctx, int shift) {
  const int n = ctx.size();
  auto in_block = [&](int i, int j) {
    return ctx.labels[i].u == ctx.labels[j].u &&
           ctx.labels[i].e2 - ctx.labels[j].e2 == 2 * shift;
  };
  std::vector<RatVec> vecs;
  if (!ctx.group.is_classical()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (in_block(i, j)) {
          RatVec v(static_cast<size_t>(n) * n, Rat(0));
          v[static_cast<size_t>(i) * n + j] = 1;
          vecs.push_back(std::move(v));
        }
  } else {
    // Basis elements of the algebra have entry support along mirror orbits,
    // and mirrored entries land in the same exponent-shift block, so the
    // intersection is spanned by the fully supported basis elements.
    for (const RatMatrix& m : algebra_basis(ctx.group)) {
      bool inside = true;
      for (int i = 0; inside && i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m.at(i, j) != 0 && !in_block(i, j)) {
            inside = false;
            break;
          }
      if (inside) vecs.push_back(flatten(m));
    }
  }
  return make_span(n * n, vecs);
}

VoganSpaces build_spaces(const Arrangement& ctx) {
  return VoganSpaces{graded_piece(ctx, 1), graded_piece(ctx, -1), graded_piece(ctx, 0)};
}

namespace {

Label rung_label(const Summand& s, int j, int m) {
  return Label{norm_unit(s.u, m), s.e.twice + (s.a - 1) - 2 * j};
}

// Summand pairing plan for the invariant model form. A self group is a
// right-type self-dual summand paired with itself; everything else is paired
// in twos (dual partners, or two copies of a wrong-type self-dual summand).
struct ModelGroup {
  Summand first;
  Summand second;
  bool self = false;
  Rat gamma = 1;  // overall sign of the self pairing, fixed per slice below
};

struct Model {
  std::vector<ModelGroup> groups;
  std::vector<int> base;  // model index of groups[g], member 0, rung 0
  int dim = 0;

  int idx(int g, int mem, int j) const { return base[g] + mem * groups[g].first.a + j; }
};

Model build_model(const LanglandsParam& phi) {
  Model md;
  std::multiset<Summand> pool(phi.summands.begin(), phi.summands.end());
  while (!pool.empty()) {
    Summand s = *pool.begin();
    pool.erase(pool.begin());
    Summand sd = dual_summand(s, phi.unit_modulus);
    ModelGroup g;
    if (sd == s && right_type(phi.group, s)) {
      g = ModelGroup{s, s, true, Rat(1)};
    } else {
      auto it = pool.find(sd);
      if (it == pool.end()) fail("summands not closed under duality");
      pool.erase(it);
      g = ModelGroup{s, sd, false, Rat(1)};
    }
    md.base.push_back(md.dim);
    md.dim += g.self ? g.first.a : 2 * g.first.a;
    md.groups.push_back(g);
  }

  // Orthogonal families: the self groups passing through exponent 0 in a
  // given unit class get alternating diagonal signs +1, -1, ... so they can
  // be matched to the coordinate form two at a time (plus one leftover +1).
  if (phi.group.is_orthogonal()) {
    std::map<int, int> seen;  // unit class -> count so far
    for (ModelGroup& g : md.groups) {
      if (!g.self) continue;
      int a = g.first.a;
      if (a % 2 == 0) continue;  // no exponent-0 rung
      int u = norm_unit(g.first.u, phi.unit_modulus);
      int k = seen[u]++;
      Rat delta = (k % 2 == 0) ? 1 : -1;
      Rat sign = ((a - 1) / 2) % 2 == 0 ? 1 : -1;  // (-1)^{(a-1)/2}
      g.gamma = delta * sign;
    }
  }
  return md;
}

RatMatrix model_operator(const Model& md) {
  RatMatrix x(md.dim, md.dim);
  for (size_t g = 0; g < md.groups.size(); ++g) {
    int a = md.groups[g].first.a;
    int members = md.groups[g].self ? 1 : 2;
    for (int mem = 0; mem < members; ++mem)
      for (int j = 1; j < a; ++j)
        x.at(md.idx(static_cast<int>(g), mem, j - 1), md.idx(static_cast<int>(g), mem, j)) = 1;
  }
  return x;
}

RatMatrix model_form(const Model& md, const DualGroupSpec& group) {
  const Rat eps = group.family == Family::Symplectic ? -1 : 1;
  RatMatrix b(md.dim, md.dim);
  for (size_t gi = 0; gi < md.groups.size(); ++gi) {
    const ModelGroup& g = md.groups[gi];
    int a = g.first.a;
    for (int j = 0; j < a; ++j) {
      Rat sj = (j % 2 == 0) ? 1 : -1;
      if (g.self) {
        // Both directions are covered as j runs; consistency of the two
        // readings is exactly the right-type condition eps = (-1)^{a-1}.
        b.at(md.idx(static_cast<int>(gi), 0, j), md.idx(static_cast<int>(gi), 0, a - 1 - j)) =
            g.gamma * sj;
      } else {
        b.at(md.idx(static_cast<int>(gi), 0, j), md.idx(static_cast<int>(gi), 1, a - 1 - j)) = sj;
        b.at(md.idx(static_cast<int>(gi), 1, a - 1 - j), md.idx(static_cast<int>(gi), 0, j)) =
            eps * sj;
      }
    }
  }
  return b;
}

struct ModelVecInfo {
  int g;
  int mem;
  int j;
  Label lab;
};

std::vector<ModelVecInfo> model_vectors(const Model& md, int m) {
  std::vector<ModelVecInfo> out;
  for (size_t g = 0; g < md.groups.size(); ++g) {
    int a = md.groups[g].first.a;
    int members = md.groups[g].self ? 1 : 2;
    for (int mem = 0; mem < members; ++mem) {
      const Summand& s = mem == 0 ? md.groups[g].first : md.groups[g].second;
      for (int j = 0; j < a; ++j)
        out.push_back(ModelVecInfo{static_cast<int>(g), mem, j, rung_label(s, j, m)});
    }
  }
  return out;
}

void verify_realization(const Arrangement& ctx, const LanglandsParam& phi, const RatMatrix& x) {
  const int n = ctx.size();
  if (!is_member(ctx.group, x)) fail("constructed operator left the algebra");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.at(i, j) != 0 &&
          (ctx.labels[i].u != ctx.labels[j].u || ctx.labels[i].e2 - ctx.labels[j].e2 != 2))
        fail("constructed operator has support outside the raising blocks");
  if (signature_of(ctx, x, Direction::Raise) != expected_signature(ctx, phi))
    fail("constructed operator has the wrong rank signature");
}

RatMatrix realize_gl(const Arrangement& ctx, const LanglandsParam& phi) {
  const int n = ctx.size();
  std::map<Label, std::deque<int>> avail;
  for (int i = 0; i < n; ++i) avail[ctx.labels[i]].push_back(i);
  RatMatrix x(n, n);
  for (const Summand& s : phi.summands) {
    int prev = -1;
    for (int j = 0; j < s.a; ++j) {
      Label l = rung_label(s, j, phi.unit_modulus);
      auto it = avail.find(l);
      if (it == avail.end() || it->second.empty()) fail("summand rung has no free position");
      int p = it->second.front();
      it->second.pop_front();
      if (j > 0) x.at(prev, p) = 1;
      prev = p;
    }
  }
  return x;
}

RatMatrix realize_classical(const Arrangement& ctx, const LanglandsParam& phi) {
  const int n = ctx.size();
  const int m = phi.unit_modulus;
  Model md = build_model(phi);
  if (md.dim != n) fail("model dimension mismatch");
  RatMatrix xm = model_operator(md);
  RatMatrix bm = model_form(md, phi.group);
  std::vector<ModelVecInfo> mv = model_vectors(md, m);
  RatMatrix form = form_matrix(ctx.group);

  std::map<Label, std::vector<int>> slice;  // label -> model indices, canonical order
  for (int i = 0; i < md.dim; ++i) slice[mv[i].lab].push_back(i);

  // T columns: model coordinate -> combination of standard coordinates.
  RatMatrix t(n, n);
  std::set<Label> done;
  for (const auto& [l, mvecs] : slice) {
    if (done.count(l)) continue;
    Label ld = dual_label(l, m);
    const std::vector<int>& pos = ctx.positions_of(l);
    if (static_cast<int>(pos.size()) != static_cast<int>(mvecs.size()))
      fail("arrangement multiplicities do not match the parameter");

    if (ld != l) {
      // Embed the smaller label in coordinate order, then solve the partner
      // slice from the form: J(T v, T w) = B(v, w).
      done.insert(l);
      done.insert(ld);
      const Label lo = std::min(l, ld);
      const Label hi = dual_label(lo, m);
      const std::vector<int>& plo = ctx.positions_of(lo);
      const std::vector<int>& phi_pos = ctx.positions_of(hi);
      const std::vector<int>& mlo = slice.at(lo);
      auto hi_it = slice.find(hi);
      if (hi_it == slice.end() || phi_pos.size() != plo.size() ||
          hi_it->second.size() != mlo.size())
        fail("dual slice multiplicities do not match");
      const std::vector<int>& mhi = hi_it->second;
      const int k = static_cast<int>(plo.size());
      for (int i = 0; i < k; ++i) t.at(plo[i], mlo[i]) = 1;
      // One antidiagonal partner per row: positions of the dual label are the
      // mirrors of positions of the label.
      for (int i = 0; i < k; ++i) {
        int mirror = n - 1 - plo[i];
        int col = -1;
        for (int c = 0; c < k; ++c)
          if (phi_pos[c] == mirror) col = c;
        if (col < 0) fail("mirror position missing from the dual slice");
        const Rat& alpha = form.at(plo[i], mirror);
        for (int jj = 0; jj < k; ++jj)
          t.at(phi_pos[col], mhi[jj]) = bm.at(mlo[i], mhi[jj]) / alpha;
      }
    } else {
      // Self-dual slice: hyperbolic model pairs onto outer coordinate pairs,
      // diagonal +1/-1 vectors onto them Witt-style, leftover +1 onto the
      // fixed middle position.
      done.insert(l);
      const int k = static_cast<int>(pos.size());
      std::vector<std::pair<int, int>> hyper;  // (model v, model w), B(v,w) != 0
      std::vector<int> selfs;
      for (int v : mvecs) {
        const ModelVecInfo& info = mv[v];
        if (md.groups[info.g].self) {
          selfs.push_back(v);
        } else if (info.mem == 0) {
          hyper.push_back({v, md.idx(info.g, 1, md.groups[info.g].first.a - 1 - info.j)});
        }
      }
      if (!selfs.empty() && !ctx.group.is_orthogonal())
        fail("diagonal vectors in a symplectic slice");
      if (2 * static_cast<int>(hyper.size()) + static_cast<int>(selfs.size()) != k)
        fail("slice does not decompose into pairs");
      int next = 0;
      auto take_pair = [&]() {
        std::pair<int, int> pq{pos[next], pos[k - 1 - next]};
        ++next;
        return pq;
      };
      for (auto [v, w] : hyper) {
        auto [p, q] = take_pair();
        const Rat& beta = bm.at(v, w);
        const Rat& alpha = form.at(p, q);
        t.at(p, v) = 1;
        t.at(q, w) = beta / alpha;
      }
      for (size_t i = 0; i + 1 < selfs.size(); i += 2) {
        auto [p, q] = take_pair();
        // Signs alternate +1, -1 in this order, so J(Tv, Tv) = +-1 matches.
        t.at(p, selfs[i]) = 1;
        t.at(q, selfs[i]) = Rat(1, 2);
        t.at(p, selfs[i + 1]) = 1;
        t.at(q, selfs[i + 1]) = Rat(-1, 2);
      }
      if (selfs.size() % 2 == 1) {
        if (2 * next == k) fail("no middle position left for the odd diagonal vector");
        t.at(pos[next], selfs.back()) = 1;
      }
    }
  }

  auto tinv = inverse(t);
  if (!tinv) fail("label isometry is singular");
  return t * xm * *tinv;
}

}  // namespace

MatrixRealization realize_in(const Arrangement& ctx, const LanglandsParam& phi) {
  if (!(ctx.group == phi.group) || ctx.unit_modulus != phi.unit_modulus)
    fail("arrangement and parameter disagree on the group");
  {
    InfinitesimalParam lam = infinitesimal_of(phi);
    std::map<Label, int> counts;
    for (const Label& l : ctx.labels) ++counts[l];
    if (counts != lam.mult) fail("arrangement labels do not match the parameter");
  }
  MatrixRealization r;
  r.ctx = ctx;
  r.form = form_matrix(ctx.group);
  r.x = ctx.group.is_classical() ? realize_classical(ctx, phi) : realize_gl(ctx, phi);
  verify_realization(ctx, phi, r.x);
  return r;
}

MatrixRealization realize(const LanglandsParam& phi) {
  return realize_in(arrange(infinitesimal_of(phi)), phi);
}

int tangent_dim(const Arrangement& ctx, const VoganSpaces& sp, const RatMatrix& x) {
  const int n = ctx.size();
  if (sp.h.dim() == 0) return 0;
  RatMatrix stack(sp.h.dim(), n * n);
  for (int i = 0; i < sp.h.dim(); ++i) {
    RatMatrix z = unflatten(n, sp.h.vectors[i]);
    RatVec w = flatten(z * x - x * z);
    for (int j = 0; j < n * n; ++j) stack.at(i, j) = w[j];
  }
  return rank(stack);
}

SubspaceBasis commutant(const SubspaceBasis& from, const RatMatrix& x) {
  const int n = x.rows;
  if (from.dim() == 0) return from;
  RatMatrix map(n * n, from.dim());
  for (int c = 0; c < from.dim(); ++c) {
    RatMatrix y = unflatten(n, from.vectors[c]);
    RatVec w = flatten(x * y - y * x);
    for (int r = 0; r < n * n; ++r) map.at(r, c) = w[r];
  }
  std::vector<RatVec> out;
  for (const RatVec& coeff : kernel_basis(map)) {
    RatVec y(static_cast<size_t>(n) * n, Rat(0));
    for (int c = 0; c < from.dim(); ++c)
      if (coeff[c] != 0)
        for (int r = 0; r < n * n; ++r) y[r] += coeff[c] * from.vectors[c][r];
    out.push_back(std::move(y));
  }
  return make_span(n * n, out);
}

int l_adjoint_order(const LanglandsParam& phi) {
  MatrixRealization r = realize(phi);
  VoganSpaces sp = build_spaces(r.ctx);
  return commutant(sp.v_star, r.x).dim();
}

bool is_open(const LanglandsParam& phi) {
  MatrixRealization r = realize(phi);
  VoganSpaces sp = build_spaces(r.ctx);
  return tangent_dim(r.ctx, sp, r.x) == sp.v.dim();
}

ConormalCheck conormal_fiber_check(const LanglandsParam& phi) {
  MatrixRealization r = realize(phi);
  VoganSpaces sp = build_spaces(r.ctx);
  ConormalCheck c;
  c.orbit_dim = tangent_dim(r.ctx, sp, r.x);
  c.fiber_dim = commutant(sp.v_star, r.x).dim();
  c.dim_v = sp.v.dim();
  return c;
}

}  // namespace vogan

#include "vogan/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace vogan {

namespace {

// Maximal runs of consecutive exponents (step 2) among the labels of one
// unit class and parity, exponents descending.
struct Chain {
  int u = 0;
  std::vector<int> e2s;
};

std::vector<Chain> chains_of(const Arrangement& ctx) {
  // Arrows drop the doubled exponent by exactly 2, so the two e2 parities
  // never interact; runs are taken inside one unit class and parity.
  std::map<std::pair<int, int>, std::set<int>> by_class;
  for (const Label& l : ctx.labels) {
    by_class[{l.u, ((l.e2 % 2) + 2) % 2}].insert(l.e2);
  }
  std::vector<Chain> chains;
  for (const auto& [key, e2s] : by_class) {
    std::vector<int> desc(e2s.rbegin(), e2s.rend());
    for (size_t i = 0; i < desc.size();) {
      Chain c{key.first, {desc[i]}};
      size_t j = i + 1;
      while (j < desc.size() && desc[j - 1] - desc[j] == 2) c.e2s.push_back(desc[j++]);
      chains.push_back(std::move(c));
      i = j;
    }
  }
  return chains;
}

// x restricted to a map from the (u, from_e2) block to the (u, to_e2) block.
RatMatrix block_map(const Arrangement& ctx, const RatMatrix& x, int u, int from_e2, int to_e2) {
  const std::vector<int>& cols = ctx.positions_of(Label{u, from_e2});
  const std::vector<int>& rows = ctx.positions_of(Label{u, to_e2});
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = x.at(rows[r], cols[c]);
  return m;
}

}  // namespace

RankSignature signature_of(const Arrangement& ctx, const RatMatrix& x, Direction dir) {
  RankSignature sig;
  for (const Chain& ch : chains_of(ctx)) {
    const int len = static_cast<int>(ch.e2s.size());
    for (int lo_i = len - 1; lo_i >= 0; --lo_i) {
      for (int hi_i = lo_i - 1; hi_i >= 0; --hi_i) {
        int lo = ch.e2s[lo_i], hi = ch.e2s[hi_i];
        RatMatrix m;
        if (dir == Direction::Raise) {
          m = RatMatrix::identity(static_cast<int>(ctx.positions_of(Label{ch.u, lo}).size()));
          for (int e = lo; e < hi; e += 2) m = block_map(ctx, x, ch.u, e, e + 2) * m;
        } else {
          m = RatMatrix::identity(static_cast<int>(ctx.positions_of(Label{ch.u, hi}).size()));
          for (int e = hi; e > lo; e -= 2) m = block_map(ctx, x, ch.u, e, e - 2) * m;
        }
        sig[SignatureKey{ch.u, lo, hi}] = rank(m);
      }
    }
  }
  return sig;
}

RankSignature expected_signature(const Arrangement& ctx, const LanglandsParam& phi) {
  RankSignature sig;
  for (const Chain& ch : chains_of(ctx)) {
    const int len = static_cast<int>(ch.e2s.size());
    for (int lo_i = len - 1; lo_i >= 0; --lo_i) {
      for (int hi_i = lo_i - 1; hi_i >= 0; --hi_i) {
        int lo = ch.e2s[lo_i], hi = ch.e2s[hi_i];
        int count = 0;
        for (const Summand& s : phi.summands) {
          if (norm_unit(s.u, phi.unit_modulus) != ch.u) continue;
          int bottom = s.e.twice - (s.a - 1);
          int top = s.e.twice + (s.a - 1);
          if (bottom <= lo && hi <= top && (lo - bottom) % 2 == 0) ++count;
        }
        sig[SignatureKey{ch.u, lo, hi}] = count;
      }
    }
  }
  return sig;
}

namespace {

struct Segment {
  int i = 0;
  int j = 0;
};

// All exact interval-multiset fillings of the chain capacities.
void fill_combos(const std::vector<Segment>& segs, size_t idx, std::vector<int>& rem,
                 std::vector<int>& mult, std::vector<std::vector<int>>& out) {
  if (idx == segs.size()) {
    for (int r : rem)
      if (r != 0) return;
    out.push_back(mult);
    return;
  }
  const Segment& s = segs[idx];
  // Slots left of s.i are never covered again.
  for (int t = 0; t < s.i; ++t)
    if (rem[t] != 0) return;
  int maxc = rem[s.i];
  for (int t = s.i; t <= s.j; ++t) maxc = std::min(maxc, rem[t]);
  for (int c = 0; c <= maxc; ++c) {
    if (c > 0)
      for (int t = s.i; t <= s.j; ++t) --rem[t];
    mult.push_back(c);
    fill_combos(segs, idx + 1, rem, mult, out);
    mult.pop_back();
  }
  // Restore capacities consumed by the loop above.
  for (int c = maxc; c > 0; --c)
    for (int t = s.i; t <= s.j; ++t) ++rem[t];
}

// All Jordan normal forms on one chain, as partial operators on the ambient
// coordinates.
std::vector<RatMatrix> chain_reps(const Arrangement& ctx, const Chain& ch) {
  const int n = ctx.size();
  const int len = static_cast<int>(ch.e2s.size());
  std::vector<Segment> segs;
  for (int i = 0; i < len; ++i)
    for (int j = i; j < len; ++j) segs.push_back(Segment{i, j});
  std::vector<int> caps(len);
  for (int t = 0; t < len; ++t)
    caps[t] = static_cast<int>(ctx.positions_of(Label{ch.u, ch.e2s[t]}).size());

  std::vector<std::vector<int>> combos;
  {
    std::vector<int> rem = caps, mult;
    fill_combos(segs, 0, rem, mult, combos);
  }

  std::vector<RatMatrix> reps;
  for (const std::vector<int>& mult : combos) {
    RatMatrix x(n, n);
    std::vector<std::deque<int>> avail(len);
    for (int t = 0; t < len; ++t) {
      const std::vector<int>& p = ctx.positions_of(Label{ch.u, ch.e2s[t]});
      avail[t].assign(p.begin(), p.end());
    }
    for (size_t s = 0; s < segs.size(); ++s) {
      for (int c = 0; c < mult[s]; ++c) {
        int prev = -1;
        for (int t = segs[s].i; t <= segs[s].j; ++t) {
          int p = avail[t].front();
          avail[t].pop_front();
          // Slot order is exponent-descending, so the raise map sends slot
          // t to slot t-1.
          if (t > segs[s].i) x.at(prev, p) = 1;
          prev = p;
        }
      }
    }
    reps.push_back(std::move(x));
  }
  return reps;
}

void record_orbit(OrbitCensus& census, const RatMatrix& x) {
  ++census.generated;
  OrbitRecord rec;
  rec.signature = signature_of(census.ctx, x, Direction::Raise);
  rec.dim = tangent_dim(census.ctx, census.spaces, x);
  rec.rep = x;
  rec.open = rec.dim == census.spaces.v.dim();
  rec.closed = x.is_zero();
  for (OrbitRecord& other : census.orbits) {
    if (other.signature == rec.signature) {
      if (other.dim != rec.dim)
        census.warnings.push_back("signature collision: dims " + std::to_string(other.dim) +
                                  " and " + std::to_string(rec.dim));
      return;
    }
  }
  census.orbits.push_back(std::move(rec));
}

}  // namespace

OrbitCensus enumerate_orbits(const InfinitesimalParam& lam, uint64_t seed) {
  OrbitCensus census;
  census.ctx = arrange(lam);
  census.spaces = build_spaces(census.ctx);
  const int n = census.ctx.size();

  if (!lam.group.is_classical()) {
    std::vector<RatMatrix> total{RatMatrix(n, n)};
    for (const Chain& ch : chains_of(census.ctx)) {
      std::vector<RatMatrix> next;
      for (const RatMatrix& partial : chain_reps(census.ctx, ch))
        for (const RatMatrix& acc : total) next.push_back(acc + partial);
      total = std::move(next);
    }
    for (const RatMatrix& x : total) record_orbit(census, x);
    census.complete = true;
  } else {
    record_orbit(census, RatMatrix(n, n));
    record_orbit(census, open_orbit_rep(census.ctx, census.spaces, seed));
    for (const RatVec& bv : census.spaces.v.vectors) record_orbit(census, unflatten(n, bv));
    for (uint64_t s = 0; s < 24; ++s)
      record_orbit(census, unflatten(n, random_vector(census.spaces.v, seed + 0x517cc1b727220a95ULL * (s + 1))));
  }

  std::sort(census.orbits.begin(), census.orbits.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.signature < b.signature;
            });
  return census;
}

bool closure_leq(const OrbitRecord& a, const OrbitRecord& b) {
  for (const auto& [key, val] : a.signature) {
    auto it = b.signature.find(key);
    int bval = it == b.signature.end() ? 0 : it->second;
    if (val > bval) return false;
  }
  if (a.signature == b.signature) return true;
  return a.dim < b.dim;
}

RatMatrix open_orbit_rep(const Arrangement& ctx, const VoganSpaces& sp, uint64_t seed) {
  const int n = ctx.size();
  const int target = sp.v.dim();
  RatVec sum(static_cast<size_t>(n) * n, Rat(0));
  for (const RatVec& bv : sp.v.vectors)
    for (int i = 0; i < n * n; ++i) sum[i] += bv[i];
  RatMatrix x = unflatten(n, sum);
  if (tangent_dim(ctx, sp, x) == target) return x;
  for (uint64_t attempt = 0; attempt < 32; ++attempt) {
    x = unflatten(n, random_vector(sp.v, seed + 0x9e3779b97f4a7c15ULL * (attempt + 1)));
    if (tangent_dim(ctx, sp, x) == target) return x;
  }
  throw std::runtime_error("open_orbit_rep: no draw reached the full tangent rank");
}

DualOrbit pyasetskii_dual(const Arrangement& ctx, const VoganSpaces& sp, const RatMatrix& x,
                          Direction dir, uint64_t seed) {
  const int n = ctx.size();
  const SubspaceBasis& opposite = dir == Direction::Raise ? sp.v_star : sp.v;
  const Direction odir = dir == Direction::Raise ? Direction::Lower : Direction::Raise;
  SubspaceBasis fiber = commutant(opposite, x);

  DualOrbit best;
  best.dim = -1;
  auto consider = [&](const RatMatrix& y) {
    int d = tangent_dim(ctx, sp, y);
    if (d < best.dim) return;
    RankSignature s = signature_of(ctx, y, odir);
    if (d > best.dim || s < best.signature) {
      best.dim = d;
      best.signature = std::move(s);
      best.rep = y;
    }
  };

  if (fiber.dim() == 0) {
    consider(RatMatrix(n, n));
    return best;
  }
  RatVec sum(static_cast<size_t>(n) * n, Rat(0));
  for (const RatVec& bv : fiber.vectors)
    for (int i = 0; i < n * n; ++i) sum[i] += bv[i];
  consider(unflatten(n, sum));
  // Adaptive budget: a generic draw is almost surely maximal, so stop once
  // five consecutive draws fail to improve the dimension.
  int plateau = 0;
  for (uint64_t s = 0; s < 31 && plateau < 5; ++s) {
    int before = best.dim;
    consider(unflatten(n, random_vector(fiber, seed + 0xbf58476d1ce4e5b9ULL * (s + 1))));
    plateau = best.dim > before ? 0 : plateau + 1;
  }
  return best;
}

}  // namespace vogan

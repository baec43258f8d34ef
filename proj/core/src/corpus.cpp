#include "vogan/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vogan {

namespace {

constexpr Family kFamilyOrder[] = {Family::GeneralLinear, Family::Symplectic,
                                   Family::EvenOrthogonal, Family::OddOrthogonal};

std::string corpus_key(const LanglandsParam& phi) {
  return phi.group.name() + "#m" + std::to_string(phi.unit_modulus) + "#" + param_str(phi);
}

std::string grading_key(const InfinitesimalParam& lam) {
  std::string k = lam.group.name() + "#m" + std::to_string(lam.unit_modulus);
  for (const auto& [l, c] : lam.mult) {
    k += "|" + std::to_string(l.u) + "," + std::to_string(l.e2) + "x" + std::to_string(c);
  }
  return k;
}

// Multisets of general linear summand types, nondecreasing in type index,
// summing to the group size.
void gl_fill(const DualGroupSpec& g, int modulus, const std::vector<Summand>& types,
             size_t start, int remaining, std::vector<Summand>& cur,
             std::vector<LanglandsParam>& out) {
  if (remaining == 0) {
    out.push_back(make_langlands(g, modulus, cur));
    return;
  }
  for (size_t i = start; i < types.size(); ++i) {
    if (types[i].a > remaining) continue;
    cur.push_back(types[i]);
    gl_fill(g, modulus, types, i, remaining - types[i].a, cur, out);
    cur.pop_back();
  }
}

// A duality-closed building block: either one self-dual summand or a summand
// together with its distinct dual. Enumerating multisets of blocks instead of
// raw summands keeps the classical search inside the duality-closed slice;
// the factory then filters the type and determinant constraints.
struct Block {
  std::vector<Summand> summands;
  int size = 0;
};

void classical_fill(const DualGroupSpec& g, int modulus, const std::vector<Block>& blocks,
                    size_t start, int remaining, std::vector<Summand>& cur,
                    std::vector<LanglandsParam>& out) {
  if (remaining == 0) {
    try {
      out.push_back(make_langlands(g, modulus, cur));
    } catch (const std::invalid_argument&) {
      // type or determinant constraint failed; not a parameter for g
    }
    return;
  }
  for (size_t i = start; i < blocks.size(); ++i) {
    if (blocks[i].size > remaining) continue;
    for (const Summand& s : blocks[i].summands) cur.push_back(s);
    classical_fill(g, modulus, blocks, i, remaining - blocks[i].size, cur, out);
    for (size_t k = 0; k < blocks[i].summands.size(); ++k) cur.pop_back();
  }
}

std::vector<Block> classical_blocks(int n, int modulus, int e2_bound) {
  std::vector<Block> blocks;
  for (int u = 0; u < modulus; ++u) {
    for (int e2 = -e2_bound; e2 <= e2_bound; ++e2) {
      for (int a = 1; a <= n; ++a) {
        // Label bound, as for the general linear block.
        if (std::abs(e2) + (a - 1) > e2_bound) continue;
        Summand s{u, HalfInt(e2), a};
        Summand sd = dual_summand(s, modulus);
        if (sd == s) {
          blocks.push_back({{s}, a});
        } else if (s < sd && 2 * a <= n) {
          blocks.push_back({{s, sd}, 2 * a});
        }
      }
    }
  }
  return blocks;
}

std::optional<LanglandsParam> try_langlands(const DualGroupSpec& g, int modulus,
                                            const std::vector<Summand>& summands) {
  try {
    return make_langlands(g, modulus, summands);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// One seeded random classical parameter. Even indices are biased toward
// discrete parameters (distinct right-type self-dual summands); odd indices
// mix dual pairs with self-dual pieces. Bounded retries with a deterministic
// valid fallback, so the result never depends on luck.
std::optional<LanglandsParam> random_classical(const CorpusSpec& spec, int idx) {
  std::vector<Family> fams;
  for (Family f : {Family::Symplectic, Family::EvenOrthogonal, Family::OddOrthogonal}) {
    if (spec.families.count(f)) fams.push_back(f);
  }
  if (fams.empty()) return std::nullopt;

  CoeffStream cs(spec.seed + 0x2545f4914f6cdd1dULL * static_cast<uint64_t>(idx + 1));
  Family fam = fams[cs.next_in(0, static_cast<int>(fams.size()) - 1)];
  std::vector<int> sizes;
  for (int n = spec.random_min_size; n <= spec.random_max_size; ++n) {
    bool even = n % 2 == 0;
    if (fam == Family::OddOrthogonal ? !even : even) sizes.push_back(n);
  }
  if (sizes.empty()) return std::nullopt;
  int n = sizes[cs.next_in(0, static_cast<int>(sizes.size()) - 1)];
  DualGroupSpec g{fam, n};

  const int m = spec.unit_modulus;
  std::vector<int> sd_units;
  for (int u = 0; u < m; ++u) {
    if ((2 * u) % m == 0) sd_units.push_back(u);
  }
  bool discrete_bias = idx % 2 == 0;

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Summand> cur;
    int rem = n;
    bool dead = false;
    for (int guard = 0; guard < 32 && rem > 0; ++guard) {
      bool self_piece = discrete_bias || rem < 2 || cs.next_in(0, 1) == 0;
      if (self_piece) {
        int u = sd_units[cs.next_in(0, static_cast<int>(sd_units.size()) - 1)];
        int a;
        if (fam == Family::Symplectic) {
          if (rem < 2) {
            dead = true;
            break;
          }
          a = 2 * cs.next_in(1, rem / 2);
        } else {
          a = 2 * cs.next_in(0, (rem - 1) / 2) + 1;
        }
        cur.push_back({u, HalfInt(0), a});
        rem -= a;
      } else {
        int a = cs.next_in(1, rem / 2);
        int u = cs.next_in(0, m - 1);
        int e2 = cs.next_in(-spec.classical_exp2_bound, spec.classical_exp2_bound);
        Summand s{u, HalfInt(e2), a};
        Summand sd = dual_summand(s, m);
        cur.push_back(s);
        cur.push_back(sd);  // s itself again when it happens to be self-dual
        rem -= 2 * a;
      }
    }
    if (dead || rem != 0) continue;
    if (auto phi = try_langlands(g, m, cur)) return phi;
  }

  if (fam == Family::Symplectic || fam == Family::OddOrthogonal) {
    return make_langlands(g, m, {{0, HalfInt(0), n}});
  }
  return make_langlands(g, m, {{0, HalfInt(0), n - 1}, {0, HalfInt(0), 1}});
}

// fn(i) must touch only slot i; scheduling order is then irrelevant to the
// merged result, so dynamic work stealing stays deterministic.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  int workers = std::min(jobs, count);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

struct ParamRecord {
  std::string text;
  std::string grading;
  std::string error;
  bool analyzed = false;
  int dim_v = 0;
  int orbit_dim = 0;
  int fiber_dim = 0;
  bool open = false;
  bool tempered = false;
  bool arthur = false;
  bool discrete = false;
  bool classical = false;
  bool x_zero = true;
  int perm_orbit_dim = 0;
  int perm_fiber_dim = 0;
  int perm_dim_v = 0;
  bool jm_ok = true;
  bool wdd_ok = true;
  std::string sl2_error;
  bool qdist = false;
  bool pipeline_ok = true;
  std::string pipeline_error;
};

void analyze_param(const CorpusSpec& spec, int idx, const LanglandsParam& phi, ParamRecord& pr) {
  pr.text = corpus_key(phi);
  pr.classical = phi.group.is_classical();
  try {
    InfinitesimalParam lam = infinitesimal_of(phi);
    pr.grading = grading_key(lam);

    MatrixRealization r = realize(phi);
    VoganSpaces sp = build_spaces(r.ctx);
    pr.dim_v = sp.v.dim();
    pr.orbit_dim = tangent_dim(r.ctx, sp, r.x);
    pr.fiber_dim = commutant(sp.v_star, r.x).dim();
    pr.open = pr.orbit_dim == pr.dim_v;
    pr.x_zero = r.x.is_zero();

    pr.tempered = is_tempered(phi);
    pr.arthur = is_arthur_type(phi).has_value();
    pr.discrete = is_discrete(phi);

    Arrangement pctx =
        arrange_permuted(lam, spec.seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(idx + 1));
    MatrixRealization rp = realize_in(pctx, phi);
    VoganSpaces spp = build_spaces(pctx);
    pr.perm_dim_v = spp.v.dim();
    pr.perm_orbit_dim = tangent_dim(pctx, spp, rp.x);
    pr.perm_fiber_dim = commutant(spp.v_star, rp.x).dim();

    if (!pr.x_zero) {
      LieElement e = make_element(phi.group, r.x);
      try {
        Sl2Triple t = jm_triple(e);
        (void)t;
      } catch (const std::exception& ex) {
        pr.jm_ok = false;
        pr.sl2_error = ex.what();
      }
      try {
        weighted_dynkin(e);
      } catch (const std::exception& ex) {
        pr.wdd_ok = false;
        if (pr.sl2_error.empty()) pr.sl2_error = ex.what();
      }
    }

    if (pr.classical && pr.discrete) {
      pr.qdist = is_q_distinguished(lam);
      try {
        PipelineResult res = heiermann_pipeline(lam, spec.seed);
        pr.pipeline_ok = res.q_distinguished && res.witness.has_value() &&
                         !res.witness_partition.empty();
      } catch (const std::exception& ex) {
        pr.pipeline_ok = false;
        pr.pipeline_error = ex.what();
      }
    }
    pr.analyzed = true;
  } catch (const std::exception& ex) {
    pr.error = ex.what();
  }
}

struct GradingRecord {
  std::string key;
  std::string error;
  bool analyzed = false;
  bool gl = false;
  int dim_v = 0;
  int open_count = 0;
  int closed_count = 0;
  int orbit_count = 0;
  bool sig_separates = true;  // general linear only
  bool double_dual_ok = true;
  bool dual_open_ok = true;
  bool dual_closed_ok = true;
  bool dual_bound_ok = true;
  bool closure_order_ok = true;
  std::string detail;
};

void analyze_grading(const CorpusSpec& spec, const InfinitesimalParam& lam, GradingRecord& gr) {
  gr.key = grading_key(lam);
  gr.gl = !lam.group.is_classical();
  try {
    OrbitCensus census = enumerate_orbits(lam, spec.seed);
    const Arrangement& ctx = census.ctx;
    const VoganSpaces& sp = census.spaces;
    gr.dim_v = sp.v.dim();
    gr.orbit_count = static_cast<int>(census.orbits.size());
    for (const OrbitRecord& rec : census.orbits) {
      if (rec.open) ++gr.open_count;
      if (rec.closed) ++gr.closed_count;
    }
    if (gr.gl) {
      gr.sig_separates =
          census.complete && census.warnings.empty() &&
          census.generated == static_cast<int>(census.orbits.size());
      if (!gr.sig_separates && gr.detail.empty()) {
        gr.detail = "generated " + std::to_string(census.generated) + " reps for " +
                    std::to_string(census.orbits.size()) + " signatures";
      }
    }

    for (const OrbitRecord& rec : census.orbits) {
      DualOrbit d = pyasetskii_dual(ctx, sp, rec.rep, Direction::Raise, spec.seed);
      if (d.dim < gr.dim_v - rec.dim) gr.dual_bound_ok = false;
      if (rec.open && d.dim != 0) gr.dual_open_ok = false;
      if (rec.closed && d.dim != gr.dim_v) gr.dual_closed_ok = false;
      if (gr.gl) {
        DualOrbit dd = pyasetskii_dual(ctx, sp, d.rep, Direction::Lower, spec.seed);
        if (!(dd.signature == rec.signature)) {
          gr.double_dual_ok = false;
          if (gr.detail.empty()) gr.detail = "double dual changed an orbit signature";
        }
      }
    }

    if (gr.gl) {
      int k = gr.orbit_count;
      std::vector<char> leq(static_cast<size_t>(k) * k, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          leq[static_cast<size_t>(i) * k + j] =
              closure_leq(census.orbits[i], census.orbits[j]) ? 1 : 0;
        }
      }
      for (int i = 0; i < k && gr.closure_order_ok; ++i) {
        if (!leq[static_cast<size_t>(i) * k + i]) gr.closure_order_ok = false;
        for (int j = 0; j < k && gr.closure_order_ok; ++j) {
          if (i != j && leq[static_cast<size_t>(i) * k + j] &&
              leq[static_cast<size_t>(j) * k + i]) {
            gr.closure_order_ok = false;
          }
          if (!leq[static_cast<size_t>(i) * k + j]) continue;
          for (int l = 0; l < k; ++l) {
            if (leq[static_cast<size_t>(j) * k + l] && !leq[static_cast<size_t>(i) * k + l]) {
              gr.closure_order_ok = false;
              break;
            }
          }
        }
      }
    }
    gr.analyzed = true;
  } catch (const std::exception& ex) {
    gr.error = ex.what();
  }
}

void partitions_into(int n, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, cur, out);
    cur.pop_back();
  }
}

bool form_admissible(Family fam, const std::vector<int>& parts) {
  if (fam == Family::GeneralLinear) return true;
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [p, c] : mult) {
    bool odd_part = p % 2 == 1;
    if (fam == Family::Symplectic && odd_part && c % 2 != 0) return false;
    if (fam != Family::Symplectic && !odd_part && c % 2 != 0) return false;
  }
  return true;
}

struct ClassificationCase {
  DualGroupSpec group;
  std::vector<int> parts;
  bool grading_says = false;
  bool combinatorics_says = false;
  std::string error;
  bool analyzed = false;
};

void analyze_classification(const ClassificationCase& in, ClassificationCase& cc) {
  cc = in;
  try {
    std::vector<Summand> summands;
    for (int p : cc.parts) summands.push_back({0, HalfInt(0), p});
    LanglandsParam phi = make_langlands(cc.group, 4, summands);
    MatrixRealization r = realize(phi);
    if (r.x.is_zero()) {
      // Zero nilpotent: the grading is concentrated in degree 0, so the
      // criterion reduces to the derived algebra being trivial.
      int center = cc.group.is_classical() ? 0 : 1;
      cc.grading_says = cc.group.algebra_dim() - center == 0;
    } else {
      std::vector<int> jordan = jordan_partition(r.x);
      std::vector<int> want = cc.parts;
      std::sort(want.begin(), want.end(), std::greater<int>());
      if (jordan != want) {
        cc.error = "realized partition mismatch";
        return;
      }
      cc.grading_says = is_distinguished(make_element(cc.group, r.x));
    }
    cc.combinatorics_says = distinguished_partition(cc.group, cc.parts);
    cc.analyzed = true;
  } catch (const std::exception& ex) {
    cc.error = ex.what();
  }
}

}  // namespace

void CorpusSpec::validate() const {
  if (families.empty()) {
    throw std::invalid_argument("corpus: at least one family is required");
  }
  if (max_size < 1 || max_size > 12) {
    throw std::invalid_argument("corpus: max_size must be in [1, 12]");
  }
  if (gl_size < 0 || sp_size < 0 || so_size < 0) {
    throw std::invalid_argument("corpus: family size bounds must be nonnegative");
  }
  if (gl_size > max_size || sp_size > max_size || so_size > max_size) {
    throw std::invalid_argument("corpus: family size bound exceeds max_size");
  }
  if (gl_exp2_bound < 0 || classical_exp2_bound < 0) {
    throw std::invalid_argument("corpus: exponent bounds must be nonnegative");
  }
  if (unit_modulus < 1) {
    throw std::invalid_argument("corpus: unit_modulus must be positive");
  }
  if (random_count < 0) {
    throw std::invalid_argument("corpus: random_count must be nonnegative");
  }
  if (random_min_size < 1 || random_max_size > max_size || random_min_size > random_max_size) {
    throw std::invalid_argument("corpus: random size window is empty or exceeds max_size");
  }
}

std::vector<LanglandsParam> generate(const CorpusSpec& spec) {
  spec.validate();
  std::vector<LanglandsParam> out;
  std::set<std::string> seen;
  auto push = [&out, &seen](const LanglandsParam& phi) {
    if (seen.insert(corpus_key(phi)).second) out.push_back(phi);
  };

  for (Family fam : kFamilyOrder) {
    if (!spec.families.count(fam)) continue;
    if (fam == Family::GeneralLinear) {
      for (int n = 1; n <= spec.gl_size; ++n) {
        DualGroupSpec g{fam, n};
        // The bound caps the labels a summand covers, e2 +- (a-1), not the
        // center alone; larger pieces get a tighter center range.
        std::vector<Summand> types;
        for (int e2 = -spec.gl_exp2_bound; e2 <= spec.gl_exp2_bound; ++e2) {
          for (int a = 1; a <= n; ++a) {
            if (std::abs(e2) + (a - 1) > spec.gl_exp2_bound) continue;
            types.push_back({0, HalfInt(e2), a});
          }
        }
        std::vector<LanglandsParam> batch;
        std::vector<Summand> cur;
        gl_fill(g, spec.unit_modulus, types, 0, n, cur, batch);
        for (const auto& phi : batch) push(phi);
      }
    } else {
      int bound = fam == Family::Symplectic ? spec.sp_size : spec.so_size;
      int first = fam == Family::OddOrthogonal ? 3 : 2;
      for (int n = first; n <= bound; n += 2) {
        DualGroupSpec g{fam, n};
        std::vector<Block> blocks = classical_blocks(n, spec.unit_modulus,
                                                     spec.classical_exp2_bound);
        std::vector<LanglandsParam> batch;
        std::vector<Summand> cur;
        classical_fill(g, spec.unit_modulus, blocks, 0, n, cur, batch);
        for (const auto& phi : batch) push(phi);
      }
    }
  }

  for (int i = 0; i < spec.random_count; ++i) {
    if (auto phi = random_classical(spec, i)) push(*phi);
  }
  return out;
}

CheckReport check_all(const CorpusSpec& spec, int jobs) {
  spec.validate();
  if (jobs < 1) jobs = 1;

  std::vector<LanglandsParam> corpus = generate(spec);
  CheckReport report;
  report.corpus_size = static_cast<int>(corpus.size());

  std::vector<ParamRecord> records(corpus.size());
  parallel_for(static_cast<int>(corpus.size()), jobs,
               [&](int i) { analyze_param(spec, i, corpus[i], records[i]); });

  // Distinct gradings in first-appearance order; censuses and duals are
  // computed once per grading, not once per parameter.
  std::vector<InfinitesimalParam> gradings;
  std::map<std::string, int> grading_index;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!records[i].analyzed) continue;
    if (grading_index.emplace(records[i].grading, static_cast<int>(gradings.size())).second) {
      gradings.push_back(infinitesimal_of(corpus[i]));
    }
  }
  report.distinct_gradings = static_cast<int>(gradings.size());

  std::vector<GradingRecord> censuses(gradings.size());
  parallel_for(static_cast<int>(gradings.size()), jobs,
               [&](int i) { analyze_grading(spec, gradings[i], censuses[i]); });

  auto flag = [&report](const std::string& property, const std::string& parameter,
                        const std::string& expected, const std::string& actual) {
    report.violations.push_back({property, parameter, expected, actual});
  };
  auto tick = [&report](const std::string& property) { ++report.coverage[property]; };

  for (size_t i = 0; i < corpus.size(); ++i) {
    const ParamRecord& pr = records[i];
    tick("realization_verified");
    if (!pr.analyzed) {
      flag("realization_verified", pr.text, "verified matrix realization", pr.error);
      continue;
    }

    tick("conormal_dimension");
    if (pr.orbit_dim + pr.fiber_dim != pr.dim_v) {
      flag("conormal_dimension", pr.text, "orbit_dim + fiber_dim == dim V",
           std::to_string(pr.orbit_dim) + " + " + std::to_string(pr.fiber_dim) +
               " != " + std::to_string(pr.dim_v));
    }
    tick("open_iff_zero_order");
    if (pr.open != (pr.fiber_dim == 0)) {
      flag("open_iff_zero_order", pr.text, "open exactly when the order vanishes",
           "open=" + std::to_string(pr.open) + " order=" + std::to_string(pr.fiber_dim));
    }
    tick("order_equals_codim");
    if (pr.fiber_dim != pr.dim_v - pr.orbit_dim) {
      flag("order_equals_codim", pr.text, "order == dim V - orbit_dim",
           std::to_string(pr.fiber_dim) + " != " +
               std::to_string(pr.dim_v - pr.orbit_dim));
    }
    tick("tempered_implies_open");
    if (pr.tempered && !pr.open) {
      flag("tempered_implies_open", pr.text, "tempered parameters land on the open orbit",
           "tempered but orbit_dim=" + std::to_string(pr.orbit_dim) + " < dim V=" +
               std::to_string(pr.dim_v));
    }
    tick("tempered_iff_open_arthur");
    if (pr.tempered != (pr.open && pr.arthur)) {
      flag("tempered_iff_open_arthur", pr.text, "tempered <=> open and of Arthur type",
           "tempered=" + std::to_string(pr.tempered) + " open=" + std::to_string(pr.open) +
               " arthur=" + std::to_string(pr.arthur));
    }
    tick("relabeling_invariance");
    if (pr.perm_dim_v != pr.dim_v || pr.perm_orbit_dim != pr.orbit_dim ||
        pr.perm_fiber_dim != pr.fiber_dim) {
      flag("relabeling_invariance", pr.text, "invariants agree across relabeling",
           "dims (" + std::to_string(pr.perm_dim_v) + "," + std::to_string(pr.perm_orbit_dim) +
               "," + std::to_string(pr.perm_fiber_dim) + ") vs (" + std::to_string(pr.dim_v) +
               "," + std::to_string(pr.orbit_dim) + "," + std::to_string(pr.fiber_dim) + ")");
    }
    if (!pr.x_zero) {
      tick("jm_identities");
      if (!pr.jm_ok) {
        flag("jm_identities", pr.text, "verified sl2 triple through the realization",
             pr.sl2_error);
      }
      tick("dynkin_labels");
      if (!pr.wdd_ok) {
        flag("dynkin_labels", pr.text, "weighted diagram labels in {0, 1, 2}", pr.sl2_error);
      }
    }
    if (pr.classical && pr.discrete) {
      tick("discrete_pipeline");
      if (!pr.qdist || !pr.pipeline_ok) {
        flag("discrete_pipeline", pr.text,
             "discrete parameters are q-distinguished with a distinguished open witness",
             pr.qdist ? pr.pipeline_error : "not q-distinguished");
      }
    }
  }

  for (const GradingRecord& gr : censuses) {
    tick("census_open_closed");
    if (!gr.analyzed) {
      flag("census_open_closed", gr.key, "orbit census", gr.error);
      continue;
    }
    // dim V == 0 leaves a single orbit that is both open and closed.
    if (gr.open_count != 1 || gr.closed_count != 1) {
      flag("census_open_closed", gr.key, "exactly one open and one closed orbit",
           std::to_string(gr.open_count) + " open, " + std::to_string(gr.closed_count) +
               " closed among " + std::to_string(gr.orbit_count));
    }
    tick("dual_open_closed");
    if (!gr.dual_open_ok || !gr.dual_closed_ok) {
      flag("dual_open_closed", gr.key, "dual swaps the open and closed orbits",
           std::string(gr.dual_open_ok ? "" : "dual(open) nonzero ") +
               std::string(gr.dual_closed_ok ? "" : "dual(closed) not dense"));
    }
    tick("dual_dim_bound");
    if (!gr.dual_bound_ok) {
      flag("dual_dim_bound", gr.key, "dim dual >= dim V - dim orbit", "bound failed");
    }
    if (gr.gl) {
      tick("gl_signature_separates");
      if (!gr.sig_separates) {
        flag("gl_signature_separates", gr.key, "rank signatures separate the orbits",
             gr.detail);
      }
      tick("gl_double_dual");
      if (!gr.double_dual_ok) {
        flag("gl_double_dual", gr.key, "double dual fixes every orbit", gr.detail);
      }
      tick("gl_closure_order");
      if (!gr.closure_order_ok) {
        flag("gl_closure_order", gr.key, "closure order is a partial order",
             "reflexivity, antisymmetry or transitivity failed");
      }
    }
  }

  // Partition cross-classification at fixed desk scale, independent of the
  // corpus size knobs: gl_n up to 6, sp_2n up to 8, so_n up to 8.
  std::vector<ClassificationCase> cases;
  auto add_cases = [&cases, &spec](Family fam, int lo, int hi, int step) {
    if (!spec.families.count(fam)) return;
    for (int n = lo; n <= hi; n += step) {
      std::vector<std::vector<int>> parts_list;
      std::vector<int> cur;
      partitions_into(n, n, cur, parts_list);
      for (const auto& parts : parts_list) {
        if (form_admissible(fam, parts)) cases.push_back({{fam, n}, parts, false, false, "", false});
      }
    }
  };
  add_cases(Family::GeneralLinear, 1, 6, 1);
  add_cases(Family::Symplectic, 2, 8, 2);
  add_cases(Family::EvenOrthogonal, 2, 8, 2);
  add_cases(Family::OddOrthogonal, 3, 7, 2);

  std::vector<ClassificationCase> done(cases.size());
  parallel_for(static_cast<int>(cases.size()), jobs,
               [&](int i) { analyze_classification(cases[i], done[i]); });
  for (const ClassificationCase& cc : done) {
    tick("partition_classification");
    std::string label = cc.group.name() + " [";
    for (size_t j = 0; j < cc.parts.size(); ++j) {
      label += (j ? "," : "") + std::to_string(cc.parts[j]);
    }
    label += "]";
    if (!cc.analyzed) {
      flag("partition_classification", label, "grading test decided", cc.error);
    } else if (cc.grading_says != cc.combinatorics_says) {
      flag("partition_classification", label, "grading test agrees with part combinatorics",
           "grading=" + std::to_string(cc.grading_says) +
               " combinatorics=" + std::to_string(cc.combinatorics_says));
    }
  }

  return report;
}

}  // namespace vogan

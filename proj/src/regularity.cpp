#include "quasilin/regularity.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ql {

namespace {

uint32_t neg_support(const IntVec& alpha) {
  uint32_t m = 0;
  for (Eigen::Index j = 0; j < alpha.size(); ++j)
    if (alpha(j) < 0) m |= (1u << j);
  return m;
}

uint32_t support_mask(const IntVec& v) {
  uint32_t m = 0;
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (v(j) != 0) m |= (1u << j);
  return m;
}

int max_facet_size(const SimplicialComplex& c) {
  int best = 0;
  for (uint32_t f : c.facets) best = std::max(best, std::popcount(f));
  return best;
}

}  // namespace

IdealPowers IdealPowers::closure(MonomialIdeal ideal) {
  IdealPowers p;
  p.variant = PowerVariant::Closure;
  p.delta = radical_complex(ideal);
  p.np = newton_polyhedron(ideal);
  p.dim_quotient = max_facet_size(p.delta);
  for (const NewtonFacet& f : p.np->facets)
    p.rows.push_back(Row{f.a, f.b, support_mask(f.a)});
  p.ideal = std::move(ideal);
  return p;
}

IdealPowers IdealPowers::symbolic(MonomialIdeal ideal) {
  IdealPowers p;
  p.variant = PowerVariant::Symbolic;
  p.sf = SquareFreeIdeal::make(std::move(ideal));
  p.ideal = p.sf->base;
  p.delta = radical_complex(p.ideal);
  p.dim_quotient = max_facet_size(p.delta);
  for (uint32_t prime : p.sf->primes) {
    IntVec a = IntVec::Constant(p.ideal.vars, Int(0));
    for (int j = 0; j < p.ideal.vars; ++j)
      if (prime & (1u << j)) a(j) = 1;
    p.rows.push_back(Row{std::move(a), Int(1), prime});
  }
  return p;
}

int HomologyCache::dim(const SimplicialComplex& c, int k) {
  if (c.is_void || k < -1) return 0;
  auto key = std::make_pair(c.facets, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const int d = reduced_homology_dim(c, k);
  memo_.emplace(std::move(key), d);
  return d;
}

SimplicialComplex delta_alpha_closure(const NewtonPolyhedron& np,
                                      const SimplicialComplex& delta,
                                      const Int& n, const IntVec& alpha) {
  const int r = np.vars;
  const uint32_t neg = neg_support(alpha);
  if (!delta.contains_face(neg))
    throw DomainError("delta_alpha_closure: negative support is not a face");
  const uint32_t full = (1u << r) - 1;
  std::vector<uint32_t> gamma_facets;
  for (const NewtonFacet& f : np.facets) {
    const uint32_t supp = support_mask(f.a);
    if ((supp & neg) != 0) continue;
    Int lhs(0);
    for (Eigen::Index j = 0; j < r; ++j)
      if (!(neg & (1u << j))) lhs += f.a(j) * alpha(j);
    if (lhs < n * f.b) gamma_facets.push_back(full & ~(supp | neg));
  }
  return SimplicialComplex::from_facets(r, std::move(gamma_facets));
}

SimplicialComplex delta_alpha_symbolic(const SquareFreeIdeal& sf, const Int& n,
                                       const IntVec& alpha) {
  const int r = sf.base.vars;
  const uint32_t neg = neg_support(alpha);
  const uint32_t full = (1u << r) - 1;
  bool neg_is_face = false;
  std::vector<uint32_t> gamma_facets;
  for (uint32_t prime : sf.primes) {
    const uint32_t facet = full & ~prime;
    if ((neg & facet) == neg) neg_is_face = true;
  }
  if (!neg_is_face)
    throw DomainError("delta_alpha_symbolic: negative support is not a face");
  for (uint32_t prime : sf.primes) {
    const uint32_t facet = full & ~prime;
    if ((neg & facet) != neg) continue;  // supp^-(alpha) not inside the facet
    Int outside(0);
    for (Eigen::Index j = 0; j < r; ++j)
      if (prime & (1u << j)) outside += alpha(j);
    if (outside <= n - 1) gamma_facets.push_back(facet & ~neg);
  }
  return SimplicialComplex::from_facets(r, std::move(gamma_facets));
}

int takayama_dim(const IdealPowers& powers, const Int& n, int i,
                 const IntVec& alpha, HomologyCache& cache) {
  const uint32_t neg = neg_support(alpha);
  if (!powers.delta.contains_face(neg)) return 0;
  SimplicialComplex c = powers.variant == PowerVariant::Closure
                            ? delta_alpha_closure(*powers.np, powers.delta, n, alpha)
                            : delta_alpha_symbolic(*powers.sf, n, alpha);
  return cache.dim(c, i - std::popcount(neg) - 1);
}

std::vector<GammaCandidate> enumerate_gamma_candidates(const IdealPowers& powers,
                                                       long cap) {
  const int r = powers.vars();
  const uint32_t full = (1u << r) - 1;

  std::set<uint32_t> face_set;
  for (uint32_t facet : powers.delta.facets) {
    uint32_t sub = facet;
    while (true) {
      face_set.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }

  std::vector<GammaCandidate> candidates;
  long count = 0;
  for (uint32_t s_mask : face_set) {
    std::vector<int> admissible;
    for (size_t i = 0; i < powers.rows.size(); ++i)
      if ((powers.rows[i].support & s_mask) == 0) admissible.push_back(static_cast<int>(i));
    const int m = static_cast<int>(admissible.size());
    for (uint32_t pick = 1; pick < (1u << m); ++pick) {
      if (++count > cap)
        throw BudgetError("enumerate_gamma_candidates: candidate cap exceeded");
      GammaCandidate cand;
      cand.supp_neg = s_mask;
      std::vector<uint32_t> gfacets;
      for (int k = 0; k < m; ++k) {
        const int row = admissible[static_cast<size_t>(k)];
        if (pick & (1u << k)) {
          cand.active_le.push_back(row);
          gfacets.push_back(full & ~(powers.rows[static_cast<size_t>(row)].support | s_mask));
        } else {
          cand.active_ge.push_back(row);
        }
      }
      cand.gamma = SimplicialComplex::from_facets(r, std::move(gfacets));
      cand.r_prime = r - std::popcount(s_mask);
      candidates.push_back(std::move(cand));
    }
  }
  return candidates;
}

namespace {

// Degree-selection program of a candidate in the surviving variables:
// strict rows a'_i x' <= n b_i - 1, lower rows a'_l x' >= n b_l.
ParamIP candidate_program(const IdealPowers& powers, const GammaCandidate& cand) {
  const int r = powers.vars();
  std::vector<int> vars;
  for (int j = 0; j < r; ++j)
    if (!(cand.supp_neg & (1u << j))) vars.push_back(j);
  const int rp = static_cast<int>(vars.size());
  const int rows_n = static_cast<int>(cand.active_le.size() + cand.active_ge.size());
  IntMat a = IntMat::Constant(rows_n, rp, Int(0));
  IntVec b(rows_n), c(rows_n);
  int row = 0;
  for (int i : cand.active_le) {
    for (int j = 0; j < rp; ++j)
      a(row, j) = powers.rows[static_cast<size_t>(i)].a(vars[static_cast<size_t>(j)]);
    b(row) = powers.rows[static_cast<size_t>(i)].b;
    c(row) = -1;
    ++row;
  }
  for (int l : cand.active_ge) {
    for (int j = 0; j < rp; ++j)
      a(row, j) = -powers.rows[static_cast<size_t>(l)].a(vars[static_cast<size_t>(j)]);
    b(row) = -powers.rows[static_cast<size_t>(l)].b;
    c(row) = 0;
    ++row;
  }
  IntVec d = IntVec::Constant(rp, Int(1));
  return ParamIP(std::move(a), std::move(b), std::move(c), std::move(d));
}

}  // namespace

OptValue gamma_ip_value(const IdealPowers& powers, const GammaCandidate& cand,
                        const Int& n) {
  if (cand.active_le.empty()) return OptValue::neg_infinity();
  return solve_ip(candidate_program(powers, cand), n);
}

OptValue a_gamma_i(const IdealPowers& powers, const GammaCandidate& cand,
                   const Int& n, int i, HomologyCache& cache) {
  const int shift = std::popcount(cand.supp_neg);
  if (cache.dim(cand.gamma, i - shift - 1) == 0) return OptValue::neg_infinity();
  OptValue ip = gamma_ip_value(powers, cand, n);
  if (ip.is_neg_infinity()) return ip;
  if (ip.is_pos_infinity())
    throw InvariantError(
        "a_gamma_i: unbounded degree program with nonvanishing homology "
        "(the invariant values must be integers)");
  return OptValue::finite(ip.value() + Rat(Int(cand.r_prime - powers.vars())),
                          ip.witness());
}

CohomologyReport a_invariants(const IdealPowers& powers, const Int& n) {
  if (n < 1) throw DomainError("a_invariants: n must be positive");
  HomologyCache cache;
  const int dim = powers.dim_quotient;
  std::vector<std::optional<Int>> best(static_cast<size_t>(dim) + 1);
  for (const GammaCandidate& cand : enumerate_gamma_candidates(powers)) {
    const int shift = std::popcount(cand.supp_neg);
    std::vector<int> live;
    for (int i = 0; i <= dim; ++i)
      if (cache.dim(cand.gamma, i - shift - 1) > 0) live.push_back(i);
    if (live.empty()) continue;
    OptValue ip = gamma_ip_value(powers, cand, n);
    if (ip.is_neg_infinity()) continue;
    if (ip.is_pos_infinity())
      throw InvariantError(
          "a_invariants: unbounded degree program with nonvanishing homology");
    if (!ip.value().is_integer())
      throw InvariantError("a_invariants: non-integral program optimum");
    const Int val = ip.value().num() + Int(cand.r_prime - powers.vars());
    for (int i : live) {
      auto& slot = best[static_cast<size_t>(i)];
      if (!slot || val > *slot) slot = val;
    }
  }
  std::optional<Int> reg;
  for (int i = 0; i <= dim; ++i)
    if (best[static_cast<size_t>(i)]) {
      const Int cand = *best[static_cast<size_t>(i)] + i;
      if (!reg || cand > *reg) reg = cand;
    }
  if (!reg)
    throw InvariantError("a_invariants: every invariant is -inf for a nonzero quotient");
  return CohomologyReport{n, std::move(best), *reg};
}

namespace {

std::vector<IntVec> power_generators(const IdealPowers& powers, const Int& n) {
  if (powers.variant == PowerVariant::Closure)
    return closure_power_generators(*powers.np, n,
                                    n * powers.np->dI * powers.vars());
  return symbolic_generators(*powers.sf, n);
}

}  // namespace

OracleReport oracle_a_invariants(const IdealPowers& powers, const Int& n,
                                 const IntVec& box_low, const IntVec& box_high) {
  const int r = powers.vars();
  if (box_low.size() != r || box_high.size() != r)
    throw DomainError("oracle_a_invariants: box has wrong dimension");
  const std::vector<IntVec> gens = power_generators(powers, n);
  const int dim = powers.dim_quotient;
  HomologyCache cache;

  std::vector<std::optional<Int>> best(static_cast<size_t>(dim) + 1);
  std::vector<std::optional<IntVec>> witness(static_cast<size_t>(dim) + 1);

  IntVec alpha = box_low;
  const uint32_t full = (1u << r) - 1;
  bool done = false;
  while (!done) {
    const uint32_t neg = neg_support(alpha);
    if (powers.delta.contains_face(neg)) {
      // selection complex straight from the localization definition: F is a
      // face iff no generator divides alpha outside F and the negative part
      std::vector<uint32_t> fs;
      const uint32_t ambient = full & ~neg;
      uint32_t sub = ambient;
      while (true) {
        bool member = false;
        for (const IntVec& g : gens) {
          bool leq = true;
          for (Eigen::Index j = 0; j < r; ++j) {
            if ((sub | neg) & (1u << j)) continue;
            if (g(j) > alpha(j)) {
              leq = false;
              break;
            }
          }
          if (leq) {
            member = true;
            break;
          }
        }
        if (!member) fs.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & ambient;
      }
      SimplicialComplex dalpha = SimplicialComplex::from_facets(r, std::move(fs));
      const int shift = std::popcount(neg);
      Int total(0);
      for (Eigen::Index j = 0; j < r; ++j) total += alpha(j);
      for (int i = 0; i <= dim; ++i) {
        if (cache.dim(dalpha, i - shift - 1) == 0) continue;
        auto& slot = best[static_cast<size_t>(i)];
        if (!slot || total > *slot) {
          slot = total;
          witness[static_cast<size_t>(i)] = alpha;
        }
      }
    }
    int j = r - 1;
    while (j >= 0 && alpha(j) == box_high(j)) {
      alpha(j) = box_low(j);
      --j;
    }
    if (j < 0)
      done = true;
    else
      alpha(j) += 1;
  }

  bool on_boundary = false;
  for (int i = 0; i <= dim; ++i) {
    const auto& w = witness[static_cast<size_t>(i)];
    if (!w) continue;
    for (Eigen::Index j = 0; j < r; ++j)
      if ((*w)(j) == box_low(j) || (*w)(j) == box_high(j)) on_boundary = true;
  }
  std::optional<Int> reg;
  for (int i = 0; i <= dim; ++i)
    if (best[static_cast<size_t>(i)]) {
      const Int cand = *best[static_cast<size_t>(i)] + i;
      if (!reg || cand > *reg) reg = cand;
    }
  if (!reg)
    throw InvariantError("oracle_a_invariants: every invariant is -inf; box too small");
  return OracleReport{CohomologyReport{n, std::move(best), *reg}, on_boundary,
                      std::move(witness)};
}

namespace {

Int candidate_d_hat(const IdealPowers& powers) {
  Int best(1);
  for (const GammaCandidate& cand : enumerate_gamma_candidates(powers)) {
    if (cand.active_le.empty()) continue;
    ParamIP prog = candidate_program(powers, cand);
    best = std::max(best,
                    max_abs_subdet(prog.A, std::min(prog.s(), prog.r())).value);
  }
  return best;
}

}  // namespace

std::pair<IntVec, IntVec> default_oracle_box(const IdealPowers& powers, const Int& n) {
  const int r = powers.vars();
  const Int d_hat = candidate_d_hat(powers);
  const Int high = n * powers.ideal.dI * r + Int(2) * Int(r) * Int(r) * d_hat;
  return {IntVec::Constant(r, Int(-r)), IntVec::Constant(r, high)};
}

OracleReport oracle_a_invariants_adaptive(const IdealPowers& powers, const Int& n,
                                          const Int& initial_high,
                                          const Int& max_high) {
  const int r = powers.vars();
  Int high = initial_high;
  while (true) {
    OracleReport rep = oracle_a_invariants(powers, n, IntVec::Constant(r, Int(-r)),
                                           IntVec::Constant(r, high));
    if (!rep.boundary_attained) return rep;
    if (high >= max_high)
      throw BudgetError("oracle_a_invariants_adaptive: box grew past the limit");
    high = std::min(high * 2, max_high);
  }
}

TheoreticalBounds theoretical_bounds(int r, const Int& dI) {
  if (r < 1 || dI < 1) throw DomainError("theoretical_bounds: r and d(I) must be >= 1");
  Int d_pow(1);
  for (int i = 0; i < 3 * r * r; ++i) d_pow *= dI;
  Int r_pow(1);
  for (int i = 0; i < 2 + (3 * r) / 2; ++i) r_pow *= Int(r);
  Int n_dagger, sym;
  if (r % 2 == 0) {
    n_dagger = Int(2) * r_pow * d_pow;
    sym = Int(2) * r_pow;
  } else {
    // odd r: one factor sqrt(r) remains; take the exact integer ceiling
    const Int base_dag = Int(2) * r_pow * d_pow;
    n_dagger = isqrt_ceil(base_dag * base_dag * Int(r));
    const Int base_sym = Int(2) * r_pow;
    sym = isqrt_ceil(base_sym * base_sym * Int(r));
  }
  Int rr(1);
  for (int i = 0; i < r; ++i) rr *= Int(r);
  Int d2(1);
  for (int i = 0; i < 2 * r * r; ++i) d2 *= dI;
  const Int regst = Int(r + 1) * Int(r + 2) * rr * d2;
  return TheoreticalBounds{n_dagger, regst, sym};
}

StabilityReport stability_report(const IdealPowers& powers, long n_lo, long n_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw DomainError("stability_report: bad range");
  const int r = powers.vars();
  const int dim = powers.dim_quotient;

  StabilityReport rep;
  rep.variant = powers.variant;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (long n = n_lo; n <= n_hi; ++n) rep.table.push_back(a_invariants(powers, Int(n)));

  const long range = n_hi - n_lo + 1;
  std::vector<long> candidates;
  for (long t = 1; 3 * t <= range && t <= 16; ++t) candidates.push_back(t);
  const int window = static_cast<int>(std::min<long>(range, 6));

  rep.d_hat = candidate_d_hat(powers);
  const Rat beta_floor = Rat(Int(-2) * Int(r) * Int(r) * rep.d_hat);

  rep.empirical_onset = n_lo;
  for (int i = 0; i <= dim; ++i) {
    IpSweep seq;
    seq.n_lo = n_lo;
    seq.n_hi = n_hi;
    bool any_finite = false;
    for (const CohomologyReport& row : rep.table) {
      const auto& ai = row.a[static_cast<size_t>(i)];
      if (ai) {
        seq.values.push_back(OptValue::finite(Rat(*ai)));
        any_finite = true;
      } else {
        seq.values.push_back(OptValue::neg_infinity());
      }
    }
    if (!any_finite) {
      rep.a_laws.emplace_back(std::nullopt);
      continue;
    }
    QuasiLinearLaw law = detect_law(seq, candidates, window);
    if (law.slope.den() > rep.d_hat)
      throw InvariantError("stability_report: law slope denominator exceeds D");
    for (const auto& beta : law.intercepts) {
      if (!beta) continue;
      if (*beta > Rat(0) || *beta < beta_floor)
        throw InvariantError("stability_report: intercept outside [-2 r^2 D, 0]");
    }
    rep.empirical_onset = std::max(rep.empirical_onset, law.onset);
    rep.a_laws.emplace_back(std::move(law));
  }

  // the finite laws must share one slope
  std::optional<Rat> slope;
  for (const auto& law : rep.a_laws) {
    if (!law) continue;
    if (slope && *slope != law->slope)
      throw InvariantError("stability_report: finite invariant laws disagree on the slope");
    slope = law->slope;
  }

  IpSweep regs;
  regs.n_lo = n_lo;
  regs.n_hi = n_hi;
  for (const CohomologyReport& row : rep.table)
    regs.values.push_back(OptValue::finite(Rat(row.reg)));
  rep.reg_law = detect_law(regs, candidates, window);
  rep.empirical_onset = std::max(rep.empirical_onset, rep.reg_law.onset);

  if (rep.reg_law.period == 1) {
    const Rat p = rep.reg_law.slope;
    const Rat e = *rep.reg_law.intercepts[0] + Rat(1);  // reg(J_n) = reg(R/J_n) + 1
    if (!p.is_integer() || !e.is_integer())
      throw InvariantError("stability_report: linear regularity law is not integral");
    rep.reg_linear = std::make_pair(p.num(), e.num());
  }
  if (powers.variant == PowerVariant::Closure) {
    if (!rep.reg_linear)
      throw InvariantError(
          "stability_report: regularity of closure powers must be eventually "
          "linear; extend the range");
    const auto& [p, e] = *rep.reg_linear;
    if (p < 1 || p > powers.ideal.dI)
      throw InvariantError("stability_report: regularity slope outside [1, d(I)]");
    if (e < 0 || e > Int(dim))
      throw InvariantError("stability_report: regularity intercept outside [0, dim]");
    for (const CohomologyReport& row : rep.table) {
      const Int reg_ideal = row.reg + 1;
      if (reg_ideal < p * row.n || reg_ideal > p * row.n + Int(dim))
        throw InvariantError("stability_report: sandwich bound violated at n=" +
                             row.n.get_str());
    }
  }

  rep.bounds = theoretical_bounds(r, powers.ideal.dI);
  return rep;
}

}  // namespace ql

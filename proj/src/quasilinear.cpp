#include "quasilin/quasilinear.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ql {

JMaxInfo jmax_and_delta(const ParamIP& pip, std::optional<Int> cap_override) {
  const Polyhedron base = pip.base_polyhedron();
  if (!is_full_dimensional(base).full_dimensional)
    throw DomainError("jmax_and_delta: base polyhedron not full-dimensional");
  const OptValue lp = solve_lp(base, to_rat(pip.d));
  if (!lp.is_finite()) throw DomainError("jmax_and_delta: linear optimum not finite");
  const Rat phi = lp.value();

  IntMat ab(pip.A.rows(), pip.A.cols() + 1);
  ab.leftCols(pip.A.cols()) = pip.A;
  ab.col(pip.A.cols()) = pip.b;
  const Int d_prime = std::max(
      max_abs_subdet(ab, static_cast<int>(std::max(ab.rows(), ab.cols()))).value, Int(1));
  const Int cap = cap_override.value_or(Int(pip.r() + 1) * d_prime);
  if (cap > 1'000'000)
    throw BudgetError("jmax_and_delta: cap " + cap.get_str() +
                      " exceeds the enumeration budget; pass a cap override");

  const ParamIP pure(pip.A, pip.b, IntVec::Constant(pip.A.rows(), Int(0)), pip.d);
  std::vector<long> members;
  const long cap_l = cap.get_si();
  for (long n = 1; n < cap_l; ++n) {
    OptValue m_n = solve_ip(pure, Int(n));
    if (m_n.is_finite() && m_n.value() == phi * Rat(n)) members.push_back(n);
  }
  if (members.empty())
    throw BudgetError(
        "jmax_and_delta: no index below the cap attains the linear slope; a "
        "larger cap is required (one exists below D)");

  const Int d_stat =
      std::max(max_abs_subdet(pip.A, std::min(pip.s(), pip.r())).value, Int(1));
  if (Int(members.front()) > d_stat)
    throw InvariantError("jmax_and_delta: smallest member exceeds D");

  std::vector<Int> as_int;
  for (long m : members) as_int.push_back(Int(m));
  const Int delta = gcd_list(as_int);
  const Int j1(members.front()), jp(members.back());
  const Int frob = std::max(Int((j1 - 1) * (jp - 1)), j1);
  return JMaxInfo{std::move(members), cap, delta, frob};
}

Int n_star_from_stats(const SubdetStats& stats, int r) {
  return Int(r + 1) * stats.Dprime * (stats.D - 1) + Int(r + 2) * stats.DeltaMax -
         stats.D;
}

Int n_star(const ParamIP& pip) {
  return n_star_from_stats(subdet_stats(pip.A, pip.b, pip.c), pip.r());
}

std::vector<long> default_period_candidates(const Int& delta, int multiple_cap) {
  const long d = delta.get_si();
  std::set<long> out;
  for (long t = 1; t * t <= d; ++t)
    if (d % t == 0) {
      out.insert(t);
      out.insert(d / t);
    }
  for (int k = 2; k <= multiple_cap; ++k) out.insert(d * k);
  return {out.begin(), out.end()};
}

namespace {

struct CandidateFit {
  bool ok = false;
  std::string reason;
  QuasiLinearLaw law;
};

CandidateFit fit_candidate(const IpSweep& sweep, long t, int validation_window,
                           const std::optional<Rat>& asserted_slope) {
  CandidateFit fit;
  const long range = sweep.size();
  if (range < 3 * t) {
    fit.reason = "range shorter than three periods";
    return fit;
  }
  std::optional<Rat> slope;
  std::vector<std::optional<Rat>> intercepts(static_cast<size_t>(t));
  std::vector<bool> undefined(static_cast<size_t>(t), false);
  for (long rho = 0; rho < t; ++rho) {
    long n2 = sweep.n_hi - ((sweep.n_hi - rho) % t + t) % t;
    long n1 = n2 - t;
    if (n2 > sweep.n_hi || n1 < sweep.n_lo) {
      fit.reason = "class without two tail points";
      return fit;
    }
    const OptValue& v2 = sweep.at(n2);
    const OptValue& v1 = sweep.at(n1);
    if (v2.is_pos_infinity() || v1.is_pos_infinity())
      throw DetectionError("detect_law: unbounded value in sweep", {});
    if (v2.is_neg_infinity() && v1.is_neg_infinity()) {
      undefined[static_cast<size_t>(((n2 % t) + t) % t)] = true;
      continue;
    }
    if (v2.is_neg_infinity() != v1.is_neg_infinity()) {
      fit.reason = "mixed feasibility at the tail of a residue class";
      return fit;
    }
    const Rat s = (v2.value() - v1.value()) / Rat(t);
    if (slope && *slope != s) {
      fit.reason = "residue classes disagree on the slope";
      return fit;
    }
    slope = s;
    intercepts[static_cast<size_t>(((n2 % t) + t) % t)] = v2.value() - s * Rat(n2);
  }
  if (!slope) {
    fit.reason = "no residue class has finite tail values";
    return fit;
  }
  if (asserted_slope && *asserted_slope != *slope) {
    fit.reason = "tail slope " + slope->str() + " differs from the supplied slope " +
                 asserted_slope->str();
    return fit;
  }

  auto consistent = [&](long n) {
    const size_t rho = static_cast<size_t>(((n % t) + t) % t);
    const OptValue& v = sweep.at(n);
    if (undefined[rho]) return v.is_neg_infinity();
    if (!intercepts[rho]) return false;  // class never seen finite
    return v.is_finite() && v.value() == *slope * Rat(n) + *intercepts[rho];
  };
  const long win_lo = std::max(sweep.n_lo, sweep.n_hi - validation_window + 1);
  for (long n = win_lo; n <= sweep.n_hi; ++n)
    if (!consistent(n)) {
      fit.reason = "trailing window disagrees at n=" + std::to_string(n);
      return fit;
    }
  long onset = sweep.n_hi + 1;
  for (long n = sweep.n_hi; n >= sweep.n_lo; --n) {
    if (!consistent(n)) break;
    onset = n;
  }
  if (sweep.n_hi - onset + 1 < 3 * t) {
    fit.reason = "fewer than three consistent periods past the onset";
    return fit;
  }
  fit.ok = true;
  fit.law = QuasiLinearLaw{*slope, t, std::move(intercepts), onset};
  return fit;
}

}  // namespace

QuasiLinearLaw detect_law(const IpSweep& sweep,
                          const std::vector<long>& period_candidates,
                          int validation_window,
                          const std::optional<Rat>& asserted_slope) {
  if (period_candidates.empty()) throw DomainError("detect_law: no period candidates");
  std::vector<long> cands = period_candidates;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::vector<std::string> reasons;
  for (long t : cands) {
    if (t < 1) throw DomainError("detect_law: period candidates must be positive");
    CandidateFit fit = fit_candidate(sweep, t, validation_window, asserted_slope);
    if (fit.ok) return fit.law;
    reasons.push_back("t=" + std::to_string(t) + ": " + fit.reason);
  }
  std::vector<std::pair<long, std::string>> table;
  for (long n = sweep.n_lo; n <= sweep.n_hi; ++n)
    table.emplace_back(n, sweep.at(n).str());
  std::ostringstream msg;
  msg << "detect_law: no candidate period validates";
  for (const std::string& r : reasons) msg << "; " << r;
  throw DetectionError(msg.str(), std::move(table));
}

LinearityCriterion linearity_criterion(const ParamIP& pip) {
  JMaxInfo info = jmax_and_delta(pip);
  const bool linear = info.delta == 1;
  return LinearityCriterion{info.delta, linear, linear};
}

std::vector<bool> semigroup_membership(const std::vector<long>& gens, long up_to) {
  std::vector<bool> member(static_cast<size_t>(up_to + 1), false);
  member[0] = true;
  for (long n = 1; n <= up_to; ++n)
    for (long g : gens)
      if (g <= n && member[static_cast<size_t>(n - g)]) {
        member[static_cast<size_t>(n)] = true;
        break;
      }
  return member;
}

}  // namespace ql

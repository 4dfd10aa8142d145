#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "quasilin/regularity.hpp"

// vendor single-header nlohmann/json
#include "json.hpp"

namespace ql {

// Result of running the --oracle cross-check: the first disagreeing entry.
struct OracleMismatchError : Error {
  long n;
  int i;
  std::string detail;
  OracleMismatchError(long n_, int i_, std::string detail_)
      : Error("oracle mismatch at n=" + std::to_string(n_) + ", i=" +
              std::to_string(i_) + ": " + detail_),
        n(n_),
        i(i_),
        detail(std::move(detail_)) {}
};

struct ProblemOptions {
  std::optional<std::pair<long, long>> range;
  std::optional<Int> jmax_cap;
  std::optional<std::pair<Int, Int>> box;
};

struct ProblemFile {
  enum class Kind { ParamIp, Monomial, SquareFree };
  Kind kind;
  std::optional<ParamIP> pip;
  std::optional<MonomialIdeal> ideal;  // Monomial and SquareFree kinds
  ProblemOptions options;
};

ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);

// ---- parametric-IP analysis -------------------------------------------------

struct IpAnalysis {
  Rat phi;
  Rat phi0;
  Int n1;
  Int kappa_value;
  Int nstar;
  JMaxInfo jmax;
  QuasiLinearLaw law;
  IpSweep sweep;
};

IpAnalysis analyze_param_ip(const ParamIP& pip, long n_lo, long n_hi,
                            std::optional<Int> jmax_cap = std::nullopt);

nlohmann::json to_json(const IpAnalysis& a);
IpAnalysis ip_analysis_from_json(const nlohmann::json& j);
std::string ip_analysis_text(const IpAnalysis& a);
std::string ip_analysis_csv(const IpAnalysis& a);

// ---- ideal analysis ---------------------------------------------------------

struct IdealAnalysis {
  PowerVariant variant;
  MonomialIdeal ideal;
  std::vector<NewtonFacet> facets;    // closure variant
  std::vector<uint32_t> primes;       // symbolic variant
  StabilityReport stability;
};

IdealAnalysis analyze_ideal(const MonomialIdeal& ideal, PowerVariant variant,
                            long n_lo, long n_hi);

nlohmann::json to_json(const IdealAnalysis& a);
IdealAnalysis ideal_analysis_from_json(const nlohmann::json& j);
std::string ideal_analysis_text(const IdealAnalysis& a);
std::string ideal_analysis_csv(const IdealAnalysis& a);

// Runs the definition-route oracle over [n_lo, n_hi] and throws
// OracleMismatchError on the first difference from the program route.
void cross_check_oracle(const IdealPowers& powers, const StabilityReport& stability,
                        const std::optional<std::pair<Int, Int>>& box);

// Newton facet listing with the degree-bound check column.
std::string newton_text(const MonomialIdeal& ideal);

}  // namespace ql

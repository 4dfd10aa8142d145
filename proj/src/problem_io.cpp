#include "quasilin/problem_io.hpp"

#include <fstream>
#include <sstream>

namespace ql {

using nlohmann::json;

namespace {

Int json_int(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError(what + ": bad integer '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError(what + ": expected an integer");
}

Rat json_rat(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError(what + ": expected an integer or 'p/q' string");
}

IntVec json_int_vec(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  IntVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = json_int(j[i], what);
  return v;
}

IntMat json_int_mat(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a nonempty matrix");
  const size_t rows = j.size();
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(what + ": ragged matrix");
    for (size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          json_int(j[i][k], what);
  }
  return m;
}

json int_to_json(const Int& v) { return v.get_str(); }
json rat_to_json(const Rat& v) { return v.str(); }

json law_to_json(const QuasiLinearLaw& law) {
  json intercepts = json::array();
  for (const auto& b : law.intercepts)
    intercepts.push_back(b ? json(b->str()) : json(nullptr));
  return json{{"slope", law.slope.str()},
              {"period", law.period},
              {"onset", law.onset},
              {"intercepts", intercepts}};
}

QuasiLinearLaw law_from_json(const json& j) {
  QuasiLinearLaw law;
  law.slope = json_rat(j.at("slope"), "law.slope");
  law.period = j.at("period").get<long>();
  law.onset = j.at("onset").get<long>();
  for (const auto& b : j.at("intercepts")) {
    if (b.is_null())
      law.intercepts.emplace_back(std::nullopt);
    else
      law.intercepts.emplace_back(json_rat(b, "law.intercept"));
  }
  return law;
}

std::optional<Rat> law_residual(const QuasiLinearLaw& law, long n, const OptValue& v) {
  auto predicted = law.predict(n);
  if (!predicted || !v.is_finite()) return std::nullopt;
  return v.value() - *predicted;
}

}  // namespace

ProblemFile parse_problem(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("problem: missing 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  ProblemFile out;
  try {
    if (kind == "param_ip") {
      out.kind = ProblemFile::Kind::ParamIp;
      out.pip.emplace(json_int_mat(j.at("A"), "A"), json_int_vec(j.at("b"), "b"),
                      json_int_vec(j.at("c"), "c"), json_int_vec(j.at("d"), "d"));
    } else if (kind == "monomial_ideal" || kind == "square_free_ideal") {
      out.kind = kind == "monomial_ideal" ? ProblemFile::Kind::Monomial
                                          : ProblemFile::Kind::SquareFree;
      const int vars = static_cast<int>(json_int(j.at("vars"), "vars").get_si());
      std::vector<IntVec> gens;
      for (const auto& g : j.at("gens")) gens.push_back(json_int_vec(g, "gens"));
      out.ideal = MonomialIdeal::make(vars, std::move(gens));
      if (out.kind == ProblemFile::Kind::SquareFree)
        SquareFreeIdeal::make(*out.ideal);  // validates 0/1 exponents
    } else {
      throw ParseError("problem: unknown kind '" + kind + "'");
    }
    if (j.contains("options")) {
      const json& o = j.at("options");
      if (o.contains("range")) {
        if (!o.at("range").is_array() || o.at("range").size() != 2)
          throw ParseError("options.range: expected [lo, hi]");
        out.options.range = {o.at("range")[0].get<long>(), o.at("range")[1].get<long>()};
      }
      if (o.contains("jmax_cap")) out.options.jmax_cap = json_int(o.at("jmax_cap"), "jmax_cap");
      if (o.contains("box")) {
        if (!o.at("box").is_array() || o.at("box").size() != 2)
          throw ParseError("options.box: expected [lo, hi]");
        out.options.box = {json_int(o.at("box")[0], "box"), json_int(o.at("box")[1], "box")};
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("problem: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("problem: ") + e.what());
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

IpAnalysis analyze_param_ip(const ParamIP& pip, long n_lo, long n_hi,
                            std::optional<Int> jmax_cap) {
  IpAnalysis a;
  const LpLaw lp_law = lp_value_law(to_rat(pip.A), to_rat(pip.b), to_rat(pip.c),
                                    to_rat(pip.d));
  a.phi = lp_law.phi;
  a.phi0 = lp_law.phi0;
  a.n1 = lp_law.N1;
  a.kappa_value = kappa(pip);
  a.nstar = n_star(pip);
  a.jmax = jmax_and_delta(pip, std::move(jmax_cap));
  a.sweep = sweep(pip, n_lo, n_hi);
  a.law = detect_law(a.sweep, default_period_candidates(a.jmax.delta), 6, a.phi);
  return a;
}

json to_json(const IpAnalysis& a) {
  json members = json::array();
  for (long m : a.jmax.members) members.push_back(m);
  json table = json::array();
  for (long n = a.sweep.n_lo; n <= a.sweep.n_hi; ++n) {
    const OptValue& v = a.sweep.at(n);
    auto res = law_residual(a.law, n, v);
    table.push_back(json{{"n", n},
                         {"value", v.str()},
                         {"residual", res ? json(res->str()) : json(nullptr)}});
  }
  return json{{"kind", "ip_report"},
              {"phi", rat_to_json(a.phi)},
              {"phi0", rat_to_json(a.phi0)},
              {"N1", int_to_json(a.n1)},
              {"kappa", int_to_json(a.kappa_value)},
              {"n_star", int_to_json(a.nstar)},
              {"jmax",
               json{{"members", members},
                    {"cap", int_to_json(a.jmax.cap)},
                    {"delta", int_to_json(a.jmax.delta)},
                    {"frobenius_bound", int_to_json(a.jmax.frobenius_bound)}}},
              {"law", law_to_json(a.law)},
              {"table", table}};
}

IpAnalysis ip_analysis_from_json(const json& j) {
  if (j.at("kind") != "ip_report") throw ParseError("ip_report: wrong kind");
  IpAnalysis a;
  a.phi = json_rat(j.at("phi"), "phi");
  a.phi0 = json_rat(j.at("phi0"), "phi0");
  a.n1 = json_int(j.at("N1"), "N1");
  a.kappa_value = json_int(j.at("kappa"), "kappa");
  a.nstar = json_int(j.at("n_star"), "n_star");
  const json& jm = j.at("jmax");
  for (const auto& m : jm.at("members")) a.jmax.members.push_back(m.get<long>());
  a.jmax.cap = json_int(jm.at("cap"), "cap");
  a.jmax.delta = json_int(jm.at("delta"), "delta");
  a.jmax.frobenius_bound = json_int(jm.at("frobenius_bound"), "frobenius_bound");
  a.law = law_from_json(j.at("law"));
  const json& table = j.at("table");
  if (!table.empty()) {
    a.sweep.n_lo = table.front().at("n").get<long>();
    a.sweep.n_hi = table.back().at("n").get<long>();
    for (const auto& row : table) {
      const std::string v = row.at("value").get<std::string>();
      if (v == "-inf")
        a.sweep.values.push_back(OptValue::neg_infinity());
      else if (v == "+inf")
        a.sweep.values.push_back(OptValue::pos_infinity());
      else
        a.sweep.values.push_back(OptValue::finite(Rat::parse(v)));
    }
  }
  return a;
}

namespace {

std::string law_text(const QuasiLinearLaw& law) {
  std::ostringstream os;
  os << "slope = " << law.slope.str() << ", period = " << law.period
     << ", onset = " << law.onset << ", intercepts =";
  for (size_t i = 0; i < law.intercepts.size(); ++i) {
    os << " " << i << ":";
    os << (law.intercepts[i] ? law.intercepts[i]->str() : "undefined");
  }
  return os.str();
}

}  // namespace

std::string ip_analysis_text(const IpAnalysis& a) {
  std::ostringstream os;
  os << "phi = " << a.phi.str() << "\n";
  os << "phi0 = " << a.phi0.str() << "\n";
  os << "N1 = " << a.n1.get_str() << "\n";
  os << "kappa = " << a.kappa_value.get_str() << "\n";
  os << "N_star = " << a.nstar.get_str() << "\n";
  os << "jmax cap = " << a.jmax.cap.get_str() << "\n";
  os << "jmax members =";
  for (long m : a.jmax.members) os << " " << m;
  os << "\n";
  os << "delta = " << a.jmax.delta.get_str() << "\n";
  os << "frobenius bound = " << a.jmax.frobenius_bound.get_str() << "\n";
  os << "law: " << law_text(a.law) << "\n";
  os << "n\tM_n\tresidual\n";
  for (long n = a.sweep.n_lo; n <= a.sweep.n_hi; ++n) {
    const OptValue& v = a.sweep.at(n);
    auto res = law_residual(a.law, n, v);
    os << n << "\t" << v.str() << "\t" << (res ? res->str() : "-") << "\n";
  }
  return os.str();
}

std::string ip_analysis_csv(const IpAnalysis& a) {
  std::ostringstream os;
  os << "n,value,residual\n";
  for (long n = a.sweep.n_lo; n <= a.sweep.n_hi; ++n) {
    const OptValue& v = a.sweep.at(n);
    auto res = law_residual(a.law, n, v);
    os << n << "," << v.str() << "," << (res ? res->str() : "") << "\n";
  }
  return os.str();
}

IdealAnalysis analyze_ideal(const MonomialIdeal& ideal, PowerVariant variant,
                            long n_lo, long n_hi) {
  IdealAnalysis a;
  a.variant = variant;
  a.ideal = ideal;
  IdealPowers powers = variant == PowerVariant::Closure
                           ? IdealPowers::closure(ideal)
                           : IdealPowers::symbolic(ideal);
  if (variant == PowerVariant::Closure)
    a.facets = powers.np->facets;
  else
    a.primes = powers.sf->primes;
  a.stability = stability_report(powers, n_lo, n_hi);
  return a;
}

json to_json(const IdealAnalysis& a) {
  json out;
  out["kind"] = "ideal_report";
  out["variant"] = a.variant == PowerVariant::Closure ? "closure" : "symbolic";
  json gens = json::array();
  for (const IntVec& g : a.ideal.gens) {
    json row = json::array();
    for (Eigen::Index j = 0; j < g.size(); ++j) row.push_back(int_to_json(g(j)));
    gens.push_back(row);
  }
  out["vars"] = a.ideal.vars;
  out["gens"] = gens;
  out["d_I"] = int_to_json(a.ideal.dI);
  if (a.variant == PowerVariant::Closure) {
    json facets = json::array();
    for (const NewtonFacet& f : a.facets) {
      json coeffs = json::array();
      for (Eigen::Index j = 0; j < f.a.size(); ++j) coeffs.push_back(int_to_json(f.a(j)));
      facets.push_back(json{{"a", coeffs}, {"b", int_to_json(f.b)}});
    }
    out["facets"] = facets;
  } else {
    json primes = json::array();
    for (uint32_t p : a.primes) {
      json vars = json::array();
      for (int j = 0; j < a.ideal.vars; ++j)
        if (p & (1u << j)) vars.push_back(j + 1);
      primes.push_back(vars);
    }
    out["primes"] = primes;
  }
  json table = json::array();
  for (const CohomologyReport& row : a.stability.table) {
    json ai = json::array();
    for (const auto& v : row.a) ai.push_back(v ? json(v->get_str()) : json("-inf"));
    table.push_back(json{{"n", static_cast<long>(row.n.get_si())},
                         {"a", ai},
                         {"reg", int_to_json(row.reg)}});
  }
  out["table"] = table;
  json laws = json::array();
  for (const auto& law : a.stability.a_laws)
    laws.push_back(law ? law_to_json(*law) : json(nullptr));
  out["a_laws"] = laws;
  out["reg_law"] = law_to_json(a.stability.reg_law);
  out["reg_linear"] = a.stability.reg_linear
                          ? json{{"p", int_to_json(a.stability.reg_linear->first)},
                                 {"e", int_to_json(a.stability.reg_linear->second)}}
                          : json(nullptr);
  out["empirical_onset"] = a.stability.empirical_onset;
  out["bounds"] = json{{"n_dagger", int_to_json(a.stability.bounds.n_dagger)},
                       {"regst", int_to_json(a.stability.bounds.regst_bound)},
                       {"sym", int_to_json(a.stability.bounds.sym_bound)}};
  out["d_hat"] = int_to_json(a.stability.d_hat);
  return out;
}

IdealAnalysis ideal_analysis_from_json(const json& j) {
  if (j.at("kind") != "ideal_report") throw ParseError("ideal_report: wrong kind");
  IdealAnalysis a;
  a.variant = j.at("variant") == "closure" ? PowerVariant::Closure : PowerVariant::Symbolic;
  const int vars = j.at("vars").get<int>();
  std::vector<IntVec> gens;
  for (const auto& g : j.at("gens")) gens.push_back(json_int_vec(g, "gens"));
  a.ideal = MonomialIdeal::make(vars, std::move(gens));
  if (j.contains("facets"))
    for (const auto& f : j.at("facets")) {
      NewtonFacet nf;
      nf.a = json_int_vec(f.at("a"), "facet.a");
      nf.b = json_int(f.at("b"), "facet.b");
      for (Eigen::Index k = 0; k < nf.a.size(); ++k)
        if (nf.a(k) != 0) ++nf.support_size;
      a.facets.push_back(std::move(nf));
    }
  if (j.contains("primes"))
    for (const auto& p : j.at("primes")) {
      uint32_t mask = 0;
      for (const auto& v : p) mask |= (1u << (v.get<int>() - 1));
      a.primes.push_back(mask);
    }
  a.stability.variant = a.variant;
  for (const auto& row : j.at("table")) {
    CohomologyReport r;
    r.n = Int(row.at("n").get<long>());
    for (const auto& v : row.at("a")) {
      const std::string s = v.get<std::string>();
      if (s == "-inf")
        r.a.emplace_back(std::nullopt);
      else
        r.a.emplace_back(Int(s));
    }
    r.reg = json_int(row.at("reg"), "reg");
    a.stability.table.push_back(std::move(r));
  }
  if (!a.stability.table.empty()) {
    a.stability.n_lo = a.stability.table.front().n.get_si();
    a.stability.n_hi = a.stability.table.back().n.get_si();
  }
  for (const auto& law : j.at("a_laws"))
    a.stability.a_laws.push_back(law.is_null()
                                     ? std::optional<QuasiLinearLaw>()
                                     : std::optional<QuasiLinearLaw>(law_from_json(law)));
  a.stability.reg_law = law_from_json(j.at("reg_law"));
  if (!j.at("reg_linear").is_null())
    a.stability.reg_linear = std::make_pair(json_int(j.at("reg_linear").at("p"), "p"),
                                            json_int(j.at("reg_linear").at("e"), "e"));
  a.stability.empirical_onset = j.at("empirical_onset").get<long>();
  a.stability.bounds.n_dagger = json_int(j.at("bounds").at("n_dagger"), "n_dagger");
  a.stability.bounds.regst_bound = json_int(j.at("bounds").at("regst"), "regst");
  a.stability.bounds.sym_bound = json_int(j.at("bounds").at("sym"), "sym");
  a.stability.d_hat = json_int(j.at("d_hat"), "d_hat");
  return a;
}

std::string ideal_analysis_text(const IdealAnalysis& a) {
  std::ostringstream os;
  os << "variant = " << (a.variant == PowerVariant::Closure ? "closure" : "symbolic")
     << "\n";
  os << "d(I) = " << a.ideal.dI.get_str() << "\n";
  if (a.variant == PowerVariant::Closure) {
    os << "newton facets:\n";
    for (const NewtonFacet& f : a.facets) {
      bool first = true;
      for (Eigen::Index j = 0; j < f.a.size(); ++j) {
        if (f.a(j) == 0) continue;
        if (!first) os << " + ";
        if (f.a(j) != 1) os << f.a(j).get_str() << "*";
        os << "x" << (j + 1);
        first = false;
      }
      os << " >= " << f.b.get_str() << "\n";
    }
  } else {
    os << "minimal primes:\n";
    for (uint32_t p : a.primes) {
      os << "(";
      bool first = true;
      for (int j = 0; j < a.ideal.vars; ++j)
        if (p & (1u << j)) {
          if (!first) os << ", ";
          os << "x" << (j + 1);
          first = false;
        }
      os << ")\n";
    }
  }
  os << "n";
  for (size_t i = 0; i < a.stability.table.front().a.size(); ++i) os << "\ta_" << i;
  os << "\treg\n";
  for (const CohomologyReport& row : a.stability.table) {
    os << row.n.get_str();
    for (const auto& v : row.a) os << "\t" << (v ? v->get_str() : "-inf");
    os << "\t" << row.reg.get_str() << "\n";
  }
  for (size_t i = 0; i < a.stability.a_laws.size(); ++i) {
    os << "a_" << i << " law: ";
    if (a.stability.a_laws[i])
      os << law_text(*a.stability.a_laws[i]);
    else
      os << "-inf throughout";
    os << "\n";
  }
  os << "reg(R/J_n) law: " << law_text(a.stability.reg_law) << "\n";
  if (a.stability.reg_linear)
    os << "reg(J_n) = " << a.stability.reg_linear->first.get_str() << "*n + "
       << a.stability.reg_linear->second.get_str() << "\n";
  os << "empirical onset = " << a.stability.empirical_onset << "\n";
  os << "N_dagger = " << a.stability.bounds.n_dagger.get_str() << "\n";
  os << "regst bound = " << a.stability.bounds.regst_bound.get_str() << "\n";
  os << "symbolic bound = " << a.stability.bounds.sym_bound.get_str() << "\n";
  return os.str();
}

std::string ideal_analysis_csv(const IdealAnalysis& a) {
  std::ostringstream os;
  os << "n";
  for (size_t i = 0; i < a.stability.table.front().a.size(); ++i) os << ",a_" << i;
  os << ",reg,reg_residual\n";
  for (const CohomologyReport& row : a.stability.table) {
    os << row.n.get_str();
    for (const auto& v : row.a) os << "," << (v ? v->get_str() : "-inf");
    os << "," << row.reg.get_str();
    auto res = law_residual(a.stability.reg_law, row.n.get_si(),
                            OptValue::finite(Rat(row.reg)));
    os << "," << (res ? res->str() : "") << "\n";
  }
  return os.str();
}

void cross_check_oracle(const IdealPowers& powers, const StabilityReport& stability,
                        const std::optional<std::pair<Int, Int>>& box) {
  for (const CohomologyReport& row : stability.table) {
    IntVec lo, hi;
    if (box) {
      lo = IntVec::Constant(powers.vars(), box->first);
      hi = IntVec::Constant(powers.vars(), box->second);
    } else {
      std::tie(lo, hi) = default_oracle_box(powers, row.n);
    }
    OracleReport oracle = oracle_a_invariants(powers, row.n, lo, hi);
    for (size_t i = 0; i < row.a.size(); ++i) {
      const auto& got = row.a[i];
      const auto& want = oracle.report.a[i];
      if (got == want) continue;
      std::ostringstream detail;
      detail << "program route " << (got ? got->get_str() : "-inf")
             << ", definition route " << (want ? want->get_str() : "-inf");
      if (oracle.witnesses[i]) {
        detail << ", alpha = (";
        for (Eigen::Index j = 0; j < oracle.witnesses[i]->size(); ++j) {
          if (j) detail << ",";
          detail << (*oracle.witnesses[i])(j).get_str();
        }
        detail << ")";
      }
      throw OracleMismatchError(row.n.get_si(), static_cast<int>(i), detail.str());
    }
    if (row.reg != oracle.report.reg)
      throw OracleMismatchError(row.n.get_si(), -1,
                                "reg " + row.reg.get_str() + " vs " +
                                    oracle.report.reg.get_str());
  }
}

std::string newton_text(const MonomialIdeal& ideal) {
  NewtonPolyhedron np = newton_polyhedron(ideal);
  std::ostringstream os;
  os << "d(I) = " << ideal.dI.get_str() << "\n";
  os << "facets (" << np.facets.size() << "):\n";
  os << "a\tb\tsupport\tbound_check\n";
  for (const NewtonFacet& f : np.facets) {
    os << "(";
    for (Eigen::Index j = 0; j < f.a.size(); ++j) {
      if (j) os << ",";
      os << f.a(j).get_str();
    }
    // construction enforces the d(I)^t size bound; report it per facet
    os << ")\t" << f.b.get_str() << "\t" << f.support_size << "\tok\n";
  }
  return os.str();
}

}  // namespace ql

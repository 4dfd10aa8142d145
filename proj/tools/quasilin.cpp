#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "quasilin/problem_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitDetection = 3;
constexpr int kExitBudget = 4;
constexpr int kExitOracle = 5;

std::pair<long, long> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ql::ParseError("range: expected lo:hi");
  try {
    return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ql::ParseError("range: expected lo:hi");
  }
}

std::pair<ql::Int, ql::Int> parse_box(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ql::ParseError("box: expected lo:hi");
  return {ql::Int(s.substr(0, colon)), ql::Int(s.substr(colon + 1))};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ql::Error("cannot write '" + path + "'");
  out << content;
}

int run_ip_analyze(const std::string& path, const std::string& range_flag,
                   const std::string& jmax_cap_flag, const std::string& json_out,
                   const std::string& csv_out) {
  ql::ProblemFile problem = ql::load_problem(path);
  if (problem.kind != ql::ProblemFile::Kind::ParamIp)
    throw ql::ParseError("ip-analyze expects a param_ip problem");
  long lo = 1, hi = 40;
  if (problem.options.range) std::tie(lo, hi) = *problem.options.range;
  if (!range_flag.empty()) std::tie(lo, hi) = parse_range(range_flag);
  std::optional<ql::Int> cap = problem.options.jmax_cap;
  if (!jmax_cap_flag.empty()) cap = ql::Int(jmax_cap_flag);

  ql::IpAnalysis a = ql::analyze_param_ip(*problem.pip, lo, hi, cap);
  std::cout << ql::ip_analysis_text(a);
  if (!json_out.empty()) write_file(json_out, ql::to_json(a).dump(2) + "\n");
  if (!csv_out.empty()) write_file(csv_out, ql::ip_analysis_csv(a));
  return kExitOk;
}

int run_ideal_analyze(const std::string& path, const std::string& variant_flag,
                      const std::string& range_flag, bool oracle,
                      const std::string& box_flag, const std::string& json_out,
                      const std::string& csv_out) {
  ql::ProblemFile problem = ql::load_problem(path);
  if (problem.kind == ql::ProblemFile::Kind::ParamIp)
    throw ql::ParseError("ideal-analyze expects a monomial or square-free ideal");
  const ql::PowerVariant variant = variant_flag == "symbolic"
                                       ? ql::PowerVariant::Symbolic
                                       : ql::PowerVariant::Closure;
  if (variant == ql::PowerVariant::Symbolic) {
    try {
      ql::SquareFreeIdeal::make(*problem.ideal);
    } catch (const ql::DomainError& e) {
      throw ql::ParseError(e.what());
    }
  }
  long lo = 1, hi = 8;
  if (problem.options.range) std::tie(lo, hi) = *problem.options.range;
  if (!range_flag.empty()) std::tie(lo, hi) = parse_range(range_flag);

  ql::IdealAnalysis a = ql::analyze_ideal(*problem.ideal, variant, lo, hi);
  std::cout << ql::ideal_analysis_text(a);
  if (oracle) {
    std::optional<std::pair<ql::Int, ql::Int>> box = problem.options.box;
    if (!box_flag.empty()) box = parse_box(box_flag);
    ql::IdealPowers powers = variant == ql::PowerVariant::Closure
                                 ? ql::IdealPowers::closure(*problem.ideal)
                                 : ql::IdealPowers::symbolic(*problem.ideal);
    ql::cross_check_oracle(powers, a.stability, box);
    std::cout << "oracle: definition route agrees on the full table\n";
  }
  if (!json_out.empty()) write_file(json_out, ql::to_json(a).dump(2) + "\n");
  if (!csv_out.empty()) write_file(csv_out, ql::ideal_analysis_csv(a));
  return kExitOk;
}

int run_newton(const std::string& path) {
  ql::ProblemFile problem = ql::load_problem(path);
  if (problem.kind == ql::ProblemFile::Kind::ParamIp)
    throw ql::ParseError("newton expects a monomial ideal");
  std::cout << ql::newton_text(*problem.ideal);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact asymptotic analysis of parametric integer programs and "
               "regularity of monomial ideal powers"};
  app.require_subcommand(1);

  std::string path, range, jmax_cap, json_out, csv_out, variant = "closure", box;
  bool oracle = false;

  CLI::App* ip = app.add_subcommand("ip-analyze", "analyze a parametric integer program");
  ip->add_option("file", path)->required();
  ip->add_option("--range", range, "sweep range lo:hi");
  ip->add_option("--jmax-cap", jmax_cap, "override the member-enumeration cap");
  ip->add_option("--json", json_out, "write the JSON report here");
  ip->add_option("--csv", csv_out, "write the per-n CSV here");

  CLI::App* ideal = app.add_subcommand("ideal-analyze", "analyze powers of a monomial ideal");
  ideal->add_option("file", path)->required();
  ideal->add_option("--variant", variant, "closure|symbolic")
      ->check(CLI::IsMember({"closure", "symbolic"}));
  ideal->add_option("--range", range, "power range lo:hi");
  ideal->add_flag("--oracle", oracle, "cross-check against the definition route");
  ideal->add_option("--box", box, "oracle degree box lo:hi");
  ideal->add_option("--json", json_out, "write the JSON report here");
  ideal->add_option("--csv", csv_out, "write the per-n CSV here");

  CLI::App* newton = app.add_subcommand("newton", "print the Newton polyhedron facets");
  newton->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (ip->parsed()) return run_ip_analyze(path, range, jmax_cap, json_out, csv_out);
    if (ideal->parsed())
      return run_ideal_analyze(path, variant, range, oracle, box, json_out, csv_out);
    if (newton->parsed()) return run_newton(path);
  } catch (const ql::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ql::OracleMismatchError& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kExitOracle;
  } catch (const ql::DetectionError& e) {
    std::cerr << "detection failure: " << e.what() << "\n";
    for (const auto& [n, value] : e.residuals)
      std::cerr << "  n=" << n << " value=" << value << "\n";
    return kExitDetection;
  } catch (const ql::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ql::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

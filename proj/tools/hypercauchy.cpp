// hypercauchy: command-line front end.
//
//   hypercauchy inspect <algebra>
//   hypercauchy cr-solve <conditions>
//   hypercauchy reproduce <conditions> --function z3+2z --point 0.3,0.1
//   hypercauchy suite <gallery|dim3|dim2sweep|m2r|exotic|commutative>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypercauchy/gallery.hpp"
#include "hypercauchy/io.hpp"
#include "hypercauchy/suites.hpp"
#include "hypercauchy/verify.hpp"

using namespace hypercauchy;
using io::json;

namespace {

struct RunConfig {
  std::string format = "json";
  std::string out;
  double tol = 1e-9;
  int nodes = 64;
  int radial_nodes = 0;
  std::uint64_t seed = 1;
};

enum Exit { kOk = 0, kError = 1, kInfeasible = 2 };

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
  std::string body = cfg.format == "json" ? report.dump(2) + "\n" : text;
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot write '" + cfg.out + "'");
  f << body;
}

void warn(const std::string& w) {
  if (!w.empty()) std::cerr << "warning: " << w << "\n";
}

std::string elem_text(const AlgElem& a) {
  std::ostringstream os;
  os << "(";
  for (int s = 0; s < a.dim(); ++s) os << (s ? ", " : "") << a[s];
  os << ")";
  return os.str();
}

std::vector<double> parse_vector(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw Error("bad number '" + tok + "' in '" + s + "'");
    }
  }
  return v;
}

int cmd_inspect(const RunConfig& cfg, const std::string& spec) {
  std::string w;
  AlgebraTable T = io::resolve_algebra(spec, {}, &w);
  warn(w);
  if (T.name().empty()) T.set_name(spec);
  json rep = io::inspect_to_json(T);
  std::ostringstream os;
  os << "algebra      " << T.name() << "\n"
     << "dim          " << T.dim() << "\n"
     << "unital       " << (T.unital() ? "yes" : "no") << "\n"
     << "associative  " << (T.associative() ? "yes" : "no") << " (max violation " << T.associativity_violation()
     << ")\n"
     << "commutative  " << (T.commutative() ? "yes" : "no") << "\n"
     << "sum e_m^2    " << elem_text(sum_of_basis_squares(T)) << "\n";
  emit(cfg, rep, os.str());
  return kOk;
}

int cmd_cr_solve(const RunConfig& cfg, const std::string& spec) {
  std::string w;
  CRConditionSet C = io::resolve_conditions(spec, &w);
  warn(w);
  AdmissibilityOptions opt;
  opt.tol = cfg.tol;
  AdmissibilityReport R = solve_admissibility(C, opt);
  std::ostringstream os;
  os << C.label << ": " << (R.feasible ? "feasible" : "infeasible") << ", residual " << R.residual << ", free_dim "
     << R.free_dim << "\n";
  if (R.kernel)
    for (int m = 0; m < C.q; ++m)
      for (int j = 0; j < C.n; ++j) os << "  b[" << m << "][" << j << "] = " << elem_text(R.kernel->coeff(m, j)) << "\n";
  emit(cfg, io::admissibility_to_json(C, R), os.str());
  return R.feasible ? kOk : kInfeasible;
}

AlgFunction load_function(const std::string& name, const std::string& poly_file, const CRConditionSet& C) {
  if (!poly_file.empty()) {
    json j = io::read_json_file(poly_file);
    const int degree = j.value("degree", 0);
    AlgPolynomial p(C.n, degree, C.dim());
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("polynomial file needs 'terms'", 0, 0);
    for (const auto& t : j["terms"]) {
      Exponent e = t.at("exponent").get<Exponent>();
      if (static_cast<int>(e.size()) != C.n) throw ParseError("exponent length must equal n", 0, 0);
      p.coeff(e) += io::elem_from_json(t.at("value"), C.dim(), "term value");
    }
    return AlgFunction::polynomial(std::move(p));
  }
  return gallery::function_by_name(name, C.n, C.dim());
}

struct ReproduceArgs {
  std::string conditions;
  std::string function = "one";
  std::string poly_file;
  std::string point;
  std::string center;
  double radius = 1.0;
  std::string scheme = "product_gauss";
  bool volume = false;
  int derivative = -1;
};

int cmd_reproduce(const RunConfig& cfg, const ReproduceArgs& a) {
  std::string w;
  CRConditionSet C = io::resolve_conditions(a.conditions, &w);
  warn(w);
  AdmissibilityOptions opt;
  opt.tol = cfg.tol;
  AdmissibilityReport R = solve_admissibility(C, opt);
  if (!R.feasible) {
    std::cerr << "error: condition set '" << C.label << "' admits no kernel (residual " << R.residual << ")\n";
    return kInfeasible;
  }
  CauchyKernel K(C, *R.kernel);
  AlgFunction f = load_function(a.function, a.poly_file, C);
  Point x = a.point.empty() ? Point(C.n, 0.0) : parse_vector(a.point);
  Point c = a.center.empty() ? Point(C.n, 0.0) : parse_vector(a.center);
  if (static_cast<int>(x.size()) != C.n || static_cast<int>(c.size()) != C.n)
    throw DimensionMismatch("point and center need " + std::to_string(C.n) + " coordinates");
  BallDomain D(c, a.radius);
  QuadratureSpec Q;
  Q.nodes = cfg.nodes;
  Q.radial_nodes = cfg.radial_nodes;
  Q.seed = cfg.seed;
  if (a.scheme == "monte_carlo")
    Q.scheme = Scheme::monte_carlo;
  else if (a.scheme != "product_gauss")
    throw Error("unknown quadrature scheme '" + a.scheme + "'");

  if (a.derivative >= 0) {
    DerivativeReport dr = derivative_via_kernel(f, x, a.derivative, D, K, Q);
    std::ostringstream os;
    os << "d/dx_" << a.derivative << " f(x): computed " << elem_text(dr.value) << ", expected "
       << elem_text(dr.expected) << ", rel_error " << dr.rel_error << "\n"
       << "Cauchy estimate: M = " << dr.kernel_constant << ", bound " << dr.bound << ", "
       << (dr.estimate_holds ? "holds" : "violated") << "\n";
    emit(cfg, io::derivative_to_json(dr), os.str());
    return kOk;
  }
  ReproductionReport rr = a.volume ? verify_representation(f, x, D, K, Q) : boundary_reproduce(f, x, D, K, Q);
  std::ostringstream os;
  os << "computed " << elem_text(rr.computed) << "\nexpected " << elem_text(rr.expected) << "\nrel_error "
     << rr.rel_error << " (" << rr.nodes << " nodes, estimate " << rr.error_estimate << ")\n";
  emit(cfg, io::reproduction_to_json(rr), os.str());
  return kOk;
}

int cmd_suite(const RunConfig& cfg, const std::string& name, bool nodes_given, bool seed_given) {
  suites::Options opt;
  opt.tol = cfg.tol;
  if (seed_given) opt.seed = cfg.seed;
  if (nodes_given) opt.nodes = cfg.nodes;
  suites::Result r = suites::run(name, opt);
  json cases = json::array();
  std::ostringstream os;
  for (const auto& c : r.cases) {
    cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  os << "suite " << name << ": " << (r.cases.size() - r.failures()) << "/" << r.cases.size() << " passed\n";
  json rep = {{"schema", io::kReportSchema}, {"command", "suite"}, {"suite", name},
              {"pass", r.pass()},            {"failures", r.failures()}, {"cases", cases}};
  emit(cfg, rep, os.str());
  return r.pass() ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy formulas for algebras given by structure constants"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "feasibility tolerance on the normalized residual")
      ->check(CLI::PositiveNumber);
  auto* nodes_opt = app.add_option("--nodes", cfg.nodes, "quadrature nodes per angle (monte carlo: total)")
                        ->check(CLI::Range(8, 1 << 24));
  app.add_option("--radial-nodes", cfg.radial_nodes, "radial nodes for the volume term");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));

  std::string inspect_spec;
  auto* inspect = app.add_subcommand("inspect", "structure of an algebra (builtin name or JSON file)");
  inspect->add_option("algebra", inspect_spec)->required();

  std::string solve_spec;
  auto* solve = app.add_subcommand("cr-solve", "decide whether a condition set admits a Cauchy kernel");
  solve->add_option("conditions", solve_spec, "gallery name or JSON file")->required();

  ReproduceArgs ra;
  auto* repro = app.add_subcommand("reproduce", "check the Cauchy formula by quadrature on a ball");
  repro->add_option("conditions", ra.conditions, "gallery name or JSON file")->required();
  repro->add_option("--function", ra.function, "gallery function")
      ->check(CLI::IsMember(gallery::function_names()));
  repro->add_option("--poly", ra.poly_file, "polynomial coefficient file");
  repro->add_option("--point", ra.point, "evaluation point, comma separated");
  repro->add_option("--center", ra.center, "ball center, comma separated");
  repro->add_option("--radius", ra.radius, "ball radius")->check(CLI::PositiveNumber);
  repro->add_option("--scheme", ra.scheme, "product_gauss or monte_carlo")
      ->check(CLI::IsMember({"product_gauss", "monte_carlo"}));
  repro->add_flag("--volume", ra.volume, "include the volume term (representation formula)");
  repro->add_option("--derivative", ra.derivative, "differentiate along this variable instead");

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run a verification battery");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suites::names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*inspect) return cmd_inspect(cfg, inspect_spec);
    if (*solve) return cmd_cr_solve(cfg, solve_spec);
    if (*repro) return cmd_reproduce(cfg, ra);
    if (*suite) return cmd_suite(cfg, suite_name, nodes_opt->count() > 0, seed_opt->count() > 0);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

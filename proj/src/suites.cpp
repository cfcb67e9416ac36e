#include "hypercauchy/suites.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "hypercauchy/gallery.hpp"
#include "hypercauchy/kernel.hpp"
#include "hypercauchy/solutions.hpp"
#include "hypercauchy/verify.hpp"

namespace hypercauchy::suites {

bool Result::pass() const { return failures() == 0 && !cases.empty(); }

int Result::failures() const {
  int f = 0;
  for (const auto& c : cases) f += c.pass ? 0 : 1;
  return f;
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double worst_closedness(const CauchyKernel& K, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  const int n = K.n();
  Point x(n), y(n);
  for (int p = 0; p < pairs; ++p) {
    double d2 = 0.0;
    do {
      d2 = 0.0;
      for (int i = 0; i < n; ++i) {
        x[i] = u(rng);
        y[i] = u(rng);
        d2 += (x[i] - y[i]) * (x[i] - y[i]);
      }
    } while (d2 < 1e-6);
    worst = std::max(worst, K.closedness_residual(x, y));
  }
  return worst;
}

AdmissibilityOptions solver_options(const Options& opt) {
  AdmissibilityOptions o;
  o.tol = opt.tol;
  return o;
}

Result gallery_suite(const Options& opt) {
  Result r{"gallery", {}};
  const std::vector<std::pair<std::string, bool>> expected = {
      {"dbar", true},           {"fueter", true},           {"dbar-induced2", true},   {"fueter-induced2", true},
      {"complex-adiff", true},  {"tessarine-adiff", true},  {"splitcomplex-adiff", false},
      {"clifford23-adiff", true}, {"octonion-single", true}, {"sedenion-single", true},
      {"tessarine-single", false}, {"m2r-q1", false},       {"m2r-q3", true}};
  for (const auto& [name, want] : expected) {
    CRConditionSet C = gallery::by_name(name);
    AdmissibilityReport rep = solve_admissibility(C, solver_options(opt));
    Case c{name, rep.feasible == want,
           std::string(rep.feasible ? "feasible" : "infeasible") + fmt(", residual %.3g", rep.residual)};
    if (rep.feasible) {
      EllipticityReport e = check_ellipticity(C, *rep.kernel);
      CauchyKernel K(C, *rep.kernel);
      const double w = worst_closedness(K, 100, opt.seed);
      c.pass = c.pass && e.holds && w <= 1e-12;
      c.detail += fmt(", closedness %.3g", w) + (e.holds ? ", elliptic" : ", NOT elliptic");
    }
    if (C.algebra.commutative()) {
      try {
        ConditionAReport A = commutative_condition_A(C);
        c.pass = c.pass && A.holds == rep.feasible;
        c.detail += std::string(", conditions (A) ") + (A.holds ? "hold" : "fail");
      } catch (const SingularPrincipalMinor&) {
        c.detail += ", no invertible principal minor";
      }
    }
    r.cases.push_back(std::move(c));
  }
  return r;
}

Result dim3_suite(const Options& opt) {
  Result r{"dim3", {}};
  for (const auto& s : gallery::dim3_samples(100, opt.seed)) {
    const double assoc = s.conditions.algebra.associativity_violation();
    AdmissibilityReport rep = solve_admissibility(s.conditions, solver_options(opt));
    const bool ok = !rep.feasible && rep.residual > 1e-2 && assoc <= 1e-10 && s.conditions.algebra.unital();
    r.cases.push_back({s.conditions.label, ok,
                       fmt("residual %.3g", rep.residual) + fmt(", associativity defect %.2g", assoc)});
  }
  return r;
}

Result dim2_sweep_suite(const Options& opt) {
  Result r{"dim2sweep", {}};
  std::mt19937_64 rng(opt.seed);
  for (int ia = 0; ia <= 24; ++ia)
    for (int ib = 0; ib <= 24; ++ib) {
      const double a = -3.0 + 0.25 * ia, b = -3.0 + 0.25 * ib;
      const double disc = b * b + 4.0 * a;
      if (std::abs(disc) < 0.05) continue;
      const bool want = disc < 0.0;
      AdmissibilityReport rep = solve_admissibility(gallery::dim2_candidate(a, b), solver_options(opt));
      bool ok = rep.feasible == want;
      std::string detail = fmt("b^2+4a = %.3g", disc) + fmt(", candidate residual %.3g", rep.residual);
      if (!want) {
        // No invertible choice may succeed when b^2 + 4a > 0.
        AlgebraTable T = dim2_algebra(a, b);
        for (int t = 0; t < 3; ++t) {
          CRConditionSet C(T, 2, 1);
          C.coeff(0, 0) = gallery::random_invertible(T, rng);
          C.coeff(0, 1) = gallery::random_invertible(T, rng);
          AdmissibilityReport rr = solve_admissibility(C, solver_options(opt));
          ok = ok && !rr.feasible;
        }
      }
      char name[64];
      std::snprintf(name, sizeof name, "dim2(%g,%g)", a, b);
      r.cases.push_back({name, ok, detail});
    }
  return r;
}

Result m2r_suite(const Options& opt) {
  Result r{"m2r", {}};
  {
    CRConditionSet C = gallery::m2r_first(opt.seed);
    AdmissibilityReport rep = solve_admissibility(C, solver_options(opt));
    r.cases.push_back({"q=1 first hypothesis infeasible", !rep.feasible, fmt("residual %.3g", rep.residual)});
  }
  CRConditionSet C = gallery::m2r_principal(opt.seed);
  AdmissibilityReport rep = solve_admissibility(C, solver_options(opt));
  r.cases.push_back({"q=3 principal block feasible", rep.feasible, fmt("residual %.3g", rep.residual)});
  if (!rep.feasible) return r;
  CauchyKernel K(C, *rep.kernel);
  const double w = worst_closedness(K, 100, opt.seed);
  r.cases.push_back({"q=3 closedness", w <= 1e-12, fmt("worst %.3g", w)});

  PolySolutionBasis basis = polynomial_solution_basis(C, 1);
  // Pick a basis element with a non-constant part.
  const AlgPolynomial* f = nullptr;
  for (const auto& p : basis.basis) {
    double linear = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) linear += p.coeff(k).norm();
    if (linear > 1e-6) {
      f = &p;
      break;
    }
  }
  if (!f) {
    r.cases.push_back({"q=3 degree-1 solution", false, "no non-constant solution"});
    return r;
  }
  QuadratureSpec Q;
  Q.nodes = std::max(opt.nodes, 8);
  const Point x = {0.1, -0.2, 0.15, 0.05};
  ReproductionReport rr = boundary_reproduce(AlgFunction::polynomial(*f), x, BallDomain::unit(4), K, Q);
  r.cases.push_back({"q=3 reproduction", rr.rel_error < 1e-4, fmt("rel_error %.3g", rr.rel_error)});
  return r;
}

Result exotic_suite(const Options& opt) {
  Result r{"exotic", {}};
  for (auto make : {gallery::octonion_single, gallery::sedenion_single}) {
    CRConditionSet C = make();
    AdmissibilityReport rep = solve_admissibility(C, solver_options(opt));
    r.cases.push_back({C.label, rep.feasible,
                       fmt("residual %.3g", rep.residual) +
                           fmt(", associativity defect %.3g", C.algebra.associativity_violation())});
  }
  bool threw = false;
  try {
    anticommuting_single_condition(builtin(Builtin::tessarine));
  } catch (const BasisNotAnticommuting&) {
    threw = true;
  }
  r.cases.push_back({"tessarine basis rejected", threw, threw ? "BasisNotAnticommuting" : "accepted"});
  AdmissibilityReport rep = solve_admissibility(gallery::tessarine_single(), solver_options(opt));
  r.cases.push_back({"tessarine-single infeasible", !rep.feasible, fmt("residual %.3g", rep.residual)});
  return r;
}

Result commutative_suite(const Options& opt) {
  Result r{"commutative", {}};
  for (const auto& cc : gallery::commutative_algebras()) {
    CRConditionSet C = a_differentiable_conditions(cc.algebra);
    AdmissibilityReport rep = solve_admissibility(C, solver_options(opt));
    const bool zero = sum_of_basis_squares(cc.algebra).is_zero(1e-12);
    ConditionAReport A = commutative_condition_A(C);
    const bool ok = rep.feasible == zero && A.holds == rep.feasible;
    r.cases.push_back({cc.label, ok,
                       std::string(rep.feasible ? "feasible" : "infeasible") + (zero ? ", sum e^2 = 0" : ", sum e^2 != 0") +
                           (A.holds ? ", (A) hold" : ", (A) fail")});
  }
  CRConditionSet C = a_differentiable_conditions(clifford_algebra(2, 3));
  AdmissibilityReport rep = solve_admissibility(C, solver_options(opt));
  r.cases.push_back({"clifford(2,3) A-differentiable", rep.feasible, fmt("residual %.3g", rep.residual)});
  return r;
}

}  // namespace

std::vector<std::string> names() { return {"gallery", "dim3", "dim2sweep", "m2r", "exotic", "commutative"}; }

Result run(const std::string& name, const Options& opt) {
  if (name == "gallery") return gallery_suite(opt);
  if (name == "dim3") return dim3_suite(opt);
  if (name == "dim2sweep") return dim2_sweep_suite(opt);
  if (name == "m2r") return m2r_suite(opt);
  if (name == "exotic") return exotic_suite(opt);
  if (name == "commutative") return commutative_suite(opt);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace hypercauchy::suites

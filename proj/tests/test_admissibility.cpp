#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hypercauchy/admissibility.hpp"
#include "hypercauchy/gallery.hpp"

using namespace hypercauchy;
using std::numbers::pi;

namespace {

double max_diff(const AlgElem& a, const AlgElem& b) { return (a - b).coeffs().lpNorm<Eigen::Infinity>(); }

}  // namespace

TEST_CASE("system shape") {
  LinearSystem s = assemble_system(gallery::dbar());
  CHECK(s.A.rows() == 6);
  CHECK(s.A.cols() == 4);
  LinearSystem f = assemble_system(gallery::fueter());
  CHECK(f.A.rows() == 40);
  CHECK(f.A.cols() == 16);
}

TEST_CASE("one variable, one condition") {
  CRConditionSet C(builtin(Builtin::reals), 1, 1);
  C.coeff(0, 0) = AlgElem{1.0};
  AdmissibilityReport r = solve_admissibility(C);
  REQUIRE(r.feasible);
  // kappa = 1 / (1 * Vol(B_1)) = 1/2
  CHECK(r.kernel->coeff(0, 0)[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("dbar kernel") {
  // Hand solution: b^1 = kappa e0, i b^2 = kappa e0, kappa = 1/(2 pi).
  const double kappa = 1.0 / (2.0 * pi);
  AdmissibilityReport r = solve_admissibility(gallery::dbar());
  REQUIRE(r.feasible);
  CHECK(r.free_dim == 0);
  CHECK(max_diff(r.kernel->coeff(0, 0), AlgElem{kappa, 0}) < 1e-12);
  CHECK(max_diff(r.kernel->coeff(0, 1), AlgElem{0, -kappa}) < 1e-12);
  // c^i_i = e0 / n, antisymmetric off the diagonal.
  const KernelSolution& K = *r.kernel;
  CHECK(max_diff(K.aux(0, 0), AlgElem{0.5, 0}) < 1e-12);
  CHECK(max_diff(K.aux(1, 1), AlgElem{0.5, 0}) < 1e-12);
  CHECK((K.aux(0, 1) + K.aux(1, 0)).norm() < 1e-12);
}

TEST_CASE("Fueter kernel") {
  const double alpha = 1.0 / (2.0 * pi * pi);
  AdmissibilityReport r = solve_admissibility(gallery::fueter());
  REQUIRE(r.feasible);
  const AlgElem e0 = AlgElem::unit(4);
  CHECK(max_diff(r.kernel->coeff(0, 0), alpha * e0) < 1e-12);
  for (int l = 1; l < 4; ++l) CHECK(max_diff(r.kernel->coeff(0, l), -alpha * AlgElem::basis(4, l)) < 1e-12);
}

TEST_CASE("feasibility is invariant under permuting conditions and variables") {
  CRConditionSet C = gallery::m2r_principal();
  CRConditionSet P = C;
  // Swap conditions 0 and 2.
  for (int j = 0; j < C.n; ++j) std::swap(P.coeff(0, j), P.coeff(2, j));
  AdmissibilityReport a = solve_admissibility(C), b = solve_admissibility(P);
  CHECK(a.feasible == b.feasible);
  CHECK(a.feasible);
  // Relabel variables 1 <-> 3 on an infeasible set.
  CRConditionSet Q = gallery::m2r_first();
  CRConditionSet R = Q;
  std::swap(R.coeff(0, 1), R.coeff(0, 3));
  CHECK(solve_admissibility(Q).feasible == solve_admissibility(R).feasible);
  CHECK(solve_admissibility(Q).residual == doctest::Approx(solve_admissibility(R).residual).epsilon(1e-9));
}

TEST_CASE("dimension three: infeasible for invertible coefficients") {
  for (const auto& s : gallery::dim3_samples(20, 77)) {
    CHECK(s.conditions.algebra.associativity_violation() < 1e-10);
    AdmissibilityReport r = solve_admissibility(s.conditions);
    CHECK_FALSE(r.feasible);
    CHECK(r.residual > 1e-2);
  }
}

TEST_CASE("noncommutative dimension-3 family is associative but not commutative") {
  AlgebraTable T = gallery::noncommutative_dim3(0.3, -1.1, 0.7, 2.0);
  CHECK(T.associativity_violation() < 1e-14);
  CHECK_FALSE(T.commutative());
  CHECK(gallery::cubic_algebra(1.0, -2.0, 0.5).commutative());
}

TEST_CASE("A-differentiable conditions") {
  CRConditionSet C = a_differentiable_conditions(builtin(Builtin::complex));
  CHECK(C.q == 1);
  CHECK(C.n == 2);
  CHECK(max_diff(C.coeff(0, 0), AlgElem{0, -1}) == 0.0);
  CHECK(max_diff(C.coeff(0, 1), AlgElem{1, 0}) == 0.0);
  CHECK(solve_admissibility(C).feasible);
  CHECK(solve_admissibility(a_differentiable_conditions(builtin(Builtin::tessarine))).feasible);
  CHECK_FALSE(solve_admissibility(a_differentiable_conditions(dim2_algebra(1, 0))).feasible);
}

TEST_CASE("induced conditions") {
  CRConditionSet F = gallery::fueter();
  CRConditionSet F2 = induced_conditions(F, 2);
  CHECK(F2.n == 8);
  CHECK(F2.q == 2);
  AdmissibilityReport r = solve_admissibility(F2);
  REQUIRE(r.feasible);
  // alpha_2 = 1 / (8 Vol(B_8)), Vol(B_8) = pi^4 / 24.
  const double alpha2 = 1.0 / (8.0 * std::pow(pi, 4) / 24.0);
  for (int l = 0; l < 2; ++l)
    for (int j = 0; j < 8; ++j) {
      const AlgElem& b = r.kernel->coeff(l, j);
      if (j / 4 != l) {
        CHECK(b.norm() < 1e-12);
      } else {
        const int s = j % 4;
        AlgElem want = (s == 0 ? alpha2 : -alpha2) * AlgElem::basis(4, s);
        CHECK(max_diff(b, want) < 1e-12);
      }
    }
  KernelSolution K = induced_kernel(F, *solve_admissibility(F).kernel, 2);
  CHECK(K.residual < 1e-14);
  for (std::size_t k = 0; k < K.b.size(); ++k) CHECK(max_diff(K.b[k], r.kernel->b[k]) < 1e-12);

  CRConditionSet D1 = induced_conditions(gallery::dbar(), 1);
  CHECK(D1.a.size() == gallery::dbar().a.size());

  // dbar on C^2: Bochner-Martinelli type coefficients.
  CRConditionSet D2 = induced_conditions(gallery::dbar(), 2);
  AdmissibilityReport d = solve_admissibility(D2);
  REQUIRE(d.feasible);
  const double kappa4 = 1.0 / (4.0 * pi * pi / 2.0);
  CHECK(max_diff(d.kernel->coeff(0, 0), AlgElem{kappa4, 0}) < 1e-12);
  CHECK(max_diff(d.kernel->coeff(0, 1), AlgElem{0, -kappa4}) < 1e-12);
  CHECK(max_diff(d.kernel->coeff(1, 2), AlgElem{kappa4, 0}) < 1e-12);
  CHECK(max_diff(d.kernel->coeff(1, 3), AlgElem{0, -kappa4}) < 1e-12);
}

TEST_CASE("ellipticity follows from feasibility") {
  for (const auto& name : gallery::names()) {
    CRConditionSet C = gallery::by_name(name);
    AdmissibilityReport r = solve_admissibility(C);
    if (!r.feasible) continue;
    EllipticityReport e = check_ellipticity(C, *r.kernel);
    CHECK_MESSAGE(e.holds, name);
    CHECK(e.min_symbol > 0.0);
  }
  // Corrupted b breaks the identity.
  CRConditionSet C = gallery::dbar();
  KernelSolution K = *solve_admissibility(C).kernel;
  K.coeff(0, 1)[0] += 0.1;
  CHECK_FALSE(check_ellipticity(C, K).holds);
}

TEST_CASE("ellipticity: dbar symbol is |X|^2") {
  CRConditionSet C = gallery::dbar();
  EllipticityReport e = check_ellipticity(C, *solve_admissibility(C).kernel, 500);
  // |X_1 e0 + X_2 i|^2 = 1 on the unit circle.
  CHECK(e.min_symbol == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditions (A)") {
  SUBCASE("dbar, q = n - 1") {
    ConditionAReport A = commutative_condition_A(gallery::dbar());
    CHECK(A.holds);
    CHECK(max_diff(A.D0, AlgElem{1, 0}) == 0.0);
    CHECK(max_diff(A.D[0], AlgElem{0, 1}) == 0.0);
    CHECK(A.b_residual < 1e-14);
    const double kappa = 1.0 / (2.0 * pi);
    CHECK(max_diff(A.b[1], AlgElem{0, -kappa}) < 1e-14);
  }
  SUBCASE("tessarine A-differentiable") {
    CRConditionSet C = a_differentiable_conditions(builtin(Builtin::tessarine));
    ConditionAReport A = commutative_condition_A(C, {1, 2, 3});
    CHECK(A.holds);
    CHECK(A.principal_rows == std::vector<int>{1, 2, 3});
    // D^1 = (-e1, e2, -e3) by Laplace expansion by hand.
    CHECK(max_diff(A.D[0], -AlgElem::basis(4, 1)) == 0.0);
    CHECK(max_diff(A.D[1], AlgElem::basis(4, 2)) == 0.0);
    CHECK(max_diff(A.D[2], -AlgElem::basis(4, 3)) == 0.0);
    CHECK(A.b_residual < 1e-14);
    CHECK(solve_admissibility(C).feasible);
    CHECK(commutative_condition_A(C).holds);
  }
  SUBCASE("split-complex fails") {
    ConditionAReport A = commutative_condition_A(a_differentiable_conditions(dim2_algebra(1, 0)));
    CHECK_FALSE(A.holds);
    CHECK(A.b_residual > 1e-3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(commutative_condition_A(gallery::fueter()), NotCommutative);
    CRConditionSet C(builtin(Builtin::tessarine), 2, 1);
    C.coeff(0, 0) = AlgElem{1, 0, 1, 0};  // (1 + j)(1 - j) = 0
    C.coeff(0, 1) = AlgElem{1, 0, -1, 0};
    CHECK_THROWS_AS(commutative_condition_A(C), SingularPrincipalMinor);
  }
}

TEST_CASE("algebra determinant over the complex numbers") {
  AlgebraTable C = builtin(Builtin::complex);
  // [[1, i], [i, 2]] has determinant 2 - i^2 = 3.
  std::vector<AlgElem> M = {AlgElem{1, 0}, AlgElem{0, 1}, AlgElem{0, 1}, AlgElem{2, 0}};
  CHECK(max_diff(algebra_determinant(M, 2, C), AlgElem{3, 0}) < 1e-15);
}

TEST_CASE("anticommuting single condition") {
  CHECK(solve_admissibility(anticommuting_single_condition(builtin(Builtin::octonion))).feasible);
  CHECK(solve_admissibility(anticommuting_single_condition(builtin(Builtin::sedenion))).feasible);
  CHECK_THROWS_AS(anticommuting_single_condition(builtin(Builtin::tessarine)), BasisNotAnticommuting);
  CHECK_FALSE(solve_admissibility(gallery::tessarine_single()).feasible);
}

TEST_CASE("M2(R)") {
  CHECK_FALSE(solve_admissibility(gallery::m2r_first()).feasible);
  AdmissibilityReport r = solve_admissibility(gallery::m2r_principal());
  CHECK(r.feasible);
  CHECK(r.free_dim > 0);
}

TEST_CASE("ambiguous residual raises IllConditioned") {
  CRConditionSet C = gallery::dbar();
  C.coeff(0, 1) = AlgElem{1e-7, 1.0};
  CHECK_THROWS_AS(solve_admissibility(C), IllConditioned);
  try {
    solve_admissibility(C);
  } catch (const IllConditioned& e) {
    CHECK(e.residual() > 1e-9);
    CHECK(e.residual() < 1e-6);
  }
}

TEST_CASE("dimension two: candidate feasible iff b^2 + 4a < 0") {
  CHECK(solve_admissibility(gallery::dim2_candidate(-1.0, 0.5)).feasible);
  CHECK_FALSE(solve_admissibility(gallery::dim2_candidate(1.0, 0.5)).feasible);
  CHECK(solve_admissibility(gallery::dim2_candidate(-2.0, 2.5)).feasible);
  CHECK_FALSE(solve_admissibility(gallery::dim2_candidate(-1.0, 2.5)).feasible);
}

TEST_CASE("invalid condition sets") {
  CRConditionSet C = gallery::dbar();
  C.a[1] = AlgElem(3);
  CHECK_THROWS_AS(solve_admissibility(C), DimensionMismatch);
  CHECK_THROWS_AS(CRConditionSet(builtin(Builtin::complex), 0, 1), InvalidConditions);
}

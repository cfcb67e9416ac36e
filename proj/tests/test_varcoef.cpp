#include <doctest.h>

#include <numbers>
#include <random>

#include "hypercauchy/gallery.hpp"
#include "hypercauchy/varcoef.hpp"

using namespace hypercauchy;
using std::numbers::pi;

namespace {

// Coefficients (e0, i g(x)) over the complex numbers with g = 1 + x_0^2.
VarCRConditionSet stretched_dbar() {
  VarCRConditionSet V;
  V.algebra = builtin(Builtin::complex);
  V.n = 2;
  V.q = 1;
  V.a_fn = [](std::span<const double> x) {
    return std::vector<AlgElem>{AlgElem{1.0, 0.0}, AlgElem{0.0, 1.0 + x[0] * x[0]}};
  };
  return V;
}

AffineCoefficients affine_example() {
  AffineCoefficients A;
  A.base_point = {0.0, 0.0};
  A.base = {AlgElem{1.0, 0.0}, AlgElem{0.0, 1.0}};
  // d^{0,0} = d^{1,1} = e1, d^{0,1} = -d^{1,0} = e0
  A.slope = {AlgElem{0.0, 1.0}, AlgElem{1.0, 0.0}, AlgElem{-1.0, 0.0}, AlgElem{0.0, 1.0}};
  return A;
}

}  // namespace

TEST_CASE("constant coefficients match the constant solve") {
  for (const char* name : {"dbar", "fueter", "m2r-q1"}) {
    CRConditionSet C = gallery::by_name(name);
    VarCRConditionSet V = VarCRConditionSet::constant(C);
    std::vector<Point> pts{Point(C.n, 0.0), Point(C.n, 0.7), Point(C.n, -3.0)};
    AdmissibilityReport ref = solve_admissibility(C);
    for (const auto& r : pointwise_admissibility(V, pts)) {
      REQUIRE(r.report);
      CHECK(r.report->feasible == ref.feasible);
      CHECK(r.report->residual == doctest::Approx(ref.residual).epsilon(1e-12));
      if (ref.kernel)
        for (std::size_t k = 0; k < ref.kernel->b.size(); ++k)
          CHECK((r.report->kernel->b[k] - ref.kernel->b[k]).norm() < 1e-14);
    }
  }
}

TEST_CASE("stretched coefficients are admissible only where isotropic") {
  VarCRConditionSet V = stretched_dbar();
  auto reps = pointwise_admissibility(V, {Point{0.0, 0.5}, Point{0.5, 0.0}, Point{-1.0, 2.0}});
  REQUIRE(reps[0].report);
  CHECK(reps[0].report->feasible);
  // b = (kappa, -i kappa) with kappa = 1/(2 pi)
  const AlgElem& b1 = reps[0].report->kernel->coeff(0, 1);
  CHECK(b1[1] == doctest::Approx(-1 / (2 * pi)).epsilon(1e-12));
  for (int p : {1, 2}) {
    REQUIRE(reps[p].report);
    CHECK_FALSE(reps[p].report->feasible);
    CHECK(reps[p].report->residual > 1e-3);
  }
  // a^1 = i g: the diagonal equations alone force b^1 = -i kappa / g, and
  // the cross equation leaves i kappa (g - 1/g), so the residual grows with g.
  auto far = pointwise_admissibility(V, {Point{0.5, 0.0}, Point{1.0, 0.0}});
  CHECK(far[1].report->residual > far[0].report->residual);
}

TEST_CASE("pointwise dim-3 samples stay infeasible") {
  auto samples = gallery::dim3_samples(5, 99);
  for (const auto& s : samples) {
    CRConditionSet C = s.conditions;
    VarCRConditionSet V;
    V.algebra = C.algebra;
    V.n = C.n;
    V.q = C.q;
    V.a_fn = [C](std::span<const double> x) {
      std::vector<AlgElem> a = C.a;
      for (auto& e : a) e *= 1.0 + 0.1 * x[0] * x[0];
      return a;
    };
    for (const auto& r : pointwise_admissibility(V, {Point(C.n, 0.0), Point(C.n, 0.4)})) {
      REQUIRE(r.report);
      CHECK_FALSE(r.report->feasible);
    }
  }
}

TEST_CASE("permuting points permutes reports") {
  VarCRConditionSet V = stretched_dbar();
  std::vector<Point> pts{Point{0.0, 0.0}, Point{0.3, 0.0}, Point{0.9, 0.2}};
  std::vector<Point> rev(pts.rbegin(), pts.rend());
  auto a = pointwise_admissibility(V, pts), b = pointwise_admissibility(V, rev);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    CHECK(a[k].x == b[pts.size() - 1 - k].x);
    CHECK(a[k].report->residual == b[pts.size() - 1 - k].report->residual);
  }
}

TEST_CASE("ill-conditioned points are flagged, not decided") {
  VarCRConditionSet V;
  V.algebra = builtin(Builtin::complex);
  V.n = 2;
  V.q = 1;
  V.a_fn = [](std::span<const double> x) {
    return std::vector<AlgElem>{AlgElem{1.0, 0.0}, AlgElem{x[0], 1.0}};
  };
  auto r = pointwise_admissibility(V, {Point{1e-7, 0.0}, Point{0.0, 0.0}});
  CHECK(r[0].ill_conditioned);
  CHECK_FALSE(r[0].report);
  CHECK_FALSE(r[0].message.empty());
  CHECK_FALSE(r[1].ill_conditioned);
  CHECK(r[1].report->feasible);
}

TEST_CASE("affine coefficient data") {
  AlgebraTable Cx = builtin(Builtin::complex);
  VarCRConditionSet V = VarCRConditionSet::from_affine(Cx, 2, 1, affine_example());
  CRConditionSet at = V.at(Point{0.5, -1.0});
  // a^0 = 1 + 0.5 i - 1, a^1 = i - 0.5 - i
  CHECK((at.coeff(0, 0) - AlgElem{0.0, 0.5}).norm() < 1e-15);
  CHECK((at.coeff(0, 1) - AlgElem{-0.5, 0.0}).norm() < 1e-15);

  AffineValidation ok = validate_affine(V);
  CHECK(ok.valid);
  CHECK(ok.violations.empty());

  AffineCoefficients bad = affine_example();
  bad.slope[2] = AlgElem{-0.5, 0.0};  // d^{1,0} no longer -d^{0,1}
  bad.slope[3] = AlgElem{0.0, 2.0};   // d^{1,1} != d^{0,0}
  AffineValidation v = validate_affine(VarCRConditionSet::from_affine(Cx, 2, 1, bad));
  CHECK_FALSE(v.valid);
  REQUIRE(v.violations.size() == 2);
  CHECK(v.violations[0].kind == "antisymmetry");
  CHECK(v.violations[0].size == doctest::Approx(0.5));
  CHECK(v.violations[1].kind == "diagonal");
  CHECK(v.violations[1].size == doctest::Approx(1.0));
  CHECK(validate_affine(VarCRConditionSet::from_affine(Cx, 2, 1, bad), 2.0).valid);

  CHECK_THROWS_AS(validate_affine(stretched_dbar()), NoAffineData);
  AffineCoefficients shape = affine_example();
  shape.slope.pop_back();
  CHECK_THROWS_AS(VarCRConditionSet::from_affine(Cx, 2, 1, shape), DimensionMismatch);
  CHECK_THROWS_AS(V.at(Point{0.0}), DimensionMismatch);
}

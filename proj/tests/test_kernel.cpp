#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hypercauchy/gallery.hpp"
#include "hypercauchy/kernel.hpp"

using namespace hypercauchy;
using std::numbers::pi;

namespace {

CauchyKernel make(const CRConditionSet& C) { return CauchyKernel(C, *solve_admissibility(C).kernel); }

Point random_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Point p(n);
  for (auto& v : p) v = u(rng);
  return p;
}

}  // namespace

TEST_CASE("phi") {
  CauchyKernel K = make(gallery::dbar());
  Point x{0.3, -0.2};
  CHECK(K.phi(0, x, x).norm() == 0.0);
  // phi = conj(y - x) / (2 pi)
  Point y{1.1, 0.7};
  std::complex<double> w = std::conj(std::complex<double>(y[0] - x[0], y[1] - x[1])) / (2 * pi);
  AlgElem p = K.phi(0, x, y);
  CHECK(p[0] == doctest::Approx(w.real()).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(w.imag()).epsilon(1e-14));

  CauchyKernel F = make(gallery::fueter());
  Point x4{0, 0, 0, 0}, y4{0.5, 0.1, -0.2, 0.3};
  const double alpha = 1 / (2 * pi * pi);
  AlgElem q = F.phi(0, x4, y4);
  CHECK(q[0] == doctest::Approx(alpha * 0.5));
  CHECK(q[1] == doctest::Approx(-alpha * 0.1));
  CHECK(q[2] == doctest::Approx(alpha * 0.2));
  CHECK(q[3] == doctest::Approx(-alpha * 0.3));
}

TEST_CASE("kernel field, complex case") {
  CauchyKernel K = make(gallery::dbar());
  Point x{0, 0}, y{1, 0};
  auto F = K.field(x, y);
  // Phi^j = a^j phi / r^2 with a = (1, i) and phi = 1/(2 pi).
  CHECK(F[0][0] == doctest::Approx(1 / (2 * pi)).epsilon(1e-14));
  CHECK(std::abs(F[0][1]) < 1e-16);
  CHECK(std::abs(F[1][0]) < 1e-16);
  CHECK(F[1][1] == doctest::Approx(1 / (2 * pi)).epsilon(1e-14));
  // Flux over the unit circle around x is 1/(2 pi) everywhere.
  for (double t : {0.0, 0.7, 2.0, 4.5}) {
    Point yy{std::cos(t), std::sin(t)};
    AlgElem fl = K.flux(x, yy, yy);
    CHECK(fl[0] == doctest::Approx(1 / (2 * pi)).epsilon(1e-14));
    CHECK(std::abs(fl[1]) < 1e-15);
  }
  CHECK_THROWS_AS(K.field(x, x), OnDiagonal);
  CHECK_THROWS_AS(K.closedness_residual(x, x), OnDiagonal);
}

TEST_CASE("Fueter field along the e0 axis") {
  CauchyKernel K = make(gallery::fueter());
  const double alpha = 1 / (2 * pi * pi);
  Point x{0, 0, 0, 0};
  for (double t : {0.5, 1.0, 2.0}) {
    auto F = K.field(x, Point{t, 0, 0, 0});
    CHECK(F[0][0] == doctest::Approx(alpha * std::pow(t, -3)).epsilon(1e-13));
    for (int s = 1; s < 4; ++s) CHECK(std::abs(F[0][s]) < 1e-14 * F[0][0]);
  }
}

TEST_CASE("homogeneity and translation invariance") {
  std::mt19937_64 rng(4);
  for (const char* name : {"dbar", "fueter", "tessarine-adiff", "octonion-single"}) {
    CauchyKernel K = make(gallery::by_name(name));
    const int n = K.n();
    Point x = random_point(n, rng), u = random_point(n, rng);
    double un = 0;
    for (double v : u) un += v * v;
    un = std::sqrt(un);
    for (auto& v : u) v /= un;
    // Log-log slope of |Phi(x, x + t u)| over t.
    std::vector<double> lt, lf;
    for (double t : {0.1, 0.3, 1.0, 3.0, 10.0}) {
      Point y(n);
      for (int i = 0; i < n; ++i) y[i] = x[i] + t * u[i];
      double s = 0;
      for (const auto& e : K.field(x, y)) s += e.coeffs().squaredNorm();
      lt.push_back(std::log(t));
      lf.push_back(0.5 * std::log(s));
    }
    for (std::size_t k = 1; k < lt.size(); ++k)
      CHECK((lf[k] - lf[0]) / (lt[k] - lt[0]) == doctest::Approx(1.0 - n).epsilon(1e-6));

    Point y = random_point(n, rng), shift = random_point(n, rng);
    Point xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = x[i] + shift[i];
      ys[i] = y[i] + shift[i];
    }
    auto A = K.field(x, y), B = K.field(xs, ys);
    for (int j = 0; j < n; ++j) CHECK((A[j] - B[j]).norm() <= 1e-13 * (1 + A[j].norm()));
  }
}

TEST_CASE("odd symmetry of the field") {
  std::mt19937_64 rng(8);
  CauchyKernel K = make(gallery::fueter());
  Point x = random_point(4, rng), y = random_point(4, rng);
  auto A = K.field(x, y), B = K.field(y, x);
  for (int j = 0; j < 4; ++j) CHECK((A[j] + B[j]).norm() < 1e-13 * (1 + A[j].norm()));
}

TEST_CASE("closedness residual") {
  std::mt19937_64 rng(12);
  for (const auto& name : gallery::names()) {
    CRConditionSet C = gallery::by_name(name);
    AdmissibilityReport r = solve_admissibility(C);
    if (!r.feasible) continue;
    CauchyKernel K(C, *r.kernel);
    double worst = 0;
    for (int t = 0; t < 100; ++t) worst = std::max(worst, K.closedness_residual(random_point(C.n, rng), random_point(C.n, rng)));
    CHECK_MESSAGE(worst <= 1e-12, name);
  }
  CRConditionSet C = gallery::fueter();
  KernelSolution bad = *solve_admissibility(C).kernel;
  bad.coeff(0, 2)[1] += 0.1;
  CauchyKernel K(C, bad);
  CHECK(K.closedness_residual(Point{0, 0, 0, 0}, Point{0.3, 0.5, -0.4, 0.2}) > 1e-3);
}

TEST_CASE("finite-difference divergence agrees") {
  std::mt19937_64 rng(21);
  for (const auto& name : gallery::names()) {
    CRConditionSet C = gallery::by_name(name);
    AdmissibilityReport r = solve_admissibility(C);
    if (!r.feasible) continue;
    CauchyKernel K(C, *r.kernel);
    for (int t = 0; t < 20; ++t) {
      Point x = random_point(K.n(), rng), y = random_point(K.n(), rng);
      CHECK_MESSAGE(std::abs(K.closedness_residual_fd(x, y) - K.closedness_residual(x, y)) < 1e-8, name);
    }
  }
}

TEST_CASE("kernel derivative matches central differences in x") {
  CauchyKernel K = make(gallery::fueter());
  Point x{0.1, -0.2, 0.05, 0.3}, y{0.9, 0.2, -0.3, 0.1}, nu{0.5, 0.5, -0.5, 0.5};
  const double h = 1e-6;
  for (int i = 0; i < 4; ++i) {
    Point xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    AlgElem fd = (0.5 / h) * (K.flux(xp, y, nu) - K.flux(xm, y, nu));
    CHECK((fd - K.flux_derivative(i, x, y, nu)).norm() < 1e-7);
  }
}

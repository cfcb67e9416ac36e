#pragma once

#include <cstdint>
#include <optional>

#include "hypercauchy/kernel.hpp"
#include "hypercauchy/quadrature.hpp"
#include "hypercauchy/solutions.hpp"

namespace hypercauchy {

struct BallDomain {
  Point center;
  double radius = 1.0;

  BallDomain() = default;
  BallDomain(Point c, double r);
  static BallDomain unit(int n) { return BallDomain(Point(n, 0.0), 1.0); }
  int n() const { return static_cast<int>(center.size()); }
  bool strictly_contains(std::span<const double> x) const;
};

enum class Scheme { product_gauss, monte_carlo };

struct QuadratureSpec {
  Scheme scheme = Scheme::product_gauss;
  // product_gauss: nodes per angle; monte_carlo: total sphere points.
  int nodes = 64;
  // Radial nodes for the volume term; 0 means `nodes`.
  int radial_nodes = 0;
  std::uint64_t seed = 1;
  // QuadratureUnderResolved is raised when the error estimate exceeds this.
  std::optional<double> error_bound;

  void validate(int n) const;
};

struct ReproductionReport {
  AlgElem computed;
  AlgElem expected;
  double abs_error = 0.0;
  double rel_error = 0.0;
  long long nodes = 0;
  // |Q(N) - Q(N/2)|
  double error_estimate = 0.0;
  AlgElem boundary_term;
  AlgElem volume_term;
};

/// Integral of f(y) sum_j Phi^j(y; x) nu_j over the sphere of D.
ReproductionReport boundary_reproduce(const AlgFunction& f, std::span<const double> x, const BallDomain& D,
                                      const CauchyKernel& K, const QuadratureSpec& Q);

/// Boundary term minus the volume term
/// int_D sum_m (sum_j df/dy_j a^j_m) phi_m(x, y) / |y - x|^n dV.
ReproductionReport verify_representation(const AlgFunction& f, std::span<const double> x, const BallDomain& D,
                                         const CauchyKernel& K, const QuadratureSpec& Q);

struct DerivativeReport {
  AlgElem value;
  AlgElem expected;  // f.partial(i, x)
  double abs_error = 0.0;
  double rel_error = 0.0;
  // M in |d_i f(x)| <= M sup|f| / R.
  double kernel_constant = 0.0;
  double sup_f = 0.0;
  double bound = 0.0;
  bool estimate_holds = false;
  double error_estimate = 0.0;
  long long nodes = 0;
};

DerivativeReport derivative_via_kernel(const AlgFunction& f, std::span<const double> x, int i, const BallDomain& D,
                                       const CauchyKernel& K, const QuadratureSpec& Q);

/// Frobenius norm of the structure constants, a bound for |ab| / (|a||b|).
double multiplication_bound(const AlgebraTable& T);

}  // namespace hypercauchy

#pragma once

#include <cstdint>
#include <vector>

namespace hypercauchy {

double ball_volume(int n);
double sphere_area(int n);  // area of the unit sphere in R^n

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
GaussRule gauss_legendre(int count);
/// Same rule mapped to [lo, hi].
GaussRule gauss_legendre(int count, double lo, double hi);

/// Points on the unit sphere S^{n-1} with weights summing to its area.
struct SphereRule {
  int n = 0;
  std::vector<double> points;  // row-major, n per point
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
  const double* point(std::size_t p) const { return &points[p * n]; }
};

/// Tensor-product Gauss-Legendre in hyperspherical angles, n in {1,..,4}.
/// `per_angle` nodes in every angle, per_angle^(n-1) points in total.
SphereRule product_sphere_rule(int n, int per_angle);

/// Antithetic Monte Carlo rule with `count` points (rounded up to even).
SphereRule monte_carlo_sphere_rule(int n, int count, std::uint64_t seed);

/// Deterministic pairwise sum.
double pairwise_sum(const double* v, std::size_t count);

}  // namespace hypercauchy

#include "hypercauchy/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hypercauchy {

double ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("ball_volume: n must be positive");
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double sphere_area(int n) { return n * ball_volume(n); }

GaussRule gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be positive");
  GaussRule r;
  r.x.resize(count);
  r.w.resize(count);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= count; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = count * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= count; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = count * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.x[i] = -z;
    r.x[count - 1 - i] = z;
    r.w[i] = w;
    r.w[count - 1 - i] = w;
  }
  if (count % 2 == 1) r.x[count / 2] = 0.0;
  return r;
}

GaussRule gauss_legendre(int count, double lo, double hi) {
  GaussRule r = gauss_legendre(count);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < count; ++i) {
    r.x[i] = mid + half * r.x[i];
    r.w[i] *= half;
  }
  return r;
}

SphereRule product_sphere_rule(int n, int per_angle) {
  if (n < 1 || n > 4) throw std::invalid_argument("product_sphere_rule: n must be in 1..4");
  SphereRule s;
  s.n = n;
  if (n == 1) {
    s.points = {1.0, -1.0};
    s.weights = {1.0, 1.0};
    return s;
  }
  const GaussRule az = gauss_legendre(per_angle, 0.0, 2.0 * std::numbers::pi);
  const GaussRule pol = gauss_legendre(per_angle, 0.0, std::numbers::pi);
  if (n == 2) {
    for (int a = 0; a < per_angle; ++a) {
      s.points.push_back(std::cos(az.x[a]));
      s.points.push_back(std::sin(az.x[a]));
      s.weights.push_back(az.w[a]);
    }
    return s;
  }
  if (n == 3) {
    for (int t = 0; t < per_angle; ++t) {
      const double st = std::sin(pol.x[t]), ct = std::cos(pol.x[t]);
      for (int a = 0; a < per_angle; ++a) {
        s.points.insert(s.points.end(), {ct, st * std::cos(az.x[a]), st * std::sin(az.x[a])});
        s.weights.push_back(pol.w[t] * az.w[a] * st);
      }
    }
    return s;
  }
  for (int p = 0; p < per_angle; ++p) {
    const double sp = std::sin(pol.x[p]), cp = std::cos(pol.x[p]);
    for (int t = 0; t < per_angle; ++t) {
      const double st = std::sin(pol.x[t]), ct = std::cos(pol.x[t]);
      for (int a = 0; a < per_angle; ++a) {
        s.points.insert(s.points.end(),
                        {cp, sp * ct, sp * st * std::cos(az.x[a]), sp * st * std::sin(az.x[a])});
        s.weights.push_back(pol.w[p] * pol.w[t] * az.w[a] * sp * sp * st);
      }
    }
  }
  return s;
}

SphereRule monte_carlo_sphere_rule(int n, int count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("monte_carlo_sphere_rule: n must be positive");
  const int pairs = (count + 1) / 2;
  SphereRule s;
  s.n = n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const double w = sphere_area(n) / (2.0 * pairs);
  std::vector<double> v(n);
  for (int p = 0; p < pairs; ++p) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        v[i] = normal(rng);
        norm2 += v[i] * v[i];
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) s.points.push_back(v[i] * inv);
    for (int i = 0; i < n; ++i) s.points.push_back(-v[i] * inv);
    s.weights.push_back(w);
    s.weights.push_back(w);
  }
  return s;
}

double pairwise_sum(const double* v, std::size_t count) {
  if (count <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += v[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, count - half);
}

}  // namespace hypercauchy

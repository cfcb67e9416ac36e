#include "hypercauchy/kernel.hpp"

#include <cmath>

namespace hypercauchy {

CauchyKernel::CauchyKernel(CRConditionSet conditions, KernelSolution solution)
    : C_(std::move(conditions)), K_(std::move(solution)) {
  C_.validate();
  if (K_.n != C_.n || K_.q != C_.q || K_.b.size() != C_.a.size())
    throw DimensionMismatch("kernel solution does not match the condition set");
  const int n = C_.n, d = C_.dim();
  ab_.assign(static_cast<std::size_t>(n) * n, AlgElem(d));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < C_.q; ++m) ab_[j * n + i] += mul(C_.coeff(m, j), K_.coeff(m, i), C_.algebra);
}

namespace {

double dist2(std::span<const double> x, std::span<const double> y) {
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r2 += (y[i] - x[i]) * (y[i] - x[i]);
  return r2;
}

void check_points(int n, std::span<const double> x, std::span<const double> y) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw DimensionMismatch("point dimension does not match the number of variables");
}

}  // namespace

AlgElem CauchyKernel::phi(int m, std::span<const double> x, std::span<const double> y) const {
  check_points(n(), x, y);
  AlgElem out(dim());
  for (int i = 0; i < n(); ++i) out += (y[i] - x[i]) * K_.coeff(m, i);
  return out;
}

std::vector<AlgElem> CauchyKernel::field(std::span<const double> x, std::span<const double> y) const {
  check_points(n(), x, y);
  const double r2 = dist2(x, y);
  if (r2 == 0.0) throw OnDiagonal("kernel evaluated at y == x");
  const int nn = n();
  const double inv = std::pow(r2, -0.5 * nn);
  std::vector<AlgElem> out(nn, AlgElem(dim()));
  for (int j = 0; j < nn; ++j) {
    for (int i = 0; i < nn; ++i) out[j].coeffs() += (y[i] - x[i]) * ab_[j * nn + i].coeffs();
    out[j] *= inv;
  }
  return out;
}

AlgElem CauchyKernel::flux(std::span<const double> x, std::span<const double> y,
                           std::span<const double> nu) const {
  check_points(n(), x, y);
  const double r2 = dist2(x, y);
  if (r2 == 0.0) throw OnDiagonal("kernel evaluated at y == x");
  const int nn = n();
  AlgElem out(dim());
  for (int j = 0; j < nn; ++j) {
    if (nu[j] == 0.0) continue;
    for (int i = 0; i < nn; ++i) out.coeffs() += (nu[j] * (y[i] - x[i])) * ab_[j * nn + i].coeffs();
  }
  out *= std::pow(r2, -0.5 * nn);
  return out;
}

AlgElem CauchyKernel::flux_derivative(int i, std::span<const double> x, std::span<const double> y,
                                      std::span<const double> nu) const {
  check_points(n(), x, y);
  const double r2 = dist2(x, y);
  if (r2 == 0.0) throw OnDiagonal("kernel evaluated at y == x");
  const int nn = n();
  const double rn = std::pow(r2, -0.5 * nn);
  const double di = y[i] - x[i];
  AlgElem out(dim());
  for (int j = 0; j < nn; ++j) {
    if (nu[j] == 0.0) continue;
    Eigen::VectorXd s = Eigen::VectorXd::Zero(dim());
    for (int l = 0; l < nn; ++l) s += (y[l] - x[l]) * ab_[j * nn + l].coeffs();
    out.coeffs() += nu[j] * (-rn * ab_[j * nn + i].coeffs() + (nn * di * rn / r2) * s);
  }
  return out;
}

double CauchyKernel::closedness_residual(std::span<const double> x, std::span<const double> y) const {
  check_points(n(), x, y);
  const double r2 = dist2(x, y);
  if (r2 == 0.0) throw OnDiagonal("closedness checked at y == x");
  const int nn = n();
  AlgElem lhs(dim()), rhs(dim());
  for (int j = 0; j < nn; ++j) {
    lhs += ab_[j * nn + j];
    for (int i = 0; i < nn; ++i) rhs.coeffs() += ((y[j] - x[j]) * (y[i] - x[i])) * ab_[j * nn + i].coeffs();
  }
  lhs *= r2;
  rhs *= static_cast<double>(nn);
  return (lhs - rhs).norm() / (nn * K_.normalization * r2);
}

double CauchyKernel::closedness_residual_fd(std::span<const double> x, std::span<const double> y,
                                            double h) const {
  check_points(n(), x, y);
  const int nn = n();
  const double r2 = dist2(x, y);
  if (r2 == 0.0) throw OnDiagonal("closedness checked at y == x");
  AlgElem div(dim());
  std::vector<double> z(y.begin(), y.end());
  auto at = [&](int j, double t) {
    z[j] = y[j] + t;
    AlgElem v = field(x, z)[j];
    z[j] = y[j];
    return v;
  };
  // Fourth-order central stencil.
  for (int j = 0; j < nn; ++j)
    div += (1.0 / (12.0 * h)) * (8.0 * (at(j, h) - at(j, -h)) - (at(j, 2 * h) - at(j, -2 * h)));
  return div.norm() * std::pow(r2, 0.5 * nn) / (nn * K_.normalization);
}

}  // namespace hypercauchy

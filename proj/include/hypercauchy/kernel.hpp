#pragma once

#include <span>
#include <vector>

#include "hypercauchy/admissibility.hpp"

namespace hypercauchy {

using Point = std::vector<double>;

/// K(y, x) built from phi_m(x, y) = sum_i b^i_m (y_i - x_i) and the
/// condition coefficients: Phi^j(y; x) = sum_m a^j_m phi_m(x, y) / |y - x|^n.
class CauchyKernel {
 public:
  CauchyKernel(CRConditionSet conditions, KernelSolution solution);

  const CRConditionSet& conditions() const { return C_; }
  const KernelSolution& solution() const { return K_; }
  const AlgebraTable& algebra() const { return C_.algebra; }
  int n() const { return C_.n; }
  int dim() const { return C_.dim(); }

  AlgElem phi(int m, std::span<const double> x, std::span<const double> y) const;

  /// Phi^j(y; x), j = 0..n-1. Throws OnDiagonal when y == x.
  std::vector<AlgElem> field(std::span<const double> x, std::span<const double> y) const;

  /// sum_j Phi^j(y; x) nu_j.
  AlgElem flux(std::span<const double> x, std::span<const double> y, std::span<const double> nu) const;

  /// sum_j d/dx_i Phi^j(y; x) nu_j.
  AlgElem flux_derivative(int i, std::span<const double> x, std::span<const double> y,
                          std::span<const double> nu) const;

  /// Normalized defect of |y-x|^2 sum a^j_m b^j_m = n sum a^j_m (y_j - x_j) phi_m.
  double closedness_residual(std::span<const double> x, std::span<const double> y) const;

  /// Same quantity from a central-difference divergence of the field, step h.
  double closedness_residual_fd(std::span<const double> x, std::span<const double> y, double h = 1e-5) const;

 private:
  CRConditionSet C_;
  KernelSolution K_;
  // ab_[j * n + i] = sum_m a^j_m b^i_m
  std::vector<AlgElem> ab_;
};

}  // namespace hypercauchy

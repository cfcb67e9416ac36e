#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercauchy/admissibility.hpp"
#include "hypercauchy/kernel.hpp"

namespace hypercauchy {

/// a^j_m(x) = base^j_m + sum_i d^{j,i}_m (x_i - x0_i).
struct AffineCoefficients {
  Point base_point;
  std::vector<AlgElem> base;   // [m * n + j]
  std::vector<AlgElem> slope;  // [(m * n + j) * n + i]

  const AlgElem& d(int m, int j, int i, int n) const {
    return slope[(static_cast<std::size_t>(m) * n + j) * n + i];
  }
};

struct VarCRConditionSet {
  AlgebraTable algebra;
  int n = 0;
  int q = 0;
  // Returns the coefficients at x, laid out like CRConditionSet::a.
  std::function<std::vector<AlgElem>(std::span<const double>)> a_fn;
  std::optional<AffineCoefficients> affine;

  CRConditionSet at(std::span<const double> x) const;

  static VarCRConditionSet constant(const CRConditionSet& C);
  static VarCRConditionSet from_affine(AlgebraTable T, int n, int q, AffineCoefficients data);
};

struct PointwiseReport {
  Point x;
  // Unset when the decision was ambiguous at this point.
  std::optional<AdmissibilityReport> report;
  bool ill_conditioned = false;
  std::string message;
};

std::vector<PointwiseReport> pointwise_admissibility(const VarCRConditionSet& V, const std::vector<Point>& points,
                                                     const AdmissibilityOptions& opt = {});

struct AffineViolation {
  int m = 0, j = 0, i = 0;
  std::string kind;  // "antisymmetry" or "diagonal"
  double size = 0.0;
};

struct AffineValidation {
  bool valid = false;
  std::vector<AffineViolation> violations;
};

/// d^{j,i}_m + d^{i,j}_m = 0 for i != j and d^{j,j}_m independent of j.
AffineValidation validate_affine(const VarCRConditionSet& V, double tol = 0.0);

}  // namespace hypercauchy

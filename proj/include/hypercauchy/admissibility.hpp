#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hypercauchy/algebra.hpp"

namespace hypercauchy {

/// q first-order conditions sum_j (df/dx_j) a^j_m = 0, m = 0..q-1, in n real
/// variables. Coefficients are stored row-major as a[m * n + j].
struct CRConditionSet {
  AlgebraTable algebra;
  int n = 0;
  int q = 0;
  std::vector<AlgElem> a;
  std::string label;

  CRConditionSet() = default;
  CRConditionSet(AlgebraTable T, int n_vars, int q_conds);

  const AlgElem& coeff(int m, int j) const { return a[static_cast<std::size_t>(m) * n + j]; }
  AlgElem& coeff(int m, int j) { return a[static_cast<std::size_t>(m) * n + j]; }
  int dim() const { return algebra.dim(); }

  /// Throws InvalidConditions or DimensionMismatch.
  void validate() const;
};

struct KernelSolution {
  int n = 0;
  int q = 0;
  std::vector<AlgElem> b;  // b[m * n + j]
  std::vector<AlgElem> c;  // c[j * n + i]
  double normalization = 0.0;
  double residual = 0.0;
  int nullity = 0;

  const AlgElem& coeff(int m, int j) const { return b[static_cast<std::size_t>(m) * n + j]; }
  AlgElem& coeff(int m, int j) { return b[static_cast<std::size_t>(m) * n + j]; }
  const AlgElem& aux(int j, int i) const { return c[static_cast<std::size_t>(j) * n + i]; }
};

struct AdmissibilityOptions {
  double tol = 1e-9;
  // Residuals in (tol, ambiguity_ceiling) raise IllConditioned.
  double ambiguity_ceiling = 1e-6;
  double rank_tol = 1e-10;
};

struct AdmissibilityReport {
  bool feasible = false;
  double residual = 0.0;
  std::optional<KernelSolution> kernel;
  int free_dim = 0;
  int rank = 0;
  // Ratio of the last retained singular value to the first discarded one.
  double gap = std::numeric_limits<double>::infinity();
};

struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd rhs;
};

/// kappa = 1 / (n Vol(B_n)).
double kernel_normalization(int n);

/// Unknown layout: component s of b^j_m sits at ((m * n + j) * dim + s).
/// One block of dim rows per pair i <= j in lexicographic order.
LinearSystem assemble_system(const CRConditionSet& C);
inline std::size_t unknown_index(int m, int j, int s, int n, int dim) {
  return (static_cast<std::size_t>(m) * n + j) * dim + s;
}

AdmissibilityReport solve_admissibility(const CRConditionSet& C,
                                        const AdmissibilityOptions& opt = {});

/// c^j_i = Vol(B_n) sum_m a^j_m b^i_m.
std::vector<AlgElem> auxiliary_matrix(const CRConditionSet& C, const std::vector<AlgElem>& b);

/// Largest deviation from the kernel equations, absolute.
double cond12_residual(const CRConditionSet& C, const std::vector<AlgElem>& b);

CRConditionSet a_differentiable_conditions(const AlgebraTable& T);

CRConditionSet induced_conditions(const CRConditionSet& C, int copies);
/// Block-diagonal kernel of the induced set built from a kernel of C.
KernelSolution induced_kernel(const CRConditionSet& C, const KernelSolution& K, int copies);

struct EllipticityReport {
  bool holds = false;
  double worst_coeff = 0.0;  // relative to kappa
  double min_symbol = 0.0;   // min over sphere sample of sum_m |P_m(X)|^2
};

EllipticityReport check_ellipticity(const CRConditionSet& C, const KernelSolution& K,
                                    int samples = 2000, unsigned long long seed = 7);

struct ConditionAReport {
  bool holds = false;
  double worst_violation = 0.0;
  std::vector<int> principal_rows;
  std::vector<int> other_rows;
  AlgElem D0;
  std::vector<AlgElem> D;  // D[k * q + m], k over other_rows
  // Coefficients of the non-principal rows in terms of the principal ones.
  std::vector<AlgElem> lambda;  // lambda[k * q + m]
  std::vector<AlgElem> b;      // from Cramer's rule on the principal system
  double b_residual = 0.0;
};

/// Algebra-valued determinant over a commutative algebra, by Laplace expansion.
AlgElem algebra_determinant(const std::vector<AlgElem>& M, int size, const AlgebraTable& T);

/// Rows j of the n x q matrix [a^j_m] whose minor is invertible, or empty.
std::vector<int> find_principal_rows(const CRConditionSet& C);

ConditionAReport commutative_condition_A(const CRConditionSet& C, std::vector<int> principal_rows = {},
                                         double tol = 1e-10);

/// q = 1, n = dim, a^0 = e_0, a^j = e_j. Requires e_i^2 = -e_0 and
/// e_i e_j = -e_j e_i among the non-unit basis elements.
CRConditionSet anticommuting_single_condition(const AlgebraTable& T);

}  // namespace hypercauchy

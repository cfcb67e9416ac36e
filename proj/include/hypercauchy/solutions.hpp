#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hypercauchy/admissibility.hpp"

namespace hypercauchy {

using Exponent = std::vector<int>;

/// Exponents of all monomials of total degree <= degree in n variables,
/// ordered by degree and then lexicographically (x_0 first).
std::vector<Exponent> graded_lex_monomials(int n, int degree);

/// Polynomial in n real variables with coefficients in an algebra.
class AlgPolynomial {
 public:
  AlgPolynomial() = default;
  AlgPolynomial(int n, int degree, int dim);

  int n() const { return n_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::vector<Exponent>& monomials() const { return *mono_; }
  std::size_t size() const { return coeffs_.size(); }

  AlgElem& coeff(std::size_t k) { return coeffs_[k]; }
  const AlgElem& coeff(std::size_t k) const { return coeffs_[k]; }
  /// Coefficient of the monomial with exponent e.
  AlgElem& coeff(const Exponent& e);

  AlgElem eval(std::span<const double> x) const;
  AlgElem partial(int j, std::span<const double> x) const;

  AlgPolynomial& operator+=(const AlgPolynomial& o);
  AlgPolynomial& operator*=(double s);

  /// Flattened coefficients, monomial-major.
  Eigen::VectorXd flatten() const;
  static AlgPolynomial unflatten(int n, int degree, int dim, const Eigen::VectorXd& v);

 private:
  int n_ = 0, degree_ = 0, dim_ = 0;
  std::shared_ptr<const std::vector<Exponent>> mono_;
  std::vector<AlgElem> coeffs_;
};

/// An algebra-valued function together with its partial derivatives. Built
/// from a polynomial (exact derivatives) or a plain callable (central
/// differences with step h).
class AlgFunction {
 public:
  using Value = std::function<AlgElem(std::span<const double>)>;
  using Partial = std::function<AlgElem(int, std::span<const double>)>;

  AlgFunction() = default;
  AlgFunction(Value f, Partial df) : f_(std::move(f)), df_(std::move(df)) {}

  static AlgFunction polynomial(AlgPolynomial p);
  static AlgFunction callable(Value f, double h = 1e-5);

  AlgElem operator()(std::span<const double> x) const { return f_(x); }
  AlgElem partial(int j, std::span<const double> x) const { return df_(j, x); }

 private:
  Value f_;
  Partial df_;
};

struct PolySolutionBasis {
  int degree = 0;
  std::vector<AlgPolynomial> basis;
};

PolySolutionBasis polynomial_solution_basis(const CRConditionSet& C, int degree);

/// sum_j (df/dx_j) a^j_m for each m.
std::vector<AlgElem> apply_cr_operator(const CRConditionSet& C, const AlgFunction& f, std::span<const double> x);
std::vector<AlgElem> apply_cr_operator(const CRConditionSet& C, const AlgPolynomial& f, std::span<const double> x);
std::vector<AlgElem> apply_cr_operator(const CRConditionSet& C, const AlgFunction::Value& f,
                                       std::span<const double> x, double h = 1e-5);

}  // namespace hypercauchy

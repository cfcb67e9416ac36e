#include "hypercauchy/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hypercauchy {

namespace {

void monomials_of_degree(int n, int deg, int var, Exponent& cur, std::vector<Exponent>& out) {
  if (var == n - 1) {
    cur[var] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[var] = e;
    monomials_of_degree(n, deg - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

std::size_t monomial_position(const std::vector<Exponent>& mono, const Exponent& e) {
  auto it = std::find(mono.begin(), mono.end(), e);
  if (it == mono.end()) throw InvalidConditions("monomial outside polynomial degree");
  return static_cast<std::size_t>(it - mono.begin());
}

std::shared_ptr<const std::vector<Exponent>> shared_monomials(int n, int degree) {
  return std::make_shared<const std::vector<Exponent>>(graded_lex_monomials(n, degree));
}

double monomial_value(const Exponent& e, std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int p = 0; p < e[i]; ++p) v *= x[i];
  return v;
}

}  // namespace

std::vector<Exponent> graded_lex_monomials(int n, int degree) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  for (int d = 0; d <= degree; ++d) monomials_of_degree(n, d, 0, cur, out);
  return out;
}

AlgPolynomial::AlgPolynomial(int n, int degree, int dim)
    : n_(n), degree_(degree), dim_(dim), mono_(shared_monomials(n, degree)) {
  coeffs_.assign(mono_->size(), AlgElem(dim));
}

AlgElem& AlgPolynomial::coeff(const Exponent& e) { return coeffs_[monomial_position(*mono_, e)]; }

AlgElem AlgPolynomial::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("polynomial evaluated at point of wrong dimension");
  AlgElem out(dim_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    out.coeffs() += monomial_value((*mono_)[k], x) * coeffs_[k].coeffs();
  }
  return out;
}

AlgElem AlgPolynomial::partial(int j, std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("polynomial evaluated at point of wrong dimension");
  AlgElem out(dim_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Exponent& e = (*mono_)[k];
    if (e[j] == 0 || coeffs_[k].is_zero()) continue;
    Exponent lowered = e;
    lowered[j] -= 1;
    out.coeffs() += (e[j] * monomial_value(lowered, x)) * coeffs_[k].coeffs();
  }
  return out;
}

AlgPolynomial& AlgPolynomial::operator+=(const AlgPolynomial& o) {
  if (o.n_ != n_ || o.degree_ != degree_ || o.dim_ != dim_) throw DimensionMismatch("adding unlike polynomials");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

AlgPolynomial& AlgPolynomial::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Eigen::VectorXd AlgPolynomial::flatten() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(coeffs_.size()) * dim_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v.segment(static_cast<Eigen::Index>(k) * dim_, dim_) = coeffs_[k].coeffs();
  return v;
}

AlgPolynomial AlgPolynomial::unflatten(int n, int degree, int dim, const Eigen::VectorXd& v) {
  AlgPolynomial p(n, degree, dim);
  if (v.size() != static_cast<Eigen::Index>(p.size()) * dim) throw DimensionMismatch("coefficient vector has wrong length");
  for (std::size_t k = 0; k < p.size(); ++k) p.coeffs_[k] = AlgElem(Eigen::VectorXd(v.segment(static_cast<Eigen::Index>(k) * dim, dim)));
  return p;
}

AlgFunction AlgFunction::polynomial(AlgPolynomial p) {
  auto shared = std::make_shared<const AlgPolynomial>(std::move(p));
  return AlgFunction([shared](std::span<const double> x) { return shared->eval(x); },
                     [shared](int j, std::span<const double> x) { return shared->partial(j, x); });
}

AlgFunction AlgFunction::callable(Value f, double h) {
  auto fd = [f, h](int j, std::span<const double> x) {
    std::vector<double> xp(x.begin(), x.end()), xm(x.begin(), x.end());
    xp[j] += h;
    xm[j] -= h;
    return (0.5 / h) * (f(xp) - f(xm));
  };
  return AlgFunction(std::move(f), fd);
}

std::vector<AlgElem> apply_cr_operator(const CRConditionSet& C, const AlgFunction& f, std::span<const double> x) {
  std::vector<AlgElem> out(C.q, AlgElem(C.dim()));
  for (int j = 0; j < C.n; ++j) {
    AlgElem dj = f.partial(j, x);
    for (int m = 0; m < C.q; ++m) out[m] += mul(dj, C.coeff(m, j), C.algebra);
  }
  return out;
}

std::vector<AlgElem> apply_cr_operator(const CRConditionSet& C, const AlgPolynomial& f, std::span<const double> x) {
  std::vector<AlgElem> out(C.q, AlgElem(C.dim()));
  for (int j = 0; j < C.n; ++j) {
    AlgElem dj = f.partial(j, x);
    for (int m = 0; m < C.q; ++m) out[m] += mul(dj, C.coeff(m, j), C.algebra);
  }
  return out;
}

std::vector<AlgElem> apply_cr_operator(const CRConditionSet& C, const AlgFunction::Value& f,
                                       std::span<const double> x, double h) {
  return apply_cr_operator(C, AlgFunction::callable(f, h), x);
}

PolySolutionBasis polynomial_solution_basis(const CRConditionSet& C, int degree) {
  C.validate();
  if (degree < 0 || degree > 6) throw InvalidConditions("polynomial_solution_basis: degree must be in 0..6");
  const int n = C.n, d = C.dim(), q = C.q;
  const auto mono = graded_lex_monomials(n, degree);
  const int cols = static_cast<int>(mono.size()) * d;

  PolySolutionBasis out;
  out.degree = degree;
  if (degree == 0) {
    for (int s = 0; s < d; ++s) {
      AlgPolynomial p(n, 0, d);
      p.coeff(0) = AlgElem::basis(d, s);
      out.basis.push_back(std::move(p));
    }
    return out;
  }

  const auto lower = graded_lex_monomials(n, degree - 1);
  std::map<Exponent, int> lower_pos;
  for (std::size_t k = 0; k < lower.size(); ++k) lower_pos[lower[k]] = static_cast<int>(k);

  std::vector<Eigen::MatrixXd> R(C.a.size());
  for (std::size_t k = 0; k < C.a.size(); ++k) R[k] = C.algebra.right_mul_matrix(C.a[k]);

  // Rows (m, monomial beta of degree < degree, component).
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q) * lower.size() * d, cols);
  for (std::size_t k = 0; k < mono.size(); ++k) {
    const Exponent& e = mono[k];
    for (int j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      Exponent lo = e;
      lo[j] -= 1;
      const int beta = lower_pos.at(lo);
      for (int m = 0; m < q; ++m) {
        const Eigen::Index row = (static_cast<Eigen::Index>(m) * lower.size() + beta) * d;
        M.block(row, static_cast<Eigen::Index>(k) * d, d, d) += e[j] * R[static_cast<std::size_t>(m) * n + j];
      }
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv[k] > 1e-10 * smax) ++rank;
  const Eigen::MatrixXd& V = svd.matrixV();
  for (int c = rank; c < cols; ++c)
    out.basis.push_back(AlgPolynomial::unflatten(n, degree, d, V.col(c)));
  return out;
}

}  // namespace hypercauchy

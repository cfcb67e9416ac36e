#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypercauchy/errors.hpp"

namespace hypercauchy {

/// Element of a finite-dimensional real algebra, stored as its coordinates
/// in the basis (e_0, ..., e_p).
class AlgElem {
 public:
  AlgElem() = default;
  explicit AlgElem(int dim) : c_(Eigen::VectorXd::Zero(dim)) {}
  explicit AlgElem(Eigen::VectorXd c) : c_(std::move(c)) {}
  AlgElem(std::initializer_list<double> c);

  static AlgElem basis(int dim, int k);
  static AlgElem unit(int dim) { return basis(dim, 0); }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int k) const { return c_[k]; }
  double& operator[](int k) { return c_[k]; }
  const Eigen::VectorXd& coeffs() const { return c_; }
  Eigen::VectorXd& coeffs() { return c_; }

  double norm() const { return c_.norm(); }
  bool is_zero(double tol = 0.0) const { return c_.lpNorm<Eigen::Infinity>() <= tol; }

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(double s) {
    c_ *= s;
    return *this;
  }

 private:
  Eigen::VectorXd c_;
};

AlgElem operator+(AlgElem a, const AlgElem& b);
AlgElem operator-(AlgElem a, const AlgElem& b);
AlgElem operator-(AlgElem a);
AlgElem operator*(double s, AlgElem a);
AlgElem operator*(AlgElem a, double s);

/// Structure constants gamma[i][j][k] of e_i e_j = sum_k gamma[i][j][k] e_k.
class AlgebraTable {
 public:
  AlgebraTable() = default;
  AlgebraTable(std::vector<std::string> basis_names, std::vector<double> gamma);

  /// Table with e_0 as unit and every other product zero.
  static AlgebraTable unital_skeleton(std::vector<std::string> basis_names);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& name() const { return label_; }
  void set_name(std::string label) { label_ = std::move(label); }

  double gamma(int i, int j, int k) const { return g_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<double>& gamma_flat() const { return g_; }

  // Flags, computed once at construction.
  bool unital() const { return unital_; }
  bool associative() const { return assoc_violation_ <= kFlagTol; }
  double associativity_violation() const { return assoc_violation_; }
  bool commutative() const { return commutative_; }

  /// Matrix of y -> x*y.
  Eigen::MatrixXd left_mul_matrix(const AlgElem& x) const;
  /// Matrix of y -> y*x.
  Eigen::MatrixXd right_mul_matrix(const AlgElem& x) const;

  static constexpr double kFlagTol = 1e-12;

 private:
  friend class TableBuilder;
  void compute_flags();

  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<double> g_;
  std::string label_;
  bool unital_ = false;
  double assoc_violation_ = 0.0;
  bool commutative_ = false;
};

/// Mutable helper for building tables product by product.
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> basis_names);
  /// Sets e_i e_j = v.
  TableBuilder& set(int i, int j, const AlgElem& v);
  /// Sets e_i e_j = s e_k.
  TableBuilder& set(int i, int j, int k, double s);
  int dim() const { return dim_; }
  AlgebraTable build(std::string label = {}) const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<double> g_;
};

enum class Side { left, right };

AlgElem mul(const AlgElem& a, const AlgElem& b, const AlgebraTable& T);
bool validate_unit(const AlgebraTable& T);
double check_associative(const AlgebraTable& T);
bool check_commutative(const AlgebraTable& T);

/// Left inverse solves x*a = e_0, right inverse solves a*x = e_0.
AlgElem try_invert(const AlgElem& a, const AlgebraTable& T, Side side);
bool is_invertible(const AlgElem& a, const AlgebraTable& T);

enum class Builtin {
  reals,
  complex,
  dim2,
  quaternion,
  m2r,
  clifford,
  tessarine,
  octonion,
  sedenion
};

AlgebraTable builtin(Builtin kind, const std::vector<double>& params = {});
/// Accepts "quaternion", "dim2(a,b)", "clifford(a1,a2)" and so on.
AlgebraTable builtin(const std::string& spec);
bool is_builtin_name(const std::string& spec);

AlgebraTable dim2_algebra(double a, double b);
AlgebraTable clifford_algebra(double a1, double a2);

AlgebraTable cayley_dickson(const AlgebraTable& T);
AlgElem sum_of_basis_squares(const AlgebraTable& T);

}  // namespace hypercauchy

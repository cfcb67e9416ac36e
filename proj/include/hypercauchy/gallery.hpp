#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypercauchy/admissibility.hpp"
#include "hypercauchy/solutions.hpp"

namespace hypercauchy::gallery {

CRConditionSet dbar();
CRConditionSet fueter();
CRConditionSet octonion_single();
CRConditionSet sedenion_single();
/// q = 1, a = (e_0, i, j, k) over the tessarines; infeasible.
CRConditionSet tessarine_single();
/// q = 1 with a^0 = e_0 and the other coefficients drawn at random.
CRConditionSet m2r_first(std::uint64_t seed = 11);
/// q = 3 with the principal block diag(alpha) on rows 0..2 and row 3 free.
CRConditionSet m2r_principal(std::uint64_t seed = 12, double a1 = 1.0, double a2 = 1.3, double a3 = 0.7);
/// q = 1 over dim2(a, b) with a^0 = e_0 and a^1 = (e_1 - b/2) / sqrt|a + b^2/4|.
CRConditionSet dim2_candidate(double a, double b);

/// Names accepted by `by_name`.
std::vector<std::string> names();
bool has(const std::string& name);
CRConditionSet by_name(const std::string& name);

/// The commutative algebra a_differentiable_conditions is checked on.
struct CommutativeCase {
  std::string label;
  AlgebraTable algebra;
};
std::vector<CommutativeCase> commutative_algebras();

/// R[x]/(x^3 - c0 - c1 x - c2 x^2) in the basis (1, x, x^2).
AlgebraTable cubic_algebra(double c0, double c1, double c2);
/// Non-commutative associative dimension-3 family. g112, g121, g212, g221
/// are Gamma^1_{12}, Gamma^1_{21}, Gamma^2_{12}, Gamma^2_{21}.
AlgebraTable noncommutative_dim3(double g112, double g121, double g212, double g221);

/// Random coefficient invertible on both sides.
AlgElem random_invertible(const AlgebraTable& T, std::mt19937_64& rng);

struct Dim3Sample {
  std::string family;
  std::vector<double> params;
  CRConditionSet conditions;  // q = 1, n = 3, invertible coefficients
};
/// count samples alternating between the two families.
std::vector<Dim3Sample> dim3_samples(int count, std::uint64_t seed);

/// Test functions. Complex ones live on R^2, quaternionic ones on R^4.
AlgFunction complex_polynomial(const std::vector<double>& real_coeffs);  // sum c_k z^k
AlgPolynomial fueter_variable(int l);                                    // x_l e_0 - x_0 e_l
AlgFunction constant_function(const AlgElem& c);
/// f(y) = y_i^2 e_0 in n variables over an algebra of dimension dim.
AlgFunction coordinate_square(int n, int dim, int i);

/// Named function for the reproduce command; n and dim must match.
AlgFunction function_by_name(const std::string& name, int n, int dim);
std::vector<std::string> function_names();

}  // namespace hypercauchy::gallery

#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "hypercauchy/algebra.hpp"

using namespace hypercauchy;

namespace {

AlgElem e(int dim, int k) { return AlgElem::basis(dim, k); }

bool near(const AlgElem& a, const AlgElem& b, double tol = 1e-14) { return (a - b).norm() <= tol; }

// Independent quaternion product (Hamilton).
std::array<double, 4> hamilton(const std::array<double, 4>& p, const std::array<double, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

}  // namespace

TEST_CASE("quaternion products follow Hamilton's rules") {
  AlgebraTable H = builtin(Builtin::quaternion);
  CHECK(near(mul(e(4, 1), e(4, 2), H), e(4, 3)));
  CHECK(near(mul(e(4, 2), e(4, 1), H), -e(4, 3)));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    std::array<double, 4> p{g(rng), g(rng), g(rng), g(rng)}, q{g(rng), g(rng), g(rng), g(rng)};
    auto r = hamilton(p, q);
    AlgElem got = mul(AlgElem{p[0], p[1], p[2], p[3]}, AlgElem{q[0], q[1], q[2], q[3]}, H);
    for (int k = 0; k < 4; ++k) CHECK(got[k] == doctest::Approx(r[k]).epsilon(1e-14));
  }
}

TEST_CASE("unit law and bilinearity") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (const char* name : {"complex", "quaternion", "m2r", "clifford(2,3)", "tessarine", "octonion", "sedenion"}) {
    AlgebraTable T = builtin(std::string(name));
    const int d = T.dim();
    AlgElem a(d), b(d), c(d);
    for (int s = 0; s < d; ++s) {
      a[s] = g(rng);
      b[s] = g(rng);
      c[s] = g(rng);
    }
    CHECK(near(mul(AlgElem::unit(d), a, T), a, 0.0));
    CHECK(near(mul(a, AlgElem::unit(d), T), a, 0.0));
    const double alpha = 1.7;
    CHECK(near(mul(alpha * a + b, c, T), alpha * mul(a, c, T) + mul(b, c, T), 1e-13));
  }
}

TEST_CASE("mul rejects mismatched dimensions") {
  AlgebraTable H = builtin(Builtin::quaternion);
  CHECK_THROWS_AS(mul(AlgElem(2), AlgElem(4), H), DimensionMismatch);
}

TEST_CASE("M2(R) table matches 2x2 matrix products") {
  AlgebraTable M = builtin(Builtin::m2r);
  CHECK(near(mul(e(4, 1), e(4, 2), M), e(4, 3)));
  CHECK(near(mul(e(4, 2), e(4, 1), M), e(4, 0) - e(4, 3)));
  CHECK(near(mul(e(4, 3), e(4, 1), M), e(4, 1)));
  CHECK(near(mul(e(4, 1), e(4, 3), M), AlgElem(4)));
  CHECK(near(mul(e(4, 3), e(4, 3), M), e(4, 3)));
  CHECK(check_associative(M) == 0.0);
  CHECK_FALSE(check_commutative(M));
}

TEST_CASE("validate_unit") {
  CHECK(validate_unit(builtin(Builtin::quaternion)));
  CHECK(validate_unit(clifford_algebra(2, 3)));
  AlgebraTable H = builtin(Builtin::quaternion);
  std::vector<double> g = H.gamma_flat();
  g[(0 * 4 + 1) * 4 + 1] = 0.0;
  CHECK_FALSE(validate_unit(AlgebraTable(H.basis_names(), g)));
}

TEST_CASE("Clifford table") {
  const double a1 = 2, a2 = 3;
  AlgebraTable C = clifford_algebra(a1, a2);
  CHECK(near(mul(e(4, 1), e(4, 3), C), a1 * e(4, 2)));
  CHECK(near(mul(e(4, 2), e(4, 1), C), -e(4, 3)));
  CHECK(near(mul(e(4, 1), e(4, 1), C), a1 * e(4, 0)));
  CHECK(near(mul(e(4, 3), e(4, 3), C), -a1 * a2 * e(4, 0)));
  CHECK(check_associative(C) == 0.0);
  // e3 = e1 e2 must be consistent with associativity.
  CHECK(near(mul(e(4, 3), e(4, 3), C), mul(mul(mul(e(4, 1), e(4, 2), C), e(4, 1), C), e(4, 2), C)));
}

TEST_CASE("associativity and commutativity flags") {
  for (const char* name : {"complex", "quaternion", "m2r", "clifford(1,-2)", "tessarine"}) {
    AlgebraTable T = builtin(std::string(name));
    CHECK_MESSAGE(check_associative(T) == 0.0, name);
    CHECK(T.associative());
  }
  CHECK(check_associative(builtin(Builtin::octonion)) > 0.5);
  CHECK(check_associative(builtin(Builtin::sedenion)) > 0.5);
  CHECK(check_commutative(builtin(Builtin::tessarine)));
  CHECK_FALSE(check_commutative(builtin(Builtin::quaternion)));
  CHECK(check_commutative(dim2_algebra(0.3, -1.2)));
}

TEST_CASE("tessarine and complex squares") {
  AlgebraTable T = builtin(Builtin::tessarine);
  CHECK(near(mul(e(4, 3), e(4, 3), T), -e(4, 0)));
  CHECK(near(mul(e(4, 2), e(4, 2), T), e(4, 0)));
  AlgebraTable C = builtin(Builtin::complex);
  CHECK(near(mul(e(2, 1), e(2, 1), C), -e(2, 0)));
  CHECK(C.gamma_flat() == dim2_algebra(-1, 0).gamma_flat());
}

TEST_CASE("try_invert") {
  AlgebraTable H = builtin(Builtin::quaternion);
  CHECK(near(try_invert(AlgElem::unit(4), H, Side::left), AlgElem::unit(4)));
  CHECK(near(try_invert(e(4, 1), H, Side::left), -e(4, 1)));
  CHECK(near(try_invert(e(4, 1), H, Side::right), -e(4, 1)));
  AlgElem q{1.0, 2.0, -0.5, 0.25};
  AlgElem inv = try_invert(q, H, Side::right);
  CHECK(near(mul(q, inv, H), AlgElem::unit(4), 1e-12));
  AlgebraTable M = builtin(Builtin::m2r);
  CHECK_THROWS_AS(try_invert(e(4, 1), M, Side::left), SingularElement);
  CHECK_THROWS_AS(try_invert(e(4, 1), M, Side::right), SingularElement);
  CHECK_FALSE(is_invertible(e(4, 3), M));
}

TEST_CASE("Cayley-Dickson doubling") {
  AlgebraTable R = builtin(Builtin::reals);
  CHECK(cayley_dickson(R).gamma_flat() == builtin(Builtin::complex).gamma_flat());
  CHECK(cayley_dickson(builtin(Builtin::complex)).gamma_flat() == builtin(Builtin::quaternion).gamma_flat());

  AlgebraTable O = cayley_dickson(builtin(Builtin::quaternion));
  CHECK(O.dim() == 8);
  CHECK(O.unital());
  for (int i = 1; i < 8; ++i) {
    CHECK(near(mul(e(8, i), e(8, i), O), -e(8, 0)));
    for (int j = i + 1; j < 8; ++j) CHECK(near(mul(e(8, i), e(8, j), O), -mul(e(8, j), e(8, i), O)));
  }
  AlgebraTable S = cayley_dickson(O);
  CHECK(S.dim() == 16);
  CHECK(S.unital());
}

TEST_CASE("octonion norm is multiplicative, sedenion has zero divisors") {
  AlgebraTable O = builtin(Builtin::octonion);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    AlgElem a(8), b(8);
    for (int s = 0; s < 8; ++s) {
      a[s] = g(rng);
      b[s] = g(rng);
    }
    CHECK(mul(a, b, O).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
  }
  // Search sums of two basis elements for a zero divisor.
  AlgebraTable S = builtin(Builtin::sedenion);
  bool found = false;
  for (int a = 1; a < 16 && !found; ++a)
    for (int b = a + 1; b < 16 && !found; ++b)
      for (int c = 1; c < 16 && !found; ++c)
        for (int d = c + 1; d < 16 && !found; ++d)
          for (double s : {1.0, -1.0})
            if (mul(e(16, a) + e(16, b), e(16, c) + s * e(16, d), S).norm() < 1e-12) found = true;
  CHECK(found);
}

TEST_CASE("sum of basis squares") {
  CHECK(sum_of_basis_squares(builtin(Builtin::tessarine)).is_zero(1e-15));
  CHECK(sum_of_basis_squares(builtin(Builtin::complex)).is_zero(1e-15));
  AlgElem c = sum_of_basis_squares(clifford_algebra(2, 3));
  CHECK(c.is_zero(1e-15));
  AlgElem c2 = sum_of_basis_squares(clifford_algebra(1, 1));
  CHECK(c2[0] == doctest::Approx(1 + 1 + 1 - 1));
}

TEST_CASE("builtin names") {
  CHECK(builtin(std::string("dim2(2,-1)")).gamma(1, 1, 0) == 2.0);
  CHECK(builtin(std::string("dim2(2,-1)")).gamma(1, 1, 1) == -1.0);
  CHECK_THROWS_AS(builtin(std::string("biquaternion")), UnknownAlgebra);
  CHECK_THROWS_AS(builtin(std::string("dim2(1)")), UnknownAlgebra);
  CHECK_THROWS_AS(builtin(std::string("quaternion(1)")), UnknownAlgebra);
  CHECK(is_builtin_name("clifford(1,2)"));
  CHECK_FALSE(is_builtin_name("my_algebra.json"));
}

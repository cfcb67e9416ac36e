#include "hypercauchy/gallery.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>

namespace hypercauchy::gallery {

namespace {

CRConditionSet single_with_basis(const AlgebraTable& T, std::string label) {
  CRConditionSet C(T, T.dim(), 1);
  for (int j = 0; j < T.dim(); ++j) C.coeff(0, j) = AlgElem::basis(T.dim(), j);
  C.label = std::move(label);
  return C;
}

AlgElem random_elem(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  AlgElem a(dim);
  for (int s = 0; s < dim; ++s) a[s] = normal(rng);
  return a;
}

}  // namespace

CRConditionSet dbar() { return single_with_basis(builtin(Builtin::complex), "dbar"); }
CRConditionSet fueter() { return single_with_basis(builtin(Builtin::quaternion), "fueter"); }

CRConditionSet octonion_single() {
  CRConditionSet C = anticommuting_single_condition(builtin(Builtin::octonion));
  C.label = "octonion-single";
  return C;
}

CRConditionSet sedenion_single() {
  CRConditionSet C = anticommuting_single_condition(builtin(Builtin::sedenion));
  C.label = "sedenion-single";
  return C;
}

CRConditionSet tessarine_single() { return single_with_basis(builtin(Builtin::tessarine), "tessarine-single"); }

CRConditionSet m2r_first(std::uint64_t seed) {
  AlgebraTable T = builtin(Builtin::m2r);
  std::mt19937_64 rng(seed);
  CRConditionSet C(T, 4, 1);
  C.coeff(0, 0) = AlgElem::unit(4);
  for (int j = 1; j < 4; ++j) C.coeff(0, j) = random_invertible(T, rng);
  C.label = "m2r-q1";
  return C;
}

CRConditionSet m2r_principal(std::uint64_t seed, double a1, double a2, double a3) {
  AlgebraTable T = builtin(Builtin::m2r);
  std::mt19937_64 rng(seed);
  CRConditionSet C(T, 4, 3);
  const double alpha[3] = {a1, a2, a3};
  for (int m = 0; m < 3; ++m) {
    C.coeff(m, m) = alpha[m] * AlgElem::unit(4);
    C.coeff(m, 3) = random_elem(4, rng);
  }
  C.label = "m2r-q3";
  return C;
}

CRConditionSet dim2_candidate(double a, double b) {
  const double disc = a + 0.25 * b * b;
  if (disc == 0.0) throw InvalidConditions("dim2_candidate: a + b^2/4 must be non-zero");
  AlgebraTable T = dim2_algebra(a, b);
  CRConditionSet C(T, 2, 1);
  C.coeff(0, 0) = AlgElem::unit(2);
  C.coeff(0, 1) = (1.0 / std::sqrt(std::abs(disc))) * AlgElem{-0.5 * b, 1.0};
  C.label = "dim2-candidate";
  return C;
}

std::vector<std::string> names() {
  return {"dbar",           "fueter",          "dbar-induced2",   "fueter-induced2",
          "complex-adiff",  "tessarine-adiff", "splitcomplex-adiff", "clifford23-adiff",
          "octonion-single", "sedenion-single", "tessarine-single", "m2r-q1",
          "m2r-q3"};
}

bool has(const std::string& name) {
  for (const auto& n : names())
    if (n == name) return true;
  return false;
}

CRConditionSet by_name(const std::string& name) {
  CRConditionSet C;
  if (name == "dbar") return dbar();
  if (name == "fueter") return fueter();
  if (name == "dbar-induced2") C = induced_conditions(dbar(), 2);
  else if (name == "fueter-induced2") C = induced_conditions(fueter(), 2);
  else if (name == "complex-adiff") C = a_differentiable_conditions(builtin(Builtin::complex));
  else if (name == "tessarine-adiff") C = a_differentiable_conditions(builtin(Builtin::tessarine));
  else if (name == "splitcomplex-adiff") C = a_differentiable_conditions(dim2_algebra(1, 0));
  else if (name == "clifford23-adiff") C = a_differentiable_conditions(clifford_algebra(2, 3));
  else if (name == "octonion-single") return octonion_single();
  else if (name == "sedenion-single") return sedenion_single();
  else if (name == "tessarine-single") return tessarine_single();
  else if (name == "m2r-q1") return m2r_first();
  else if (name == "m2r-q3") return m2r_principal();
  else throw InvalidConditions("unknown condition set '" + name + "'");
  C.label = name;
  return C;
}

std::vector<CommutativeCase> commutative_algebras() {
  std::vector<CommutativeCase> out;
  out.push_back({"complex", builtin(Builtin::complex)});
  out.push_back({"tessarine", builtin(Builtin::tessarine)});
  out.push_back({"dim2(1,0)", dim2_algebra(1, 0)});
  for (double a : {-1.0, -2.0, 2.0, -0.5, 0.5}) {
    char label[48];
    std::snprintf(label, sizeof label, "clifford1(%g)", a);
    out.push_back({label, dim2_algebra(a, 0)});
  }
  return out;
}

AlgebraTable cubic_algebra(double c0, double c1, double c2) {
  TableBuilder t({"1", "x", "x2"});
  const AlgElem x3{c0, c1, c2};
  const AlgElem x4 = AlgElem{0.0, c0, c1} + c2 * x3;
  t.set(1, 1, 2, 1.0);
  t.set(1, 2, x3).set(2, 1, x3);
  t.set(2, 2, x4);
  return t.build("cubic");
}

AlgebraTable noncommutative_dim3(double g112, double g121, double g212, double g221) {
  TableBuilder t({"e0", "e1", "e2"});
  t.set(1, 1, AlgElem{-g212 * g221, g212 + g221, 0.0});
  t.set(1, 2, AlgElem{-g112 * g212, g112, g212});
  t.set(2, 1, AlgElem{-g121 * g221, g121, g221});
  t.set(2, 2, AlgElem{-g112 * g121, 0.0, g112 + g121});
  return t.build("noncom3");
}

AlgElem random_invertible(const AlgebraTable& T, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    AlgElem a = random_elem(T.dim(), rng);
    if (is_invertible(a, T)) return a;
  }
  throw SingularElement("could not draw an invertible element");
}

std::vector<Dim3Sample> dim3_samples(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Dim3Sample> out;
  for (int t = 0; t < count; ++t) {
    Dim3Sample s;
    AlgebraTable T;
    if (t % 2 == 0) {
      s.family = "cubic";
      s.params = {normal(rng), normal(rng), normal(rng)};
      T = cubic_algebra(s.params[0], s.params[1], s.params[2]);
    } else {
      s.family = "noncommutative";
      s.params = {normal(rng), normal(rng), normal(rng), normal(rng)};
      T = noncommutative_dim3(s.params[0], s.params[1], s.params[2], s.params[3]);
    }
    CRConditionSet C(T, 3, 1);
    for (int j = 0; j < 3; ++j) C.coeff(0, j) = random_invertible(T, rng);
    C.label = s.family + "#" + std::to_string(t);
    s.conditions = std::move(C);
    out.push_back(std::move(s));
  }
  return out;
}

AlgFunction complex_polynomial(const std::vector<double>& real_coeffs) {
  auto eval = [real_coeffs](std::complex<double> z, bool derivative) {
    std::complex<double> v = 0.0;
    for (std::size_t k = real_coeffs.size(); k-- > 0;) {
      if (derivative) {
        if (k == 0) break;
        v = v * z + static_cast<double>(k) * real_coeffs[k];
      } else {
        v = v * z + real_coeffs[k];
      }
    }
    return v;
  };
  auto value = [eval](std::span<const double> x) {
    auto v = eval({x[0], x[1]}, false);
    return AlgElem{v.real(), v.imag()};
  };
  auto partial = [eval](int j, std::span<const double> x) {
    std::complex<double> d = eval({x[0], x[1]}, true);
    if (j == 1) d *= std::complex<double>(0.0, 1.0);
    return AlgElem{d.real(), d.imag()};
  };
  return AlgFunction(value, partial);
}

AlgPolynomial fueter_variable(int l) {
  AlgPolynomial p(4, 1, 4);
  Exponent xl(4, 0), x0(4, 0);
  xl[l] = 1;
  x0[0] = 1;
  p.coeff(xl) += AlgElem::unit(4);
  p.coeff(x0) -= AlgElem::basis(4, l);
  return p;
}

AlgFunction constant_function(const AlgElem& c) {
  return AlgFunction([c](std::span<const double>) { return c; },
                     [c](int, std::span<const double>) { return AlgElem(c.dim()); });
}

AlgFunction coordinate_square(int n, int dim, int i) {
  AlgPolynomial p(n, 2, dim);
  Exponent e(n, 0);
  e[i] = 2;
  p.coeff(e) = AlgElem::unit(dim);
  return AlgFunction::polynomial(std::move(p));
}

std::vector<std::string> function_names() {
  return {"one", "z", "z2", "z3+2z", "zeta1", "zeta2", "zeta3", "y1sq"};
}

AlgFunction function_by_name(const std::string& name, int n, int dim) {
  auto need = [&](int nn, int dd) {
    if (n != nn || dim != dd)
      throw InvalidConditions("function '" + name + "' needs n=" + std::to_string(nn) + " over an algebra of dimension " +
                              std::to_string(dd));
  };
  if (name == "one") return constant_function(AlgElem::unit(dim));
  if (name == "z") return need(2, 2), complex_polynomial({0, 1});
  if (name == "z2") return need(2, 2), complex_polynomial({0, 0, 1});
  if (name == "z3+2z") return need(2, 2), complex_polynomial({0, 2, 0, 1});
  if (name == "zeta1" || name == "zeta2" || name == "zeta3") {
    need(4, 4);
    return AlgFunction::polynomial(fueter_variable(name.back() - '0'));
  }
  if (name == "y1sq") return coordinate_square(n, dim, 0);
  throw InvalidConditions("unknown function '" + name + "'");
}

}  // namespace hypercauchy::gallery

#include "hypercauchy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypercauchy/parallel.hpp"

namespace hypercauchy {

BallDomain::BallDomain(Point c, double r) : center(std::move(c)), radius(r) {
  if (!(r > 0.0)) throw PointOutsideDomain("ball radius must be positive");
}

bool BallDomain::strictly_contains(std::span<const double> x) const {
  double d2 = 0.0;
  for (std::size_t i = 0; i < center.size(); ++i) d2 += (x[i] - center[i]) * (x[i] - center[i]);
  return d2 < radius * radius;
}

void QuadratureSpec::validate(int n) const {
  if (nodes < 8) throw Error("quadrature needs at least 8 nodes");
  if (radial_nodes != 0 && radial_nodes < 8) throw Error("radial quadrature needs at least 8 nodes");
  if (scheme == Scheme::product_gauss && n > 4)
    throw Error("product Gauss quadrature supports n <= 4; use monte_carlo");
  if (error_bound && !(*error_bound > 0.0)) throw Error("error bound must be positive");
}

double multiplication_bound(const AlgebraTable& T) {
  double s = 0.0;
  for (double g : T.gamma_flat()) s += g * g;
  return std::sqrt(s);
}

namespace {

SphereRule make_rule(int n, const QuadratureSpec& Q, bool coarse) {
  if (Q.scheme == Scheme::product_gauss) {
    const int per = coarse ? std::max(4, Q.nodes / 2) : Q.nodes;
    return product_sphere_rule(n, per);
  }
  const int count = coarse ? std::max(4, Q.nodes / 2) : Q.nodes;
  return monte_carlo_sphere_rule(n, count, Q.seed);
}

void check_inputs(std::span<const double> x, const BallDomain& D, const CauchyKernel& K, const QuadratureSpec& Q) {
  const int n = K.n();
  if (D.n() != n || static_cast<int>(x.size()) != n)
    throw DimensionMismatch("point and domain must have the kernel's dimension");
  if (!D.strictly_contains(x)) throw PointOutsideDomain("evaluation point is not strictly inside the ball");
  Q.validate(n);
}

// Sums term(p, out) over p in [0, count) component by component, pairwise.
template <class Term>
AlgElem accumulate(std::size_t count, int dim, const Term& term) {
  std::vector<double> vals(count * static_cast<std::size_t>(dim));
  parallel_for(count, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      AlgElem v = term(p);
      for (int s = 0; s < dim; ++s) vals[static_cast<std::size_t>(s) * count + p] = v[s];
    }
  });
  AlgElem out(dim);
  for (int s = 0; s < dim; ++s) out[s] = pairwise_sum(&vals[static_cast<std::size_t>(s) * count], count);
  return out;
}

AlgElem boundary_term(const AlgFunction& f, std::span<const double> x, const BallDomain& D, const CauchyKernel& K,
                      const SphereRule& S) {
  const int n = K.n();
  const double area_scale = std::pow(D.radius, n - 1);
  return accumulate(S.size(), K.dim(), [&](std::size_t p) {
    const double* w = S.point(p);
    Point y(n);
    for (int i = 0; i < n; ++i) y[i] = D.center[i] + D.radius * w[i];
    std::span<const double> nu(w, n);
    return (S.weights[p] * area_scale) * mul(f(y), K.flux(x, y, nu), K.algebra());
  });
}

AlgElem volume_term(const AlgFunction& f, std::span<const double> x, const BallDomain& D, const CauchyKernel& K,
                    const SphereRule& S, int radial) {
  const int n = K.n();
  const CRConditionSet& C = K.conditions();
  const GaussRule unit = gauss_legendre(radial, 0.0, 1.0);
  Point d(n);
  for (int i = 0; i < n; ++i) d[i] = x[i] - D.center[i];
  double d2 = 0.0;
  for (double v : d) d2 += v * v;

  const std::size_t count = S.size() * unit.x.size();
  return accumulate(count, K.dim(), [&](std::size_t idx) {
    const std::size_t p = idx / unit.x.size(), r_idx = idx % unit.x.size();
    const double* w = S.point(p);
    double dw = 0.0;
    for (int i = 0; i < n; ++i) dw += d[i] * w[i];
    const double rho = -dw + std::sqrt(dw * dw - d2 + D.radius * D.radius);
    const double r = rho * unit.x[r_idx];
    Point y(n);
    for (int i = 0; i < n; ++i) y[i] = x[i] + r * w[i];
    // With y = x + r w, phi_m / r^n times the Jacobian r^{n-1} is
    // sum_i b^i_m w_i, free of the singularity.
    std::vector<AlgElem> u = apply_cr_operator(C, f, y);
    AlgElem acc(K.dim());
    for (int m = 0; m < C.q; ++m) {
      AlgElem dir(K.dim());
      for (int i = 0; i < n; ++i) dir += w[i] * K.solution().coeff(m, i);
      acc += mul(u[m], dir, K.algebra());
    }
    return (S.weights[p] * unit.w[r_idx] * rho) * acc;
  });
}

void finish(ReproductionReport& rep, const AlgFunction& f, std::span<const double> x, const QuadratureSpec& Q) {
  rep.expected = f(x);
  rep.abs_error = (rep.expected - rep.computed).norm();
  const double scale = rep.expected.norm();
  rep.rel_error = scale > 0.0 ? rep.abs_error / scale : rep.abs_error;
  if (Q.error_bound && rep.error_estimate > *Q.error_bound) {
    std::ostringstream os;
    os << "quadrature error estimate " << rep.error_estimate << " exceeds bound " << *Q.error_bound;
    throw QuadratureUnderResolved(os.str(), rep.error_estimate);
  }
}

}  // namespace

ReproductionReport boundary_reproduce(const AlgFunction& f, std::span<const double> x, const BallDomain& D,
                                      const CauchyKernel& K, const QuadratureSpec& Q) {
  check_inputs(x, D, K, Q);
  const SphereRule fine = make_rule(K.n(), Q, false);
  const SphereRule coarse = make_rule(K.n(), Q, true);
  ReproductionReport rep;
  rep.boundary_term = boundary_term(f, x, D, K, fine);
  rep.volume_term = AlgElem(K.dim());
  rep.computed = rep.boundary_term;
  rep.nodes = static_cast<long long>(fine.size());
  rep.error_estimate = (rep.computed - boundary_term(f, x, D, K, coarse)).norm();
  finish(rep, f, x, Q);
  return rep;
}

ReproductionReport verify_representation(const AlgFunction& f, std::span<const double> x, const BallDomain& D,
                                         const CauchyKernel& K, const QuadratureSpec& Q) {
  check_inputs(x, D, K, Q);
  const int radial = Q.radial_nodes ? Q.radial_nodes : Q.nodes;
  const SphereRule fine = make_rule(K.n(), Q, false);
  const SphereRule coarse = make_rule(K.n(), Q, true);
  ReproductionReport rep;
  rep.boundary_term = boundary_term(f, x, D, K, fine);
  rep.volume_term = volume_term(f, x, D, K, fine, radial);
  rep.computed = rep.boundary_term - rep.volume_term;
  rep.nodes = static_cast<long long>(fine.size()) * (1 + radial);
  AlgElem rough = boundary_term(f, x, D, K, coarse) - volume_term(f, x, D, K, coarse, std::max(4, radial / 2));
  rep.error_estimate = (rep.computed - rough).norm();
  finish(rep, f, x, Q);
  return rep;
}

DerivativeReport derivative_via_kernel(const AlgFunction& f, std::span<const double> x, int i, const BallDomain& D,
                                       const CauchyKernel& K, const QuadratureSpec& Q) {
  check_inputs(x, D, K, Q);
  const int n = K.n();
  if (i < 0 || i >= n) throw DimensionMismatch("derivative direction out of range");
  const double area_scale = std::pow(D.radius, n - 1);

  auto integrate = [&](const SphereRule& S, double* sup_f, double* kernel_l1) {
    std::vector<double> fmax(S.size()), kabs(S.size());
    AlgElem v = accumulate(S.size(), K.dim(), [&](std::size_t p) {
      const double* w = S.point(p);
      Point y(n);
      for (int k = 0; k < n; ++k) y[k] = D.center[k] + D.radius * w[k];
      std::span<const double> nu(w, n);
      AlgElem fy = f(y);
      AlgElem kd = K.flux_derivative(i, x, y, nu);
      fmax[p] = fy.norm();
      kabs[p] = S.weights[p] * area_scale * kd.norm();
      return (S.weights[p] * area_scale) * mul(fy, kd, K.algebra());
    });
    if (sup_f) *sup_f = *std::max_element(fmax.begin(), fmax.end());
    if (kernel_l1) *kernel_l1 = pairwise_sum(kabs.data(), kabs.size());
    return v;
  };

  DerivativeReport rep;
  const SphereRule fine = make_rule(n, Q, false);
  double kernel_l1 = 0.0;
  rep.value = integrate(fine, &rep.sup_f, &kernel_l1);
  rep.nodes = static_cast<long long>(fine.size());
  rep.error_estimate = (rep.value - integrate(make_rule(n, Q, true), nullptr, nullptr)).norm();
  rep.kernel_constant = D.radius * multiplication_bound(K.algebra()) * kernel_l1;
  rep.bound = rep.kernel_constant * rep.sup_f / D.radius;
  rep.estimate_holds = rep.value.norm() <= rep.bound * (1.0 + 1e-12);
  rep.expected = f.partial(i, x);
  rep.abs_error = (rep.expected - rep.value).norm();
  const double scale = rep.expected.norm();
  rep.rel_error = scale > 0.0 ? rep.abs_error / scale : rep.abs_error;
  if (Q.error_bound && rep.error_estimate > *Q.error_bound) {
    std::ostringstream os;
    os << "quadrature error estimate " << rep.error_estimate << " exceeds bound " << *Q.error_bound;
    throw QuadratureUnderResolved(os.str(), rep.error_estimate);
  }
  return rep;
}

}  // namespace hypercauchy

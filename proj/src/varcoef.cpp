#include "hypercauchy/varcoef.hpp"

#include "hypercauchy/parallel.hpp"

namespace hypercauchy {

CRConditionSet VarCRConditionSet::at(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("coefficient point has wrong dimension");
  CRConditionSet C(algebra, n, q);
  C.a = a_fn(x);
  C.validate();
  return C;
}

VarCRConditionSet VarCRConditionSet::constant(const CRConditionSet& C) {
  VarCRConditionSet V;
  V.algebra = C.algebra;
  V.n = C.n;
  V.q = C.q;
  V.a_fn = [a = C.a](std::span<const double>) { return a; };
  return V;
}

VarCRConditionSet VarCRConditionSet::from_affine(AlgebraTable T, int n, int q, AffineCoefficients data) {
  const std::size_t nq = static_cast<std::size_t>(n) * q;
  if (data.base.size() != nq || data.slope.size() != nq * n || static_cast<int>(data.base_point.size()) != n)
    throw DimensionMismatch("affine coefficient data has wrong shape");
  VarCRConditionSet V;
  V.algebra = std::move(T);
  V.n = n;
  V.q = q;
  V.a_fn = [data, n, q](std::span<const double> x) {
    std::vector<AlgElem> a = data.base;
    for (int m = 0; m < q; ++m)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a[m * n + j] += (x[i] - data.base_point[i]) * data.d(m, j, i, n);
    return a;
  };
  V.affine = std::move(data);
  return V;
}

std::vector<PointwiseReport> pointwise_admissibility(const VarCRConditionSet& V, const std::vector<Point>& points,
                                                     const AdmissibilityOptions& opt) {
  std::vector<PointwiseReport> out(points.size());
  parallel_for(points.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      out[p].x = points[p];
      try {
        out[p].report = solve_admissibility(V.at(points[p]), opt);
      } catch (const IllConditioned& e) {
        out[p].ill_conditioned = true;
        out[p].message = e.what();
      }
    }
  });
  return out;
}

AffineValidation validate_affine(const VarCRConditionSet& V, double tol) {
  if (!V.affine) throw NoAffineData("condition set carries no affine coefficient data");
  const AffineCoefficients& A = *V.affine;
  const int n = V.n;
  AffineValidation rep;
  for (int m = 0; m < V.q; ++m) {
    for (int j = 0; j < n; ++j)
      for (int i = j + 1; i < n; ++i) {
        const double s = (A.d(m, j, i, n) + A.d(m, i, j, n)).norm();
        if (s > tol) rep.violations.push_back({m, j, i, "antisymmetry", s});
      }
    for (int j = 1; j < n; ++j) {
      const double s = (A.d(m, j, j, n) - A.d(m, 0, 0, n)).norm();
      if (s > tol) rep.violations.push_back({m, j, j, "diagonal", s});
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

}  // namespace hypercauchy

#include "hypercauchy/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hypercauchy/quadrature.hpp"

namespace hypercauchy {

CRConditionSet::CRConditionSet(AlgebraTable T, int n_vars, int q_conds)
    : algebra(std::move(T)), n(n_vars), q(q_conds) {
  if (n < 1 || q < 1) throw InvalidConditions("condition set needs n >= 1 and q >= 1");
  a.assign(static_cast<std::size_t>(n) * q, AlgElem(algebra.dim()));
}

void CRConditionSet::validate() const {
  if (n < 1 || q < 1) throw InvalidConditions("condition set needs n >= 1 and q >= 1");
  if (a.size() != static_cast<std::size_t>(n) * q)
    throw InvalidConditions("condition set has " + std::to_string(a.size()) + " coefficients, expected q*n = " +
                            std::to_string(n * q));
  for (const auto& x : a)
    if (x.dim() != algebra.dim())
      throw DimensionMismatch("coefficient of dimension " + std::to_string(x.dim()) + " in algebra of dimension " +
                              std::to_string(algebra.dim()));
}

double kernel_normalization(int n) { return 1.0 / (n * ball_volume(n)); }

LinearSystem assemble_system(const CRConditionSet& C) {
  C.validate();
  const int n = C.n, q = C.q, d = C.dim();
  const double kappa = kernel_normalization(n);
  const int blocks = n * (n + 1) / 2;
  LinearSystem sys;
  sys.A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(blocks) * d, static_cast<Eigen::Index>(q) * n * d);
  sys.rhs = Eigen::VectorXd::Zero(sys.A.rows());

  // a^j_m b^i_m is linear in b^i_m through left multiplication by a^j_m.
  std::vector<Eigen::MatrixXd> L(C.a.size());
  for (std::size_t k = 0; k < C.a.size(); ++k) L[k] = C.algebra.left_mul_matrix(C.a[k]);
  auto Lm = [&](int m, int j) -> const Eigen::MatrixXd& { return L[static_cast<std::size_t>(m) * n + j]; };

  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, row += d) {
      for (int m = 0; m < q; ++m) {
        if (i == j) {
          sys.A.block(row, unknown_index(m, j, 0, n, d), d, d) += Lm(m, j);
        } else {
          sys.A.block(row, unknown_index(m, i, 0, n, d), d, d) += Lm(m, j);
          sys.A.block(row, unknown_index(m, j, 0, n, d), d, d) += Lm(m, i);
        }
      }
      if (i == j) sys.rhs[row] = kappa;
    }
  return sys;
}

std::vector<AlgElem> auxiliary_matrix(const CRConditionSet& C, const std::vector<AlgElem>& b) {
  const int n = C.n, d = C.dim();
  const double vol = ball_volume(n);
  std::vector<AlgElem> c(static_cast<std::size_t>(n) * n, AlgElem(d));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      AlgElem s(d);
      for (int m = 0; m < C.q; ++m) s += mul(C.coeff(m, j), b[static_cast<std::size_t>(m) * n + i], C.algebra);
      c[static_cast<std::size_t>(j) * n + i] = vol * s;
    }
  return c;
}

double cond12_residual(const CRConditionSet& C, const std::vector<AlgElem>& b) {
  const int n = C.n, d = C.dim();
  const AlgElem target = kernel_normalization(n) * AlgElem::unit(d);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      AlgElem s(d);
      for (int m = 0; m < C.q; ++m) {
        const AlgElem& bi = b[static_cast<std::size_t>(m) * n + i];
        const AlgElem& bj = b[static_cast<std::size_t>(m) * n + j];
        if (i == j) {
          s += mul(C.coeff(m, j), bj, C.algebra);
        } else {
          s += mul(C.coeff(m, j), bi, C.algebra);
          s += mul(C.coeff(m, i), bj, C.algebra);
        }
      }
      if (i == j) s -= target;
      worst = std::max(worst, s.norm());
    }
  return worst;
}

AdmissibilityReport solve_admissibility(const CRConditionSet& C, const AdmissibilityOptions& opt) {
  LinearSystem sys = assemble_system(C);
  const int n = C.n, q = C.q, d = C.dim();

  // Row-normalize [A | rhs]; all-zero rows carry no information.
  for (Eigen::Index r = 0; r < sys.A.rows(); ++r) {
    const double s = std::sqrt(sys.A.row(r).squaredNorm() + sys.rhs[r] * sys.rhs[r]);
    if (s > 0.0) {
      sys.A.row(r) /= s;
      sys.rhs[r] /= s;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(sys.A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(opt.rank_tol);
  const auto& sv = svd.singularValues();
  const int rank = static_cast<int>(svd.rank());
  Eigen::VectorXd x = svd.solve(sys.rhs);

  AdmissibilityReport rep;
  rep.rank = rank;
  rep.free_dim = static_cast<int>(sys.A.cols()) - rank;
  if (rank > 0 && rank < sv.size() && sv[rank] > 0.0) rep.gap = sv[rank - 1] / sv[rank];
  const double rhs_norm = sys.rhs.norm();
  rep.residual = (sys.A * x - sys.rhs).norm() / rhs_norm;
  rep.feasible = rep.residual <= opt.tol;

  if (!rep.feasible && rep.residual < opt.ambiguity_ceiling) {
    std::ostringstream os;
    os << "feasibility undecided: normalized residual " << rep.residual << " lies between tolerance " << opt.tol
       << " and " << opt.ambiguity_ceiling << " (singular value gap " << rep.gap << ")";
    throw IllConditioned(os.str(), rep.residual, rep.gap);
  }

  if (rep.feasible) {
    KernelSolution K;
    K.n = n;
    K.q = q;
    K.b.assign(static_cast<std::size_t>(q) * n, AlgElem(d));
    for (int m = 0; m < q; ++m)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < d; ++s) K.coeff(m, j)[s] = x[unknown_index(m, j, s, n, d)];
    K.c = auxiliary_matrix(C, K.b);
    K.normalization = kernel_normalization(n);
    K.residual = cond12_residual(C, K.b);
    K.nullity = rep.free_dim;
    rep.kernel = std::move(K);
  }
  return rep;
}

CRConditionSet a_differentiable_conditions(const AlgebraTable& T) {
  if (!T.unital()) throw InvalidAlgebra("a_differentiable_conditions: algebra must be unital");
  const int d = T.dim();
  if (d < 2) throw InvalidConditions("a_differentiable_conditions: algebra dimension must be at least 2");
  CRConditionSet C(T, d, d - 1);
  for (int m = 0; m < d - 1; ++m) {
    C.coeff(m, 0) = -AlgElem::basis(d, m + 1);
    C.coeff(m, m + 1) = AlgElem::unit(d);
  }
  C.label = "adiff(" + T.name() + ")";
  return C;
}

CRConditionSet induced_conditions(const CRConditionSet& C, int copies) {
  C.validate();
  if (copies < 1) throw InvalidConditions("induced_conditions: copies must be positive");
  CRConditionSet out(C.algebra, C.n * copies, C.q * copies);
  for (int l = 0; l < copies; ++l)
    for (int m = 0; m < C.q; ++m)
      for (int j = 0; j < C.n; ++j) out.coeff(l * C.q + m, l * C.n + j) = C.coeff(m, j);
  out.label = C.label.empty() ? std::string() : C.label + "^" + std::to_string(copies);
  return out;
}

KernelSolution induced_kernel(const CRConditionSet& C, const KernelSolution& K, int copies) {
  CRConditionSet D = induced_conditions(C, copies);
  const double scale = kernel_normalization(D.n) / K.normalization;
  KernelSolution out;
  out.n = D.n;
  out.q = D.q;
  out.b.assign(static_cast<std::size_t>(D.q) * D.n, AlgElem(C.dim()));
  for (int l = 0; l < copies; ++l)
    for (int m = 0; m < C.q; ++m)
      for (int j = 0; j < C.n; ++j) out.coeff(l * C.q + m, l * C.n + j) = scale * K.coeff(m, j);
  out.c = auxiliary_matrix(D, out.b);
  out.normalization = kernel_normalization(D.n);
  out.residual = cond12_residual(D, out.b);
  return out;
}

EllipticityReport check_ellipticity(const CRConditionSet& C, const KernelSolution& K, int samples,
                                    unsigned long long seed) {
  const int n = C.n, d = C.dim();
  EllipticityReport rep;
  // Coefficient of X_i X_j in sum_m P_m(X) Q_m(X), P_m = sum_j X_j a^j_m, Q_m = sum_i b^i_m X_i.
  const double kappa = kernel_normalization(n);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      AlgElem s(d);
      for (int m = 0; m < C.q; ++m) {
        s += mul(C.coeff(m, j), K.coeff(m, i), C.algebra);
        if (i != j) s += mul(C.coeff(m, i), K.coeff(m, j), C.algebra);
      }
      if (i == j) s[0] -= kappa;
      worst = std::max(worst, s.norm());
    }
  rep.worst_coeff = worst / kappa;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double min_symbol = std::numeric_limits<double>::infinity();
  std::vector<double> X(n);
  for (int t = 0; t < samples; ++t) {
    double nrm = 0.0;
    for (auto& v : X) {
      v = normal(rng);
      nrm += v * v;
    }
    nrm = std::sqrt(nrm);
    double total = 0.0;
    for (int m = 0; m < C.q; ++m) {
      AlgElem P(d);
      for (int j = 0; j < n; ++j) P += (X[j] / nrm) * C.coeff(m, j);
      total += P.coeffs().squaredNorm();
    }
    min_symbol = std::min(min_symbol, total);
  }
  rep.min_symbol = min_symbol;
  rep.holds = rep.worst_coeff <= 1e-8 && min_symbol > 0.0;
  return rep;
}

AlgElem algebra_determinant(const std::vector<AlgElem>& M, int size, const AlgebraTable& T) {
  const int d = T.dim();
  if (size == 0) return AlgElem::unit(d);
  if (size == 1) return M[0];
  AlgElem det(d);
  std::vector<AlgElem> minor(static_cast<std::size_t>(size - 1) * (size - 1));
  for (int col = 0; col < size; ++col) {
    if (M[col].is_zero()) continue;
    for (int r = 1; r < size; ++r) {
      int cc = 0;
      for (int c = 0; c < size; ++c) {
        if (c == col) continue;
        minor[static_cast<std::size_t>(r - 1) * (size - 1) + cc++] = M[static_cast<std::size_t>(r) * size + c];
      }
    }
    AlgElem term = mul(M[col], algebra_determinant(minor, size - 1, T), T);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

namespace {

// Square matrix built from the given rows j of [a^j_m].
std::vector<AlgElem> row_matrix(const CRConditionSet& C, const std::vector<int>& rows) {
  std::vector<AlgElem> M;
  for (int j : rows)
    for (int m = 0; m < C.q; ++m) M.push_back(C.coeff(m, j));
  return M;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> find_principal_rows(const CRConditionSet& C) {
  if (C.q > C.n) return {};
  std::vector<int> rows(C.q);
  for (int i = 0; i < C.q; ++i) rows[i] = i;
  do {
    AlgElem D0 = algebra_determinant(row_matrix(C, rows), C.q, C.algebra);
    if (is_invertible(D0, C.algebra)) return rows;
  } while (next_combination(rows, C.n));
  return {};
}

ConditionAReport commutative_condition_A(const CRConditionSet& C, std::vector<int> principal_rows, double tol) {
  C.validate();
  const AlgebraTable& T = C.algebra;
  if (!T.commutative()) throw NotCommutative("conditions (A) need a commutative algebra");
  const int n = C.n, q = C.q, d = T.dim();
  if (q > n) throw SingularPrincipalMinor("more conditions than variables");
  if (principal_rows.empty()) principal_rows = find_principal_rows(C);
  if (principal_rows.empty()) throw SingularPrincipalMinor("no invertible principal minor");
  if (static_cast<int>(principal_rows.size()) != q)
    throw InvalidConditions("principal_rows must list exactly q rows");

  ConditionAReport rep;
  rep.principal_rows = principal_rows;
  for (int j = 0; j < n; ++j)
    if (std::find(principal_rows.begin(), principal_rows.end(), j) == principal_rows.end())
      rep.other_rows.push_back(j);

  const std::vector<AlgElem> AP = row_matrix(C, principal_rows);
  rep.D0 = algebra_determinant(AP, q, T);
  AlgElem D0inv;
  try {
    D0inv = try_invert(rep.D0, T, Side::left);
  } catch (const SingularElement&) {
    throw SingularPrincipalMinor("principal minor D_0 is not invertible");
  }

  const int r = static_cast<int>(rep.other_rows.size());
  rep.D.assign(static_cast<std::size_t>(r) * q, AlgElem(d));
  rep.lambda.assign(static_cast<std::size_t>(r) * q, AlgElem(d));
  for (int k = 0; k < r; ++k)
    for (int m = 0; m < q; ++m) {
      // Delete principal row m, append row other_rows[k] at the bottom.
      std::vector<int> rows;
      for (int t = 0; t < q; ++t)
        if (t != m) rows.push_back(principal_rows[t]);
      rows.push_back(rep.other_rows[k]);
      AlgElem Dkm = algebra_determinant(row_matrix(C, rows), q, T);
      rep.D[static_cast<std::size_t>(k) * q + m] = Dkm;
      // 1-based sign (-1)^{q+m}.
      const double sign = ((q + m + 1) % 2 == 0) ? 1.0 : -1.0;
      rep.lambda[static_cast<std::size_t>(k) * q + m] = sign * mul(D0inv, Dkm, T);
    }

  const AlgElem D0sq = mul(rep.D0, rep.D0, T);
  const double scale = std::max(1.0, D0sq.norm());
  double worst = 0.0;
  for (int l = 0; l < r; ++l)
    for (int k = 0; k < r; ++k) {
      AlgElem s(d);
      for (int m = 0; m < q; ++m)
        s += mul(rep.D[static_cast<std::size_t>(l) * q + m], rep.D[static_cast<std::size_t>(k) * q + m], T);
      if (l == k) s += D0sq;
      worst = std::max(worst, s.norm() / scale);
    }
  rep.worst_violation = worst;
  rep.holds = worst <= tol;

  // Kernel coefficients: c^j_i = delta e_0 / n on principal pairs, the rest
  // follows from the rows' dependence on the principal rows.
  const double vol = ball_volume(n);
  std::vector<int> pos(n, -1), opos(n, -1);
  for (int t = 0; t < q; ++t) pos[principal_rows[t]] = t;
  for (int k = 0; k < r; ++k) opos[rep.other_rows[k]] = k;
  const AlgElem e0n = (1.0 / n) * AlgElem::unit(d);

  rep.b.assign(static_cast<std::size_t>(q) * n, AlgElem(d));
  for (int i = 0; i < n; ++i) {
    std::vector<AlgElem> rhs(q, AlgElem(d));
    for (int t = 0; t < q; ++t) {
      if (pos[i] >= 0) {
        if (pos[i] == t) rhs[t] = e0n;
      } else {
        // c^{P_t}_i = -c^i_{P_t} = -lambda^i_t / n
        rhs[t] = -(1.0 / n) * rep.lambda[static_cast<std::size_t>(opos[i]) * q + t];
      }
      rhs[t] *= 1.0 / vol;
    }
    for (int m = 0; m < q; ++m) {
      std::vector<AlgElem> M = AP;
      for (int t = 0; t < q; ++t) M[static_cast<std::size_t>(t) * q + m] = rhs[t];
      rep.b[static_cast<std::size_t>(m) * n + i] = mul(D0inv, algebra_determinant(M, q, T), T);
    }
  }
  rep.b_residual = cond12_residual(C, rep.b);
  return rep;
}

CRConditionSet anticommuting_single_condition(const AlgebraTable& T) {
  const int d = T.dim();
  const double tol = AlgebraTable::kFlagTol;
  for (int i = 1; i < d; ++i) {
    AlgElem ei = AlgElem::basis(d, i);
    AlgElem sq = mul(ei, ei, T);
    if ((sq + AlgElem::unit(d)).norm() > tol)
      throw BasisNotAnticommuting("e_" + std::to_string(i) + "^2 != -e_0 in " + T.name());
    for (int j = i + 1; j < d; ++j) {
      AlgElem ej = AlgElem::basis(d, j);
      if ((mul(ei, ej, T) + mul(ej, ei, T)).norm() > tol)
        throw BasisNotAnticommuting("e_" + std::to_string(i) + " and e_" + std::to_string(j) +
                                    " do not anticommute in " + T.name());
    }
  }
  CRConditionSet C(T, d, 1);
  for (int j = 0; j < d; ++j) C.coeff(0, j) = AlgElem::basis(d, j);
  C.label = "single(" + T.name() + ")";
  return C;
}

}  // namespace hypercauchy

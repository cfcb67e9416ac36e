#include "hypercauchy/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace hypercauchy {

AlgElem::AlgElem(std::initializer_list<double> c) : c_(static_cast<Eigen::Index>(c.size())) {
  int k = 0;
  for (double v : c) c_[k++] = v;
}

AlgElem AlgElem::basis(int dim, int k) {
  AlgElem e(dim);
  e.c_[k] = 1.0;
  return e;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (o.dim() != dim()) throw DimensionMismatch("AlgElem: adding elements of different dimension");
  c_ += o.c_;
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  if (o.dim() != dim()) throw DimensionMismatch("AlgElem: subtracting elements of different dimension");
  c_ -= o.c_;
  return *this;
}

AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
AlgElem operator-(AlgElem a) { return a *= -1.0; }
AlgElem operator*(double s, AlgElem a) { return a *= s; }
AlgElem operator*(AlgElem a, double s) { return a *= s; }

AlgebraTable::AlgebraTable(std::vector<std::string> basis_names, std::vector<double> gamma)
    : names_(std::move(basis_names)), g_(std::move(gamma)) {
  dim_ = static_cast<int>(names_.size());
  if (dim_ < 1) throw InvalidAlgebra("algebra must have at least one basis element");
  if (g_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
    throw InvalidAlgebra("gamma has " + std::to_string(g_.size()) + " entries, expected dim^3 = " +
                         std::to_string(dim_ * dim_ * dim_));
  compute_flags();
}

AlgebraTable AlgebraTable::unital_skeleton(std::vector<std::string> basis_names) {
  return TableBuilder(std::move(basis_names)).build();
}

void AlgebraTable::compute_flags() {
  unital_ = validate_unit(*this);
  assoc_violation_ = check_associative(*this);
  commutative_ = check_commutative(*this);
}

Eigen::MatrixXd AlgebraTable::left_mul_matrix(const AlgElem& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("left_mul_matrix: element does not match algebra");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int s = 0; s < dim_; ++s)
      for (int k = 0; k < dim_; ++k) M(k, s) += x[i] * gamma(i, s, k);
  }
  return M;
}

Eigen::MatrixXd AlgebraTable::right_mul_matrix(const AlgElem& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("right_mul_matrix: element does not match algebra");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (x[j] == 0.0) continue;
    for (int s = 0; s < dim_; ++s)
      for (int k = 0; k < dim_; ++k) M(k, s) += x[j] * gamma(s, j, k);
  }
  return M;
}

TableBuilder::TableBuilder(std::vector<std::string> basis_names) : names_(std::move(basis_names)) {
  dim_ = static_cast<int>(names_.size());
  g_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, 0.0);
  for (int j = 0; j < dim_; ++j) {
    g_[(0 * dim_ + j) * dim_ + j] = 1.0;
    g_[(j * dim_ + 0) * dim_ + j] = 1.0;
  }
}

TableBuilder& TableBuilder::set(int i, int j, const AlgElem& v) {
  for (int k = 0; k < dim_; ++k) g_[(i * dim_ + j) * dim_ + k] = v[k];
  return *this;
}

TableBuilder& TableBuilder::set(int i, int j, int k, double s) {
  for (int l = 0; l < dim_; ++l) g_[(i * dim_ + j) * dim_ + l] = 0.0;
  g_[(i * dim_ + j) * dim_ + k] = s;
  return *this;
}

AlgebraTable TableBuilder::build(std::string label) const {
  AlgebraTable T(names_, g_);
  T.set_name(std::move(label));
  return T;
}

AlgElem mul(const AlgElem& a, const AlgElem& b, const AlgebraTable& T) {
  const int d = T.dim();
  if (a.dim() != d || b.dim() != d)
    throw DimensionMismatch("mul: operands of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " in algebra of dimension " + std::to_string(d));
  AlgElem out(d);
  const auto& g = T.gamma_flat();
  for (int i = 0; i < d; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      const double w = ai * b[j];
      if (w == 0.0) continue;
      const double* row = &g[(static_cast<std::size_t>(i) * d + j) * d];
      for (int k = 0; k < d; ++k) out[k] += w * row[k];
    }
  }
  return out;
}

bool validate_unit(const AlgebraTable& T) {
  const int d = T.dim();
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const double delta = j == k ? 1.0 : 0.0;
      if (T.gamma(0, j, k) != delta || T.gamma(j, 0, k) != delta) return false;
    }
  return true;
}

double check_associative(const AlgebraTable& T) {
  const int d = T.dim();
  std::vector<AlgElem> e;
  for (int i = 0; i < d; ++i) e.push_back(AlgElem::basis(d, i));
  std::vector<AlgElem> prod(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i * d + j] = mul(e[i], e[j], T);
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        AlgElem lhs = mul(prod[i * d + j], e[k], T);
        AlgElem rhs = mul(e[i], prod[j * d + k], T);
        worst = std::max(worst, (lhs - rhs).norm());
      }
  return worst;
}

bool check_commutative(const AlgebraTable& T) {
  const int d = T.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (std::abs(T.gamma(i, j, k) - T.gamma(j, i, k)) > AlgebraTable::kFlagTol) return false;
  return true;
}

namespace {

Eigen::MatrixXd inversion_matrix(const AlgElem& a, const AlgebraTable& T, Side side) {
  // x*a = e0 is linear in x through right multiplication by a.
  return side == Side::left ? T.right_mul_matrix(a) : T.left_mul_matrix(a);
}

bool well_conditioned(const Eigen::MatrixXd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return false;
  return s[s.size() - 1] >= 1e-10 * s[0];
}

}  // namespace

AlgElem try_invert(const AlgElem& a, const AlgebraTable& T, Side side) {
  if (a.dim() != T.dim()) throw DimensionMismatch("try_invert: element does not match algebra");
  if (!T.unital()) throw InvalidAlgebra("try_invert: algebra has no unit e_0");
  Eigen::MatrixXd M = inversion_matrix(a, T, side);
  if (!well_conditioned(M))
    throw SingularElement(std::string("element has no ") + (side == Side::left ? "left" : "right") +
                          " inverse");
  Eigen::VectorXd rhs = Eigen::VectorXd::Unit(T.dim(), 0);
  AlgElem x(Eigen::VectorXd(M.partialPivLu().solve(rhs)));
  AlgElem check = side == Side::left ? mul(x, a, T) : mul(a, x, T);
  if ((check - AlgElem::unit(T.dim())).norm() > 1e-10)
    throw SingularElement("inverse round trip failed; element is numerically singular");
  return x;
}

bool is_invertible(const AlgElem& a, const AlgebraTable& T) {
  return well_conditioned(inversion_matrix(a, T, Side::left)) &&
         well_conditioned(inversion_matrix(a, T, Side::right));
}

namespace {

std::vector<std::string> numbered_names(int d) {
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

AlgebraTable reals_table() { return TableBuilder({"1"}).build("reals"); }

AlgebraTable quaternion_table() {
  TableBuilder b({"1", "i", "j", "k"});
  b.set(1, 1, 0, -1).set(2, 2, 0, -1).set(3, 3, 0, -1);
  b.set(1, 2, 3, 1).set(2, 1, 3, -1);
  b.set(2, 3, 1, 1).set(3, 2, 1, -1);
  b.set(3, 1, 2, 1).set(1, 3, 2, -1);
  return b.build("quaternion");
}

// Basis I, E12, E21, E11 of 2x2 real matrices.
AlgebraTable m2r_table() {
  std::vector<Eigen::Matrix2d> E(4);
  E[0] = Eigen::Matrix2d::Identity();
  E[1] << 0, 1, 0, 0;
  E[2] << 0, 0, 1, 0;
  E[3] << 1, 0, 0, 0;
  auto coords = [](const Eigen::Matrix2d& M) {
    // M = a I + b E12 + c E21 + d E11  =>  M00 = a + d, M11 = a.
    return AlgElem{M(1, 1), M(0, 1), M(1, 0), M(0, 0) - M(1, 1)};
  };
  TableBuilder b({"e0", "e1", "e2", "e3"});
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) b.set(i, j, coords(E[i] * E[j]));
  return b.build("m2r");
}

AlgebraTable tessarine_table() {
  TableBuilder b({"1", "i", "j", "k"});
  b.set(1, 1, 0, -1).set(2, 2, 0, 1).set(3, 3, 0, -1);
  b.set(1, 2, 3, 1).set(2, 1, 3, 1);
  b.set(1, 3, 2, -1).set(3, 1, 2, -1);
  b.set(2, 3, 1, 1).set(3, 2, 1, 1);
  return b.build("tessarine");
}

std::string format_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

AlgebraTable dim2_algebra(double a, double b) {
  TableBuilder t({"e0", "e1"});
  t.set(1, 1, AlgElem{a, b});
  return t.build("dim2(" + format_param(a) + "," + format_param(b) + ")");
}

AlgebraTable clifford_algebra(double a1, double a2) {
  TableBuilder b({"e0", "e1", "e2", "e3"});
  b.set(1, 1, 0, a1).set(1, 2, 3, 1).set(1, 3, 2, a1);
  b.set(2, 1, 3, -1).set(2, 2, 0, a2).set(2, 3, 1, -a2);
  b.set(3, 1, 2, -a1).set(3, 2, 1, a2).set(3, 3, 0, -a1 * a2);
  return b.build("clifford(" + format_param(a1) + "," + format_param(a2) + ")");
}

AlgebraTable cayley_dickson(const AlgebraTable& T) {
  const int d = T.dim();
  const int D = 2 * d;
  auto conj = [](AlgElem x) {
    for (int k = 1; k < x.dim(); ++k) x[k] = -x[k];
    return x;
  };
  std::vector<AlgElem> e;
  for (int i = 0; i < d; ++i) e.push_back(AlgElem::basis(d, i));
  const AlgElem zero(d);
  TableBuilder out(numbered_names(D));
  for (int I = 0; I < D; ++I)
    for (int J = 0; J < D; ++J) {
      const AlgElem& a = I < d ? e[I] : zero;
      const AlgElem& b = I < d ? zero : e[I - d];
      const AlgElem& c = J < d ? e[J] : zero;
      const AlgElem& dd = J < d ? zero : e[J - d];
      // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
      AlgElem first = mul(a, c, T) - mul(conj(dd), b, T);
      AlgElem second = mul(dd, a, T) + mul(b, conj(c), T);
      AlgElem v(D);
      v.coeffs().head(d) = first.coeffs();
      v.coeffs().tail(d) = second.coeffs();
      out.set(I, J, v);
    }
  return out.build(T.name().empty() ? std::string() : "cd(" + T.name() + ")");
}

AlgElem sum_of_basis_squares(const AlgebraTable& T) {
  const int d = T.dim();
  AlgElem s(d);
  for (int m = 0; m < d; ++m) {
    AlgElem e = AlgElem::basis(d, m);
    s += mul(e, e, T);
  }
  return s;
}

AlgebraTable builtin(Builtin kind, const std::vector<double>& params) {
  auto need = [&](std::size_t count, const char* name) {
    if (params.size() != count)
      throw UnknownAlgebra(std::string(name) + " expects " + std::to_string(count) + " parameters");
  };
  switch (kind) {
    case Builtin::reals:
      return reals_table();
    case Builtin::complex: {
      AlgebraTable T = dim2_algebra(-1, 0);
      T = AlgebraTable({"1", "i"}, T.gamma_flat());
      T.set_name("complex");
      return T;
    }
    case Builtin::dim2:
      need(2, "dim2");
      return dim2_algebra(params[0], params[1]);
    case Builtin::quaternion:
      return quaternion_table();
    case Builtin::m2r:
      return m2r_table();
    case Builtin::clifford:
      need(2, "clifford");
      return clifford_algebra(params[0], params[1]);
    case Builtin::tessarine:
      return tessarine_table();
    case Builtin::octonion: {
      AlgebraTable T = cayley_dickson(quaternion_table());
      T.set_name("octonion");
      return T;
    }
    case Builtin::sedenion: {
      AlgebraTable T = cayley_dickson(cayley_dickson(quaternion_table()));
      T.set_name("sedenion");
      return T;
    }
  }
  throw UnknownAlgebra("unknown builtin algebra");
}

namespace {

struct ParsedName {
  std::string base;
  std::vector<double> params;
  bool has_parens = false;
};

ParsedName parse_name(const std::string& spec) {
  static const std::regex re(R"(^\s*([a-z0-9]+)\s*(?:\(([^)]*)\))?\s*$)");
  std::smatch m;
  ParsedName out;
  if (!std::regex_match(spec, m, re)) return out;
  out.base = m[1];
  if (m[2].matched) {
    out.has_parens = true;
    std::string args = m[2];
    std::size_t pos = 0;
    while (pos <= args.size()) {
      std::size_t comma = args.find(',', pos);
      std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        out.params.push_back(std::stod(tok, &used));
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw UnknownAlgebra("bad parameter '" + tok + "' in algebra name '" + spec + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return out;
}

const std::vector<std::pair<std::string, Builtin>>& builtin_names() {
  static const std::vector<std::pair<std::string, Builtin>> names = {
      {"reals", Builtin::reals},         {"complex", Builtin::complex},
      {"dim2", Builtin::dim2},           {"quaternion", Builtin::quaternion},
      {"m2r", Builtin::m2r},             {"clifford", Builtin::clifford},
      {"tessarine", Builtin::tessarine}, {"octonion", Builtin::octonion},
      {"sedenion", Builtin::sedenion}};
  return names;
}

}  // namespace

bool is_builtin_name(const std::string& spec) {
  ParsedName p;
  try {
    p = parse_name(spec);
  } catch (const UnknownAlgebra&) {
    return false;
  }
  for (const auto& [name, kind] : builtin_names()) {
    (void)kind;
    if (name == p.base) return true;
  }
  return false;
}

AlgebraTable builtin(const std::string& spec) {
  ParsedName p = parse_name(spec);
  for (const auto& [name, kind] : builtin_names()) {
    if (name != p.base) continue;
    const bool parametric = kind == Builtin::dim2 || kind == Builtin::clifford;
    if (!parametric && p.has_parens) throw UnknownAlgebra("algebra '" + name + "' takes no parameters");
    return builtin(kind, p.params);
  }
  throw UnknownAlgebra("unknown algebra '" + spec + "'");
}

}  // namespace hypercauchy

#include "hypercauchy/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hypercauchy/gallery.hpp"

namespace hypercauchy::io {

namespace {

void line_column(const std::string& text, std::size_t byte, std::size_t& line, std::size_t& col) {
  line = 1;
  col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 0, 0); }

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) schema_error(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 0, col = 0;
    line_column(text, e.byte, line, col);
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": " << e.what();
    throw ParseError(os.str(), line, col);
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

json to_json(const AlgElem& a) {
  json out = json::array();
  for (int s = 0; s < a.dim(); ++s) out.push_back(a[s]);
  return out;
}

AlgElem elem_from_json(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    schema_error(where + ": expected an array of " + std::to_string(dim) + " numbers");
  AlgElem a(dim);
  for (int s = 0; s < dim; ++s) {
    if (!j[s].is_number()) schema_error(where + ": component " + std::to_string(s) + " is not a number");
    a[s] = j[s].get<double>();
  }
  return a;
}

json algebra_to_json(const AlgebraTable& T) {
  const int d = T.dim();
  json gamma = json::array();
  for (int i = 0; i < d; ++i) {
    json row = json::array();
    for (int j = 0; j < d; ++j) {
      json v = json::array();
      for (int k = 0; k < d; ++k) v.push_back(T.gamma(i, j, k));
      row.push_back(v);
    }
    gamma.push_back(row);
  }
  json out = {{"dim", d}, {"basis", T.basis_names()}, {"gamma", gamma}};
  if (!T.name().empty()) out["name"] = T.name();
  return out;
}

AlgebraTable algebra_from_json(const json& j) {
  if (!j.is_object()) schema_error("algebra must be a JSON object");
  const int d = get_int(j, "dim");
  if (d < 1) schema_error("algebra dim must be positive");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != d)
      schema_error("'basis' must list dim names");
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) schema_error("basis names must be strings");
      names.push_back(b.get<std::string>());
    }
  } else {
    for (int i = 0; i < d; ++i) names.push_back("e" + std::to_string(i));
  }
  if (!j.contains("gamma") || !j["gamma"].is_array() || static_cast<int>(j["gamma"].size()) != d)
    schema_error("'gamma' must be a dim x dim x dim array");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i) {
    const json& row = j["gamma"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != d) schema_error("'gamma' must be a dim x dim x dim array");
    for (int k = 0; k < d; ++k) {
      AlgElem v = elem_from_json(row[k], d, "gamma[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      for (int s = 0; s < d; ++s) g.push_back(v[s]);
    }
  }
  AlgebraTable T(names, g);
  if (!T.unital()) throw InvalidAlgebra("e_0 is not a two-sided unit of the supplied table");
  if (j.contains("name") && j["name"].is_string()) T.set_name(j["name"].get<std::string>());
  return T;
}

AlgebraTable resolve_algebra(const std::string& spec, const std::filesystem::path& base_dir, std::string* warning) {
  std::filesystem::path file = spec;
  if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
  const bool file_exists = std::filesystem::exists(file);
  if (is_builtin_name(spec)) {
    if (file_exists && warning) *warning = "'" + spec + "' names a builtin algebra and a file; using the builtin";
    return builtin(spec);
  }
  if (file_exists) {
    AlgebraTable T = algebra_from_json(read_json_file(file));
    if (T.name().empty()) T.set_name(file.stem().string());
    return T;
  }
  throw UnknownAlgebra("'" + spec + "' is neither a builtin algebra nor a readable file");
}

json conditions_to_json(const CRConditionSet& C) {
  json a = json::array();
  for (int m = 0; m < C.q; ++m) {
    json row = json::array();
    for (int j = 0; j < C.n; ++j) row.push_back(to_json(C.coeff(m, j)));
    a.push_back(row);
  }
  json alg;
  if (!C.algebra.name().empty() && is_builtin_name(C.algebra.name()))
    alg = C.algebra.name();
  else
    alg = algebra_to_json(C.algebra);
  json out = {{"algebra", alg}, {"n", C.n}, {"q", C.q}, {"a", a}};
  if (!C.label.empty()) out["label"] = C.label;
  return out;
}

CRConditionSet conditions_from_json(const json& j, const std::filesystem::path& base_dir, std::string* warning) {
  if (!j.is_object()) schema_error("condition set must be a JSON object");
  if (!j.contains("algebra")) schema_error("missing field 'algebra'");
  AlgebraTable T;
  if (j["algebra"].is_string())
    T = resolve_algebra(j["algebra"].get<std::string>(), base_dir, warning);
  else
    T = algebra_from_json(j["algebra"]);
  const int n = get_int(j, "n"), q = get_int(j, "q");
  if (n < 1 || q < 1) schema_error("n and q must be positive");
  if (!j.contains("a") || !j["a"].is_array() || static_cast<int>(j["a"].size()) != q)
    schema_error("'a' must hold q rows");
  CRConditionSet C(T, n, q);
  for (int m = 0; m < q; ++m) {
    const json& row = j["a"][m];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      schema_error("a[" + std::to_string(m) + "] must hold n coefficients");
    for (int jj = 0; jj < n; ++jj)
      C.coeff(m, jj) = elem_from_json(row[jj], T.dim(), "a[" + std::to_string(m) + "][" + std::to_string(jj) + "]");
  }
  if (j.contains("label") && j["label"].is_string()) C.label = j["label"].get<std::string>();
  return C;
}

CRConditionSet resolve_conditions(const std::string& spec, std::string* warning) {
  const bool file_exists = std::filesystem::exists(spec);
  if (gallery::has(spec)) {
    if (file_exists && warning) *warning = "'" + spec + "' names a builtin condition set and a file; using the builtin";
    return gallery::by_name(spec);
  }
  if (!file_exists) throw Error("'" + spec + "' is neither a builtin condition set nor a readable file");
  const std::filesystem::path path(spec);
  CRConditionSet C = conditions_from_json(read_json_file(path), path.parent_path(), warning);
  if (C.label.empty()) C.label = path.stem().string();
  return C;
}

json kernel_to_json(const KernelSolution& K) {
  json b = json::array(), c = json::array();
  for (int m = 0; m < K.q; ++m) {
    json row = json::array();
    for (int j = 0; j < K.n; ++j) row.push_back(to_json(K.coeff(m, j)));
    b.push_back(row);
  }
  for (int j = 0; j < K.n; ++j) {
    json row = json::array();
    for (int i = 0; i < K.n; ++i) row.push_back(to_json(K.aux(j, i)));
    c.push_back(row);
  }
  return {{"b", b}, {"c", c}, {"normalization", K.normalization}, {"cond12_residual", K.residual},
          {"nullity", K.nullity}};
}

json admissibility_to_json(const CRConditionSet& C, const AdmissibilityReport& R) {
  json out = {{"schema", kReportSchema},
              {"command", "cr-solve"},
              {"conditions", C.label},
              {"algebra", C.algebra.name()},
              {"n", C.n},
              {"q", C.q},
              {"feasible", R.feasible},
              {"residual", number(R.residual)},
              {"free_dim", R.free_dim},
              {"rank", R.rank},
              {"gap", number(R.gap)}};
  if (R.kernel) {
    json k = kernel_to_json(*R.kernel);
    for (auto it = k.begin(); it != k.end(); ++it) out[it.key()] = it.value();
  }
  return out;
}

json reproduction_to_json(const ReproductionReport& R) {
  return {{"schema", kReportSchema},
          {"command", "reproduce"},
          {"computed", to_json(R.computed)},
          {"expected", to_json(R.expected)},
          {"abs_error", number(R.abs_error)},
          {"rel_error", number(R.rel_error)},
          {"error_estimate", number(R.error_estimate)},
          {"boundary_term", to_json(R.boundary_term)},
          {"volume_term", to_json(R.volume_term)},
          {"nodes", R.nodes}};
}

json derivative_to_json(const DerivativeReport& R) {
  return {{"schema", kReportSchema},
          {"command", "derivative"},
          {"value", to_json(R.value)},
          {"expected", to_json(R.expected)},
          {"abs_error", number(R.abs_error)},
          {"rel_error", number(R.rel_error)},
          {"kernel_constant", number(R.kernel_constant)},
          {"sup_f", number(R.sup_f)},
          {"bound", number(R.bound)},
          {"estimate_holds", R.estimate_holds},
          {"error_estimate", number(R.error_estimate)},
          {"nodes", R.nodes}};
}

json inspect_to_json(const AlgebraTable& T) {
  const AlgElem sq = sum_of_basis_squares(T);
  return {{"schema", kReportSchema},
          {"command", "inspect"},
          {"algebra", T.name()},
          {"dim", T.dim()},
          {"basis", T.basis_names()},
          {"unital", T.unital()},
          {"associativity_violation", T.associativity_violation()},
          {"associative", T.associative()},
          {"commutative", T.commutative()},
          {"sum_of_basis_squares", to_json(sq)},
          {"sum_of_basis_squares_zero", sq.is_zero(AlgebraTable::kFlagTol)}};
}

}  // namespace hypercauchy::io

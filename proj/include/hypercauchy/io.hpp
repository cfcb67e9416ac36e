#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hypercauchy/admissibility.hpp"
#include "hypercauchy/verify.hpp"

namespace hypercauchy::io {

using nlohmann::json;

inline constexpr const char* kReportSchema = "hypercauchy.report/1";

/// Parses text, mapping syntax errors to ParseError with line and column.
json parse_json(const std::string& text, const std::string& source = "<input>");
json read_json_file(const std::filesystem::path& path);

json to_json(const AlgElem& a);
AlgElem elem_from_json(const json& j, int dim, const std::string& where);

/// {"dim", "basis", "gamma"[i][j][k]}; the unit law is enforced on load.
json algebra_to_json(const AlgebraTable& T);
AlgebraTable algebra_from_json(const json& j);

/// Builtin names resolve first. When a file of the same name also exists,
/// `warning` receives a note about the collision.
AlgebraTable resolve_algebra(const std::string& spec, const std::filesystem::path& base_dir = {},
                             std::string* warning = nullptr);

/// {"algebra": name|path|object, "n", "q", "a"[m][j][s]}
json conditions_to_json(const CRConditionSet& C);
CRConditionSet conditions_from_json(const json& j, const std::filesystem::path& base_dir = {},
                                    std::string* warning = nullptr);

/// Gallery names resolve before files.
CRConditionSet resolve_conditions(const std::string& spec, std::string* warning = nullptr);

json kernel_to_json(const KernelSolution& K);
json admissibility_to_json(const CRConditionSet& C, const AdmissibilityReport& R);
json reproduction_to_json(const ReproductionReport& R);
json derivative_to_json(const DerivativeReport& R);
json inspect_to_json(const AlgebraTable& T);

/// Number that survives JSON: non-finite values become null.
json number(double v);

}  // namespace hypercauchy::io

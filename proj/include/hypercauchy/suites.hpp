#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypercauchy::suites {

struct Case {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Result {
  std::string name;
  std::vector<Case> cases;
  bool pass() const;
  int failures() const;
};

struct Options {
  double tol = 1e-9;
  int nodes = 24;  // per-angle nodes for reproduction checks
  std::uint64_t seed = 2024;
};

std::vector<std::string> names();
Result run(const std::string& name, const Options& opt = {});

}  // namespace hypercauchy::suites

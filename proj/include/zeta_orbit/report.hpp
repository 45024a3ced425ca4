#pragma once

// Pass/fail records shared by the verification suites and the CLI.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "zeta_orbit/window.hpp"

namespace zeta_orbit {

using nlohmann::json;

struct CheckResult {
  std::string check;
  std::int64_t n = 0;
  bool pass = false;
  json witness = nullptr;

  json to_json() const {
    return json{{"check", check}, {"N", n}, {"status", pass ? "pass" : "fail"}, {"witness", witness}};
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }

  CheckResult& add(std::string name, std::int64_t n, bool pass, json witness = nullptr) {
    checks.push_back({std::move(name), n, pass, std::move(witness)});
    return checks.back();
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.check == name) return &c;
    }
    return nullptr;
  }

  json to_json() const {
    json list = json::array();
    for (const auto& c : checks) list.push_back(c.to_json());
    return json{{"suite", suite}, {"status", pass() ? "pass" : "fail"}, {"checks", list}};
  }
};

inline json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return json{{"row", m->row}, {"col", m->col}, {"left", m->left}, {"right", m->right}};
}

/// Records whether two windowed matrices agree on their first cols columns.
template <class Scalar>
CheckResult& add_matrix_check(SuiteReport& report, std::string name, const WindowedMatrix<Scalar>& a,
                              const WindowedMatrix<Scalar>& b, index_t cols) {
  const auto m = column_difference(a, b, cols);
  json witness = m ? json{{"first_mismatch", mismatch_json(m)}} : json{{"verified_cols", cols}};
  return report.add(std::move(name), cols, !m, std::move(witness));
}

}  // namespace zeta_orbit

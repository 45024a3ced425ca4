#pragma once

// Serialization. Every number is written as a decimal string because matrix and
// series entries routinely exceed 64 bits.

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "zeta_orbit/dseries.hpp"
#include "zeta_orbit/pseries.hpp"
#include "zeta_orbit/scalar.hpp"
#include "zeta_orbit/window.hpp"

namespace zeta_orbit {

/// {"rows":R,"cols":C,"growth":w,"entries":[[i,j,"v"],...]} in column-major order.
template <class Scalar>
nlohmann::json matrix_to_json(const WindowedMatrix<Scalar>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (index_t j = 1; j <= m.cols(); ++j) {
    for (const auto& e : m.column(j)) entries.push_back(nlohmann::json::array({e.row, j, to_string(e.value)}));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"growth", m.growth()}, {"entries", entries}};
}

/// "i,j,value" lines for the nonzero entries.
template <class Scalar>
std::string matrix_to_csv(const WindowedMatrix<Scalar>& m) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (index_t j = 1; j <= m.cols(); ++j) {
    for (const auto& e : m.column(j)) out << e.row << ',' << j << ',' << to_string(e.value) << '\n';
  }
  return out.str();
}

template <class Scalar>
std::string series_to_csv(const DirichletSeries<Scalar>& a, const std::string& header = "n,value") {
  std::ostringstream out;
  out << header << '\n';
  for (std::size_t n = 1; n <= a.length(); ++n) out << n << ',' << to_string(a[n]) << '\n';
  return out.str();
}

/// [{"n":1,"value":"..."}, ...], mirroring the CSV rows.
template <class Scalar>
nlohmann::json series_to_json(const DirichletSeries<Scalar>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 1; n <= a.length(); ++n) rows.push_back({{"n", n}, {"value", to_string(a[n])}});
  return rows;
}

/// Coefficients c_0..c_K as "num/den" strings.
inline nlohmann::json power_series_to_json(const PowerSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace zeta_orbit

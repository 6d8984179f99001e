#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwfrob/polyparse.hpp"

namespace hwfrob {

using Json = nlohmann::ordered_json;

/// "2*1/(X0*X1)*e3 + 1/(X0^2*X1)*e1"; slots are numbered from 1.
inline std::string format_cohomology_vector(const CohomologyVector& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [c, b] : v) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += format_laurent(b, names) + "*e" + std::to_string(b.slot + 1);
  }
  return out;
}

inline Json matrix_json(const FpMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// The machine-readable report; timings are null unless requested.
inline Json report_json(const FrobeniusReport& rep, const std::vector<std::string>& names, bool with_timings) {
  Json j;
  j["p"] = rep.p;
  j["r"] = rep.r;
  j["q"] = rep.q;
  j["algorithm_used"] = rep.algorithm_used;
  j["h_dim"] = rep.h_dim;
  j["matrix"] = matrix_json(rep.matrix);
  j["rank"] = rep.rank;
  j["char_poly"] = rep.char_poly;
  Json basis = Json::array();
  for (const auto& v : rep.basis) basis.push_back(format_cohomology_vector(v, names));
  j["basis"] = std::move(basis);
  j["D"] = rep.D;
  j["alpha"] = rep.alpha ? Json(*rep.alpha) : Json(nullptr);
  if (with_timings) j["timings"] = {{"step_a_ms", rep.timings.step_a_ms}, {"step_b_ms", rep.timings.step_b_ms}};
  else j["timings"] = nullptr;
  j["assumptions"] = rep.assumptions;
  return j;
}

inline std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

inline std::string report_text(const FrobeniusReport& rep, const std::vector<std::string>& names, bool with_timings) {
  std::ostringstream os;
  os << "p = " << rep.p << ", r = " << rep.r << ", q = " << rep.q << "\n";
  os << "algorithm: " << rep.algorithm_used << "\n";
  os << "dim H^" << rep.q << "(X, O_X) = " << rep.h_dim << "\n";
  os << "basis:\n";
  for (std::size_t i = 0; i < rep.basis.size(); ++i) {
    os << "  b" << i + 1 << " = " << format_cohomology_vector(rep.basis[i], names) << "\n";
  }
  os << "matrix:\n";
  for (int i = 0; i < rep.matrix.rows(); ++i) {
    os << "  [";
    for (int k = 0; k < rep.matrix.cols(); ++k) os << (k ? " " : "") << rep.matrix.at(i, k);
    os << "]\n";
  }
  os << "rank = " << rep.rank << "\n";
  os << "char poly = " << format_charpoly(rep.char_poly, "a") << "\n";
  os << "D = " << rep.D << "\n";
  os << "alpha = " << (rep.alpha ? std::to_string(*rep.alpha) : std::string("n/a")) << "\n";
  if (with_timings) {
    os << "step A = " << format_ms(rep.timings.step_a_ms) << " ms, step B = " << format_ms(rep.timings.step_b_ms)
       << " ms\n";
  }
  for (const auto& a : rep.assumptions) os << "assumption: " << a << "\n";
  return os.str();
}

inline Json hom_json(const GradedHomomorphism& A, const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (int i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < A.cols(); ++k) row.push_back(format_poly(A.at(i, k), names));
    rows.push_back(std::move(row));
  }
  return {{"source", A.source().twists}, {"target", A.target().twists}, {"entries", std::move(rows)}};
}

/// Levels i = 1..length with the twists of F_i and the map F_i -> F_{i-1}.
inline Json resolution_json(const FreeResolution& R, const std::vector<std::string>& names) {
  Json levels = Json::array();
  for (int i = 1; i <= R.length(); ++i) {
    Json level = hom_json(R.map(i), names);
    level["level"] = i;
    levels.push_back(std::move(level));
  }
  return levels;
}

/// Components ψ_i : F_i^(p) -> F_i of the lift.
inline Json lift_json(const ChainLift& C, const std::vector<std::string>& names) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < C.maps.size(); ++i) {
    Json level = hom_json(C.maps[i], names);
    level["level"] = i;
    levels.push_back(std::move(level));
  }
  return levels;
}

/// The Laurent monomial basis of H^r(P^r, F) in index order.
inline Json cohomology_basis_json(const CohomologySpace& space, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& b : space.basis()) out.push_back(format_laurent(b, names) + "*e" + std::to_string(b.slot + 1));
  return out;
}

inline std::string hom_text(const GradedHomomorphism& A, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (int i = 0; i < A.rows(); ++i) {
    os << "    row " << i + 1 << ":";
    for (int k = 0; k < A.cols(); ++k) os << (k ? " | " : " ") << format_poly(A.at(i, k), names);
    os << "\n";
  }
  return os.str();
}

inline std::string twists_text(const GradedFreeModule& M) {
  std::string out;
  for (int d : M.twists) out += (out.empty() ? "" : ",") + std::to_string(d);
  return "(" + out + ")";
}

inline std::string resolution_text(const FreeResolution& R, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "resolution (length " << R.length() << "):\n";
  for (int i = 1; i <= R.length(); ++i) {
    os << "  F" << i << " twists " << twists_text(R.module(i)) << " -> F" << i - 1 << "\n" << hom_text(R.map(i), names);
  }
  return os.str();
}

inline std::string lift_text(const ChainLift& C, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "lift:\n";
  for (std::size_t i = 0; i < C.maps.size(); ++i) {
    os << "  psi" << i << " twists " << twists_text(C.maps[i].source()) << " -> " << twists_text(C.maps[i].target())
       << "\n"
       << hom_text(C.maps[i], names);
  }
  return os.str();
}

}  // namespace hwfrob

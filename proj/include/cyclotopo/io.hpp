#pragma once

// Serialization of polynomials, integer matrices and labeled complexes.
//
// Polynomials travel as JSON arrays of decimal strings, constant term first,
// so arbitrarily large coefficients survive the trip. Matrices use a plain
// text triplet format ("rows cols nnz" then one "i j value" line per nonzero,
// zero-indexed). Complexes are JSON objects listing part sizes and facets,
// each facet a length-d array holding a residue or null per part.

#include <cctype>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "cyclotopo/complex.hpp"
#include "cyclotopo/polynomial.hpp"

namespace cyclotopo {

namespace detail {

inline Int parse_int(const std::string& s, const char* who) {
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  bool ok = s.size() > start;
  for (size_t i = start; i < s.size(); ++i) ok = ok && std::isdigit(static_cast<unsigned char>(s[i]));
  if (!ok) throw std::invalid_argument(std::string(who) + ": bad integer token '" + s + "'");
  return Int(s);
}

inline Int json_int(const nlohmann::json& v, const char* who) {
  if (v.is_string()) return parse_int(v.get<std::string>(), who);
  if (v.is_number_integer()) return Int(v.get<int64_t>());
  throw std::invalid_argument(std::string(who) + ": expected a decimal string or integer");
}

}  // namespace detail

inline nlohmann::json poly_to_json(const IntPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : f.coeffs()) arr.push_back(c.str());
  return arr;
}

inline IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array");
  std::vector<Int> coeffs;
  for (const auto& v : j) coeffs.push_back(detail::json_int(v, "poly_from_json"));
  return IntPoly(std::move(coeffs));
}

inline void write_matrix(std::ostream& os, const IntMatrix& m) {
  const auto trips = m.triplets();
  os << m.rows() << ' ' << m.cols() << ' ' << trips.size() << '\n';
  for (const Triplet& t : trips) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

inline IntMatrix read_matrix(std::istream& is) {
  int64_t rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
    throw std::invalid_argument("read_matrix: bad header");
  std::vector<Triplet> trips;
  trips.reserve(static_cast<size_t>(nnz));
  for (int64_t k = 0; k < nnz; ++k) {
    int64_t i = 0, j = 0;
    std::string value;
    if (!(is >> i >> j >> value)) throw std::invalid_argument("read_matrix: truncated triplet list");
    trips.push_back({static_cast<int>(i), static_cast<int>(j),
                     detail::parse_int(value, "read_matrix")});
  }
  // from_triplets validates index ranges and rejects duplicates
  return IntMatrix::from_triplets(static_cast<int>(rows), static_cast<int>(cols), trips);
}

inline nlohmann::json complex_to_json(const SimplicialComplex& X) {
  nlohmann::json out;
  out["parts"] = X.parts();
  nlohmann::json facets = nlohmann::json::array();
  for (const OrientedSimplex& f : X.facets()) {
    nlohmann::json row = nlohmann::json::array();
    size_t at = 0;
    for (int part = 0; part < X.num_parts(); ++part) {
      if (at < f.size() && f[at].part == part)
        row.push_back(f[at++].residue);
      else
        row.push_back(nullptr);
    }
    facets.push_back(std::move(row));
  }
  out["facets"] = std::move(facets);
  out["full_skeleton"] = X.full_skeleton();
  return out;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("parts") || !j.contains("facets"))
    throw std::invalid_argument("complex_from_json: expected an object with parts and facets");
  const auto& jp = j["parts"];
  if (!jp.is_array() || jp.empty())
    throw std::invalid_argument("complex_from_json: parts must be a nonempty array");
  std::vector<int64_t> parts;
  for (const auto& v : jp) {
    if (!v.is_number_integer())
      throw std::invalid_argument("complex_from_json: part sizes must be integers");
    parts.push_back(v.get<int64_t>());
  }
  const auto& jf = j["facets"];
  if (!jf.is_array()) throw std::invalid_argument("complex_from_json: facets must be an array");
  std::vector<OrientedSimplex> facets;
  for (const auto& row : jf) {
    if (!row.is_array() || row.size() != parts.size())
      throw std::invalid_argument("complex_from_json: each facet needs one entry per part");
    OrientedSimplex f;
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_null()) continue;
      if (!row[i].is_number_integer())
        throw std::invalid_argument("complex_from_json: facet entries are residues or null");
      f.push_back({static_cast<int>(i), row[i].get<int64_t>()});
    }
    facets.push_back(std::move(f));
  }
  bool full = j.value("full_skeleton", false);
  return SimplicialComplex(std::move(parts), std::move(facets), full);
}

}  // namespace cyclotopo

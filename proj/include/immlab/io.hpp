#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "immlab/error.hpp"
#include "immlab/gadgets.hpp"
#include "immlab/matrix.hpp"
#include "immlab/rational.hpp"

namespace immlab {

/// {"n": <int>, "entries": [[<scalar>, ...], ...]} with string scalars.
inline nlohmann::json matrix_to_json(const Matrix<Rational>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"n", m.size()}, {"entries", std::move(rows)}};
}

inline Matrix<Rational> matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::schema_error, "matrix document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw Error(Errc::schema_error, "field \"n\" must be a nonnegative integer");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw Error(Errc::schema_error, "field \"entries\" must be an array of rows");
  const auto n = doc["n"].get<std::size_t>();
  const auto& rows = doc["entries"];
  if (rows.size() != n)
    throw Error(Errc::schema_error, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  Matrix<Rational> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n)
      throw Error(Errc::schema_error, "row " + std::to_string(r) + " must be an array of " + std::to_string(n) + " scalars");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = rows[r][c];
      const std::string where = "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")";
      if (!cell.is_string()) throw Error(Errc::schema_error, where + " must be a string scalar");
      try {
        m(r, c) = parse_rational(cell.get<std::string>());
      } catch (const Error& e) {
        throw Error(Errc::schema_error, where + ": " + e.what());
      }
    }
  }
  return m;
}

inline Matrix<Rational> parse_matrix(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::schema_error, std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

inline Matrix<Rational> load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::schema_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

inline void save_matrix(const Matrix<Rational>& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::schema_error, "cannot write " + path);
  out << matrix_to_json(m).dump() << '\n';
}

inline nlohmann::json report_to_json(const ProjectionReport& r) {
  return nlohmann::json{{"lambda", r.lambda.to_string()}, {"i", r.row_index}, {"k", r.k},
                        {"per", to_string(r.per)},       {"imm", to_string(r.imm)}, {"equal", r.equal}};
}

}  // namespace immlab

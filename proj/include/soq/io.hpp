#pragma once

/**
 * @file io.hpp
 * @brief Serialization of matrices, factor chains, configs and reports.
 *
 * JSON matrix:  {"n": rows, "m": cols, "rows": [["p/q", ...], ...]}
 * JSON chain:   {"n": dim, "levels": [["p/q", ...] | "inf", ...]}
 * Plain text:   one row per line, entries separated by spaces.
 *
 * Emitters always write canonical rationals ("p" when q = 1). Parsers
 * accept unreduced fractions and JSON integers in entry positions.
 * A stream may hold several JSON documents separated by whitespace;
 * emitters write one compact document per line.
 */

#include <soq/error.hpp>
#include <soq/factor.hpp>
#include <soq/generate.hpp>
#include <soq/matrix.hpp>
#include <soq/rational.hpp>
#include <soq/sphere.hpp>

#include <json.hpp>

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace soq::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
    return Rational(v.get<std::int64_t>());
  }
  throw error(errc::parse_error, "rational entries must be strings \"p/q\" or integers, got " + v.dump());
}

inline std::size_t count_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned())
    throw error(errc::parse_error, std::string("missing or invalid \"") + key + "\"");
  return doc[key].get<std::size_t>();
}

inline ordered_json rationals_to_json(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- matrices

inline ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (const auto& x : m.row(i)) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["n"] = m.rows();
  doc["m"] = m.cols();
  doc["rows"] = std::move(rows);
  return doc;
}

inline Matrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw error(errc::parse_error, "matrix document must be an object");
  const std::size_t n = detail::count_field(doc, "n");
  const std::size_t m = detail::count_field(doc, "m");
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw error(errc::parse_error, "missing \"rows\" array");
  const json& rows = doc["rows"];
  if (rows.size() != n) throw error(errc::parse_error, "\"rows\" has " + std::to_string(rows.size()) + " rows, n = " + std::to_string(n));
  std::vector<Rational> entries;
  entries.reserve(n * m);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m) throw error(errc::parse_error, "row length does not match m = " + std::to_string(m));
    for (const auto& v : row) entries.push_back(detail::rational_from_json(v));
  }
  if (n == 0 || m == 0) throw error(errc::parse_error, "empty matrix");
  return Matrix(n, m, std::move(entries));
}

inline std::string to_text(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

/// Parses one matrix from the text form; blank lines are ignored.
inline Matrix matrix_from_text(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Rational> row;
    std::string tok;
    while (tokens >> tok) row.push_back(Rational::parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw error(errc::parse_error, "no matrix rows");
  try {
    return Matrix::from_rows(rows);
  } catch (const error& e) {
    throw error(errc::parse_error, e.what());
  }
}

/// Text blocks separated by blank lines, one matrix each.
inline std::vector<Matrix> matrices_from_text(const std::string& text) {
  std::vector<Matrix> out;
  std::istringstream lines(text);
  std::string line, block;
  auto flush = [&] {
    if (!block.empty()) out.push_back(matrix_from_text(block));
    block.clear();
  };
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  return out;
}

inline std::string latex_entry(const Rational& x) {
  if (x.is_integer()) return x.num().str();
  const std::string sign = x.sign() < 0 ? "-" : "";
  const Integer mag = x.sign() < 0 ? Integer(-x.num()) : x.num();
  return sign + "\\frac{" + mag.str() + "}{" + x.den().str() + "}";
}

inline std::string to_latex(const Matrix& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " & ";
      out += latex_entry(m(i, j));
    }
    out += i + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

// ------------------------------------------------------------------ chains

inline ordered_json chain_to_json(const FactorChain& chain) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : chain.levels()) {
    if (level.is_infinite()) {
      levels.push_back("inf");
    } else {
      levels.push_back(detail::rationals_to_json(level.finite().coords()));
    }
  }
  ordered_json doc;
  doc["n"] = chain.dim();
  doc["levels"] = std::move(levels);
  return doc;
}

/// Parse errors raise parse_error; shape violations raise malformed_chain.
inline FactorChain chain_from_json(const json& doc) {
  if (!doc.is_object()) throw error(errc::parse_error, "chain document must be an object");
  const std::size_t n = detail::count_field(doc, "n");
  if (!doc.contains("levels") || !doc["levels"].is_array()) throw error(errc::parse_error, "missing \"levels\" array");
  std::vector<ExtParam> levels;
  std::size_t j = 0;
  for (const auto& level : doc["levels"]) {
    if (level.is_string()) {
      if (level.get<std::string>() != "inf") throw error(errc::parse_error, "level must be an array or \"inf\"");
      // Infinity carries the length its position demands.
      if (n < 2 + j) throw error(errc::malformed_chain, "too many levels for n = " + std::to_string(n));
      levels.push_back(ExtParam::infinity(n - 1 - j));
    } else if (level.is_array()) {
      std::vector<Rational> y;
      for (const auto& v : level) y.push_back(detail::rational_from_json(v));
      if (y.empty()) throw error(errc::malformed_chain, "level " + std::to_string(j) + " is empty");
      levels.emplace_back(StereoCoords(std::move(y)));
    } else {
      throw error(errc::parse_error, "level must be an array or \"inf\"");
    }
    ++j;
  }
  return FactorChain(n, std::move(levels));
}

// ------------------------------------------------------------------ config

/// Reads {"dim", "bound", "inf_weight", "seed"}; absent fields keep the
/// values already in base. inf_weight may be "p/q", a decimal string or
/// a JSON number.
inline GenConfig config_from_json(const json& doc, GenConfig base = {}) {
  if (!doc.is_object()) throw error(errc::parse_error, "config must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "dim") {
      base.dim = detail::count_field(doc, "dim");
    } else if (key == "bound") {
      base.bound = detail::count_field(doc, "bound");
    } else if (key == "seed") {
      base.seed = detail::count_field(doc, "seed");
    } else if (key == "inf_weight") {
      if (value.is_string()) {
        base.inf_weight = Rational::parse_decimal(value.get<std::string>());
      } else if (value.is_number_integer()) {
        base.inf_weight = detail::rational_from_json(value);
      } else if (value.is_number_float()) {
        // Reparse the shortest round-trip text so 0.125 means 1/8 exactly.
        base.inf_weight = Rational::parse_decimal(value.dump());
      } else {
        throw error(errc::parse_error, "inf_weight must be a number or string");
      }
    } else {
      throw error(errc::parse_error, "unknown config field \"" + key + "\"");
    }
  }
  return base;
}

inline ordered_json config_to_json(const GenConfig& cfg) {
  ordered_json doc;
  doc["dim"] = cfg.dim;
  doc["bound"] = cfg.bound;
  doc["inf_weight"] = cfg.inf_weight.to_string();
  doc["seed"] = cfg.seed;
  return doc;
}

// ------------------------------------------------------------------ report

inline ordered_json report_to_json(const VerifyReport& r) {
  ordered_json doc;
  doc["n"] = r.dim;
  doc["orthogonal"] = r.orthogonal;
  doc["det"] = r.det.to_string();
  doc["special_orthogonal"] = r.special;
  doc["unit_columns"] = r.unit_columns;
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.dot_failures) {
    fails.push_back(ordered_json{{"i", f.first}, {"j", f.second}, {"dot", f.dot.to_string()}});
  }
  doc["dot_failures"] = std::move(fails);
  doc["omega_form"] = r.omega_form;
  return doc;
}

inline std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "size: " << r.dim << "x" << r.dim << '\n';
  os << "orthogonal (O*O^T = I): " << (r.orthogonal ? "yes" : "no") << '\n';
  os << "det = " << r.det << '\n';
  os << "special orthogonal: " << (r.special ? "yes" : "no") << '\n';
  for (std::size_t j = 0; j < r.unit_columns.size(); ++j) {
    if (!r.unit_columns[j]) os << "column " << j + 1 << " has squared norm " << r.column_norms[j] << '\n';
  }
  for (const auto& f : r.dot_failures) {
    os << "columns " << f.first + 1 << " and " << f.second + 1 << " have dot product " << f.dot << '\n';
  }
  os << "block form [O' 0; 0 1]: " << (r.omega_form ? "yes" : "no") << '\n';
  return os.str();
}

// ----------------------------------------------------------------- streams

/// Reads every whitespace-separated JSON document from in.
inline std::vector<json> read_json_documents(std::istream& in) {
  std::vector<json> docs;
  for (;;) {
    while (in && std::isspace(in.peek())) in.get();
    if (!in || in.peek() == std::char_traits<char>::eof()) break;
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw error(errc::parse_error, e.what());
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

/// Matrices from JSON documents, or from the text form when the first
/// non-blank character is not '{'.
inline std::vector<Matrix> read_matrices(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = all.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw error(errc::parse_error, "empty input");
  if (all[first] != '{') return matrices_from_text(all);
  std::istringstream ss(all);
  std::vector<Matrix> out;
  for (const auto& doc : read_json_documents(ss)) {
    try {
      out.push_back(matrix_from_json(doc));
    } catch (const error& e) {
      if (e.code() == errc::parse_error) throw;
      throw error(errc::parse_error, e.what());
    }
  }
  return out;
}

}  // namespace soq::io

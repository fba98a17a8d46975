#pragma once

// Interchange formats. Rationals always travel as exact "p/q" strings.
//
//   Spectrum: {"n": 4, "entries": [{"lambda": "1/2", "mult": 2}]}
//   Matrix:   [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]]  or CSV rows.

#include <canonical_lie/canonical.hpp>
#include <canonical_lie/exactlin.hpp>
#include <canonical_lie/sonreal.hpp>

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canonical_lie {

/// Malformed input; `location()` is a JSON pointer, "byte N" or "line L, column C".
class InputError : public std::runtime_error {
 public:
  InputError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

using nlohmann::json;

inline json spectrum_to_json(const Spectrum& s) {
  json entries = json::array();
  for (const auto& e : s.entries()) entries.push_back({{"lambda", to_string(e.lambda)}, {"mult", e.mult}});
  return {{"n", s.n()}, {"entries", std::move(entries)}};
}

namespace detail {

inline Rational rational_at(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const RationalParseError& e) {
      throw InputError(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>()), 10));
  throw InputError(where, "expected an exact rational string \"p/q\"");
}

inline std::size_t count_at(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where, "expected a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte), e.what());
  }
}

}  // namespace detail

inline Spectrum spectrum_from_json(const json& j) {
  if (!j.is_object()) throw InputError("/", "spectrum must be a JSON object");
  if (!j.contains("n")) throw InputError("/n", "missing field");
  if (!j.contains("entries")) throw InputError("/entries", "missing field");
  const std::size_t n = detail::count_at(j["n"], "/n");
  const json& entries = j["entries"];
  if (!entries.is_array()) throw InputError("/entries", "expected an array");
  std::vector<SpectrumEntry> es;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = "/entries/" + std::to_string(i);
    const json& e = entries[i];
    if (!e.is_object() || !e.contains("lambda") || !e.contains("mult"))
      throw InputError(at, "expected {\"lambda\": \"p/q\", \"mult\": int}");
    es.push_back({detail::rational_at(e["lambda"], at + "/lambda"), detail::count_at(e["mult"], at + "/mult")});
  }
  try {
    return Spectrum(n, std::move(es));
  } catch (const InvalidSpectrum& e) {
    throw InputError("/", e.what());
  }
}

inline Spectrum parse_spectrum(std::string_view text) { return spectrum_from_json(detail::parse_json_text(text)); }

inline RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("/", "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = "/" + std::to_string(r);
    if (!j[r].is_array()) throw InputError(at, "row must be an array");
    if (j[r].size() != cols) throw InputError(at, "row has " + std::to_string(j[r].size()) + " entries, expected " +
                                                      std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = detail::rational_at(j[r][c], at + "/" + std::to_string(c));
  }
  return m;
}

inline RatMatrix matrix_from_csv(std::string_view text) {
  std::vector<RatVector> rows;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RatVector row;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      const std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        row.push_back(parse_rational(cell));
      } catch (const RationalParseError& e) {
        throw InputError("line " + std::to_string(line_no) + ", column " + std::to_string(start + 1), e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("line " + std::to_string(line_no),
                       "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

/// JSON when the first significant character is '[', CSV otherwise.
inline RatMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return matrix_from_json(detail::parse_json_text(text));
  return matrix_from_csv(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json grading_to_json(const GradingMap& g) {
  json out = json::array();
  for (const auto& e : g.entries()) out.push_back({{"grade", to_string(e.grade)}, {"dim", e.space.dim()}});
  return out;
}

}  // namespace canonical_lie

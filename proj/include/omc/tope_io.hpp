#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "omc/arrangement.hpp"
#include "omc/tope.hpp"

namespace omc {

inline constexpr int kTopeFormatVersion = 1;

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// One tope per line over {+,-}; blank lines and '#' lines are skipped.
inline TopeSet parse_topes(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  std::size_t line_no = 0, first_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = detail::trim(line);
    if (row.empty() || row.front() == '#') continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorKind::RaggedInput, "line " + std::to_string(line_no) + " has length " +
                                              std::to_string(row.size()) + ", line " + std::to_string(first_line) +
                                              " has " + std::to_string(rows.front().size()));
    if (rows.empty()) first_line = line_no;
    rows.push_back(row);
  }
  return validate_tope_set(rows);
}

/// Canonical serialisation: topes in canonical order, LF line endings.
inline std::string format_topes(const TopeSet& m) {
  std::string out;
  for (const Tope& t : m.topes()) {
    out += t.str();
    out += '\n';
  }
  return out;
}

inline TopeSet read_topes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return parse_topes(in);
}

inline void write_topes(const TopeSet& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << format_topes(m);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

/// First line "d t", then t lines of d space-separated integers.
inline Arrangement parse_arrangement(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::string row = detail::trim(line);
    if (row.empty() || row.front() == '#') continue;
    lines.push_back(row);
  }
  if (lines.empty()) throw Error(ErrorKind::EmptyInput, "arrangement file is empty");
  auto ints_of = [](const std::string& row, std::size_t which) {
    std::istringstream ss(row);
    std::vector<long long> values;
    std::string token;
    while (ss >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw Error(ErrorKind::BadSymbol, "line " + std::to_string(which) + ": '" + token + "' is not an integer");
      values.push_back(v);
    }
    return values;
  };
  const auto header = ints_of(lines.front(), 1);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    throw Error(ErrorKind::BadSymbol, "header must be 'd t' with positive integers");
  Arrangement arr;
  arr.dim = static_cast<int>(header[0]);
  if (lines.size() - 1 != static_cast<std::size_t>(header[1]))
    throw Error(ErrorKind::LengthMismatch, "header announces " + std::to_string(header[1]) + " normals, found " +
                                               std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) arr.normals.push_back(ints_of(lines[i], i + 1));
  check_arrangement(arr);
  return arr;
}

inline Arrangement read_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return parse_arrangement(in);
}

inline std::string format_arrangement(const Arrangement& arr) {
  std::string out = std::to_string(arr.dim) + " " + std::to_string(arr.size()) + "\n";
  for (const auto& n : arr.normals) {
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(n[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace omc

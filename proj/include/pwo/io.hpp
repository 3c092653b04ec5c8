#ifndef PWO_IO_HPP
#define PWO_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwo/error.hpp"
#include "pwo/matrix.hpp"
#include "pwo/profile.hpp"

namespace pwo {

inline constexpr const char* matrix_schema = "pwo.matrix/1";

/// Reads one matrix: rows of space-separated entries from {-1,0,1}, ended by a
/// blank line or end of input. Leading blank lines and '#' comments are skipped.
inline SignMatrix read_matrix(std::istream& in) {
  std::vector<std::vector<int>> grid;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (grid.empty()) continue;
      break;
    }
    if (line[first] == '#') continue;
    std::istringstream row(line);
    std::vector<int> values;
    std::string token;
    while (row >> token) {
      if (token != "-1" && token != "0" && token != "1") {
        throw parse_error("matrix row " + std::to_string(grid.size() + 1) + ": bad entry '" + token + "'");
      }
      values.push_back(std::stoi(token));
    }
    if (!grid.empty() && values.size() != grid.front().size()) {
      throw parse_error("matrix row " + std::to_string(grid.size() + 1) + " has " +
                        std::to_string(values.size()) + " entries; expected " +
                        std::to_string(grid.front().size()));
    }
    grid.push_back(std::move(values));
  }
  if (grid.empty()) throw parse_error("no matrix rows found");
  return SignMatrix::from_rows(grid);
}

inline SignMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

/// One line per row, entries separated by single spaces.
inline std::string format_matrix(const SignMatrix& m) {
  std::string out;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

inline std::string format_matrix(const QuasiPermMatrix& m) { return format_matrix(to_sign_matrix(m)); }

inline nlohmann::json matrix_json(const SignMatrix& m) {
  return {{"schema", matrix_schema}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_rows()}};
}

inline nlohmann::json matrix_json(const QuasiPermMatrix& m) { return matrix_json(to_sign_matrix(m)); }

inline SignMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto grid = j.at("entries").get<std::vector<std::vector<int>>>();
    SignMatrix m = grid.empty() ? SignMatrix() : SignMatrix::from_rows(grid);
    if (j.contains("rows") && j.at("rows").get<int>() != m.rows()) throw parse_error("\"rows\" disagrees with entries");
    if (j.contains("cols") && j.at("cols").get<int>() != m.cols()) throw parse_error("\"cols\" disagrees with entries");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad matrix json: ") + e.what());
  }
}

inline SignMatrix matrix_from_json(const std::string& text) {
  try {
    return matrix_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad matrix json: ") + e.what());
  }
}

inline SignMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  const auto first = in.peek();
  if (first == '{') {
    std::stringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
  }
  return read_matrix(in);
}

inline nlohmann::json partition_json(const MPartition& part) {
  return {{"I", part.row_cuts}, {"J", part.col_cuts}};
}

}  // namespace pwo

#endif  // PWO_IO_HPP

// Copyright 2026 The Gomory Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gomory/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gomory/errors.hpp"

namespace gomory {

namespace {

Integer parse_integer(std::string token, const std::string& field) {
  token.erase(0, token.find_first_not_of(" \t\r"));
  token.erase(token.find_last_not_of(" \t\r") + 1);
  if (!token.empty() && token[0] == '+') token.erase(0, 1);
  Integer z;
  if (token.empty() || z.set_str(token, 10) != 0)
    throw Error(ErrorCode::kInvalidInput, "not an integer: '" + token + "'", field);
  return z;
}

Integer json_integer(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long>()));
  if (v.is_string()) return parse_integer(v.get<std::string>(), field);
  throw Error(ErrorCode::kInvalidInput, "matrix entries must be integers", field);
}

IntMatrix from_rows(const std::vector<IntVector>& rows, const std::string& field) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidInput, "matrix has no rows", field);
  const std::size_t n = rows.front().size();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "matrix has no columns", field);
  IntMatrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorCode::kInvalidInput,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(n),
                  field);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

}  // namespace

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "json") return MatrixFormat::kJson;
  if (name == "csv") return MatrixFormat::kCsv;
  throw Error(ErrorCode::kInvalidInput, "format must be json or csv", "format");
}

IntMatrix parse_matrix(const std::string& text, MatrixFormat format) {
  std::vector<IntVector> rows;
  if (format == MatrixFormat::kJson) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what(), "matrix");
    }
    if (j.is_object()) {
      if (j.contains("matrix"))
        j = j["matrix"];
      else if (j.contains("A"))
        j = j["A"];
      else
        throw Error(ErrorCode::kInvalidInput, "object has no \"matrix\" member", "matrix");
    }
    if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "matrix must be an array of rows", "matrix");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string field = "matrix[" + std::to_string(i) + "]";
      if (!j[i].is_array()) throw Error(ErrorCode::kInvalidInput, "row is not an array", field);
      IntVector row;
      for (std::size_t k = 0; k < j[i].size(); ++k)
        row.push_back(json_integer(j[i][k], field + "[" + std::to_string(k) + "]"));
      rows.push_back(std::move(row));
    }
  } else {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      IntVector row;
      std::stringstream cells(line);
      std::string cell;
      std::size_t col = 0;
      while (std::getline(cells, cell, ','))
        row.push_back(parse_integer(cell, "matrix line " + std::to_string(line_no) + " column " +
                                              std::to_string(++col)));
      rows.push_back(std::move(row));
    }
  }
  return from_rows(rows, "matrix");
}

IntMatrix read_matrix_file(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open matrix file '" + path + "'", "matrix");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), format);
}

IntVector parse_integer_list(const std::string& text, const std::string& field) {
  std::string s = text;
  std::replace_if(s.begin(), s.end(), [](char ch) { return ch == '[' || ch == ']' || ch == ','; }, ' ');
  std::istringstream in(s);
  IntVector out;
  std::string token;
  while (in >> token) out.push_back(parse_integer(token, field));
  return out;
}

IndexSet parse_face(const std::string& text, std::size_t n, const std::string& field) {
  IndexSet face;
  for (const auto& v : parse_integer_list(text, field)) {
    if (v < 1 || v > static_cast<long>(n))
      throw Error(ErrorCode::kInvalidInput,
                  "index " + v.get_str() + " outside 1.." + std::to_string(n), field);
    face.push_back(static_cast<int>(v.get_si()) - 1);
  }
  std::sort(face.begin(), face.end());
  if (std::adjacent_find(face.begin(), face.end()) != face.end())
    throw Error(ErrorCode::kInvalidInput, "repeated index", field);
  return face;
}

}  // namespace gomory

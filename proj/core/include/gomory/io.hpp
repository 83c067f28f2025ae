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

#pragma once

#include <string>
#include <string_view>

#include "gomory/matrix.hpp"
#include "gomory/numeric.hpp"

namespace gomory {

enum class MatrixFormat { kJson, kCsv };

MatrixFormat parse_matrix_format(std::string_view name);

// JSON: an array of rows, or an object with a "matrix" (or "A") member of
// that shape. CSV: one row per line, comma separated; blank lines and lines
// starting with '#' are skipped. Entries are integers (strings allowed in
// JSON for values beyond 64 bits).
IntMatrix parse_matrix(const std::string& text, MatrixFormat format);
IntMatrix read_matrix_file(const std::string& path, MatrixFormat format);

// "1,2,3", "1 2 3" or "[1,2,3]".
IntVector parse_integer_list(const std::string& text, const std::string& field);

// 1-based indices to a sorted 0-based index set, each in [1, n].
IndexSet parse_face(const std::string& text, std::size_t n, const std::string& field);

}  // namespace gomory

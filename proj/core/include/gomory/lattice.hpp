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

#include <optional>
#include <vector>

#include "gomory/matrix.hpp"
#include "gomory/numeric.hpp"

namespace gomory {

/// Column-style Hermite normal form: `A * transform == hermite`, with
/// `transform` unimodular and `hermite` in column echelon form (pivot entries
/// positive, entries left of a pivot reduced into [0, pivot)).
struct HermiteForm {
  IntMatrix hermite;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // row of the k-th pivot column
};

HermiteForm column_hermite_form(const IntMatrix& a);

/// `left * A * right == smith` with both transforms unimodular and the diagonal
/// of `smith` nonnegative with each entry dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix smith;
  IntMatrix right;
  IntVector invariant_factors() const;
};

SmithForm smith_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& square);
bool is_unimodular_matrix(const IntMatrix& square);

// Unique solution of square * x == b, or nullopt when square is singular.
std::optional<RatVector> solve_square(const IntMatrix& square,
                                      const RatVector& b);
std::optional<RatMatrix> inverse(const IntMatrix& square);

// gcd of all maximal (d x d) minors, computed from the Smith form.
Integer maximal_minor_gcd(const IntMatrix& a);

struct ProblemInstance {
  IntMatrix a;                  // normalized so that ZA = Z^d
  std::optional<IntVector> c;   // optional cost vector
  IntVector pointing;           // w with w . a_j > 0 for every column
  IntVector degrees;            // w A, a positive grading of the columns
  bool normalized = false;      // true when `a` differs from the input
  IntMatrix input;              // the matrix as given
  RatMatrix rhs_transform;      // b_normalized = rhs_transform * b_input

  std::size_t d() const { return a.rows(); }
  std::size_t n() const { return a.cols(); }
  IntVector column(std::size_t j) const { return a.col(j); }
  IntMatrix columns(const IndexSet& s) const { return a.select_cols(s); }
};

/// Checks the standing assumptions (full row rank, pointed cone, nonnegative
/// kernel trivial) and rewrites A so that its columns generate Z^d.
/// Throws Error(kRankDeficient | kConeNotPointed | kInvalidInput).
ProblemInstance validate_problem(const IntMatrix& a,
                                 std::optional<IntVector> c = std::nullopt);

// Maps a right-hand side given for the input matrix to the normalized one.
// Throws kInvalidInput when the image is not integral (b outside ZA).
IntVector normalize_rhs(const ProblemInstance& p, const IntVector& b);

struct KernelBasis {
  IntMatrix b;  // n x (n - d), columns generate {x in Z^n : Ax = 0}
};

KernelBasis kernel_lattice_basis(const ProblemInstance& p);
KernelBasis kernel_lattice_basis(const IntMatrix& a);

// |det A_sigma| / gcd of maximal minors; throws kSingularBasis.
Integer lattice_index(const ProblemInstance& p, const IndexSet& sigma);

}  // namespace gomory

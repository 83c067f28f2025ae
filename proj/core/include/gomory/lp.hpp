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

#include <cstddef>
#include <vector>

#include "gomory/numeric.hpp"

namespace gomory::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class Status { kOptimal, kInfeasible, kUnbounded };

// maximize objective . x  subject to rows, with per-variable sign restriction.
// Variables are free unless marked nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars)
      : num_vars_(num_vars),
        nonnegative_(num_vars, false),
        objective_(num_vars, Rational(0)) {}

  std::size_t num_vars() const { return num_vars_; }

  void set_nonnegative(std::size_t var, bool value = true) {
    nonnegative_[var] = value;
  }
  void set_all_nonnegative() { nonnegative_.assign(num_vars_, true); }
  void set_objective(RatVector objective) { objective_ = std::move(objective); }
  void add_constraint(RatVector coeffs, Relation rel, Rational rhs);

  const std::vector<bool>& nonnegative() const { return nonnegative_; }
  const RatVector& objective() const { return objective_; }
  const std::vector<RatVector>& rows() const { return rows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const RatVector& rhs() const { return rhs_; }

 private:
  std::size_t num_vars_;
  std::vector<bool> nonnegative_;
  RatVector objective_;
  std::vector<RatVector> rows_;
  std::vector<Relation> relations_;
  RatVector rhs_;
};

struct Solution {
  Status status = Status::kInfeasible;
  RatVector x;      // optimal (or last feasible) point when not infeasible
  Rational value;   // objective at x
  RatVector ray;    // improving recession direction when unbounded
};

// Two-phase primal simplex on a dense exact tableau with Bland's rule, so
// degenerate problems terminate.
Solution solve(const LinearProgram& program);

// Convenience: true iff the constraint system has a solution.
bool feasible(const LinearProgram& program);

}  // namespace gomory::lp

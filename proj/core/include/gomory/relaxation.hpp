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

#include <functional>
#include <optional>
#include <vector>

#include "gomory/cone.hpp"
#include "gomory/lattice.hpp"
#include "gomory/numeric.hpp"

namespace gomory {

// Lattice points of {z in Z^k : M z <= h}, visited depth-first with exact LP
// bounds on each coordinate (ascending index). The visitor returns false to
// stop. Throws UnboundedRelaxation if a coordinate is unbounded.
void for_each_lattice_point(const IntMatrix& m, const IntVector& h,
                            const std::function<bool(const IntVector&)>& visit);

// A nonzero lattice point of {M z <= h} (with 0 feasible), or nullopt. When
// the polyhedron is unbounded an integral recession ray is returned.
std::optional<IntVector> find_nonzero_lattice_point(const IntMatrix& m, const IntVector& h);

// Reformulation min {(-cB) z : B^{tau-bar} z <= pi_tau(u)}.
struct LatticeProgram {
  KernelBasis basis;
  IntVector objective;  // -cB
  IntMatrix lhs;        // rows of B outside tau
  IntVector rhs;        // u restricted to the rows outside tau
  IndexSet dropped;     // tau
  IndexSet kept_rows;
};

LatticeProgram lattice_program(const ProblemInstance& p, const IntVector& c,
                               const IndexSet& tau, const IntVector& u);

struct RelaxationResult {
  IntVector z_star;
  IntVector x_star;
  bool solves_ip = false;
  Rational objective_value;  // c . x_star
  bool unique = true;        // the relaxation optimum is attained only at z_star
};

RatVector reduced_cost(const ProblemInstance& p, const IntVector& c,
                       const IndexSet& sigma, const IndexSet& tau);

IntVector ip_solve_bruteforce(const ProblemInstance& p, const IntVector& c,
                              const IntVector& b);

RelaxationResult group_relax_solve(const ProblemInstance& p, const IntVector& c,
                                   const IndexSet& tau, const IntVector& b,
                                   const IntVector& u);

bool relaxation_is_bounded(const Triangulation& t, const IndexSet& tau);

// z with B^{tau-bar} z <= 0 and (-cB) z < 0, when tau is not a face.
std::optional<IntVector> unboundedness_certificate(const ProblemInstance& p,
                                                   const IntVector& c,
                                                   const IndexSet& tau);

IndexSet gomory_relaxation_face(const ProblemInstance& p, const Triangulation& t,
                                const IntVector& b);

bool in_order_ideal(const KernelBasis& b, const IntVector& c, const IntVector& u);

bool is_standard_polytope(const KernelBasis& b, const IntVector& c, const IntVector& u,
                          const IndexSet& tau);

}  // namespace gomory

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

#include <cstdint>
#include <optional>
#include <vector>

#include "gomory/lattice.hpp"
#include "gomory/matrix.hpp"
#include "gomory/numeric.hpp"

namespace gomory {

// A face of a regular subdivision together with a dual certificate y:
// y . a_j == c_j on the face and y . a_j < c_j off it.
struct Face {
  IndexSet indices;
  RatVector certificate;  // empty when the subdivision was given abstractly

  friend bool operator==(const Face& a, const Face& b) {
    return a.indices == b.indices;
  }
};

class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Face> maximal_faces, bool simplicial);

  // Abstract complex from its maximal faces (no certificates).
  static Triangulation from_faces(std::vector<IndexSet> maximal_faces,
                                  std::size_t d);

  const std::vector<Face>& maximal_faces() const { return maximal_; }
  std::vector<IndexSet> maximal_index_sets() const;

  // False when some lower facet carries more than d columns.
  bool is_triangulation() const { return simplicial_; }

  // Membership in the downward closure of the maximal faces.
  bool contains_face(const IndexSet& tau) const;
  // Every face (including the empty face), sorted by size then lexicographic.
  std::vector<IndexSet> all_faces() const;
  // Columns that span rays of the complex.
  IndexSet vertices() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.maximal_index_sets() == b.maximal_index_sets();
  }

 private:
  std::vector<Face> maximal_;
  bool simplicial_ = true;
};

/// Lower facets of cone((a_j, c_j)) projected to cone(A). Each candidate
/// hyperplane passes through d lifted columns with a nonsingular A_sigma; it
/// is a lower facet when no lifted column lies strictly below it.
Triangulation regular_subdivision(const IntMatrix& a, const RatVector& c);
Triangulation regular_subdivision(const ProblemInstance& p, const IntVector& c);

// Exact LP: y with y.a_j == c_j on tau and y.a_j < c_j elsewhere, if any.
std::optional<RatVector> face_certificate(const IntMatrix& a,
                                          const RatVector& c,
                                          const IndexSet& tau);

// Barycentric coordinates of b in cone(A_sigma) (sigma a maximal face).
std::optional<RatVector> simplicial_coordinates(const IntMatrix& a,
                                                const IndexSet& sigma,
                                                const RatVector& b);
bool in_simplicial_cone(const IntMatrix& a, const IndexSet& sigma,
                        const RatVector& b);

/// The unique minimal face tau with b in cone(A_tau). Throws kOutsideCone.
IndexSet smallest_containing_face(const IntMatrix& a, const Triangulation& t,
                                  const IntVector& b);

bool is_unimodular(const Triangulation& t, const ProblemInstance& p);

struct HilbertBasis {
  std::vector<IntVector> elements;         // sorted lexicographically
  std::vector<IntVector> cone_generators;  // as given
};

/// Minimal Hilbert basis of the pointed full-dimensional cone spanned by the
/// generators. The cone is triangulated through a random lifting (seeded);
/// each simplicial piece contributes the lattice points of its half-open
/// fundamental parallelepiped; reducible candidates are then discarded.
/// Throws kNotPointed or kInvalidInput (not full-dimensional).
HilbertBasis hilbert_basis(const std::vector<IntVector>& generators,
                           std::uint64_t seed = 0);

// Columns of A lying in cone(A_sigma).
IndexSet columns_in_cone(const IntMatrix& a, const IndexSet& sigma);

bool is_normal(const ProblemInstance& p);
bool is_delta_normal(const ProblemInstance& p, const Triangulation& t);
/// Exponential in n: every full-dimensional column subset, deduplicated by
/// the set of columns its cone contains.
bool is_supernormal(const ProblemInstance& p);

struct GomoryCostConstruction {
  IntVector cost;             // integral, generic for the regular subdivision
  RatVector interpolated;     // costs before perturbation
  Rational epsilon;           // perturbation step actually used
  IndexSet ray_generators;
  IndexSet lifted_columns;    // redundant columns lifted off the lower hull
};

/// Builds a cost c with Delta_c == t from a seed cost inducing t: ray columns
/// keep their seed cost, columns inside a maximal cone are interpolated
/// linearly, then ray costs are lowered by epsilon. epsilon is halved until
/// the recomputed subdivision is again t and simplicial.
/// Throws kNotDeltaNormal, kInvalidInput (seed does not induce t).
GomoryCostConstruction construct_gomory_cost(const ProblemInstance& p,
                                             const Triangulation& t,
                                             const IntVector& seed_cost);

}  // namespace gomory

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
#include <string>
#include <vector>

#include "gomory/cone.hpp"
#include "gomory/groebner.hpp"
#include "gomory/toric.hpp"

namespace gomory {

// {omega : omega . d >= 0} over the elements d of a reduced basis.
struct GroebnerCone {
  GroebnerBasis basis;
  std::vector<IntVector> inequalities;  // primitive, deduplicated
  std::vector<std::size_t> facets;      // irredundant subset (indices)
};

GroebnerCone groebner_cone(const GroebnerBasis& g);

// A point with omega . d_i = 0 and omega . d_j >= 1 for j != i, or nullopt
// when inequality i is redundant.
std::optional<IntVector> facet_interior_point(const GroebnerCone& cone, std::size_t i);

// Integral point with every inequality strict.
IntVector interior_point(const GroebnerCone& cone);

// Reduced basis of the neighbouring cone across the facet with normal
// `normal` (any positive multiple). Throws NotAFacet.
GroebnerBasis flip(const ProblemInstance& p, const GroebnerCone& cone, const IntVector& normal);

struct FanOptions {
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string checkpoint;          // empty: no checkpointing
  std::size_t checkpoint_every = 50;
  std::size_t expansion_limit = 0;  // stop after this many expansions; 0: none
};

struct InitialIdealRecord {
  GroebnerBasis basis;
  IntVector representative;
  std::size_t facet_count = 0;
};

struct FanEnumeration {
  std::vector<InitialIdealRecord> ideals;  // canonically sorted
  IntVector seed_cost;
  bool synthetic = false;  // seed came from a tie-broken order
  bool complete = true;    // false when stopped by the expansion limit
};

// Random generic cost (entries in [0, bound)) or nullopt after `attempts`.
std::optional<IntVector> find_generic_cost(const ProblemInstance& p,
                                           const std::vector<Binomial>& toric,
                                           std::uint64_t seed, int attempts = 1000);

FanEnumeration enumerate_initial_ideals(const ProblemInstance& p, const FanOptions& options = {});
FanEnumeration enumerate_initial_ideals(const ProblemInstance& p, const std::vector<Binomial>& toric,
                                        const GroebnerBasis& seed, const FanOptions& options = {});

struct TriangulationCensus {
  Triangulation triangulation;
  std::vector<std::size_t> ideals;   // indices into CensusReport::ideals
  std::vector<bool> gomory;          // parallel to `ideals`
  std::vector<IntVector> representative_costs;
  bool unimodular = false;
  std::size_t gomory_count = 0;
};

struct CensusReport {
  std::size_t initial_ideal_count = 0;
  std::size_t triangulation_count = 0;
  std::size_t gomory_supporting_triangulation_count = 0;
  std::vector<InitialIdealRecord> ideals;
  std::vector<GomoryVerdict> verdicts;  // parallel to `ideals`
  std::vector<TriangulationCensus> triangulations;
  bool synthetic = false;
  bool complete = true;
};

CensusReport census(const ProblemInstance& p, const FanOptions& options = {});
CensusReport census_from(const ProblemInstance& p, FanEnumeration fan);

}  // namespace gomory

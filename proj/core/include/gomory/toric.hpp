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

#include <map>
#include <optional>
#include <vector>

#include "gomory/cone.hpp"
#include "gomory/groebner.hpp"
#include "gomory/numeric.hpp"

namespace gomory {

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<ExpVector> generators, std::size_t num_vars);

  const std::vector<ExpVector>& generators() const { return gens_; }
  std::size_t num_vars() const { return n_; }
  bool contains(const ExpVector& u) const;
  bool is_square_free() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<ExpVector> gens_;  // minimal, sorted
  std::size_t n_ = 0;
};

struct StandardPair {
  ExpVector root;
  IndexSet face;

  friend bool operator==(const StandardPair& a, const StandardPair& b) {
    return a.root == b.root && a.face == b.face;
  }
  friend bool operator<(const StandardPair& a, const StandardPair& b) {
    if (a.face != b.face) return a.face < b.face;
    return a.root < b.root;
  }
};

// True iff no monomial of u + N^tau lies in m.
bool is_admissible(const MonomialIdeal& m, const ExpVector& u, const IndexSet& tau);

std::vector<StandardPair> standard_pairs(const MonomialIdeal& m);

MonomialIdeal radical(const MonomialIdeal& m);
// Complex whose minimal non-faces are the generators of the square-free ideal r.
Triangulation triangulation_from_radical(const MonomialIdeal& r, std::size_t d);

struct InitialIdeal {
  MonomialIdeal ideal;
  bool generic = true;  // the unrefined cost already orients every element
};

InitialIdeal initial_ideal(const GroebnerBasis& g);

struct GomoryVerdict {
  bool gomory = false;
  std::vector<StandardPair> pairs;
  std::vector<IndexSet> associated_faces;
  std::map<IndexSet, std::size_t> multiplicities;
  std::size_t arithmetic_degree = 0;
  Triangulation triangulation;
};

GomoryVerdict analyze_initial_ideal(const MonomialIdeal& m, std::size_t d);

// Computes I_A and the reduced basis for c; throws NonGenericCost when c is
// not generic.
GroebnerBasis generic_groebner_basis(const ProblemInstance& p, const IntVector& c);

GomoryVerdict is_gomory_family(const ProblemInstance& p, const IntVector& c);

bool tdi_check(const ProblemInstance& p, const IntVector& c);

}  // namespace gomory

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

#include "gomory/lattice.hpp"
#include "gomory/numeric.hpp"

namespace gomory {

// x^plus - x^minus, stored as the difference vector plus - minus. The two
// terms have disjoint supports, so the difference determines both.
struct Binomial {
  ExpVector d;

  ExpVector plus() const;
  ExpVector minus() const;
  static Binomial from_terms(const ExpVector& plus, const ExpVector& minus);

  friend bool operator==(const Binomial& a, const Binomial& b) { return a.d == b.d; }
};

// Canonical comparison: lexicographic on (plus, minus).
bool canonical_less(const Binomial& a, const Binomial& b);

// A total order on monomials of a fixed A-graded fiber: compare by each
// weight vector in turn, then by reverse lexicographic order with
// revlex_order[0] the largest variable and revlex_order.back() the smallest.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::vector<IntVector> weights, std::vector<int> revlex_order);

  // {c, (1,...,1)} then revlex with x_n smallest.
  static TermOrder refined_cost(const IntVector& c);
  // {grading} then revlex with `last` the smallest variable.
  static TermOrder graded_revlex(const IntVector& grading, int last);

  // Sign of x^{d+} - x^{d-}: > 0 when the plus term is larger.
  int compare(const ExpVector& d) const;

  const std::vector<IntVector>& weights() const { return weights_; }
  const std::vector<int>& revlex_order() const { return revlex_; }
  std::size_t num_vars() const { return revlex_.size(); }

 private:
  std::vector<IntVector> weights_;
  std::vector<std::vector<std::int64_t>> small_weights_;  // empty if too large
  std::vector<int> revlex_;
};

struct GroebnerBasis {
  std::vector<Binomial> elements;  // oriented, reduced, canonically sorted
  TermOrder order;
  std::optional<IntVector> cost;   // unrefined cost the order was built from

  // True iff the canonical element lists coincide.
  bool same_ideal(const GroebnerBasis& other) const {
    return elements == other.elements;
  }
};

// Buchberger completion on binomials followed by auto-reduction. `grading`
// is a positive grading of the variables used for pair selection.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& order,
                                 const IntVector& grading);

std::vector<Binomial> toric_ideal(const ProblemInstance& p);

GroebnerBasis reduced_groebner_basis(const ProblemInstance& p,
                                     const std::vector<Binomial>& gens,
                                     const TermOrder& order);
GroebnerBasis reduced_groebner_basis(const ProblemInstance& p,
                                     const std::vector<Binomial>& gens,
                                     const IntVector& c);

// Every element of `g` is in normal form modulo the others and all S-pairs
// reduce to zero.
bool is_reduced_groebner_basis(const std::vector<Binomial>& g, const TermOrder& order);

ExpVector normal_form_solve(const GroebnerBasis& g, const ExpVector& u);

}  // namespace gomory

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
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gomory {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Exponent vectors of monomials and binomials. Entries stay far below 2^62 for
// every instance this library targets; arithmetic on them is overflow-checked.
using Exponent = std::int64_t;
using ExpVector = std::vector<Exponent>;

// Sorted 0-based column indices.
using IndexSet = std::vector<int>;

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& text);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const ExpVector& b);

// Also converts exponent vectors (ExpVector is std::vector<long> on LP64).
IntVector to_int_vector(const std::vector<long>& v);
RatVector to_rat_vector(const IntVector& v);
ExpVector to_exp_vector(const IntVector& v);

// Multiplies by the lcm of denominators; the result is a positive multiple of v.
IntVector clear_denominators(const RatVector& v);
// Divides by the gcd of the entries (zero vector unchanged).
IntVector primitive(const IntVector& v);

bool is_subset(const IndexSet& small, const IndexSet& big);
IndexSet complement(const IndexSet& s, int n);

}  // namespace gomory

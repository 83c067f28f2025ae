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

// Shared fixtures and brute-force oracles. The oracles work directly from
// the definitions (fiber enumeration, box scans) and never call the code
// under test.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gomory/lattice.hpp"
#include "gomory/matrix.hpp"
#include "gomory/numeric.hpp"

namespace gomory::testing {

struct Fixture {
  std::string name;
  IntMatrix a;
};

inline IntMatrix long_chain() {
  return IntMatrix{{5, 0, 0, 2, 1, 0}, {0, 5, 0, 1, 4, 2}, {0, 0, 5, 2, 0, 3}};
}
inline IntMatrix gfamily() {
  return IntMatrix{{1, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 2, 2}, {0, 0, 1, 2, 3, 4}};
}
inline IntMatrix nonnormal() { return IntMatrix{{1, 1, 1, 1}, {0, 1, 3, 4}}; }
inline IntMatrix graded_d2() { return IntMatrix{{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}}; }
inline IntMatrix tiny() { return IntMatrix{{1, 0, 1}, {0, 1, 1}}; }
inline IntMatrix first() {
  return IntMatrix{{1, 0, 0, 1, 1, 1, 1, 1},
                   {0, 1, 0, 1, 1, 2, 2, 2},
                   {0, 0, 1, 1, 2, 2, 3, 3},
                   {0, 0, 0, 1, 2, 3, 4, 5}};
}
inline IntMatrix smalld() {
  return IntMatrix{{1, 1, 1, 1, 1, 1, 1},
                   {1, 0, 1, 1, 1, 1, 0},
                   {0, 1, 2, 2, 1, 1, 0},
                   {0, 0, 4, 3, 2, 1, 0}};
}

// Small fixtures cheap enough for exhaustive checks.
inline std::vector<Fixture> desk_fixtures() {
  return {{"tiny", tiny()},
          {"nonnormal", nonnormal()},
          {"graded_d2", graded_d2()},
          {"gfamily", gfamily()},
          {"long_chain", long_chain()}};
}

inline IntVector iv(std::initializer_list<long> v) {
  return IntVector(v.begin(), v.end());
}

inline ExpVector unit(std::size_t n, std::initializer_list<std::pair<int, long>> terms) {
  ExpVector u(n, 0);
  for (auto [j, k] : terms) u[static_cast<std::size_t>(j - 1)] += k;
  return u;
}

inline IntVector image(const IntMatrix& a, const ExpVector& u) {
  IntVector out(a.rows(), Integer(0));
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (u[j] != 0)
      for (std::size_t i = 0; i < a.rows(); ++i) out[i] += a(i, j) * Integer(u[j]);
  return out;
}

// Every x in N^n with Ax = b. The grading w picks out a bound w.b on sum
// deg_j x_j, so the enumeration is finite.
inline std::vector<ExpVector> fiber(const ProblemInstance& p, const IntVector& b) {
  const std::size_t n = p.n();
  const Integer budget = dot(p.pointing, b);
  std::vector<ExpVector> out;
  ExpVector x(n, 0);
  std::function<void(std::size_t, Integer)> rec = [&](std::size_t j, Integer left) {
    if (j == n) {
      if (p.a * to_int_vector(x) == b) out.push_back(x);
      return;
    }
    for (long k = 0; Integer(k) * p.degrees[j] <= left; ++k) {
      x[j] = k;
      rec(j + 1, left - Integer(k) * p.degrees[j]);
    }
    x[j] = 0;
  };
  if (budget >= 0) rec(0, budget);
  return out;
}

// The c-cheapest points of the fiber of b.
inline std::vector<ExpVector> fiber_minimizers(const ProblemInstance& p, const IntVector& c,
                                               const IntVector& b) {
  std::vector<ExpVector> best;
  Integer best_value;
  for (const auto& x : fiber(p, b)) {
    const Integer v = dot(c, x);
    if (best.empty() || v < best_value) {
      best = {x};
      best_value = v;
    } else if (v == best_value) {
      best.push_back(x);
    }
  }
  return best;
}

// u lies in O_c iff it is the unique c-optimum of its own fiber.
inline bool optimal_oracle(const ProblemInstance& p, const IntVector& c, const ExpVector& u) {
  const auto m = fiber_minimizers(p, c, image(p.a, u));
  return m.size() == 1 && m[0] == u;
}

// Fibers memoized by right-hand side, for oracles queried many times.
class FiberCache {
 public:
  explicit FiberCache(const ProblemInstance& p) : p_(p) {}

  const std::vector<ExpVector>& operator()(const IntVector& b) {
    auto it = cache_.find(b);
    if (it == cache_.end()) it = cache_.emplace(b, fiber(p_, b)).first;
    return it->second;
  }

  bool optimal(const IntVector& c, const ExpVector& u) {
    const Integer cu = dot(c, u);
    for (const auto& x : (*this)(image(p_.a, u)))
      if (x != u && dot(c, x) <= cu) return false;
    return true;
  }

 private:
  const ProblemInstance& p_;
  std::map<IntVector, std::vector<ExpVector>> cache_;
};

// All u with 0 <= u_j <= bound.
inline void for_each_in_box(std::size_t n, long bound,
                            const std::function<void(const ExpVector&)>& f) {
  ExpVector u(n, 0);
  for (;;) {
    f(u);
    std::size_t j = 0;
    while (j < n && u[j] == bound) u[j++] = 0;
    if (j == n) return;
    ++u[j];
  }
}

// Random pointed full-row-rank matrix: first row strictly positive, entries
// small. Retries until the rank is full.
inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t d, std::size_t n, long max_entry) {
  std::uniform_int_distribution<long> pos(1, max_entry);
  std::uniform_int_distribution<long> any(0, max_entry);
  for (;;) {
    IntMatrix a(d, n);
    for (std::size_t j = 0; j < n; ++j) {
      a(0, j) = pos(rng);
      for (std::size_t i = 1; i < d; ++i) a(i, j) = any(rng);
    }
    if (rank(a) == d) return a;
  }
}

inline IntVector random_cost(std::mt19937_64& rng, std::size_t n, long max_entry) {
  std::uniform_int_distribution<long> dist(0, max_entry);
  IntVector c(n);
  for (auto& x : c) x = dist(rng);
  return c;
}

}  // namespace gomory::testing

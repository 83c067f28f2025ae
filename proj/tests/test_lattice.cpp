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


#include <gtest/gtest.h>

#include <limits>

#include "fixtures.hpp"
#include "gomory/errors.hpp"
#include "gomory/lattice.hpp"
#include "gomory/lp.hpp"

namespace gomory {
namespace {

using testing::iv;

// Laplace expansion; independent of the fraction-free elimination under test.
Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IndexSet rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(static_cast<int>(r));
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(static_cast<int>(k));
    const Integer minor = laplace_det(m.select_rows(rows).select_cols(cols));
    total += (c % 2 == 0 ? 1 : -1) * m(0, c) * minor;
  }
  return total;
}

Integer gcd_of_maximal_minors(const IntMatrix& m) {
  // m has at least as many columns as rows.
  const std::size_t d = m.rows(), n = m.cols();
  Integer g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    IndexSet s;
    for (std::size_t j = 0; j < n; ++j)
      if (pick[j]) s.push_back(static_cast<int>(j));
    const Integer det = laplace_det(m.select_cols(s));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

TEST(Numeric, CheckedArithmeticRaisesOverflow) {
  const Exponent big = std::numeric_limits<Exponent>::max();
  EXPECT_EQ(checked_add(2, 3), 5);
  try {
    checked_add(big, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
  EXPECT_THROW(checked_sub(-big, 2), Error);
}

TEST(Numeric, RationalParsing) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
}

TEST(Numeric, VectorHelpers) {
  EXPECT_EQ(primitive(iv({4, -6, 0})), iv({2, -3, 0}));
  EXPECT_EQ(primitive(iv({0, 0})), iv({0, 0}));
  EXPECT_EQ(clear_denominators({Rational(1, 2), Rational(2, 3)}), iv({3, 4}));
  EXPECT_EQ(complement({1, 3}, 5), (IndexSet{0, 2, 4}));
  EXPECT_TRUE(is_subset({1, 3}, {0, 1, 2, 3}));
  EXPECT_FALSE(is_subset({1, 4}, {0, 1, 2, 3}));
}

TEST(Lattice, HermiteFormIsUnimodularTransform) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const IntMatrix a = testing::random_matrix(rng, d, d + 1 + trial % 4, 7);
    const HermiteForm h = column_hermite_form(a);
    EXPECT_EQ(a * h.transform, h.hermite);
    EXPECT_EQ(abs(laplace_det(h.transform)), 1);
    EXPECT_EQ(h.rank, d);
    for (std::size_t k = 0; k < h.rank; ++k) {
      const std::size_t r = h.pivot_rows[k];
      EXPECT_GT(h.hermite(r, k), 0);
      for (std::size_t j = k + 1; j < a.cols(); ++j) EXPECT_EQ(h.hermite(r, j), 0);
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_GE(h.hermite(r, j), 0);
        EXPECT_LT(h.hermite(r, j), h.hermite(r, k));
      }
    }
  }
}

TEST(Lattice, SmithFormDiagonalDivides) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const IntMatrix a = testing::random_matrix(rng, d, d + trial % 3, 9);
    const SmithForm s = smith_form(a);
    EXPECT_EQ(s.left * a * s.right, s.smith);
    EXPECT_EQ(abs(laplace_det(s.left)), 1);
    EXPECT_EQ(abs(laplace_det(s.right)), 1);
    const IntVector f = s.invariant_factors();
    ASSERT_EQ(f.size(), d);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_TRUE(f[i + 1] % f[i] == 0);
    Integer prod = 1;
    for (const auto& x : f) prod *= x;
    EXPECT_EQ(prod, gcd_of_maximal_minors(a));
    for (std::size_t r = 0; r < s.smith.rows(); ++r)
      for (std::size_t c = 0; c < s.smith.cols(); ++c)
        if (r != c) { EXPECT_EQ(s.smith(r, c), 0); }
  }
}

TEST(Lattice, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    EXPECT_EQ(determinant(m), laplace_det(m));
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), laplace_det(m) != 0);
    if (inv) { EXPECT_EQ(*inv * to_rational(m), RatMatrix::identity(n)); }
  }
}

TEST(Lattice, KernelBasisIsSaturated) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const std::size_t n = d + 1 + trial % 3;
    const IntMatrix a = testing::random_matrix(rng, d, n, 6);
    const KernelBasis k = kernel_lattice_basis(a);
    ASSERT_EQ(k.b.cols(), n - d);
    EXPECT_TRUE((a * k.b).is_zero());
    // A rank n-d sublattice of the kernel is the whole kernel lattice iff its
    // maximal minors are coprime.
    EXPECT_EQ(gcd_of_maximal_minors(k.b.transpose()), 1);
  }
}

TEST(Lattice, ValidationErrors) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOverflow;
  };
  EXPECT_EQ(code_of([] { validate_problem(IntMatrix(2, 3)); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { validate_problem(IntMatrix{{1, 0}, {0, 1}, {1, 1}}); }),
            ErrorCode::kRankDeficient);
  EXPECT_EQ(code_of([] { validate_problem(IntMatrix{{1, 2, 3}, {2, 4, 6}}); }),
            ErrorCode::kRankDeficient);
  EXPECT_EQ(code_of([] { validate_problem(testing::tiny(), iv({1, 2})); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { validate_problem(IntMatrix{{1, -1}}); }), ErrorCode::kConeNotPointed);
}

TEST(Lattice, PointingVectorGradesColumns) {
  for (const auto& f : testing::desk_fixtures()) {
    const ProblemInstance p = validate_problem(f.a);
    for (std::size_t j = 0; j < p.n(); ++j) EXPECT_GT(p.degrees[j], 0) << f.name;
  }
}

TEST(Lattice, NormalizationPreservesKernelAndFibers) {
  const IntMatrix a{{2, 0, 2, 4}, {0, 2, 2, 6}};
  const ProblemInstance p = validate_problem(a);
  EXPECT_TRUE(p.normalized);
  EXPECT_EQ(gcd_of_maximal_minors(p.a), 1);
  EXPECT_TRUE((p.a * kernel_lattice_basis(a).b).is_zero());
  EXPECT_TRUE((a * kernel_lattice_basis(p).b).is_zero());
  testing::for_each_in_box(4, 2, [&](const ExpVector& x) {
    const IntVector xi = to_int_vector(x);
    EXPECT_EQ(normalize_rhs(p, a * xi), p.a * xi);
  });
  try {
    normalize_rhs(p, iv({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  const ProblemInstance q = validate_problem(testing::gfamily());
  EXPECT_FALSE(q.normalized);
  EXPECT_EQ(q.a, testing::gfamily());
}

TEST(Lattice, IndexOfBasesIsNormalizedDeterminant) {
  const ProblemInstance p = validate_problem(testing::long_chain());
  const Integer g = gcd_of_maximal_minors(testing::long_chain());
  const IntMatrix& a = testing::long_chain();
  for (const IndexSet& s : {IndexSet{0, 1, 2}, IndexSet{0, 3, 4}, IndexSet{3, 4, 5}})
    EXPECT_EQ(lattice_index(p, s), abs(laplace_det(a.select_cols(s))) / g);
  EXPECT_THROW(lattice_index(p, {0, 1}), Error);
  const ProblemInstance t = validate_problem(testing::tiny());
  EXPECT_EQ(lattice_index(t, {0, 1}), 1);
}

TEST(LinearProgram, TextbookOptimum) {
  lp::LinearProgram prog(2);
  prog.set_all_nonnegative();
  prog.set_objective({1, 1});
  prog.add_constraint({1, 2}, lp::Relation::kLessEqual, 4);
  prog.add_constraint({3, 1}, lp::Relation::kLessEqual, 6);
  const lp::Solution s = lp::solve(prog);
  ASSERT_EQ(s.status, lp::Status::kOptimal);
  EXPECT_EQ(s.x, (RatVector{Rational(8, 5), Rational(6, 5)}));
  EXPECT_EQ(s.value, Rational(14, 5));
}

TEST(LinearProgram, InfeasibleAndUnbounded) {
  lp::LinearProgram bad(1);
  bad.add_constraint({1}, lp::Relation::kGreaterEqual, 1);
  bad.add_constraint({1}, lp::Relation::kLessEqual, 0);
  EXPECT_EQ(lp::solve(bad).status, lp::Status::kInfeasible);
  EXPECT_FALSE(lp::feasible(bad));

  lp::LinearProgram open(2);
  open.set_all_nonnegative();
  open.set_objective({1, 0});
  open.add_constraint({1, -1}, lp::Relation::kLessEqual, 1);
  const lp::Solution s = lp::solve(open);
  ASSERT_EQ(s.status, lp::Status::kUnbounded);
  // The ray is a recession direction that improves the objective.
  EXPECT_GT(s.ray[0], 0);
  EXPECT_GE(s.ray[1], 0);
  EXPECT_LE(s.ray[0] - s.ray[1], 0);
}

TEST(LinearProgram, FreeVariablesAndEqualities) {
  // max -x - y with x free, x - y = -3, y >= 0: optimum at y = 0, x = -3.
  lp::LinearProgram prog(2);
  prog.set_nonnegative(1);
  prog.set_objective({-1, -1});
  prog.add_constraint({1, -1}, lp::Relation::kEqual, -3);
  prog.add_constraint({1, 0}, lp::Relation::kGreaterEqual, -5);
  const lp::Solution s = lp::solve(prog);
  ASSERT_EQ(s.status, lp::Status::kOptimal);
  EXPECT_EQ(s.value, 3);
  EXPECT_EQ(s.x, (RatVector{-3, 0}));
}

TEST(LinearProgram, DegenerateCyclingExample) {
  // Beale's example, on which the textbook pivot rule cycles.
  lp::LinearProgram prog(4);
  prog.set_all_nonnegative();
  prog.set_objective({Rational(3, 4), -150, Rational(1, 50), -6});
  prog.add_constraint({Rational(1, 4), -60, Rational(-1, 25), 9}, lp::Relation::kLessEqual, 0);
  prog.add_constraint({Rational(1, 2), -90, Rational(-1, 50), 3}, lp::Relation::kLessEqual, 0);
  prog.add_constraint({0, 0, 1, 0}, lp::Relation::kLessEqual, 1);
  const lp::Solution s = lp::solve(prog);
  ASSERT_EQ(s.status, lp::Status::kOptimal);
  EXPECT_EQ(s.value, Rational(1, 20));
}

}  // namespace
}  // namespace gomory

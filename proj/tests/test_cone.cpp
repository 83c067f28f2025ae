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

#include <set>

#include "fixtures.hpp"
#include "gomory/cone.hpp"
#include "gomory/errors.hpp"
#include "gomory/lp.hpp"

namespace gomory {
namespace {

using testing::iv;

std::vector<IndexSet> zero_based(std::vector<IndexSet> faces) {
  for (auto& f : faces)
    for (auto& j : f) --j;
  std::sort(faces.begin(), faces.end());
  return faces;
}

bool in_cone_lp(const std::vector<IntVector>& gens, const IntVector& y) {
  lp::LinearProgram prog(gens.size());
  prog.set_all_nonnegative();
  for (std::size_t i = 0; i < y.size(); ++i) {
    RatVector row;
    for (const auto& g : gens) row.emplace_back(g[i]);
    prog.add_constraint(row, lp::Relation::kEqual, Rational(y[i]));
  }
  return lp::feasible(prog);
}

// Irreducible lattice points of the cone inside the box |y_i| <= bound. The
// Hilbert basis lies in the zonotope of the generators, so a bound equal to
// the coordinate sums suffices.
std::set<IntVector> hilbert_oracle(const std::vector<IntVector>& gens) {
  const std::size_t d = gens.front().size();
  long bound = 0;
  for (const auto& g : gens)
    for (const auto& x : g) bound += Integer(abs(x)).get_si();
  std::vector<IntVector> points;
  IntVector y(d, Integer(-bound));
  for (;;) {
    if (std::any_of(y.begin(), y.end(), [](const Integer& v) { return v != 0; }) &&
        in_cone_lp(gens, y))
      points.push_back(y);
    std::size_t i = 0;
    while (i < d && y[i] == bound) y[i++] = -bound;
    if (i == d) break;
    ++y[i];
  }
  std::set<IntVector> out;
  const std::set<IntVector> all(points.begin(), points.end());
  for (const auto& h : points) {
    bool reducible = false;
    for (const auto& g : points) {
      IntVector rest(d);
      for (std::size_t i = 0; i < d; ++i) rest[i] = h[i] - g[i];
      if (g != h && all.count(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(h);
  }
  return out;
}

TEST(Subdivision, LongChainTriangulation) {
  const ProblemInstance p = validate_problem(testing::long_chain());
  const Triangulation t = regular_subdivision(p, iv({21, 6, 1, 0, 0, 0}));
  EXPECT_TRUE(t.is_triangulation());
  EXPECT_EQ(t.maximal_index_sets(),
            zero_based({{1, 3, 4}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}}));
  for (const auto& f : t.maximal_faces()) {
    ASSERT_EQ(f.certificate.size(), p.d());
    // Lower facet: y.a_j = c_j on the face and y.a_j < c_j off it.
    const IntVector c = iv({21, 6, 1, 0, 0, 0});
    for (std::size_t j = 0; j < p.n(); ++j) {
      const Rational v = dot(f.certificate, to_rat_vector(p.column(j)));
      const bool on = std::count(f.indices.begin(), f.indices.end(), static_cast<int>(j));
      if (on)
        EXPECT_EQ(v, Rational(c[j]));
      else
        EXPECT_LT(v, Rational(c[j]));
    }
  }
  EXPECT_TRUE(t.contains_face({3, 4}));
  EXPECT_FALSE(t.contains_face({1, 2}));
  EXPECT_EQ(t.vertices(), (IndexSet{0, 1, 2, 3, 4, 5}));
}

// Random interior points of cone(A) lie in the interior of exactly one
// maximal simplicial cone: the maximal faces cover and meet properly.
TEST(Subdivision, RandomCostsGiveProperCovers) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> coef(1, 50);
  int checked = 0;
  for (const auto& f : testing::desk_fixtures()) {
    const ProblemInstance p = validate_problem(f.a);
    for (int trial = 0; trial < 8; ++trial) {
      const IntVector c = testing::random_cost(rng, p.n(), 1000);
      const Triangulation t = regular_subdivision(p, c);
      if (!t.is_triangulation()) continue;
      for (int k = 0; k < 15; ++k) {
        IntVector x(p.n());
        for (auto& v : x) v = coef(rng);
        const RatVector b = to_rat_vector(p.a * x);
        int strict = 0, weak = 0;
        for (const auto& face : t.maximal_faces()) {
          const auto inv = inverse(p.columns(face.indices));
          ASSERT_TRUE(inv) << f.name;
          const RatVector lambda = *inv * b;
          if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q >= 0; }))
            ++weak;
          if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q > 0; }))
            ++strict;
        }
        EXPECT_GE(weak, 1) << f.name;
        EXPECT_LE(strict, 1) << f.name;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(Subdivision, ZeroCostIsTrivialSubdivision) {
  const ProblemInstance p = validate_problem(testing::gfamily());
  const Triangulation t = regular_subdivision(p, iv({0, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(t.is_triangulation());
  ASSERT_EQ(t.maximal_faces().size(), 1u);
  EXPECT_EQ(t.maximal_faces()[0].indices, (IndexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_THROW(smallest_containing_face(p.a, t, iv({1, 1, 1})), Error);
}

TEST(Subdivision, AbstractComplexFaces) {
  const Triangulation t = Triangulation::from_faces({{0, 1}, {1, 2}}, 2);
  EXPECT_EQ(t.all_faces(),
            (std::vector<IndexSet>{{}, {0}, {1}, {2}, {0, 1}, {1, 2}}));
  EXPECT_TRUE(t.is_triangulation());
  EXPECT_TRUE(t.maximal_faces()[0].certificate.empty());
}

TEST(Subdivision, FaceCertificates) {
  const IntMatrix a = testing::long_chain();
  const RatVector c{21, 6, 1, 0, 0, 0};
  const auto cert = face_certificate(a, c, {0, 3});
  ASSERT_TRUE(cert);
  EXPECT_FALSE(face_certificate(a, c, {0, 1}));
}

TEST(Subdivision, SmallestContainingFace) {
  const ProblemInstance p = validate_problem(testing::long_chain());
  const Triangulation t = regular_subdivision(p, iv({21, 6, 1, 0, 0, 0}));
  EXPECT_EQ(smallest_containing_face(p.a, t, p.column(3)), (IndexSet{3}));
  EXPECT_EQ(smallest_containing_face(p.a, t, p.a * iv({1, 0, 0, 1, 0, 0})), (IndexSet{0, 3}));
  EXPECT_EQ(smallest_containing_face(p.a, t, iv({0, 0, 0})), IndexSet{});
  EXPECT_TRUE(is_subset(smallest_containing_face(p.a, t, normalize_rhs(p, iv({5, 5, 5}))), {3, 4, 5}));
  EXPECT_THROW(smallest_containing_face(p.a, t, iv({-1, 0, 0})), Error);
}

TEST(Subdivision, Unimodularity) {
  const ProblemInstance tiny = validate_problem(testing::tiny());
  EXPECT_TRUE(is_unimodular(regular_subdivision(tiny, iv({0, 0, 1})), tiny));
  const ProblemInstance lc = validate_problem(testing::long_chain());
  EXPECT_FALSE(is_unimodular(regular_subdivision(lc, iv({21, 6, 1, 0, 0, 0})), lc));
  const ProblemInstance d2 = validate_problem(testing::graded_d2());
  EXPECT_TRUE(is_unimodular(regular_subdivision(d2, iv({0, 1, 3, 6, 10})), d2));
  EXPECT_FALSE(is_unimodular(regular_subdivision(d2, iv({0, 10, 10, 10, 0})), d2));
}

TEST(Hilbert, MatchesBoxOracle) {
  const std::vector<std::vector<IntVector>> cones = {
      {iv({1, 0}), iv({1, 4})},
      {iv({2, 1}), iv({1, 3})},
      {iv({1, 0}), iv({1, 1}), iv({1, 3}), iv({1, 4})},
      {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})},
      {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 2, 4})},
      {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 1, 3})},
      {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 0, 2}), iv({0, 1, 2})},
  };
  for (const auto& gens : cones) {
    const HilbertBasis h = hilbert_basis(gens, 3);
    const std::set<IntVector> expect = hilbert_oracle(gens);
    EXPECT_EQ(std::set<IntVector>(h.elements.begin(), h.elements.end()), expect);
    EXPECT_TRUE(std::is_sorted(h.elements.begin(), h.elements.end()));
  }
}

TEST(Hilbert, SeedDoesNotChangeResult) {
  const std::vector<IntVector> gens = {iv({5, 0, 0}), iv({0, 5, 0}), iv({0, 0, 5}),
                                       iv({2, 1, 2}), iv({1, 4, 0}), iv({0, 2, 3})};
  const auto ref = hilbert_basis(gens, 0).elements;
  for (std::uint64_t s = 1; s < 6; ++s) EXPECT_EQ(hilbert_basis(gens, s).elements, ref);
}

TEST(Hilbert, LowerDimensionalCone) {
  // A plane cone inside Z^3 whose Hilbert basis contains (1,1,1).
  const auto h = hilbert_basis({iv({1, 0, 1}), iv({1, 2, 1})});
  EXPECT_EQ(h.elements, (std::vector<IntVector>{iv({1, 0, 1}), iv({1, 1, 1}), iv({1, 2, 1})}));
  EXPECT_EQ(hilbert_basis({iv({2, 4})}).elements, (std::vector<IntVector>{iv({1, 2})}));
}

TEST(Hilbert, RejectsBadInput) {
  EXPECT_THROW(hilbert_basis({}), Error);
  try {
    hilbert_basis({iv({1, 0}), iv({-1, 0}), iv({0, 1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPointed);
  }
}

TEST(Normality, Fixtures) {
  EXPECT_TRUE(is_normal(validate_problem(testing::gfamily())));
  EXPECT_TRUE(is_normal(validate_problem(testing::tiny())));
  EXPECT_TRUE(is_normal(validate_problem(testing::graded_d2())));
  EXPECT_FALSE(is_normal(validate_problem(testing::nonnormal())));
  EXPECT_FALSE(is_normal(validate_problem(testing::long_chain())));
}

TEST(Normality, DeltaNormalDependsOnTriangulation) {
  const ProblemInstance p = validate_problem(testing::gfamily());
  // (1,2,2) is an irreducible lattice point of the cone on columns 1, 2, 5
  // but not a column.
  const Triangulation t125 = regular_subdivision(p, iv({0, 0, 1, 1, 0, 3}));
  EXPECT_FALSE(is_delta_normal(p, t125));
  const auto h = hilbert_basis({p.column(0), p.column(1), p.column(4)}).elements;
  EXPECT_TRUE(std::count(h.begin(), h.end(), iv({1, 2, 2})));
  EXPECT_TRUE(is_delta_normal(p, Triangulation::from_faces({{0, 1, 5}}, 3)));
}

TEST(Normality, Supernormality) {
  EXPECT_TRUE(is_supernormal(validate_problem(testing::tiny())));
  EXPECT_TRUE(is_supernormal(validate_problem(testing::graded_d2())));
  EXPECT_FALSE(is_supernormal(validate_problem(testing::nonnormal())));
  // Normal, but the cone on columns 1, 3 misses (1,1,0).
  EXPECT_FALSE(is_supernormal(validate_problem(
      IntMatrix{{1, 0, 1, 0, 1}, {0, 1, 2, 0, 1}, {0, 0, 0, 1, 1}})));
}

TEST(Normality, ColumnsInCone) {
  const IntMatrix a = testing::gfamily();
  EXPECT_EQ(columns_in_cone(a, {0, 1, 5}), (IndexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(columns_in_cone(a, {0, 1}), (IndexSet{0, 1}));
}

}  // namespace
}  // namespace gomory

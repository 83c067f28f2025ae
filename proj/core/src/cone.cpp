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

#include "gomory/cone.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gomory/combinatorics.hpp"
#include "gomory/errors.hpp"
#include "gomory/lp.hpp"

namespace gomory {

Triangulation::Triangulation(std::vector<Face> maximal_faces, bool simplicial)
    : maximal_(std::move(maximal_faces)), simplicial_(simplicial) {
  for (auto& f : maximal_) std::sort(f.indices.begin(), f.indices.end());
  std::sort(maximal_.begin(), maximal_.end(),
            [](const Face& a, const Face& b) { return a.indices < b.indices; });
}

Triangulation Triangulation::from_faces(std::vector<IndexSet> maximal_faces,
                                        std::size_t d) {
  std::vector<Face> faces;
  bool simplicial = true;
  for (auto& s : maximal_faces) {
    if (s.size() != d) simplicial = false;
    faces.push_back(Face{std::move(s), {}});
  }
  return Triangulation(std::move(faces), simplicial);
}

std::vector<IndexSet> Triangulation::maximal_index_sets() const {
  std::vector<IndexSet> out;
  out.reserve(maximal_.size());
  for (const auto& f : maximal_) out.push_back(f.indices);
  return out;
}

bool Triangulation::contains_face(const IndexSet& tau) const {
  IndexSet sorted = tau;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& f : maximal_)
    if (is_subset(sorted, f.indices)) return true;
  return false;
}

std::vector<IndexSet> Triangulation::all_faces() const {
  std::set<IndexSet> faces;
  for (const auto& f : maximal_) {
    const auto k = f.indices.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      IndexSet s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) s.push_back(f.indices[i]);
      faces.insert(std::move(s));
    }
  }
  std::vector<IndexSet> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const IndexSet& a, const IndexSet& b) {
                     return a.size() < b.size();
                   });
  return out;
}

IndexSet Triangulation::vertices() const {
  std::set<int> v;
  for (const auto& f : maximal_) v.insert(f.indices.begin(), f.indices.end());
  return IndexSet(v.begin(), v.end());
}

Triangulation regular_subdivision(const IntMatrix& a, const RatVector& c) {
  const int d = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (c.size() != a.cols())
    throw Error(ErrorCode::kInvalidInput, "cost vector length must equal the column count");
  std::map<IndexSet, RatVector> facets;
  std::vector<RatVector> columns;
  for (int j = 0; j < n; ++j) columns.push_back(to_rat_vector(a.col(j)));

  for_each_combination(n, d, [&](const IndexSet& sigma) {
    // y A_sigma = c_sigma, i.e. A_sigma^T y = c_sigma.
    const IntMatrix at = a.select_cols(sigma).transpose();
    RatVector rhs;
    for (int j : sigma) rhs.push_back(c[static_cast<std::size_t>(j)]);
    auto y = solve_square(at, rhs);
    if (!y) return true;
    IndexSet tight;
    for (int j = 0; j < n; ++j) {
      const Rational v = dot(*y, columns[static_cast<std::size_t>(j)]);
      const auto& cj = c[static_cast<std::size_t>(j)];
      if (v > cj) return true;
      if (v == cj) tight.push_back(j);
    }
    facets.emplace(std::move(tight), std::move(*y));
    return true;
  });

  std::vector<Face> faces;
  bool simplicial = true;
  for (auto& [idx, y] : facets) {
    if (idx.size() != a.rows()) simplicial = false;
    faces.push_back(Face{idx, y});
  }
  return Triangulation(std::move(faces), simplicial);
}

Triangulation regular_subdivision(const ProblemInstance& p, const IntVector& c) {
  return regular_subdivision(p.a, to_rat_vector(c));
}

std::optional<RatVector> face_certificate(const IntMatrix& a, const RatVector& c,
                                          const IndexSet& tau) {
  const std::size_t d = a.rows();
  // Variables: y (d, free) and slack s (free); maximize s.
  lp::LinearProgram prog(d + 1);
  RatVector obj(d + 1, Rational(0));
  obj[d] = 1;
  prog.set_objective(obj);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    RatVector row(d + 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) row[i] = a(i, j);
    const bool on_face = std::binary_search(tau.begin(), tau.end(), static_cast<int>(j));
    if (on_face) {
      prog.add_constraint(row, lp::Relation::kEqual, c[j]);
    } else {
      row[d] = 1;
      prog.add_constraint(row, lp::Relation::kLessEqual, c[j]);
    }
  }
  RatVector cap(d + 1, Rational(0));
  cap[d] = 1;
  prog.add_constraint(cap, lp::Relation::kLessEqual, Rational(1));
  const lp::Solution sol = lp::solve(prog);
  if (sol.status == lp::Status::kInfeasible || sol.x[d] <= 0) return std::nullopt;
  return RatVector(sol.x.begin(), sol.x.begin() + static_cast<long>(d));
}

std::optional<RatVector> simplicial_coordinates(const IntMatrix& a,
                                                const IndexSet& sigma,
                                                const RatVector& b) {
  return solve_square(a.select_cols(sigma), b);
}

bool in_simplicial_cone(const IntMatrix& a, const IndexSet& sigma,
                        const RatVector& b) {
  auto lambda = simplicial_coordinates(a, sigma, b);
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(),
                     [](const Rational& q) { return q >= 0; });
}

IndexSet smallest_containing_face(const IntMatrix& a, const Triangulation& t,
                                  const IntVector& b) {
  if (!t.is_triangulation())
    throw Error(ErrorCode::kNonGenericCost, "subdivision is not a triangulation");
  const RatVector rb = to_rat_vector(b);
  for (const auto& f : t.maximal_faces()) {
    auto lambda = simplicial_coordinates(a, f.indices, rb);
    if (!lambda) continue;
    if (!std::all_of(lambda->begin(), lambda->end(),
                     [](const Rational& q) { return q >= 0; }))
      continue;
    IndexSet tau;
    for (std::size_t i = 0; i < lambda->size(); ++i)
      if ((*lambda)[i] != 0) tau.push_back(f.indices[i]);
    return tau;
  }
  throw Error(ErrorCode::kOutsideCone, "b is not in cone(A)");
}

bool is_unimodular(const Triangulation& t, const ProblemInstance& p) {
  for (const auto& f : t.maximal_faces()) {
    if (f.indices.size() != p.d()) return false;
    if (lattice_index(p, f.indices) != 1) return false;
  }
  return true;
}

namespace {

IntMatrix matrix_from_columns(const std::vector<IntVector>& cols) {
  const std::size_t d = cols.front().size();
  IntMatrix m(d, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = cols[j][i];
  return m;
}

Integer floor_of(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

// Lattice points sum lambda_i g_i with 0 <= lambda_i < 1 (zero excluded).
// Z^d / A_sigma Z^d is enumerated through the Smith form U A_sigma V = D:
// representatives are U^{-1} k with 0 <= k_i < D_ii.
std::vector<IntVector> parallelepiped_points(const IntMatrix& as) {
  const std::size_t d = as.rows();
  const SmithForm snf = smith_form(as);
  const auto u_inv = inverse(snf.left);
  const auto as_inv = inverse(as);
  IntVector bounds = snf.invariant_factors();
  std::vector<IntVector> out;
  IntVector k(d, Integer(0));
  for (;;) {
    RatVector v(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) v[i] += (*u_inv)(i, j) * k[j];
    RatVector lambda = (*as_inv) * v;
    for (auto& q : lambda) q -= floor_of(q);
    RatVector p = to_rational(as) * lambda;
    IntVector pt;
    bool nonzero = false;
    for (const auto& q : p) {
      pt.push_back(q.get_num());
      if (q != 0) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(pt));
    std::size_t i = 0;
    while (i < d) {
      ++k[i];
      if (k[i] < bounds[i]) break;
      k[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return out;
}

}  // namespace

HilbertBasis hilbert_basis(const std::vector<IntVector>& generators,
                           std::uint64_t seed) {
  if (generators.empty())
    throw Error(ErrorCode::kInvalidInput, "no generators");
  const IntMatrix full = matrix_from_columns(generators);
  const std::size_t r = rank(full);
  if (r != full.rows()) {
    // Work in the saturated lattice span(G) cap Z^d, basis M (d x r), with
    // coordinates z = (M^T M)^{-1} M^T g, and map the result back.
    const IntMatrix normals = kernel_lattice_basis(full.transpose()).b;
    const IntMatrix m = kernel_lattice_basis(normals.transpose()).b;
    const RatMatrix proj = *inverse(m.transpose() * m) * to_rational(m.transpose());
    std::vector<IntVector> coords;
    for (const auto& v : generators) {
      IntVector z;
      for (const auto& q : proj * to_rat_vector(v)) z.push_back(q.get_num());
      coords.push_back(std::move(z));
    }
    HilbertBasis low = hilbert_basis(coords, seed);
    HilbertBasis out;
    out.cone_generators = generators;
    for (const auto& z : low.elements) out.elements.push_back(m * z);
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }
  const IntMatrix& g = full;
  const std::size_t d = g.rows();
  {
    lp::LinearProgram prog(d);
    for (const auto& v : generators)
      prog.add_constraint(to_rat_vector(v), lp::Relation::kGreaterEqual, Rational(1));
    if (!lp::feasible(prog))
      throw Error(ErrorCode::kNotPointed, "generators span a cone that is not pointed");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> height(0, 1L << 20);
  Triangulation tri;
  for (int attempt = 0;; ++attempt) {
    RatVector lift;
    for (std::size_t j = 0; j < generators.size(); ++j) lift.emplace_back(height(rng));
    tri = regular_subdivision(g, lift);
    if (tri.is_triangulation()) break;
    if (attempt > 200)
      throw Error(ErrorCode::kInvalidInput, "could not triangulate the cone");
  }

  std::set<IntVector> candidates(generators.begin(), generators.end());
  std::vector<RatMatrix> inverses;
  for (const auto& f : tri.maximal_faces()) {
    const IntMatrix as = g.select_cols(f.indices);
    inverses.push_back(*inverse(as));
    for (auto& p : parallelepiped_points(as)) candidates.insert(std::move(p));
  }

  auto in_cone = [&](const IntVector& v) {
    const RatVector rv = to_rat_vector(v);
    for (const auto& inv : inverses) {
      const RatVector lambda = inv * rv;
      if (std::all_of(lambda.begin(), lambda.end(),
                      [](const Rational& q) { return q >= 0; }))
        return true;
    }
    return false;
  };

  HilbertBasis out;
  out.cone_generators = generators;
  const std::vector<IntVector> cand(candidates.begin(), candidates.end());
  for (const auto& h : cand) {
    bool reducible = false;
    for (const auto& other : cand) {
      if (other == h) continue;
      IntVector diff(d);
      for (std::size_t i = 0; i < d; ++i) diff[i] = h[i] - other[i];
      if (in_cone(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.elements.push_back(h);
  }
  return out;
}

IndexSet columns_in_cone(const IntMatrix& a, const IndexSet& sigma) {
  IndexSet out;
  const bool simplicial =
      sigma.size() == a.rows() && determinant(a.select_cols(sigma)) != 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const RatVector aj = to_rat_vector(a.col(j));
    bool inside;
    if (simplicial) {
      inside = in_simplicial_cone(a, sigma, aj);
    } else {
      lp::LinearProgram prog(sigma.size());
      prog.set_all_nonnegative();
      for (std::size_t i = 0; i < a.rows(); ++i) {
        RatVector row;
        for (int k : sigma) row.emplace_back(a(i, static_cast<std::size_t>(k)));
        prog.add_constraint(row, lp::Relation::kEqual, aj[i]);
      }
      inside = lp::feasible(prog);
    }
    if (inside) out.push_back(static_cast<int>(j));
  }
  return out;
}

namespace {

bool columns_form_hilbert_basis(const IntMatrix& a, const IndexSet& cols) {
  std::vector<IntVector> gens;
  for (int j : cols) gens.push_back(a.col(static_cast<std::size_t>(j)));
  const std::set<IntVector> have(gens.begin(), gens.end());
  for (const auto& h : hilbert_basis(gens).elements)
    if (!have.count(h)) return false;
  return true;
}

}  // namespace

bool is_normal(const ProblemInstance& p) {
  IndexSet all(p.n());
  for (std::size_t j = 0; j < p.n(); ++j) all[j] = static_cast<int>(j);
  return columns_form_hilbert_basis(p.a, all);
}

bool is_delta_normal(const ProblemInstance& p, const Triangulation& t) {
  for (const auto& f : t.maximal_faces())
    if (!columns_form_hilbert_basis(p.a, columns_in_cone(p.a, f.indices)))
      return false;
  return true;
}

bool is_supernormal(const ProblemInstance& p) {
  const int n = static_cast<int>(p.n());
  if (n > 20)
    throw Error(ErrorCode::kInvalidInput, "supernormality test limited to n <= 20");
  std::set<IndexSet> checked;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    const IndexSet s = index_set_from_mask(mask, n);
    IndexSet closure = columns_in_cone(p.a, s);
    if (!checked.insert(closure).second) continue;
    if (!columns_form_hilbert_basis(p.a, closure)) return false;
  }
  return true;
}

GomoryCostConstruction construct_gomory_cost(const ProblemInstance& p,
                                             const Triangulation& t,
                                             const IntVector& seed_cost) {
  const std::size_t n = p.n();
  if (!t.is_triangulation())
    throw Error(ErrorCode::kInvalidInput, "target is not a triangulation");
  if (!(regular_subdivision(p, seed_cost) == t))
    throw Error(ErrorCode::kInvalidInput, "seed cost does not induce the target triangulation");
  if (!is_delta_normal(p, t))
    throw Error(ErrorCode::kNotDeltaNormal, "A is not Delta-normal for the target triangulation");

  GomoryCostConstruction out;
  out.ray_generators = t.vertices();
  RatVector c(n, Rational(0));
  for (int j : out.ray_generators) c[static_cast<std::size_t>(j)] = seed_cost[static_cast<std::size_t>(j)];

  // Hilbert bases of the maximal cones decide which off-ray columns are
  // redundant (reducible or repeated); those are lifted above the facet.
  std::vector<std::set<IntVector>> bases;
  for (const auto& f : t.maximal_faces()) {
    std::vector<IntVector> gens;
    for (int j : f.indices) gens.push_back(p.column(static_cast<std::size_t>(j)));
    const auto hb = hilbert_basis(gens).elements;
    bases.emplace_back(hb.begin(), hb.end());
  }
  std::set<IntVector> used;
  for (int j : out.ray_generators) used.insert(p.column(static_cast<std::size_t>(j)));
  for (std::size_t j = 0; j < n; ++j) {
    if (std::binary_search(out.ray_generators.begin(), out.ray_generators.end(),
                           static_cast<int>(j)))
      continue;
    const IntVector aj = p.column(j);
    const RatVector raj = to_rat_vector(aj);
    bool placed = false;
    for (std::size_t k = 0; k < t.maximal_faces().size() && !placed; ++k) {
      const auto& sigma = t.maximal_faces()[k].indices;
      auto lambda = simplicial_coordinates(p.a, sigma, raj);
      if (!lambda || !std::all_of(lambda->begin(), lambda->end(),
                                  [](const Rational& q) { return q >= 0; }))
        continue;
      Rational value = 0;
      for (std::size_t i = 0; i < sigma.size(); ++i)
        value += (*lambda)[i] * c[static_cast<std::size_t>(sigma[i])];
      const bool redundant = !bases[k].count(aj) || used.count(aj);
      if (redundant) {
        value += 1;
        out.lifted_columns.push_back(static_cast<int>(j));
      } else {
        used.insert(aj);
      }
      c[j] = value;
      placed = true;
    }
    if (!placed)
      throw Error(ErrorCode::kInvalidInput, "column outside the triangulated cone");
  }
  out.interpolated = c;

  Integer max_abs = 1, max_det = 1;
  for (const auto& q : c) {
    Integer v = q.get_num() < 0 ? Integer(-q.get_num()) : q.get_num();
    v = v / q.get_den() + 1;
    if (v > max_abs) max_abs = v;
  }
  for (const auto& f : t.maximal_faces()) {
    Integer det = determinant(p.columns(f.indices));
    if (det < 0) det = -det;
    if (det > max_det) max_det = det;
  }
  Rational eps(Integer(1), Integer(2) * Integer(static_cast<long>(n)) * max_abs * max_det);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    RatVector perturbed = c;
    for (int j : out.ray_generators) perturbed[static_cast<std::size_t>(j)] -= eps;
    const Triangulation check = regular_subdivision(p.a, perturbed);
    if (!check.is_triangulation() || !(check == t)) continue;
    IntVector cost = clear_denominators(perturbed);
    // Shift by a multiple of the positive grading (a row-space vector, so the
    // induced order on every fiber is unchanged) to make all entries >= 0.
    Integer shift = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (cost[j] >= 0) continue;
      Integer need = (-cost[j] + p.degrees[j] - 1) / p.degrees[j];
      if (need > shift) shift = need;
    }
    for (std::size_t j = 0; j < n; ++j) cost[j] += shift * p.degrees[j];
    out.cost = primitive(cost);
    out.epsilon = eps;
    return out;
  }
  throw Error(ErrorCode::kInvalidInput, "no admissible perturbation found");
}

}  // namespace gomory

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

#include "gomory/relaxation.hpp"

#include <algorithm>
#include <stdexcept>

#include "gomory/errors.hpp"
#include "gomory/lp.hpp"

namespace gomory {

namespace {

Integer ceil_of(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

Integer floor_of(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

// Values of [lo, hi] ordered by absolute value, then by sign.
std::vector<Integer> ordered_range(const Integer& lo, const Integer& hi) {
  std::vector<Integer> v;
  for (Integer x = lo; x <= hi; ++x) v.push_back(x);
  std::stable_sort(v.begin(), v.end(), [](const Integer& a, const Integer& b) {
    const Integer aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab;
    return a < b;
  });
  return v;
}

struct RayFound {
  IntVector ray;
};

// Depth-first search over {z : M z <= h, obj . z <= cut}; the cut is optional
// and may tighten during the search.
class LatticeSearch {
 public:
  LatticeSearch(const IntMatrix& m, const IntVector& h) : m_(m), h_(h), z_(m.cols(), Integer(0)) {}

  void set_cut(const IntVector& obj, const Integer& cut) {
    obj_ = obj;
    cut_ = cut;
  }
  void tighten(const Integer& cut) { cut_ = cut; }

  // Return false from the visitor to stop.
  template <typename Visit>
  bool run(Visit&& visit, bool want_rays) {
    want_rays_ = want_rays;
    return dfs(0, visit);
  }

 private:
  template <typename Visit>
  bool dfs(std::size_t t, Visit& visit) {
    const std::size_t k = m_.cols();
    if (t == k) {
      for (std::size_t i = 0; i < m_.rows(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < k; ++j) s += m_(i, j) * z_[j];
        if (s > h_[i]) return true;
      }
      if (obj_ && dot(*obj_, z_) > cut_) return true;
      return visit(static_cast<const IntVector&>(z_));
    }
    Integer lo, hi;
    if (!range(t, lo, hi)) return true;
    for (const auto& v : ordered_range(lo, hi)) {
      z_[t] = v;
      if (!dfs(t + 1, visit)) return false;
    }
    z_[t] = 0;
    return true;
  }

  // LP bounds on z_t given the fixed prefix; false when the slice is empty.
  bool range(std::size_t t, Integer& lo, Integer& hi) {
    const std::size_t k = m_.cols();
    const std::size_t free = k - t;
    lp::LinearProgram prog(free);
    auto add_row = [&](auto coeff, const Integer& rhs) {
      RatVector row(free);
      Rational r = rhs;
      for (std::size_t j = 0; j < k; ++j) {
        if (j < t)
          r -= coeff(j) * z_[j];
        else
          row[j - t] = coeff(j);
      }
      prog.add_constraint(std::move(row), lp::Relation::kLessEqual, r);
    };
    for (std::size_t i = 0; i < m_.rows(); ++i)
      add_row([&](std::size_t j) { return Rational(m_(i, j)); }, h_[i]);
    if (obj_) add_row([&](std::size_t j) { return Rational((*obj_)[j]); }, cut_);

    Rational bounds[2];
    for (int side = 0; side < 2; ++side) {
      RatVector objective(free, Rational(0));
      objective[0] = side == 0 ? -1 : 1;
      prog.set_objective(objective);
      const lp::Solution sol = lp::solve(prog);
      if (sol.status == lp::Status::kInfeasible) return false;
      if (sol.status == lp::Status::kUnbounded) {
        if (!want_rays_)
          throw Error(ErrorCode::kUnboundedRelaxation, "lattice search region is unbounded");
        RatVector full(k, Rational(0));
        for (std::size_t j = 0; j < free; ++j) full[t + j] = sol.ray[j];
        IntVector ray = primitive(clear_denominators(full));
        check_ray(ray);
        throw RayFound{std::move(ray)};
      }
      bounds[side] = side == 0 ? Rational(-sol.value) : sol.value;
    }
    lo = ceil_of(bounds[0]);
    hi = floor_of(bounds[1]);
    return lo <= hi;
  }

  void check_ray(const IntVector& r) const {
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < m_.cols(); ++j) s += m_(i, j) * r[j];
      if (s > 0) throw std::logic_error("LP returned an invalid recession ray");
    }
    if (obj_ && dot(*obj_, r) > 0) throw std::logic_error("LP ray violates the cut");
  }

  const IntMatrix& m_;
  const IntVector& h_;
  std::optional<IntVector> obj_;
  Integer cut_;
  IntVector z_;
  bool want_rays_ = false;
};

bool is_zero_vector(const IntVector& z) {
  return std::all_of(z.begin(), z.end(), [](const Integer& x) { return x == 0; });
}

struct Minimum {
  Integer value;
  IntVector argmin;  // lexicographically smallest minimizer
  std::size_t count = 0;
};

// Minimizes obj over lattice points of {M z <= h, obj z <= 0}; 0 is feasible.
Minimum minimize_lattice(const IntMatrix& m, const IntVector& h, const IntVector& obj) {
  Minimum best;
  best.value = 0;
  best.argmin = IntVector(m.cols(), Integer(0));
  best.count = 0;
  LatticeSearch search(m, h);
  search.set_cut(obj, Integer(0));
  search.run(
      [&](const IntVector& z) {
        const Integer v = dot(obj, z);
        if (v < best.value || best.count == 0) {
          best.value = v;
          best.argmin = z;
          best.count = 1;
          search.tighten(v);
        } else if (v == best.value) {
          ++best.count;
          if (z < best.argmin) best.argmin = z;
        }
        return true;
      },
      false);
  return best;
}

IntMatrix append_row(const IntMatrix& m, const IntVector& row) {
  IntMatrix out(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) out(m.rows(), j) = row[j];
  return out;
}

IntVector objective_of(const KernelBasis& b, const IntVector& c) {
  IntVector obj(b.b.cols(), Integer(0));
  for (std::size_t k = 0; k < b.b.cols(); ++k)
    for (std::size_t j = 0; j < b.b.rows(); ++j) obj[k] -= c[j] * b.b(j, k);
  return obj;
}

void check_nonnegative_vector(const IntVector& u, std::size_t n, const char* what) {
  if (u.size() != n)
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " has the wrong length");
  for (const auto& x : u)
    if (x < 0) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be nonnegative");
}

}  // namespace

void for_each_lattice_point(const IntMatrix& m, const IntVector& h,
                            const std::function<bool(const IntVector&)>& visit) {
  LatticeSearch search(m, h);
  search.run(visit, false);
}

std::optional<IntVector> find_nonzero_lattice_point(const IntMatrix& m, const IntVector& h) {
  std::optional<IntVector> found;
  LatticeSearch search(m, h);
  try {
    search.run(
        [&](const IntVector& z) {
          if (is_zero_vector(z)) return true;
          found = z;
          return false;
        },
        true);
  } catch (RayFound& r) {
    return r.ray;
  }
  return found;
}

LatticeProgram lattice_program(const ProblemInstance& p, const IntVector& c,
                               const IndexSet& tau, const IntVector& u) {
  LatticeProgram lp;
  lp.basis = kernel_lattice_basis(p);
  lp.objective = objective_of(lp.basis, c);
  lp.dropped = tau;
  lp.kept_rows = complement(tau, static_cast<int>(p.n()));
  lp.lhs = lp.basis.b.select_rows(lp.kept_rows);
  for (int j : lp.kept_rows) lp.rhs.push_back(u[static_cast<std::size_t>(j)]);
  return lp;
}

RatVector reduced_cost(const ProblemInstance& p, const IntVector& c,
                       const IndexSet& sigma, const IndexSet& tau) {
  if (!is_subset(tau, sigma))
    throw Error(ErrorCode::kInvalidInput, "tau must be contained in sigma");
  if (sigma.size() != p.d())
    throw Error(ErrorCode::kSingularBasis, "sigma must have d columns");
  RatVector cs;
  for (int j : sigma) cs.emplace_back(c[static_cast<std::size_t>(j)]);
  auto y = solve_square(p.columns(sigma).transpose(), cs);
  if (!y) throw Error(ErrorCode::kSingularBasis, "A_sigma is singular");
  const RatVector ya = left_multiply(*y, p.a);
  RatVector out(p.n());
  for (std::size_t j = 0; j < p.n(); ++j) out[j] = Rational(c[j]) - ya[j];
  for (int j : sigma) out[static_cast<std::size_t>(j)] = 0;
  return out;
}

IntVector ip_solve_bruteforce(const ProblemInstance& p, const IntVector& c,
                              const IntVector& b) {
  const std::size_t n = p.n(), d = p.d();
  if (b.size() != d) throw Error(ErrorCode::kInvalidInput, "rhs has the wrong length");
  Integer budget = dot(p.pointing, b);
  if (budget < 0) throw Error(ErrorCode::kInfeasible, "b is not in the semigroup NA");
  IntVector x(n, Integer(0)), residual = b;
  std::optional<IntVector> best;
  Integer best_cost;
  auto dfs = [&](auto&& self, std::size_t j, const Integer& left) -> void {
    if (j == n) {
      if (!std::all_of(residual.begin(), residual.end(), [](const Integer& r) { return r == 0; }))
        return;
      const Integer cost = dot(c, x);
      if (!best || cost < best_cost) {
        best = x;
        best_cost = cost;
      }
      return;
    }
    const Integer cap = left / p.degrees[j];
    for (Integer k = 0; k <= cap; ++k) {
      x[j] = k;
      self(self, j + 1, left - k * p.degrees[j]);
      for (std::size_t i = 0; i < d; ++i) residual[i] -= p.a(i, j);
    }
    for (std::size_t i = 0; i < d; ++i) residual[i] += (cap + 1) * p.a(i, j);
    x[j] = 0;
  };
  dfs(dfs, 0, budget);
  if (!best) throw Error(ErrorCode::kInfeasible, "b is not in the semigroup NA");
  return *best;
}

RelaxationResult group_relax_solve(const ProblemInstance& p, const IntVector& c,
                                   const IndexSet& tau, const IntVector& b,
                                   const IntVector& u) {
  if (c.size() != p.n()) throw Error(ErrorCode::kInvalidInput, "cost has the wrong length");
  if (u.size() != p.n() || std::any_of(u.begin(), u.end(), [](const Integer& x) { return x < 0; }) ||
      p.a * u != b)
    throw Error(ErrorCode::kInfeasibleU, "u is not a feasible solution for b");
  const LatticeProgram prog = lattice_program(p, c, tau, u);
  const std::size_t k = prog.basis.b.cols();

  // Theorem: the relaxation is bounded iff tau is a face of the regular
  // triangulation; decided here directly by LP.
  lp::LinearProgram relax(k);
  RatVector neg_obj;
  for (const auto& o : prog.objective) neg_obj.emplace_back(-o);
  relax.set_objective(neg_obj);
  for (std::size_t i = 0; i < prog.lhs.rows(); ++i)
    relax.add_constraint(to_rat_vector(prog.lhs.row(i)), lp::Relation::kLessEqual,
                         Rational(prog.rhs[i]));
  if (lp::solve(relax).status == lp::Status::kUnbounded)
    throw Error(ErrorCode::kUnboundedRelaxation, "tau is not a face of the regular triangulation");

  Minimum best;
  try {
    best = minimize_lattice(prog.lhs, prog.rhs, prog.objective);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUnboundedRelaxation)
      throw Error(ErrorCode::kNonGenericCost, "optimal face of the relaxation is unbounded");
    throw;
  }
  RelaxationResult r;
  r.z_star = best.argmin;
  r.x_star = u;
  const IntVector bz = prog.basis.b * r.z_star;
  for (std::size_t j = 0; j < p.n(); ++j) r.x_star[j] -= bz[j];
  r.unique = best.count == 1;
  r.objective_value = dot(c, r.x_star);
  r.solves_ip = r.unique &&
      std::all_of(r.x_star.begin(), r.x_star.end(), [](const Integer& x) { return x >= 0; });
  return r;
}

bool relaxation_is_bounded(const Triangulation& t, const IndexSet& tau) {
  return t.contains_face(tau);
}

std::optional<IntVector> unboundedness_certificate(const ProblemInstance& p,
                                                   const IntVector& c,
                                                   const IndexSet& tau) {
  const LatticeProgram prog = lattice_program(p, c, tau, IntVector(p.n(), Integer(0)));
  const std::size_t k = prog.basis.b.cols();
  lp::LinearProgram ray(k);
  RatVector neg_obj;
  for (const auto& o : prog.objective) neg_obj.emplace_back(-o);
  ray.set_objective(neg_obj);
  for (std::size_t i = 0; i < prog.lhs.rows(); ++i)
    ray.add_constraint(to_rat_vector(prog.lhs.row(i)), lp::Relation::kLessEqual, Rational(0));
  ray.add_constraint(to_rat_vector(prog.objective), lp::Relation::kGreaterEqual, Rational(-1));
  const lp::Solution sol = lp::solve(ray);
  if (sol.status != lp::Status::kOptimal || sol.value <= 0) return std::nullopt;
  return primitive(clear_denominators(sol.x));
}

IndexSet gomory_relaxation_face(const ProblemInstance& p, const Triangulation& t,
                                const IntVector& b) {
  const RatVector rb = to_rat_vector(b);
  for (const auto& f : t.maximal_faces())
    if (f.indices.size() == p.d() && in_simplicial_cone(p.a, f.indices, rb)) return f.indices;
  throw Error(ErrorCode::kOutsideCone, "b is not in cone(A)");
}

bool in_order_ideal(const KernelBasis& b, const IntVector& c, const IntVector& u) {
  check_nonnegative_vector(u, b.b.rows(), "u");
  const IntVector obj = objective_of(b, c);
  const Minimum best = minimize_lattice(b.b, u, obj);
  if (best.value < 0) return false;
  if (best.count > 1)
    throw Error(ErrorCode::kNonGenericCost, "fiber has several optimal solutions");
  return true;
}

bool is_standard_polytope(const KernelBasis& b, const IntVector& c, const IntVector& u,
                          const IndexSet& tau) {
  const std::size_t n = b.b.rows();
  check_nonnegative_vector(u, n, "u");
  for (int j : tau)
    if (u[static_cast<std::size_t>(j)] != 0)
      throw Error(ErrorCode::kInvalidInput, "supp(u) must avoid tau");
  const IntVector obj = objective_of(b, c);
  const IndexSet rows = complement(tau, static_cast<int>(n));
  const IntMatrix lhs = b.b.select_rows(rows);
  IntVector rhs;
  for (int j : rows) rhs.push_back(u[static_cast<std::size_t>(j)]);
  const Minimum best = minimize_lattice(lhs, rhs, obj);
  if (best.value < 0) return false;
  if (best.count > 1)
    throw Error(ErrorCode::kNonGenericCost, "relaxation has several optimal solutions");
  for (std::size_t drop = 0; drop < rows.size(); ++drop) {
    IndexSet keep;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != drop) keep.push_back(static_cast<int>(i));
    const IntMatrix sub = append_row(lhs.select_rows(keep), obj);
    IntVector sub_rhs;
    for (int i : keep) sub_rhs.push_back(rhs[static_cast<std::size_t>(i)]);
    sub_rhs.push_back(Integer(0));
    if (!find_nonzero_lattice_point(sub, sub_rhs)) return false;
  }
  return true;
}

}  // namespace gomory

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

#include "gomory/lattice.hpp"

#include <algorithm>
#include <utility>

#include "gomory/errors.hpp"
#include "gomory/lp.hpp"

namespace gomory {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace

HermiteForm column_hermite_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm out{a, IntMatrix::identity(n), 0, {}};
  IntMatrix& h = out.hermite;
  IntMatrix& v = out.transform;
  std::size_t k = 0;
  for (std::size_t r = 0; r < m && k < n; ++r) {
    bool has_pivot = false;
    for (;;) {
      // Pivot on the entry of minimal absolute value to keep entries small.
      std::size_t best = n;
      for (std::size_t j = k; j < n; ++j) {
        if (h(r, j) == 0) continue;
        if (best == n || abs_value(h(r, j)) < abs_value(h(r, best))) best = j;
      }
      if (best == n) break;
      has_pivot = true;
      h.swap_cols(best, k);
      v.swap_cols(best, k);
      bool clear = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (h(r, j) == 0) continue;
        const Integer q = floor_div(h(r, j), h(r, k));
        h.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (h(r, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!has_pivot) continue;
    if (h(r, k) < 0) {
      h.negate_col(k);
      v.negate_col(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Integer q = floor_div(h(r, j), h(r, k));
      if (q == 0) continue;
      h.add_col_multiple(j, k, -q);
      v.add_col_multiple(j, k, -q);
    }
    out.pivot_rows.push_back(r);
    ++k;
  }
  out.rank = k;
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  const std::size_t k = std::min(smith.rows(), smith.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(smith(i, i));
  return out;
}

SmithForm smith_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& s = out.smith;
  IntMatrix& u = out.left;
  IntMatrix& v = out.right;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Minimal nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&]() {
      std::size_t br = m, bc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (br == m || abs_value(s(i, j)) < abs_value(s(br, bc))) {
            br = i;
            bc = j;
          }
        }
      if (br == m) return false;
      s.swap_rows(t, br);
      u.swap_rows(t, br);
      s.swap_cols(t, bc);
      v.swap_cols(t, bc);
      return true;
    };
    if (!move_min_to_pivot()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) {
        move_min_to_pivot();
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
      move_min_to_pivot();
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::size_t rank(const IntMatrix& a) { return column_hermite_form(a).rank; }

Integer determinant(const IntMatrix& square) {
  const std::size_t n = square.rows();
  if (n != square.cols())
    throw Error(ErrorCode::kInvalidInput, "determinant of a non-square matrix");
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix m = square;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular_matrix(const IntMatrix& square) {
  return abs_value(determinant(square)) == 1;
}

std::optional<RatVector> solve_square(const IntMatrix& square,
                                      const RatVector& b) {
  const std::size_t n = square.rows();
  RatMatrix m = to_rational(square);
  RatVector rhs = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(k, p);
    std::swap(rhs[k], rhs[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      m.add_row_multiple(i, k, -f);
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) rhs[k] /= m(k, k);
  return rhs;
}

std::optional<RatMatrix> inverse(const IntMatrix& square) {
  const std::size_t n = square.rows();
  RatMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector e(n, Rational(0));
    e[c] = 1;
    auto x = solve_square(square, e);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) out(r, c) = (*x)[r];
  }
  return out;
}

Integer maximal_minor_gcd(const IntMatrix& a) {
  const SmithForm snf = smith_form(a);
  Integer g = 1;
  for (const auto& f : snf.invariant_factors()) g *= f;
  return g;
}

namespace {

IntVector find_pointing_vector(const IntMatrix& a) {
  lp::LinearProgram prog(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    prog.add_constraint(to_rat_vector(a.col(j)), lp::Relation::kGreaterEqual,
                        Rational(1));
  const lp::Solution sol = lp::solve(prog);
  if (sol.status == lp::Status::kInfeasible)
    throw Error(ErrorCode::kConeNotPointed,
                "cone(A) is not pointed: no w with w.a_j > 0 for all columns");
  return clear_denominators(sol.x);
}

}  // namespace

ProblemInstance validate_problem(const IntMatrix& a, std::optional<IntVector> c) {
  if (a.rows() == 0 || a.cols() == 0 || a.is_zero())
    throw Error(ErrorCode::kInvalidInput, "matrix must be nonzero");
  if (a.rows() > a.cols())
    throw Error(ErrorCode::kRankDeficient, "matrix has more rows than columns");
  if (c && c->size() != a.cols())
    throw Error(ErrorCode::kInvalidInput, "cost vector length must equal the column count");
  if (rank(a) != a.rows())
    throw Error(ErrorCode::kRankDeficient, "matrix does not have full row rank");

  ProblemInstance p;
  p.input = a;
  p.c = std::move(c);
  p.pointing = find_pointing_vector(a);

  const std::size_t d = a.rows();
  const SmithForm snf = smith_form(a);
  bool trivial = true;
  for (const auto& f : snf.invariant_factors())
    if (f != 1) trivial = false;
  if (trivial) {
    p.a = a;
    p.rhs_transform = to_rational(IntMatrix::identity(d));
  } else {
    // D^{-1} U A equals the first d rows of V^{-1}; both are integral.
    RatMatrix t(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        t(i, j) = Rational(snf.left(i, j)) / Rational(snf.smith(i, i));
    IntMatrix normalized(d, a.cols());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Rational v = 0;
        for (std::size_t k = 0; k < d; ++k) v += t(i, k) * a(k, j);
        normalized(i, j) = v.get_num();
      }
    p.a = std::move(normalized);
    p.rhs_transform = std::move(t);
    p.normalized = true;
    p.pointing = find_pointing_vector(p.a);
  }
  p.degrees.assign(p.a.cols(), Integer(0));
  for (std::size_t j = 0; j < p.a.cols(); ++j)
    p.degrees[j] = dot(p.pointing, p.a.col(j));
  return p;
}

IntVector normalize_rhs(const ProblemInstance& p, const IntVector& b) {
  if (b.size() != p.input.rows())
    throw Error(ErrorCode::kInvalidInput, "right-hand side has the wrong length");
  const RatVector image = p.rhs_transform * to_rat_vector(b);
  IntVector out;
  for (const auto& q : image) {
    if (q.get_den() != 1)
      throw Error(ErrorCode::kInfeasible,
                  "right-hand side is outside the lattice spanned by the columns");
    out.push_back(q.get_num());
  }
  return out;
}

KernelBasis kernel_lattice_basis(const IntMatrix& a) {
  const HermiteForm hnf = column_hermite_form(a);
  const std::size_t n = a.cols();
  KernelBasis out{IntMatrix(n, n - hnf.rank)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = hnf.rank; k < n; ++k)
      out.b(r, k - hnf.rank) = hnf.transform(r, k);
  return out;
}

KernelBasis kernel_lattice_basis(const ProblemInstance& p) {
  return kernel_lattice_basis(p.a);
}

Integer lattice_index(const ProblemInstance& p, const IndexSet& sigma) {
  if (sigma.size() != p.d())
    throw Error(ErrorCode::kInvalidInput, "basis must have exactly d columns");
  const Integer det = determinant(p.columns(sigma));
  if (det == 0)
    throw Error(ErrorCode::kSingularBasis, "A_sigma is singular");
  return abs_value(det) / maximal_minor_gcd(p.a);
}

}  // namespace gomory

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

#include "gomory/lp.hpp"

#include <cassert>
#include <optional>

namespace gomory::lp {

void LinearProgram::add_constraint(RatVector coeffs, Relation rel,
                                   Rational rhs) {
  assert(coeffs.size() == num_vars_);
  rows_.push_back(std::move(coeffs));
  relations_.push_back(rel);
  rhs_.push_back(std::move(rhs));
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows, RatVector(cols + 1, Rational(0))),
        basis_(rows, 0), obj_(cols + 1, Rational(0)) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][n_]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Objective row holds reduced costs for maximization of cost . x: entry j is
  // the amount the objective *decreases* per unit of x_j (negative means the
  // column improves). obj_[n_] holds the current objective value.
  void set_objective(const RatVector& cost) {
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = -cost[j];
    obj_[n_] = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j) obj_[j] += cb * t_[r][j];
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = 1 / t_[pr][pc];
    for (auto& v : t_[pr])
      if (v != 0) v *= inv;
    Rational f;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || t_[r][pc] == 0) continue;
      f = t_[r][pc];
      eliminate(t_[r], t_[pr], f);
    }
    if (obj_[pc] != 0) {
      f = obj_[pc];
      eliminate(obj_, t_[pr], f);
    }
    basis_[pr] = pc;
  }

  // Runs simplex iterations over columns [0, active_cols). Returns the
  // entering column with no bounding row on unboundedness.
  std::optional<std::size_t> optimize(std::size_t active_cols) {
    for (;;) {
      std::size_t enter = active_cols;
      for (std::size_t j = 0; j < active_cols; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == active_cols) return std::nullopt;
      std::size_t leave = m_;
      Rational best;
      Rational ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (t_[r][enter] <= 0) continue;
        ratio = t_[r][n_] / t_[r][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m_) return enter;
      pivot(leave, enter);
    }
  }

  const Rational& objective_value() const { return obj_[n_]; }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
    --m_;
  }

  void truncate_columns(std::size_t keep) {
    for (auto& row : t_) {
      Rational rhs_value = row[n_];
      row.resize(keep + 1);
      row[keep] = rhs_value;
    }
    Rational v = obj_[n_];
    obj_.resize(keep + 1);
    obj_[keep] = v;
    n_ = keep;
  }

 private:
  static void eliminate(RatVector& target, const RatVector& source,
                        const Rational& factor) {
    for (std::size_t j = 0; j < source.size(); ++j)
      if (source[j] != 0) target[j] -= factor * source[j];
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
  RatVector obj_;
};

}  // namespace

Solution solve(const LinearProgram& program) {
  const std::size_t nv = program.num_vars();
  const std::size_t m = program.rows().size();

  // Column layout: structural (free vars split into +/-), slacks, artificials.
  std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = ncols++;
    if (!program.nonnegative()[j]) neg_col[j] = ncols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (program.relations()[i] != Relation::kEqual) slack_col[i] = ncols++;
  const std::size_t real_cols = ncols;

  // Decide which rows need an artificial variable.
  std::vector<bool> flip(m, false), needs_art(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = program.rhs()[i] < 0;
    const Relation rel = program.relations()[i];
    // After optional negation, the slack has coefficient +1 when the row is
    // "<=" with rhs >= 0, or ">=" with rhs < 0.
    if ((rel == Relation::kLessEqual && !flip[i]) ||
        (rel == Relation::kGreaterEqual && flip[i]))
      needs_art[i] = false;
  }
  std::vector<std::size_t> art_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (needs_art[i]) art_col[i] = ncols++;

  Tableau tab(m, ncols);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVector& row = program.rows()[i];
    const Rational sign = flip[i] ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j) {
      if (row[j] == 0) continue;
      tab.at(i, pos_col[j]) = sign * row[j];
      if (neg_col[j] != SIZE_MAX) tab.at(i, neg_col[j]) = -sign * row[j];
    }
    if (slack_col[i] != SIZE_MAX) {
      const Rational s =
          program.relations()[i] == Relation::kLessEqual ? 1 : -1;
      tab.at(i, slack_col[i]) = sign * s;
    }
    tab.rhs(i) = sign * program.rhs()[i];
    if (needs_art[i]) {
      tab.at(i, art_col[i]) = 1;
      tab.basis()[i] = art_col[i];
    } else {
      tab.basis()[i] = slack_col[i];
    }
  }

  Solution sol;
  if (real_cols != ncols) {
    RatVector phase1(ncols, Rational(0));
    for (std::size_t c = real_cols; c < ncols; ++c) phase1[c] = -1;
    tab.set_objective(phase1);
    tab.optimize(ncols);
    if (tab.objective_value() < 0) {
      sol.status = Status::kInfeasible;
      return sol;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < tab.rows();) {
      if (tab.basis()[r] < real_cols) {
        ++r;
        continue;
      }
      std::size_t pc = real_cols;
      for (std::size_t c = 0; c < real_cols; ++c)
        if (tab.at(r, c) != 0) {
          pc = c;
          break;
        }
      if (pc == real_cols) {
        tab.drop_row(r);
      } else {
        tab.pivot(r, pc);
        ++r;
      }
    }
    tab.truncate_columns(real_cols);
  }

  RatVector cost(real_cols, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    cost[pos_col[j]] = program.objective()[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -program.objective()[j];
  }
  tab.set_objective(cost);
  const auto unbounded_col = tab.optimize(real_cols);

  RatVector std_x(real_cols, Rational(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) std_x[tab.basis()[r]] = tab.rhs(r);
  auto to_original = [&](const RatVector& v) {
    RatVector out(nv, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) {
      out[j] = v[pos_col[j]];
      if (neg_col[j] != SIZE_MAX) out[j] -= v[neg_col[j]];
    }
    return out;
  };
  sol.x = to_original(std_x);
  sol.value = dot(program.objective(), sol.x);
  if (unbounded_col) {
    RatVector dir(real_cols, Rational(0));
    dir[*unbounded_col] = 1;
    for (std::size_t r = 0; r < tab.rows(); ++r)
      dir[tab.basis()[r]] = -tab.at(r, *unbounded_col);
    sol.ray = to_original(dir);
    sol.status = Status::kUnbounded;
  } else {
    sol.status = Status::kOptimal;
  }
  return sol;
}

bool feasible(const LinearProgram& program) {
  LinearProgram copy = program;
  copy.set_objective(RatVector(program.num_vars(), Rational(0)));
  return solve(copy).status != Status::kInfeasible;
}

}  // namespace gomory::lp

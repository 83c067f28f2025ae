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

#include "gomory/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gomory/errors.hpp"

namespace gomory {

namespace {

bool divides(const ExpVector& a, const ExpVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<ExpVector> minimalize(std::vector<ExpVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExpVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

using Mask = std::uint64_t;

Mask support_mask(const ExpVector& g) {
  Mask m = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) m |= Mask{1} << i;
  return m;
}

IndexSet mask_to_set(Mask m, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (m & (Mask{1} << i)) s.push_back(static_cast<int>(i));
  return s;
}

// Faces of the complex whose minimal non-faces are the given supports.
std::vector<Mask> complex_faces(const std::vector<Mask>& nonfaces, std::size_t n) {
  if (n > 24) throw Error(ErrorCode::kInvalidInput, "too many variables for face enumeration");
  std::vector<Mask> faces;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    bool ok = true;
    for (Mask f : nonfaces)
      if ((f & ~m) == 0) {
        ok = false;
        break;
      }
    if (ok) faces.push_back(m);
  }
  return faces;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<ExpVector> generators, std::size_t num_vars)
    : gens_(minimalize(std::move(generators))), n_(num_vars) {}

bool MonomialIdeal::contains(const ExpVector& u) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExpVector& g) { return divides(g, u); });
}

bool MonomialIdeal::is_square_free() const {
  for (const auto& g : gens_)
    for (Exponent e : g)
      if (e > 1) return false;
  return true;
}

bool is_admissible(const MonomialIdeal& m, const ExpVector& u, const IndexSet& tau) {
  std::vector<bool> free(u.size(), false);
  for (int j : tau) free[static_cast<std::size_t>(j)] = true;
  for (const auto& g : m.generators()) {
    bool escapes = false;
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!free[j] && g[j] > u[j]) {
        escapes = true;
        break;
      }
    if (!escapes) return false;
  }
  return true;
}

std::vector<StandardPair> standard_pairs(const MonomialIdeal& m) {
  const std::size_t n = m.num_vars();
  std::vector<Exponent> bound(n, 0);
  for (const auto& g : m.generators())
    for (std::size_t j = 0; j < n; ++j) bound[j] = std::max(bound[j], g[j]);

  std::vector<Mask> nonfaces;
  for (const auto& g : m.generators()) nonfaces.push_back(support_mask(g));
  const std::vector<Mask> faces = complex_faces(nonfaces, n);
  const std::set<Mask> face_set(faces.begin(), faces.end());

  std::vector<StandardPair> out;
  for (Mask tau : faces) {
    // Generators localized at tau: coordinates in tau set to zero.
    auto localize = [&](Mask t) {
      std::vector<ExpVector> loc;
      for (const auto& g : m.generators()) {
        ExpVector h = g;
        for (std::size_t j = 0; j < n; ++j)
          if (t & (Mask{1} << j)) h[j] = 0;
        loc.push_back(std::move(h));
      }
      return minimalize(std::move(loc));
    };
    const std::vector<ExpVector> loc = localize(tau);
    std::vector<std::pair<std::size_t, std::vector<ExpVector>>> ups;
    std::vector<std::size_t> free_coords;
    for (std::size_t j = 0; j < n; ++j) {
      if (tau & (Mask{1} << j)) continue;
      free_coords.push_back(j);
      const Mask up = tau | (Mask{1} << j);
      if (face_set.count(up)) ups.emplace_back(j, localize(up));
    }
    auto admissible = [](const std::vector<ExpVector>& gens, const ExpVector& u) {
      for (const auto& g : gens)
        if (divides(g, u)) return false;
      return true;
    };

    ExpVector u(n, 0);
    // Depth-first over the box; admissibility is monotone, so a failing
    // prefix prunes every larger value in that coordinate.
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (k == free_coords.size()) {
        for (const auto& [j, gens] : ups) {
          ExpVector v = u;
          v[j] = 0;
          if (admissible(gens, v)) return;
        }
        out.push_back(StandardPair{u, mask_to_set(tau, n)});
        return;
      }
      const std::size_t j = free_coords[k];
      for (Exponent e = 0; e < std::max<Exponent>(bound[j], 1); ++e) {
        u[j] = e;
        if (!admissible(loc, u)) break;
        self(self, k + 1);
      }
      u[j] = 0;
    };
    dfs(dfs, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal radical(const MonomialIdeal& m) {
  std::vector<ExpVector> gens;
  for (const auto& g : m.generators()) {
    ExpVector s(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) s[j] = g[j] > 0 ? 1 : 0;
    gens.push_back(std::move(s));
  }
  return MonomialIdeal(std::move(gens), m.num_vars());
}

Triangulation triangulation_from_radical(const MonomialIdeal& r, std::size_t d) {
  const std::size_t n = r.num_vars();
  std::vector<Mask> nonfaces;
  for (const auto& g : r.generators()) nonfaces.push_back(support_mask(g));
  const std::vector<Mask> faces = complex_faces(nonfaces, n);
  const std::set<Mask> face_set(faces.begin(), faces.end());
  std::vector<IndexSet> maximal;
  for (Mask f : faces) {
    bool is_max = true;
    for (std::size_t j = 0; j < n && is_max; ++j)
      if (!(f & (Mask{1} << j)) && face_set.count(f | (Mask{1} << j))) is_max = false;
    if (!is_max) continue;
    if (static_cast<std::size_t>(__builtin_popcountll(f)) != d)
      throw Error(ErrorCode::kNotPure, "complex of the radical is not pure of dimension d");
    maximal.push_back(mask_to_set(f, n));
  }
  return Triangulation::from_faces(std::move(maximal), d);
}

InitialIdeal initial_ideal(const GroebnerBasis& g) {
  InitialIdeal out;
  const std::size_t n = g.order.num_vars();
  std::vector<ExpVector> leads;
  for (const auto& b : g.elements) {
    leads.push_back(b.plus());
    if (g.cost && dot(*g.cost, b.d) <= 0) out.generic = false;
  }
  out.ideal = MonomialIdeal(std::move(leads), n);
  return out;
}

GomoryVerdict analyze_initial_ideal(const MonomialIdeal& m, std::size_t d) {
  GomoryVerdict v;
  v.triangulation = triangulation_from_radical(radical(m), d);
  v.pairs = standard_pairs(m);
  v.arithmetic_degree = v.pairs.size();
  v.gomory = true;
  for (const auto& p : v.pairs) {
    ++v.multiplicities[p.face];
    if (p.face.size() != d) v.gomory = false;
  }
  for (const auto& [face, count] : v.multiplicities) v.associated_faces.push_back(face);
  return v;
}

GroebnerBasis generic_groebner_basis(const ProblemInstance& p, const IntVector& c) {
  if (c.size() != p.n())
    throw Error(ErrorCode::kInvalidInput, "cost vector length must equal the column count");
  GroebnerBasis g = reduced_groebner_basis(p, toric_ideal(p), c);
  if (!initial_ideal(g).generic)
    throw Error(ErrorCode::kNonGenericCost, "cost vector is not generic");
  return g;
}

GomoryVerdict is_gomory_family(const ProblemInstance& p, const IntVector& c) {
  const GroebnerBasis g = generic_groebner_basis(p, c);
  return analyze_initial_ideal(initial_ideal(g).ideal, p.d());
}

bool tdi_check(const ProblemInstance& p, const IntVector& c) {
  const GroebnerBasis g = generic_groebner_basis(p, c);
  const MonomialIdeal m = initial_ideal(g).ideal;
  const bool square_free = m.is_square_free();
  const bool unimodular =
      is_unimodular(triangulation_from_radical(radical(m), p.d()), p);
  if (square_free != unimodular)
    throw std::logic_error("square-free test and unimodularity test disagree");
  return square_free;
}

}  // namespace gomory

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

#include "gomory/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gomory/errors.hpp"

namespace gomory {

ExpVector Binomial::plus() const {
  ExpVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] > 0 ? d[i] : 0;
  return out;
}

ExpVector Binomial::minus() const {
  ExpVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] < 0 ? -d[i] : 0;
  return out;
}

Binomial Binomial::from_terms(const ExpVector& plus, const ExpVector& minus) {
  Binomial b;
  b.d.resize(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) b.d[i] = checked_sub(plus[i], minus[i]);
  return b;
}

bool canonical_less(const Binomial& a, const Binomial& b) {
  const ExpVector ap = a.plus(), bp = b.plus();
  if (ap != bp) return ap < bp;
  return a.minus() < b.minus();
}

namespace {

constexpr std::int64_t kSmallWeight = std::int64_t{1} << 40;

std::vector<int> identity_order(std::size_t n) {
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  return order;
}

}  // namespace

TermOrder::TermOrder(std::vector<IntVector> weights, std::vector<int> revlex_order)
    : weights_(std::move(weights)), revlex_(std::move(revlex_order)) {
  bool small = true;
  for (const auto& w : weights_)
    for (const auto& x : w)
      if (!x.fits_slong_p() || x.get_si() >= kSmallWeight || x.get_si() <= -kSmallWeight)
        small = false;
  if (small)
    for (const auto& w : weights_) {
      std::vector<std::int64_t> s;
      for (const auto& x : w) s.push_back(x.get_si());
      small_weights_.push_back(std::move(s));
    }
}

TermOrder TermOrder::refined_cost(const IntVector& c) {
  return TermOrder({c, IntVector(c.size(), Integer(1))}, identity_order(c.size()));
}

TermOrder TermOrder::graded_revlex(const IntVector& grading, int last) {
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(grading.size()); ++i)
    if (i != last) order.push_back(i);
  order.push_back(last);
  return TermOrder({grading}, order);
}

int TermOrder::compare(const ExpVector& d) const {
  if (!small_weights_.empty() || weights_.empty()) {
    for (const auto& w : small_weights_) {
      __int128 s = 0;
      for (std::size_t i = 0; i < d.size(); ++i)
        s += static_cast<__int128>(w[i]) * d[i];
      if (s != 0) return s > 0 ? 1 : -1;
    }
  } else {
    for (const auto& w : weights_) {
      const Integer s = dot(w, d);
      if (s != 0) return s > 0 ? 1 : -1;
    }
  }
  for (auto it = revlex_.rbegin(); it != revlex_.rend(); ++it) {
    const Exponent e = d[static_cast<std::size_t>(*it)];
    if (e != 0) return e < 0 ? 1 : -1;
  }
  return 0;
}

namespace {

using Mask = std::uint64_t;

struct Element {
  ExpVector d;
  ExpVector lead;
  Mask mask = 0;
  bool active = true;
};

void set_lead(Element& e) {
  e.lead.resize(e.d.size());
  e.mask = 0;
  for (std::size_t i = 0; i < e.d.size(); ++i) {
    e.lead[i] = e.d[i] > 0 ? e.d[i] : 0;
    if (e.d[i] > 0) e.mask |= Mask{1} << i;
  }
}

Mask positive_mask(const ExpVector& d) {
  Mask m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) m |= Mask{1} << i;
  return m;
}

Mask negative_mask(const ExpVector& d) {
  Mask m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0) m |= Mask{1} << i;
  return m;
}

// lead <= positive part of d
bool divides_plus(const Element& e, const ExpVector& d, Mask dmask) {
  if (e.mask & ~dmask) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (e.lead[i] > 0 && e.lead[i] > d[i]) return false;
  return true;
}

// lead <= negative part of d
bool divides_minus(const Element& e, const ExpVector& d, Mask dmask) {
  if (e.mask & ~dmask) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (e.lead[i] > 0 && e.lead[i] > -d[i]) return false;
  return true;
}

bool divides(const ExpVector& a, const ExpVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVector lcm(const ExpVector& a, const ExpVector& b) {
  ExpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

void subtract_in_place(ExpVector& h, const ExpVector& g) {
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = checked_sub(h[i], g[i]);
}

void add_in_place(ExpVector& h, const ExpVector& g) {
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = checked_add(h[i], g[i]);
}

class Completion {
 public:
  Completion(const TermOrder& order, const IntVector& grading) : order_(order) {
    for (const auto& g : grading) {
      if (!g.fits_slong_p()) throw Error(ErrorCode::kOverflow, "grading too large");
      grading_.push_back(g.get_si());
    }
  }

  // Lead-reduces h modulo the active elements; returns false when h becomes 0.
  bool reduce(ExpVector& h) const {
    for (;;) {
      const int s = order_.compare(h);
      if (s == 0) return false;
      if (s < 0)
        for (auto& e : h) e = -e;
      const Mask m = positive_mask(h);
      const Element* reducer = nullptr;
      for (const auto& e : elems_) {
        if (e.active && divides_plus(e, h, m)) {
          reducer = &e;
          break;
        }
      }
      if (!reducer) return true;
      subtract_in_place(h, reducer->d);
    }
  }

  void insert(ExpVector h) {
    if (!reduce(h)) return;
    Element e;
    e.d = std::move(h);
    set_lead(e);
    const int k = static_cast<int>(elems_.size());
    elems_.push_back(std::move(e));
    update(k);
  }

  void run() {
    while (!pairs_.empty()) {
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ExpVector s = elems_[static_cast<std::size_t>(p.i)].d;
      subtract_in_place(s, elems_[static_cast<std::size_t>(p.j)].d);
      insert(std::move(s));
    }
  }

  std::vector<ExpVector> active() const {
    std::vector<ExpVector> out;
    for (const auto& e : elems_)
      if (e.active) out.push_back(e.d);
    return out;
  }

 private:
  struct Pair {
    std::int64_t degree;
    int i, j;
    friend bool operator<(const Pair& a, const Pair& b) {
      return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
    }
  };

  std::int64_t degree(const ExpVector& v) const {
    __int128 s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<__int128>(grading_[i]) * v[i];
    return static_cast<std::int64_t>(s);
  }

  ExpVector pair_lcm(int i, int j) const {
    return lcm(elems_[static_cast<std::size_t>(i)].lead, elems_[static_cast<std::size_t>(j)].lead);
  }

  // Gebauer-Moeller update after appending element k.
  void update(int k) {
    const Element& h = elems_[static_cast<std::size_t>(k)];
    struct Candidate {
      int g;
      ExpVector l;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> c;
    for (int g = 0; g < k; ++g) {
      const Element& e = elems_[static_cast<std::size_t>(g)];
      if (!e.active) continue;
      c.push_back({g, lcm(h.lead, e.lead), (h.mask & e.mask) == 0});
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a].coprime) continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].alive) continue;
        if (divides(c[b].l, c[a].l)) {
          c[a].alive = false;
          break;
        }
      }
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const ExpVector l = pair_lcm(it->i, it->j);
      if (divides(h.lead, l) && pair_lcm(it->i, k) != l && pair_lcm(it->j, k) != l)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (const auto& cand : c)
      if (cand.alive && !cand.coprime) pairs_.insert(Pair{degree(cand.l), cand.g, k});

    for (int g = 0; g < k; ++g) {
      Element& e = elems_[static_cast<std::size_t>(g)];
      if (e.active && divides(h.lead, e.lead)) e.active = false;
    }
  }

  const TermOrder& order_;
  std::vector<std::int64_t> grading_;
  std::vector<Element> elems_;
  std::set<Pair> pairs_;
};

// Minimal basis in, reduced basis out. Returns false if a tail reduction
// cancelled a common factor and changed a lead term.
bool tail_reduce(std::vector<Element>& g, const TermOrder& order) {
  for (auto& e : g) {
    for (;;) {
      const Mask m = negative_mask(e.d);
      const Element* reducer = nullptr;
      for (const auto& r : g)
        if (&r != &e && divides_minus(r, e.d, m)) {
          reducer = &r;
          break;
        }
      if (!reducer) break;
      add_in_place(e.d, reducer->d);
      if (positive_mask(e.d) != e.mask || order.compare(e.d) <= 0) return false;
      for (std::size_t i = 0; i < e.d.size(); ++i)
        if (e.d[i] > 0 && e.d[i] != e.lead[i]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& order,
                                 const IntVector& grading) {
  if (!gens.empty() && gens.front().d.size() > 64)
    throw Error(ErrorCode::kInvalidInput, "at most 64 variables are supported");
  std::vector<ExpVector> input;
  for (auto& b : gens) input.push_back(std::move(b.d));
  for (;;) {
    Completion comp(order, grading);
    for (auto& h : input) comp.insert(std::move(h));
    comp.run();
    std::vector<Element> basis;
    for (auto& d : comp.active()) {
      Element e;
      e.d = std::move(d);
      set_lead(e);
      basis.push_back(std::move(e));
    }
    if (!tail_reduce(basis, order)) {
      input.clear();
      for (auto& e : basis) input.push_back(std::move(e.d));
      continue;
    }
    std::vector<Binomial> out;
    for (auto& e : basis) out.push_back(Binomial{std::move(e.d)});
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }
}

std::vector<Binomial> toric_ideal(const ProblemInstance& p) {
  const KernelBasis kb = kernel_lattice_basis(p);
  std::vector<Binomial> gens;
  for (std::size_t k = 0; k < kb.b.cols(); ++k)
    gens.push_back(Binomial{to_exp_vector(kb.b.col(k))});
  if (gens.empty()) return gens;
  for (int i = 0; i < static_cast<int>(p.n()); ++i)
    gens = buchberger(std::move(gens), TermOrder::graded_revlex(p.degrees, i), p.degrees);
  return gens;
}

GroebnerBasis reduced_groebner_basis(const ProblemInstance& p,
                                     const std::vector<Binomial>& gens,
                                     const TermOrder& order) {
  GroebnerBasis g;
  g.order = order;
  g.elements = buchberger(gens, order, p.degrees);
  return g;
}

GroebnerBasis reduced_groebner_basis(const ProblemInstance& p,
                                     const std::vector<Binomial>& gens,
                                     const IntVector& c) {
  GroebnerBasis g = reduced_groebner_basis(p, gens, TermOrder::refined_cost(c));
  g.cost = c;
  return g;
}

bool is_reduced_groebner_basis(const std::vector<Binomial>& g, const TermOrder& order) {
  std::vector<Element> elems;
  for (const auto& b : g) {
    if (order.compare(b.d) <= 0) return false;
    Element e;
    e.d = b.d;
    set_lead(e);
    elems.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if (divides_plus(elems[j], elems[i].d, elems[i].mask)) return false;
      if (divides_minus(elems[j], elems[i].d, negative_mask(elems[i].d))) return false;
    }
  auto reduces_to_zero = [&](ExpVector h) {
    for (;;) {
      const int s = order.compare(h);
      if (s == 0) return true;
      if (s < 0)
        for (auto& e : h) e = -e;
      const Mask m = positive_mask(h);
      const Element* r = nullptr;
      for (const auto& e : elems)
        if (divides_plus(e, h, m)) {
          r = &e;
          break;
        }
      if (!r) return false;
      subtract_in_place(h, r->d);
    }
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if ((elems[i].mask & elems[j].mask) == 0) continue;
      ExpVector s = elems[i].d;
      subtract_in_place(s, elems[j].d);
      if (!reduces_to_zero(std::move(s))) return false;
    }
  return true;
}

ExpVector normal_form_solve(const GroebnerBasis& g, const ExpVector& u) {
  ExpVector x = u;
  std::vector<ExpVector> leads;
  for (const auto& b : g.elements) leads.push_back(b.plus());
  for (;;) {
    bool rewrote = false;
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (divides(leads[k], x)) {
        subtract_in_place(x, g.elements[k].d);
        rewrote = true;
        break;
      }
    }
    if (!rewrote) return x;
  }
}

}  // namespace gomory

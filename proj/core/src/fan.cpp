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

#include "gomory/fan.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "gomory/errors.hpp"
#include "gomory/lp.hpp"

namespace gomory {

namespace {

using Key = std::vector<ExpVector>;

Key key_of(const GroebnerBasis& g) {
  Key k;
  for (const auto& b : g.elements) k.push_back(b.d);
  return k;
}

IntVector negated(const IntVector& v) {
  IntVector out;
  for (const auto& x : v) out.push_back(-x);
  return out;
}

IntVector ones(std::size_t n) { return IntVector(n, Integer(1)); }

}  // namespace

GroebnerCone groebner_cone(const GroebnerBasis& g) {
  GroebnerCone cone;
  cone.basis = g;
  std::vector<IntVector> ineq;
  for (const auto& b : g.elements) ineq.push_back(primitive(to_int_vector(b.d)));
  std::sort(ineq.begin(), ineq.end());
  ineq.erase(std::unique(ineq.begin(), ineq.end()), ineq.end());
  cone.inequalities = std::move(ineq);
  if (cone.inequalities.empty()) return cone;

  const std::size_t n = cone.inequalities.front().size();
  lp::LinearProgram interior(n);
  for (const auto& d : cone.inequalities)
    interior.add_constraint(to_rat_vector(d), lp::Relation::kGreaterEqual, Rational(1));
  if (!lp::feasible(interior))
    throw Error(ErrorCode::kNonGenericCost, "Groebner cone is not full-dimensional");
  for (std::size_t i = 0; i < cone.inequalities.size(); ++i)
    if (facet_interior_point(cone, i)) cone.facets.push_back(i);
  return cone;
}

std::optional<IntVector> facet_interior_point(const GroebnerCone& cone, std::size_t i) {
  const std::size_t n = cone.inequalities[i].size();
  lp::LinearProgram prog(n);
  for (std::size_t j = 0; j < cone.inequalities.size(); ++j)
    prog.add_constraint(to_rat_vector(cone.inequalities[j]),
                        j == i ? lp::Relation::kEqual : lp::Relation::kGreaterEqual,
                        Rational(j == i ? 0 : 1));
  const lp::Solution sol = lp::solve(prog);
  if (sol.status == lp::Status::kInfeasible) return std::nullopt;
  return clear_denominators(sol.x);
}

IntVector interior_point(const GroebnerCone& cone) {
  const std::size_t n = cone.basis.order.num_vars();
  if (cone.inequalities.empty()) return IntVector(n, Integer(0));
  IntVector sum(n, Integer(0));
  for (std::size_t f : cone.facets)
    for (std::size_t j = 0; j < n; ++j) sum[j] += cone.inequalities[f][j];
  const bool strict = std::all_of(cone.inequalities.begin(), cone.inequalities.end(),
                                  [&](const IntVector& d) { return dot(sum, d) > 0; });
  if (strict) return primitive(sum);
  lp::LinearProgram prog(n);
  for (const auto& d : cone.inequalities)
    prog.add_constraint(to_rat_vector(d), lp::Relation::kGreaterEqual, Rational(1));
  const lp::Solution sol = lp::solve(prog);
  return primitive(clear_denominators(sol.x));
}

GroebnerBasis flip(const ProblemInstance& p, const GroebnerCone& cone, const IntVector& normal) {
  const IntVector target = primitive(normal);
  auto it = std::find(cone.inequalities.begin(), cone.inequalities.end(), target);
  if (it == cone.inequalities.end())
    throw Error(ErrorCode::kNotAFacet, "normal is not an inequality of the cone");
  const auto i = static_cast<std::size_t>(it - cone.inequalities.begin());
  auto omega = facet_interior_point(cone, i);
  if (!omega) throw Error(ErrorCode::kNotAFacet, "inequality is redundant");
  // Lexicographic (omega, -d, 1) is the order of omega - eps d for small eps,
  // a point just across the wall.
  TermOrder order({*omega, negated(target), ones(p.n())}, [&] {
    std::vector<int> r(p.n());
    for (std::size_t j = 0; j < p.n(); ++j) r[j] = static_cast<int>(j);
    return r;
  }());
  GroebnerBasis out;
  out.order = order;
  out.elements = buchberger(cone.basis.elements, order, p.degrees);
  return out;
}

std::optional<IntVector> find_generic_cost(const ProblemInstance& p,
                                           const std::vector<Binomial>& toric,
                                           std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, 9999);
  for (int a = 0; a < attempts; ++a) {
    IntVector c;
    for (std::size_t j = 0; j < p.n(); ++j) c.emplace_back(dist(rng));
    const GroebnerBasis g = reduced_groebner_basis(p, toric, c);
    if (initial_ideal(g).generic) return c;
  }
  return std::nullopt;
}

namespace {

struct Node {
  GroebnerBasis basis;
  std::optional<IntVector> arrived_from;  // wall normal as seen from this cone
  bool processed = false;
  IntVector representative;
  std::size_t facet_count = 0;
};

struct Expansion {
  IntVector representative;
  std::size_t facet_count = 0;
  std::vector<std::pair<GroebnerBasis, IntVector>> neighbours;
};

Expansion expand(const ProblemInstance& p, const Node& node) {
  Expansion e;
  const GroebnerCone cone = groebner_cone(node.basis);
  e.representative = interior_point(cone);
  e.facet_count = cone.facets.size();
  for (std::size_t f : cone.facets) {
    const IntVector& d = cone.inequalities[f];
    if (node.arrived_from && *node.arrived_from == d) continue;
    e.neighbours.emplace_back(flip(p, cone, d), negated(d));
  }
  return e;
}

nlohmann::json exps_to_json(const GroebnerBasis& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : g.elements) arr.push_back(b.d);
  return arr;
}

std::vector<std::string> int_vector_strings(const IntVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

IntVector int_vector_from_strings(const std::vector<std::string>& s) {
  IntVector out;
  for (const auto& x : s) out.emplace_back(x);
  return out;
}

nlohmann::json matrix_json(const IntMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(int_vector_strings(a.row(i)));
  return rows;
}

void save_checkpoint(const std::string& path, const ProblemInstance& p,
                     const std::vector<Node>& nodes, const std::deque<std::size_t>& queue,
                     const IntVector& seed_cost, bool synthetic) {
  nlohmann::json j;
  j["format"] = "gomory-fan-checkpoint-1";
  j["matrix"] = matrix_json(p.a);
  j["seed_cost"] = int_vector_strings(seed_cost);
  j["synthetic"] = synthetic;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& n : nodes) {
    nlohmann::json e;
    e["basis"] = exps_to_json(n.basis);
    e["processed"] = n.processed;
    if (n.processed) {
      e["representative"] = int_vector_strings(n.representative);
      e["facets"] = n.facet_count;
    }
    if (n.arrived_from) e["arrived_from"] = int_vector_strings(*n.arrived_from);
    arr.push_back(std::move(e));
  }
  j["nodes"] = std::move(arr);
  j["frontier"] = std::vector<std::size_t>(queue.begin(), queue.end());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write checkpoint " + path);
    out << j.dump() << '\n';
  }
  std::rename(tmp.c_str(), path.c_str());
}

bool load_checkpoint(const std::string& path, const ProblemInstance& p, std::vector<Node>& nodes,
                     std::deque<std::size_t>& queue, IntVector& seed_cost, bool& synthetic) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kInvalidInput, "checkpoint is not valid JSON: " + path);
  }
  if (j.value("format", "") != "gomory-fan-checkpoint-1" || j["matrix"] != matrix_json(p.a))
    throw Error(ErrorCode::kInvalidInput, "checkpoint belongs to a different matrix");
  seed_cost = int_vector_from_strings(j["seed_cost"].get<std::vector<std::string>>());
  synthetic = j["synthetic"].get<bool>();
  for (const auto& e : j["nodes"]) {
    Node n;
    for (const auto& d : e["basis"]) n.basis.elements.push_back(Binomial{d.get<ExpVector>()});
    n.processed = e["processed"].get<bool>();
    if (n.processed) {
      n.representative = int_vector_from_strings(e["representative"].get<std::vector<std::string>>());
      n.facet_count = e["facets"].get<std::size_t>();
    }
    if (e.contains("arrived_from"))
      n.arrived_from = int_vector_from_strings(e["arrived_from"].get<std::vector<std::string>>());
    nodes.push_back(std::move(n));
  }
  for (const auto& i : j["frontier"]) queue.push_back(i.get<std::size_t>());
  return true;
}

}  // namespace

FanEnumeration enumerate_initial_ideals(const ProblemInstance& p, const FanOptions& options) {
  const std::vector<Binomial> toric = toric_ideal(p);
  auto c = find_generic_cost(p, toric, options.seed);
  GroebnerBasis seed;
  if (c) {
    seed = reduced_groebner_basis(p, toric, *c);
  } else {
    seed = reduced_groebner_basis(p, toric, IntVector(p.n(), Integer(0)));
    seed.cost.reset();
  }
  return enumerate_initial_ideals(p, toric, seed, options);
}

FanEnumeration enumerate_initial_ideals(const ProblemInstance& p, const std::vector<Binomial>&,
                                        const GroebnerBasis& seed, const FanOptions& options) {
  std::vector<Node> nodes;
  std::deque<std::size_t> queue;
  std::map<Key, std::size_t> known;
  IntVector seed_cost = seed.cost ? *seed.cost : IntVector(p.n(), Integer(0));
  bool synthetic = !seed.cost.has_value();

  const bool resumed = !options.checkpoint.empty() &&
                       load_checkpoint(options.checkpoint, p, nodes, queue, seed_cost, synthetic);
  if (resumed) {
    for (std::size_t i = 0; i < nodes.size(); ++i) known.emplace(key_of(nodes[i].basis), i);
  } else {
    Node root;
    root.basis = seed;
    nodes.push_back(std::move(root));
    known.emplace(key_of(nodes[0].basis), 0);
    queue.push_back(0);
  }

  const unsigned workers = std::max(1u, options.workers);
  std::size_t since_checkpoint = 0;
  std::size_t expanded = 0;
  while (!queue.empty()) {
    if (options.expansion_limit && expanded >= options.expansion_limit) break;
    std::vector<std::size_t> batch;
    std::size_t limit = workers * 4;
    if (options.expansion_limit) limit = std::min(limit, options.expansion_limit - expanded);
    while (!queue.empty() && batch.size() < limit) {
      batch.push_back(queue.front());
      queue.pop_front();
    }
    std::vector<Expansion> results(batch.size());
    std::vector<std::exception_ptr> errors(batch.size());
    if (workers == 1 || batch.size() == 1) {
      for (std::size_t k = 0; k < batch.size(); ++k) results[k] = expand(p, nodes[batch[k]]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, batch.size()); ++w)
        pool.emplace_back([&] {
          for (std::size_t k; (k = next.fetch_add(1)) < batch.size();) {
            try {
              results[k] = expand(p, nodes[batch[k]]);
            } catch (...) {
              errors[k] = std::current_exception();
            }
          }
        });
      for (auto& t : pool) t.join();
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      Node& node = nodes[batch[k]];
      node.processed = true;
      node.representative = results[k].representative;
      node.facet_count = results[k].facet_count;
      for (auto& [g, back] : results[k].neighbours) {
        auto [it, inserted] = known.emplace(key_of(g), nodes.size());
        if (!inserted) continue;
        Node n;
        n.basis = std::move(g);
        n.arrived_from = std::move(back);
        queue.push_back(nodes.size());
        nodes.push_back(std::move(n));
      }
    }
    since_checkpoint += batch.size();
    expanded += batch.size();
    const bool stopping = options.expansion_limit && expanded >= options.expansion_limit;
    if (!options.checkpoint.empty() &&
        (since_checkpoint >= options.checkpoint_every || queue.empty() || stopping)) {
      save_checkpoint(options.checkpoint, p, nodes, queue, seed_cost, synthetic);
      since_checkpoint = 0;
    }
  }

  FanEnumeration out;
  out.seed_cost = seed_cost;
  out.synthetic = synthetic;
  out.complete = queue.empty();
  for (auto& n : nodes) {
    if (!n.processed) continue;
    InitialIdealRecord r;
    r.basis = std::move(n.basis);
    r.basis.order = TermOrder::refined_cost(n.representative);
    r.basis.cost = n.representative;
    r.representative = std::move(n.representative);
    r.facet_count = n.facet_count;
    out.ideals.push_back(std::move(r));
  }
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const InitialIdealRecord& a, const InitialIdealRecord& b) {
              return key_of(a.basis) < key_of(b.basis);
            });
  return out;
}

CensusReport census_from(const ProblemInstance& p, FanEnumeration fan) {
  CensusReport r;
  r.synthetic = fan.synthetic;
  r.complete = fan.complete;
  r.ideals = std::move(fan.ideals);
  r.initial_ideal_count = r.ideals.size();
  std::map<std::vector<IndexSet>, std::size_t> groups;
  for (std::size_t i = 0; i < r.ideals.size(); ++i) {
    r.verdicts.push_back(analyze_initial_ideal(initial_ideal(r.ideals[i].basis).ideal, p.d()));
    const auto key = r.verdicts.back().triangulation.maximal_index_sets();
    auto [it, inserted] = groups.emplace(key, r.triangulations.size());
    if (inserted) {
      TriangulationCensus t;
      t.triangulation = r.verdicts.back().triangulation;
      t.unimodular = is_unimodular(t.triangulation, p);
      r.triangulations.push_back(std::move(t));
    }
    TriangulationCensus& t = r.triangulations[it->second];
    t.ideals.push_back(i);
    t.gomory.push_back(r.verdicts.back().gomory);
    t.representative_costs.push_back(r.ideals[i].representative);
    if (r.verdicts.back().gomory) ++t.gomory_count;
  }
  std::sort(r.triangulations.begin(), r.triangulations.end(),
            [](const TriangulationCensus& a, const TriangulationCensus& b) {
              return a.triangulation.maximal_index_sets() < b.triangulation.maximal_index_sets();
            });
  r.triangulation_count = r.triangulations.size();
  for (const auto& t : r.triangulations)
    if (t.gomory_count > 0) ++r.gomory_supporting_triangulation_count;
  return r;
}

CensusReport census(const ProblemInstance& p, const FanOptions& options) {
  return census_from(p, enumerate_initial_ideals(p, options));
}

}  // namespace gomory

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

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gomory/cone.hpp"
#include "gomory/errors.hpp"
#include "gomory/fan.hpp"
#include "gomory/io.hpp"
#include "gomory/lattice.hpp"
#include "gomory/relaxation.hpp"
#include "gomory/toric.hpp"
#include "gomory/version.hpp"

namespace gomory::cli {

namespace {

using json = nlohmann::ordered_json;

json jint(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json jvec(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jexp(const ExpVector& v) { return json(v); }

json jrat(const Rational& q) { return to_string(q); }

json jratvec(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jrat(x));
  return a;
}

json jface(const IndexSet& s) {
  json a = json::array();
  for (int j : s) a.push_back(j + 1);
  return a;
}

json jfaces(const std::vector<IndexSet>& faces) {
  json a = json::array();
  for (const auto& f : faces) a.push_back(jface(f));
  return a;
}

json jmatrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(jvec(m.row(i)));
  return rows;
}

json jpairs(const std::vector<StandardPair>& pairs) {
  json a = json::array();
  for (const auto& p : pairs) a.push_back(json{{"root", jexp(p.root)}, {"face", jface(p.face)}});
  return a;
}

json jversions() {
  json v;
  v["gomory"] = std::string(kVersion);
  for (const auto& m : kModuleVersions) v[std::string(m[0])] = std::string(m[1]);
  return v;
}

struct Options {
  std::string command;
  std::string matrix;
  std::string cost;
  std::string rhs;
  std::string face;
  std::string checkpoint;
  std::string format = "json";
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::size_t limit = 0;
};

class Job {
 public:
  explicit Job(Options opt) : opt_(std::move(opt)) {
    input_["matrix_file"] = opt_.matrix;
    input_["format"] = opt_.format;
  }

  json run() {
    load();
    const std::string& c = opt_.command;
    if (c == "validate") return validate();
    if (c == "triangulate") return triangulate();
    if (c == "solve") return solve();
    if (c == "relax") return relax();
    if (c == "standard-pairs") return standard_pairs_report();
    if (c == "gomory-check") return gomory_check();
    if (c == "tdi-check") return tdi();
    if (c == "hilbert") return hilbert();
    if (c == "normality") return normality();
    if (c == "census") return census_report();
    throw Error(ErrorCode::kInvalidInput, "unknown command " + c, "command");
  }

  const json& input() const { return input_; }

 private:
  void load() {
    if (opt_.matrix.empty()) throw Error(ErrorCode::kInvalidInput, "--matrix is required", "matrix");
    const MatrixFormat fmt = parse_matrix_format(opt_.format);
    const IntMatrix a = read_matrix_file(opt_.matrix, fmt);
    input_["matrix"] = jmatrix(a);
    if (!opt_.cost.empty()) {
      cost_ = parse_integer_list(opt_.cost, "cost");
      input_["cost"] = jvec(*cost_);
      if (cost_->size() != a.cols())
        throw Error(ErrorCode::kInvalidInput,
                    "cost has " + std::to_string(cost_->size()) + " entries, expected " +
                        std::to_string(a.cols()),
                    "cost");
    }
    if (!opt_.rhs.empty()) {
      rhs_ = parse_integer_list(opt_.rhs, "rhs");
      input_["rhs"] = jvec(*rhs_);
      if (rhs_->size() != a.rows())
        throw Error(ErrorCode::kInvalidInput,
                    "rhs has " + std::to_string(rhs_->size()) + " entries, expected " +
                        std::to_string(a.rows()),
                    "rhs");
    }
    if (!opt_.face.empty()) {
      face_ = parse_face(opt_.face, a.cols(), "face");
      input_["face"] = jface(*face_);
    }
    try {
      p_ = validate_problem(a);
    } catch (const Error& e) {
      if (!e.field().empty()) throw;
      throw Error(e.code(), e.what(), "matrix");
    }
  }

  const IntVector& cost() {
    if (!cost_) throw Error(ErrorCode::kInvalidInput, "--cost is required", "cost");
    return *cost_;
  }

  IntVector rhs() {
    if (!rhs_) throw Error(ErrorCode::kInvalidInput, "--rhs is required", "rhs");
    try {
      return normalize_rhs(p_, *rhs_);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), "rhs");
    }
  }

  Triangulation triangulation() {
    Triangulation t = regular_subdivision(p_, cost());
    if (!t.is_triangulation())
      throw Error(ErrorCode::kNonGenericCost, "cost induces a subdivision that is not a triangulation",
                  "cost");
    return t;
  }

  json validate() {
    json r;
    r["d"] = p_.d();
    r["n"] = p_.n();
    r["normalized"] = p_.normalized;
    r["normalized_matrix"] = jmatrix(p_.a);
    r["pointing"] = jvec(p_.pointing);
    r["degrees"] = jvec(p_.degrees);
    r["maximal_minor_gcd"] = jint(maximal_minor_gcd(p_.input));
    const KernelBasis kb = kernel_lattice_basis(p_);
    r["kernel_basis"] = jmatrix(kb.b.transpose());
    return r;
  }

  json triangulate() {
    const Triangulation t = triangulation();
    json faces = json::array();
    for (const auto& f : t.maximal_faces())
      faces.push_back(json{{"face", jface(f.indices)},
                           {"lattice_index", jint(lattice_index(p_, f.indices))},
                           {"certificate", jratvec(f.certificate)}});
    json r;
    r["is_triangulation"] = true;
    r["maximal_faces"] = jfaces(t.maximal_index_sets());
    r["faces"] = std::move(faces);
    r["unimodular"] = is_unimodular(t, p_);
    return r;
  }

  json solve() {
    const IntVector& c = cost();
    const IntVector b = rhs();
    const IntVector x = ip_solve_bruteforce(p_, c, b);
    const GroebnerBasis g = generic_groebner_basis(p_, c);
    const IntVector nf = to_int_vector(normal_form_solve(g, to_exp_vector(x)));
    const Triangulation t = triangulation();
    const IndexSet sigma = gomory_relaxation_face(p_, t, b);
    const bool by_gomory = group_relax_solve(p_, c, sigma, b, x).solves_ip;
    std::vector<IndexSet> solving;
    for (const auto& tau : t.all_faces())
      if (group_relax_solve(p_, c, tau, b, x).solves_ip) solving.push_back(tau);
    IndexSet best;
    for (const auto& tau : solving)
      if (tau.size() > best.size()) best = tau;
    json r;
    r["optimal"] = jvec(x);
    r["value"] = jint(dot(c, x));
    r["normal_form_agrees"] = nf == x;
    r["gomory_face"] = jface(sigma);
    r["solved_by_gomory"] = by_gomory;
    r["smallest_solving_face"] = jface(best);
    r["solving_faces"] = jfaces(solving);
    return r;
  }

  json relax() {
    const IntVector& c = cost();
    const IntVector b = rhs();
    if (!face_) throw Error(ErrorCode::kInvalidInput, "--face is required", "face");
    const IntVector u = ip_solve_bruteforce(p_, c, b);
    const Triangulation t = triangulation();
    json r;
    r["u"] = jvec(u);
    if (!relaxation_is_bounded(t, *face_)) {
      r["bounded"] = false;
      const auto ray = unboundedness_certificate(p_, c, *face_);
      r["certificate"] = ray ? jvec(*ray) : json(nullptr);
      return r;
    }
    const RelaxationResult res = group_relax_solve(p_, c, *face_, b, u);
    r["bounded"] = true;
    r["z_star"] = jvec(res.z_star);
    r["x_star"] = jvec(res.x_star);
    r["solves_ip"] = res.solves_ip;
    r["unique"] = res.unique;
    r["value"] = jrat(res.objective_value);
    return r;
  }

  json verdict_json(const GomoryVerdict& v) {
    json mult = json::array();
    for (const auto& [face, count] : v.multiplicities)
      mult.push_back(json{{"face", jface(face)}, {"multiplicity", count}});
    json r;
    r["triangulation"] = jfaces(v.triangulation.maximal_index_sets());
    r["arithmetic_degree"] = v.arithmetic_degree;
    r["associated_faces"] = jfaces(v.associated_faces);
    r["multiplicities"] = std::move(mult);
    r["pairs"] = jpairs(v.pairs);
    return r;
  }

  json standard_pairs_report() { return verdict_json(is_gomory_family(p_, cost())); }

  json gomory_check() {
    const GomoryVerdict v = is_gomory_family(p_, cost());
    json r;
    r["gomory_family"] = v.gomory;
    r["standard_pairs"] = v.pairs.size();
    r.update(verdict_json(v));
    return r;
  }

  json tdi() {
    json r;
    r["tdi"] = tdi_check(p_, cost());
    r["unimodular"] = is_unimodular(triangulation(), p_);
    return r;
  }

  json hilbert() {
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < p_.n(); ++j) gens.push_back(p_.a.col(j));
    const HilbertBasis hb = hilbert_basis(gens, opt_.seed);
    json elems = json::array();
    for (const auto& h : hb.elements) elems.push_back(jvec(h));
    json r;
    r["hilbert_basis"] = std::move(elems);
    r["size"] = hb.elements.size();
    r["normalized_coordinates"] = p_.normalized;
    r["normal"] = is_normal(p_);
    return r;
  }

  json normality() {
    json r;
    r["normal"] = is_normal(p_);
    r["supernormal"] = p_.n() <= 16 ? json(is_supernormal(p_)) : json(nullptr);
    if (cost_) {
      const Triangulation t = triangulation();
      const bool dn = is_delta_normal(p_, t);
      r["delta_normal"] = dn;
      r["triangulation"] = jfaces(t.maximal_index_sets());
      if (dn) {
        const GomoryCostConstruction g = construct_gomory_cost(p_, t, *cost_);
        r["gomory_cost"] = jvec(g.cost);
        r["gomory_cost_epsilon"] = jrat(g.epsilon);
      }
    }
    return r;
  }

  json census_report() {
    FanOptions o;
    o.workers = opt_.workers;
    o.checkpoint = opt_.checkpoint;
    o.seed = opt_.seed;
    o.expansion_limit = opt_.limit;
    const CensusReport c = census(p_, o);
    json tris = json::array();
    for (const auto& t : c.triangulations) {
      json ideals = json::array();
      for (std::size_t k = 0; k < t.ideals.size(); ++k) {
        const auto& rec = c.ideals[t.ideals[k]];
        json gens = json::array();
        const InitialIdeal in = initial_ideal(rec.basis);
        for (const auto& g : in.ideal.generators()) gens.push_back(jexp(g));
        ideals.push_back(json{{"representative_cost", jvec(t.representative_costs[k])},
                              {"gomory", static_cast<bool>(t.gomory[k])},
                              {"arithmetic_degree", c.verdicts[t.ideals[k]].arithmetic_degree},
                              {"initial_ideal", std::move(gens)}});
      }
      tris.push_back(json{{"maximal_faces", jfaces(t.triangulation.maximal_index_sets())},
                          {"unimodular", t.unimodular},
                          {"ideal_count", t.ideals.size()},
                          {"gomory_ideal_count", t.gomory_count},
                          {"ideals", std::move(ideals)}});
    }
    json r;
    r["initial_ideal_count"] = c.initial_ideal_count;
    r["triangulation_count"] = c.triangulation_count;
    r["gomory_supporting_triangulation_count"] = c.gomory_supporting_triangulation_count;
    r["synthetic_seed"] = c.synthetic;
    r["complete"] = c.complete;
    r["triangulations"] = std::move(tris);
    return r;
  }

  Options opt_;
  json input_;
  ProblemInstance p_;
  std::optional<IntVector> cost_, rhs_;
  std::optional<IndexSet> face_;
};

json envelope(const std::string& command, const json& input) {
  json r;
  r["command"] = command;
  r["input"] = input;
  r["versions"] = jversions();
  return r;
}

int emit_error(std::ostream& out, const std::string& command, const json& input,
               const std::string& code, const std::string& message, const std::string& field) {
  json r = envelope(command, input);
  r["error"] = json{{"code", code}, {"message", message}, {"field", field.empty() ? json(nullptr) : json(field)}};
  out << r.dump() << '\n';
  return code == "NonGenericCost" ? kExitNonGeneric : kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact Gomory integer program toolkit"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check a matrix and report its normal form"},
      {"triangulate", "regular triangulation induced by a cost vector"},
      {"solve", "solve IP(b) and report which group relaxations solve it"},
      {"relax", "solve the group relaxation for one face"},
      {"standard-pairs", "standard pair decomposition of the order ideal"},
      {"gomory-check", "decide whether IP_{A,c} is a Gomory family"},
      {"tdi-check", "decide whether yA <= c is TDI"},
      {"hilbert", "minimal Hilbert basis of cone(A)"},
      {"normality", "normal, supernormal and Delta-normal tests"},
      {"census", "enumerate all initial ideals and group them by triangulation"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--matrix", opt.matrix, "matrix file")->required();
    sub->add_option("--format", opt.format, "matrix file format (json|csv)");
    sub->add_option("--cost", opt.cost, "cost vector, e.g. 1,0,3");
    sub->add_option("--rhs", opt.rhs, "right-hand side b");
    sub->add_option("--face", opt.face, "face, 1-based indices");
    sub->add_option("--workers", opt.workers, "worker threads for census");
    sub->add_option("--checkpoint", opt.checkpoint, "census checkpoint file (resumable)");
    sub->add_option("--seed", opt.seed, "random seed for probing");
    sub->add_option("--limit", opt.limit, "stop the census after this many ideals (0: none)");
    sub->callback([&opt, name = name] { opt.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, opt.command, json::object(), "InvalidInput", e.what(), "arguments");
  }

  Job job(opt);
  try {
    json report = envelope(opt.command, json::object());
    json result = job.run();
    report["input"] = job.input();
    for (auto& [k, v] : result.items()) report[k] = v;
    out << report.dump() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    return emit_error(out, opt.command, job.input(), std::string(error_code_name(e.code())), e.what(),
                      e.field());
  } catch (const std::exception& e) {
    json r = envelope(opt.command, job.input());
    r["error"] = json{{"code", "InternalError"}, {"message", e.what()}, {"field", nullptr}};
    out << r.dump() << '\n';
    return kExitInternal;
  }
}

}  // namespace gomory::cli

// Copyright 2026 The Burnlab Authors
//
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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burnlab/burnlab.hpp"
#include "json.hpp"

namespace {

using burnlab::BurningSequence;
using burnlab::Graph;
using burnlab::SolveBudget;
using burnlab::SolveResult;
using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kParse = 2, kPrecondition = 3, kBudget = 4, kVerify = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  json report;
  int code = kOk;
  std::uint64_t nodes_used = 0;

  void worst(int c) {
    // verification failure outranks budget exhaustion
    if (c == kVerify || (c == kBudget && code == kOk)) code = c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph load_graph(const std::string& path, Context& ctx) {
  const std::string text = read_file(path);
  ctx.report["input"] = {{"file", path}, {"digest", "fnv1a:" + hex64(burnlab::fnv1a(text))}};
  return burnlab::parse_edge_list(text);
}

unsigned threads_from_env() {
  const char* env = std::getenv("BURNLAB_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long t = std::strtoul(env, &end, 10);
  if (*end != '\0' || t == 0 || t > 256) throw UsageError("BURNLAB_THREADS must be an integer in [1, 256]");
  return static_cast<unsigned>(t);
}

SolveBudget make_budget(const std::optional<std::uint64_t>& nodes, const std::optional<std::uint64_t>& ms,
                        const char* command) {
  if (!nodes) throw UsageError(std::string(command) + " needs --budget (search-node limit)");
  SolveBudget b;
  b.max_nodes = *nodes;
  if (ms) b.time_limit = std::chrono::milliseconds(*ms);
  b.threads = threads_from_env();
  return b;
}

json budget_json(const SolveBudget& b) {
  json j = {{"max_nodes", b.max_nodes}, {"threads", b.threads}};
  if (b.time_limit) j["time_limit_ms"] = b.time_limit->count();
  return j;
}

json solve_json(const SolveResult& r) {
  json j;
  j["status"] = r.exact() ? "exact" : "bounded";
  if (r.exact()) j["value"] = r.lower;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.witness) j["witness"] = burnlab::format_sequence(*r.witness);
  j["nodes"] = r.nodes;
  return j;
}

std::string solve_text(const SolveResult& r) {
  if (r.exact()) return std::to_string(r.lower);
  return "in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "] (budget exhausted)";
}

json range_json(const burnlab::ValueRange& v) {
  if (v.known()) return v.lo;
  return json::array({v.lo, v.hi});
}

std::string range_text(const burnlab::ValueRange& v) {
  if (v.known()) return std::to_string(v.lo);
  return "[" + std::to_string(v.lo) + "," + std::to_string(v.hi) + "]";
}

json bounds_json(const burnlab::Bounds& b) {
  json j = {{"lower", b.lower}, {"upper", b.upper}, {"lower_rule", b.lower_source()},
            {"upper_rule", b.upper_source()}};
  for (const auto& r : b.lower_rules) j["lower_rules"][r.name] = r.value;
  for (const auto& r : b.upper_rules) j["upper_rules"][r.name] = r.value;
  return j;
}

// ---------------------------------------------------------------- burn

struct BurnOpts {
  std::string file;
  bool exact = false, bounds = false, oracle = false, interval = false;
  std::optional<std::uint64_t> budget, time_ms;
  std::string witness_out;
};

void cmd_burn(const BurnOpts& o, Context& ctx) {
  const Graph g = load_graph(o.file, ctx);
  if (g.empty()) throw burnlab::GraphError("graph has no vertices");
  const int modes = int(o.exact) + int(o.bounds) + int(o.oracle);
  if (modes > 1) throw UsageError("choose one of --exact, --bounds, --oracle");
  auto& res = ctx.report["results"];
  res["n"] = g.order();
  res["m"] = g.size();
  std::cout << "graph: n=" << g.order() << " m=" << g.size() << "\n";

  if (o.bounds) {
    const auto b = burnlab::bounds(g, o.interval);
    res["bounds"] = bounds_json(b);
    std::cout << "bounds: " << b.lower << " <= b(G) <= " << b.upper << "  (" << b.lower_source() << " / "
              << b.upper_source() << ")\n";
    return;
  }
  if (o.oracle) {
    const auto k = burnlab::burning_number_oracle(g);
    res["oracle"] = k;
    std::cout << "b(G) = " << k << " (brute force)\n";
    return;
  }
  const SolveBudget budget = make_budget(o.budget, o.time_ms, "burn --exact");
  ctx.report["budget"] = budget_json(budget);
  const auto r = burnlab::burning_number_exact(g, budget);
  ctx.nodes_used += r.nodes;
  res["burning_number"] = solve_json(r);
  std::cout << "b(G) " << (r.exact() ? "= " : "") << solve_text(r) << "\n";
  if (r.witness) {
    std::cout << "witness: " << burnlab::format_sequence(*r.witness) << "\n";
    if (!o.witness_out.empty()) write_file(o.witness_out, burnlab::format_sequence(*r.witness) + "\n");
  }
  if (!r.exact()) ctx.worst(kBudget);
}

// ---------------------------------------------------------------- variant

struct VariantOpts {
  std::string file;
  bool edge = false, total = false, relations = false;
  std::optional<std::uint64_t> budget, time_ms;
  std::string witness_out;
};

void cmd_variant(const VariantOpts& o, Context& ctx) {
  const Graph g = load_graph(o.file, ctx);
  if (int(o.edge) + int(o.total) + int(o.relations) != 1) {
    throw UsageError("choose exactly one of --edge, --total, --relations");
  }
  const SolveBudget budget = make_budget(o.budget, o.time_ms, "variant");
  ctx.report["budget"] = budget_json(budget);
  auto& res = ctx.report["results"];

  if (o.relations) {
    const auto rep = burnlab::verify_relations(g, budget);
    ctx.nodes_used += rep.vertex.nodes + rep.total.nodes + rep.spike_total.nodes + (rep.edge ? rep.edge->nodes : 0);
    res["b"] = solve_json(rep.vertex);
    if (rep.edge) res["b_L"] = solve_json(*rep.edge);
    res["b_T"] = solve_json(rep.total);
    res["b_T_spike"] = solve_json(rep.spike_total);
    res["relations"] = json::array();
    std::cout << "b = " << solve_text(rep.vertex);
    if (rep.edge) std::cout << ", b_L = " << solve_text(*rep.edge);
    std::cout << ", b_T = " << solve_text(rep.total) << ", b_T(spike) = " << solve_text(rep.spike_total) << "\n";
    for (const auto& r : rep.relations) {
      res["relations"].push_back({{"relation", r.name},
                                  {"statement", r.statement},
                                  {"lhs", range_json(r.lhs)},
                                  {"rhs", range_json(r.rhs)},
                                  {"status", burnlab::to_string(r.status)}});
      std::cout << "  " << r.name << "  " << r.statement << "  " << range_text(r.lhs) << " vs "
                << range_text(r.rhs) << "  " << burnlab::to_string(r.status) << "\n";
      if (r.status == burnlab::RelationStatus::fail) ctx.worst(kVerify);
      if (r.status == burnlab::RelationStatus::unverified) ctx.worst(kBudget);
    }
    return;
  }

  const auto vr = o.edge ? burnlab::edge_burning_number(g, budget) : burnlab::total_burning_number(g, budget);
  ctx.nodes_used += vr.result.nodes;
  const char* name = o.edge ? "b_L" : "b_T";
  res["kind"] = burnlab::to_string(vr.kind);
  res["derived_order"] = vr.derived.graph.order();
  res[name] = solve_json(vr.result);
  std::cout << name << "(G) " << (vr.exact() ? "= " : "") << solve_text(vr.result) << "  (derived graph on "
            << vr.derived.graph.order() << " vertices)\n";
  if (vr.witness()) {
    json origins = json::array();
    for (auto v : vr.witness()->sources) {
      const auto& org = vr.origin_map()[v];
      origins.push_back({{"id", v}, {"origin", burnlab::to_string(org.kind)}, {"index", org.index}});
    }
    res["witness_origins"] = origins;
    std::cout << "witness: " << burnlab::format_sequence(*vr.witness()) << "\n";
    if (!o.witness_out.empty()) write_file(o.witness_out, burnlab::format_sequence(*vr.witness()) + "\n");
  }
  if (!vr.exact()) ctx.worst(kBudget);
}

// ---------------------------------------------------------------- gadget

struct GadgetOpts {
  std::string file;
  std::string emit_dir;
  bool verify = false, certificate = false;
  std::string witness_out;
};

json metadata_json(const burnlab::GadgetMetadata& meta) {
  json j = {{"m", meta.m}, {"n", meta.n}, {"B", meta.B}, {"B_prime", meta.B_prime},
            {"X_prime", meta.X_prime}, {"Y", meta.Y}, {"spine_length", meta.spine_length},
            {"q_centers", meta.q_centers}};
  j["segments"] = json::array();
  for (const auto& s : meta.segments) {
    j["segments"].push_back({{"name", burnlab::segment_name(s.kind, s.index)}, {"start", s.start},
                             {"length", s.length}});
  }
  j["spike_count"] = meta.spike_after.size();
  return j;
}

void cmd_gadget(const GadgetOpts& o, Context& ctx) {
  const std::string text = read_file(o.file);
  ctx.report["input"] = {{"file", o.file}, {"digest", "fnv1a:" + hex64(burnlab::fnv1a(text))}};
  std::istringstream in(text);
  const auto inst = burnlab::ThreePartitionInstance::make(burnlab::read_instance(in));
  const auto gd = burnlab::build_gadget(inst);
  auto& res = ctx.report["results"];
  res["instance"] = {{"X", inst.X}, {"n", inst.n}, {"B", inst.B}};
  res["gadget"] = metadata_json(gd.meta);
  res["gadget"]["vertices"] = gd.graph.order();
  res["gadget"]["edges"] = gd.graph.size();
  std::cout << "instance: n=" << inst.n << " B=" << inst.B << " m=" << inst.m() << "\n"
            << "gadget: " << gd.graph.order() << " vertices, " << gd.graph.size() << " edges, spine "
            << gd.meta.spine_length << ", B'=" << gd.meta.B_prime << "\n";

  if (!o.emit_dir.empty()) {
    std::filesystem::create_directories(o.emit_dir);
    const std::filesystem::path dir(o.emit_dir);
    std::ostringstream el, iv;
    burnlab::write_edge_list(el, gd.graph);
    burnlab::write_interval_model(iv, gd.meta.interval_model);
    write_file((dir / "gadget.txt").string(), el.str());
    write_file((dir / "gadget.intervals").string(), iv.str());
    write_file((dir / "gadget.json").string(), metadata_json(gd.meta).dump(2) + "\n");
    res["emitted"] = {(dir / "gadget.txt").string(), (dir / "gadget.intervals").string(),
                      (dir / "gadget.json").string()};
    std::cout << "emitted gadget.txt, gadget.intervals, gadget.json to " << o.emit_dir << "\n";
  }

  if (o.verify) {
    auto rep = burnlab::verify_gadget_structure(gd.graph, gd.meta);
    const auto cat = burnlab::caterpillar_preimage(gd.graph, gd.meta);
    const bool deg3 = burnlab::max_degree(cat.tree) <= 3;
    rep.checks.push_back({"caterpillar_preimage", cat.verified && deg3,
                          "tree on " + std::to_string(cat.tree.order()) + " vertices, max degree " +
                              std::to_string(burnlab::max_degree(cat.tree))});
    const auto lb = burnlab::ball_counting_lower_bound(gd.graph);
    res["ball_counting_lower_bound"] = lb;
    res["checks"] = json::array();
    for (const auto& c : rep.checks) {
      res["checks"].push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      std::cout << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
      if (!c.passed && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << "ball-counting lower bound: " << lb << " (2m+1 = " << 2 * inst.m() + 1 << ")\n";
    if (!rep.all_passed()) ctx.worst(kVerify);
  }

  if (o.certificate) {
    const auto part = burnlab::solve_distinct_3partition(inst);
    if (!part) throw burnlab::GraphError("no partition into triples exists, so there is no certificate");
    json triples = json::array();
    for (const auto& t : *part) triples.push_back(t);
    res["partition"] = triples;
    const auto seq = burnlab::certificate_sequence(inst, *part, gd.meta);
    const auto verdict = burnlab::validate(gd.graph, seq);
    res["certificate"] = {{"sequence", burnlab::format_sequence(seq)}, {"valid", verdict.valid}};
    std::cout << "certificate: " << seq.length() << " sources at horizon " << seq.horizon << ", "
              << (verdict.valid ? "valid" : "INVALID: " + verdict.reason) << "\n";
    if (!o.witness_out.empty()) write_file(o.witness_out, burnlab::format_sequence(seq) + "\n");
    if (!verdict.valid) ctx.worst(kVerify);
  }
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  std::string family;
  std::optional<std::uint64_t> seed;
  std::string out, dot;
};

void cmd_generate(const GenerateOpts& o, Context& ctx) {
  auto spec = burnlab::FamilySpec::parse(o.family);
  const bool randomized = spec.name == "random_tree" || spec.name == "random_connected" || spec.name == "caterpillar";
  if (randomized) {
    if (!o.seed) throw UsageError("family '" + spec.name + "' is randomized and needs --seed");
    if (spec.params.count("seed")) throw UsageError("pass the seed with --seed, not inside the family spec");
    spec.params["seed"] = std::to_string(*o.seed);
  }
  const Graph g = burnlab::generate(spec);
  ctx.report["input"] = {{"family", o.family}};
  if (o.seed) ctx.report["seed"] = *o.seed;
  std::ostringstream el;
  burnlab::write_edge_list(el, g);
  ctx.report["results"] = {{"n", g.order()}, {"m", g.size()}, {"digest", "fnv1a:" + hex64(burnlab::fnv1a(el.str()))}};
  if (o.out.empty()) {
    std::cout << el.str();
  } else {
    write_file(o.out, el.str());
    std::cout << spec.name << ": " << g.order() << " vertices, " << g.size() << " edges -> " << o.out << "\n";
  }
  if (!o.dot.empty()) {
    std::ostringstream d;
    burnlab::write_dot(d, g, spec.name);
    write_file(o.dot, d.str());
  }
}

// ---------------------------------------------------------------- pkfree

struct PkfreeOpts {
  std::string file;
  std::size_t k = 0;
  std::optional<std::uint64_t> budget, time_ms;
  std::string witness_out;
};

void cmd_pkfree(const PkfreeOpts& o, Context& ctx) {
  const Graph g = load_graph(o.file, ctx);
  const SolveBudget budget = make_budget(o.budget, o.time_ms, "pkfree");
  ctx.report["budget"] = budget_json(budget);
  auto& res = ctx.report["results"];
  const auto lip = burnlab::longest_induced_path(g, o.k);
  res["k"] = o.k;
  res["longest_induced_path_capped"] = lip;
  const auto seq = burnlab::pkfree_sequence(g, o.k);
  const std::size_t bound = (o.k + 2) / 2;
  const auto verdict = burnlab::validate(g, seq);
  res["sequence"] = burnlab::format_sequence(seq);
  res["length"] = seq.length();
  res["bound"] = bound;
  res["valid"] = verdict.valid;
  if (o.k >= 4 && g.order() > 1) {
    const auto cds = burnlab::minimum_connected_dominating_set(g, o.k);
    res["cds"] = {{"vertices", cds.vertices}, {"kind", burnlab::to_string(*cds.kind)}};
  }
  std::cout << "P_" << o.k << "-free: sequence " << burnlab::format_sequence(seq) << " (length " << seq.length()
            << ", bound " << bound << ", " << (verdict.valid ? "valid" : "INVALID") << ")\n";
  const auto exact = burnlab::burning_number_exact(g, budget);
  ctx.nodes_used += exact.nodes;
  res["burning_number"] = solve_json(exact);
  std::cout << "b(G) " << (exact.exact() ? "= " : "") << solve_text(exact) << "\n";
  if (!o.witness_out.empty()) write_file(o.witness_out, burnlab::format_sequence(seq) + "\n");
  if (!verdict.valid || seq.length() > bound) ctx.worst(kVerify);
  if (!exact.exact()) ctx.worst(kBudget);
}

// ---------------------------------------------------------------- verify-all

struct VerifyAllOpts {
  std::optional<std::uint64_t> seed, budget, time_ms;
  std::size_t count = 40;
  std::size_t max_n = 9;
};

void cmd_verify_all(const VerifyAllOpts& o, Context& ctx) {
  if (!o.seed) throw UsageError("verify-all needs --seed");
  const SolveBudget budget = make_budget(o.budget, o.time_ms, "verify-all");
  if (o.max_n < 2 || o.max_n > 12) throw UsageError("--max-n must be in [2, 12]");
  ctx.report["budget"] = budget_json(budget);
  ctx.report["seed"] = *o.seed;
  json checks = json::array();
  bool exhausted = false;

  auto record = [&](const std::string& name, std::size_t cases, std::size_t failures, const std::string& note) {
    checks.push_back({{"check", name}, {"cases", cases}, {"failures", failures}, {"note", note}});
    std::cout << "  " << (failures == 0 ? "pass" : "FAIL") << "  " << name << "  (" << cases << " cases";
    if (!note.empty()) std::cout << ", " << note;
    std::cout << ")\n";
    if (failures) ctx.worst(kVerify);
  };
  auto solve = [&](const Graph& g) -> std::optional<SolveResult> {
    auto r = burnlab::burning_number_exact(g, budget);
    ctx.nodes_used += r.nodes;
    if (!r.exact()) {
      exhausted = true;
      return std::nullopt;
    }
    return r;
  };

  {
    std::size_t fails = 0;
    for (std::size_t n = 1; n <= 100; ++n) {
      if (!burnlab::validate(burnlab::gen::path(n), burnlab::path_cycle_sequence(n))) ++fails;
      if (n >= 3 && !burnlab::validate(burnlab::gen::cycle(n), burnlab::path_cycle_sequence(n, burnlab::LineKind::cycle)))
        ++fails;
    }
    for (std::size_t n = 1; n <= 25; ++n) {
      auto r = solve(burnlab::gen::path(n));
      if (r && r->value() != burnlab::ceil_sqrt(n)) ++fails;
    }
    record("path_cycle_law", 225, fails, "");
  }

  std::vector<Graph> corpus;
  std::mt19937_64 rng(*o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::size_t n = 2 + rng() % (o.max_n - 1);
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 5);
    corpus.push_back(burnlab::gen::random_connected(n, p, rng()));
  }

  std::size_t oracle_fail = 0, rel_fail = 0, rel_cases = 0, tr_fail = 0, tr_cases = 0, pk_fail = 0, pk_cases = 0;
  std::size_t conj_fail = 0;
  for (const auto& g : corpus) {
    auto r = solve(g);
    if (!r) continue;
    if (r->value() != burnlab::burning_number_oracle(g)) ++oracle_fail;
    if (r->value() > burnlab::ceil_sqrt(g.order())) ++conj_fail;
    const auto rep = burnlab::verify_relations(g, budget);
    for (const auto& rel : rep.relations) {
      ++rel_cases;
      if (rel.status == burnlab::RelationStatus::fail) ++rel_fail;
      if (rel.status == burnlab::RelationStatus::unverified) exhausted = true;
    }
    const auto& w = *r->witness;
    burnlab::RandomChooser chooser(rng());
    tr_cases += 2;
    if (!burnlab::validate(burnlab::total_graph(g).graph, burnlab::total_seq_from_vertex_seq(g, w, chooser))) ++tr_fail;
    if (rep.total.witness &&
        !burnlab::validate(g, burnlab::vertex_seq_from_total_seq(g, *rep.total.witness, chooser)))
      ++tr_fail;
    if (g.size() > 0) {
      tr_cases += 2;
      if (!burnlab::validate(burnlab::line_graph(g).graph, burnlab::line_seq_from_vertex_seq(g, w, chooser))) ++tr_fail;
      if (rep.edge && rep.edge->witness &&
          !burnlab::validate(g, burnlab::vertex_seq_from_line_seq(g, *rep.edge->witness, chooser)))
        ++tr_fail;
    }
    for (std::size_t k = 4; k <= 2 * burnlab::ceil_sqrt(g.order()); ++k) {
      if (!burnlab::is_pk_free(g, k)) continue;
      ++pk_cases;
      const auto s = burnlab::pkfree_sequence(g, k);
      if (!burnlab::validate(g, s) || s.length() > (k + 2) / 2) ++pk_fail;
    }
  }
  record("oracle_equivalence", corpus.size(), oracle_fail, "");
  record("variant_relations", rel_cases, rel_fail, "");
  record("sequence_transforms", tr_cases, tr_fail, "randomized chooser");
  record("pkfree_sequences", pk_cases, pk_fail, "");
  record("sqrt_n_spot_check", corpus.size(), conj_fail, "");

  {
    const auto inst = burnlab::ThreePartitionInstance::make({4, 5, 6});
    const auto gd = burnlab::build_gadget(inst);
    std::size_t fails = 0;
    if (!burnlab::verify_gadget_structure(gd.graph, gd.meta).all_passed()) ++fails;
    const auto part = burnlab::solve_distinct_3partition(inst);
    if (!part || !burnlab::validate(gd.graph, burnlab::certificate_sequence(inst, *part, gd.meta))) ++fails;
    if (burnlab::ball_counting_lower_bound(gd.graph) != 2 * inst.m() + 1) ++fails;
    if (!burnlab::caterpillar_preimage(gd.graph, gd.meta).verified) ++fails;
    record("gadget_456", 4, fails, "");
  }

  ctx.report["results"]["checks"] = checks;
  ctx.report["results"]["budget_exhausted"] = exhausted;
  if (exhausted) {
    std::cout << "some cases were skipped: budget exhausted\n";
    ctx.worst(kBudget);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"burnlab: burning numbers, graph transforms and hardness gadgets"};
  app.require_subcommand(1);
  std::string json_out;
  app.add_option("--json-out", json_out, "write the JSON report here");

  BurnOpts burn;
  auto* sc_burn = app.add_subcommand("burn", "burning number of an edge-list graph");
  sc_burn->add_option("graph", burn.file, "edge-list file")->required();
  sc_burn->add_flag("--exact", burn.exact, "exact solver (default)");
  sc_burn->add_flag("--bounds", burn.bounds, "lower/upper bounds only");
  sc_burn->add_flag("--oracle", burn.oracle, "brute force, n <= 12");
  sc_burn->add_flag("--interval", burn.interval, "assert the graph is an interval graph (enables the diameter sandwich)");
  sc_burn->add_option("--budget", burn.budget, "search-node limit");
  sc_burn->add_option("--time-limit-ms", burn.time_ms, "wall-clock limit");
  sc_burn->add_option("--witness-out", burn.witness_out, "write the witness as 'k; b1 b2 ...'");

  VariantOpts var;
  auto* sc_var = app.add_subcommand("variant", "edge and total burning");
  sc_var->add_option("graph", var.file, "edge-list file")->required();
  sc_var->add_flag("--edge", var.edge, "b_L(G) = b(L(G))");
  sc_var->add_flag("--total", var.total, "b_T(G) = b(T(G))");
  sc_var->add_flag("--relations", var.relations, "check all relations between b, b_L, b_T");
  sc_var->add_option("--budget", var.budget, "search-node limit per solve");
  sc_var->add_option("--time-limit-ms", var.time_ms, "wall-clock limit");
  sc_var->add_option("--witness-out", var.witness_out, "write the derived-graph witness");

  GadgetOpts gad;
  auto* sc_gad = app.add_subcommand("gadget", "3-partition reduction gadget");
  sc_gad->add_option("instance", gad.file, "one integer per line")->required();
  sc_gad->add_option("--emit-dir", gad.emit_dir, "write edge list, interval model and metadata");
  sc_gad->add_flag("--verify", gad.verify, "run the structural checks");
  sc_gad->add_flag("--certificate", gad.certificate, "solve the partition and emit the certificate sequence");
  sc_gad->add_option("--witness-out", gad.witness_out, "write the certificate sequence");

  GenerateOpts genopt;
  auto* sc_gen = app.add_subcommand("generate", "write a named graph");
  sc_gen->add_option("family", genopt.family, "e.g. path:n=25, spider:r=4, gtilde, random_tree:n=10")->required();
  sc_gen->add_option("--seed", genopt.seed, "seed for randomized families");
  sc_gen->add_option("--out", genopt.out, "edge-list output (default stdout)");
  sc_gen->add_option("--dot", genopt.dot, "DOT output");

  PkfreeOpts pk;
  auto* sc_pk = app.add_subcommand("pkfree", "sequence for a P_k-free graph");
  sc_pk->add_option("graph", pk.file, "edge-list file")->required();
  sc_pk->add_option("k", pk.k, "forbidden induced path order")->required();
  sc_pk->add_option("--budget", pk.budget, "search-node limit for the exact comparison");
  sc_pk->add_option("--time-limit-ms", pk.time_ms, "wall-clock limit");
  sc_pk->add_option("--witness-out", pk.witness_out, "write the sequence");

  VerifyAllOpts va;
  auto* sc_va = app.add_subcommand("verify-all", "run the property corpus");
  sc_va->add_option("--seed", va.seed, "corpus seed");
  sc_va->add_option("--budget", va.budget, "search-node limit per solve");
  sc_va->add_option("--time-limit-ms", va.time_ms, "wall-clock limit per solve");
  sc_va->add_option("--count", va.count, "random graphs in the corpus");
  sc_va->add_option("--max-n", va.max_n, "largest corpus graph (<= 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  Context ctx;
  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  ctx.report["command"] = command;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*sc_burn) cmd_burn(burn, ctx);
    if (*sc_var) cmd_variant(var, ctx);
    if (*sc_gad) cmd_gadget(gad, ctx);
    if (*sc_gen) cmd_generate(genopt, ctx);
    if (*sc_pk) cmd_pkfree(pk, ctx);
    if (*sc_va) cmd_verify_all(va, ctx);
  } catch (const burnlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    ctx.code = kParse;
    ctx.report["error"] = {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}};
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    ctx.code = kParse;
    ctx.report["error"] = {{"kind", "usage"}, {"message", e.what()}};
  } catch (const burnlab::InstanceError& e) {
    std::cerr << "malformed instance: " << e.what() << "\n";
    ctx.code = kPrecondition;
    ctx.report["error"] = {{"kind", "precondition"}, {"rule", e.rule()}, {"message", e.what()}};
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    ctx.code = kPrecondition;
    ctx.report["error"] = {{"kind", "precondition"}, {"message", e.what()}};
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    ctx.code = kVerify;
    ctx.report["error"] = {{"kind", "verification"}, {"message", e.what()}};
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  ctx.report["nodes_used"] = ctx.nodes_used;
  ctx.report["timing_ms"] = ms;
  ctx.report["exit_code"] = ctx.code;
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << ctx.report.dump(2) << "\n";
  }
  return ctx.code;
}

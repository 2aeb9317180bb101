// Command-line front end. Exit codes: 0 = yes / valid / success,
// 1 = no / invalid witness, 2 = usage, parse or precondition error.
// Machine-readable JSON goes to stdout, diagnostics to stderr.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chromadia/acyclic_d2.hpp"
#include "chromadia/enumerate.hpp"
#include "chromadia/gadgets.hpp"
#include "chromadia/gio.hpp"
#include "chromadia/graph.hpp"
#include "chromadia/list2.hpp"
#include "chromadia/oracle.hpp"
#include "chromadia/star_d3.hpp"
#include "chromadia/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace chromadia;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

// CHROMADIA_BUDGET caps the order accepted by every oracle-backed search
// started from the command line. The library's own internal budgets are not
// affected.
std::optional<int> budget_override() {
  const char* s = std::getenv("CHROMADIA_BUDGET");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == std::string(s).size() && v >= 1) return v;
  } catch (...) {
  }
  throw Error(Err::ParseError, "CHROMADIA_BUDGET must be a positive integer");
}

OracleBudget make_budget(int fallback_vertices) {
  OracleBudget b;
  b.max_vertices = budget_override().value_or(fallback_vertices);
  return b;
}

ColouringKind parse_kind(const std::string& s) {
  if (s == "proper") return ColouringKind::Proper;
  if (s == "acyclic") return ColouringKind::Acyclic;
  if (s == "star") return ColouringKind::Star;
  if (s == "injective") return ColouringKind::Injective;
  throw Error(Err::ParseError, "unknown colouring kind: " + s);
}

HamMode parse_ham_mode(const std::string& s) {
  if (s == "cycle") return HamMode::Cycle;
  if (s == "path") return HamMode::Path;
  if (s == "path-no-triangle-edge") return HamMode::PathNoTriangleEdge;
  throw Error(Err::ParseError, "unknown hamiltonian mode: " + s);
}

int run_decide_acyclic(const std::string& path) {
  Graph g = load_graph_file(path);
  auto d = decide_acyclic3_d2(g);
  json doc{{"schema", 1}, {"problem", "acyclic3-d2"}};
  doc["trace"] = acyclic_trace_name(d.trace);
  if (d.colouring) {
    doc["decision"] = "yes";
    doc["certificate"] = json::parse(colouring_to_json(*d.colouring));
    emit(doc);
    return kYes;
  }
  doc["decision"] = "no";
  switch (d.trace) {
    case AcyclicTrace::EdgeBound: doc["reason"] = "edge bound m>2n-3"; break;
    case AcyclicTrace::SmallGraph: doc["reason"] = "exhaustive search"; break;
    default: doc["reason"] = "no admissible colour-3 class"; break;
  }
  emit(doc);
  return kNo;
}

int run_decide_star(const std::string& path) {
  Graph g = load_graph_file(path);
  auto c = decide_star3_d3(g);
  json doc{{"schema", 1}, {"problem", "star3-d3"}};
  if (c) {
    doc["decision"] = "yes";
    doc["certificate"] = json::parse(colouring_to_json(*c));
    emit(doc);
    return kYes;
  }
  doc["decision"] = "no";
  auto rep = violating_structures(g);
  if (!rep.bad4cycles.empty()) {
    doc["reason"] = "bad 4-cycle";
    doc["witness"] = rep.bad4cycles.front();
  } else if (!rep.fivecycles.empty()) {
    doc["reason"] = "5-cycle";
    doc["witness"] = rep.fivecycles.front();
  } else {
    doc["reason"] = "search exhausted";
  }
  emit(doc);
  return kNo;
}

int run_decide_lab(const std::string& path, int a1, int a2, int k) {
  Graph g = load_graph_file(path);
  auto lab = exact_lab(g, a1, a2, k, make_budget(OracleBudget{}.max_vertices));
  json doc{{"schema", 1}, {"problem", "lab"}, {"a1", a1}, {"a2", a2}, {"k", k}};
  if (lab) {
    doc["decision"] = "yes";
    doc["certificate"] = json::parse(labelling_to_json(*lab));
    emit(doc);
    return kYes;
  }
  doc["decision"] = "no";
  doc["reason"] = "no labelling";
  emit(doc);
  return kNo;
}

int finish_check(json doc, const CheckResult& v) {
  if (!v) {
    doc["valid"] = true;
    emit(doc);
    return kYes;
  }
  doc["valid"] = false;
  doc["violation"] = violation_name(v->kind);
  doc["witness"] = v->witness;
  emit(doc);
  return kNo;
}

int run_verify_colouring(const std::string& kind_str, const std::string& gpath,
                         const std::string& wpath) {
  Graph g = load_graph_file(gpath);
  auto c = colouring_from_json(read_text_file(wpath));
  auto v = check_colouring(g, c, parse_kind(kind_str));
  return finish_check(json{{"schema", 1}, {"check", "colouring"}, {"kind", kind_str}}, v);
}

int run_verify_labelling(const std::string& gpath, const std::string& wpath) {
  Graph g = load_graph_file(gpath);
  auto lab = labelling_from_json(read_text_file(wpath));
  auto v = check_lab_labelling(g, lab);
  return finish_check(json{{"schema", 1}, {"check", "labelling"}}, v);
}

int run_verify_partition(const std::string& gpath, const std::string& wpath) {
  Graph g = load_graph_file(gpath);
  json w = json::parse(read_text_file(wpath));
  IFPartition p{w.at("I").get<std::vector<int>>(), w.at("F").get<std::vector<int>>()};
  auto v = check_if_partition(g, p);
  return finish_check(json{{"schema", 1}, {"check", "partition"}}, v);
}

int finish_search(json doc, bool found, const std::function<void(json&)>& fill) {
  if (found) {
    doc["decision"] = "yes";
    fill(doc);
    emit(doc);
    return kYes;
  }
  doc["decision"] = "no";
  emit(doc);
  return kNo;
}

int run_oracle_colouring(const std::string& path, int k, const std::string& kind_str) {
  Graph g = load_graph_file(path);
  auto c = exact_colouring(g, k, parse_kind(kind_str), make_budget(OracleBudget{}.max_vertices));
  return finish_search(json{{"schema", 1}, {"oracle", "colouring"}, {"k", k}, {"kind", kind_str}},
                       c.has_value(),
                       [&](json& d) { d["certificate"] = json::parse(colouring_to_json(*c)); });
}

int run_oracle_list_star3(const std::string& path, const std::string& lists_path) {
  Graph g = load_graph_file(path);
  auto lists = lists_from_json(read_text_file(lists_path));
  auto c = exact_list_star3(g, lists, make_budget(OracleBudget{}.max_vertices));
  return finish_search(json{{"schema", 1}, {"oracle", "list-star3"}}, c.has_value(),
                       [&](json& d) { d["certificate"] = json::parse(colouring_to_json(*c)); });
}

int run_oracle_lab(const std::string& path, int a1, int a2, int k) {
  Graph g = load_graph_file(path);
  auto lab = exact_lab(g, a1, a2, k, make_budget(OracleBudget{}.max_vertices));
  return finish_search(
      json{{"schema", 1}, {"oracle", "lab"}, {"a1", a1}, {"a2", a2}, {"k", k}}, lab.has_value(),
      [&](json& d) { d["certificate"] = json::parse(labelling_to_json(*lab)); });
}

int run_oracle_near_bipartite(const std::string& path) {
  Graph g = load_graph_file(path);
  auto p = exact_near_bipartite(g, make_budget(OracleBudget{}.max_vertices));
  return finish_search(json{{"schema", 1}, {"oracle", "near-bipartite"}}, p.has_value(),
                       [&](json& d) {
                         d["certificate"] = json{{"schema", 1}, {"I", p->I}, {"F", p->F}};
                       });
}

int run_oracle_hamiltonian(const std::string& path, const std::string& mode_str) {
  Graph g = load_graph_file(path);
  auto order = exact_hamiltonian(g, parse_ham_mode(mode_str),
                                 make_budget(hamiltonian_budget().max_vertices));
  return finish_search(json{{"schema", 1}, {"oracle", "hamiltonian"}, {"mode", mode_str}},
                       order.has_value(), [&](json& d) { d["order"] = *order; });
}

void write_gadget_files(const GadgetOutput& o, const std::string& op, const std::string& out_path) {
  if (out_path.size() >= 3 && out_path.substr(out_path.size() - 3) == ".g6")
    write_graph6_file(out_path, {o.graph});
  else
    write_text_file(out_path, write_edge_list(o.graph));
  json doc{{"schema", 1}, {"op", op},          {"n", o.graph.n()},
           {"m", o.graph.m()}, {"roles", o.roles}, {"notes", o.notes}};
  write_text_file(out_path + ".json", doc.dump() + "\n");
  emit(doc);
}

std::vector<std::vector<int>> bipartition_or_throw(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  std::vector<std::vector<int>> parts(2);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.adj(v)) {
        if (side[w] < 0) {
          side[w] = side[v] ^ 1;
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          throw Error(Err::NotBipartite, "complete-same-class: input graph is not bipartite");
        }
      }
    }
  }
  for (int v = 0; v < g.n(); ++v) parts[side[v]].push_back(v);
  return parts;
}

int run_bridge(const std::string& gpath, const std::string& direction, const std::string& wpath) {
  Graph g = load_graph_file(gpath);
  try {
    json doc{{"schema", 1}, {"op", "bridge"}, {"direction", direction}};
    if (direction == "lab-to-path") {
      auto lab = labelling_from_json(read_text_file(wpath));
      doc["path"] = labelling_to_path(g, lab);
    } else if (direction == "path-to-lab") {
      json w = json::parse(read_text_file(wpath));
      auto lab = path_to_labelling(g, w.at("path").get<std::vector<int>>());
      doc["certificate"] = json::parse(labelling_to_json(lab));
    } else {
      throw Error(Err::ParseError, "unknown bridge direction: " + direction);
    }
    emit(doc);
    return kYes;
  } catch (const Error& e) {
    if (e.kind() != Err::WitnessInvalid) throw;
    emit(json{{"schema", 1}, {"op", "bridge"}, {"valid", false}, {"reason", e.what()}});
    return kNo;
  }
}

int run_gen(int n, int diam, int count, std::uint64_t seed, std::optional<int> max_degree,
            const std::string& mode_str) {
  GenOptions opts;
  opts.n = n;
  opts.diam = diam;
  opts.max_degree = max_degree;
  if (mode_str == "exact")
    opts.mode = DiamMode::Exact;
  else if (mode_str == "atmost")
    opts.mode = DiamMode::AtMost;
  else
    throw Error(Err::ParseError, "unknown diameter mode: " + mode_str);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    auto g = random_connected_graph(rng, opts);
    if (!g) {
      std::cerr << "gen: no graph with n=" << n << " diam=" << diam
                << " found within the retry budget\n";
      return kError;
    }
    std::cout << write_graph6(*g) << "\n";
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision toolkit for colourings of small-diameter graphs"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string gpath, wpath, out_path, kind = "proper", mode = "cycle", direction;
  int a1 = 1, a2 = 2, k = 3, t = 1;
  int gen_n = 0, gen_diam = 0, gen_count = 1;
  std::uint64_t gen_seed = 0;
  std::optional<int> gen_maxdeg;
  std::string gen_mode = "exact";

  auto* decide = app.add_subcommand("decide", "decide a colouring or labelling question");
  decide->require_subcommand(1);
  auto* d_ac = decide->add_subcommand("acyclic3-d2", "acyclic 3-colouring, diameter <= 2");
  d_ac->add_option("graph", gpath, "graph file (.g6 or edge list)")->required();
  d_ac->callback([&] { run = [&] { return run_decide_acyclic(gpath); }; });
  auto* d_st = decide->add_subcommand("star3-d3", "star 3-colouring, diameter <= 3");
  d_st->add_option("graph", gpath, "graph file")->required();
  d_st->callback([&] { run = [&] { return run_decide_star(gpath); }; });
  auto* d_lab = decide->add_subcommand("lab", "L(a,b)-k-labelling");
  d_lab->add_option("--a", a1, "gap required across an edge")->required();
  d_lab->add_option("--b", a2, "gap required across a 2-path")->required();
  d_lab->add_option("--k", k, "largest label")->required();
  d_lab->add_option("graph", gpath, "graph file")->required();
  d_lab->callback([&] { run = [&] { return run_decide_lab(gpath, a1, a2, k); }; });

  auto* verify = app.add_subcommand("verify", "check a witness against a graph");
  verify->require_subcommand(1);
  auto* v_col = verify->add_subcommand("colouring", "vertex colouring certificate");
  v_col->add_option("--kind", kind, "proper|acyclic|star|injective");
  v_col->add_option("graph", gpath)->required();
  v_col->add_option("witness", wpath)->required();
  v_col->callback([&] { run = [&] { return run_verify_colouring(kind, gpath, wpath); }; });
  auto* v_lab = verify->add_subcommand("labelling", "labelling certificate");
  v_lab->add_option("graph", gpath)->required();
  v_lab->add_option("witness", wpath)->required();
  v_lab->callback([&] { run = [&] { return run_verify_labelling(gpath, wpath); }; });
  auto* v_part = verify->add_subcommand("partition", "independent-set / forest split");
  v_part->add_option("graph", gpath)->required();
  v_part->add_option("witness", wpath)->required();
  v_part->callback([&] { run = [&] { return run_verify_partition(gpath, wpath); }; });

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
  oracle->require_subcommand(1);
  auto* o_col = oracle->add_subcommand("colouring", "k-colouring of a given kind");
  o_col->add_option("--k", k)->required();
  o_col->add_option("--kind", kind, "proper|acyclic|star|injective");
  o_col->add_option("graph", gpath)->required();
  o_col->callback([&] { run = [&] { return run_oracle_colouring(gpath, k, kind); }; });
  auto* o_ls = oracle->add_subcommand("list-star3", "star colouring under {1,2,3}-lists");
  o_ls->add_option("graph", gpath)->required();
  o_ls->add_option("lists", wpath, "lists JSON file")->required();
  o_ls->callback([&] { run = [&] { return run_oracle_list_star3(gpath, wpath); }; });
  auto* o_lab = oracle->add_subcommand("lab", "L(a,b)-k-labelling");
  o_lab->add_option("--a", a1)->required();
  o_lab->add_option("--b", a2)->required();
  o_lab->add_option("--k", k)->required();
  o_lab->add_option("graph", gpath)->required();
  o_lab->callback([&] { run = [&] { return run_oracle_lab(gpath, a1, a2, k); }; });
  auto* o_nb = oracle->add_subcommand("near-bipartite", "independent set plus forest");
  o_nb->add_option("graph", gpath)->required();
  o_nb->callback([&] { run = [&] { return run_oracle_near_bipartite(gpath); }; });
  auto* o_ham = oracle->add_subcommand("hamiltonian", "hamiltonian cycle or path");
  o_ham->add_option("--mode", mode, "cycle|path|path-no-triangle-edge");
  o_ham->add_option("graph", gpath)->required();
  o_ham->callback([&] { run = [&] { return run_oracle_hamiltonian(gpath, mode); }; });

  auto* gadget = app.add_subcommand("gadget", "graph constructions with provenance");
  gadget->require_subcommand(1);
  auto add_gadget = [&](const char* name, const char* help,
                        std::function<GadgetOutput(const Graph&)> op) {
    auto* sub = gadget->add_subcommand(name, help);
    sub->add_option("graph", gpath)->required();
    sub->add_option("--out", out_path, "output graph file; sidecar JSON lands beside it")
        ->required();
    std::string op_name = name;
    sub->callback([&, op = std::move(op), op_name] {
      run = [&, op, op_name] {
        write_gadget_files(op(load_graph_file(gpath)), op_name, out_path);
        return kYes;
      };
    });
    return sub;
  };
  add_gadget("nearbip-to-acyclic3", "subdivision with hub and attachments",
             [](const Graph& g) { return nearbip_to_acyclic3(g); });
  add_gadget("col3-to-star3", "replace edges by triple common neighbours",
             [](const Graph& g) { return col3_to_star3(g); });
  add_gadget("hc-expand-4cycles", "blow vertices up into 4-cycles",
             [](const Graph& g) { return hc_expand_4cycles(g); });
  add_gadget("hc-to-hp", "split a degree-2 vertex, hang pendants",
             [](const Graph& g) { return hc_to_hp(g); });
  add_gadget("complete-same-class", "join far same-class pairs of a bipartite graph",
             [](const Graph& g) { return complete_same_class_pairs(g, bipartition_or_throw(g)); });
  auto* g_dom = add_gadget("dominating-clique", "join a clique to every vertex",
                           [&](const Graph& g) { return dominating_clique(g, t); });
  g_dom->add_option("--t", t, "clique size");
  auto* g_br = gadget->add_subcommand("bridge", "diameter-2 labelling/path converter");
  g_br->add_option("--direction", direction, "lab-to-path|path-to-lab")->required();
  g_br->add_option("graph", gpath)->required();
  g_br->add_option("--witness", wpath, "witness JSON file")->required();
  g_br->callback([&] { run = [&] { return run_bridge(gpath, direction, wpath); }; });

  auto* gen = app.add_subcommand("gen", "seeded random connected graphs as graph6 lines");
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--diam", gen_diam, "diameter")->required();
  gen->add_option("--count", gen_count, "how many graphs");
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--max-degree", gen_maxdeg, "cap on vertex degrees");
  gen->add_option("--mode", gen_mode, "exact|atmost diameter");
  gen->callback([&] {
    run = [&] { return run_gen(gen_n, gen_diam, gen_count, gen_seed, gen_maxdeg, gen_mode); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  try {
    return run ? run() : kError;
  } catch (const Error& e) {
    std::cerr << "error: " << err_name(e.kind()) << ": " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

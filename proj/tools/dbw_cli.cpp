#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dbw/digraph.hpp"
#include "dbw/errors.hpp"
#include "dbw/generators.hpp"
#include "dbw/io.hpp"
#include "dbw/layout.hpp"
#include "dbw/solvers.hpp"
#include "dbw/transforms.hpp"
#include "dbw/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dbw::Error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dbw::DiGraph load_graph(const std::string& path) {
  return dbw::parse_digraph_auto(slurp(path));
}

void emit_graph(const dbw::DiGraph& d, const std::string& format) {
  std::cout << (format == "structured" ? dbw::format_digraph_structured(d)
                                       : dbw::format_digraph_text(d));
}

dbw::WidthMode parse_mode(const std::string& mode, const std::string& kind) {
  if (mode == "exact") return dbw::WidthMode::Exact;
  if (mode == "heuristic") return dbw::WidthMode::Heuristic;
  if (mode == "via-split") {
    if (kind != "dbw")
      throw dbw::Error("--mode via-split applies to the dbw kind only");
    return dbw::WidthMode::ViaSplit;
  }
  throw dbw::Error("unknown mode \"" + mode + "\"");
}

dbw::WidthResult run_width(const dbw::DiGraph& d, const std::string& kind,
                           dbw::WidthMode mode, const dbw::WidthOptions& opt) {
  if (kind == "dbw") return dbw::directed_branch_width(d, mode, opt);
  if (kind == "bcrk") return dbw::bi_cut_rank_width(d, mode, opt);
  if (kind == "bw") return dbw::branch_width(dbw::underlying(d), mode, opt);
  throw dbw::Error("unknown width kind \"" + kind + "\"");
}

// Rebuilds the cut function a decomposition is scored against.
int score_width(const dbw::DiGraph& d, const std::string& kind,
                const dbw::LayoutTree& t, std::vector<int>* orders) {
  dbw::WidthReport rep;
  if (kind == "dbw") rep = dbw::layout_width(t, dbw::DbwCut(d));
  else if (kind == "bw")
    rep = dbw::layout_width(t, dbw::UbwCut(dbw::underlying(d)));
  else if (kind == "bcrk")
    rep = dbw::layout_width(t, dbw::BicutCut(d));
  else
    throw dbw::Error("unknown width kind \"" + kind + "\"");
  if (orders) *orders = rep.per_edge_orders;
  return rep.width;
}

std::string tree_dot(const dbw::LayoutTree& t) {
  std::ostringstream out;
  out << "graph layout {\n";
  for (int v = 0; v < t.node_count; ++v) {
    out << "  t" << v;
    if (t.leaf_map[v] >= 0) out << " [label=\"e" << t.leaf_map[v] << "\"]";
    else
      out << " [label=\"\", shape=point]";
    out << ";\n";
  }
  for (auto [a, b] : t.tree_edges) out << "  t" << a << " -- t" << b << ";\n";
  out << "}\n";
  return out.str();
}

struct WidthArgs {
  std::string kind;
  std::string graph;
  std::string mode = "exact";
  std::string format = "text";
  int at_most = -1;
  int exact_cap = 16;
  int threads = 1;
  std::uint64_t seed = 0;
  bool dot = false;
};

void add_width_options(CLI::App* cmd, WidthArgs& a, bool decompose) {
  cmd->add_option("kind", a.kind, "width kind: dbw, bw, or bcrk")
      ->required()
      ->check(CLI::IsMember({"dbw", "bw", "bcrk"}));
  cmd->add_option("graph", a.graph, "graph file (default: stdin)");
  cmd->add_option("--mode", a.mode, "exact, via-split, or heuristic")
      ->check(CLI::IsMember({"exact", "via-split", "heuristic"}));
  cmd->add_option("--format", a.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--exact-cap", a.exact_cap, "ground cap for exact engines");
  cmd->add_option("--threads", a.threads, "worker threads for exact search");
  cmd->add_option("--seed", a.seed, "heuristic seed");
  if (decompose) cmd->add_flag("--dot", a.dot, "emit the tree as DOT text");
  else
    cmd->add_option("--at-most", a.at_most,
                    "decide width <= K; exit 1 when it is larger");
}

int cmd_width(const WidthArgs& a) {
  dbw::DiGraph d = load_graph(a.graph);
  dbw::WidthOptions opt;
  opt.exact_cap = a.exact_cap;
  opt.threads = a.threads;
  opt.seed = a.seed;
  dbw::WidthResult res = run_width(d, a.kind, parse_mode(a.mode, a.kind), opt);
  if (a.format == "structured") {
    json j;
    j["schema_version"] = 1;
    j["problem"] = "width";
    j["cut_kind"] = a.kind;
    j["mode"] = a.mode;
    j["width"] = res.width;
    if (a.at_most >= 0) j["at_most"] = a.at_most;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << a.kind << " = " << res.width << "\n";
    if (a.at_most >= 0)
      std::cout << a.kind << " <= " << a.at_most << ": "
                << (res.width <= a.at_most ? "yes" : "no") << "\n";
  }
  if (a.at_most >= 0 && res.width > a.at_most) return 1;
  return 0;
}

int cmd_decompose(const WidthArgs& a) {
  dbw::DiGraph d = load_graph(a.graph);
  dbw::WidthOptions opt;
  opt.exact_cap = a.exact_cap;
  opt.threads = a.threads;
  opt.seed = a.seed;
  dbw::WidthResult res = run_width(d, a.kind, parse_mode(a.mode, a.kind), opt);
  if (a.dot) {
    std::cout << tree_dot(res.tree);
    return 0;
  }
  dbw::DecompositionDoc doc;
  doc.cut_kind = a.kind;
  doc.tree = res.tree;
  doc.width = score_width(d, a.kind, res.tree, &doc.per_edge_orders);
  std::cout << dbw::format_decomposition(doc);
  return 0;
}

int cmd_score(const std::string& kind, const std::string& graph_path,
              const std::string& doc_path) {
  dbw::DiGraph d = load_graph(graph_path);
  dbw::DecompositionDoc doc = dbw::parse_decomposition(slurp(doc_path));
  if (doc.cut_kind != kind)
    std::cerr << "note: document says cut_kind " << doc.cut_kind
              << ", scoring as " << kind << "\n";
  int w = score_width(d, kind, doc.tree, nullptr);
  std::cout << "width = " << w << "\n";
  if (w != doc.width) {
    std::cerr << "error: document claims width " << doc.width
              << " but the tree scores " << w << "\n";
    return 2;
  }
  return 0;
}

int cmd_solve(const std::string& problem, const std::string& graph,
              const std::string& sidecar, int k, int h, int s,
              const dbw::SolveOptions& so, const std::string& format) {
  dbw::DiGraph d = load_graph(graph);
  if (problem == "hamilton") {
    dbw::HamiltonResult res = dbw::d_hamilton_path(d, so);
    if (format == "structured") {
      std::cout << dbw::format_hamilton_doc(d, res);
    } else if (res.exists) {
      std::cout << "yes\npath =";
      for (dbw::VertexId v : res.path) std::cout << ' ' << v;
      std::cout << "\n";
    } else {
      std::cout << "no\n";
    }
    return res.exists ? 0 : 1;
  }
  if (problem == "maxcut") {
    dbw::MaxCutResult res = dbw::d_max_cut(d, so);
    if (format == "structured") {
      std::cout << dbw::format_maxcut_doc(d, res);
    } else {
      std::cout << "maxcut = " << res.value << "\nside =";
      for (int v : res.side.indices()) std::cout << ' ' << v;
      std::cout << "\n";
    }
    return 0;
  }
  if (problem == "dred") {
    dbw::DredInstance inst;
    inst.d = d;
    if (!sidecar.empty()) {
      dbw::parse_dred_sidecar(slurp(sidecar), inst);
    } else {
      if (k < 0 || h < 0)
        throw dbw::Error("dred needs --sidecar or --k/--h (and optional --s)");
      inst.k = k;
      inst.h = h;
      inst.s = s < 0 ? 0 : s;
      if (inst.s >= d.vertex_count())
        throw dbw::Error("--s out of range");
    }
    bool ans = dbw::brute_force_dred(inst);
    if (format == "structured") std::cout << dbw::format_dred_doc(inst, ans);
    else
      std::cout << (ans ? "yes" : "no") << "\n";
    return ans ? 0 : 1;
  }
  throw dbw::Error("unknown problem \"" + problem + "\"");
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& p,
                 const std::string& variant, const std::string& format) {
  auto arg = [&](std::size_t i, const char* what) {
    if (i >= p.size())
      throw dbw::Error(std::string("missing parameter: ") + what);
    return p[i];
  };
  auto num = [&](std::size_t i, const char* what) {
    try {
      return std::stoi(arg(i, what));
    } catch (const std::exception&) {
      throw dbw::Error(std::string("bad integer for ") + what);
    }
  };
  if (kind == "grid") {
    dbw::UGraph g = dbw::grid(num(0, "rows"), num(1, "cols"));
    std::vector<std::pair<dbw::VertexId, dbw::VertexId>> es;
    for (int e = 0; e < g.edge_count(); ++e) es.push_back(g.edge(e));
    emit_graph(dbw::DiGraph::build(g.vertex_count(), es), format);
    return 0;
  }
  if (kind == "gamma-grid") {
    emit_graph(dbw::bipartite_orientation_grid(num(0, "n")), format);
    return 0;
  }
  if (kind == "ne-grid") {
    emit_graph(dbw::ne_dag_grid(num(0, "k")), format);
    return 0;
  }
  if (kind == "counterexample") {
    dbw::CounterexampleFamily fam = dbw::counterexample_family(num(0, "n"));
    if (variant == "d") emit_graph(fam.d, format);
    else if (variant == "delta")
      emit_graph(fam.delta, format);
    else if (variant == "delta-prime")
      emit_graph(fam.delta_prime, format);
    else
      throw dbw::Error("unknown variant \"" + variant + "\"");
    return 0;
  }
  if (kind == "bidirect") {
    dbw::DiGraph d = load_graph(p.empty() ? std::string() : p[0]);
    emit_graph(dbw::bidirect(dbw::underlying(d)), format);
    return 0;
  }
  if (kind == "random" || kind == "random-dag") {
    int n = num(0, "n");
    double prob = 0;
    try {
      prob = std::stod(arg(1, "p"));
    } catch (const std::exception&) {
      throw dbw::Error("bad probability for p");
    }
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(arg(2, "seed"));
    } catch (const std::exception&) {
      throw dbw::Error("bad integer for seed");
    }
    emit_graph(kind == "random" ? dbw::random_digraph(n, prob, seed)
                                : dbw::random_dag(n, prob, seed),
               format);
    return 0;
  }
  throw dbw::Error("unknown generator \"" + kind + "\"");
}

int cmd_cops(const std::string& graph, const std::string& motion,
             const std::string& format) {
  dbw::DiGraph d = load_graph(graph);
  dbw::RobberMotion m = motion == "underlying" ? dbw::RobberMotion::Underlying
                                               : dbw::RobberMotion::Directed;
  dbw::CopSweepResult res = dbw::dag_cop_sweep(d, m);
  bool acyclic = dbw::is_acyclic(d);
  if (format == "structured") {
    json j;
    j["schema_version"] = 1;
    j["problem"] = "cops";
    j["answer"] = res.cleaned;
    j["witness"] = res.moves;
    j["certificate_checks"]["input_acyclic"] = acyclic;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cleaned = " << (res.cleaned ? "yes" : "no") << "\n";
    if (!acyclic) std::cout << "note: input has a cycle\n";
    if (res.cleaned) {
      std::cout << "moves =";
      for (dbw::VertexId v : res.moves) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  return res.cleaned ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& suite, std::uint64_t seed,
               int scale, int exact_cap, int oracle_cap,
               const std::string& format) {
  dbw::VerifyBudget budget;
  budget.scale = scale;
  budget.exact_cap = exact_cap;
  budget.oracle_cap = oracle_cap;
  dbw::Report rep = dbw::run_checks(suite, budget, seed);
  std::cout << (format == "structured" ? dbw::format_report_structured(rep)
                                       : dbw::format_report_text(rep));
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph width toolkit"};
  app.require_subcommand(1);

  WidthArgs wa;
  CLI::App* width = app.add_subcommand("width", "compute a width value");
  add_width_options(width, wa, false);

  WidthArgs da;
  CLI::App* dec = app.add_subcommand("decompose", "emit a decomposition");
  add_width_options(dec, da, true);

  std::string lg_graph, lg_format = "text";
  CLI::App* lg = app.add_subcommand("linegraph", "directed line graph");
  lg->add_option("graph", lg_graph);
  lg->add_option("--format", lg_format)
      ->check(CLI::IsMember({"text", "structured"}));

  std::string sp_graph, sp_format = "text";
  CLI::App* sp = app.add_subcommand("split", "source-sink split");
  sp->add_option("graph", sp_graph);
  sp->add_option("--format", sp_format)
      ->check(CLI::IsMember({"text", "structured"}));

  std::string ct_kind, ct_graph, ct_format = "text";
  int ct_edge = -1;
  CLI::App* ct = app.add_subcommand("contract", "contract an edge");
  ct->add_option("kind", ct_kind)->required()->check(
      CLI::IsMember({"edge", "butterfly"}));
  ct->add_option("e", ct_edge, "edge id")->required();
  ct->add_option("graph", ct_graph);
  ct->add_option("--format", ct_format)
      ->check(CLI::IsMember({"text", "structured"}));

  std::string sv_problem, sv_graph, sv_sidecar, sv_format = "text";
  int sv_k = -1, sv_h = -1, sv_s = -1;
  dbw::SolveOptions sv_opt;
  CLI::App* sv = app.add_subcommand("solve", "run a solver");
  // --help only: the short -h would clash with the --h budget below.
  sv->set_help_flag("--help", "print help and exit");
  sv->add_option("problem", sv_problem)
      ->required()
      ->check(CLI::IsMember({"hamilton", "maxcut", "dred"}));
  sv->add_option("graph", sv_graph);
  sv->add_option("--sidecar", sv_sidecar, "dred sidecar {k, h, s}");
  sv->add_option("--k", sv_k);
  sv->add_option("--h", sv_h);
  sv->add_option("--s", sv_s);
  sv->add_option("--exact-cap", sv_opt.exact_cap);
  sv->add_option("--seed", sv_opt.seed);
  sv->add_option("--max-bag", sv_opt.max_bag);
  sv->add_option("--format", sv_format)
      ->check(CLI::IsMember({"text", "structured"}));

  std::string gn_kind, gn_variant = "d", gn_format = "text";
  std::vector<std::string> gn_params;
  CLI::App* gn = app.add_subcommand("generate", "build an instance");
  gn->add_option("kind", gn_kind)
      ->required()
      ->check(CLI::IsMember({"grid", "gamma-grid", "ne-grid", "counterexample",
                             "bidirect", "random", "random-dag"}));
  gn->add_option("params", gn_params, "generator parameters");
  gn->add_option("--variant", gn_variant, "counterexample member: d, delta, "
                                          "or delta-prime");
  gn->add_option("--format", gn_format)
      ->check(CLI::IsMember({"text", "structured"}));

  std::string cp_graph, cp_motion = "directed", cp_format = "text";
  CLI::App* cp = app.add_subcommand("cops", "single-cop DAG sweep");
  cp->add_option("graph", cp_graph);
  cp->add_option("--motion", cp_motion)
      ->check(CLI::IsMember({"directed", "underlying"}));
  cp->add_option("--format", cp_format)
      ->check(CLI::IsMember({"text", "structured"}));

  std::string sc_kind, sc_graph, sc_doc;
  CLI::App* sc = app.add_subcommand("score", "re-score a decomposition");
  sc->add_option("kind", sc_kind)->required()->check(
      CLI::IsMember({"dbw", "bw", "bcrk"}));
  sc->add_option("graph", sc_graph)->required();
  sc->add_option("decomposition", sc_doc)->required();

  std::vector<std::string> vf_suite{"all"};
  std::uint64_t vf_seed = 0;
  int vf_scale = 1, vf_exact_cap = 16, vf_oracle_cap = 8;
  std::string vf_format = "text";
  CLI::App* vf = app.add_subcommand("verify", "run the claim checks");
  vf->add_option("--suite", vf_suite, "check names or \"all\"");
  vf->add_option("--seed", vf_seed);
  vf->add_option("--scale", vf_scale, "0 smoke, 1 full, 2 extended");
  vf->add_option("--exact-cap", vf_exact_cap);
  vf->add_option("--oracle-cap", vf_oracle_cap);
  vf->add_option("--format", vf_format)
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (width->parsed()) return cmd_width(wa);
    if (dec->parsed()) return cmd_decompose(da);
    if (lg->parsed()) {
      emit_graph(dbw::directed_line_graph(load_graph(lg_graph)), lg_format);
      return 0;
    }
    if (sp->parsed()) {
      emit_graph(dbw::source_sink_split(load_graph(sp_graph)).graph,
                 sp_format);
      return 0;
    }
    if (ct->parsed()) {
      dbw::DiGraph d = load_graph(ct_graph);
      if (ct_edge < 0 || ct_edge >= d.edge_count())
        throw dbw::Error("edge id out of range");
      if (ct_kind == "butterfly" && !dbw::is_butterfly_edge(d, ct_edge)) {
        std::cerr << "edge " << ct_edge << " is not a butterfly edge\n";
        return 1;
      }
      emit_graph(dbw::contract_edge(d, ct_edge).graph, ct_format);
      return 0;
    }
    if (sv->parsed())
      return cmd_solve(sv_problem, sv_graph, sv_sidecar, sv_k, sv_h, sv_s,
                       sv_opt, sv_format);
    if (gn->parsed()) return cmd_generate(gn_kind, gn_params, gn_variant,
                                          gn_format);
    if (cp->parsed()) return cmd_cops(cp_graph, cp_motion, cp_format);
    if (sc->parsed()) return cmd_score(sc_kind, sc_graph, sc_doc);
    if (vf->parsed())
      return cmd_verify(vf_suite, vf_seed, vf_scale, vf_exact_cap,
                        vf_oracle_cap, vf_format);
  } catch (const dbw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

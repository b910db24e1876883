// Command-line front end: line-graph construction, root reconstruction,
// recognition, minimum-flip repair, case/mechanism classification, spectral
// radius reports, and the random-graph experiment sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lineinv/classify.hpp"
#include "lineinv/graph.hpp"
#include "lineinv/harness.hpp"
#include "lineinv/line_ops.hpp"
#include "lineinv/pseudo_inverse.hpp"
#include "lineinv/spectral.hpp"

namespace {

using namespace lineinv;

Graph read_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_edge_list(buffer.str());
  }
  return read_edge_list(path);
}

void emit_graph(const Graph& g, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << serialize_edge_list(g);
  } else {
    write_edge_list(g, out_path);
  }
}

std::string flip_text(const Flip& f) {
  return std::string(f.add ? "add" : "del") + " " + std::to_string(f.u) + " " +
         std::to_string(f.v);
}

PseudoInverseSolution solve_with(const Graph& h_tilde, EngineMode mode, int k_max,
                                 double time_limit_s) {
  if (mode == EngineMode::Enumeration) return solve_enumeration(h_tilde, k_max);
  PseudoInverseSolution sol = solve_branch_and_bound(build_ilp(h_tilde), BnbOptions{time_limit_s});
  if (mode == EngineMode::Both) {
    PseudoInverseSolution check = solve_enumeration(h_tilde, k_max);
    if (check.objective != sol.objective) {
      fail(Errc::InconsistentInputs,
           "engine disagreement: enumeration " + std::to_string(check.objective) +
               " vs branch-and-bound " + std::to_string(sol.objective));
    }
  }
  return sol;
}

int run_linegraph(const std::string& in, const std::string& out, const std::string& map_out) {
  LineGraphResult r = line_graph(read_graph(in));
  emit_graph(r.h, out);
  if (!map_out.empty()) {
    std::ostringstream csv;
    csv << "vertex,edge_u,edge_v\n";
    for (size_t i = 0; i < r.edge_map.size(); ++i) {
      csv << i << ',' << r.edge_map[i].first << ',' << r.edge_map[i].second << '\n';
    }
    if (map_out == "-") {
      std::cout << csv.str();
    } else {
      std::ofstream f(map_out);
      if (!f) fail(Errc::IoFailure, "cannot write " + map_out);
      f << csv.str();
    }
  }
  return 0;
}

int run_root(const std::string& in, const std::string& out, bool all) {
  RootResult r = root(read_graph(in));
  if (all) {
    for (const Graph& g : r.roots) emit_graph(g, "");
    if (r.ambiguous) std::cerr << "note: preimage is not unique\n";
  } else {
    emit_graph(r.roots[0], out);
    if (r.ambiguous) std::cerr << "note: preimage is not unique; emitted the 3-star choice\n";
  }
  return 0;
}

int run_recognize(const std::string& in) {
  Graph h = read_graph(in);
  if (is_line_graph(h)) {
    std::cout << "line graph\n";
    return 0;
  }
  std::cout << "NOT a line graph\n";
  if (auto claw = contains_induced_claw(h)) {
    std::cout << "induced 3-star at hub " << (*claw)[0] << " with leaves " << (*claw)[1] << " "
              << (*claw)[2] << " " << (*claw)[3] << '\n';
  }
  return 1;
}

int run_pinv(const std::string& in, EngineMode mode, int k_max, double time_limit_s,
             const std::string& lp_path, bool all_optima, const std::string& out_h,
             const std::string& out_g) {
  Graph h_tilde = read_graph(in);
  if (!lp_path.empty()) export_lp(build_ilp(h_tilde), lp_path);
  PseudoInverseSolution sol = solve_with(h_tilde, mode, k_max, time_limit_s);
  std::cout << "objective: " << sol.objective << '\n';
  for (const Flip& f : sol.flips) std::cout << "flip: " << flip_text(f) << '\n';
  std::cout << "engine: " << engine_name(sol.engine) << '\n';
  std::cout << "proved optimal: " << (sol.stats.proved_optimal ? "yes" : "no") << '\n';
  if (all_optima) {
    auto sets = all_minimal_flip_sets(h_tilde, k_max);
    std::cout << "minimal flip sets: " << sets.size() << '\n';
    for (const FlipSet& fs : sets) {
      std::cout << "  {";
      for (size_t i = 0; i < fs.size(); ++i) {
        std::cout << (i ? ", " : " ") << flip_text(fs[i]);
      }
      std::cout << " }\n";
    }
  }
  if (!out_h.empty()) emit_graph(sol.h_hat, out_h);
  if (!out_g.empty()) emit_graph(sol.g_hat, out_g);
  return 0;
}

int run_classify(const std::string& base, const std::string& in, EngineMode mode, int k_max,
                 double time_limit_s) {
  Graph h = read_graph(base);
  Graph h_tilde = read_graph(in);
  if (h.vertex_count() != h_tilde.vertex_count()) {
    fail(Errc::InconsistentInputs, "vertex counts differ");
  }
  FlipSet added;
  for (const Edge& e : h_tilde.edges()) {
    if (!h.has_edge(e.first, e.second)) added.push_back(Flip{e.first, e.second, true});
  }
  for (const Edge& e : h.edges()) {
    if (!h_tilde.has_edge(e.first, e.second)) {
      fail(Errc::InconsistentInputs, "perturbed graph is missing a base edge");
    }
  }
  PseudoInverseSolution sol = solve_with(h_tilde, mode, k_max, time_limit_s);
  CaseResult cr = classify_case(h, h_tilde, sol, added);
  std::cout << "case: " << case_label_name(cr.label) << (cr.mixed ? " (mixed)" : "") << '\n';
  std::cout << "objective: " << sol.objective << '\n';
  for (const Flip& f : sol.flips) std::cout << "flip: " << flip_text(f) << '\n';
  Graph g = root(h).roots[0];
  MechanismResult mr = classify_mechanism(g, sol.g_hat);
  std::cout << "mechanism: " << mechanism_name(mr.label) << '\n';
  if (mr.relocation) {
    std::cout << "relocated: (" << mr.relocation->first.first << "," << mr.relocation->first.second
              << ") -> (" << mr.relocation->second.first << "," << mr.relocation->second.second
              << ")\n";
  }
  if (mr.merged) {
    std::cout << "merged: " << mr.merged->first << " " << mr.merged->second << '\n';
  }
  if (mr.split_vertex) std::cout << "split: " << *mr.split_vertex << '\n';
  std::cout << "bound_name,lhs,rhs,satisfied\n";
  for (const BoundReport& br : case_bound_report(g, sol.g_hat, h, sol.h_hat, cr.label)) {
    std::cout << bound_report_csv(br) << '\n';
  }
  return 0;
}

int run_spectral(const std::string& in, double tol, bool smith) {
  Graph g = read_graph(in);
  SpectralReport r = spectral_radius(g, tol);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "radius: %.12f\niterations: %d\nresidual: %.3e\n", r.radius,
                r.iterations, r.residual);
  std::cout << buf;
  if (smith) std::cout << "radius at most 2: " << (is_smith(g) ? "yes" : "no") << '\n';
  return 0;
}

int run_experiment(const ExperimentConfig& cfg, const std::string& out_path) {
  std::vector<ExperimentRecord> records;
  ExperimentSummary summary = run_experiment(cfg, &records);
  if (out_path.empty() || out_path == "-") {
    write_experiment_csv(records, std::cout);
    std::cerr << summary_table(summary);
  } else {
    std::ofstream f(out_path);
    if (!f) fail(Errc::IoFailure, "cannot write " + out_path);
    write_experiment_csv(records, f);
    std::cout << summary_table(summary);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line-graph inverse and pseudo-inverse toolkit"};
  app.require_subcommand(1);

  const std::map<std::string, EngineMode> engine_map{{"enum", EngineMode::Enumeration},
                                                     {"bnb", EngineMode::BranchAndBound},
                                                     {"both", EngineMode::Both}};
  const std::map<std::string, Model> model_map{{"er", Model::ErdosRenyi},
                                               {"ba", Model::BarabasiAlbert}};
  const std::map<std::string, TimingMode> timing_map{{"wall", TimingMode::Wall},
                                                     {"zero", TimingMode::Zero}};

  std::string in, out, map_out, base, lp_path, out_h, out_g, gadget_path;
  bool all_roots = false, all_optima = false, smith = false;
  EngineMode engine = EngineMode::Enumeration;
  int k_max = 4;
  double time_limit_s = 60.0;
  double tol = 1e-10;
  ExperimentConfig cfg;

  auto* lg = app.add_subcommand("linegraph", "build the line graph of an edge list");
  lg->add_option("--in", in, "input edge list ('-' for stdin)")->required();
  lg->add_option("--out", out, "output edge list (default stdout)");
  lg->add_option("--emit-edge-map", map_out, "CSV mapping line-graph vertices to source edges");

  auto* rt = app.add_subcommand("root", "reconstruct a graph whose line graph is the input");
  rt->add_option("--in", in, "input edge list ('-' for stdin)")->required();
  rt->add_option("--out", out, "output edge list (default stdout)");
  rt->add_flag("--all", all_roots, "emit every preimage when the choice is ambiguous");

  auto* rec = app.add_subcommand("recognize", "test whether the input is a line graph");
  rec->add_option("--in", in, "input edge list ('-' for stdin)")->required();

  auto* pv = app.add_subcommand("pinv", "minimum edge-flip repair to the nearest line graph");
  pv->add_option("--in", in, "input edge list ('-' for stdin)")->required();
  pv->add_option("--engine", engine, "solver engine")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  pv->add_option("--kmax", k_max, "enumeration flip budget");
  pv->add_option("--time-limit", time_limit_s, "branch-and-bound time limit (seconds)");
  pv->add_option("--export-lp", lp_path, "write the binary program in LP format");
  pv->add_flag("--all-optima", all_optima, "list every minimum flip set");
  pv->add_option("--out-h", out_h, "write the repaired line graph");
  pv->add_option("--out-g", out_g, "write the reconstructed source graph");

  auto* cl = app.add_subcommand("classify", "label a perturbed instance and its repair mechanism");
  cl->add_option("--base", base, "unperturbed line graph")->required();
  cl->add_option("--in", in, "perturbed graph (base plus added edges)")->required();
  cl->add_option("--engine", engine, "solver engine")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  cl->add_option("--kmax", k_max, "enumeration flip budget");
  cl->add_option("--time-limit", time_limit_s, "branch-and-bound time limit (seconds)");

  auto* sp = app.add_subcommand("spectral", "largest adjacency eigenvalue via power iteration");
  sp->add_option("--in", in, "input edge list ('-' for stdin)")->required();
  sp->add_option("--tol", tol, "convergence tolerance");
  sp->add_flag("--smith", smith, "also report whether the radius is at most 2");

  auto* ex = app.add_subcommand("experiment", "random perturb-and-repair sweep with CSV output");
  ex->add_option("--model", cfg.model, "random graph model")
      ->transform(CLI::CheckedTransformer(model_map, CLI::ignore_case));
  ex->add_option("--n", cfg.n, "vertex count");
  ex->add_option("--p", cfg.p, "edge probability (er model)");
  ex->add_option("--attach", cfg.attach, "edges per arriving vertex (ba model)");
  ex->add_option("--samples", cfg.samples, "number of samples");
  ex->add_option("--add", cfg.edges_added, "edges added per sample");
  ex->add_option("--gadget", gadget_path, "edge list glued onto each sample instead of additions");
  ex->add_option("--seed", cfg.seed, "master seed");
  ex->add_option("--engine", cfg.engine, "solver engine")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  ex->add_option("--kmax", cfg.k_max, "enumeration flip budget");
  ex->add_option("--time-limit", cfg.time_limit_s, "branch-and-bound time limit (seconds)");
  ex->add_option("--threads", cfg.threads, "worker thread budget");
  ex->add_option("--timing", cfg.timing, "wall-clock or zeroed time_ms column")
      ->transform(CLI::CheckedTransformer(timing_map, CLI::ignore_case));
  ex->add_option("--out", out, "CSV path (default stdout, summary to stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lg->parsed()) return run_linegraph(in, out, map_out);
    if (rt->parsed()) return run_root(in, out, all_roots);
    if (rec->parsed()) return run_recognize(in);
    if (pv->parsed()) return run_pinv(in, engine, k_max, time_limit_s, lp_path, all_optima, out_h, out_g);
    if (cl->parsed()) return run_classify(base, in, engine, k_max, time_limit_s);
    if (sp->parsed()) return run_spectral(in, tol, smith);
    if (ex->parsed()) {
      if (!gadget_path.empty()) cfg.gadget = read_graph(gadget_path);
      return run_experiment(cfg, out);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lineinv/case_labels.hpp"
#include "lineinv/graph.hpp"
#include "lineinv/pseudo_inverse.hpp"
#include "lineinv/rng.hpp"

namespace lineinv {

/// Erdos-Renyi G(n, p) conditioned on connectivity by whole-graph rejection;
/// at most 10000 attempts before RejectionBudgetExhausted.
Graph gen_connected_er(int n, double p, Rng& rng);

/// Barabasi-Albert preferential attachment starting from a complete graph on
/// attach + 1 vertices; each newcomer picks `attach` distinct neighbors with
/// probability proportional to degree. attach = 1 grows a tree.
Graph gen_ba(int n, int attach, Rng& rng);

/// Adds k distinct uniformly chosen non-edges; returns the perturbed graph
/// and the additions as a flip set.
std::pair<Graph, FlipSet> perturb_add_edges(const Graph& h, int k, Rng& rng);

/// Disjoint union of h and the gadget, then one uniformly chosen gadget
/// vertex is identified with one uniformly chosen h vertex (gadget vertex
/// drawn first). The result has |V(h)| + |V(gadget)| - 1 vertices.
Graph augment_with_gadget(const Graph& h, const Graph& gadget, Rng& rng);

enum class Model { ErdosRenyi, BarabasiAlbert };
enum class EngineMode { Enumeration, BranchAndBound, Both };
enum class TimingMode { Wall, Zero };

struct ExperimentConfig {
  Model model = Model::ErdosRenyi;
  int n = 15;
  double p = 0.2;
  int attach = 1;
  int samples = 100;
  int edges_added = 1;          // ignored when a gadget is given
  std::optional<Graph> gadget;
  std::uint64_t seed = 0;
  EngineMode engine = EngineMode::Enumeration;
  int k_max = 4;
  double time_limit_s = 60.0;
  int threads = 1;
  /// Zero freezes the time_ms column so reruns are byte-identical.
  TimingMode timing = TimingMode::Wall;
};

struct ExperimentRecord {
  int sample = 0;
  int vh = 0;            // |V(h_tilde)|
  int eh = 0;            // |E(h_tilde)|
  std::string case_label = "-";
  int objective = -1;
  double norm_g = 0.0;
  double norm_g_hat = 0.0;
  double norm_h_tilde = 0.0;
  double norm_h_hat = 0.0;
  double ratio_root = 0.0;
  double ratio_pinv = 0.0;
  double time_ms = 0.0;
  std::string status = "ok";
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRecord& r);

struct ExperimentSummary {
  int samples = 0;
  int case_i = 0;
  int case_ii = 0;
  int del_edits = 0;   // Case III plus multi-edge removal optima
  int add_edits = 0;   // Case IV plus multi-edge addition optima
  int mixed = 0;
  int failures = 0;
  int bound_violations = 0;
  double max_ratio_root = 0.0;
  double max_ratio_pinv = 0.0;
  double mean_time_ms = 0.0;
  double max_time_ms = 0.0;
};

/// Runs the full pipeline per sample (generate, perturb, repair, verify,
/// classify, measure) with per-sample seeds derived from config.seed, so the
/// records do not depend on the thread budget. Rows are emitted in sample
/// order. Per-sample errors become failed rows, never aborting the sweep.
ExperimentSummary run_experiment(const ExperimentConfig& config,
                                 std::vector<ExperimentRecord>* records_out = nullptr);

void write_experiment_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);

std::string summary_table(const ExperimentSummary& s);

}  // namespace lineinv

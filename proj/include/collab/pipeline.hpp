#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "collab/community.hpp"
#include "collab/evaluation.hpp"
#include "collab/ingest.hpp"
#include "collab/network.hpp"
#include "collab/predictor.hpp"
#include "collab/school_network.hpp"
#include "collab/similarity.hpp"

namespace collab {

/// Everything derived from one train/test split.
struct Experiment {
  Corpus train;
  Corpus test;
  std::size_t dropped = 0;
  CoauthorGraph train_graph;
  CoauthorGraph test_graph;
  IncidenceGraph train_incidence;
  IncidenceGraph test_incidence;
  SchoolEdgeSet e_train;
  SchoolEdgeSet e_test;
  SchoolEdgeSet e_new;
  SchoolEdgeSet candidates;

  static Experiment build(const Corpus& corpus, YearInterval train_years, YearInterval test_years);
};

/// Step 1 + Step 2 for one period: score researcher pairs and aggregate to
/// school pairs. `gate` only applies to bipartite scores.
SchoolWeights school_weights(ScoreKind kind, const Corpus& corpus, const CoauthorGraph& g,
                             const IncidenceGraph& inc, DistanceGate gate);

struct MethodSpec {
  ScoreKind kind = ScoreKind::CommonNeighbors;
  ThresholdRule rule = ThresholdRule::percentile(1.0);
  DistanceGate gate = DistanceGate::reachable();
  PercentileOptions percentile;

  /// Percentile rule for co-authorship scores, median rule for bipartite.
  static MethodSpec defaults_for(ScoreKind kind);
  std::string parameter_label() const;
};

struct MethodResult {
  SchoolWeights weights;
  Prediction prediction;
  EvalReport report;
};

MethodResult run_method(const Experiment& exp, const MethodSpec& spec);

struct BaselineResult {
  SchoolGraph graph;
  Dendrogram dendrogram;
  std::vector<std::size_t> cuts;
  std::vector<Partition> partitions;
  std::vector<SchoolEdgeSet> predictions;
  std::vector<EvalReport> reports;
};

BaselineResult run_baseline(const Experiment& exp, const std::vector<std::size_t>& communities);

struct SweepConfig {
  std::vector<ScoreKind> coauthor_kinds{kCoauthorScores.begin(), kCoauthorScores.end()};
  std::vector<double> p_values{1.0, 0.4, 0.3, 0.2};
  std::vector<ScoreKind> bipartite_kinds{kBipartiteScores.begin(), kBipartiteScores.end()};
  std::vector<DistanceGate> gates{DistanceGate::off(), DistanceGate::reachable(), DistanceGate::below(10),
                                  DistanceGate::below(4)};
  std::vector<std::size_t> communities{5, 6, 7, 8};
  PercentileOptions percentile;
};

struct SweepRow {
  std::string section;    // coauthor | bipartite | community
  std::string method;     // score name or "community"
  std::string parameter;  // p, d or N
  double threshold = 0.0;
  EvalReport report;
};

std::vector<SweepRow> sweep(const Experiment& exp, const SweepConfig& config = {});

std::string report_csv_header();
std::string report_csv_row(const SweepRow& row);
std::string sweep_csv(const std::vector<SweepRow>& rows);
/// Aligned text grouped by section and parameter: edges / accuracy / recall
/// per method, then the random-guess accuracy.
std::string sweep_table(const std::vector<SweepRow>& rows);

/// Options shared by the command-line subcommands.
struct RunConfig {
  std::filesystem::path researchers;
  std::filesystem::path publications;
  std::optional<std::filesystem::path> organisations;
  YearInterval train_years{2008, 2010};
  YearInterval test_years{2011, 2013};
  ScoreKind kind = ScoreKind::CommonNeighbors;
  std::optional<ThresholdRule> rule;  // default per score family
  DistanceGate gate = DistanceGate::reachable();
  bool percentile_candidates_only = false;
  std::vector<std::size_t> communities{5, 6, 7, 8};
  std::filesystem::path out = "out";
  std::uint64_t seed = 42;

  MethodSpec method() const;
};

struct LoadedRun {
  std::optional<OrganisationTable> organisations;
  Corpus corpus;
  Experiment experiment;
};

LoadedRun load_run(const RunConfig& cfg);

/// Full pipeline. Writes prediction.csv, weights.csv, report.csv and run.log
/// into cfg.out and returns the method result.
MethodResult cmd_predict(const RunConfig& cfg);

}  // namespace collab

// collab: school-level collaboration link prediction from publication records.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "collab/error.hpp"
#include "collab/export.hpp"
#include "collab/pipeline.hpp"
#include "collab/synth.hpp"

using namespace collab;

namespace {

// String-valued options parsed after CLI11 has filled them in, so that bad
// values surface as ValidationError with our own messages.
struct RawOptions {
  std::string train_years = "2008-2010";
  std::string test_years = "2011-2013";
  std::string score = "common_neighbors";
  std::string rule;  // empty: per-family default
  std::string gate = "inf";
  std::optional<double> p;
  std::string organisations;
};

void add_corpus_options(CLI::App* cmd, RunConfig& cfg, RawOptions& raw) {
  cmd->add_option("--researchers", cfg.researchers, "researchers JSONL file")->required();
  cmd->add_option("--publications", cfg.publications, "publications JSONL file")->required();
  cmd->add_option("--organisations", raw.organisations, "school,faculty,name CSV used to validate schools");
}

void add_split_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--train-years", raw.train_years, "training interval, e.g. 2008-2010")->capture_default_str();
  cmd->add_option("--test-years", raw.test_years, "test interval, e.g. 2011-2013")->capture_default_str();
}

void add_method_options(CLI::App* cmd, RawOptions& raw, RunConfig& cfg) {
  cmd->add_option("--score", raw.score, "path2|common_neighbors|order2_overlap|path_weight_sum|jaccard1|jaccard2|"
                                        "adamic_adar|cooc1|cooc2 (or a-d)")
      ->capture_default_str();
  cmd->add_option("--rule", raw.rule, "percentile|median (default: percentile for a-d, median otherwise)");
  cmd->add_option("--p", raw.p, "percentile parameter in [0, 1] (default 1)");
  cmd->add_option("--d", raw.gate, "geodesic gate for bipartite scores: NA, inf or a positive integer")
      ->capture_default_str();
  cmd->add_flag("--candidates-only", cfg.percentile_candidates_only,
                "take the percentile over candidate pairs only");
}

void finish(RunConfig& cfg, const RawOptions& raw) {
  cfg.train_years = parse_year_interval(raw.train_years);
  cfg.test_years = parse_year_interval(raw.test_years);
  if (cfg.train_years.overlaps(cfg.test_years))
    throw ValidationError(fmt::format("train years {} overlap test years {}", raw.train_years, raw.test_years));
  if (!raw.organisations.empty()) cfg.organisations = raw.organisations;
  cfg.kind = parse_score_kind(raw.score);
  cfg.gate = DistanceGate::parse(raw.gate);
  if (raw.rule == "median") {
    if (raw.p) throw ValidationError("--p only applies to the percentile rule");
    cfg.rule = ThresholdRule::median_of_train();
  } else if (raw.rule == "percentile" || (raw.rule.empty() && raw.p)) {
    cfg.rule = ThresholdRule::percentile(raw.p.value_or(1.0));
  } else if (!raw.rule.empty()) {
    throw ValidationError(fmt::format("unknown rule '{}' (expected percentile or median)", raw.rule));
  }
}

std::string report_line(const EvalReport& r) {
  return fmt::format("predicted {}  correct {}  new {}  candidates {}  accuracy {:.4f}  recall {:.4f}  "
                     "random guess {:.4f}",
                     r.n_predicted, r.n_correct, r.m_new, r.n_candidates, r.accuracy, r.recall,
                     r.random_guess_accuracy);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"School-level collaboration link prediction"};
  app.require_subcommand(1);

  RunConfig cfg;
  RawOptions raw;

  auto* ingest = app.add_subcommand("ingest", "validate a corpus and print a summary");
  add_corpus_options(ingest, cfg, raw);
  std::string graphs_dir;
  ingest->add_option("--out", graphs_dir, "also write normalised JSONL and coordinate lists of A and I here");

  auto* split = app.add_subcommand("split", "write the training and test halves as JSONL");
  add_corpus_options(split, cfg, raw);
  add_split_options(split, raw);
  split->add_option("--out", cfg.out, "output directory")->capture_default_str();

  auto* predict = app.add_subcommand("predict", "score, aggregate, threshold and evaluate one method");
  add_corpus_options(predict, cfg, raw);
  add_split_options(predict, raw);
  add_method_options(predict, raw, cfg);
  predict->add_option("--out", cfg.out, "output directory")->capture_default_str();

  auto* baseline = app.add_subcommand("baseline", "modularity community-detection baseline");
  add_corpus_options(baseline, cfg, raw);
  add_split_options(baseline, raw);
  baseline->add_option("--communities", cfg.communities, "cut sizes N, e.g. 5,6,7,8")->delimiter(',')->capture_default_str();
  baseline->add_option("--out", cfg.out, "output directory")->capture_default_str();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "evaluate a prediction CSV against the test period");
  add_corpus_options(evaluate_cmd, cfg, raw);
  add_split_options(evaluate_cmd, raw);
  std::string prediction_path;
  evaluate_cmd->add_option("--prediction", prediction_path, "CSV with school_k,school_l columns")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "all scores and parameters in one table");
  add_corpus_options(sweep_cmd, cfg, raw);
  add_split_options(sweep_cmd, raw);
  sweep_cmd->add_option("--communities", cfg.communities, "cut sizes N, e.g. 5,6,7,8")->delimiter(',')->capture_default_str();
  sweep_cmd->add_flag("--candidates-only", cfg.percentile_candidates_only,
                      "take the percentile over candidate pairs only");
  sweep_cmd->add_option("--out", cfg.out, "output directory")->capture_default_str();

  auto* export_cmd = app.add_subcommand("export", "graph description of predicted and new edges");
  add_corpus_options(export_cmd, cfg, raw);
  add_split_options(export_cmd, raw);
  add_method_options(export_cmd, raw, cfg);
  std::string format = "dot";
  export_cmd->add_option("--format", format, "dot|graphml")->capture_default_str();
  export_cmd->add_option("--out", cfg.out, "output directory")->capture_default_str();

  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  SynthParams sp;
  synth->add_option("--seed", sp.seed, "random seed")->capture_default_str();
  synth->add_option("--schools", sp.schools, "number of schools")->capture_default_str();
  synth->add_option("--researchers", sp.researchers, "number of researchers")->capture_default_str();
  synth->add_option("--journals", sp.journals, "number of journals")->capture_default_str();
  synth->add_option("--planted", sp.planted_new_links, "school pairs first linked in the test period")
      ->capture_default_str();
  add_split_options(synth, raw);
  synth->add_option("--out", cfg.out, "output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      sp.train_years = parse_year_interval(raw.train_years);
      sp.test_years = parse_year_interval(raw.test_years);
      const auto s = generate_synthetic(sp);
      write_synthetic(s, cfg.out);
      fmt::print("wrote {} researchers, {} publications, {} planted links to {}\n", s.researchers.size(),
                 s.publications.size(), s.planted.size(), cfg.out.string());
      return 0;
    }

    finish(cfg, raw);

    if (ingest->parsed()) {
      LoadOptions options;
      std::optional<OrganisationTable> orgs;
      if (cfg.organisations) {
        orgs = OrganisationTable::load(*cfg.organisations);
        options.organisations = &*orgs;
      }
      const auto corpus = load_corpus(cfg.researchers, cfg.publications, options);
      const auto g = build_coauthor_graph(corpus);
      const auto inc = build_incidence_graph(corpus);
      fmt::print("researchers {}\nschools {}\njournals {}\npublications {}\ncoauthor edges {}\n",
                 corpus.researcher_count(), corpus.school_count(), corpus.journals().size(),
                 corpus.publications().size(), g.edge_count());
      if (!graphs_dir.empty()) {
        write_corpus(corpus, graphs_dir);
        write_coordinate_list(g, std::filesystem::path(graphs_dir) / "adjacency.txt");
        write_coordinate_list(inc, std::filesystem::path(graphs_dir) / "incidence.txt");
      }
      return 0;
    }

    if (predict->parsed()) {
      const auto r = cmd_predict(cfg);
      fmt::print("{}  threshold {}\n{}\n", to_string(cfg.kind), format_real(r.prediction.threshold),
                 report_line(r.report));
      return 0;
    }

    const auto run = load_run(cfg);
    const auto& exp = run.experiment;

    if (split->parsed()) {
      write_corpus(exp.train, cfg.out / "train");
      write_corpus(exp.test, cfg.out / "test");
      fmt::print("train {} publications, test {}, dropped {}\n", exp.train.publications().size(),
                 exp.test.publications().size(), exp.dropped);
      return 0;
    }

    if (baseline->parsed()) {
      const auto b = run_baseline(exp, cfg.communities);
      write_file(cfg.out / "dendrogram.txt", dendrogram_text(b.dendrogram, exp.train));
      std::vector<SweepRow> rows;
      for (std::size_t x = 0; x < b.cuts.size(); ++x) {
        write_file(cfg.out / fmt::format("partition_{}.csv", b.cuts[x]), partition_csv(b.partitions[x], exp.train));
        rows.push_back({"community", "community", std::to_string(b.cuts[x]), 0.0, b.reports[x]});
        fmt::print("N={}  {}\n", b.cuts[x], report_line(b.reports[x]));
      }
      write_file(cfg.out / "report.csv", sweep_csv(rows));
      fmt::print("optimal cut {} communities (Q = {:.4f})\n", b.dendrogram.optimal_communities(),
                 b.dendrogram.q_at(b.dendrogram.optimal_communities()));
      return 0;
    }

    if (evaluate_cmd->parsed()) {
      const auto pred = read_prediction_edges(prediction_path, exp.train);
      fmt::print("{}\n", report_line(evaluate(pred, exp.e_new, exp.candidates)));
      return 0;
    }

    if (sweep_cmd->parsed()) {
      SweepConfig sc;
      sc.communities = cfg.communities;
      sc.percentile.candidates_only = cfg.percentile_candidates_only;
      const auto rows = sweep(exp, sc);
      const auto table = sweep_table(rows);
      write_file(cfg.out / "sweep.csv", sweep_csv(rows));
      write_file(cfg.out / "sweep.txt", table);
      fmt::print("{}", table);
      return 0;
    }

    if (export_cmd->parsed()) {
      const auto fmt_kind = parse_graph_format(format);
      const auto spec = cfg.method();
      const auto r = run_method(exp, spec);
      const auto test_w = school_weights(spec.kind, exp.test, exp.test_graph, exp.test_incidence, spec.gate);
      const auto faculties = school_faculties(exp.train, run.organisations ? &*run.organisations : nullptr);
      const auto text = render_graph(fmt_kind, exp.train, faculties, r.prediction, exp.e_new, test_w);
      const auto path = cfg.out / (fmt_kind == GraphFormat::Dot ? "figure.dot" : "figure.graphml");
      write_file(path, text);
      fmt::print("wrote {}\n", path.string());
      return 0;
    }
  } catch (const ValidationError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  } catch (const IoError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return 3;
  }
  return 0;
}

#include "collab/pipeline.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

Experiment Experiment::build(const Corpus& corpus, YearInterval train_years, YearInterval test_years) {
  auto split = split_by_year(corpus, train_years, test_years);
  Experiment exp;
  exp.train = std::move(split.train);
  exp.test = std::move(split.test);
  exp.dropped = split.dropped;
  exp.train_graph = build_coauthor_graph(exp.train);
  exp.test_graph = build_coauthor_graph(exp.test);
  exp.train_incidence = build_incidence_graph(exp.train);
  exp.test_incidence = build_incidence_graph(exp.test);
  exp.e_train = school_edges(exp.train_graph, exp.train);
  exp.e_test = school_edges(exp.test_graph, exp.test);
  exp.e_new = new_edges(exp.e_train, exp.e_test);
  exp.candidates = candidate_pairs(exp.e_train, exp.train);
  return exp;
}

SchoolWeights school_weights(ScoreKind kind, const Corpus& corpus, const CoauthorGraph& g,
                             const IncidenceGraph& inc, DistanceGate gate) {
  if (is_coauthor_family(kind)) return aggregate_coauthor(coauthor_scores(kind, g), corpus);
  BipartiteScorer scorer(inc, kind);
  return aggregate_bipartite([&](ResearcherIndex i, ResearcherIndex k) { return scorer(i, k); }, g, corpus, gate);
}

MethodSpec MethodSpec::defaults_for(ScoreKind kind) {
  MethodSpec spec;
  spec.kind = kind;
  spec.rule = is_coauthor_family(kind) ? ThresholdRule::percentile(1.0) : ThresholdRule::median_of_train();
  return spec;
}

std::string MethodSpec::parameter_label() const {
  if (is_coauthor_family(kind)) return rule.label();
  return fmt::format("d={} {}", gate.label(), rule.label());
}

MethodResult run_method(const Experiment& exp, const MethodSpec& spec) {
  MethodResult r;
  r.weights = school_weights(spec.kind, exp.train, exp.train_graph, exp.train_incidence, spec.gate);
  r.prediction = predict(r.weights, exp.e_train, spec.rule, spec.percentile);
  r.report = evaluate(r.prediction.edges, exp.e_new, exp.candidates);
  return r;
}

BaselineResult run_baseline(const Experiment& exp, const std::vector<std::size_t>& communities) {
  BaselineResult r;
  r.graph = build_school_graph(exp.train_graph, exp.train);
  r.dendrogram = greedy_modularity(r.graph);
  for (std::size_t n : communities) {
    r.cuts.push_back(n);
    r.partitions.push_back(cut(r.dendrogram, n));
    r.predictions.push_back(predict_from_partition(r.partitions.back(), exp.e_train));
    r.reports.push_back(evaluate(r.predictions.back(), exp.e_new, exp.candidates));
  }
  return r;
}

std::vector<SweepRow> sweep(const Experiment& exp, const SweepConfig& config) {
  std::vector<SweepRow> rows;
  for (ScoreKind kind : config.coauthor_kinds) {
    if (!is_coauthor_family(kind)) throw ValidationError(fmt::format("'{}' is not a co-authorship score", to_string(kind)));
    const auto w = aggregate_coauthor(coauthor_scores(kind, exp.train_graph), exp.train);
    for (double p : config.p_values) {
      const auto pred = predict_percentile(w, exp.e_train, p, config.percentile);
      rows.push_back({"coauthor", std::string(to_string(kind)), format_real(p), pred.threshold,
                      evaluate(pred.edges, exp.e_new, exp.candidates)});
    }
  }
  for (ScoreKind kind : config.bipartite_kinds) {
    if (is_coauthor_family(kind)) throw ValidationError(fmt::format("'{}' is not a bipartite score", to_string(kind)));
    BipartiteScorer scorer(exp.train_incidence, kind);
    for (const auto& gate : config.gates) {
      const auto w = aggregate_bipartite([&](ResearcherIndex i, ResearcherIndex k) { return scorer(i, k); },
                                         exp.train_graph, exp.train, gate);
      const auto pred = predict_median(w, exp.e_train);
      rows.push_back({"bipartite", std::string(to_string(kind)), gate.label(), pred.threshold,
                      evaluate(pred.edges, exp.e_new, exp.candidates)});
    }
  }
  if (!config.communities.empty()) {
    const auto base = run_baseline(exp, config.communities);
    for (std::size_t x = 0; x < base.cuts.size(); ++x)
      rows.push_back({"community", "community", std::to_string(base.cuts[x]), 0.0, base.reports[x]});
  }
  return rows;
}

std::string report_csv_header() {
  return "section,method,parameter,threshold,n_predicted,n_correct,m_new,n_candidates,accuracy,recall,"
         "random_guess_accuracy\n";
}

std::string report_csv_row(const SweepRow& row) {
  const auto& r = row.report;
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", row.section, row.method, row.parameter,
                     format_real(row.threshold), r.n_predicted, r.n_correct, r.m_new, r.n_candidates,
                     format_real(r.accuracy), format_real(r.recall), format_real(r.random_guess_accuracy));
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = report_csv_header();
  for (const auto& r : rows) out += report_csv_row(r);
  return out;
}

std::string sweep_table(const std::vector<SweepRow>& rows) {
  std::string out;
  std::vector<std::string> sections;
  for (const auto& r : rows)
    if (std::find(sections.begin(), sections.end(), r.section) == sections.end()) sections.push_back(r.section);

  for (const auto& section : sections) {
    std::vector<std::string> methods, params;
    std::map<std::pair<std::string, std::string>, const EvalReport*> cell;
    for (const auto& r : rows) {
      if (r.section != section) continue;
      if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
      if (std::find(params.begin(), params.end(), r.parameter) == params.end()) params.push_back(r.parameter);
      cell[{r.method, r.parameter}] = &r.report;
    }
    const char* key = section == "coauthor" ? "p" : section == "bipartite" ? "d" : "N";
    out += fmt::format("[{}]\n{:<12}{:>6}", section, "", key);
    for (const auto& m : methods) out += fmt::format("{:>18}", m);
    out += '\n';
    for (const auto& p : params) {
      for (int line = 0; line < 3; ++line) {
        static const char* kLabels[] = {"# of edges", "accuracy", "recall"};
        out += fmt::format("{:<12}{:>6}", kLabels[line], line == 0 ? p : "");
        for (const auto& m : methods) {
          auto it = cell.find({m, p});
          if (it == cell.end()) {
            out += fmt::format("{:>18}", "-");
            continue;
          }
          const EvalReport& r = *it->second;
          if (line == 0)
            out += fmt::format("{:>18}", r.n_predicted);
          else
            out += fmt::format("{:>18.3f}", line == 1 ? r.accuracy : r.recall);
        }
        out += '\n';
      }
    }
    out += '\n';
  }
  if (!rows.empty()) {
    const auto& r = rows.front().report;
    out += fmt::format("random guess accuracy: {:.3f} ({} new of {} candidate pairs)\n", r.random_guess_accuracy,
                       r.m_new, r.n_candidates);
  }
  return out;
}

MethodSpec RunConfig::method() const {
  MethodSpec spec = MethodSpec::defaults_for(kind);
  if (rule) spec.rule = *rule;
  spec.gate = gate;
  spec.percentile.candidates_only = percentile_candidates_only;
  return spec;
}

LoadedRun load_run(const RunConfig& cfg) {
  LoadedRun run;
  LoadOptions options;
  if (cfg.organisations) {
    run.organisations = OrganisationTable::load(*cfg.organisations);
    options.organisations = &*run.organisations;
  }
  run.corpus = load_corpus(cfg.researchers, cfg.publications, options);
  run.experiment = Experiment::build(run.corpus, cfg.train_years, cfg.test_years);
  return run;
}

MethodResult cmd_predict(const RunConfig& cfg) {
  const auto run = load_run(cfg);
  const auto& exp = run.experiment;
  const auto spec = cfg.method();
  auto result = run_method(exp, spec);

  write_prediction(result.prediction, exp.train, cfg.out / "prediction.csv");
  write_school_weights(result.weights, exp.train, cfg.out / "weights.csv");
  SweepRow row{is_coauthor_family(spec.kind) ? "coauthor" : "bipartite", std::string(to_string(spec.kind)),
               spec.parameter_label(), result.prediction.threshold, result.report};
  write_file(cfg.out / "report.csv", report_csv_header() + report_csv_row(row));

  const auto& r = result.report;
  std::string log;
  log += fmt::format("researchers {}\nschools {}\npublications {} (train {}, test {}, dropped {})\n",
                     run.corpus.researcher_count(), run.corpus.school_count(), run.corpus.publications().size(),
                     exp.train.publications().size(), exp.test.publications().size(), exp.dropped);
  log += fmt::format("e_train {}\ne_test {}\ne_new {}\ncandidates {}\n", exp.e_train.size(), exp.e_test.size(),
                     exp.e_new.size(), exp.candidates.size());
  log += fmt::format("score {}\nparameter {}\nthreshold {}\n", to_string(spec.kind), spec.parameter_label(),
                     format_real(result.prediction.threshold));
  log += fmt::format("predicted {}\ncorrect {}\naccuracy {}\nrecall {}\nrandom_guess_accuracy {}\n", r.n_predicted,
                     r.n_correct, format_real(r.accuracy), format_real(r.recall),
                     format_real(r.random_guess_accuracy));
  write_file(cfg.out / "run.log", log);
  return result;
}

}  // namespace collab

#include "collab/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

ThresholdRule ThresholdRule::percentile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(fmt::format("percentile p = {} outside [0, 1]", p));
  return ThresholdRule(Kind::Percentile, p);
}

std::string ThresholdRule::label() const {
  if (kind_ == Kind::MedianOfTrain) return "median";
  return fmt::format("p={}", p_);
}

double nearest_rank(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("nearest_rank of an empty set");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  // The tolerance keeps q n = 3.0000000000000004 (from 0.6 * 5) at rank 3.
  auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

Prediction predict_percentile(const SchoolWeights& w, const SchoolEdgeSet& train, double p,
                              const PercentileOptions& options) {
  Prediction pred;
  pred.rule = ThresholdRule::percentile(p);

  std::vector<double> population;
  for (const auto& [pair, v] : w)
    if (v > 0.0 && (!options.candidates_only || !train.contains(pair))) population.push_back(v);
  if (population.empty()) return pred;

  const bool select_all = p >= 1.0;
  pred.threshold = select_all ? 0.0 : nearest_rank(std::move(population), 1.0 - p);
  for (const auto& [pair, v] : w) {
    if (train.contains(pair)) continue;
    const bool keep = select_all ? v > 0.0 : (v >= pred.threshold && v > 0.0);
    if (keep) {
      pred.edges.insert(pair);
      pred.weights[pair] = v;
    }
  }
  return pred;
}

Prediction predict_median(const SchoolWeights& w, const SchoolEdgeSet& train) {
  Prediction pred;
  pred.rule = ThresholdRule::median_of_train();
  std::vector<double> existing;
  existing.reserve(train.size());
  for (const auto& pair : train) {
    auto it = w.find(pair);
    existing.push_back(it == w.end() ? 0.0 : it->second);
  }
  pred.threshold = median(std::move(existing));
  for (const auto& [pair, v] : w) {
    if (train.contains(pair) || !(v > pred.threshold)) continue;
    pred.edges.insert(pair);
    pred.weights[pair] = v;
  }
  return pred;
}

Prediction predict(const SchoolWeights& w, const SchoolEdgeSet& train, const ThresholdRule& rule,
                   const PercentileOptions& options) {
  if (rule.kind() == ThresholdRule::Kind::MedianOfTrain) return predict_median(w, train);
  return predict_percentile(w, train, rule.p(), options);
}

std::string prediction_csv(const Prediction& pred, const Corpus& corpus) {
  std::vector<std::pair<SchoolPair, double>> rows(pred.weights.begin(), pred.weights.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out = "school_k,school_l,weight,rank\n";
  std::size_t rank = 0;
  for (const auto& [p, v] : rows)
    out += fmt::format("{},{},{},{}\n", corpus.schools().at(p.k), corpus.schools().at(p.l), format_real(v), ++rank);
  return out;
}

void write_prediction(const Prediction& pred, const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, prediction_csv(pred, corpus));
}

SchoolEdgeSet read_prediction_edges(const std::filesystem::path& path, const Corpus& corpus) {
  std::istringstream in(read_file(path));
  std::string line;
  SchoolEdgeSet out;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line.rfind("school_k", 0) == 0)) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    const std::string a = line.substr(0, c1);
    const std::string b = c1 == std::string::npos ? std::string{} : line.substr(c1 + 1, c2 - c1 - 1);
    const auto k = corpus.school_index(a);
    const auto l = corpus.school_index(b);
    if (!k || !l || *k == *l)
      throw ValidationError(fmt::format("{}:{}: invalid school pair '{}','{}'", path.string(), line_no, a, b));
    out.emplace(*k, *l);
  }
  return out;
}

}  // namespace collab

#pragma once

#include <filesystem>
#include <string>

#include "collab/school_network.hpp"

namespace collab {

class ThresholdRule {
 public:
  enum class Kind { Percentile, MedianOfTrain };

  static ThresholdRule percentile(double p);
  static ThresholdRule median_of_train() { return ThresholdRule(Kind::MedianOfTrain, 0.0); }

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  std::string label() const;

  bool operator==(const ThresholdRule&) const = default;

 private:
  ThresholdRule(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

struct Prediction {
  SchoolEdgeSet edges;    // never intersects the training edges
  SchoolWeights weights;  // w_kl of each predicted pair
  ThresholdRule rule = ThresholdRule::median_of_train();
  double threshold = 0.0;  // pi
};

struct PercentileOptions {
  // Literal reading takes the percentile over every positive weight,
  // training pairs included. Set to restrict the population to candidates.
  bool candidates_only = false;
};

/// Nearest-rank q-quantile (q in [0, 1]) of `values`: the ceil(q n)-th
/// smallest, rank clamped to [1, n]. `values` must be nonempty.
double nearest_rank(std::vector<double> values, double q);

/// Median with the midpoint convention for even counts; 0 for an empty set.
double median(std::vector<double> values);

/// pi = 100(1-p)th nearest-rank percentile of positive weights; selects
/// non-train pairs with w >= pi (w > 0 when p = 1).
Prediction predict_percentile(const SchoolWeights& w, const SchoolEdgeSet& train, double p,
                              const PercentileOptions& options = {});

/// pi = median of w over the training edges (absent weights count as 0);
/// selects non-train pairs with w > pi.
Prediction predict_median(const SchoolWeights& w, const SchoolEdgeSet& train);

Prediction predict(const SchoolWeights& w, const SchoolEdgeSet& train, const ThresholdRule& rule,
                   const PercentileOptions& options = {});

/// CSV with header school_k,school_l,weight,rank; rank 1 is the heaviest,
/// ties broken by pair order.
std::string prediction_csv(const Prediction& pred, const Corpus& corpus);
void write_prediction(const Prediction& pred, const Corpus& corpus, const std::filesystem::path& path);

/// Reads back the school pairs of a prediction CSV.
SchoolEdgeSet read_prediction_edges(const std::filesystem::path& path, const Corpus& corpus);

}  // namespace collab

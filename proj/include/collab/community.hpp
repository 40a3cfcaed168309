#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "collab/school_network.hpp"

namespace collab {

/// Weighted school network for the community-detection baseline. Weight
/// (k, l) counts joint publications between researchers of the two schools;
/// the diagonal holds intra-school collaboration.
class SchoolGraph {
 public:
  explicit SchoolGraph(std::size_t n = 0) : n_(n), w_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double weight(SchoolIndex k, SchoolIndex l) const { return w_[k * n_ + l]; }
  double self_weight(SchoolIndex k) const { return weight(k, k); }

  /// Adds to (k, l) and (l, k); k == l adds to the self-weight once.
  void add(SchoolIndex k, SchoolIndex l, double w);

  /// m: every edge counted once, self-loops included.
  double total_weight() const;
  /// Weighted degree with self-loops counted twice.
  double strength(SchoolIndex k) const;

 private:
  std::size_t n_;
  std::vector<double> w_;
};

SchoolGraph build_school_graph(const CoauthorGraph& g, const Corpus& corpus);

/// community[k] for every school k.
using Partition = std::vector<std::size_t>;

/// Newman modularity of `part` with self-loops included in the degree sums.
double modularity(const SchoolGraph& sg, const Partition& part);

struct Merge {
  std::size_t a;  // surviving community id (the smaller)
  std::size_t b;  // absorbed community id
  double delta_q;
  double q_after;
};

/// Agglomerative merge history. Community ids are leaf indices; a merge of
/// a and b keeps the smaller id.
struct Dendrogram {
  std::size_t leaves = 0;
  double initial_q = 0.0;
  std::vector<Merge> merges;  // leaves - 1 entries

  /// Number of communities at the modularity peak (fewest on ties).
  std::size_t optimal_communities() const;
  double q_at(std::size_t communities) const;
};

/// Greedy modularity maximisation: repeatedly merge the two communities with
/// the largest modularity gain, ties to the lexicographically smallest id
/// pair, continuing to a single community. Throws ValidationError on an
/// edgeless graph.
Dendrogram greedy_modularity(const SchoolGraph& sg);

/// Replays merges until `n` communities remain. Community ids are
/// contiguous, numbered by their smallest school index.
Partition cut(const Dendrogram& d, std::size_t n);

SchoolEdgeSet predict_from_partition(const Partition& part, const SchoolEdgeSet& train);

/// One line per merge: "step a b delta_q q_after".
std::string dendrogram_text(const Dendrogram& d, const Corpus& corpus);
/// CSV with header school,community.
std::string partition_csv(const Partition& part, const Corpus& corpus);

}  // namespace collab

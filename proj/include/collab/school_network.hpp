#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "collab/ingest.hpp"
#include "collab/network.hpp"
#include "collab/similarity.hpp"

namespace collab {

/// Unordered pair of distinct schools, stored with k < l.
struct SchoolPair {
  SchoolIndex k = 0;
  SchoolIndex l = 0;

  SchoolPair() = default;
  SchoolPair(SchoolIndex a, SchoolIndex b);

  auto operator<=>(const SchoolPair&) const = default;
};

using SchoolEdgeSet = std::set<SchoolPair>;
/// Absent pairs have weight 0.
using SchoolWeights = std::map<SchoolPair, double>;

/// Distinct unordered school pairs {k, l}, k != l, with k in schools(i) and
/// l in schools(j). Each pair appears once.
std::vector<SchoolPair> cross_school_pairs(const Corpus& corpus, ResearcherIndex i, ResearcherIndex j);

SchoolEdgeSet school_edges(const CoauthorGraph& g, const Corpus& corpus);

/// Pairs collaborating in the test period but not in the training period.
SchoolEdgeSet new_edges(const SchoolEdgeSet& train, const SchoolEdgeSet& test);

/// Every distinct pair of the corpus's schools not in `train`.
SchoolEdgeSet candidate_pairs(const SchoolEdgeSet& train, const Corpus& corpus);
SchoolEdgeSet candidate_pairs(const SchoolEdgeSet& train, std::size_t school_count);

SchoolWeights aggregate_coauthor(const std::vector<PairScore>& scores, const Corpus& corpus);

/// Geodesic gate applied to each researcher pair during bipartite aggregation.
class DistanceGate {
 public:
  enum class Mode { Off, Reachable, Below };

  static DistanceGate off() { return DistanceGate(Mode::Off, 0); }              // "NA"
  static DistanceGate reachable() { return DistanceGate(Mode::Reachable, 0); }  // d = infinity
  static DistanceGate below(std::uint32_t d);                                    // g < d

  /// "NA", "inf" / "infinity", or a positive integer.
  static DistanceGate parse(const std::string& text);

  Mode mode() const { return mode_; }
  std::uint32_t bound() const { return bound_; }
  bool passes(const GeodesicDistance& g) const;
  std::string label() const;

  auto operator<=>(const DistanceGate&) const = default;

 private:
  DistanceGate(Mode m, std::uint32_t b) : mode_(m), bound_(b) {}
  Mode mode_;
  std::uint32_t bound_;
};

using PairScoreFn = std::function<double(ResearcherIndex, ResearcherIndex)>;

/// Sums sigma(i, i') over unordered researcher pairs that pass `gate`, into
/// every cross-school pair of their affiliations.
SchoolWeights aggregate_bipartite(const PairScoreFn& sigma, const CoauthorGraph& g, const Corpus& corpus,
                                  DistanceGate gate);

/// CSV with header school_k,school_l,weight; pairs in index order.
std::string school_weights_csv(const SchoolWeights& w, const Corpus& corpus);
void write_school_weights(const SchoolWeights& w, const Corpus& corpus, const std::filesystem::path& path);

std::string pair_label(const SchoolPair& p, const Corpus& corpus);

/// Shortest round-trippable decimal form used in every text output.
std::string format_real(double v);

}  // namespace collab

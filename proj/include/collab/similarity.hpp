#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collab/network.hpp"

namespace collab {

enum class ScoreKind {
  Path2,            // (a) indicator of a length-2 geodesic
  CommonNeighbors,  // (b) |N(i) & N(j)|
  Order2Overlap,    // (c) |O2(i) & O2(j)|
  PathWeightSum,    // (d) sum over length-2 paths of A_ik + A_kj
  Jaccard1,
  Jaccard2,
  AdamicAdar,
  Cooc1,
  Cooc2,
};

inline constexpr std::array<ScoreKind, 4> kCoauthorScores = {ScoreKind::Path2, ScoreKind::CommonNeighbors,
                                                             ScoreKind::Order2Overlap, ScoreKind::PathWeightSum};
inline constexpr std::array<ScoreKind, 5> kBipartiteScores = {ScoreKind::Jaccard1, ScoreKind::Jaccard2,
                                                              ScoreKind::AdamicAdar, ScoreKind::Cooc1,
                                                              ScoreKind::Cooc2};

bool is_coauthor_family(ScoreKind kind);
std::string_view to_string(ScoreKind kind);
/// Accepts the names printed by to_string ("common_neighbors", "cooc1", ...)
/// and the one-letter labels a-d. Throws ValidationError otherwise.
ScoreKind parse_score_kind(std::string_view name);

struct PairScore {
  ResearcherIndex i;  // i < j
  ResearcherIndex j;
  double value;
};

// Co-authorship neighbourhood scores. All four are zero unless the pair is
// at geodesic distance exactly 2.
double score_path2(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j);
double score_common_neighbors(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j);
double score_order2_overlap(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j);
double score_path_weight_sum(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j);

/// O2(x) = N(x) plus the neighbours of every neighbour, sorted. Contains x
/// itself whenever x has a neighbour.
std::vector<ResearcherIndex> order2_neighborhood(const CoauthorGraph& g, ResearcherIndex x);

// Researcher-journal bipartite scores. Zero when either researcher has no
// journal publication.
double jaccard1(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k);
double jaccard2(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k);
/// Natural log; shared journals with T_j <= 1 contribute nothing.
double adamic_adar(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k);
/// Jaccard with the roles swapped: journals compared by their researcher sets.
double journal_jaccard(const IncidenceGraph& inc, JournalIndex j, JournalIndex k, int variant);
/// Co-occurrence smoothing over J(i) x J(k) with journal-level Jaccard `variant`.
double cooc(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k, int variant);

/// Dispatch by kind. Either graph may be null when the kind does not need it;
/// a missing required graph throws std::invalid_argument.
PairScore score_pair(ScoreKind kind, const CoauthorGraph* g, const IncidenceGraph* inc, ResearcherIndex i,
                     ResearcherIndex j);

/// Every positive coauthor-family score, one entry per distance-2 pair.
std::vector<PairScore> coauthor_scores(ScoreKind kind, const CoauthorGraph& g);

/// Bipartite scorer for bulk evaluation: journal-journal similarities are
/// computed once, so cooc costs O(|J(i)| |J(k)| log) per pair. Gives the same
/// values as the free functions above.
class BipartiteScorer {
 public:
  BipartiteScorer(const IncidenceGraph& inc, ScoreKind kind);

  ScoreKind kind() const { return kind_; }
  double operator()(ResearcherIndex i, ResearcherIndex k) const;

 private:
  struct JournalSim {
    JournalIndex other;
    double value;
  };
  double journal_similarity(JournalIndex a, JournalIndex b) const;
  double cooc_cached(ResearcherIndex i, ResearcherIndex k) const;

  const IncidenceGraph* inc_;
  ScoreKind kind_;
  std::vector<std::vector<JournalSim>> journal_sims_;  // sorted by `other`, excludes self
  std::vector<double> self_sims_;
};

}  // namespace collab

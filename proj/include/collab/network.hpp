#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "collab/ingest.hpp"

namespace collab {

/// One nonzero entry of a sparse row: (column, count).
struct Entry {
  std::size_t col;
  std::uint32_t count;

  bool operator==(const Entry&) const = default;
};

using ResearcherPair = std::pair<ResearcherIndex, ResearcherIndex>;  // first < second

/// Symmetric researcher x researcher joint-publication counts with zero
/// diagonal. Rows are sorted by column.
class CoauthorGraph {
 public:
  explicit CoauthorGraph(std::size_t n = 0) : rows_(n) {}

  std::size_t size() const { return rows_.size(); }
  std::span<const Entry> row(ResearcherIndex i) const;

  /// A[i][j]; 0 when absent.
  std::uint32_t count(ResearcherIndex i, ResearcherIndex j) const;
  bool adjacent(ResearcherIndex i, ResearcherIndex j) const { return count(i, j) > 0; }
  std::size_t degree(ResearcherIndex i) const { return row(i).size(); }

  std::size_t edge_count() const;

  /// Adds `w` to A[i][j] and A[j][i]; i != j.
  void add(ResearcherIndex i, ResearcherIndex j, std::uint32_t w = 1);

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// Researcher x journal publication counts, stored by row and by column.
class IncidenceGraph {
 public:
  IncidenceGraph() = default;
  IncidenceGraph(std::size_t researchers, std::size_t journals)
      : by_researcher_(researchers), by_journal_(journals), researcher_totals_(researchers), journal_totals_(journals) {}

  std::size_t researcher_count() const { return by_researcher_.size(); }
  std::size_t journal_count() const { return by_journal_.size(); }

  /// J(i): (journal, I_ij) sorted by journal.
  std::span<const Entry> journals_of(ResearcherIndex i) const { return by_researcher_.at(i); }
  /// I(j): (researcher, I_ij) sorted by researcher.
  std::span<const Entry> researchers_of(JournalIndex j) const { return by_journal_.at(j); }

  std::uint32_t count(ResearcherIndex i, JournalIndex j) const;
  /// sum_l I_il
  std::uint64_t researcher_total(ResearcherIndex i) const { return researcher_totals_.at(i); }
  /// T_j = sum_l I_lj
  std::uint64_t journal_total(JournalIndex j) const { return journal_totals_.at(j); }

  void add(ResearcherIndex i, JournalIndex j, std::uint32_t w = 1);

 private:
  std::vector<std::vector<Entry>> by_researcher_;
  std::vector<std::vector<Entry>> by_journal_;
  std::vector<std::uint64_t> researcher_totals_;
  std::vector<std::uint64_t> journal_totals_;
};

/// Unweighted hop count, or unreachable.
class GeodesicDistance {
 public:
  static GeodesicDistance unreachable() { return GeodesicDistance(); }
  static GeodesicDistance hops(std::uint32_t h) { return GeodesicDistance(h); }

  bool reachable() const { return hops_.has_value(); }
  std::uint32_t value() const { return hops_.value(); }

  /// True iff reachable and strictly below `bound`.
  bool below(std::uint32_t bound) const { return hops_ && *hops_ < bound; }

  bool operator==(const GeodesicDistance&) const = default;

 private:
  GeodesicDistance() = default;
  explicit GeodesicDistance(std::uint32_t h) : hops_(h) {}
  std::optional<std::uint32_t> hops_;
};

CoauthorGraph build_coauthor_graph(const Corpus& corpus);
IncidenceGraph build_incidence_graph(const Corpus& corpus);

std::vector<ResearcherIndex> neighbors(const CoauthorGraph& g, ResearcherIndex i);

GeodesicDistance geodesic(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j);

/// Breadth-first hop counts from `source` to every node; -1 where unreachable.
std::vector<std::int32_t> bfs_distances(const CoauthorGraph& g, ResearcherIndex source);

/// Memoizes one BFS row per queried source. Not safe for concurrent use;
/// give each thread its own table.
class DistanceTable {
 public:
  explicit DistanceTable(const CoauthorGraph& g) : graph_(&g), rows_(g.size()) {}

  GeodesicDistance operator()(ResearcherIndex i, ResearcherIndex j);

 private:
  const CoauthorGraph* graph_;
  std::vector<std::vector<std::int32_t>> rows_;
};

/// Unordered pairs at geodesic distance exactly 2, sorted.
std::vector<ResearcherPair> all_distance2_pairs(const CoauthorGraph& g);

/// Debug export: "row col count" lines for the upper triangle of A.
void write_coordinate_list(const CoauthorGraph& g, const std::filesystem::path& path);
/// Debug export: "researcher journal count" lines of I.
void write_coordinate_list(const IncidenceGraph& inc, const std::filesystem::path& path);

}  // namespace collab

#include "collab/network.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <fmt/format.h>

namespace collab {

namespace {

void add_sorted(std::vector<Entry>& row, std::size_t col, std::uint32_t w) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == col)
    it->count += w;
  else
    row.insert(it, Entry{col, w});
}

std::uint32_t find_sorted(std::span<const Entry> row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? it->count : 0;
}

void check_index(const CoauthorGraph& g, ResearcherIndex i) {
  if (i >= g.size()) throw std::out_of_range(fmt::format("researcher index {} out of range [0, {})", i, g.size()));
}

}  // namespace

std::span<const Entry> CoauthorGraph::row(ResearcherIndex i) const {
  check_index(*this, i);
  return rows_[i];
}

std::uint32_t CoauthorGraph::count(ResearcherIndex i, ResearcherIndex j) const {
  check_index(*this, j);
  return find_sorted(row(i), j);
}

std::size_t CoauthorGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n / 2;
}

void CoauthorGraph::add(ResearcherIndex i, ResearcherIndex j, std::uint32_t w) {
  check_index(*this, i);
  check_index(*this, j);
  if (i == j) throw std::invalid_argument("coauthor graph has no self-loops");
  add_sorted(rows_[i], j, w);
  add_sorted(rows_[j], i, w);
}

std::uint32_t IncidenceGraph::count(ResearcherIndex i, JournalIndex j) const {
  return find_sorted(journals_of(i), j);
}

void IncidenceGraph::add(ResearcherIndex i, JournalIndex j, std::uint32_t w) {
  add_sorted(by_researcher_.at(i), j, w);
  add_sorted(by_journal_.at(j), i, w);
  researcher_totals_[i] += w;
  journal_totals_[j] += w;
}

CoauthorGraph build_coauthor_graph(const Corpus& corpus) {
  CoauthorGraph g(corpus.researcher_count());
  for (std::size_t p = 0; p < corpus.publications().size(); ++p) {
    const auto& authors = corpus.authors_of(p);
    for (std::size_t a = 0; a < authors.size(); ++a)
      for (std::size_t b = a + 1; b < authors.size(); ++b) g.add(authors[a], authors[b]);
  }
  return g;
}

IncidenceGraph build_incidence_graph(const Corpus& corpus) {
  IncidenceGraph inc(corpus.researcher_count(), corpus.journals().size());
  for (std::size_t p = 0; p < corpus.publications().size(); ++p) {
    const auto& journal = corpus.publications()[p].journal;
    if (journal.empty()) continue;
    const JournalIndex j = *corpus.journal_index(journal);
    for (ResearcherIndex i : corpus.authors_of(p)) inc.add(i, j);
  }
  return inc;
}

std::vector<ResearcherIndex> neighbors(const CoauthorGraph& g, ResearcherIndex i) {
  std::vector<ResearcherIndex> out;
  for (const auto& e : g.row(i)) out.push_back(e.col);
  return out;
}

std::vector<std::int32_t> bfs_distances(const CoauthorGraph& g, ResearcherIndex source) {
  check_index(g, source);
  std::vector<std::int32_t> dist(g.size(), -1);
  std::deque<ResearcherIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const ResearcherIndex u = queue.front();
    queue.pop_front();
    for (const auto& e : g.row(u)) {
      if (dist[e.col] < 0) {
        dist[e.col] = dist[u] + 1;
        queue.push_back(e.col);
      }
    }
  }
  return dist;
}

GeodesicDistance geodesic(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j) {
  check_index(g, i);
  check_index(g, j);
  if (i == j) return GeodesicDistance::hops(0);
  std::vector<std::int32_t> dist(g.size(), -1);
  std::deque<ResearcherIndex> queue{i};
  dist[i] = 0;
  while (!queue.empty()) {
    const ResearcherIndex u = queue.front();
    queue.pop_front();
    for (const auto& e : g.row(u)) {
      if (dist[e.col] >= 0) continue;
      dist[e.col] = dist[u] + 1;
      if (e.col == j) return GeodesicDistance::hops(static_cast<std::uint32_t>(dist[e.col]));
      queue.push_back(e.col);
    }
  }
  return GeodesicDistance::unreachable();
}

GeodesicDistance DistanceTable::operator()(ResearcherIndex i, ResearcherIndex j) {
  check_index(*graph_, i);
  check_index(*graph_, j);
  // Rows are symmetric, so reuse whichever endpoint is already cached.
  if (rows_[i].empty() && !rows_[j].empty()) std::swap(i, j);
  if (rows_[i].empty()) rows_[i] = bfs_distances(*graph_, i);
  const auto d = rows_[i][j];
  return d < 0 ? GeodesicDistance::unreachable() : GeodesicDistance::hops(static_cast<std::uint32_t>(d));
}

std::vector<ResearcherPair> all_distance2_pairs(const CoauthorGraph& g) {
  std::vector<ResearcherPair> out;
  std::vector<char> mark(g.size(), 0);
  std::vector<ResearcherIndex> touched;
  for (ResearcherIndex i = 0; i < g.size(); ++i) {
    touched.clear();
    for (const auto& via : g.row(i)) {
      for (const auto& e : g.row(via.col)) {
        const ResearcherIndex k = e.col;
        if (k <= i || mark[k]) continue;
        mark[k] = 1;
        touched.push_back(k);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (ResearcherIndex k : touched) {
      if (!g.adjacent(i, k)) out.emplace_back(i, k);  // adjacent pairs are at distance 1
      mark[k] = 0;
    }
  }
  return out;
}

void write_coordinate_list(const CoauthorGraph& g, const std::filesystem::path& path) {
  std::string out;
  for (ResearcherIndex i = 0; i < g.size(); ++i)
    for (const auto& e : g.row(i))
      if (i < e.col) out += fmt::format("{} {} {}\n", i, e.col, e.count);
  write_file(path, out);
}

void write_coordinate_list(const IncidenceGraph& inc, const std::filesystem::path& path) {
  std::string out;
  for (ResearcherIndex i = 0; i < inc.researcher_count(); ++i)
    for (const auto& e : inc.journals_of(i)) out += fmt::format("{} {} {}\n", i, e.col, e.count);
  write_file(path, out);
}

}  // namespace collab

#include "collab/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

namespace {

// Walks two column-sorted rows in lockstep, calling `both(a, b)` on shared
// columns, `left(a)` / `right(b)` on the rest.
template <class Both, class Left, class Right>
void merge_rows(std::span<const Entry> x, std::span<const Entry> y, Both&& both, Left&& left, Right&& right) {
  std::size_t p = 0, q = 0;
  while (p < x.size() && q < y.size()) {
    if (x[p].col == y[q].col) {
      both(x[p], y[q]);
      ++p;
      ++q;
    } else if (x[p].col < y[q].col) {
      left(x[p++]);
    } else {
      right(y[q++]);
    }
  }
  for (; p < x.size(); ++p) left(x[p]);
  for (; q < y.size(); ++q) right(y[q]);
}

auto ignore = [](const Entry&) {};

std::size_t common_count(std::span<const Entry> x, std::span<const Entry> y) {
  std::size_t n = 0;
  merge_rows(x, y, [&](const Entry&, const Entry&) { ++n; }, ignore, ignore);
  return n;
}

bool at_distance2(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j) {
  return i != j && !g.adjacent(i, j) && common_count(g.row(i), g.row(j)) > 0;
}

double set_jaccard(std::span<const Entry> x, std::span<const Entry> y) {
  std::size_t shared = 0, only = 0;
  merge_rows(
      x, y, [&](const Entry&, const Entry&) { ++shared; }, [&](const Entry&) { ++only; },
      [&](const Entry&) { ++only; });
  const std::size_t uni = shared + only;
  return uni == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(uni);
}

// Weighted Jaccard: the union sum equals the two row totals added together.
double weighted_jaccard(std::span<const Entry> x, std::span<const Entry> y, std::uint64_t total_x,
                        std::uint64_t total_y) {
  std::uint64_t shared = 0;
  merge_rows(
      x, y, [&](const Entry& a, const Entry& b) { shared += a.count + b.count; }, ignore, ignore);
  const std::uint64_t uni = total_x + total_y;
  return uni == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(uni);
}

void check_variant(int variant) {
  if (variant != 1 && variant != 2) throw std::invalid_argument(fmt::format("Jaccard variant {} (expected 1 or 2)", variant));
}

}  // namespace

bool is_coauthor_family(ScoreKind kind) {
  return std::find(kCoauthorScores.begin(), kCoauthorScores.end(), kind) != kCoauthorScores.end();
}

std::string_view to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::Path2: return "path2";
    case ScoreKind::CommonNeighbors: return "common_neighbors";
    case ScoreKind::Order2Overlap: return "order2_overlap";
    case ScoreKind::PathWeightSum: return "path_weight_sum";
    case ScoreKind::Jaccard1: return "jaccard1";
    case ScoreKind::Jaccard2: return "jaccard2";
    case ScoreKind::AdamicAdar: return "adamic_adar";
    case ScoreKind::Cooc1: return "cooc1";
    case ScoreKind::Cooc2: return "cooc2";
  }
  throw ValidationError("unknown score kind");
}

ScoreKind parse_score_kind(std::string_view name) {
  static constexpr std::pair<std::string_view, ScoreKind> kAliases[] = {
      {"a", ScoreKind::Path2},           {"b", ScoreKind::CommonNeighbors}, {"c", ScoreKind::Order2Overlap},
      {"d", ScoreKind::PathWeightSum},   {"aa", ScoreKind::AdamicAdar},
  };
  for (const auto& [alias, kind] : kAliases)
    if (alias == name) return kind;
  for (ScoreKind k : kCoauthorScores)
    if (to_string(k) == name) return k;
  for (ScoreKind k : kBipartiteScores)
    if (to_string(k) == name) return k;
  throw ValidationError(fmt::format("unknown score '{}'", name));
}

// ---------------------------------------------------------------------------
// Co-authorship scores

double score_path2(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j) {
  return at_distance2(g, i, j) ? 1.0 : 0.0;
}

double score_common_neighbors(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j) {
  if (i == j || g.adjacent(i, j)) return 0.0;
  return static_cast<double>(common_count(g.row(i), g.row(j)));
}

std::vector<ResearcherIndex> order2_neighborhood(const CoauthorGraph& g, ResearcherIndex x) {
  std::vector<ResearcherIndex> out;
  for (const auto& l : g.row(x)) {
    out.push_back(l.col);
    for (const auto& k : g.row(l.col)) out.push_back(k.col);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double score_order2_overlap(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j) {
  if (!at_distance2(g, i, j)) return 0.0;
  const auto a = order2_neighborhood(g, i);
  const auto b = order2_neighborhood(g, j);
  std::size_t n = 0;
  for (std::size_t p = 0, q = 0; p < a.size() && q < b.size();) {
    if (a[p] == b[q]) {
      ++n;
      ++p;
      ++q;
    } else if (a[p] < b[q]) {
      ++p;
    } else {
      ++q;
    }
  }
  return static_cast<double>(n);
}

double score_path_weight_sum(const CoauthorGraph& g, ResearcherIndex i, ResearcherIndex j) {
  if (i == j || g.adjacent(i, j)) return 0.0;
  std::uint64_t sum = 0;
  merge_rows(
      g.row(i), g.row(j), [&](const Entry& ik, const Entry& kj) { sum += ik.count + kj.count; }, ignore, ignore);
  return static_cast<double>(sum);
}

// ---------------------------------------------------------------------------
// Bipartite scores

double jaccard1(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k) {
  return set_jaccard(inc.journals_of(i), inc.journals_of(k));
}

double jaccard2(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k) {
  return weighted_jaccard(inc.journals_of(i), inc.journals_of(k), inc.researcher_total(i), inc.researcher_total(k));
}

double adamic_adar(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k) {
  double sum = 0.0;
  merge_rows(
      inc.journals_of(i), inc.journals_of(k),
      [&](const Entry& a, const Entry&) {
        const auto total = inc.journal_total(a.col);
        if (total > 1) sum += 1.0 / std::log(static_cast<double>(total));
      },
      ignore, ignore);
  return sum;
}

double journal_jaccard(const IncidenceGraph& inc, JournalIndex j, JournalIndex k, int variant) {
  check_variant(variant);
  if (variant == 1) return set_jaccard(inc.researchers_of(j), inc.researchers_of(k));
  return weighted_jaccard(inc.researchers_of(j), inc.researchers_of(k), inc.journal_total(j), inc.journal_total(k));
}

double cooc(const IncidenceGraph& inc, ResearcherIndex i, ResearcherIndex k, int variant) {
  check_variant(variant);
  const auto total_i = inc.researcher_total(i);
  const auto total_k = inc.researcher_total(k);
  if (total_i == 0 || total_k == 0) return 0.0;
  double sum = 0.0;
  for (const auto& a : inc.journals_of(i)) {
    const double share_a = static_cast<double>(a.count) / static_cast<double>(total_i);
    for (const auto& b : inc.journals_of(k)) {
      const double share_b = static_cast<double>(b.count) / static_cast<double>(total_k);
      sum += share_a * share_b * journal_jaccard(inc, a.col, b.col, variant);
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Dispatch

PairScore score_pair(ScoreKind kind, const CoauthorGraph* g, const IncidenceGraph* inc, ResearcherIndex i,
                     ResearcherIndex j) {
  if (i == j) throw std::invalid_argument("score_pair requires two distinct researchers");
  const bool coauthor = is_coauthor_family(kind);
  if (coauthor && !g) throw std::invalid_argument(fmt::format("score '{}' needs a coauthor graph", to_string(kind)));
  if (!coauthor && !inc)
    throw std::invalid_argument(fmt::format("score '{}' needs an incidence graph", to_string(kind)));
  double v = 0.0;
  switch (kind) {
    case ScoreKind::Path2: v = score_path2(*g, i, j); break;
    case ScoreKind::CommonNeighbors: v = score_common_neighbors(*g, i, j); break;
    case ScoreKind::Order2Overlap: v = score_order2_overlap(*g, i, j); break;
    case ScoreKind::PathWeightSum: v = score_path_weight_sum(*g, i, j); break;
    case ScoreKind::Jaccard1: v = jaccard1(*inc, i, j); break;
    case ScoreKind::Jaccard2: v = jaccard2(*inc, i, j); break;
    case ScoreKind::AdamicAdar: v = adamic_adar(*inc, i, j); break;
    case ScoreKind::Cooc1: v = cooc(*inc, i, j, 1); break;
    case ScoreKind::Cooc2: v = cooc(*inc, i, j, 2); break;
    default: throw ValidationError("unknown score kind");
  }
  return PairScore{std::min(i, j), std::max(i, j), v};
}

std::vector<PairScore> coauthor_scores(ScoreKind kind, const CoauthorGraph& g) {
  if (!is_coauthor_family(kind))
    throw std::invalid_argument(fmt::format("'{}' is not a co-authorship score", to_string(kind)));
  std::vector<PairScore> out;
  for (const auto& [i, j] : all_distance2_pairs(g)) out.push_back(score_pair(kind, &g, nullptr, i, j));
  return out;
}

// ---------------------------------------------------------------------------
// BipartiteScorer

BipartiteScorer::BipartiteScorer(const IncidenceGraph& inc, ScoreKind kind) : inc_(&inc), kind_(kind) {
  if (is_coauthor_family(kind))
    throw std::invalid_argument(fmt::format("'{}' is not a bipartite score", to_string(kind)));
  if (kind != ScoreKind::Cooc1 && kind != ScoreKind::Cooc2) return;
  const int variant = kind == ScoreKind::Cooc1 ? 1 : 2;

  // Only journals sharing a researcher have nonzero similarity.
  std::vector<std::vector<JournalIndex>> partners(inc.journal_count());
  for (ResearcherIndex r = 0; r < inc.researcher_count(); ++r) {
    const auto js = inc.journals_of(r);
    for (std::size_t a = 0; a < js.size(); ++a)
      for (std::size_t b = a + 1; b < js.size(); ++b) {
        partners[js[a].col].push_back(js[b].col);
        partners[js[b].col].push_back(js[a].col);
      }
  }
  journal_sims_.resize(inc.journal_count());
  for (JournalIndex j = 0; j < inc.journal_count(); ++j) {
    auto& p = partners[j];
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    for (JournalIndex other : p) journal_sims_[j].push_back({other, journal_jaccard(inc, j, other, variant)});
  }
  // Self-similarity is 1 for every journal with at least one researcher.
  self_sims_.resize(inc.journal_count());
  for (JournalIndex j = 0; j < inc.journal_count(); ++j) self_sims_[j] = journal_jaccard(inc, j, j, variant);
}

double BipartiteScorer::journal_similarity(JournalIndex a, JournalIndex b) const {
  if (a == b) return self_sims_[a];
  const auto& sims = journal_sims_[a];
  auto it = std::lower_bound(sims.begin(), sims.end(), b,
                             [](const JournalSim& s, JournalIndex x) { return s.other < x; });
  return (it != sims.end() && it->other == b) ? it->value : 0.0;
}

double BipartiteScorer::cooc_cached(ResearcherIndex i, ResearcherIndex k) const {
  const auto total_i = inc_->researcher_total(i);
  const auto total_k = inc_->researcher_total(k);
  if (total_i == 0 || total_k == 0) return 0.0;
  double sum = 0.0;
  for (const auto& a : inc_->journals_of(i)) {
    const double share_a = static_cast<double>(a.count) / static_cast<double>(total_i);
    for (const auto& b : inc_->journals_of(k)) {
      const double share_b = static_cast<double>(b.count) / static_cast<double>(total_k);
      sum += share_a * share_b * journal_similarity(a.col, b.col);
    }
  }
  return sum;
}

double BipartiteScorer::operator()(ResearcherIndex i, ResearcherIndex k) const {
  switch (kind_) {
    case ScoreKind::Jaccard1: return jaccard1(*inc_, i, k);
    case ScoreKind::Jaccard2: return jaccard2(*inc_, i, k);
    case ScoreKind::AdamicAdar: return adamic_adar(*inc_, i, k);
    case ScoreKind::Cooc1:
    case ScoreKind::Cooc2: return cooc_cached(i, k);
    default: throw ValidationError("unknown score kind");
  }
}

}  // namespace collab

#include "collab/school_network.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

SchoolPair::SchoolPair(SchoolIndex a, SchoolIndex b) : k(std::min(a, b)), l(std::max(a, b)) {
  if (a == b) throw std::invalid_argument(fmt::format("school pair ({}, {}) is a self-pair", a, b));
}

std::vector<SchoolPair> cross_school_pairs(const Corpus& corpus, ResearcherIndex i, ResearcherIndex j) {
  const auto& si = corpus.schools_of(i);
  const auto& sj = corpus.schools_of(j);
  if (si.size() == 1 && sj.size() == 1) {
    if (si[0] == sj[0]) return {};
    return {SchoolPair(si[0], sj[0])};
  }
  std::vector<SchoolPair> out;
  for (SchoolIndex k : si)
    for (SchoolIndex l : sj)
      if (k != l) out.emplace_back(k, l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SchoolEdgeSet school_edges(const CoauthorGraph& g, const Corpus& corpus) {
  SchoolEdgeSet out;
  for (ResearcherIndex i = 0; i < g.size(); ++i)
    for (const auto& e : g.row(i))
      if (i < e.col)
        for (const auto& p : cross_school_pairs(corpus, i, e.col)) out.insert(p);
  return out;
}

SchoolEdgeSet new_edges(const SchoolEdgeSet& train, const SchoolEdgeSet& test) {
  SchoolEdgeSet out;
  std::set_difference(test.begin(), test.end(), train.begin(), train.end(), std::inserter(out, out.end()));
  return out;
}

SchoolEdgeSet candidate_pairs(const SchoolEdgeSet& train, std::size_t school_count) {
  SchoolEdgeSet out;
  for (SchoolIndex k = 0; k < school_count; ++k)
    for (SchoolIndex l = k + 1; l < school_count; ++l) {
      SchoolPair p(k, l);
      if (!train.contains(p)) out.insert(p);
    }
  return out;
}

SchoolEdgeSet candidate_pairs(const SchoolEdgeSet& train, const Corpus& corpus) {
  // Corpus::schools() is exactly the set of schools with at least one researcher.
  return candidate_pairs(train, corpus.school_count());
}

SchoolWeights aggregate_coauthor(const std::vector<PairScore>& scores, const Corpus& corpus) {
  SchoolWeights w;
  for (const auto& s : scores) {
    if (s.value <= 0.0) continue;
    for (const auto& p : cross_school_pairs(corpus, s.i, s.j)) w[p] += s.value;
  }
  return w;
}

// ---------------------------------------------------------------------------
// DistanceGate

DistanceGate DistanceGate::below(std::uint32_t d) {
  if (d == 0) throw ValidationError("geodesic gate d must be positive");
  return DistanceGate(Mode::Below, d);
}

DistanceGate DistanceGate::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "na" || t == "none" || t == "off") return off();
  if (t == "inf" || t == "infinity" || t == "∞") return reachable();
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
    throw ValidationError(fmt::format("invalid geodesic gate '{}' (expected NA, inf or a positive integer)", text));
  return below(static_cast<std::uint32_t>(std::stoul(t)));
}

bool DistanceGate::passes(const GeodesicDistance& g) const {
  switch (mode_) {
    case Mode::Off: return true;
    case Mode::Reachable: return g.reachable();
    case Mode::Below: return g.below(bound_);
  }
  return false;
}

std::string DistanceGate::label() const {
  switch (mode_) {
    case Mode::Off: return "NA";
    case Mode::Reachable: return "inf";
    case Mode::Below: return std::to_string(bound_);
  }
  return "?";
}

SchoolWeights aggregate_bipartite(const PairScoreFn& sigma, const CoauthorGraph& g, const Corpus& corpus,
                                  DistanceGate gate) {
  SchoolWeights w;
  const std::size_t n = corpus.researcher_count();
  std::vector<std::int32_t> dist;
  for (ResearcherIndex i = 0; i < n; ++i) {
    if (gate.mode() != DistanceGate::Mode::Off) dist = bfs_distances(g, i);
    for (ResearcherIndex k = i + 1; k < n; ++k) {
      if (gate.mode() != DistanceGate::Mode::Off) {
        const auto d = dist[k];
        const auto gd = d < 0 ? GeodesicDistance::unreachable() : GeodesicDistance::hops(static_cast<std::uint32_t>(d));
        if (!gate.passes(gd)) continue;
      }
      const auto pairs = cross_school_pairs(corpus, i, k);
      if (pairs.empty()) continue;
      const double v = sigma(i, k);
      if (v <= 0.0) continue;
      for (const auto& p : pairs) w[p] += v;
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Output

std::string format_real(double v) { return fmt::format("{}", v); }

std::string pair_label(const SchoolPair& p, const Corpus& corpus) {
  return corpus.schools().at(p.k) + "-" + corpus.schools().at(p.l);
}

std::string school_weights_csv(const SchoolWeights& w, const Corpus& corpus) {
  std::string out = "school_k,school_l,weight\n";
  for (const auto& [p, v] : w)
    out += fmt::format("{},{},{}\n", corpus.schools().at(p.k), corpus.schools().at(p.l), format_real(v));
  return out;
}

void write_school_weights(const SchoolWeights& w, const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, school_weights_csv(w, corpus));
}

}  // namespace collab

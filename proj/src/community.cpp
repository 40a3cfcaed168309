#include "collab/community.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

void SchoolGraph::add(SchoolIndex k, SchoolIndex l, double w) {
  w_.at(k * n_ + l) += w;
  if (k != l) w_.at(l * n_ + k) += w;
}

double SchoolGraph::total_weight() const {
  double m = 0.0;
  for (SchoolIndex k = 0; k < n_; ++k)
    for (SchoolIndex l = k; l < n_; ++l) m += weight(k, l);
  return m;
}

double SchoolGraph::strength(SchoolIndex k) const {
  double s = self_weight(k);  // self-loop contributes twice
  for (SchoolIndex l = 0; l < n_; ++l) s += weight(k, l);
  return s;
}

SchoolGraph build_school_graph(const CoauthorGraph& g, const Corpus& corpus) {
  SchoolGraph sg(corpus.school_count());
  for (ResearcherIndex i = 0; i < g.size(); ++i) {
    for (const auto& e : g.row(i)) {
      if (e.col <= i) continue;
      const auto& si = corpus.schools_of(i);
      const auto& sj = corpus.schools_of(e.col);
      std::vector<std::pair<SchoolIndex, SchoolIndex>> pairs;
      for (SchoolIndex k : si)
        for (SchoolIndex l : sj) pairs.emplace_back(std::min(k, l), std::max(k, l));
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (const auto& [k, l] : pairs) sg.add(k, l, e.count);
    }
  }
  return sg;
}

double modularity(const SchoolGraph& sg, const Partition& part) {
  if (part.size() != sg.size()) throw std::invalid_argument("partition size does not match graph");
  const double two_m = 2.0 * sg.total_weight();
  if (two_m <= 0.0) return 0.0;
  const std::size_t c = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
  std::vector<double> in(c, 0.0), tot(c, 0.0);
  for (SchoolIndex k = 0; k < sg.size(); ++k) {
    tot[part[k]] += sg.strength(k);
    for (SchoolIndex l = 0; l < sg.size(); ++l)
      if (part[k] == part[l]) in[part[k]] += (k == l ? 2.0 : 1.0) * sg.weight(k, l);
  }
  double q = 0.0;
  for (std::size_t x = 0; x < c; ++x) q += in[x] / two_m - (tot[x] / two_m) * (tot[x] / two_m);
  return q;
}

std::size_t Dendrogram::optimal_communities() const {
  double best = initial_q;
  std::size_t best_n = leaves;
  for (std::size_t s = 0; s < merges.size(); ++s) {
    // >= favours fewer communities on ties.
    if (merges[s].q_after >= best - 1e-12) {
      best = std::max(best, merges[s].q_after);
      best_n = leaves - s - 1;
    }
  }
  return best_n;
}

double Dendrogram::q_at(std::size_t communities) const {
  if (communities < 1 || communities > leaves) throw ValidationError(fmt::format("no cut with {} communities", communities));
  if (communities == leaves) return initial_q;
  return merges.at(leaves - communities - 1).q_after;
}

Dendrogram greedy_modularity(const SchoolGraph& sg) {
  const std::size_t n = sg.size();
  const double m = sg.total_weight();
  if (n == 0 || m <= 0.0) throw ValidationError("community detection needs a graph with at least one edge");
  const double two_m = 2.0 * m;

  // e[a][b]: fraction of edge ends joining communities a and b (a != b
  // counted once per direction); a[x]: fraction of ends attached to x.
  std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
  std::vector<double> a(n, 0.0);
  std::vector<char> alive(n, 1);
  Partition part(n);
  for (SchoolIndex k = 0; k < n; ++k) {
    part[k] = k;
    a[k] = sg.strength(k) / two_m;
    for (SchoolIndex l = 0; l < n; ++l) e[k][l] = (k == l ? 2.0 : 1.0) * sg.weight(k, l) / two_m;
  }

  Dendrogram d;
  d.leaves = n;
  d.initial_q = modularity(sg, part);
  double q = d.initial_q;

  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t ba = 0, bb = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!alive[y]) continue;
        const double dq = 2.0 * (e[x][y] - a[x] * a[y]);
        if (dq > best + 1e-12) {
          best = dq;
          ba = x;
          bb = y;
        }
      }
    }
    // Merge bb into ba.
    for (std::size_t z = 0; z < n; ++z) {
      if (!alive[z] || z == ba || z == bb) continue;
      e[ba][z] += e[bb][z];
      e[z][ba] = e[ba][z];
    }
    e[ba][ba] += e[bb][bb] + 2.0 * e[ba][bb];
    a[ba] += a[bb];
    alive[bb] = 0;
    q += best;
    d.merges.push_back(Merge{ba, bb, best, q});
  }
  return d;
}

Partition cut(const Dendrogram& d, std::size_t n) {
  if (n < 1 || n > d.leaves)
    throw ValidationError(fmt::format("cannot cut {} leaves into {} communities", d.leaves, n));
  std::vector<std::size_t> owner(d.leaves);
  for (std::size_t k = 0; k < d.leaves; ++k) owner[k] = k;
  const std::size_t steps = d.leaves - n;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto& mg = d.merges.at(s);
    for (auto& o : owner)
      if (o == mg.b) o = mg.a;
  }
  // Relabel to 0..n-1 in order of first appearance.
  std::vector<std::size_t> label(d.leaves, std::numeric_limits<std::size_t>::max());
  Partition part(d.leaves);
  std::size_t next = 0;
  for (std::size_t k = 0; k < d.leaves; ++k) {
    if (label[owner[k]] == std::numeric_limits<std::size_t>::max()) label[owner[k]] = next++;
    part[k] = label[owner[k]];
  }
  return part;
}

SchoolEdgeSet predict_from_partition(const Partition& part, const SchoolEdgeSet& train) {
  SchoolEdgeSet out;
  for (SchoolIndex k = 0; k < part.size(); ++k)
    for (SchoolIndex l = k + 1; l < part.size(); ++l) {
      if (part[k] != part[l]) continue;
      SchoolPair p(k, l);
      if (!train.contains(p)) out.insert(p);
    }
  return out;
}

std::string dendrogram_text(const Dendrogram& d, const Corpus& corpus) {
  const auto name = [&](std::size_t id) { return id < corpus.school_count() ? corpus.schools()[id] : std::to_string(id); };
  std::string out = fmt::format("# leaves {} initial_q {} optimal_communities {}\n", d.leaves, format_real(d.initial_q),
                                d.optimal_communities());
  for (std::size_t s = 0; s < d.merges.size(); ++s) {
    const auto& mg = d.merges[s];
    out += fmt::format("{} {} {} {} {}\n", s + 1, name(mg.a), name(mg.b), format_real(mg.delta_q),
                       format_real(mg.q_after));
  }
  return out;
}

std::string partition_csv(const Partition& part, const Corpus& corpus) {
  std::string out = "school,community\n";
  for (SchoolIndex k = 0; k < part.size(); ++k) out += fmt::format("{},{}\n", corpus.schools().at(k), part[k]);
  return out;
}

}  // namespace collab

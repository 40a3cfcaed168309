#include "collab/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// sampling is done by hand to keep files identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  int year(YearInterval iv) { return iv.first + static_cast<int>(index(static_cast<std::size_t>(iv.last - iv.first + 1))); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[index(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

using Pair = std::pair<std::size_t, std::size_t>;

Pair ordered(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

struct Builder {
  explicit Builder(std::uint64_t seed) : rng(seed) {}

  Rng rng;
  std::size_t n_faculties = 0;
  std::vector<std::size_t> faculty_of;                   // per school
  std::vector<std::vector<std::size_t>> members;         // researcher indices per school
  std::vector<std::vector<std::size_t>> home_journals;   // per school
  std::vector<std::string> school_codes, journal_names, researcher_ids;
  std::vector<PublicationRecord> pubs;

  void paper(YearInterval years, std::vector<std::size_t> authors, std::size_t journal) {
    PublicationRecord p;
    p.pub_id = fmt::format("p{:05d}", pubs.size() + 1);
    p.year = rng.year(years);
    p.journal = journal_names[journal];
    for (auto a : authors) p.authors.push_back(researcher_ids[a]);
    std::sort(p.authors.begin(), p.authors.end());
    p.authors.erase(std::unique(p.authors.begin(), p.authors.end()), p.authors.end());
    pubs.push_back(std::move(p));
  }

  std::size_t journal_for(std::size_t school) {
    if (rng.chance(0.85)) return rng.pick(home_journals[school]);
    return rng.index(journal_names.size());
  }

  std::size_t member(std::size_t school) { return rng.pick(members[school]); }

  void intra_school_papers(YearInterval years) {
    for (std::size_t s = 0; s < members.size(); ++s) {
      const std::size_t count = 2 * members[s].size();
      for (std::size_t n = 0; n < count; ++n) {
        const std::size_t k = 1 + rng.index(std::min<std::size_t>(3, members[s].size()));
        std::vector<std::size_t> authors;
        while (authors.size() < k) {
          auto a = member(s);
          if (std::find(authors.begin(), authors.end(), a) == authors.end()) authors.push_back(a);
        }
        paper(years, authors, journal_for(s));
      }
    }
  }

  void cross_school_papers(YearInterval years, const std::set<Pair>& links, double keep, std::size_t max_extra) {
    for (const auto& [a, b] : links) {
      if (!rng.chance(keep)) continue;
      const std::size_t count = 1 + rng.index(max_extra + 1);
      for (std::size_t n = 0; n < count; ++n) {
        std::vector<std::size_t> authors{member(a), member(b)};
        if (rng.chance(0.3)) authors.push_back(member(rng.chance(0.5) ? a : b));
        paper(years, authors, journal_for(rng.chance(0.5) ? a : b));
      }
    }
  }
};

}  // namespace

SynthCorpus generate_synthetic(const SynthParams& params) {
  const std::size_t S = params.schools, R = params.researchers, J = params.journals;
  if (S < 3) throw ValidationError("synthetic corpus needs at least 3 schools");
  if (R < 3 * S) throw ValidationError(fmt::format("{} researchers cannot staff {} schools (need >= 3 each)", R, S));
  if (params.train_years.overlaps(params.test_years)) throw ValidationError("synthetic train/test years overlap");

  Builder b(params.seed);
  b.n_faculties = std::max<std::size_t>(2, S / 4);
  if (J < 2 * b.n_faculties)
    throw ValidationError(fmt::format("{} journals is too few for {} faculties (need >= 2 each)", J, b.n_faculties));

  SynthCorpus out;
  for (std::size_t s = 0; s < S; ++s) {
    b.faculty_of.push_back(s * b.n_faculties / S);
    b.school_codes.push_back(fmt::format("S{:02d}", s));
    out.organisations.add(b.school_codes.back(), fmt::format("F{}", b.faculty_of.back()),
                          fmt::format("Synthetic School {}", s));
  }
  for (std::size_t j = 0; j < J; ++j) b.journal_names.push_back(fmt::format("Journal {:02d}", j));

  // Skewed school sizes: 3 each, the rest split by a Zipf weight over a
  // random ranking (largest remainder).
  std::vector<std::size_t> rank(S);
  std::iota(rank.begin(), rank.end(), 0);
  b.rng.shuffle(rank);
  std::vector<double> weight(S);
  for (std::size_t s = 0; s < S; ++s) weight[s] = 1.0 / static_cast<double>(rank[s] + 1);
  const double wsum = std::accumulate(weight.begin(), weight.end(), 0.0);
  const std::size_t spare = R - 3 * S;
  std::vector<std::size_t> size(S, 3);
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t s = 0; s < S; ++s) {
    const double share = static_cast<double>(spare) * weight[s] / wsum;
    const auto whole = static_cast<std::size_t>(std::floor(share));
    size[s] += whole;
    assigned += whole;
    remainders.emplace_back(share - static_cast<double>(whole), s);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  for (std::size_t x = 0; assigned < spare; ++x, ++assigned) ++size[remainders[x % S].second];

  b.members.resize(S);
  for (std::size_t s = 0; s < S; ++s) {
    for (std::size_t n = 0; n < size[s]; ++n) {
      b.members[s].push_back(b.researcher_ids.size());
      b.researcher_ids.push_back(fmt::format("r{:04d}", b.researcher_ids.size() + 1));
      out.researchers.push_back(
          Researcher{b.researcher_ids.back(), {b.school_codes[s]}, {fmt::format("F{}", b.faculty_of[s])}});
    }
  }

  // Home journals: up to three from the school's faculty block.
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<std::size_t> block;
    for (std::size_t j = 0; j < J; ++j)
      if (j % b.n_faculties == b.faculty_of[s]) block.push_back(j);
    b.rng.shuffle(block);
    block.resize(std::min<std::size_t>(3, block.size()));
    std::sort(block.begin(), block.end());
    b.home_journals.push_back(block);
  }

  // Training-period school graph: a random tree plus S/2 extra links,
  // preferring partners in the same faculty.
  std::set<Pair> links;
  auto partner = [&](std::size_t s, std::size_t limit, double same_faculty) {
    std::vector<std::size_t> same, any;
    for (std::size_t t = 0; t < limit; ++t) {
      if (t == s) continue;
      any.push_back(t);
      if (b.faculty_of[t] == b.faculty_of[s]) same.push_back(t);
    }
    if (!same.empty() && b.rng.chance(same_faculty)) return b.rng.pick(same);
    return b.rng.pick(any);
  };
  for (std::size_t s = 1; s < S; ++s) links.insert(ordered(s, partner(s, s, 0.6)));
  for (std::size_t n = 0; n < S / 2; ++n) {
    const std::size_t s = b.rng.index(S);
    links.insert(ordered(s, partner(s, S, 0.5)));
  }

  // Planted pairs: not linked in training, but sharing a linked school.
  std::vector<std::vector<std::size_t>> adj(S);
  for (const auto& [x, y] : links) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  struct Eligible {
    Pair pair;
    std::size_t via;
  };
  std::vector<Eligible> eligible;
  for (std::size_t k = 0; k < S; ++k)
    for (std::size_t l = k + 1; l < S; ++l) {
      if (links.contains({k, l})) continue;
      std::vector<std::size_t> common;
      for (auto m : adj[k])
        if (std::find(adj[l].begin(), adj[l].end(), m) != adj[l].end()) common.push_back(m);
      if (!common.empty()) eligible.push_back({{k, l}, b.rng.pick(common)});
    }
  b.rng.shuffle(eligible);
  std::stable_sort(eligible.begin(), eligible.end(), [&](const Eligible& x, const Eligible& y) {
    const bool sx = b.faculty_of[x.pair.first] == b.faculty_of[x.pair.second];
    const bool sy = b.faculty_of[y.pair.first] == b.faculty_of[y.pair.second];
    return sx && !sy;
  });
  if (params.planted_new_links > eligible.size())
    throw ValidationError(fmt::format("cannot plant {} new links: only {} school pairs qualify",
                                      params.planted_new_links, eligible.size()));
  eligible.resize(params.planted_new_links);

  // Training period.
  b.intra_school_papers(params.train_years);
  b.cross_school_papers(params.train_years, links, 1.0, 2);
  struct Bridge {
    std::size_t first, second, journal;
  };
  std::vector<Bridge> bridges;
  for (const auto& e : eligible) {
    const auto [k, l] = e.pair;
    const std::size_t i = b.member(k), c = b.member(e.via), i2 = b.member(l);
    b.paper(params.train_years, {i, c}, b.journal_for(k));
    b.paper(params.train_years, {c, i2}, b.journal_for(l));
    const std::size_t shared = b.rng.pick(b.home_journals[k]);
    b.paper(params.train_years, {i}, shared);
    b.paper(params.train_years, {i2}, shared);
    bridges.push_back({i, i2, shared});
    out.planted.emplace_back(b.school_codes[k], b.school_codes[l]);
  }

  // Test period: the same structure thinned out, plus the planted links.
  b.intra_school_papers(params.test_years);
  b.cross_school_papers(params.test_years, links, 0.75, 1);
  for (const auto& br : bridges) b.paper(params.test_years, {br.first, br.second}, br.journal);

  std::sort(out.planted.begin(), out.planted.end());
  out.publications = std::move(b.pubs);
  return out;
}

void write_synthetic(const SynthCorpus& synth, const std::filesystem::path& dir) {
  const Corpus corpus = synth.corpus();
  write_corpus(corpus, dir);
  std::string orgs = "school,faculty,name\n";
  for (const auto& [code, e] : synth.organisations.entries()) orgs += fmt::format("{},{},{}\n", code, e.faculty, e.name);
  write_file(dir / "organisations.csv", orgs);
  std::string planted = "school_k,school_l\n";
  for (const auto& [k, l] : synth.planted) planted += fmt::format("{},{}\n", k, l);
  write_file(dir / "planted.csv", planted);
}

}  // namespace collab

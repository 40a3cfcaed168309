#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "collab/ingest.hpp"
#include "collab/network.hpp"
#include "collab/school_network.hpp"
#include "oracle.hpp"

namespace testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(COLLAB_FIXTURE_DIR) / name;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("collab_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline collab::CoauthorGraph graph_from(const oracle::EdgeList& el) {
  collab::CoauthorGraph g(el.n);
  for (const auto& [i, j, c] : el.edges) g.add(i, j, static_cast<std::uint32_t>(c));
  return g;
}

/// Small edge-list graph from 0-based pairs, each with count 1.
inline collab::CoauthorGraph graph_of(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  collab::CoauthorGraph g(n);
  for (auto [i, j] : edges) g.add(i, j);
  return g;
}

inline collab::Corpus fixture_corpus() {
  return collab::load_corpus(fixture("researchers.jsonl"), fixture("publications.jsonl"));
}

/// "CODE,CODE" lines of a golden file as a school edge set.
inline collab::SchoolEdgeSet golden_pairs(const std::string& name, const collab::Corpus& corpus) {
  std::ifstream in(fixture(name));
  collab::SchoolEdgeSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string a, b;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    out.insert(collab::SchoolPair(*corpus.school_index(a), *corpus.school_index(b)));
  }
  return out;
}

/// "CODE,CODE,num/den" lines of a golden file as exact weights.
inline std::map<collab::SchoolPair, double> golden_fractions(const std::string& name, const collab::Corpus& corpus) {
  std::ifstream in(fixture(name));
  std::map<collab::SchoolPair, double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string a, b, num, den;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, num, '/');
    std::getline(ss, den);
    out[collab::SchoolPair(*corpus.school_index(a), *corpus.school_index(b))] = std::stod(num) / std::stod(den);
  }
  return out;
}

struct RawCorpus {
  std::vector<collab::Researcher> researchers;
  std::vector<collab::PublicationRecord> publications;
};

/// Random corpus: up to `max_researchers` researchers over `n_schools`
/// schools (about one in six with two schools), up to `max_journals`
/// journals, some journal-less publications.
inline RawCorpus random_corpus(std::mt19937_64& rng, std::size_t max_researchers, std::size_t max_journals,
                               std::size_t n_schools = 5) {
  auto uni = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  RawCorpus rc;
  const std::size_t n = uni(4, max_researchers);
  const std::size_t nj = uni(2, max_journals);
  for (std::size_t i = 0; i < n; ++i) {
    collab::Researcher r;
    r.researcher_id = "r" + std::to_string(i);
    r.schools.push_back("S" + std::to_string(uni(0, n_schools - 1)));
    if (uni(0, 5) == 0) r.schools.push_back("S" + std::to_string(uni(0, n_schools - 1)));
    r.faculties = {"F"};
    rc.researchers.push_back(r);
  }
  const std::size_t np = uni(n / 2, 2 * n);
  for (std::size_t p = 0; p < np; ++p) {
    collab::PublicationRecord pub;
    pub.pub_id = "p" + std::to_string(p);
    pub.year = 2009;
    pub.journal = uni(0, 9) == 0 ? "" : "J" + std::to_string(uni(0, nj - 1));
    const std::size_t k = uni(1, 4);
    for (std::size_t a = 0; a < k; ++a) pub.authors.push_back("r" + std::to_string(uni(0, n - 1)));
    rc.publications.push_back(pub);
  }
  return rc;
}

/// Dense A straight from the records: researcher order as given.
inline oracle::Matrix dense_adjacency(const RawCorpus& rc) {
  const auto n = rc.researchers.size();
  oracle::Matrix a = oracle::zeros(n, n);
  auto idx = [&](const std::string& id) {
    for (std::size_t i = 0; i < n; ++i)
      if (rc.researchers[i].researcher_id == id) return i;
    throw std::logic_error("unknown author " + id);
  };
  for (const auto& p : rc.publications) {
    std::set<std::size_t> as;
    for (const auto& id : p.authors) as.insert(idx(id));
    for (auto x : as)
      for (auto y : as)
        if (x != y) a[x][y] += 1;
  }
  return a;
}

/// Dense I straight from the records: journals in sorted name order.
inline oracle::Matrix dense_incidence(const RawCorpus& rc) {
  std::set<std::string> names;
  for (const auto& p : rc.publications)
    if (!p.journal.empty()) names.insert(p.journal);
  const std::vector<std::string> js(names.begin(), names.end());
  oracle::Matrix inc = oracle::zeros(rc.researchers.size(), js.size());
  for (const auto& p : rc.publications) {
    if (p.journal.empty()) continue;
    const auto j = static_cast<std::size_t>(std::find(js.begin(), js.end(), p.journal) - js.begin());
    std::set<std::string> as(p.authors.begin(), p.authors.end());
    for (const auto& id : as)
      for (std::size_t i = 0; i < rc.researchers.size(); ++i)
        if (rc.researchers[i].researcher_id == id) inc[i][j] += 1;
  }
  return inc;
}

/// School memberships as indices into the sorted set of school codes.
inline std::vector<std::vector<std::size_t>> dense_schools(const RawCorpus& rc) {
  std::set<std::string> codes;
  for (const auto& r : rc.researchers) codes.insert(r.schools.begin(), r.schools.end());
  const std::vector<std::string> cs(codes.begin(), codes.end());
  std::vector<std::vector<std::size_t>> out;
  for (const auto& r : rc.researchers) {
    std::set<std::size_t> s;
    for (const auto& c : r.schools) s.insert(static_cast<std::size_t>(std::find(cs.begin(), cs.end(), c) - cs.begin()));
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

}  // namespace testing

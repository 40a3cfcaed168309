#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "collab/network.hpp"
#include "test_support.hpp"

using namespace collab;

namespace {

Corpus fixture_train() {
  auto c = load_corpus(testing::fixture("researchers.jsonl"), testing::fixture("publications.jsonl"));
  return split_by_year(c, {2008, 2010}, {2011, 2013}).train;
}

}  // namespace

TEST_CASE("joint publication counts") {
  const Corpus c({{"a", {"S"}, {"F"}}, {"b", {"S"}, {"F"}}, {"c", {"T"}, {"F"}}},
                 {{"p1", 2009, "J", {"a", "b"}}, {"p2", 2009, "J", {"a", "b", "c"}}, {"p3", 2009, "", {"c"}}});
  auto g = build_coauthor_graph(c);
  CHECK(g.count(0, 1) == 2);
  CHECK(g.count(1, 0) == 2);
  CHECK(g.count(0, 2) == 1);
  CHECK(g.count(0, 0) == 0);
  CHECK(g.edge_count() == 3);

  auto inc = build_incidence_graph(c);
  CHECK(inc.journal_count() == 1);
  CHECK(inc.count(0, 0) == 2);
  CHECK(inc.count(2, 0) == 1);  // p3 has no journal
  CHECK(inc.journal_total(0) == 5);
  CHECK(inc.researcher_total(1) == 2);
}

TEST_CASE("fixture adjacency matches the golden coordinate list") {
  auto g = build_coauthor_graph(fixture_train());
  auto dir = testing::scratch_dir("coords");
  write_coordinate_list(g, dir / "a.txt");
  CHECK(read_file(dir / "a.txt") == read_file(testing::fixture("golden_adjacency_train.txt")));
}

TEST_CASE("graph construction errors") {
  CoauthorGraph g(3);
  CHECK_THROWS_AS(g.add(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add(0, 3), std::out_of_range);
}

TEST_CASE("geodesic on a path") {
  auto g = testing::graph_of(5, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(geodesic(g, 0, 0) == GeodesicDistance::hops(0));
  CHECK(geodesic(g, 0, 2).value() == 2);
  CHECK(geodesic(g, 3, 0).value() == 3);
  CHECK_FALSE(geodesic(g, 0, 4).reachable());
  CHECK(geodesic(g, 0, 2).below(3));
  CHECK_FALSE(geodesic(g, 0, 3).below(3));
  CHECK_FALSE(geodesic(g, 0, 4).below(100));
  CHECK(all_distance2_pairs(g) == std::vector<ResearcherPair>{{0, 2}, {1, 3}});
}

TEST_CASE("property: BFS distances equal Floyd-Warshall and are symmetric") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const double density = 0.02 + 0.2 * static_cast<double>(rng() % 100) / 100.0;
    auto el = oracle::random_graph(rng, n, density);
    auto g = testing::graph_from(el);
    auto d = oracle::floyd_warshall(el.dense());
    DistanceTable table(g);
    std::vector<ResearcherPair> d2;
    for (std::size_t i = 0; i < n; ++i) {
      auto row = bfs_distances(g, i);
      for (std::size_t j = 0; j < n; ++j) {
        const long expect = d[i][j] == oracle::kInf ? -1 : d[i][j];
        REQUIRE(row[j] == expect);
        CHECK(geodesic(g, i, j) == geodesic(g, j, i));
        CHECK(table(i, j) == geodesic(g, i, j));
        if (i < j && d[i][j] == 2) d2.emplace_back(i, j);
      }
    }
    CHECK(all_distance2_pairs(g) == d2);
  }
}

TEST_CASE("property: adjacency is symmetric with zero diagonal") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto rc = testing::random_corpus(rng, 25, 6);
    const Corpus c(rc.researchers, rc.publications);
    auto g = build_coauthor_graph(c);
    auto dense = testing::dense_adjacency(rc);
    auto inc = build_incidence_graph(c);
    auto dense_inc = testing::dense_incidence(rc);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(g.count(i, j) == g.count(j, i));
        CHECK(static_cast<long>(g.count(i, j)) == dense[i][j]);
      }
      for (std::size_t j = 0; j < inc.journal_count(); ++j) CHECK(static_cast<long>(inc.count(i, j)) == dense_inc[i][j]);
    }
  }
}

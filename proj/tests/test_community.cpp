#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>

#include "collab/community.hpp"
#include "collab/error.hpp"
#include "test_support.hpp"

using namespace collab;
using doctest::Approx;

namespace {

SchoolGraph two_triangles() {
  SchoolGraph sg(6);
  for (auto [k, l] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}}) sg.add(k, l, 1.0);
  return sg;
}

std::vector<std::vector<double>> dense(const SchoolGraph& sg) {
  std::vector<std::vector<double>> w(sg.size(), std::vector<double>(sg.size()));
  for (std::size_t k = 0; k < sg.size(); ++k)
    for (std::size_t l = 0; l < sg.size(); ++l) w[k][l] = sg.weight(k, l);
  return w;
}

bool refines(const Partition& fine, const Partition& coarse) {
  for (std::size_t k = 0; k < fine.size(); ++k)
    for (std::size_t l = 0; l < fine.size(); ++l)
      if (fine[k] == fine[l] && coarse[k] != coarse[l]) return false;
  return true;
}

}  // namespace

TEST_CASE("school graph weights") {
  const Corpus c({{"m1", {"MATH"}, {"F"}}, {"m2", {"MATH"}, {"F"}}, {"m3", {"MATH"}, {"F"}}, {"p1", {"PHYS"}, {"F"}}},
                 {{"a", 2009, "J", {"m1", "p1"}},
                  {"b", 2009, "J", {"m1", "p1"}},
                  {"c", 2009, "J", {"m1", "p1"}},
                  {"d", 2009, "J", {"m1", "m2"}},
                  {"e", 2009, "J", {"m2", "m3"}}});
  auto sg = build_school_graph(build_coauthor_graph(c), c);
  const auto math = *c.school_index("MATH"), phys = *c.school_index("PHYS");
  CHECK(sg.weight(math, phys) == 3.0);
  CHECK(sg.weight(phys, math) == 3.0);
  CHECK(sg.self_weight(math) == 2.0);
  CHECK(sg.total_weight() == 5.0);
  CHECK(sg.strength(math) == 7.0);
}

TEST_CASE("fixture school graph matches the golden list") {
  auto train = split_by_year(testing::fixture_corpus(), {2008, 2010}, {2011, 2013}).train;
  auto sg = build_school_graph(build_coauthor_graph(train), train);
  std::string expect;
  {
    std::ifstream in(testing::fixture("golden_school_graph.txt"));
    expect.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::string got;
  for (std::size_t k = 0; k < sg.size(); ++k)
    for (std::size_t l = k; l < sg.size(); ++l)
      if (sg.weight(k, l) > 0)
        got += train.schools()[k] + "," + train.schools()[l] + "," + format_real(sg.weight(k, l)) + "\n";
  CHECK(got == expect);
}

TEST_CASE("two triangles joined by a bridge") {
  auto sg = two_triangles();
  CHECK(modularity(sg, {0, 0, 0, 1, 1, 1}) == Approx(5.0 / 14.0).epsilon(1e-12));
  CHECK(oracle::max_modularity(dense(sg)) == Approx(5.0 / 14.0).epsilon(1e-12));
  auto d = greedy_modularity(sg);
  CHECK(d.merges.size() == 5);
  CHECK(d.optimal_communities() == 2);
  CHECK(d.q_at(2) == Approx(5.0 / 14.0).epsilon(1e-12));
  CHECK(cut(d, 2) == Partition{0, 0, 0, 1, 1, 1});
  CHECK(cut(d, 6) == Partition{0, 1, 2, 3, 4, 5});
  CHECK(cut(d, 1) == Partition(6, 0));
  CHECK_THROWS_AS(cut(d, 0), ValidationError);
  CHECK_THROWS_AS(cut(d, 7), ValidationError);
}

TEST_CASE("single edge") {
  SchoolGraph sg(2);
  sg.add(0, 1, 1.0);
  auto d = greedy_modularity(sg);
  REQUIRE(d.merges.size() == 1);
  CHECK(d.initial_q == Approx(-0.5));
  CHECK(d.merges[0].q_after == Approx(0.0));
  CHECK(d.optimal_communities() == 1);
}

TEST_CASE("two disconnected edges merge within components first") {
  SchoolGraph sg(4);
  sg.add(0, 1, 1.0);
  sg.add(2, 3, 1.0);
  auto d = greedy_modularity(sg);
  REQUIRE(d.merges.size() == 3);
  CHECK(d.merges[0].a == 0);
  CHECK(d.merges[0].b == 1);
  CHECK(d.merges[1].a == 2);
  CHECK(d.merges[1].b == 3);
  CHECK(d.merges[2].delta_q < 0.0);
  CHECK(d.q_at(2) == Approx(0.5));
  CHECK(d.optimal_communities() == 2);
}

TEST_CASE("edgeless graph is rejected") {
  CHECK_THROWS_AS(greedy_modularity(SchoolGraph(3)), ValidationError);
  SchoolGraph self_only(2);
  self_only.add(0, 0, 1.0);
  CHECK_NOTHROW(greedy_modularity(self_only));
}

TEST_CASE("prediction from a partition") {
  CHECK(predict_from_partition({0, 0, 0}, {SchoolPair(0, 1)}) == SchoolEdgeSet{SchoolPair(0, 2), SchoolPair(1, 2)});
  CHECK(predict_from_partition({0, 1, 2}, {}).empty());
}

TEST_CASE("text exports") {
  const Corpus c({{"a", {"A"}, {"F"}}, {"b", {"B"}, {"F"}}}, {});
  SchoolGraph sg(2);
  sg.add(0, 1, 1.0);
  auto d = greedy_modularity(sg);
  CHECK(dendrogram_text(d, c) == "# leaves 2 initial_q -0.5 optimal_communities 1\n1 A B 0.5 0\n");
  CHECK(partition_csv(cut(d, 1), c) == "school,community\nA,0\nB,0\n");
}

TEST_CASE("property: greedy merges agree with recomputed modularity") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    SchoolGraph sg(n);
    bool any = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k; l < n; ++l)
        if (u(rng) < (k == l ? 0.3 : 0.4)) {
          sg.add(k, l, static_cast<double>(1 + rng() % 4));
          any = true;
        }
    if (!any) sg.add(0, 1, 1.0);
    auto w = dense(sg);
    auto d = greedy_modularity(sg);
    REQUIRE(d.merges.size() == n - 1);
    const double best = oracle::max_modularity(w);
    CHECK(d.initial_q == Approx(oracle::modularity(w, cut(d, n))).epsilon(1e-9));
    Partition coarser;
    for (std::size_t c = n; c >= 1; --c) {
      auto part = cut(d, c);
      CHECK(*std::max_element(part.begin(), part.end()) == c - 1);
      CHECK(oracle::modularity(w, part) == Approx(d.q_at(c)).epsilon(1e-9));
      CHECK(modularity(sg, part) == Approx(d.q_at(c)).epsilon(1e-9));
      CHECK(d.q_at(c) <= best + 1e-9);
      if (c < n) CHECK(refines(cut(d, c + 1), part));
    }
  }
}

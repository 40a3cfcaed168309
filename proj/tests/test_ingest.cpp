#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "collab/error.hpp"
#include "collab/ingest.hpp"
#include "test_support.hpp"

using namespace collab;

namespace {

const char* kTwoResearchers =
    R"({"researcher_id": "r1", "schools": ["MATH"], "faculties": ["FSCI"]}
{"researcher_id": "r2", "schools": ["PHYS"], "faculties": ["FSCI"]}
)";

Corpus corpus_from(const std::string& researchers, const std::string& publications, const LoadOptions& opt = {}) {
  return make_corpus(parse_researchers(researchers), parse_publications(publications, opt), opt);
}

PublicationRecord pub(std::string id, int year, std::vector<std::string> authors, std::string journal = "J") {
  return PublicationRecord{std::move(id), year, std::move(journal), std::move(authors)};
}

std::vector<Researcher> cohort() {
  return {{"r1", {"MATH"}, {"FSCI"}}, {"r2", {"PHYS"}, {"FSCI"}}, {"r3", {"GEOG"}, {"FSCI"}}};
}

}  // namespace

TEST_CASE("single publication record") {
  auto c = corpus_from(kTwoResearchers,
                       R"({"pub_id": "p1", "year": 2009, "journal": "J. Stat.", "authors": ["r1", "r2"]})");
  CHECK(c.publications().size() == 1);
  CHECK(c.journals() == std::vector<std::string>{"J. Stat."});
  CHECK(c.schools() == std::vector<std::string>{"MATH", "PHYS"});
}

TEST_CASE("dangling author reference names publication and author") {
  try {
    corpus_from(kTwoResearchers, R"({"pub_id": "p7", "year": 2009, "journal": "X", "authors": ["r1", "r9"]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("p7") != std::string::npos);
    CHECK(msg.find("r9") != std::string::npos);
  }
}

TEST_CASE("malformed line reports its line number") {
  try {
    corpus_from(kTwoResearchers, "{\"pub_id\": \"p1\", \"year\": 2009, \"journal\": \"X\", \"authors\": [\"r1\"]}\n"
                                 "{\"pub_id\": \"p2\", \"year\": 2009,\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_publications(R"({"pub_id": "p1", "year": "2009", "journal": "", "authors": ["r1"]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_publications(R"({"pub_id": "", "year": 2009, "journal": "", "authors": ["r1"]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_publications(R"({"pub_id": "p1", "year": 2009, "journal": "", "authors": []})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_researchers(R"({"researcher_id": "r1", "schools": [], "faculties": ["F"]})"),
                  ValidationError);
}

TEST_CASE("duplicate pub_id is rejected") {
  CHECK_THROWS_AS(corpus_from(kTwoResearchers,
                              "{\"pub_id\": \"p1\", \"year\": 2009, \"journal\": \"X\", \"authors\": [\"r1\"]}\n"
                              "{\"pub_id\": \"p1\", \"year\": 2010, \"journal\": \"X\", \"authors\": [\"r2\"]}\n"),
                  ValidationError);
}

TEST_CASE("year outside the configured range") {
  LoadOptions opt;
  opt.min_year = 2008;
  opt.max_year = 2013;
  CHECK_THROWS_AS(
      corpus_from(kTwoResearchers, R"({"pub_id": "p1", "year": 2007, "journal": "X", "authors": ["r1"]})", opt),
      ValidationError);
}

TEST_CASE("organisation table is checked against researcher faculties") {
  OrganisationTable orgs;
  orgs.add("MATH", "FSCI", "Mathematics");
  orgs.add("PHYS", "FSCI", "Physics");
  LoadOptions opt;
  opt.organisations = &orgs;
  CHECK_NOTHROW(corpus_from(kTwoResearchers, "", opt));
  CHECK_THROWS_AS(corpus_from(R"({"researcher_id": "r1", "schools": ["MATH"], "faculties": ["FENG"]})", "", opt),
                  ValidationError);
  CHECK_THROWS_AS(corpus_from(R"({"researcher_id": "r1", "schools": ["XXXX"], "faculties": ["FSCI"]})", "", opt),
                  ValidationError);
}

TEST_CASE("shipped organisation table") {
  auto orgs = OrganisationTable::load(std::filesystem::path(COLLAB_DATA_DIR) / "organisations.csv");
  CHECK(orgs.size() == 37);
  REQUIRE(orgs.find("SSCM"));
  CHECK(orgs.find("SSCM")->faculty == "FMDY");
  CHECK(orgs.find("PHPH")->name == "Physiology, Pharmacology & Neuroscience");
}

TEST_CASE("fixture corpus") {
  auto orgs = OrganisationTable::load(std::filesystem::path(COLLAB_DATA_DIR) / "organisations.csv");
  LoadOptions opt;
  opt.organisations = &orgs;
  auto c = load_corpus(testing::fixture("researchers.jsonl"), testing::fixture("publications.jsonl"), opt);
  CHECK(c.researcher_count() == 6);
  CHECK(c.publications().size() == 12);
  CHECK(c.school_count() == 4);
  CHECK(c.schools() == std::vector<std::string>{"GEOG", "MATH", "PHYS", "SSCM"});
  CHECK(c.journals().size() == 4);  // the empty journal name is not a journal
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/r.jsonl", "/nonexistent/p.jsonl"), IoError);
}

TEST_CASE("split by year") {
  const Corpus c(cohort(), {pub("a", 2009, {"r1"}), pub("b", 2012, {"r2"}), pub("c", 2014, {"r3"})});
  auto s = split_by_year(c, {2008, 2010}, {2011, 2013});
  REQUIRE(s.train.publications().size() == 1);
  REQUIRE(s.test.publications().size() == 1);
  CHECK(s.train.publications()[0].pub_id == "a");
  CHECK(s.test.publications()[0].pub_id == "b");
  CHECK(s.dropped == 1);
  CHECK(s.train.researchers() == c.researchers());
  CHECK(s.test.schools() == c.schools());
}

TEST_CASE("split with no test publications keeps the cohort") {
  const Corpus c(cohort(), {pub("a", 2009, {"r1", "r2"})});
  auto s = split_by_year(c, {2008, 2010}, {2020, 2021});
  CHECK(s.test.publications().empty());
  CHECK(s.test.researcher_count() == 3);
  CHECK(s.test.school_count() == 3);
}

TEST_CASE("overlapping intervals are rejected") {
  const Corpus c(cohort(), {});
  CHECK_THROWS_AS(split_by_year(c, {2008, 2011}, {2011, 2013}), ValidationError);
}

TEST_CASE("year interval parsing") {
  CHECK(parse_year_interval("2008-2010").first == 2008);
  CHECK(parse_year_interval("2008-2010").last == 2010);
  CHECK(parse_year_interval("2012").last == 2012);
  CHECK_THROWS_AS(parse_year_interval("2010-2008"), ValidationError);
  CHECK_THROWS_AS(parse_year_interval("abc"), ValidationError);
}

TEST_CASE("property: split partitions in-range publications and keeps the cohort") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto rc = testing::random_corpus(rng, 20, 5);
    for (auto& p : rc.publications) p.year = 2005 + static_cast<int>(rng() % 10);
    const Corpus c(rc.researchers, rc.publications);
    const YearInterval train{2007, 2009}, test{2010, 2012};
    auto s = split_by_year(c, train, test);
    std::multiset<std::string> expect, got;
    for (const auto& p : c.publications())
      if (train.contains(p.year) || test.contains(p.year)) expect.insert(p.pub_id);
    for (const auto& p : s.train.publications()) {
      CHECK(train.contains(p.year));
      got.insert(p.pub_id);
    }
    for (const auto& p : s.test.publications()) {
      CHECK(test.contains(p.year));
      got.insert(p.pub_id);
    }
    CHECK(got == expect);
    CHECK(s.dropped == c.publications().size() - expect.size());
    CHECK(s.train.researchers() == c.researchers());
    CHECK(s.test.researchers() == c.researchers());
  }
}

TEST_CASE("property: write then load yields an equal corpus") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto rc = testing::random_corpus(rng, 15, 6);
    const Corpus c(rc.researchers, rc.publications);
    auto dir = testing::scratch_dir("roundtrip");
    write_corpus(c, dir);
    const Corpus back = load_corpus(dir / "researchers.jsonl", dir / "publications.jsonl");
    CHECK(back == c);
    CHECK(researchers_to_jsonl(back) == researchers_to_jsonl(c));
    CHECK(publications_to_jsonl(back) == publications_to_jsonl(c));
  }
}

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace collab {

using ResearcherIndex = std::size_t;
using SchoolIndex = std::size_t;
using JournalIndex = std::size_t;

struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::string journal;               // may be empty
  std::vector<std::string> authors;  // sorted, unique

  bool operator==(const PublicationRecord&) const = default;
};

struct Researcher {
  std::string researcher_id;
  std::vector<std::string> schools;    // sorted, unique, nonempty
  std::vector<std::string> faculties;  // sorted, unique, nonempty

  bool operator==(const Researcher&) const = default;
};

/// Inclusive calendar-year range.
struct YearInterval {
  int first = 0;
  int last = 0;

  bool contains(int year) const { return first <= year && year <= last; }
  bool overlaps(const YearInterval& o) const { return first <= o.last && o.first <= last; }
};

/// School code -> faculty code and full name, as listed in organisations.csv.
class OrganisationTable {
 public:
  struct Entry {
    std::string faculty;
    std::string name;
  };

  static OrganisationTable load(const std::filesystem::path& path);

  void add(std::string school, std::string faculty, std::string name);
  const Entry* find(const std::string& school) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

struct LoadOptions {
  int min_year = 1900;
  int max_year = 2100;
  // When set, every researcher's school codes are checked against it.
  const OrganisationTable* organisations = nullptr;
};

/// A validated, immutable collection of researchers and their publications.
///
/// Researchers keep the order of the input file; that order is the dense
/// ResearcherIndex shared by every graph derived from this corpus (and by
/// both halves of a year split). Schools and journals are indexed in sorted
/// order.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::vector<Researcher> researchers, std::vector<PublicationRecord> publications);

  const std::vector<Researcher>& researchers() const { return researchers_; }
  const std::vector<PublicationRecord>& publications() const { return publications_; }
  const std::vector<std::string>& schools() const { return schools_; }
  const std::vector<std::string>& journals() const { return journals_; }

  std::size_t researcher_count() const { return researchers_.size(); }
  std::size_t school_count() const { return schools_.size(); }

  std::optional<ResearcherIndex> researcher_index(const std::string& id) const;
  std::optional<SchoolIndex> school_index(const std::string& code) const;
  std::optional<JournalIndex> journal_index(const std::string& name) const;

  /// School indices of researcher i, sorted.
  const std::vector<SchoolIndex>& schools_of(ResearcherIndex i) const { return school_ids_[i]; }

  /// Author indices of publication p, sorted.
  const std::vector<ResearcherIndex>& authors_of(std::size_t p) const { return author_ids_[p]; }

  /// Same cohort, different publication list.
  Corpus with_publications(std::vector<PublicationRecord> publications) const;

  bool operator==(const Corpus& o) const {
    return researchers_ == o.researchers_ && publications_ == o.publications_;
  }

 private:
  std::vector<Researcher> researchers_;
  std::vector<PublicationRecord> publications_;
  std::vector<std::string> schools_;
  std::vector<std::string> journals_;
  std::unordered_map<std::string, ResearcherIndex> researcher_lookup_;
  std::vector<std::vector<SchoolIndex>> school_ids_;
  std::vector<std::vector<ResearcherIndex>> author_ids_;
};

Corpus load_corpus(const std::filesystem::path& researchers_path,
                   const std::filesystem::path& publications_path,
                   const LoadOptions& options = {});

/// Parse from in-memory JSONL text, `source` names the input in diagnostics.
std::vector<Researcher> parse_researchers(const std::string& text, const std::string& source = "researchers");
std::vector<PublicationRecord> parse_publications(const std::string& text, const LoadOptions& options = {},
                                                  const std::string& source = "publications");
Corpus make_corpus(std::vector<Researcher> researchers, std::vector<PublicationRecord> publications,
                   const LoadOptions& options = {});

std::string researchers_to_jsonl(const Corpus& corpus);
std::string publications_to_jsonl(const Corpus& corpus);

/// Writes researchers.jsonl and publications.jsonl into `dir`.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

struct YearSplit {
  Corpus train;
  Corpus test;
  std::size_t dropped = 0;  // publications outside both intervals
};

YearSplit split_by_year(const Corpus& corpus, YearInterval train_years, YearInterval test_years);

/// Parses "2008-2010" or "2011".
YearInterval parse_year_interval(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace collab

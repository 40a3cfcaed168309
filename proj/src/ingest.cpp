#include "collab/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "collab/error.hpp"

namespace collab {

using nlohmann::json;

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(line, line_no);
  }
}

json parse_line(const std::string& line, const std::string& source, std::size_t line_no) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw ValidationError(fmt::format("{}:{}: expected a JSON object", source, line_no));
    return j;
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("{}:{}: malformed record: {}", source, line_no, e.what()));
  }
}

std::string string_field(const json& j, const char* key, const std::string& source, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw ValidationError(fmt::format("{}:{}: field '{}' must be a string", source, line_no, key));
  return it->get<std::string>();
}

std::vector<std::string> string_array(const json& j, const char* key, const std::string& source,
                                      std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array())
    throw ValidationError(fmt::format("{}:{}: field '{}' must be an array of strings", source, line_no, key));
  std::vector<std::string> out;
  for (const auto& e : *it) {
    if (!e.is_string() || e.get_ref<const std::string&>().empty())
      throw ValidationError(fmt::format("{}:{}: field '{}' must hold nonempty strings", source, line_no, key));
    out.push_back(e.get<std::string>());
  }
  return out;
}

// Minimal RFC 4180 field splitter; enough for the organisations table.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << contents;
  if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

// ---------------------------------------------------------------------------
// OrganisationTable

OrganisationTable OrganisationTable::load(const std::filesystem::path& path) {
  OrganisationTable table;
  const std::string text = read_file(path);
  bool header = true;
  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    auto f = split_csv_line(line);
    if (header) {
      header = false;
      if (!f.empty() && f[0] == "school") return;
    }
    if (f.size() < 2 || f[0].empty() || f[1].empty())
      throw ValidationError(fmt::format("{}:{}: expected school,faculty[,name]", path.string(), line_no));
    if (table.find(f[0]))
      throw ValidationError(fmt::format("{}:{}: duplicate school code '{}'", path.string(), line_no, f[0]));
    table.add(f[0], f[1], f.size() > 2 ? f[2] : std::string{});
  });
  return table;
}

void OrganisationTable::add(std::string school, std::string faculty, std::string name) {
  entries_[std::move(school)] = Entry{std::move(faculty), std::move(name)};
}

const OrganisationTable::Entry* OrganisationTable::find(const std::string& school) const {
  auto it = entries_.find(school);
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Corpus

Corpus::Corpus(std::vector<Researcher> researchers, std::vector<PublicationRecord> publications)
    : researchers_(std::move(researchers)), publications_(std::move(publications)) {
  std::set<std::string> schools;
  for (std::size_t i = 0; i < researchers_.size(); ++i) {
    auto& r = researchers_[i];
    if (r.researcher_id.empty()) throw ValidationError("researcher with empty researcher_id");
    r.schools = sorted_unique(std::move(r.schools));
    r.faculties = sorted_unique(std::move(r.faculties));
    if (r.schools.empty()) throw ValidationError(fmt::format("researcher '{}' has no school", r.researcher_id));
    if (r.faculties.empty()) throw ValidationError(fmt::format("researcher '{}' has no faculty", r.researcher_id));
    if (!researcher_lookup_.emplace(r.researcher_id, i).second)
      throw ValidationError(fmt::format("duplicate researcher_id '{}'", r.researcher_id));
    schools.insert(r.schools.begin(), r.schools.end());
  }
  schools_.assign(schools.begin(), schools.end());

  school_ids_.reserve(researchers_.size());
  for (const auto& r : researchers_) {
    std::vector<SchoolIndex> ids;
    for (const auto& s : r.schools) ids.push_back(*school_index(s));
    school_ids_.push_back(std::move(ids));
  }

  std::set<std::string> journals;
  std::set<std::string> seen_ids;
  std::vector<std::string> dangling;
  author_ids_.reserve(publications_.size());
  for (auto& p : publications_) {
    if (p.pub_id.empty()) throw ValidationError("publication with empty pub_id");
    if (!seen_ids.insert(p.pub_id).second) throw ValidationError(fmt::format("duplicate pub_id '{}'", p.pub_id));
    p.authors = sorted_unique(std::move(p.authors));
    if (p.authors.empty()) throw ValidationError(fmt::format("publication '{}' has no authors", p.pub_id));
    std::vector<ResearcherIndex> ids;
    for (const auto& a : p.authors) {
      auto it = researcher_lookup_.find(a);
      if (it == researcher_lookup_.end())
        dangling.push_back(fmt::format("{} -> {}", p.pub_id, a));
      else
        ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    author_ids_.push_back(std::move(ids));
    if (!p.journal.empty()) journals.insert(p.journal);
  }
  if (!dangling.empty())
    throw ValidationError(fmt::format("unresolved author references: {}", fmt::join(dangling, ", ")));
  journals_.assign(journals.begin(), journals.end());
}

std::optional<ResearcherIndex> Corpus::researcher_index(const std::string& id) const {
  auto it = researcher_lookup_.find(id);
  if (it == researcher_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<SchoolIndex> Corpus::school_index(const std::string& code) const {
  auto it = std::lower_bound(schools_.begin(), schools_.end(), code);
  if (it == schools_.end() || *it != code) return std::nullopt;
  return static_cast<SchoolIndex>(it - schools_.begin());
}

std::optional<JournalIndex> Corpus::journal_index(const std::string& name) const {
  auto it = std::lower_bound(journals_.begin(), journals_.end(), name);
  if (it == journals_.end() || *it != name) return std::nullopt;
  return static_cast<JournalIndex>(it - journals_.begin());
}

Corpus Corpus::with_publications(std::vector<PublicationRecord> publications) const {
  return Corpus(researchers_, std::move(publications));
}

// ---------------------------------------------------------------------------
// Parsing

std::vector<Researcher> parse_researchers(const std::string& text, const std::string& source) {
  std::vector<Researcher> out;
  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    json j = parse_line(line, source, line_no);
    Researcher r;
    r.researcher_id = string_field(j, "researcher_id", source, line_no);
    if (r.researcher_id.empty())
      throw ValidationError(fmt::format("{}:{}: researcher_id must be nonempty", source, line_no));
    r.schools = string_array(j, "schools", source, line_no);
    r.faculties = string_array(j, "faculties", source, line_no);
    if (r.schools.empty() || r.faculties.empty())
      throw ValidationError(fmt::format("{}:{}: schools and faculties must be nonempty", source, line_no));
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<PublicationRecord> parse_publications(const std::string& text, const LoadOptions& options,
                                                  const std::string& source) {
  std::vector<PublicationRecord> out;
  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    json j = parse_line(line, source, line_no);
    PublicationRecord p;
    p.pub_id = string_field(j, "pub_id", source, line_no);
    if (p.pub_id.empty()) throw ValidationError(fmt::format("{}:{}: pub_id must be nonempty", source, line_no));
    auto y = j.find("year");
    if (y == j.end() || !y->is_number_integer())
      throw ValidationError(fmt::format("{}:{}: field 'year' must be an integer", source, line_no));
    p.year = y->get<int>();
    if (p.year < options.min_year || p.year > options.max_year)
      throw ValidationError(fmt::format("{}:{}: year {} outside [{}, {}]", source, line_no, p.year,
                                        options.min_year, options.max_year));
    p.journal = string_field(j, "journal", source, line_no);
    p.authors = string_array(j, "authors", source, line_no);
    if (p.authors.empty()) throw ValidationError(fmt::format("{}:{}: authors must be nonempty", source, line_no));
    out.push_back(std::move(p));
  });
  return out;
}

Corpus make_corpus(std::vector<Researcher> researchers, std::vector<PublicationRecord> publications,
                   const LoadOptions& options) {
  for (const auto& p : publications) {
    if (p.year < options.min_year || p.year > options.max_year)
      throw ValidationError(fmt::format("publication '{}': year {} outside [{}, {}]", p.pub_id, p.year,
                                        options.min_year, options.max_year));
  }
  Corpus corpus(std::move(researchers), std::move(publications));
  if (options.organisations) {
    for (const auto& r : corpus.researchers()) {
      for (const auto& s : r.schools) {
        const auto* entry = options.organisations->find(s);
        if (!entry)
          throw ValidationError(
              fmt::format("researcher '{}': school '{}' not in organisation table", r.researcher_id, s));
        if (!std::binary_search(r.faculties.begin(), r.faculties.end(), entry->faculty))
          throw ValidationError(fmt::format("researcher '{}': school '{}' belongs to faculty '{}', not listed",
                                            r.researcher_id, s, entry->faculty));
      }
    }
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& researchers_path, const std::filesystem::path& publications_path,
                   const LoadOptions& options) {
  auto researchers = parse_researchers(read_file(researchers_path), researchers_path.string());
  auto publications = parse_publications(read_file(publications_path), options, publications_path.string());
  return make_corpus(std::move(researchers), std::move(publications), options);
}

std::string researchers_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& r : corpus.researchers()) {
    json j;
    j["researcher_id"] = r.researcher_id;
    j["schools"] = r.schools;
    j["faculties"] = r.faculties;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string publications_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& p : corpus.publications()) {
    json j;
    j["pub_id"] = p.pub_id;
    j["year"] = p.year;
    j["journal"] = p.journal;
    j["authors"] = p.authors;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  write_file(dir / "researchers.jsonl", researchers_to_jsonl(corpus));
  write_file(dir / "publications.jsonl", publications_to_jsonl(corpus));
}

// ---------------------------------------------------------------------------
// Year split

YearSplit split_by_year(const Corpus& corpus, YearInterval train_years, YearInterval test_years) {
  if (train_years.first > train_years.last || test_years.first > test_years.last)
    throw ValidationError("year interval with first > last");
  if (train_years.overlaps(test_years))
    throw ValidationError(fmt::format("train years {}-{} overlap test years {}-{}", train_years.first,
                                      train_years.last, test_years.first, test_years.last));
  std::vector<PublicationRecord> train, test;
  std::size_t dropped = 0;
  for (const auto& p : corpus.publications()) {
    if (train_years.contains(p.year))
      train.push_back(p);
    else if (test_years.contains(p.year))
      test.push_back(p);
    else
      ++dropped;
  }
  return YearSplit{corpus.with_publications(std::move(train)), corpus.with_publications(std::move(test)), dropped};
}

YearInterval parse_year_interval(const std::string& text) {
  auto bad = [&] { return ValidationError(fmt::format("invalid year interval '{}' (expected YYYY or YYYY-YYYY)", text)); };
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return std::stoi(s);
  };
  auto dash = text.find('-');
  YearInterval iv;
  if (dash == std::string::npos) {
    iv.first = iv.last = to_int(text);
  } else {
    iv.first = to_int(text.substr(0, dash));
    iv.last = to_int(text.substr(dash + 1));
  }
  if (iv.first > iv.last) throw bad();
  return iv;
}

}  // namespace collab

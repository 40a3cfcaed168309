#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "collab/ingest.hpp"

namespace collab {

struct SynthParams {
  std::uint64_t seed = 42;
  std::size_t schools = 20;
  std::size_t researchers = 300;
  std::size_t journals = 40;
  std::size_t planted_new_links = 12;
  YearInterval train_years{2008, 2010};
  YearInterval test_years{2011, 2013};
};

/// A generated corpus. Schools are grouped into faculties, each faculty owns
/// a block of journals, school sizes are skewed. Training-period
/// collaboration follows a fixed school-level graph; the test period repeats
/// it and adds exactly the planted school pairs, so E^new equals `planted`.
/// Every planted pair has a researcher pair at distance 2 in the training
/// co-authorship graph that also shares a journal.
struct SynthCorpus {
  std::vector<Researcher> researchers;
  std::vector<PublicationRecord> publications;
  OrganisationTable organisations;
  std::vector<std::pair<std::string, std::string>> planted;  // school codes, sorted

  Corpus corpus() const { return Corpus(researchers, publications); }
};

/// Deterministic in `params`. Throws ValidationError on infeasible sizes.
SynthCorpus generate_synthetic(const SynthParams& params);

/// Writes researchers.jsonl, publications.jsonl, organisations.csv and
/// planted.csv into `dir`.
void write_synthetic(const SynthCorpus& synth, const std::filesystem::path& dir);

}  // namespace collab

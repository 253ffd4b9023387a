#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace confprio {

struct SyntheticOptions {
  std::uint64_t seed = 42;
  int n_conferences = 50;
  int first_year = 2000;
  int last_year = 2016;
  double biennial_fraction = 0.25;
  // Conferences whose last edition lies well before last_year.
  double discontinued_fraction = 0.2;
  double rated_fraction = 0.4;
  // Conferences that move between countries; the rest stay at one venue.
  double international_fraction = 0.5;
  // Conferences whose titles never name a venue.
  double unlocated_fraction = 0.15;
  double cited_fraction = 0.7;
  // Events that carry an explicit "event" date besides the title.
  double explicit_date_fraction = 0.2;
  int max_entry_delay_months = 8;
  int author_pool = 400;
};

// Contents of the input files understood by ingest().
struct SyntheticFiles {
  std::string events;     // events.jsonl
  std::string papers;     // papers.jsonl
  std::string ratings;    // ratings.csv
  std::string citations;  // citations.jsonl

  friend bool operator==(const SyntheticFiles&, const SyntheticFiles&) = default;
};

// Deterministic for a given option set: the same seed yields byte-identical
// files. Every conference gets at least one event whose title carries a
// parseable date, and venues are drawn from names present in the shipped
// gazetteer. Throws std::invalid_argument for n_conferences < 1 or an empty
// year range.
SyntheticFiles generate_synthetic(const SyntheticOptions& options);

// Writes events.jsonl, papers.jsonl, ratings.csv and citations.jsonl.
void write_synthetic(const SyntheticFiles& files, const std::filesystem::path& dir);

}  // namespace confprio

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confprio/calendar.hpp"
#include "confprio/corpus.hpp"
#include "confprio/evaluation.hpp"
#include "confprio/scoring.hpp"
#include "confprio/title_parser.hpp"

namespace confprio {

// A*, A, B, C, Other -> 4, 3, 2, 1, 0
std::map<std::string, int> default_rating_class_map();

struct RunConfig {
  std::optional<CalendarDate> now;
  std::optional<int> eval_year;
  std::vector<Factor> factors{kAllFactors.begin(), kAllFactors.end()};
  std::vector<int> cutoffs{kDefaultCutoffs.begin(), kDefaultCutoffs.end()};
  std::map<std::string, int> rating_class_map = default_rating_class_map();

  std::filesystem::path events_path;
  std::filesystem::path papers_path;        // optional
  std::filesystem::path author_counts_path; // optional, wins over papers
  std::filesystem::path ratings_path;       // optional
  std::filesystem::path citations_path;     // optional
  std::filesystem::path gazetteer_path;     // optional
  std::filesystem::path output_dir = ".";

  // Throws std::invalid_argument naming the offending key.
  void validate() const;
};

struct IngestStats {
  std::size_t events = 0;
  std::size_t dates_from_title = 0;
  std::size_t countries_from_title = 0;
  std::size_t undated_events = 0;
  std::size_t unrankable_conferences = 0;
  std::size_t papers = 0;
  std::size_t ratings = 0;
  std::size_t citation_rows = 0;
};

struct IngestResult {
  Corpus corpus;
  // One line per skipped row or notable condition, "source:line: reason".
  std::vector<std::string> warnings;
  IngestStats stats;
};

// Input streams for ingestion. Only `events` is required.
struct IngestSources {
  struct Source {
    std::istream* stream = nullptr;
    std::string name;
  };
  Source events;
  Source papers;
  Source author_counts;
  Source ratings;
  Source citations;
  const Gazetteer* gazetteer = nullptr;
  std::map<std::string, int> rating_class_map = default_rating_class_map();
};

// Throws InputError for malformed lines and duplicate event keys; unknown
// conferences, events, and rating classes are skipped with a warning.
IngestResult ingest(const IngestSources& sources);
IngestResult ingest(const RunConfig& config);

}  // namespace confprio

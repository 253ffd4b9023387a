#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confprio/calendar.hpp"
#include "confprio/corpus.hpp"

namespace confprio {

enum class Factor { baseline, rating, internationality, discontinued, citation, prominence };

inline constexpr std::array<Factor, 6> kAllFactors = {
    Factor::baseline,     Factor::rating,   Factor::internationality,
    Factor::discontinued, Factor::citation, Factor::prominence};

std::string_view to_string(Factor f);
std::optional<Factor> factor_from_string(std::string_view name);

struct FactorWeights {
  int delay_base = 0;            // w_delay, 0..4
  double rating = 1.0;           // w_r, [1,2]
  double internationality = 1.0; // w_i, [1,2]
  double discontinued = 1.0;     // w_d, (0,1]
  double citation = 1.0;         // w_cit, [1,2]
  double prominence = 1.0;       // w_prm, [1,2]
  int delta = 0;                 // months overdue; negative when not yet due

  double weight(Factor f) const;
};

// Expected entry month of the next edition: the usual event month in the
// year of the last entry plus the usual interval, shifted by the usual
// entry delay.
CalendarDate expected_next_entry(const ConferenceProfile& profile);

int delay(const ConferenceProfile& profile, CalendarDate now);

// 4 for 0..3 months overdue, 3 for 4..7, 2 for 8..11, 1 beyond, 0 if not due.
int delay_base_score(int delta);

// --- Raw factor values and their normalized weights.
//
// The *_value functions read every event of the conference they are given;
// ScoringContext feeds them conferences already restricted to what is
// visible at NOW. A conference whose raw value is 0 (or whose maximum is 0)
// is uncovered and gets the neutral weight 1.

// Mean of the conference's rating values, 0 when unrated.
double rating_value(const Conference& c);
double rating_score(const Conference& c, double max_r);

// Number of distinct known venue countries.
int internationality_value(const Conference& c);
double internationality_score(const Conference& c, int max_i);

double discontinued_score(const ConferenceProfile& profile, CalendarDate now);

// Sum over event years before now.year of citations per paper. Events with
// zero papers are skipped.
double citation_value(const Conference& c, CalendarDate now);
double citation_score(const Conference& c, CalendarDate now, double max_cit);

inline constexpr std::int64_t kProminenceMinPapers = 10;

// Mean over events with at least kProminenceMinPapers papers of the mean
// prior record count of their authors at now.year - 1. Events without
// authors are skipped.
double prominence_value(const Conference& c, const Corpus& corpus, CalendarDate now);
double prominence_score(const Conference& c, const Corpus& corpus, CalendarDate now,
                        double max_prm);

// How the baseline orders conferences by their raw delay.
enum class BaselineOrder {
  // Due conferences by ascending delay, then not-yet-due ones by ascending
  // distance to their expected entry.
  due_first,
  // Largest delay first.
  most_overdue_first,
};

struct RankOptions {
  BaselineOrder baseline_order = BaselineOrder::due_first;
};

struct CorpusMaxima {
  double rating = 0.0;
  int internationality = 0;
  double citation = 0.0;
  double prominence = 0.0;
};

// Per-conference profiles and weights for one corpus snapshot at one date.
// Maxima are taken over the conferences rankable at `now`. Rating and
// citation weights are normalized on exact fractions, so scaling all
// ratings or all citation counts by a positive integer leaves the weights
// bit-identical.
class ScoringContext {
 public:
  struct Entry {
    ConferenceProfile profile;
    FactorWeights weights;
  };

  ScoringContext(const Corpus& corpus, CalendarDate now);

  CalendarDate now() const { return now_; }
  const CorpusMaxima& maxima() const { return maxima_; }
  const std::map<std::string, Entry>& entries() const { return entries_; }
  const Entry* find(const std::string& conf_key) const;

 private:
  CalendarDate now_;
  CorpusMaxima maxima_;
  std::map<std::string, Entry> entries_;
};

// Factor score: w_delay * weight for the boosting and penalizing factors;
// the raw delay for the baseline.
double score(const FactorWeights& w, Factor factor);

struct RankedEntry {
  std::string conf_key;
  double score = 0.0;
  int rank = 0;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

// Scores are non-increasing by rank; ties are ordered by conf_key.
struct RankedList {
  CalendarDate now;
  Factor factor = Factor::baseline;
  std::vector<RankedEntry> entries;
};

RankedList rank(const ScoringContext& ctx, Factor factor, const RankOptions& options = {});
RankedList rank(const Corpus& corpus, CalendarDate now, Factor factor,
                const RankOptions& options = {});

}  // namespace confprio

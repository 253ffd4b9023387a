#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "confprio/calendar.hpp"

namespace confprio {

// One edition of a conference series (one proceedings record).
struct Event {
  std::string event_key;
  std::string conf_key;
  // Absent when neither the input nor the title yielded a date. Such events
  // keep their papers and citations but never enter profile derivation.
  std::optional<CalendarDate> event_date;
  // Earliest modification date of the proceedings record.
  CalendarDate entry_date;
  std::optional<std::string> country;  // ISO-3166 alpha-2
  std::int64_t paper_count = 0;
  std::set<std::string> author_ids;
  std::map<int, std::int64_t> citations_per_year;

  std::size_t author_count() const { return author_ids.size(); }
  bool visible_at(CalendarDate now) const { return entry_date <= now; }
};

struct Conference {
  std::string conf_key;
  std::vector<Event> events;
  // One numeric rating per rating list the conference appears in.
  std::vector<int> rating_values;

  bool has_dated_event() const;
  bool rankable_at(CalendarDate now) const;
  // Orders events by event date (undated first), then entry date, then key.
  void sort_events();
};

// p(a, y): number of records of author a published up to and including year y.
class AuthorRecordCounts {
 public:
  // Records a cumulative count. Throws InputError if the author's series
  // would stop being non-decreasing in year.
  void set_cumulative(const std::string& author, int year, std::int64_t count);
  // Replaces the author's whole series.
  void replace_author(const std::string& author, std::map<int, std::int64_t> series);

  // Cumulative count at the latest recorded year <= year, 0 if none.
  std::int64_t records_until(const std::string& author, int year) const;

  // Copy holding only years strictly before `year`.
  AuthorRecordCounts truncated_before(int year) const;

  const std::map<std::string, std::map<int, std::int64_t>>& series() const { return series_; }
  bool empty() const { return series_.empty(); }

  // Builds cumulative counts from per-(author, year) record counts.
  static AuthorRecordCounts from_yearly(
      const std::map<std::string, std::map<int, std::int64_t>>& yearly);

 private:
  std::map<std::string, std::map<int, std::int64_t>> series_;
};

struct Corpus {
  std::map<std::string, Conference> conferences;
  AuthorRecordCounts author_record_counts;

  const Conference* find(const std::string& conf_key) const;
};

// Characteristic parameters of a conference at a given date.
struct ConferenceProfile {
  int delta_year = 1;   // typical number of years between editions
  int mode_month = 1;   // most frequent event month
  int delta_month = 0;  // typical months between an event and its entry
  CalendarDate last_entry_date;

  friend bool operator==(const ConferenceProfile&, const ConferenceProfile&) = default;
};

// Median of a non-empty list; an even count averages the middle pair and
// rounds half up. Throws DomainError on an empty list.
int median_int(std::vector<int> values);

// Number of most recent events used for delta_year and delta_month.
inline constexpr std::size_t kProfileWindow = 5;

// Derives the profile from events that carry an event date and were entered
// at or before `now`. Throws UnrankableConference when there is none.
ConferenceProfile derive_profile(const Conference& c, CalendarDate now);

std::optional<ConferenceProfile> try_derive_profile(const Conference& c, CalendarDate now);

}  // namespace confprio

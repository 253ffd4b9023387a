#include "confprio/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include "confprio/errors.hpp"

namespace confprio {

bool Conference::has_dated_event() const {
  return std::any_of(events.begin(), events.end(),
                     [](const Event& e) { return e.event_date.has_value(); });
}

bool Conference::rankable_at(CalendarDate now) const {
  return std::any_of(events.begin(), events.end(), [&](const Event& e) {
    return e.event_date.has_value() && e.visible_at(now);
  });
}

void Conference::sort_events() {
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return std::tie(a.event_date, a.entry_date, a.event_key) <
           std::tie(b.event_date, b.entry_date, b.event_key);
  });
}

void AuthorRecordCounts::set_cumulative(const std::string& author, int year,
                                        std::int64_t count) {
  if (count < 0) throw InputError("negative record count for author " + author);
  auto& s = series_[author];
  auto next = s.upper_bound(year);
  if (next != s.end() && next->second < count) {
    throw InputError("record counts of author " + author + " decrease after year " +
                     std::to_string(year));
  }
  auto it = s.lower_bound(year);
  if (it != s.begin() && std::prev(it)->second > count) {
    throw InputError("record counts of author " + author + " decrease at year " +
                     std::to_string(year));
  }
  s[year] = count;
}

void AuthorRecordCounts::replace_author(const std::string& author,
                                        std::map<int, std::int64_t> series) {
  series_.erase(author);
  for (const auto& [year, count] : series) set_cumulative(author, year, count);
}

std::int64_t AuthorRecordCounts::records_until(const std::string& author, int year) const {
  auto a = series_.find(author);
  if (a == series_.end()) return 0;
  auto it = a->second.upper_bound(year);
  if (it == a->second.begin()) return 0;
  return std::prev(it)->second;
}

AuthorRecordCounts AuthorRecordCounts::truncated_before(int year) const {
  AuthorRecordCounts out;
  for (const auto& [author, s] : series_) {
    std::map<int, std::int64_t> kept(s.begin(), s.lower_bound(year));
    if (!kept.empty()) out.series_.emplace(author, std::move(kept));
  }
  return out;
}

AuthorRecordCounts AuthorRecordCounts::from_yearly(
    const std::map<std::string, std::map<int, std::int64_t>>& yearly) {
  AuthorRecordCounts out;
  for (const auto& [author, per_year] : yearly) {
    std::int64_t running = 0;
    auto& s = out.series_[author];
    for (const auto& [year, n] : per_year) {
      running += n;
      s[year] = running;
    }
  }
  return out;
}

const Conference* Corpus::find(const std::string& conf_key) const {
  auto it = conferences.find(conf_key);
  return it == conferences.end() ? nullptr : &it->second;
}

int median_int(std::vector<int> values) {
  if (values.empty()) throw DomainError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  const long long sum = static_cast<long long>(values[n / 2 - 1]) + values[n / 2];
  return static_cast<int>(std::floor(static_cast<double>(sum) / 2.0 + 0.5));
}

std::optional<ConferenceProfile> try_derive_profile(const Conference& c, CalendarDate now) {
  std::vector<const Event*> visible;
  for (const auto& e : c.events) {
    if (e.event_date && e.visible_at(now)) visible.push_back(&e);
  }
  if (visible.empty()) return std::nullopt;
  std::sort(visible.begin(), visible.end(), [](const Event* a, const Event* b) {
    return std::tie(*a->event_date, a->entry_date, a->event_key) <
           std::tie(*b->event_date, b->entry_date, b->event_key);
  });

  const std::size_t window = std::min(kProfileWindow, visible.size());
  std::span<const Event* const> recent(visible.end() - static_cast<std::ptrdiff_t>(window),
                                       visible.end());

  ConferenceProfile p;

  if (recent.size() >= 2) {
    std::vector<int> gaps;
    for (std::size_t i = 1; i < recent.size(); ++i) {
      gaps.push_back(recent[i]->event_date->year() - recent[i - 1]->event_date->year());
    }
    // Several editions in one year would give a zero interval.
    p.delta_year = std::max(1, median_int(std::move(gaps)));
  } else {
    p.delta_year = 1;
  }

  std::array<int, 13> month_counts{};
  for (const Event* e : visible) ++month_counts[e->event_date->month()];
  p.mode_month = 1;
  for (int m = 2; m <= 12; ++m) {
    if (month_counts[m] > month_counts[p.mode_month]) p.mode_month = m;
  }

  std::vector<int> delays;
  for (const Event* e : recent) {
    delays.push_back(std::max(0, diff_months(e->entry_date, *e->event_date)));
  }
  p.delta_month = median_int(std::move(delays));

  const int last_event_year = visible.back()->event_date->year();
  std::optional<CalendarDate> last_entry;
  for (const Event* e : visible) {
    if (e->event_date->year() == last_event_year &&
        (!last_entry || *last_entry < e->entry_date)) {
      last_entry = e->entry_date;
    }
  }
  p.last_entry_date = *last_entry;
  return p;
}

ConferenceProfile derive_profile(const Conference& c, CalendarDate now) {
  auto p = try_derive_profile(c, now);
  if (!p) {
    throw UnrankableConference("conference " + c.conf_key + " has no dated event entered by " +
                               to_iso(now));
  }
  return *p;
}

}  // namespace confprio

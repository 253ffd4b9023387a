#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confprio/calendar.hpp"
#include "confprio/corpus.hpp"

namespace confprio::testing {

inline Event make_event(const std::string& conf, const std::string& key,
                        std::optional<CalendarDate> event_date, CalendarDate entry) {
  Event e;
  e.event_key = key;
  e.conf_key = conf;
  e.event_date = event_date;
  e.entry_date = entry;
  return e;
}

// Series of editions in `month` of each listed year, each entered
// `entry_delay` months after the event.
inline Conference make_series(const std::string& key, const std::vector<int>& years, int month,
                              int entry_delay) {
  Conference c;
  c.conf_key = key;
  for (int y : years) {
    const CalendarDate d(month, y);
    c.events.push_back(make_event(key, key + "/" + std::to_string(y), d, add_months(d, entry_delay)));
  }
  c.sort_events();
  return c;
}

inline std::vector<int> year_range(int from, int to, int step = 1) {
  std::vector<int> out;
  for (int y = from; y <= to; y += step) out.push_back(y);
  return out;
}

inline void add(Corpus& corpus, Conference c) {
  const std::string key = c.conf_key;
  corpus.conferences.emplace(key, std::move(c));
}

// Twenty conferences whose ideal 2016 ordering is recovered exactly by the
// discontinuation weight: ten active annual series (grades 2..4 every
// month), five series that stopped in 2011 but were entered two years late,
// and five series that ended in 2000 (grade 1 for both groups).
inline Corpus discontinued_ideal_corpus() {
  Corpus corpus;
  for (int i = 0; i < 10; ++i) {
    add(corpus, make_series("active" + std::to_string(i), year_range(2009, 2016), 1, 0));
  }
  for (int i = 0; i < 5; ++i) {
    add(corpus, make_series("late" + std::to_string(i), year_range(2004, 2011), 6, 24));
  }
  for (int i = 0; i < 5; ++i) {
    add(corpus, make_series("old" + std::to_string(i), year_range(1990, 2000), 3, 0));
  }
  return corpus;
}

}  // namespace confprio::testing

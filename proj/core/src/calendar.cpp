#include "confprio/calendar.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "confprio/errors.hpp"

namespace confprio {

CalendarDate::CalendarDate(int month, int year) : month_(month), year_(year) {
  if (month < 1 || month > 12) {
    throw InvalidDate("month out of range: " + std::to_string(month));
  }
  if (year < kMinYear) {
    throw InvalidDate("year before " + std::to_string(kMinYear) + ": " +
                      std::to_string(year));
  }
}

int diff_months(CalendarDate later, CalendarDate earlier) {
  return (later.year() - earlier.year()) * 12 + (later.month() - earlier.month());
}

CalendarDate add_months(CalendarDate d, int delta) {
  // Work on a zero-based month index so that negative deltas floor correctly.
  const long long index = static_cast<long long>(d.year()) * 12 + (d.month() - 1) + delta;
  long long year = index / 12;
  long long month0 = index % 12;
  if (month0 < 0) {
    month0 += 12;
    year -= 1;
  }
  if (year < kMinYear) {
    throw InvalidDate("date arithmetic underflows below " + std::to_string(kMinYear));
  }
  return CalendarDate(static_cast<int>(month0) + 1, static_cast<int>(year));
}

std::string to_iso(CalendarDate d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d", d.year(), d.month());
  return buf;
}

CalendarDate parse_iso(std::string_view text) {
  auto digit = [&](std::size_t i) {
    return std::isdigit(static_cast<unsigned char>(text[i])) != 0;
  };
  if (text.size() != 7 || text[4] != '-' || !digit(0) || !digit(1) || !digit(2) ||
      !digit(3) || !digit(5) || !digit(6)) {
    throw InvalidDate("expected YYYY-MM, got '" + std::string(text) + "'");
  }
  int year = 0;
  for (std::size_t i = 0; i < 4; ++i) year = year * 10 + (text[i] - '0');
  const int month = (text[5] - '0') * 10 + (text[6] - '0');
  return CalendarDate(month, year);
}

std::ostream& operator<<(std::ostream& os, CalendarDate d) { return os << to_iso(d); }

}  // namespace confprio

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace confprio {

inline constexpr int kMinYear = 1900;

// A (month, year) pair. Ordering is lexicographic on (year, month).
class CalendarDate {
 public:
  CalendarDate() = default;
  // Throws InvalidDate unless month is in 1..12 and year >= kMinYear.
  CalendarDate(int month, int year);

  int month() const { return month_; }
  int year() const { return year_; }

  friend constexpr std::strong_ordering operator<=>(const CalendarDate& a,
                                                    const CalendarDate& b) {
    if (auto c = a.year_ <=> b.year_; c != 0) return c;
    return a.month_ <=> b.month_;
  }
  friend constexpr bool operator==(const CalendarDate&, const CalendarDate&) = default;

 private:
  int month_ = 1;
  int year_ = kMinYear;
};

// Signed number of months from `earlier` to `later`.
int diff_months(CalendarDate later, CalendarDate earlier);

// Throws InvalidDate when the result would fall before kMinYear.
CalendarDate add_months(CalendarDate d, int delta);

// "YYYY-MM"
std::string to_iso(CalendarDate d);
// Strict "YYYY-MM" parser; throws InvalidDate on anything else.
CalendarDate parse_iso(std::string_view text);

std::ostream& operator<<(std::ostream& os, CalendarDate d);

}  // namespace confprio

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "confprio/calendar.hpp"

namespace confprio {

// Place names mapped to ISO-3166 alpha-2 codes. Names are matched
// case-insensitively on whole words; punctuation inside a name is treated
// as a word break, so "U.S.A." and "u s a" are the same key.
class Gazetteer {
 public:
  enum class Kind { country, city };

  // Line format: kind<TAB>name<TAB>code, '#' starts a comment line.
  // Throws InputError with file:line on a malformed line.
  static Gazetteer parse(std::istream& in, std::string_view source = "<gazetteer>");
  static Gazetteer load(const std::filesystem::path& path);

  // First entry for a name wins.
  void add(Kind kind, std::string_view name, std::string_view code);

  std::optional<std::string> lookup(Kind kind, std::string_view name) const;
  std::size_t size() const { return countries_.size() + cities_.size(); }
  std::size_t max_words() const { return max_words_; }

 private:
  const std::unordered_map<std::string, std::string>& table(Kind kind) const {
    return kind == Kind::country ? countries_ : cities_;
  }

  std::unordered_map<std::string, std::string> countries_;
  std::unordered_map<std::string, std::string> cities_;
  std::size_t max_words_ = 0;
};

// Event month/year from a proceedings title: the last English month name
// (full, three-letter, or "Sept") followed within 12 characters by a year
// in 1900..2100. For ranges such as "August 30 - September 2, 2017" the
// starting month is returned.
std::optional<CalendarDate> parse_event_date(std::string_view title);

// Country of the last whole-word country match, else of the last city match.
// A name nested inside a longer matched name ("Mexico" in "New Mexico") is
// ignored.
std::optional<std::string> parse_country(std::string_view title, const Gazetteer& g);

}  // namespace confprio

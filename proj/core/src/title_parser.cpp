#include "confprio/title_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <vector>

#include "confprio/errors.hpp"

namespace confprio {
namespace {

bool is_word_byte(unsigned char ch) { return std::isalnum(ch) != 0 || ch >= 0x80; }
bool is_alpha(unsigned char ch) { return std::isalpha(ch) != 0; }
bool is_digit(unsigned char ch) { return std::isdigit(ch) != 0; }
char lower(unsigned char ch) { return static_cast<char>(std::tolower(ch)); }

struct Token {
  std::string text;  // lowercased
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_word_byte(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    Token t;
    t.begin = i;
    while (i < s.size() && is_word_byte(static_cast<unsigned char>(s[i]))) {
      t.text.push_back(lower(static_cast<unsigned char>(s[i])));
      ++i;
    }
    t.end = i;
    out.push_back(std::move(t));
  }
  return out;
}

std::string normalize_name(std::string_view name, std::size_t* words = nullptr) {
  std::string key;
  auto tokens = tokenize(name);
  for (const auto& t : tokens) {
    if (!key.empty()) key.push_back(' ');
    key += t.text;
  }
  if (words) *words = tokens.size();
  return key;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

constexpr std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

// 1..12 for a month word, 0 otherwise.
int month_from_word(std::string_view w) {
  for (std::size_t i = 0; i < kMonthNames.size(); ++i) {
    if (w == kMonthNames[i] || w == kMonthNames[i].substr(0, 3)) return static_cast<int>(i) + 1;
  }
  if (w == "sept") return 9;
  return 0;
}

constexpr std::size_t kYearWindow = 12;

// Letters between a month and its year are only allowed as ordinal suffixes
// of a day number ("19th-23rd").
bool gap_allows_year(std::string_view gap) {
  for (std::size_t i = 0; i < gap.size(); ++i) {
    if (!is_alpha(static_cast<unsigned char>(gap[i]))) continue;
    if (i == 0 || !is_digit(static_cast<unsigned char>(gap[i - 1])) || i + 1 >= gap.size()) {
      return false;
    }
    const std::string suffix{lower(static_cast<unsigned char>(gap[i])),
                             lower(static_cast<unsigned char>(gap[i + 1]))};
    if (suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th") return false;
    if (i + 2 < gap.size() && is_alpha(static_cast<unsigned char>(gap[i + 2]))) return false;
    ++i;
  }
  return true;
}

// Year starting within kYearWindow characters after `from`, if any.
std::optional<int> year_after(std::string_view s, std::size_t from) {
  const std::size_t last_start = std::min(s.size(), from + kYearWindow);
  for (std::size_t j = from; j <= last_start && j + 4 <= s.size(); ++j) {
    if (j > 0 && is_digit(static_cast<unsigned char>(s[j - 1]))) continue;
    bool four = true;
    for (std::size_t k = j; k < j + 4; ++k) four = four && is_digit(static_cast<unsigned char>(s[k]));
    if (!four) continue;
    if (j + 4 < s.size() && is_digit(static_cast<unsigned char>(s[j + 4]))) continue;
    if (!gap_allows_year(s.substr(from, j - from))) return std::nullopt;
    const int year = (s[j] - '0') * 1000 + (s[j + 1] - '0') * 100 + (s[j + 2] - '0') * 10 +
                     (s[j + 3] - '0');
    if (year >= 1900 && year <= 2100) return year;
  }
  return std::nullopt;
}

bool dash_before(std::string_view s, std::size_t pos) {
  if (pos < 3) return false;
  const auto d = s.substr(pos - 3, 3);
  return d == "\xE2\x80\x93" || d == "\xE2\x80\x94";
}

// Text between two months of a range: optional day number, a dash, spaces.
bool is_range_link(std::string_view gap) {
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < gap.size() && (gap[i] == ' ' || gap[i] == '.' || gap[i] == ',')) ++i;
  };
  skip_spaces();
  std::size_t digits = 0;
  while (i < gap.size() && is_digit(static_cast<unsigned char>(gap[i]))) {
    ++i;
    ++digits;
  }
  if (digits > 2) return false;
  skip_spaces();
  if (gap.substr(i, 1) == "-") {
    i += 1;
  } else if (gap.substr(i, 3) == "\xE2\x80\x93" || gap.substr(i, 3) == "\xE2\x80\x94") {
    i += 3;  // en dash, em dash
  } else {
    return false;
  }
  skip_spaces();
  return i == gap.size();
}

}  // namespace

Gazetteer Gazetteer::parse(std::istream& in, std::string_view source) {
  Gazetteer g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    auto fail = [&](const std::string& why) {
      throw InputError(std::string(source) + ":" + std::to_string(lineno) + ": " + why);
    };
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      fail("expected kind<TAB>name<TAB>code");
    }
    const std::string kind = trim(std::string_view(line).substr(0, t1));
    const std::string name = trim(std::string_view(line).substr(t1 + 1, t2 - t1 - 1));
    const std::string code = trim(std::string_view(line).substr(t2 + 1));
    if (code.size() != 2 || !std::isupper(static_cast<unsigned char>(code[0])) ||
        !std::isupper(static_cast<unsigned char>(code[1]))) {
      fail("country code must be two upper-case letters, got '" + code + "'");
    }
    if (normalize_name(name).empty()) fail("empty name");
    if (kind == "country") {
      g.add(Kind::country, name, code);
    } else if (kind == "city") {
      g.add(Kind::city, name, code);
    } else {
      fail("unknown kind '" + kind + "'");
    }
  }
  return g;
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open gazetteer");
  return parse(in, path.string());
}

void Gazetteer::add(Kind kind, std::string_view name, std::string_view code) {
  std::size_t words = 0;
  std::string key = normalize_name(name, &words);
  if (key.empty()) return;
  auto& t = kind == Kind::country ? countries_ : cities_;
  t.emplace(std::move(key), std::string(code));
  max_words_ = std::max(max_words_, words);
}

std::optional<std::string> Gazetteer::lookup(Kind kind, std::string_view name) const {
  const auto& t = table(kind);
  auto it = t.find(normalize_name(name));
  if (it == t.end()) return std::nullopt;
  return it->second;
}

std::optional<CalendarDate> parse_event_date(std::string_view title) {
  struct MonthHit {
    int month;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<MonthHit> months;
  std::size_t i = 0;
  while (i < title.size()) {
    if (!is_alpha(static_cast<unsigned char>(title[i]))) {
      ++i;
      continue;
    }
    const std::size_t b = i;
    std::string word;
    while (i < title.size() && is_alpha(static_cast<unsigned char>(title[i]))) {
      word.push_back(lower(static_cast<unsigned char>(title[i])));
      ++i;
    }
    // Reject words glued to digits or non-ASCII letters ("Mar2016x", "Märch").
    const bool bounded = (b == 0 || !is_word_byte(static_cast<unsigned char>(title[b - 1])) ||
                          dash_before(title, b)) &&
                         (i == title.size() || !is_word_byte(static_cast<unsigned char>(title[i])) ||
                          is_digit(static_cast<unsigned char>(title[i])));
    if (!bounded) continue;
    if (int m = month_from_word(word)) months.push_back({m, b, i});
  }

  for (auto it = months.rbegin(); it != months.rend(); ++it) {
    auto year = year_after(title, it->end);
    if (!year) continue;
    CalendarDate found(it->month, *year);
    auto prev = std::next(it);
    if (prev != months.rend() &&
        is_range_link(title.substr(prev->end, it->begin - prev->end))) {
      const int start_year = prev->month > it->month ? *year - 1 : *year;
      if (start_year >= kMinYear) found = CalendarDate(prev->month, start_year);
    }
    return found;
  }
  return std::nullopt;
}

std::optional<std::string> parse_country(std::string_view title, const Gazetteer& g) {
  struct Hit {
    std::size_t first;  // token index
    std::size_t last;   // one past
    Gazetteer::Kind kind;
    std::string code;
  };
  const auto tokens = tokenize(title);
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string key;
    for (std::size_t n = 1; n <= g.max_words() && i + n <= tokens.size(); ++n) {
      if (n > 1) key.push_back(' ');
      key += tokens[i + n - 1].text;
      for (auto kind : {Gazetteer::Kind::country, Gazetteer::Kind::city}) {
        if (auto code = g.lookup(kind, key)) hits.push_back({i, i + n, kind, *code});
      }
    }
  }

  auto nested = [&](const Hit& h) {
    return std::any_of(hits.begin(), hits.end(), [&](const Hit& o) {
      return o.first <= h.first && h.last <= o.last && (o.last - o.first) > (h.last - h.first);
    });
  };

  for (auto kind : {Gazetteer::Kind::country, Gazetteer::Kind::city}) {
    const Hit* best = nullptr;
    for (const auto& h : hits) {
      if (h.kind != kind || nested(h)) continue;
      if (!best || h.first > best->first || (h.first == best->first && h.last > best->last)) {
        best = &h;
      }
    }
    if (best) return best->code;
  }
  return std::nullopt;
}

}  // namespace confprio

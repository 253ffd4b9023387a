#include "confprio/synthetic.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "confprio/calendar.hpp"
#include "confprio/errors.hpp"

namespace confprio {
namespace {

struct Venue {
  std::string_view city;
  std::string_view country;  // as written in titles
};

constexpr std::array<Venue, 40> kVenues = {{
    {"Paris", "France"},          {"Trier", "Germany"},       {"Berlin", "Germany"},
    {"Hannover", "Germany"},      {"Pisa", "Italy"},          {"Florence", "Italy"},
    {"Rome", "Italy"},            {"Barcelona", "Spain"},     {"Madrid", "Spain"},
    {"Lisbon", "Portugal"},       {"London", "UK"},           {"Edinburgh", "United Kingdom"},
    {"Dublin", "Ireland"},        {"Amsterdam", "The Netherlands"},
    {"Vienna", "Austria"},        {"Zürich", "Switzerland"},  {"Prague", "Czech Republic"},
    {"Stockholm", "Sweden"},      {"Helsinki", "Finland"},    {"Copenhagen", "Denmark"},
    {"Oslo", "Norway"},           {"Warsaw", "Poland"},       {"Athens", "Greece"},
    {"Tokyo", "Japan"},           {"Tsukuba", "Japan"},       {"Seoul", "South Korea"},
    {"Beijing", "China"},         {"Singapore", "Singapore"}, {"Sydney", "Australia"},
    {"Melbourne", "Australia"},   {"Auckland", "New Zealand"},{"Toronto", "Canada"},
    {"Montreal", "Canada"},       {"Boston", "USA"},          {"Seattle", "USA"},
    {"Newark", "USA"},            {"São Paulo", "Brazil"},    {"Cape Town", "South Africa"},
    {"New Delhi", "India"},       {"Tel Aviv", "Israel"},
}};

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

constexpr std::array<std::string_view, 3> kRatingLists = {"core2008", "core2017", "rank2008"};
constexpr std::array<std::string_view, 5> kRatingClasses = {"A*", "A", "B", "C", "Other"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }

 private:
  std::mt19937_64 engine_;
};

std::string ordinal(int n) {
  const int mod100 = n % 100;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    if (n % 10 == 1) suffix = "st";
    if (n % 10 == 2) suffix = "nd";
    if (n % 10 == 3) suffix = "rd";
  }
  return std::to_string(n) + suffix;
}

std::string conference_key(int i) {
  std::ostringstream os;
  os << "conf";
  os.width(3);
  os.fill('0');
  os << i;
  return os.str();
}

}  // namespace

SyntheticFiles generate_synthetic(const SyntheticOptions& o) {
  if (o.n_conferences < 1) throw std::invalid_argument("n_conferences must be at least 1");
  if (o.first_year < kMinYear || o.last_year < o.first_year) {
    throw std::invalid_argument("invalid synthetic year range");
  }
  Rng rng(o.seed);
  std::ostringstream events, papers, ratings, citations;
  ratings << "conf_key,list_id,class\n";

  const int span = o.last_year - o.first_year;
  const int pool = std::max(1, o.author_pool);

  for (int i = 0; i < o.n_conferences; ++i) {
    const std::string conf = conference_key(i);
    const std::string acronym = "C" + std::to_string(i);
    const int interval = rng.chance(o.biennial_fraction) ? 2 : 1;
    const int month = rng.uniform(1, 12);
    const int base_delay = rng.uniform(0, std::max(0, o.max_entry_delay_months));

    int last_year = o.last_year - rng.uniform(0, interval - 1);
    if (rng.chance(o.discontinued_fraction) && span >= 6) {
      const int hi = std::max(o.first_year, o.last_year - 4 - interval);
      last_year = rng.uniform(std::min(o.first_year + 1, hi), hi);
    }
    const int max_steps = (last_year - o.first_year) / interval;
    const int first_year = last_year - interval * rng.uniform(0, max_steps);

    const bool unlocated = rng.chance(o.unlocated_fraction);
    const bool international = rng.chance(o.international_fraction);
    const Venue home = kVenues[static_cast<std::size_t>(rng.uniform(0, kVenues.size() - 1))];
    const bool cited = rng.chance(o.cited_fraction);

    int edition = 0;
    for (int year = first_year; year <= last_year; year += interval) {
      ++edition;
      const std::string event_key = conf + "/" + std::to_string(year);
      const CalendarDate event_date(month, year);
      const int delay = std::max(0, base_delay + rng.uniform(-1, 1));
      const CalendarDate entry = add_months(event_date, delay);

      std::string title = "Proceedings of the " + ordinal(edition) + " Conference " + acronym +
                          " (" + acronym + " " + std::to_string(year) + ")";
      if (!unlocated) {
        const Venue v = international
                            ? kVenues[static_cast<std::size_t>(rng.uniform(0, kVenues.size() - 1))]
                            : home;
        title += ", " + std::string(v.city);
        if (rng.chance(0.7)) title += ", " + std::string(v.country);
      }
      const int day = rng.uniform(1, 24);
      title += ", " + std::string(kMonths[static_cast<std::size_t>(month - 1)]) + " " +
               std::to_string(day) + "-" + std::to_string(day + rng.uniform(1, 4)) + ", " +
               std::to_string(year);

      const std::int64_t paper_count = rng.uniform(3, 60);
      const int n_authors = std::min<int>(static_cast<int>(paper_count) * 2, rng.uniform(2, 20));
      std::set<std::string> author_set;
      while (static_cast<int>(author_set.size()) < std::min(n_authors, pool)) {
        author_set.insert("a" + std::to_string(rng.uniform(0, pool - 1)));
      }
      const std::vector<std::string> authors(author_set.begin(), author_set.end());

      nlohmann::ordered_json ev;
      ev["event_key"] = event_key;
      ev["conf_key"] = conf;
      ev["title"] = title;
      ev["entry"] = to_iso(entry);
      if (rng.chance(o.explicit_date_fraction)) ev["event"] = to_iso(event_date);
      ev["paper_count"] = paper_count;
      ev["author_ids"] = authors;
      events << ev.dump() << '\n';

      for (std::int64_t p = 0; p < paper_count; ++p) {
        std::set<std::string> paper_authors;
        const int k = rng.uniform(1, 3);
        for (int a = 0; a < k; ++a) {
          paper_authors.insert(authors[static_cast<std::size_t>(rng.uniform(0, authors.size() - 1))]);
        }
        nlohmann::ordered_json rec;
        rec["record_key"] = event_key + "/p" + std::to_string(p);
        rec["author_ids"] = std::vector<std::string>(paper_authors.begin(), paper_authors.end());
        rec["year"] = year;
        papers << rec.dump() << '\n';
      }

      if (cited) {
        for (int y = year; y <= o.last_year; ++y) {
          const int count = rng.uniform(0, static_cast<int>(paper_count) * 3);
          if (count == 0) continue;
          nlohmann::ordered_json c;
          c["event_key"] = event_key;
          c["year"] = y;
          c["count"] = count;
          citations << c.dump() << '\n';
        }
      }
    }

    if (rng.chance(o.rated_fraction)) {
      for (auto list : kRatingLists) {
        if (!rng.chance(0.6)) continue;
        ratings << conf << ',' << list << ','
                << kRatingClasses[static_cast<std::size_t>(rng.uniform(0, kRatingClasses.size() - 1))]
                << '\n';
      }
    }
  }
  return {events.str(), papers.str(), ratings.str(), citations.str()};
}

void write_synthetic(const SyntheticFiles& files, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw InputError((dir / name).string() + ": cannot write file");
    out << content;
  };
  write("events.jsonl", files.events);
  write("papers.jsonl", files.papers);
  write("ratings.csv", files.ratings);
  write("citations.jsonl", files.citations);
}

}  // namespace confprio

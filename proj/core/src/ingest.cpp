#include "confprio/ingest.hpp"

#include <cctype>
#include <fstream>
#include <memory>
#include <istream>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "confprio/errors.hpp"

namespace confprio {
namespace {

using nlohmann::json;

class LineReader {
 public:
  LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

  // Next non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  std::string where() const { return name_ + ":" + std::to_string(lineno_); }
  [[noreturn]] void fail(const std::string& why) const { throw InputError(where() + ": " + why); }

 private:
  std::istream& in_;
  std::string name_;
  std::size_t lineno_ = 0;
};

bool is_key(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || std::iscntrl(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return true;
}

json parse_object(const std::string& line, const LineReader& r) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    r.fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) r.fail("expected a JSON object");
  return j;
}

std::string required_key(const json& j, const char* field, const LineReader& r) {
  auto it = j.find(field);
  if (it == j.end() || !it->is_string()) r.fail(std::string("missing string field '") + field + "'");
  std::string v = it->get<std::string>();
  if (!is_key(v)) r.fail(std::string("field '") + field + "' must be a non-empty token without spaces");
  return v;
}

CalendarDate date_field(const json& j, const char* field, const LineReader& r) {
  const auto& v = j.at(field);
  if (!v.is_string()) r.fail(std::string("field '") + field + "' must be a YYYY-MM string");
  try {
    return parse_iso(v.get<std::string>());
  } catch (const InvalidDate& e) {
    r.fail(std::string("field '") + field + "': " + e.what());
  }
}

std::int64_t count_field(const json& j, const char* field, const LineReader& r,
                         std::optional<std::int64_t> fallback = std::nullopt) {
  auto it = j.find(field);
  if (it == j.end()) {
    if (fallback) return *fallback;
    r.fail(std::string("missing field '") + field + "'");
  }
  if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
    r.fail(std::string("field '") + field + "' must be a non-negative integer");
  }
  return it->get<std::int64_t>();
}

int year_field(const json& j, const char* field, const LineReader& r) {
  const auto y = count_field(j, field, r);
  if (y < kMinYear || y > 9999) r.fail(std::string("field '") + field + "' is not a valid year");
  return static_cast<int>(y);
}

std::vector<std::string> author_list(const json& j, const LineReader& r) {
  std::vector<std::string> out;
  auto it = j.find("author_ids");
  if (it == j.end()) return out;
  if (!it->is_array()) r.fail("'author_ids' must be an array of strings");
  for (const auto& a : *it) {
    if (!a.is_string() || !is_key(a.get<std::string>())) {
      r.fail("'author_ids' must hold non-empty strings without spaces");
    }
    out.push_back(a.get<std::string>());
  }
  return out;
}

bool valid_country_code(const std::string& c) {
  return c.size() == 2 && std::isupper(static_cast<unsigned char>(c[0])) &&
         std::isupper(static_cast<unsigned char>(c[1]));
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, int> default_rating_class_map() {
  return {{"A*", 4}, {"A", 3}, {"B", 2}, {"C", 1}, {"Other", 0}};
}

void RunConfig::validate() const {
  if (events_path.empty()) throw std::invalid_argument("missing required key: events");
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    if (cutoffs[i] < 1) throw std::invalid_argument("cutoffs: values must be positive");
    if (i > 0 && cutoffs[i] <= cutoffs[i - 1]) {
      throw std::invalid_argument("cutoffs: values must be strictly increasing");
    }
  }
  for (const auto& [cls, value] : rating_class_map) {
    if (value < 0) throw std::invalid_argument("rating_class_map: negative value for " + cls);
  }
}

IngestResult ingest(const IngestSources& sources) {
  if (!sources.events.stream) throw std::invalid_argument("missing required key: events");
  IngestResult result;
  auto& corpus = result.corpus;
  std::map<std::string, std::string> event_owner;  // event_key -> conf_key

  {
    LineReader r(*sources.events.stream, sources.events.name);
    std::string line;
    while (r.next(line)) {
      const json j = parse_object(line, r);
      Event e;
      e.event_key = required_key(j, "event_key", r);
      e.conf_key = required_key(j, "conf_key", r);
      if (!j.contains("entry")) r.fail("missing field 'entry'");
      e.entry_date = date_field(j, "entry", r);
      std::string title;
      if (auto t = j.find("title"); t != j.end()) {
        if (!t->is_string()) r.fail("'title' must be a string");
        title = t->get<std::string>();
      }
      if (j.contains("event") && !j.at("event").is_null()) {
        e.event_date = date_field(j, "event", r);
      } else if (auto d = parse_event_date(title)) {
        e.event_date = d;
        ++result.stats.dates_from_title;
      }
      if (j.contains("country") && !j.at("country").is_null()) {
        const auto& c = j.at("country");
        if (!c.is_string() || !valid_country_code(c.get<std::string>())) {
          r.fail("'country' must be an ISO-3166 alpha-2 code");
        }
        e.country = c.get<std::string>();
      } else if (sources.gazetteer) {
        if (auto c = parse_country(title, *sources.gazetteer)) {
          e.country = c;
          ++result.stats.countries_from_title;
        }
      }
      e.paper_count = count_field(j, "paper_count", r, 0);
      for (auto& a : author_list(j, r)) e.author_ids.insert(std::move(a));

      if (!event_owner.emplace(e.event_key, e.conf_key).second) {
        r.fail("duplicate event_key '" + e.event_key + "'");
      }
      if (!e.event_date) ++result.stats.undated_events;
      auto& conf = corpus.conferences[e.conf_key];
      conf.conf_key = e.conf_key;
      conf.events.push_back(std::move(e));
      ++result.stats.events;
    }
  }

  auto find_event = [&](const std::string& event_key) -> Event* {
    auto owner = event_owner.find(event_key);
    if (owner == event_owner.end()) return nullptr;
    for (auto& e : corpus.conferences.at(owner->second).events) {
      if (e.event_key == event_key) return &e;
    }
    return nullptr;
  };

  if (sources.citations.stream) {
    LineReader r(*sources.citations.stream, sources.citations.name);
    std::string line;
    while (r.next(line)) {
      const json j = parse_object(line, r);
      const std::string key = required_key(j, "event_key", r);
      const int year = year_field(j, "year", r);
      const auto count = count_field(j, "count", r);
      Event* e = find_event(key);
      if (!e) {
        result.warnings.push_back(r.where() + ": unknown event_key '" + key + "', row skipped");
        continue;
      }
      e->citations_per_year[year] += count;
      ++result.stats.citation_rows;
    }
  }

  if (sources.ratings.stream) {
    LineReader r(*sources.ratings.stream, sources.ratings.name);
    std::string line;
    std::set<std::pair<std::string, std::string>> seen;
    bool first = true;
    while (r.next(line)) {
      std::vector<std::string> cols;
      std::size_t start = 0;
      while (true) {
        const auto comma = line.find(',', start);
        cols.push_back(trim(line.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (cols.size() != 3) r.fail("expected conf_key,list_id,class");
      if (first && cols[0] == "conf_key" && cols[1] == "list_id" && cols[2] == "class") {
        first = false;
        continue;
      }
      first = false;
      if (!is_key(cols[0]) || cols[1].empty()) r.fail("empty conf_key or list_id");
      auto conf = corpus.conferences.find(cols[0]);
      if (conf == corpus.conferences.end()) {
        result.warnings.push_back(r.where() + ": unknown conf_key '" + cols[0] + "', row skipped");
        continue;
      }
      auto cls = sources.rating_class_map.find(cols[2]);
      if (cls == sources.rating_class_map.end()) {
        result.warnings.push_back(r.where() + ": unknown rating class '" + cols[2] +
                                  "', row skipped");
        continue;
      }
      if (!seen.emplace(cols[0], cols[1]).second) {
        result.warnings.push_back(r.where() + ": second rating for " + cols[0] + " in list " +
                                  cols[1] + ", row skipped");
        continue;
      }
      conf->second.rating_values.push_back(cls->second);
      ++result.stats.ratings;
    }
  }

  std::map<std::string, std::map<int, std::int64_t>> yearly;
  if (sources.papers.stream) {
    LineReader r(*sources.papers.stream, sources.papers.name);
    std::string line;
    std::set<std::string> records;
    while (r.next(line)) {
      const json j = parse_object(line, r);
      const std::string key = required_key(j, "record_key", r);
      const int year = year_field(j, "year", r);
      const auto authors = author_list(j, r);
      if (!records.insert(key).second) {
        result.warnings.push_back(r.where() + ": duplicate record_key '" + key + "', row skipped");
        continue;
      }
      for (const auto& a : std::set<std::string>(authors.begin(), authors.end())) {
        ++yearly[a][year];
      }
      ++result.stats.papers;
    }
  }
  corpus.author_record_counts = AuthorRecordCounts::from_yearly(yearly);

  if (sources.author_counts.stream) {
    LineReader r(*sources.author_counts.stream, sources.author_counts.name);
    std::string line;
    std::map<std::string, std::map<int, std::int64_t>> given;
    while (r.next(line)) {
      const json j = parse_object(line, r);
      const std::string author = required_key(j, "author_id", r);
      const int year = year_field(j, "year", r);
      const auto count = count_field(j, "count", r);
      if (!given[author].emplace(year, count).second) {
        r.fail("duplicate count for author '" + author + "' in " + std::to_string(year));
      }
    }
    for (auto& [author, series] : given) {
      try {
        corpus.author_record_counts.replace_author(author, std::move(series));
      } catch (const InputError& e) {
        throw InputError(sources.author_counts.name + ": " + e.what());
      }
    }
  }

  for (auto& [key, conf] : corpus.conferences) {
    conf.sort_events();
    if (!conf.has_dated_event()) {
      ++result.stats.unrankable_conferences;
      result.warnings.push_back(sources.events.name + ": conference '" + key +
                                "' has no dated event and will not be ranked");
    }
  }
  return result;
}

IngestResult ingest(const RunConfig& config) {
  config.validate();
  std::vector<std::unique_ptr<std::ifstream>> files;
  auto open = [&](const std::filesystem::path& p, IngestSources::Source& s) {
    if (p.empty()) return;
    auto f = std::make_unique<std::ifstream>(p);
    if (!*f) throw InputError(p.string() + ": cannot open file");
    s.stream = f.get();
    s.name = p.string();
    files.push_back(std::move(f));
  };
  IngestSources sources;
  open(config.events_path, sources.events);
  open(config.papers_path, sources.papers);
  open(config.author_counts_path, sources.author_counts);
  open(config.ratings_path, sources.ratings);
  open(config.citations_path, sources.citations);
  std::optional<Gazetteer> gazetteer;
  if (!config.gazetteer_path.empty()) {
    gazetteer = Gazetteer::load(config.gazetteer_path);
    sources.gazetteer = &*gazetteer;
  }
  sources.rating_class_map = config.rating_class_map;
  return ingest(sources);
}

}  // namespace confprio

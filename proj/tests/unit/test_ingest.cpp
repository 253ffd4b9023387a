#include <sstream>

#include "doctest.h"

#include "confprio/errors.hpp"
#include "confprio/ingest.hpp"

using namespace confprio;

namespace {

struct Inputs {
  std::istringstream events, papers, author_counts, ratings, citations;
  Gazetteer gazetteer;

  IngestResult run() {
    IngestSources s;
    s.events = {&events, "events.jsonl"};
    if (!papers.str().empty()) s.papers = {&papers, "papers.jsonl"};
    if (!author_counts.str().empty()) s.author_counts = {&author_counts, "counts.jsonl"};
    if (!ratings.str().empty()) s.ratings = {&ratings, "ratings.csv"};
    if (!citations.str().empty()) s.citations = {&citations, "citations.jsonl"};
    s.gazetteer = &gazetteer;
    return ingest(s);
  }
};

const char* kEvents =
    R"({"event_key":"jcdl/2015","conf_key":"jcdl","entry":"2015-08","title":"JCDL 2015, Knoxville, Tennessee, USA, June 21-25, 2015","paper_count":12,"author_ids":["a1","a2"]})"
    "\n"
    R"({"event_key":"jcdl/2016","conf_key":"jcdl","entry":"2016-09","event":"2016-06","title":"JCDL 2016, Newark, NJ, USA, March 19-23, 2016","country":"US"})"
    "\n\n"
    R"({"event_key":"misc/1","conf_key":"misc","entry":"2014-02","title":"Collected papers"})"
    "\n";

}  // namespace

TEST_CASE("events with titles, explicit dates and countries") {
  Inputs in;
  std::istringstream gz("country\tunited states\tUS\ncountry\tusa\tUS\n");
  in.gazetteer = Gazetteer::parse(gz, "gz");
  in.events.str(kEvents);
  const auto r = in.run();

  const Conference& jcdl = *r.corpus.find("jcdl");
  REQUIRE(jcdl.events.size() == 2);
  CHECK(jcdl.events[0].event_date == CalendarDate(6, 2015));
  CHECK(jcdl.events[0].country == "US");
  CHECK(jcdl.events[0].paper_count == 12);
  CHECK(jcdl.events[0].author_count() == 2);
  CHECK(jcdl.events[1].event_date == CalendarDate(6, 2016));  // explicit date wins
  CHECK(r.stats.events == 3);
  CHECK(r.stats.dates_from_title == 1);
  CHECK(r.stats.countries_from_title == 1);
  CHECK(r.stats.undated_events == 1);
  CHECK(r.stats.unrankable_conferences == 1);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("'misc'") != std::string::npos);
}

TEST_CASE("malformed event lines report file and line") {
  const char* bad[] = {
      R"({"event_key":"x","conf_key":"c"})",
      R"({"event_key":"x","conf_key":"c","entry":"2016-13"})",
      R"({"event_key":"x","conf_key":"c","entry":"2016-01","paper_count":-1})",
      R"({"event_key":"x","conf_key":"c","entry":"2016-01","country":"usa"})",
      R"({"event_key":"","conf_key":"c","entry":"2016-01"})",
      R"(["not an object"])",
      R"({"event_key":"x",)",
      R"({"event_key":"e1","conf_key":"c","entry":"2016-01"})",  // duplicate key
  };
  for (const char* line : bad) {
    CAPTURE(line);
    Inputs in;
    in.events.str(std::string(R"({"event_key":"e1","conf_key":"c","entry":"2015-01"})") + "\n" +
                  line + "\n");
    try {
      in.run();
      FAIL("accepted");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).rfind("events.jsonl:2:", 0) == 0);
    }
  }
}

TEST_CASE("ratings") {
  Inputs in;
  in.events.str(kEvents);
  in.ratings.str(
      "conf_key,list_id,class\n"
      "jcdl,CORE2017,A*\n"
      "jcdl,QUALIS,B\n"
      "jcdl,CORE2017,A\n"
      "ghost,CORE2017,A\n"
      "misc,CORE2017,Z\n");
  const auto r = in.run();
  CHECK(r.corpus.find("jcdl")->rating_values == std::vector<int>{4, 2});
  CHECK(r.stats.ratings == 2);
  CHECK(r.warnings.size() == 4);  // second rating, unknown conf, unknown class, undated misc
  CHECK(r.warnings[0].rfind("ratings.csv:4:", 0) == 0);

  Inputs bad;
  bad.events.str(kEvents);
  bad.ratings.str("jcdl,CORE2017\n");
  CHECK_THROWS_AS(bad.run(), InputError);
}

TEST_CASE("citations are summed per event and year") {
  Inputs in;
  in.events.str(kEvents);
  in.citations.str(
      R"({"event_key":"jcdl/2015","year":2015,"count":3})"
      "\n"
      R"({"event_key":"jcdl/2015","year":2015,"count":2})"
      "\n"
      R"({"event_key":"nope","year":2015,"count":2})"
      "\n");
  const auto r = in.run();
  CHECK(r.corpus.find("jcdl")->events[0].citations_per_year == std::map<int, std::int64_t>{{2015, 5}});
  CHECK(r.warnings.front().rfind("citations.jsonl:3:", 0) == 0);
}

TEST_CASE("author record counts from papers and explicit counts") {
  Inputs in;
  in.events.str(kEvents);
  in.papers.str(
      R"({"record_key":"p1","year":2010,"author_ids":["a1","a2"]})"
      "\n"
      R"({"record_key":"p2","year":2012,"author_ids":["a1","a1"]})"
      "\n"
      R"({"record_key":"p2","year":2013,"author_ids":["a1"]})"
      "\n");
  auto r = in.run();
  const auto& counts = r.corpus.author_record_counts;
  CHECK(counts.records_until("a1", 2011) == 1);
  CHECK(counts.records_until("a1", 2016) == 2);
  CHECK(counts.records_until("a2", 2009) == 0);
  CHECK(r.warnings.front().find("duplicate record_key") != std::string::npos);

  Inputs explicit_counts;
  explicit_counts.events.str(kEvents);
  explicit_counts.papers.str(R"({"record_key":"p1","year":2010,"author_ids":["a1"]})" "\n");
  explicit_counts.author_counts.str(
      R"({"author_id":"a1","year":2014,"count":30})"
      "\n");
  CHECK(explicit_counts.run().corpus.author_record_counts.records_until("a1", 2015) == 30);

  Inputs decreasing;
  decreasing.events.str(kEvents);
  decreasing.author_counts.str(
      R"({"author_id":"a1","year":2014,"count":30})"
      "\n"
      R"({"author_id":"a1","year":2015,"count":20})"
      "\n");
  CHECK_THROWS_AS(decreasing.run(), InputError);
}

TEST_CASE("run config validation") {
  RunConfig c;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("events"), std::invalid_argument);
  c.events_path = "events.jsonl";
  c.validate();
  c.cutoffs = {20, 10};
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("cutoffs"), std::invalid_argument);
  c.cutoffs = {10};
  c.rating_class_map["X"] = -1;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("rating_class_map"), std::invalid_argument);
  RunConfig missing;
  missing.events_path = "/nonexistent/events.jsonl";
  CHECK_THROWS_AS(ingest(missing), InputError);
}

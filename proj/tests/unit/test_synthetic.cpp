#include <sstream>

#include "doctest.h"

#include "confprio/ingest.hpp"
#include "confprio/scoring.hpp"
#include "confprio/synthetic.hpp"

using namespace confprio;

namespace {

IngestResult load(const SyntheticFiles& f) {
  static const Gazetteer gazetteer = Gazetteer::load(CONFPRIO_GAZETTEER_PATH);
  std::istringstream events(f.events), papers(f.papers), ratings(f.ratings),
      citations(f.citations);
  IngestSources s;
  s.events = {&events, "events"};
  s.papers = {&papers, "papers"};
  s.ratings = {&ratings, "ratings"};
  s.citations = {&citations, "citations"};
  s.gazetteer = &gazetteer;
  return ingest(s);
}

}  // namespace

TEST_CASE("same seed, same bytes") {
  SyntheticOptions o;
  o.seed = 7;
  CHECK(generate_synthetic(o) == generate_synthetic(o));
  SyntheticOptions other = o;
  other.seed = 8;
  CHECK_FALSE(generate_synthetic(o) == generate_synthetic(other));
}

TEST_CASE("generated files ingest cleanly and every conference is rankable") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SyntheticOptions o;
    o.seed = seed;
    o.n_conferences = 30;
    const auto r = load(generate_synthetic(o));
    CAPTURE(seed);
    CHECK(r.warnings.empty());
    CHECK(r.corpus.conferences.size() == 30);
    CHECK(r.stats.unrankable_conferences == 0);
    CHECK(r.stats.countries_from_title > 0);
    const auto ranked = rank(r.corpus, {12, o.last_year + 1}, Factor::rating);
    CHECK(ranked.entries.size() == 30);
  }
}

TEST_CASE("mixture controls") {
  SyntheticOptions o;
  o.n_conferences = 40;
  o.discontinued_fraction = 0.0;
  o.biennial_fraction = 0.0;
  o.rated_fraction = 0.0;
  const auto r = load(generate_synthetic(o));
  for (const auto& [key, c] : r.corpus.conferences) {
    CAPTURE(key);
    CHECK(c.rating_values.empty());
    const auto p = derive_profile(c, {12, o.last_year});
    CHECK(p.delta_year == 1);
    CHECK(p.last_entry_date.year() >= o.last_year - 1);
  }

  SyntheticOptions bad;
  bad.n_conferences = 0;
  CHECK_THROWS_AS(generate_synthetic(bad), std::invalid_argument);
  bad.n_conferences = 5;
  bad.first_year = 2010;
  bad.last_year = 2009;
  CHECK_THROWS_AS(generate_synthetic(bad), std::invalid_argument);
}

#include <regex>
#include <sstream>

#include "doctest.h"

#include "confprio/errors.hpp"
#include "confprio/trec_format.hpp"
#include "fixtures.hpp"

using namespace confprio;

namespace {

RankedList sample_run() {
  RankedList r;
  r.now = CalendarDate(12, 2016);
  r.factor = Factor::rating;
  r.entries = {{"jcdl", 7.52, 1}, {"tpdl", 4.0, 2}, {"icadl", 0.0, 3}};
  return r;
}

}  // namespace

TEST_CASE("format helpers") {
  CHECK(format_query_id({3, 2016}) == "2016-03");
  CHECK(format_fixed(7.52, 6) == "7.520000");
  CHECK(format_fixed(-0.0, 6) == "0.000000");
  CHECK(format_fixed(-1e-9, 6) == "0.000000");
  CHECK(format_fixed(-3.0, 6) == "-3.000000");
  CHECK(format_fixed(0.66944, 4) == "0.6694");
}

TEST_CASE("run file lines") {
  const std::string text = run_to_string(sample_run());
  CHECK(text ==
        "2016-12 Q0 jcdl 1 7.520000 rating\n"
        "2016-12 Q0 tpdl 2 4.000000 rating\n"
        "2016-12 Q0 icadl 3 0.000000 rating\n");
  CHECK(run_to_string(sample_run(), "mytag").find(" mytag\n") != std::string::npos);

  std::istringstream in(text);
  const auto lines = parse_run(in);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == RunLine{"2016-12", "jcdl", 1, 7.52, "rating"});
  std::ostringstream out;
  write_run_lines(out, lines);
  CHECK(out.str() == text);
}

TEST_CASE("run parser rejects malformed lines with their location") {
  const char* bad[] = {
      "2016-12 Q0 jcdl 1 7.520000",            // missing tag
      "2016-12  Q0 jcdl 1 7.520000 rating",    // double space
      "2016-13 Q0 jcdl 1 7.520000 rating",     // month
      "2016-12 Q1 jcdl 1 7.520000 rating",
      "2016-12 Q0 jcdl 0 7.520000 rating",     // rank from 1
      "2016-12 Q0 jcdl 01 7.520000 rating",
      "2016-12 Q0 jcdl 1 7.52 rating",         // six decimals
      "2016-12 Q0 jcdl 1 07.520000 rating",
      "2016-12 Q0 jcdl 1 7.520000 rating ",
  };
  for (const char* line : bad) {
    CAPTURE(line);
    std::istringstream in(std::string("2016-12 Q0 ok 1 1.000000 t\n") + line + "\n");
    try {
      parse_run(in, "runs.txt");
      FAIL("accepted");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).rfind("runs.txt:2:", 0) == 0);
    }
  }
  std::istringstream negative("2016-12 Q0 x 1 -3.000000 baseline\n");
  CHECK(parse_run(negative).at(0).score == -3.0);
}

TEST_CASE("qrels lines") {
  QrelSet q{"2016-12", {{"jcdl", 4}, {"tpdl", 2}, {"icadl", 0}}};
  const std::string text = qrels_to_string(q);
  CHECK(text == "2016-12 0 icadl 0\n2016-12 0 jcdl 4\n2016-12 0 tpdl 2\n");

  QrelSet q2{"2016-11", {{"jcdl", 1}}};
  std::istringstream in(qrels_to_string(q2) + text);
  const auto sets = parse_qrels(in);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == q2);
  CHECK(sets[1] == q);

  const char* bad[] = {"2016-12 0 jcdl 5", "2016-12 1 jcdl 4", "2016-12 0 jcdl", "2016-12 0 icadl 1"};
  for (const char* line : bad) {
    CAPTURE(line);
    std::istringstream b(text + line + "\n");
    CHECK_THROWS_AS(parse_qrels(b, "q.txt"), InputError);
  }
  std::istringstream split("2016-12 0 a 1\n2016-11 0 b 1\n2016-12 0 c 1\n");
  CHECK_THROWS_AS(parse_qrels(split), InputError);
}

TEST_CASE("report csv") {
  const Corpus corpus = testing::discontinued_ideal_corpus();
  const std::vector<Factor> factors{Factor::baseline, Factor::discontinued};
  const std::vector<int> cutoffs{10, 20};
  std::ostringstream out;
  write_report_csv(out, evaluate_year(corpus, 2016, factors, cutoffs));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "factor,cutoff,m01,m02,m03,m04,m05,m06,m07,m08,m09,m10,m11,m12,average,p_vs_baseline");
  const std::regex row(R"((baseline|discontinued),(10|20)(,\d\.\d{4}){14})");
  int rows = 0;
  while (std::getline(in, line)) {
    CAPTURE(line);
    CHECK(std::regex_match(line, row));
    ++rows;
  }
  CHECK(rows == 4);
  CHECK(out.str().find("discontinued,10,1.0000,1.0000") != std::string::npos);
}

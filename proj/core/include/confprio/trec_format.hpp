#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confprio/calendar.hpp"
#include "confprio/evaluation.hpp"
#include "confprio/scoring.hpp"

namespace confprio {

// "YYYY-MM" of the ranking date.
std::string format_query_id(CalendarDate now);

// Fixed-point with `decimals` digits; never prints "-0.000...".
std::string format_fixed(double value, int decimals);

// Run file: "<query_id> Q0 <conf_key> <rank> <score> <run_tag>\n", score
// with 6 decimals. The run tag defaults to the factor name.
void write_run(std::ostream& out, const RankedList& run, std::string_view run_tag = {});
std::string run_to_string(const RankedList& run, std::string_view run_tag = {});

struct RunLine {
  std::string query_id;
  std::string conf_key;
  int rank = 0;
  double score = 0.0;
  std::string run_tag;

  friend bool operator==(const RunLine&, const RunLine&) = default;
};

// Strict parser for the grammar above; throws InputError("source:line: ...").
std::vector<RunLine> parse_run(std::istream& in, std::string_view source = "<run>");
void write_run_lines(std::ostream& out, std::span<const RunLine> lines);

// Qrels file: "<query_id> 0 <conf_key> <grade>\n".
void write_qrels(std::ostream& out, const QrelSet& qrels);
std::string qrels_to_string(const QrelSet& qrels);
// Groups lines by query id, in order of first appearance.
std::vector<QrelSet> parse_qrels(std::istream& in, std::string_view source = "<qrels>");

// Header "factor,cutoff,m01,...,m12,average,p_vs_baseline"; one row per
// report and cutoff, values with 4 decimals.
void write_report_csv(std::ostream& out, const YearEvaluation& evaluation);

}  // namespace confprio

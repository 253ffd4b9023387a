#include "confprio/trec_format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "confprio/errors.hpp"

namespace confprio {
namespace {

std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto sp = line.find(' ', start);
    fields.push_back(line.substr(start, sp == std::string_view::npos ? sp : sp - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return fields;
}

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || std::iscntrl(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return true;
}

bool is_query_id(std::string_view s) {
  try {
    return format_query_id(parse_iso(s)) == s;
  } catch (const InvalidDate&) {
    return false;
  }
}

bool parse_positive_int(std::string_view s, int& out) {
  if (s.empty() || s.front() == '0' || s.front() == '+' || s.front() == '-') return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && out > 0;
}

// -?digits.dddddd
bool parse_score(std::string_view s, double& out) {
  std::size_t i = s.empty() || s.front() != '-' ? 0 : 1;
  const auto dot = s.find('.');
  if (dot == std::string_view::npos || dot == i || s.size() - dot - 1 != 6) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (j != dot && !std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  if (dot - i > 1 && s[i] == '0') return false;
  out = std::strtod(std::string(s).c_str(), nullptr);
  return true;
}

std::string month_column(int m) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "m%02d", m);
  return buf;
}

}  // namespace

std::string format_query_id(CalendarDate now) { return to_iso(now); }

std::string format_fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  if (std::round(std::fabs(value) * scale) == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

void write_run(std::ostream& out, const RankedList& run, std::string_view run_tag) {
  const std::string qid = format_query_id(run.now);
  const std::string_view tag = run_tag.empty() ? to_string(run.factor) : run_tag;
  for (const auto& e : run.entries) {
    out << qid << " Q0 " << e.conf_key << ' ' << e.rank << ' ' << format_fixed(e.score, 6) << ' '
        << tag << '\n';
  }
}

std::string run_to_string(const RankedList& run, std::string_view run_tag) {
  std::ostringstream os;
  write_run(os, run, run_tag);
  return os.str();
}

std::vector<RunLine> parse_run(std::istream& in, std::string_view source) {
  std::vector<RunLine> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& why) {
      throw InputError(std::string(source) + ":" + std::to_string(lineno) + ": " + why);
    };
    const auto f = split_single_spaces(line);
    if (f.size() != 6) fail("expected 6 single-space separated fields");
    RunLine r;
    if (!is_query_id(f[0])) fail("bad query id '" + std::string(f[0]) + "'");
    if (f[1] != "Q0") fail("second field must be Q0");
    if (!is_token(f[2])) fail("bad document key");
    if (!parse_positive_int(f[3], r.rank)) fail("bad rank '" + std::string(f[3]) + "'");
    if (!parse_score(f[4], r.score)) fail("bad score '" + std::string(f[4]) + "'");
    if (!is_token(f[5])) fail("bad run tag");
    r.query_id = f[0];
    r.conf_key = f[2];
    r.run_tag = f[5];
    lines.push_back(std::move(r));
  }
  return lines;
}

void write_run_lines(std::ostream& out, std::span<const RunLine> lines) {
  for (const auto& r : lines) {
    out << r.query_id << " Q0 " << r.conf_key << ' ' << r.rank << ' ' << format_fixed(r.score, 6)
        << ' ' << r.run_tag << '\n';
  }
}

void write_qrels(std::ostream& out, const QrelSet& qrels) {
  for (const auto& [key, grade] : qrels.judgments) {
    out << qrels.query_id << " 0 " << key << ' ' << grade << '\n';
  }
}

std::string qrels_to_string(const QrelSet& qrels) {
  std::ostringstream os;
  write_qrels(os, qrels);
  return os.str();
}

std::vector<QrelSet> parse_qrels(std::istream& in, std::string_view source) {
  std::vector<QrelSet> sets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& why) {
      throw InputError(std::string(source) + ":" + std::to_string(lineno) + ": " + why);
    };
    const auto f = split_single_spaces(line);
    if (f.size() != 4) fail("expected 4 single-space separated fields");
    if (!is_query_id(f[0])) fail("bad query id '" + std::string(f[0]) + "'");
    if (f[1] != "0") fail("second field must be 0");
    if (!is_token(f[2])) fail("bad document key");
    if (f[3].size() != 1 || f[3][0] < '0' || f[3][0] > '4') fail("grade must be 0..4");
    if (sets.empty() || sets.back().query_id != f[0]) {
      for (const auto& s : sets) {
        if (s.query_id == f[0]) fail("query " + std::string(f[0]) + " is not contiguous");
      }
      sets.push_back(QrelSet{std::string(f[0]), {}});
    }
    if (!sets.back().judgments.emplace(std::string(f[2]), f[3][0] - '0').second) {
      fail("duplicate judgment for " + std::string(f[2]));
    }
  }
  return sets;
}

void write_report_csv(std::ostream& out, const YearEvaluation& evaluation) {
  out << "factor,cutoff";
  for (int m = 1; m <= 12; ++m) out << ',' << month_column(m);
  out << ",average,p_vs_baseline\n";
  for (const auto& r : evaluation.reports) {
    for (int k : evaluation.cutoffs) {
      out << to_string(r.factor) << ',' << k;
      for (int m = 1; m <= 12; ++m) {
        const std::string qid = format_query_id(CalendarDate(m, evaluation.eval_year));
        out << ',' << format_fixed(r.per_month_ndcg.at(qid).at(k), 4);
      }
      out << ',' << format_fixed(r.yearly_average.at(k), 4) << ','
          << format_fixed(r.p_value_vs_baseline.at(k), 4) << '\n';
    }
  }
}

}  // namespace confprio

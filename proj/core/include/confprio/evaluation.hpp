#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "confprio/calendar.hpp"
#include "confprio/corpus.hpp"
#include "confprio/scoring.hpp"

namespace confprio {

// Graded pseudo-relevance judgments for one month ("YYYY-MM").
struct QrelSet {
  std::string query_id;
  std::map<std::string, int> judgments;  // conf_key -> grade 0..4

  int grade(const std::string& conf_key) const;
  friend bool operator==(const QrelSet&, const QrelSet&) = default;
};

// Grade from the judgment delay: months between the latest entry at or
// before `now` and `now`, bucketed like the delay base score. 0 when
// nothing was entered yet.
int pseudo_relevance(const Conference& c, CalendarDate now);

// One judgment per conference with at least one dated event.
QrelSet build_qrels(const Corpus& corpus_full, CalendarDate now);

// Everything the scorer may see when evaluating `eval_year`: events entered
// before that year, and author counts and citations of earlier years only.
Corpus leave_out_snapshot(const Corpus& corpus_full, int eval_year);

enum class Gain { exponential, linear };

// DCG@k / IDCG@k with discount log2(rank + 1); 0 when IDCG is 0.
// Documents missing from the qrels count as grade 0.
double ndcg_at_k(const RankedList& run, const QrelSet& qrels, int k,
                 Gain gain = Gain::exponential);

// Two-sided p-value of the paired t-test on a - b. Zero differences give 1,
// constant non-zero differences give 0. Throws InsufficientData for fewer
// than two pairs and std::invalid_argument for unequal lengths.
double paired_ttest_two_sided(std::span<const double> a, std::span<const double> b);

struct EvalReport {
  Factor factor = Factor::baseline;
  std::map<std::string, std::map<int, double>> per_month_ndcg;  // query_id -> cutoff -> nDCG
  std::map<int, double> yearly_average;
  std::map<int, double> p_value_vs_baseline;
};

struct MonthOutcome {
  CalendarDate now;
  QrelSet qrels;
  std::vector<RankedList> runs;  // one per evaluated factor, in request order
};

struct YearEvaluation {
  int eval_year = 0;
  std::vector<int> cutoffs;
  std::vector<EvalReport> reports;  // in request order
  std::vector<MonthOutcome> months;
};

struct EvalOptions {
  Gain gain = Gain::exponential;
  RankOptions rank;
};

inline constexpr std::array<int, 5> kDefaultCutoffs = {10, 20, 50, 100, 200};

// Sliding-window leave-out evaluation over the twelve months of eval_year.
// Rankings use leave_out_snapshot(corpus_full, eval_year); judgments use the
// full corpus as known at each month. The baseline is always ranked for the
// significance tests even when it is not in `factors`.
YearEvaluation evaluate_year(const Corpus& corpus_full, int eval_year,
                             std::span<const Factor> factors, std::span<const int> cutoffs,
                             const EvalOptions& options = {});

}  // namespace confprio

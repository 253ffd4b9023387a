#include "confprio/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "confprio/errors.hpp"
#include "confprio/trec_format.hpp"

namespace confprio {
namespace {

double gain_of(int grade, Gain gain) {
  if (gain == Gain::linear) return grade;
  return std::exp2(grade) - 1.0;
}

double discounted_sum(const std::vector<int>& grades, int k, Gain gain) {
  double dcg = 0.0;
  const std::size_t n = std::min(grades.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    dcg += gain_of(grades[i], gain) / std::log2(static_cast<double>(i) + 2.0);
  }
  return dcg;
}

}  // namespace

int QrelSet::grade(const std::string& conf_key) const {
  auto it = judgments.find(conf_key);
  return it == judgments.end() ? 0 : it->second;
}

int pseudo_relevance(const Conference& c, CalendarDate now) {
  std::optional<CalendarDate> latest;
  for (const auto& e : c.events) {
    if (e.visible_at(now) && (!latest || *latest < e.entry_date)) latest = e.entry_date;
  }
  if (!latest) return 0;
  const int judgment_delay = diff_months(now, *latest);
  return delay_base_score(judgment_delay);
}

QrelSet build_qrels(const Corpus& corpus_full, CalendarDate now) {
  QrelSet q;
  q.query_id = format_query_id(now);
  for (const auto& [key, conf] : corpus_full.conferences) {
    if (conf.has_dated_event()) q.judgments.emplace(key, pseudo_relevance(conf, now));
  }
  return q;
}

Corpus leave_out_snapshot(const Corpus& corpus_full, int eval_year) {
  Corpus snap;
  snap.author_record_counts = corpus_full.author_record_counts.truncated_before(eval_year);
  for (const auto& [key, conf] : corpus_full.conferences) {
    Conference c;
    c.conf_key = conf.conf_key;
    c.rating_values = conf.rating_values;
    for (const auto& e : conf.events) {
      if (e.entry_date.year() >= eval_year) continue;
      Event kept = e;
      kept.citations_per_year.erase(kept.citations_per_year.lower_bound(eval_year),
                                    kept.citations_per_year.end());
      c.events.push_back(std::move(kept));
    }
    snap.conferences.emplace(key, std::move(c));
  }
  return snap;
}

double ndcg_at_k(const RankedList& run, const QrelSet& qrels, int k, Gain gain) {
  if (k < 1) throw std::invalid_argument("nDCG cutoff must be positive");
  std::vector<int> ranked;
  ranked.reserve(std::min(run.entries.size(), static_cast<std::size_t>(k)));
  for (const auto& e : run.entries) {
    if (ranked.size() == static_cast<std::size_t>(k)) break;
    ranked.push_back(qrels.grade(e.conf_key));
  }
  std::vector<int> ideal;
  ideal.reserve(qrels.judgments.size());
  for (const auto& [key, g] : qrels.judgments) ideal.push_back(g);
  std::sort(ideal.begin(), ideal.end(), std::greater<>());

  const double idcg = discounted_sum(ideal, k, gain);
  if (idcg <= 0.0) return 0.0;
  return discounted_sum(ranked, k, gain) / idcg;
}

double paired_ttest_two_sided(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("paired t-test needs equal lengths");
  const std::size_t n = a.size();
  if (n < 2) throw InsufficientData("paired t-test needs at least two pairs");

  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - b[i];
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  if (sd == 0.0) return mean == 0.0 ? 1.0 : 0.0;
  const double t = mean / (sd / std::sqrt(static_cast<double>(n)));
  const boost::math::students_t dist(static_cast<double>(n - 1));
  const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
  return std::clamp(p, 0.0, 1.0);
}

YearEvaluation evaluate_year(const Corpus& corpus_full, int eval_year,
                             std::span<const Factor> factors, std::span<const int> cutoffs,
                             const EvalOptions& options) {
  YearEvaluation out;
  out.eval_year = eval_year;
  out.cutoffs.assign(cutoffs.begin(), cutoffs.end());
  for (std::size_t i = 1; i < out.cutoffs.size(); ++i) {
    if (out.cutoffs[i] <= out.cutoffs[i - 1]) {
      throw std::invalid_argument("cutoffs must be strictly increasing");
    }
  }
  if (!out.cutoffs.empty() && out.cutoffs.front() < 1) {
    throw std::invalid_argument("cutoffs must be positive");
  }

  const Corpus snapshot = leave_out_snapshot(corpus_full, eval_year);

  for (Factor f : factors) {
    EvalReport r;
    r.factor = f;
    out.reports.push_back(std::move(r));
  }
  // nDCG of the baseline, month by month, per cutoff.
  std::map<int, std::vector<double>> baseline_series;
  std::map<std::pair<std::size_t, int>, std::vector<double>> factor_series;

  for (int month = 1; month <= 12; ++month) {
    const CalendarDate now(month, eval_year);
    MonthOutcome mo;
    mo.now = now;
    mo.qrels = build_qrels(corpus_full, now);
    const ScoringContext ctx(snapshot, now);

    const RankedList baseline = rank(ctx, Factor::baseline, options.rank);
    for (int k : out.cutoffs) {
      baseline_series[k].push_back(ndcg_at_k(baseline, mo.qrels, k, options.gain));
    }
    for (std::size_t i = 0; i < out.reports.size(); ++i) {
      const Factor f = out.reports[i].factor;
      RankedList run = f == Factor::baseline ? baseline : rank(ctx, f, options.rank);
      for (int k : out.cutoffs) {
        const double v = ndcg_at_k(run, mo.qrels, k, options.gain);
        out.reports[i].per_month_ndcg[mo.qrels.query_id][k] = v;
        factor_series[{i, k}].push_back(v);
      }
      mo.runs.push_back(std::move(run));
    }
    out.months.push_back(std::move(mo));
  }

  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    auto& r = out.reports[i];
    for (int k : out.cutoffs) {
      const auto& series = factor_series[{i, k}];
      r.yearly_average[k] = std::accumulate(series.begin(), series.end(), 0.0) /
                            static_cast<double>(series.size());
      r.p_value_vs_baseline[k] = paired_ttest_two_sided(series, baseline_series[k]);
    }
  }
  return out;
}

}  // namespace confprio

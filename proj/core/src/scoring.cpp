#include "confprio/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "confprio/errors.hpp"

namespace confprio {
namespace {

using Rational = boost::multiprecision::cpp_rational;

struct RatingSum {
  std::int64_t sum = 0;
  std::int64_t count = 0;
  bool covered() const { return sum > 0; }
};

RatingSum rating_sum(const Conference& c) {
  RatingSum r;
  for (int v : c.rating_values) {
    if (v < 0) throw InvariantViolation("negative rating value for " + c.conf_key);
    r.sum += v;
    ++r.count;
  }
  return r;
}

// a.sum / a.count < b.sum / b.count
bool rating_less(const RatingSum& a, const RatingSum& b) {
  return a.sum * b.count < b.sum * a.count;
}

std::set<int> citation_years(const Conference& c, CalendarDate now) {
  std::set<int> years;
  for (const auto& e : c.events) {
    if (e.event_date && e.event_date->year() < now.year()) years.insert(e.event_date->year());
  }
  return years;
}

Rational exact_citation(const Conference& c, CalendarDate now) {
  const auto years = citation_years(c, now);
  Rational total = 0;
  for (const auto& e : c.events) {
    if (e.paper_count <= 0) continue;
    std::int64_t cited = 0;
    for (int y : years) {
      auto it = e.citations_per_year.find(y);
      if (it != e.citations_per_year.end()) cited += it->second;
    }
    if (cited != 0) total += Rational(cited, e.paper_count);
  }
  return total;
}

Conference visible_part(const Conference& c, CalendarDate now) {
  Conference v;
  v.conf_key = c.conf_key;
  v.rating_values = c.rating_values;
  for (const auto& e : c.events) {
    if (e.visible_at(now)) v.events.push_back(e);
  }
  return v;
}

double normalized(double value, double max) {
  if (value <= 0.0 || max <= 0.0) return 1.0;
  return 1.0 + value / max;
}

}  // namespace

std::string_view to_string(Factor f) {
  switch (f) {
    case Factor::baseline: return "baseline";
    case Factor::rating: return "rating";
    case Factor::internationality: return "internationality";
    case Factor::discontinued: return "discontinued";
    case Factor::citation: return "citation";
    case Factor::prominence: return "prominence";
  }
  return "unknown";
}

std::optional<Factor> factor_from_string(std::string_view name) {
  for (Factor f : kAllFactors) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

double FactorWeights::weight(Factor f) const {
  switch (f) {
    case Factor::baseline: return 1.0;
    case Factor::rating: return rating;
    case Factor::internationality: return internationality;
    case Factor::discontinued: return discontinued;
    case Factor::citation: return citation;
    case Factor::prominence: return prominence;
  }
  return 1.0;
}

CalendarDate expected_next_entry(const ConferenceProfile& profile) {
  const CalendarDate base(profile.mode_month, profile.last_entry_date.year() + profile.delta_year);
  return add_months(base, profile.delta_month);
}

int delay(const ConferenceProfile& profile, CalendarDate now) {
  return diff_months(now, expected_next_entry(profile));
}

int delay_base_score(int delta) {
  if (delta < 0) return 0;
  if (delta <= 3) return 4;
  if (delta <= 7) return 3;
  if (delta <= 11) return 2;
  return 1;
}

double rating_value(const Conference& c) {
  const auto r = rating_sum(c);
  return r.count == 0 ? 0.0 : static_cast<double>(r.sum) / static_cast<double>(r.count);
}

double rating_score(const Conference& c, double max_r) { return normalized(rating_value(c), max_r); }

int internationality_value(const Conference& c) {
  std::set<std::string> countries;
  for (const auto& e : c.events) {
    if (e.country) countries.insert(*e.country);
  }
  return static_cast<int>(countries.size());
}

double internationality_score(const Conference& c, int max_i) {
  return normalized(internationality_value(c), max_i);
}

double discontinued_score(const ConferenceProfile& profile, CalendarDate now) {
  if (profile.delta_year < 1) throw InvariantViolation("delta_year must be at least 1");
  const int years_since = std::max(0, now.year() - profile.last_entry_date.year());
  const double base = 1.0 + static_cast<double>(years_since) / profile.delta_year;
  return 1.0 / (base * base);
}

double citation_value(const Conference& c, CalendarDate now) {
  return exact_citation(c, now).convert_to<double>();
}

double citation_score(const Conference& c, CalendarDate now, double max_cit) {
  return normalized(citation_value(c, now), max_cit);
}

double prominence_value(const Conference& c, const Corpus& corpus, CalendarDate now) {
  const int year = now.year() - 1;
  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& e : c.events) {
    if (e.paper_count < kProminenceMinPapers || e.author_ids.empty()) continue;
    double sum = 0.0;
    for (const auto& a : e.author_ids) {
      sum += static_cast<double>(corpus.author_record_counts.records_until(a, year));
    }
    total += sum / static_cast<double>(e.author_ids.size());
    ++counted;
  }
  return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

double prominence_score(const Conference& c, const Corpus& corpus, CalendarDate now,
                        double max_prm) {
  return normalized(prominence_value(c, corpus, now), max_prm);
}

ScoringContext::ScoringContext(const Corpus& corpus, CalendarDate now) : now_(now) {
  struct Raw {
    ConferenceProfile profile;
    RatingSum rating;
    int internationality = 0;
    Rational citation;
    double prominence = 0.0;
  };
  std::map<std::string, Raw> raw;
  RatingSum max_rating;
  Rational max_citation = 0;

  for (const auto& [key, conf] : corpus.conferences) {
    auto profile = try_derive_profile(conf, now);
    if (!profile) continue;
    const Conference visible = visible_part(conf, now);
    Raw r;
    r.profile = *profile;
    r.rating = rating_sum(visible);
    r.internationality = internationality_value(visible);
    r.citation = exact_citation(visible, now);
    r.prominence = prominence_value(visible, corpus, now);

    if (r.rating.covered() && (!max_rating.covered() || rating_less(max_rating, r.rating))) {
      max_rating = r.rating;
    }
    maxima_.internationality = std::max(maxima_.internationality, r.internationality);
    if (r.citation > max_citation) max_citation = r.citation;
    maxima_.prominence = std::max(maxima_.prominence, r.prominence);
    raw.emplace(key, std::move(r));
  }
  if (max_rating.covered()) {
    maxima_.rating = static_cast<double>(max_rating.sum) / static_cast<double>(max_rating.count);
  }
  maxima_.citation = max_citation.convert_to<double>();

  for (auto& [key, r] : raw) {
    Entry entry;
    entry.profile = r.profile;
    auto& w = entry.weights;
    w.delta = delay(r.profile, now);
    w.delay_base = delay_base_score(w.delta);
    if (r.rating.covered()) {
      // (s / n) / (s_max / n_max) as one division of exact integers.
      w.rating = 1.0 + static_cast<double>(r.rating.sum * max_rating.count) /
                           static_cast<double>(max_rating.sum * r.rating.count);
    }
    w.internationality = normalized(r.internationality, maxima_.internationality);
    w.discontinued = discontinued_score(r.profile, now);
    if (r.citation > 0) {
      const Rational ratio = r.citation / max_citation;
      w.citation = 1.0 + ratio.convert_to<double>();
    }
    w.prominence = normalized(r.prominence, maxima_.prominence);
    entries_.emplace(key, entry);
  }
}

const ScoringContext::Entry* ScoringContext::find(const std::string& conf_key) const {
  auto it = entries_.find(conf_key);
  return it == entries_.end() ? nullptr : &it->second;
}

double score(const FactorWeights& w, Factor factor) {
  if (factor == Factor::baseline) return static_cast<double>(w.delta);
  return static_cast<double>(w.delay_base) * w.weight(factor);
}

RankedList rank(const ScoringContext& ctx, Factor factor, const RankOptions& options) {
  RankedList list;
  list.now = ctx.now();
  list.factor = factor;
  list.entries.reserve(ctx.entries().size());

  if (factor == Factor::baseline && options.baseline_order == BaselineOrder::due_first) {
    // Due conferences score -delta. Not-yet-due ones are pushed below the
    // most overdue one, keeping scores integral and non-increasing.
    int max_due = 0;
    for (const auto& [key, e] : ctx.entries()) {
      if (e.weights.delta >= 0) max_due = std::max(max_due, e.weights.delta);
    }
    for (const auto& [key, e] : ctx.entries()) {
      const int d = e.weights.delta;
      const long long key_value = d >= 0 ? -static_cast<long long>(d)
                                         : -(static_cast<long long>(max_due) + 1 - d);
      list.entries.push_back({key, static_cast<double>(key_value), 0});
    }
  } else {
    for (const auto& [key, e] : ctx.entries()) {
      list.entries.push_back({key, score(e.weights, factor), 0});
    }
  }

  std::stable_sort(list.entries.begin(), list.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.conf_key < b.conf_key;
                   });
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    list.entries[i].rank = static_cast<int>(i) + 1;
  }
  return list;
}

RankedList rank(const Corpus& corpus, CalendarDate now, Factor factor,
                const RankOptions& options) {
  return rank(ScoringContext(corpus, now), factor, options);
}

}  // namespace confprio

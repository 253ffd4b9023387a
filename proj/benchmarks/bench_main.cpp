#include <sstream>

#include <benchmark/benchmark.h>

#include "confprio/evaluation.hpp"
#include "confprio/ingest.hpp"
#include "confprio/scoring.hpp"
#include "confprio/synthetic.hpp"
#include "confprio/title_parser.hpp"

using namespace confprio;

namespace {

const Gazetteer& gazetteer() {
  static const Gazetteer g = Gazetteer::load(CONFPRIO_GAZETTEER_PATH);
  return g;
}

Corpus corpus_of(int n) {
  SyntheticOptions o;
  o.n_conferences = n;
  const auto f = generate_synthetic(o);
  std::istringstream events(f.events), papers(f.papers), ratings(f.ratings),
      citations(f.citations);
  IngestSources s;
  s.events = {&events, "events"};
  s.papers = {&papers, "papers"};
  s.ratings = {&ratings, "ratings"};
  s.citations = {&citations, "citations"};
  s.gazetteer = &gazetteer();
  return ingest(s).corpus;
}

void BM_Rank(benchmark::State& state) {
  const Corpus corpus = corpus_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(corpus, CalendarDate(12, 2016), Factor::citation));
  }
}
BENCHMARK(BM_Rank)->Arg(100)->Arg(1000);

void BM_EvaluateYear(benchmark::State& state) {
  const Corpus corpus = corpus_of(static_cast<int>(state.range(0)));
  const std::vector<Factor> factors{kAllFactors.begin(), kAllFactors.end()};
  const std::vector<int> cutoffs{kDefaultCutoffs.begin(), kDefaultCutoffs.end()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_year(corpus, 2016, factors, cutoffs));
  }
}
BENCHMARK(BM_EvaluateYear)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Ndcg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RankedList run;
  QrelSet q{"2016-01", {}};
  for (int i = 0; i < n; ++i) {
    const std::string key = "c" + std::to_string(i);
    run.entries.push_back({key, static_cast<double>(n - i), i + 1});
    q.judgments[key] = (i * 7) % 5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(ndcg_at_k(run, q, 100));
}
BENCHMARK(BM_Ndcg)->Arg(1000)->Arg(10000);

void BM_ParseTitle(benchmark::State& state) {
  const std::string title =
      "Research and Advanced Technology for Digital Libraries - 20th International Conference "
      "on Theory and Practice of Digital Libraries, TPDL 2016, Hannover, Germany, September "
      "5-9, 2016, Proceedings";
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_event_date(title));
    benchmark::DoNotOptimize(parse_country(title, gazetteer()));
  }
}
BENCHMARK(BM_ParseTitle);

}  // namespace

BENCHMARK_MAIN();

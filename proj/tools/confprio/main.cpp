// confprio: rank conference series by harvesting urgency and evaluate the
// rankings against pseudo-relevance judgments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "confprio/calendar.hpp"
#include "confprio/errors.hpp"
#include "confprio/evaluation.hpp"
#include "confprio/ingest.hpp"
#include "confprio/scoring.hpp"
#include "confprio/synthetic.hpp"
#include "confprio/title_parser.hpp"
#include "confprio/trec_format.hpp"

namespace fs = std::filesystem;
using namespace confprio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct InputFlags {
  std::string events, papers, author_counts, ratings, citations, gazetteer;
};

void add_input_flags(CLI::App* cmd, InputFlags& f, bool events_required) {
  auto* ev = cmd->add_option("--events", f.events, "Events JSONL file");
  if (events_required) ev->required();
  cmd->add_option("--papers", f.papers, "Papers JSONL file (author record counts)");
  cmd->add_option("--author-counts", f.author_counts,
                  "Precomputed cumulative author counts JSONL; wins over --papers");
  cmd->add_option("--ratings", f.ratings, "Ratings CSV (conf_key,list_id,class)");
  cmd->add_option("--citations", f.citations, "Citations JSONL (event_key,year,count)");
  cmd->add_option("--gazetteer", f.gazetteer, "Gazetteer TSV for venue parsing");
}

std::string default_gazetteer() {
  for (const char* p : {CONFPRIO_INSTALLED_GAZETTEER, CONFPRIO_SOURCE_GAZETTEER}) {
    std::error_code ec;
    if (fs::exists(p, ec)) return p;
  }
  return {};
}

RunConfig make_config(const InputFlags& f) {
  RunConfig c;
  c.events_path = f.events;
  c.papers_path = f.papers;
  c.author_counts_path = f.author_counts;
  c.ratings_path = f.ratings;
  c.citations_path = f.citations;
  c.gazetteer_path = f.gazetteer.empty() ? default_gazetteer() : f.gazetteer;
  return c;
}

IngestResult load(const RunConfig& config) {
  auto result = ingest(config);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  return result;
}

std::vector<Factor> parse_factors(const std::string& text) {
  if (text == "all") return {kAllFactors.begin(), kAllFactors.end()};
  std::vector<Factor> out;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto f = factor_from_string(name);
    if (!f) throw std::invalid_argument("--factor: unknown factor '" + name + "'");
    out.push_back(*f);
  }
  if (out.empty()) throw std::invalid_argument("--factor: no factor given");
  return out;
}

std::vector<int> parse_cutoffs(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || k < 1) {
      throw std::invalid_argument("--cutoffs: bad value '" + item + "'");
    }
    out.push_back(k);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw std::invalid_argument("--cutoffs: must be strictly increasing");
  }
  if (out.empty()) throw std::invalid_argument("--cutoffs: no cutoff given");
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << content;
  if (!out) throw InputError(path.string() + ": write failed");
}

fs::path run_path(const fs::path& dir, CalendarDate now, Factor f) {
  return dir / ("run-" + format_query_id(now) + "-" + std::string(to_string(f)) + ".txt");
}

RankOptions rank_options(const std::string& order) {
  RankOptions o;
  if (order == "due-first") {
    o.baseline_order = BaselineOrder::due_first;
  } else if (order == "most-overdue-first") {
    o.baseline_order = BaselineOrder::most_overdue_first;
  } else {
    throw std::invalid_argument("--baseline-order: expected due-first or most-overdue-first");
  }
  return o;
}

int cmd_rank(const InputFlags& in, const std::string& now_text, const std::string& factors,
             const std::string& out_dir, const std::string& baseline_order) {
  const CalendarDate now = parse_iso(now_text);
  const auto fs_list = parse_factors(factors);
  const auto options = rank_options(baseline_order);
  const auto corpus = load(make_config(in)).corpus;
  fs::create_directories(out_dir);
  const ScoringContext ctx(corpus, now);
  for (Factor f : fs_list) {
    const auto path = run_path(out_dir, now, f);
    write_file(path, run_to_string(rank(ctx, f, options)));
    std::cout << path.string() << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const InputFlags& in, int year, const std::string& factors,
                 const std::string& cutoffs, const std::string& out_dir, bool linear_gain,
                 const std::string& baseline_order) {
  EvalOptions options;
  options.gain = linear_gain ? Gain::linear : Gain::exponential;
  options.rank = rank_options(baseline_order);
  const auto fs_list = parse_factors(factors);
  const auto ks = parse_cutoffs(cutoffs);
  const auto corpus = load(make_config(in)).corpus;
  const auto evaluation = evaluate_year(corpus, year, fs_list, ks, options);

  fs::create_directories(out_dir);
  for (const auto& month : evaluation.months) {
    write_file(fs::path(out_dir) / ("qrels-" + month.qrels.query_id + ".txt"),
               qrels_to_string(month.qrels));
    for (const auto& run : month.runs) {
      write_file(run_path(out_dir, month.now, run.factor), run_to_string(run));
    }
  }
  std::ostringstream report;
  write_report_csv(report, evaluation);
  write_file(fs::path(out_dir) / "report.csv", report.str());
  std::cout << report.str();
  return kExitOk;
}

int cmd_profile(const InputFlags& in, const std::string& now_text, const std::string& conf,
                std::optional<int> year) {
  const CalendarDate now = parse_iso(now_text);
  auto corpus = load(make_config(in)).corpus;
  if (year) corpus = leave_out_snapshot(corpus, *year);
  if (!conf.empty() && !corpus.find(conf)) {
    std::cerr << "error: unknown conference '" << conf << "'\n";
    return kExitInput;
  }
  const ScoringContext ctx(corpus, now);
  std::cout << "conf_key,delta_year,mode_month,delta_month,last_entry,expected_next,delta,"
               "w_delay,w_r,w_i,w_d,w_cit,w_prm\n";
  for (const auto& [key, e] : ctx.entries()) {
    if (!conf.empty() && key != conf) continue;
    const auto& p = e.profile;
    const auto& w = e.weights;
    std::cout << key << ',' << p.delta_year << ',' << p.mode_month << ',' << p.delta_month << ','
              << to_iso(p.last_entry_date) << ',' << to_iso(expected_next_entry(p)) << ','
              << w.delta << ',' << w.delay_base << ',' << format_fixed(w.rating, 3) << ','
              << format_fixed(w.internationality, 3) << ',' << format_fixed(w.discontinued, 3)
              << ',' << format_fixed(w.citation, 3) << ',' << format_fixed(w.prominence, 3)
              << '\n';
  }
  if (!conf.empty() && !ctx.find(conf)) {
    std::cerr << "warning: conference '" << conf << "' has no dated event entered by "
              << to_iso(now) << '\n';
  }
  return kExitOk;
}

// Plain lines are parsed and echoed as date<TAB>country<TAB>title.
// Annotated lines "title<TAB>YYYY-MM|-<TAB>CC|-" are checked instead.
int cmd_parse_titles(const std::string& input, const std::string& gazetteer_path) {
  const std::string gz = gazetteer_path.empty() ? default_gazetteer() : gazetteer_path;
  if (gz.empty()) throw InputError("no gazetteer found; pass --gazetteer");
  const Gazetteer g = Gazetteer::load(gz);

  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) throw InputError(input + ": cannot open file");
    in = &file;
  }
  std::size_t checked = 0, matched = 0, lineno = 0;
  std::string line;
  while (std::getline(*in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);

    const auto date = parse_event_date(cols[0]);
    const auto country = parse_country(cols[0], g);
    const std::string date_text = date ? to_iso(*date) : "-";
    const std::string country_text = country ? *country : "-";
    if (cols.size() == 3) {
      ++checked;
      if (date_text == cols[1] && country_text == cols[2]) {
        ++matched;
      } else {
        std::cout << input << ':' << lineno << ": expected " << cols[1] << ' ' << cols[2]
                  << ", got " << date_text << ' ' << country_text << '\n';
      }
    } else {
      std::cout << date_text << '\t' << country_text << '\t' << cols[0] << '\n';
    }
  }
  if (checked > 0) {
    std::cout << "matched " << matched << '/' << checked << '\n';
    return matched == checked ? kExitOk : kExitInput;
  }
  return kExitOk;
}

int cmd_generate(const SyntheticOptions& options, const std::string& out_dir) {
  write_synthetic(generate_synthetic(options), out_dir);
  for (const char* name : {"events.jsonl", "papers.jsonl", "ratings.csv", "citations.jsonl"}) {
    std::cout << (fs::path(out_dir) / name).string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conference harvesting priority toolkit"};
  app.require_subcommand(1);

  InputFlags in;
  std::string now_text, factors = "all", out_dir = ".", cutoffs = "10,20,50,100,200";
  std::string conf, titles_input = "-", baseline_order = "due-first";
  int year = 0;
  std::optional<int> profile_year;
  bool linear_gain = false;
  SyntheticOptions synth;

  auto* rank_cmd = app.add_subcommand("rank", "Write one run file per factor for --now");
  add_input_flags(rank_cmd, in, true);
  rank_cmd->add_option("--now", now_text, "Ranking date YYYY-MM")->required();
  rank_cmd->add_option("--factor", factors, "Factor name, comma list, or all");
  rank_cmd->add_option("--out", out_dir, "Output directory");
  rank_cmd->add_option("--baseline-order", baseline_order,
                       "due-first (default) or most-overdue-first");

  auto* eval_cmd = app.add_subcommand("evaluate", "Leave-out evaluation over one year");
  add_input_flags(eval_cmd, in, true);
  eval_cmd->add_option("--year", year, "Evaluation year")->required();
  eval_cmd->add_option("--factor", factors, "Factor name, comma list, or all");
  eval_cmd->add_option("--cutoffs", cutoffs, "Comma-separated nDCG cutoffs");
  eval_cmd->add_option("--out", out_dir, "Output directory");
  eval_cmd->add_flag("--linear-gain", linear_gain, "Use linear instead of exponential gain");
  eval_cmd->add_option("--baseline-order", baseline_order,
                       "due-first (default) or most-overdue-first");

  auto* profile_cmd = app.add_subcommand("profile", "Print profiles and weights per conference");
  add_input_flags(profile_cmd, in, true);
  profile_cmd->add_option("--now", now_text, "Date YYYY-MM")->required();
  profile_cmd->add_option("--conf", conf, "Only this conference");
  profile_cmd->add_option("--year", profile_year,
                          "Score from data before this year only (leave-out snapshot)");

  auto* titles_cmd = app.add_subcommand("parse-titles", "Run the title parser over a file");
  titles_cmd->add_option("--input", titles_input, "Titles file, '-' for stdin");
  titles_cmd->add_option("--gazetteer", in.gazetteer, "Gazetteer TSV");

  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic corpus");
  gen_cmd->add_option("--seed", synth.seed, "Random seed");
  gen_cmd->add_option("--out", out_dir, "Output directory");
  gen_cmd->add_option("--conferences", synth.n_conferences, "Number of conferences")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--from", synth.first_year, "First year");
  gen_cmd->add_option("--to", synth.last_year, "Last year");
  gen_cmd->add_option("--biennial", synth.biennial_fraction, "Fraction of biennial series")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--discontinued", synth.discontinued_fraction,
                      "Fraction of discontinued series")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--rated", synth.rated_fraction, "Fraction of rated series")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--international", synth.international_fraction,
                      "Fraction of series changing countries")
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*rank_cmd) return cmd_rank(in, now_text, factors, out_dir, baseline_order);
    if (*eval_cmd) {
      return cmd_evaluate(in, year, factors, cutoffs, out_dir, linear_gain, baseline_order);
    }
    if (*profile_cmd) return cmd_profile(in, now_text, conf, profile_year);
    if (*titles_cmd) return cmd_parse_titles(titles_input, in.gazetteer);
    if (*gen_cmd) return cmd_generate(synth, out_dir);
  } catch (const std::logic_error& e) {
    // InvariantViolation, plus invalid_argument/domain_error raised by bad input.
    if (dynamic_cast<const InvariantViolation*>(&e)) {
      std::cerr << "internal error: " << e.what() << '\n';
      return kExitInternal;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInternal;
}

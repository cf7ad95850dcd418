#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "summ/corpus.hpp"
#include "summ/greedy.hpp"
#include "summ/ilp.hpp"
#include "summ/rouge.hpp"

namespace summ {

enum class Method {
  greedy,
  ilp_set_cover,
  ilp_budget,
  ilp_score,
  title_depth,
  title_bfs,
  title_filter_ilp
};

std::string method_name(Method method);
Method parse_method(const std::string& name);

// "SWDU" subset string -> canonical form; accepts "-" or "none" for the
// empty set. Throws DomainError on unknown letters.
std::string canonical_flags(const std::string& flags);

struct ParamRange {
  double start = 0.0, stop = 0.0, step = 1.0;
  std::vector<double> values() const;
};

struct SweepSpec {
  Method method = Method::greedy;
  std::vector<std::string> flag_grid = {"-"};  // subsets of SWDU
  ParamRange r_range{0.0, 0.0, 1.0};
  ParamRange alpha_range{1.0, 1.0, 1.0};
  ParamRange beta_range{1.0, 1.0, 1.0};
  ParamRange threshold_range{100.0, 100.0, 10.0};
  int word_limit = 100;
  Metric metric = Metric::tfidf;
  LengthBasis length_basis = LengthBasis::surface;
  StopMode stop_mode = StopMode::overrun;
  int depth = 1;  // title_depth levels
  long node_limit = kDefaultNodeLimit;
  int jobs = 1;
  std::string headline_metric = "rouge-1";  // "best parameter" annotations
};

struct ResultRow {
  std::string method;
  std::string flags;
  double r = 0.0, alpha = 1.0, beta = 1.0;
  int threshold = 0;
  std::string metric;
  double recall = 0.0, precision = 0.0, f1 = 0.0;
  double avg_summary_len = 0.0, std_summary_len = 0.0;
  bool is_best = false;
};

// Every grid point summarizes every referenced document and is scored
// as a corpus; one row per (configuration, metric). A failing document
// aborts its configuration with a log line; configurations fan out over
// spec.jobs workers with order-stable assembly, so output never depends
// on the worker count. All headline-metric maxima are flagged is_best.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const Dataset& dataset,
                                 const RougeConfig& config);

// Summaries for a single grid point, in dataset article order.
std::vector<Summary> summarize_corpus(const SweepSpec& spec, const Dataset& dataset,
                                      const std::string& flags, double r, double alpha,
                                      double beta, int threshold);

// Whole documents scored as their own summaries (candidate truncation
// disabled): the extractive recall ceiling. With title_reduce, each
// document is first cut down by title_reduction under `options`.
RougeReport docs_as_summaries(const Dataset& dataset, const RougeConfig& config,
                              bool title_reduce = false,
                              const PreprocessOptions& options = {});

struct LengthStats {
  double avg = 0.0;
  double std = 0.0;
  double pearson = 0.0;
};

// Mean/population-std of summary word counts; when `scores` is aligned
// with `summaries`, also their Pearson correlation.
LengthStats length_stats(const std::vector<Summary>& summaries,
                         const std::vector<double>& scores = {});

// Throws DegenerateVariance when either series is constant.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Lowercased, punctuation-stripped word frequencies over the documents'
// surface tokens; words present in `subtract` are removed before
// ranking (count desc, then word asc).
std::vector<std::pair<std::string, int>> export_frequencies(
    const std::vector<Document>& docs, int top_n,
    const std::vector<Document>& subtract = {});

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_frequencies_csv(const std::vector<std::pair<std::string, int>>& table,
                           std::ostream& out);

}  // namespace summ

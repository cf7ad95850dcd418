#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "summ/corpus.hpp"
#include "summ/greedy.hpp"

namespace summ {

enum class MultiRef { average, best };

struct RougeConfig {
  int n_max = 4;
  bool use_stemming = true;
  int word_limit = 100;  // candidate-only truncation, references used whole
  int bootstrap_samples = 1000;
  double confidence = 95.0;
  bool compute_lcs = true;
  MultiRef multi_ref = MultiRef::average;
  std::uint64_t bootstrap_seed = 20011203;
};

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

struct ScoreIntervals {
  Interval recall, precision, f1;
};

struct RougeReport {
  std::vector<std::string> metrics;  // "rouge-1".."rouge-4", "rouge-l"
  std::vector<std::string> doc_ids;  // evaluation order
  std::map<std::string, std::map<std::string, RougeScore>> per_doc;
  std::map<std::string, RougeScore> corpus_mean;
  std::map<std::string, ScoreIntervals> intervals;
};

// Lowercase, split on non-alphanumeric runs, optionally Porter-stem.
std::vector<std::string> rouge_tokens(const std::string& text, bool stem);

// Clipped n-gram overlap. The candidate is truncated to
// config.word_limit surface words first; multi-reference aggregation is
// config.multi_ref (average = componentwise mean, best = max by f1).
RougeScore rouge_n(const std::string& candidate, const std::vector<std::string>& references,
                   int n, const RougeConfig& config);

// Longest-common-subsequence variant, same protocol.
RougeScore rouge_l(const std::string& candidate, const std::vector<std::string>& references,
                   const RougeConfig& config);

RougeReport evaluate_corpus(const std::vector<Summary>& summaries, const Dataset& dataset,
                            const RougeConfig& config);

// Percentile bootstrap over resampled means; resample i derives its own
// generator from (seed, i), so results are order-independent.
Interval bootstrap_ci(const std::vector<double>& per_doc_values, int samples,
                      double confidence, std::uint64_t seed);

// CSV: doc_id,metric,recall,precision,f1 rows, then mean rows, then
// ci95_low/ci95_high rows per metric.
void write_report_csv(const RougeReport& report, std::ostream& out);

}  // namespace summ

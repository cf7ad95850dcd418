#include "summ/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "summ/error.hpp"
#include "summ/porter.hpp"

namespace summ {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double f_measure(double recall, double precision) {
  double denom = recall + precision;
  return denom > 0.0 ? 2.0 * recall * precision / denom : 0.0;
}

RougeScore aggregate(const std::vector<RougeScore>& per_reference, MultiRef mode) {
  RougeScore out;
  if (mode == MultiRef::best) {
    out = per_reference.front();
    for (const RougeScore& s : per_reference)
      if (s.f1 > out.f1) out = s;
    return out;
  }
  for (const RougeScore& s : per_reference) {
    out.recall += s.recall;
    out.precision += s.precision;
    out.f1 += s.f1;
  }
  double k = static_cast<double>(per_reference.size());
  out.recall /= k;
  out.precision /= k;
  out.f1 /= k;
  return out;
}

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts ngram_counts(const std::vector<std::string>& tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i)
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

int lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const size_t rows = a.size(), cols = b.size();
  std::vector<int> prev(cols + 1, 0), curr(cols + 1, 0);
  for (size_t i = 1; i <= rows; ++i) {
    for (size_t j = 1; j <= cols; ++j)
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    std::swap(prev, curr);
  }
  return prev[cols];
}

std::vector<std::string> candidate_tokens(const std::string& candidate,
                                          const RougeConfig& config) {
  return rouge_tokens(truncate_to_words(candidate, config.word_limit), config.use_stemming);
}

}  // namespace

std::vector<std::string> rouge_tokens(const std::string& text, bool stem) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(stem ? porter_stem(current) : current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(stem ? porter_stem(current) : current);
  return tokens;
}

RougeScore rouge_n(const std::string& candidate, const std::vector<std::string>& references,
                   int n, const RougeConfig& config) {
  if (references.empty()) throw EmptyReference("no references given");
  std::vector<std::string> cand = candidate_tokens(candidate, config);
  NgramCounts cand_counts = ngram_counts(cand, n);
  int cand_total = 0;
  for (const auto& [gram, count] : cand_counts) cand_total += count;

  std::vector<RougeScore> per_reference;
  for (const std::string& reference : references) {
    NgramCounts ref_counts = ngram_counts(rouge_tokens(reference, config.use_stemming), n);
    int ref_total = 0, overlap = 0;
    for (const auto& [gram, count] : ref_counts) {
      ref_total += count;
      auto it = cand_counts.find(gram);
      if (it != cand_counts.end()) overlap += std::min(count, it->second);
    }
    RougeScore s;
    s.recall = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
    s.precision = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
    s.f1 = f_measure(s.recall, s.precision);
    per_reference.push_back(s);
  }
  return aggregate(per_reference, config.multi_ref);
}

RougeScore rouge_l(const std::string& candidate, const std::vector<std::string>& references,
                   const RougeConfig& config) {
  if (references.empty()) throw EmptyReference("no references given");
  std::vector<std::string> cand = candidate_tokens(candidate, config);

  std::vector<RougeScore> per_reference;
  for (const std::string& reference : references) {
    std::vector<std::string> ref = rouge_tokens(reference, config.use_stemming);
    int lcs = lcs_length(cand, ref);
    RougeScore s;
    s.recall = !ref.empty() ? static_cast<double>(lcs) / ref.size() : 0.0;
    s.precision = !cand.empty() ? static_cast<double>(lcs) / cand.size() : 0.0;
    s.f1 = f_measure(s.recall, s.precision);
    per_reference.push_back(s);
  }
  return aggregate(per_reference, config.multi_ref);
}

RougeReport evaluate_corpus(const std::vector<Summary>& summaries, const Dataset& dataset,
                            const RougeConfig& config) {
  RougeReport report;
  for (int n = 1; n <= config.n_max; ++n) report.metrics.push_back("rouge-" + std::to_string(n));
  if (config.compute_lcs) report.metrics.push_back("rouge-l");

  for (const Summary& summary : summaries) {
    auto refs = dataset.references.find(summary.doc_id);
    if (refs == dataset.references.end() || refs->second.empty())
      throw MissingReference("no reference summaries for " + summary.doc_id);
    report.doc_ids.push_back(summary.doc_id);
    auto& scores = report.per_doc[summary.doc_id];
    for (int n = 1; n <= config.n_max; ++n)
      scores["rouge-" + std::to_string(n)] = rouge_n(summary.text, refs->second, n, config);
    if (config.compute_lcs) scores["rouge-l"] = rouge_l(summary.text, refs->second, config);
  }

  const double count = static_cast<double>(report.doc_ids.size());
  for (const std::string& metric : report.metrics) {
    RougeScore mean;
    std::vector<double> recalls, precisions, f1s;
    for (const std::string& doc_id : report.doc_ids) {
      const RougeScore& s = report.per_doc[doc_id][metric];
      mean.recall += s.recall;
      mean.precision += s.precision;
      mean.f1 += s.f1;
      recalls.push_back(s.recall);
      precisions.push_back(s.precision);
      f1s.push_back(s.f1);
    }
    if (count > 0) {
      mean.recall /= count;
      mean.precision /= count;
      mean.f1 /= count;
    }
    report.corpus_mean[metric] = mean;
    if (count > 0 && config.bootstrap_samples > 0) {
      ScoreIntervals ci;
      ci.recall = bootstrap_ci(recalls, config.bootstrap_samples, config.confidence,
                               config.bootstrap_seed);
      ci.precision = bootstrap_ci(precisions, config.bootstrap_samples, config.confidence,
                                  config.bootstrap_seed);
      ci.f1 = bootstrap_ci(f1s, config.bootstrap_samples, config.confidence,
                           config.bootstrap_seed);
      report.intervals[metric] = ci;
    }
  }
  return report;
}

Interval bootstrap_ci(const std::vector<double>& per_doc_values, int samples,
                      double confidence, std::uint64_t seed) {
  const size_t n = per_doc_values.size();
  std::vector<double> means;
  means.reserve(samples);
  for (int r = 0; r < samples; ++r) {
    std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r + 1));
    double sum = 0.0;
    for (size_t t = 0; t < n; ++t) sum += per_doc_values[splitmix64(state) % n];
    means.push_back(sum / static_cast<double>(n));
  }
  std::sort(means.begin(), means.end());

  auto quantile = [&](double p) {
    double h = (means.size() - 1) * p;
    size_t lo = static_cast<size_t>(h);
    if (lo + 1 >= means.size()) return means.back();
    return means[lo] + (h - lo) * (means[lo + 1] - means[lo]);
  };
  double tail = (1.0 - confidence / 100.0) / 2.0;
  return Interval{quantile(tail), quantile(1.0 - tail)};
}

void write_report_csv(const RougeReport& report, std::ostream& out) {
  char line[160];
  auto row = [&](const std::string& id, const std::string& metric, const RougeScore& s) {
    std::snprintf(line, sizeof line, "%s,%s,%.6f,%.6f,%.6f\n", id.c_str(), metric.c_str(),
                  s.recall, s.precision, s.f1);
    out << line;
  };
  out << "doc_id,metric,recall,precision,f1\n";
  for (const std::string& doc_id : report.doc_ids)
    for (const std::string& metric : report.metrics)
      row(doc_id, metric, report.per_doc.at(doc_id).at(metric));
  for (const std::string& metric : report.metrics)
    row("mean", metric, report.corpus_mean.at(metric));
  for (const std::string& metric : report.metrics) {
    auto it = report.intervals.find(metric);
    if (it == report.intervals.end()) continue;
    row("ci95_low", metric,
        RougeScore{it->second.recall.low, it->second.precision.low, it->second.f1.low});
    row("ci95_high", metric,
        RougeScore{it->second.recall.high, it->second.precision.high, it->second.f1.high});
  }
}

}  // namespace summ

#include "summ/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <thread>

#include "summ/error.hpp"
#include "summ/titled.hpp"

namespace summ {
namespace {

struct GridPoint {
  std::string flags;
  double r = 0.0, alpha = 1.0, beta = 1.0;
  int threshold = 0;
};

struct Prepped {
  std::vector<Document> docs;
  std::vector<TermSentenceMatrix> matrices;
};

bool has_flag(const std::string& flags, char f) { return flags.find(f) != std::string::npos; }

PreprocessOptions options_for(const std::string& flags) {
  PreprocessOptions options;
  options.stem = has_flag(flags, 'S');
  options.remove_stopwords = has_flag(flags, 'W');
  return options;
}

ScoringParams params_for(const SweepSpec& spec, const GridPoint& g) {
  ScoringParams params;
  params.metric = spec.metric;
  params.alpha = g.alpha;
  params.beta = g.beta;
  params.r = g.r;
  params.distinct = has_flag(g.flags, 'D');
  params.update_on_fly = has_flag(g.flags, 'U');
  params.length_basis = spec.length_basis;
  return params;
}

bool uses_threshold(Method method) {
  return method == Method::ilp_budget || method == Method::ilp_score ||
         method == Method::title_filter_ilp;
}

Summary summarize_document(const SweepSpec& spec, const Document& doc,
                           const TermSentenceMatrix& matrix, const ScoringParams& params,
                           int threshold) {
  switch (spec.method) {
    case Method::greedy:
      return greedy_summarize(doc, matrix, params, spec.word_limit, spec.stop_mode);
    case Method::ilp_set_cover:
      return ilp_summarize(doc, matrix, Formulation::set_cover, params, 0, spec.word_limit,
                           spec.node_limit);
    case Method::ilp_budget:
      return ilp_summarize(doc, matrix, Formulation::budget, params, threshold,
                           spec.word_limit, spec.node_limit);
    case Method::ilp_score:
      return ilp_summarize(doc, matrix, Formulation::score, params, threshold,
                           spec.word_limit, spec.node_limit);
    case Method::title_depth: {
      LevelTree tree = title_reduction(doc, doc.title_terms);
      return depth_summary(tree, doc, spec.depth, spec.word_limit);
    }
    case Method::title_bfs: {
      LevelTree tree = title_reduction(doc, doc.title_terms);
      return bfs_summary(tree, doc, spec.word_limit);
    }
    case Method::title_filter_ilp: {
      LevelTree tree = title_reduction(doc, doc.title_terms);
      Document filtered = title_filter(doc, tree);
      Summary summary;
      if (filtered.sentences.empty()) {
        summary = assemble_summary(doc, {}, spec.word_limit, "title_filter_ilp");
      } else {
        TermSentenceMatrix reduced = build_term_matrix(filtered);
        summary = ilp_summarize(filtered, reduced, Formulation::score, params, threshold,
                                spec.word_limit, spec.node_limit);
        summary.method_tag = "title_filter_ilp";
        std::vector<int> original = bfs_order(tree);  // filtered index -> original index
        for (int& index : summary.selected) index = original[index];
      }
      return summary;
    }
  }
  throw DomainError("unknown method");
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string method_name(Method method) {
  switch (method) {
    case Method::greedy: return "greedy";
    case Method::ilp_set_cover: return "ilp_set_cover";
    case Method::ilp_budget: return "ilp_budget";
    case Method::ilp_score: return "ilp_score";
    case Method::title_depth: return "title_depth";
    case Method::title_bfs: return "title_bfs";
    case Method::title_filter_ilp: return "title_filter_ilp";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::greedy, Method::ilp_set_cover, Method::ilp_budget,
                   Method::ilp_score, Method::title_depth, Method::title_bfs,
                   Method::title_filter_ilp})
    if (method_name(m) == name) return m;
  throw DomainError("unknown method: " + name);
}

std::string canonical_flags(const std::string& flags) {
  if (flags.empty() || flags == "-" || flags == "none") return "-";
  std::string canonical;
  for (char f : {'S', 'W', 'D', 'U'})
    if (flags.find(f) != std::string::npos ||
        flags.find(static_cast<char>(std::tolower(f))) != std::string::npos)
      canonical.push_back(f);
  size_t recognized = 0;
  for (char c : flags)
    if (canonical.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c)))) !=
        std::string::npos)
      ++recognized;
  if (recognized != flags.size())
    throw DomainError("unknown flag letters in '" + flags + "' (expected subset of SWDU)");
  return canonical;
}

std::vector<double> ParamRange::values() const {
  if (step <= 0.0) throw DomainError("range step must be positive");
  std::vector<double> out;
  int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (int k = 0; k < std::max(count, 1); ++k) out.push_back(start + k * step);
  return out;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const Dataset& dataset,
                                 const RougeConfig& config) {
  std::vector<const RawArticle*> articles;
  for (const RawArticle& article : dataset.articles) {
    auto it = dataset.references.find(article.doc_id);
    if (it != dataset.references.end() && !it->second.empty()) articles.push_back(&article);
  }
  if (articles.empty()) throw MissingReference("dataset has no referenced articles");
  if (articles.size() < dataset.articles.size())
    std::cerr << "note: skipping " << dataset.articles.size() - articles.size()
              << " article(s) without references\n";

  std::vector<std::string> flag_sets;
  for (const std::string& flags : spec.flag_grid) flag_sets.push_back(canonical_flags(flags));

  // Preprocessing depends only on S and W; share documents across the grid.
  std::map<std::pair<bool, bool>, Prepped> cache;
  std::vector<std::string> dropped;
  for (const std::string& flags : flag_sets) {
    std::pair<bool, bool> key{has_flag(flags, 'S'), has_flag(flags, 'W')};
    if (cache.count(key)) continue;
    Prepped prepped;
    for (const RawArticle* article : articles) {
      try {
        Document doc = make_document(*article, options_for(flags));
        prepped.matrices.push_back(build_term_matrix(doc));
        prepped.docs.push_back(std::move(doc));
      } catch (const Error& e) {
        prepped.docs.emplace_back();  // placeholder, pruned below
        prepped.matrices.emplace_back();
        dropped.push_back(article->doc_id + " (" + e.what() + ")");
        prepped.docs.back().doc_id = article->doc_id;
      }
    }
    cache.emplace(key, std::move(prepped));
  }
  // A document that fails preprocessing under any requested flag set is
  // dropped everywhere so every configuration scores the same corpus.
  std::sort(dropped.begin(), dropped.end());
  dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
  if (!dropped.empty()) {
    std::vector<char> keep(articles.size(), 1);
    for (auto& [key, prepped] : cache)
      for (size_t i = 0; i < prepped.docs.size(); ++i)
        if (prepped.docs[i].sentences.empty()) keep[i] = 0;
    for (auto& [key, prepped] : cache) {
      Prepped pruned;
      for (size_t i = 0; i < prepped.docs.size(); ++i)
        if (keep[i]) {
          pruned.docs.push_back(std::move(prepped.docs[i]));
          pruned.matrices.push_back(std::move(prepped.matrices[i]));
        }
      prepped = std::move(pruned);
    }
    for (const std::string& line : dropped)
      std::cerr << "note: dropped document " << line << "\n";
  }

  std::vector<GridPoint> grid;
  std::vector<int> thresholds;
  if (uses_threshold(spec.method))
    for (double t : spec.threshold_range.values()) thresholds.push_back(std::lround(t));
  else
    thresholds.push_back(0);
  for (const std::string& flags : flag_sets)
    for (double r : spec.r_range.values())
      for (double alpha : spec.alpha_range.values())
        for (double beta : spec.beta_range.values())
          for (int threshold : thresholds) grid.push_back({flags, r, alpha, beta, threshold});

  RougeConfig sweep_config = config;
  sweep_config.bootstrap_samples = 0;  // intervals are not part of sweep rows

  std::vector<std::vector<ResultRow>> slots(grid.size());
  std::vector<std::string> failures(grid.size());
  std::atomic<size_t> cursor{0};
  auto work = [&] {
    for (size_t k = cursor.fetch_add(1); k < grid.size(); k = cursor.fetch_add(1)) {
      const GridPoint& g = grid[k];
      const Prepped& prepped = cache.at({has_flag(g.flags, 'S'), has_flag(g.flags, 'W')});
      ScoringParams params = params_for(spec, g);
      std::string current_doc;
      try {
        std::vector<Summary> summaries;
        for (size_t i = 0; i < prepped.docs.size(); ++i) {
          current_doc = prepped.docs[i].doc_id;
          summaries.push_back(summarize_document(spec, prepped.docs[i], prepped.matrices[i],
                                                 params, g.threshold));
        }
        RougeReport report = evaluate_corpus(summaries, dataset, sweep_config);
        LengthStats lengths = length_stats(summaries);
        for (const std::string& metric : report.metrics) {
          const RougeScore& mean = report.corpus_mean.at(metric);
          ResultRow row;
          row.method = method_name(spec.method);
          row.flags = g.flags;
          row.r = g.r;
          row.alpha = g.alpha;
          row.beta = g.beta;
          row.threshold = g.threshold;
          row.metric = metric;
          row.recall = mean.recall;
          row.precision = mean.precision;
          row.f1 = mean.f1;
          row.avg_summary_len = lengths.avg;
          row.std_summary_len = lengths.std;
          slots[k].push_back(std::move(row));
        }
      } catch (const std::exception& e) {
        failures[k] = "configuration flags=" + g.flags + " r=" + format_param(g.r) +
                      " alpha=" + format_param(g.alpha) + " beta=" + format_param(g.beta) +
                      " threshold=" + std::to_string(g.threshold) + " failed at doc " +
                      current_doc + ": " + e.what();
      }
    }
  };
  const int jobs = std::max(1, spec.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  std::vector<ResultRow> rows;
  for (size_t k = 0; k < grid.size(); ++k) {
    if (!failures[k].empty()) {
      std::cerr << "error: " << failures[k] << "\n";
      continue;
    }
    rows.insert(rows.end(), slots[k].begin(), slots[k].end());
  }

  double best = -1.0;
  for (const ResultRow& row : rows)
    if (row.metric == spec.headline_metric) best = std::max(best, row.f1);
  for (ResultRow& row : rows)
    if (row.metric == spec.headline_metric && row.f1 == best) row.is_best = true;
  return rows;
}

std::vector<Summary> summarize_corpus(const SweepSpec& spec, const Dataset& dataset,
                                      const std::string& flags, double r, double alpha,
                                      double beta, int threshold) {
  GridPoint g{canonical_flags(flags), r, alpha, beta, threshold};
  ScoringParams params = params_for(spec, g);
  PreprocessOptions options = options_for(g.flags);
  std::vector<Summary> summaries;
  for (const RawArticle& article : dataset.articles) {
    Document doc = make_document(article, options);
    TermSentenceMatrix matrix = build_term_matrix(doc);
    summaries.push_back(summarize_document(spec, doc, matrix, params, threshold));
  }
  return summaries;
}

RougeReport docs_as_summaries(const Dataset& dataset, const RougeConfig& config,
                              bool title_reduce, const PreprocessOptions& options) {
  RougeConfig whole = config;
  whole.word_limit = std::numeric_limits<int>::max();  // candidates used untruncated
  std::vector<Summary> candidates;
  size_t skipped = 0;
  for (const RawArticle& article : dataset.articles) {
    auto it = dataset.references.find(article.doc_id);
    if (it == dataset.references.end() || it->second.empty()) {
      ++skipped;
      continue;
    }
    Summary s;
    s.doc_id = article.doc_id;
    s.method_tag = title_reduce ? "title_reduction_doc" : "document";
    if (title_reduce) {
      Document doc = make_document(article, options);
      LevelTree tree = title_reduction(doc, doc.title_terms);
      s.selected = bfs_order(tree);
      for (int index : s.selected) {
        if (!s.text.empty()) s.text.push_back(' ');
        s.text += doc.sentences[index].raw_text;
      }
    } else {
      s.text = article.body_text;
    }
    s.word_count = count_surface_words(s.text);
    candidates.push_back(std::move(s));
  }
  if (candidates.empty()) throw MissingReference("dataset has no referenced articles");
  if (skipped > 0)
    std::cerr << "note: skipping " << skipped << " article(s) without references\n";
  return evaluate_corpus(candidates, dataset, whole);
}

LengthStats length_stats(const std::vector<Summary>& summaries,
                         const std::vector<double>& scores) {
  LengthStats stats;
  if (summaries.empty()) return stats;
  std::vector<double> lengths;
  for (const Summary& s : summaries) lengths.push_back(s.word_count);
  double n = static_cast<double>(lengths.size());
  for (double v : lengths) stats.avg += v;
  stats.avg /= n;
  for (double v : lengths) stats.std += (v - stats.avg) * (v - stats.avg);
  stats.std = std::sqrt(stats.std / n);
  if (!scores.empty()) stats.pearson = pearson(lengths, scores);
  return stats;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw DomainError("pearson needs two aligned series of length >= 2");
  double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw DegenerateVariance("pearson undefined for a constant series");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::pair<std::string, int>> export_frequencies(
    const std::vector<Document>& docs, int top_n, const std::vector<Document>& subtract) {
  PreprocessOptions plain;  // lowercase + punctuation stripping only
  WordSet empty_stopwords;
  std::map<std::string, int> counts;
  for (const Document& doc : docs)
    for (const Sentence& s : doc.sentences)
      for (const Term& word : normalize_terms(s.surface_tokens, plain, empty_stopwords))
        ++counts[word];
  if (!subtract.empty()) {
    WordSet common;
    for (const Document& doc : subtract)
      for (const Sentence& s : doc.sentences)
        for (const Term& word : normalize_terms(s.surface_tokens, plain, empty_stopwords))
          common.insert(word);
    for (auto it = counts.begin(); it != counts.end();)
      it = common.count(it->first) ? counts.erase(it) : std::next(it);
  }
  std::vector<std::pair<std::string, int>> table(counts.begin(), counts.end());
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (static_cast<int>(table.size()) > top_n) table.resize(top_n);
  return table;
}

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "method,flags,r,alpha,beta,threshold,metric,recall,precision,f1,"
         "avg_summary_len,std_summary_len,is_best\n";
  char buf[256];
  for (const ResultRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%g,%g,%g,%d,%s,%.6f,%.6f,%.6f,%.4f,%.4f,%d\n",
                  row.method.c_str(), row.flags.c_str(), row.r, row.alpha, row.beta,
                  row.threshold, row.metric.c_str(), row.recall, row.precision, row.f1,
                  row.avg_summary_len, row.std_summary_len, row.is_best ? 1 : 0);
    out << buf;
  }
}

void write_frequencies_csv(const std::vector<std::pair<std::string, int>>& table,
                           std::ostream& out) {
  out << "word,count\n";
  for (const auto& [word, count] : table) out << word << "," << count << "\n";
}

}  // namespace summ

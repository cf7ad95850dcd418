#include "summ/greedy.hpp"

#include <algorithm>
#include <cctype>

#include "summ/error.hpp"

namespace summ {
namespace {

bool is_space_char(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void zero_covered_terms(TermWeights& weights, const TermSentenceMatrix& matrix, int picked) {
  for (int j = 0; j < matrix.m(); ++j) {
    if (matrix.counts(j, picked) == 0) continue;
    if (weights.scope == WeightScope::document)
      weights.doc(j) = 0.0;
    else
      weights.per_sentence.row(j).setZero();
  }
}

}  // namespace

std::vector<int> greedy_select(const Document& doc, const TermSentenceMatrix& matrix,
                               TermWeights weights, const ScoringParams& params,
                               int budget_words, StopMode stop_mode) {
  const int n = matrix.n();
  std::vector<char> taken(n, 0);
  std::vector<int> selected;
  int used_words = 0;
  while (true) {
    if (stop_mode == StopMode::overrun && used_words >= budget_words) break;
    int best = -1;
    double best_score = 0.0;
    for (int i = 0; i < n; ++i) {
      if (taken[i] || !matrix.eligible[i]) continue;
      double raw = sentence_raw_score(i, matrix, weights, params.distinct);
      double score =
          r_normalize(raw, sentence_length(doc.sentences[i], params.length_basis), params.r);
      if (best < 0 || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best < 0) break;  // exhausted
    if (params.update_on_fly && best_score <= 0.0) break;
    if (stop_mode == StopMode::exact &&
        used_words + doc.sentences[best].word_count > budget_words)
      break;
    taken[best] = 1;
    selected.push_back(best);
    used_words += doc.sentences[best].word_count;
    if (params.update_on_fly) zero_covered_terms(weights, matrix, best);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

Summary greedy_summarize(const Document& doc, const TermSentenceMatrix& matrix,
                         const ScoringParams& params, int budget_words, StopMode stop_mode) {
  if (doc.sentences.empty()) throw EmptyDocument("no sentences in " + doc.doc_id);
  std::vector<int> selected = greedy_select(doc, matrix, metric_weights(matrix, params),
                                            params, budget_words, stop_mode);
  return assemble_summary(doc, std::move(selected), budget_words, "greedy");
}

std::string truncate_to_words(const std::string& text, int limit) {
  std::string out;
  int words = 0;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n && words < limit) {
    while (i < n && is_space_char(text[i])) ++i;
    size_t begin = i;
    while (i < n && !is_space_char(text[i])) ++i;
    if (i == begin) break;
    std::string chunk = text.substr(begin, i - begin);
    int chunk_words = 0;
    for (const std::string& token : tokenize(chunk))
      if (!is_punctuation_token(token)) ++chunk_words;
    if (!out.empty()) out.push_back(' ');
    if (words + chunk_words <= limit) {
      out += chunk;
      words += chunk_words;
    } else {
      // cut inside the chunk, right after its last fitting word
      for (const std::string& token : tokenize(chunk)) {
        if (!is_punctuation_token(token)) {
          if (words == limit) break;
          ++words;
        }
        out += token;
        if (words == limit) break;
      }
      break;
    }
  }
  return out;
}

Summary assemble_summary(const Document& doc, std::vector<int> selected, int word_limit,
                         const std::string& method_tag) {
  std::string text;
  for (int index : selected) {
    if (!text.empty()) text.push_back(' ');
    text += doc.sentences[index].raw_text;
  }
  Summary summary;
  summary.doc_id = doc.doc_id;
  summary.selected = std::move(selected);
  summary.text = truncate_to_words(text, word_limit);
  summary.word_count = count_surface_words(summary.text);
  summary.method_tag = method_tag;
  return summary;
}

int count_surface_words(const std::string& text) {
  int words = 0;
  for (const std::string& token : tokenize(text))
    if (!is_punctuation_token(token)) ++words;
  return words;
}

}  // namespace summ

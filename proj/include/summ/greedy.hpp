#pragma once

#include <string>
#include <vector>

#include "summ/scoring.hpp"
#include "summ/textproc.hpp"

namespace summ {

struct Summary {
  std::string doc_id;
  std::vector<int> selected;  // sentence indices in output order
  std::string text;
  int word_count = 0;  // surface words of the emitted text
  std::string method_tag;
};

// overrun: keep adding whole sentences until the budget is reached or
// exceeded, then truncate. exact: stop before the first sentence that
// would not fit.
enum class StopMode { overrun, exact };

// Builds weights for params.metric and repeatedly picks the highest
// r-normalized sentence (ties -> lower index). With update_on_fly, the
// weights of every term in a picked sentence drop to zero.
Summary greedy_summarize(const Document& doc, const TermSentenceMatrix& matrix,
                         const ScoringParams& params, int budget_words,
                         StopMode stop_mode = StopMode::overrun);

// Greedy selection loop against caller-supplied weights (the
// metric-agnostic core; greedy_summarize wraps it).
std::vector<int> greedy_select(const Document& doc, const TermSentenceMatrix& matrix,
                               TermWeights weights, const ScoringParams& params,
                               int budget_words, StopMode stop_mode);

// First `limit` surface words; punctuation tokens do not count and a
// straddling chunk is cut right after its limit-th word. Kept chunks are
// joined by single spaces.
std::string truncate_to_words(const std::string& text, int limit);

// Joins the selected sentences in the order given and truncates.
Summary assemble_summary(const Document& doc, std::vector<int> selected, int word_limit,
                         const std::string& method_tag);

int count_surface_words(const std::string& text);

}  // namespace summ

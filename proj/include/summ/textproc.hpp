#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "summ/types.hpp"

namespace summ {

struct PreprocessOptions {
  bool stem = false;             // S
  bool remove_stopwords = false; // W
  bool lowercase = true;
  bool strip_punctuation = true;
};

struct Sentence {
  int index = 0;
  std::string raw_text;
  std::vector<std::string> surface_tokens;
  TermList terms;      // normalized view under the document's options
  int word_count = 0;  // surface tokens that are not punctuation-only
};

struct Document {
  std::string doc_id;
  TermList title_terms;
  std::vector<Sentence> sentences;
  PreprocessOptions options_applied;
};

// Rows are sorted distinct normalized terms, columns are sentences.
// A sentence whose normalized term list is empty keeps its column
// (all zeros) but is marked ineligible for selection.
struct TermSentenceMatrix {
  TermList terms;
  IntMatrix counts;  // m x n
  std::vector<char> eligible;
  int m() const { return static_cast<int>(counts.rows()); }
  int n() const { return static_cast<int>(counts.cols()); }
  int term_index(const Term& t) const;  // -1 when absent
};

using WordSet = std::unordered_set<std::string>;

WordSet load_word_list(const std::filesystem::path& file);

// Shipped stopword list; SUMM_STOPWORDS environment variable overrides the path.
const WordSet& default_stopwords();
// Sentence-splitter abbreviation exceptions ("mr", "u.s", ...), stored
// lowercase without the trailing period.
const WordSet& default_abbreviations();

bool is_punctuation_token(const std::string& token);

std::vector<std::string> split_sentences(const std::string& text,
                                         const WordSet& abbreviations);
std::vector<std::string> split_sentences(const std::string& text);

std::vector<std::string> tokenize(const std::string& sentence_text);

TermList normalize_terms(const std::vector<std::string>& tokens,
                         const PreprocessOptions& options,
                         const WordSet& stopwords);
TermList normalize_terms(const std::vector<std::string>& tokens,
                         const PreprocessOptions& options);

// Splits, tokenizes and normalizes body text; title_terms left empty
// (corpus::make_document fills it via effective_title).
Document preprocess_document(const std::string& doc_id, const std::string& body,
                             const PreprocessOptions& options,
                             const WordSet& stopwords, const WordSet& abbreviations);
Document preprocess_document(const std::string& doc_id, const std::string& body,
                             const PreprocessOptions& options);

TermSentenceMatrix build_term_matrix(const Document& doc);

}  // namespace summ

#include "summ/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>

#include "summ/error.hpp"
#include "summ/porter.hpp"

#ifndef SUMM_DATA_DIR
#define SUMM_DATA_DIR "data"
#endif

namespace summ {
namespace {

bool is_punct_char(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
bool is_space_char(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper_char(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// The whitespace-delimited chunk ending at position `end` (exclusive),
// with edge punctuation other than '.' stripped and trailing periods
// removed. "U.S." -> "U.S", "(Mr." -> "Mr".
std::string word_before(const std::string& text, size_t end) {
  size_t begin = end;
  while (begin > 0 && !is_space_char(text[begin - 1])) --begin;
  while (begin < end && is_punct_char(text[begin]) && text[begin] != '.') ++begin;
  while (end > begin && text[end - 1] == '.') --end;
  return text.substr(begin, end - begin);
}

}  // namespace

int TermSentenceMatrix::term_index(const Term& t) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), t);
  if (it == terms.end() || *it != t) return -1;
  return static_cast<int>(it - terms.begin());
}

WordSet load_word_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open word list: " + file.string());
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) words.insert(to_lower(line));
  }
  return words;
}

const WordSet& default_stopwords() {
  static const WordSet words = [] {
    if (const char* env = std::getenv("SUMM_STOPWORDS"))
      return load_word_list(env);
    return load_word_list(std::filesystem::path(SUMM_DATA_DIR) / "stopwords_en.txt");
  }();
  return words;
}

const WordSet& default_abbreviations() {
  static const WordSet words =
      load_word_list(std::filesystem::path(SUMM_DATA_DIR) / "abbreviations_en.txt");
  return words;
}

bool is_punctuation_token(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), is_punct_char);
}

std::vector<std::string> split_sentences(const std::string& text,
                                         const WordSet& abbreviations) {
  std::vector<std::string> sentences;
  const size_t n = text.size();
  size_t start = 0;
  auto emit = [&](size_t end) {
    size_t b = start, e = end;
    while (b < e && is_space_char(text[b])) ++b;
    while (e > b && is_space_char(text[e - 1])) --e;
    if (e > b) sentences.push_back(text.substr(b, e - b));
    start = end;
  };
  for (size_t i = 0; i < n; ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    size_t j = i + 1;
    while (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' || text[j] == ']'))
      ++j;
    if (j >= n || !is_space_char(text[j])) continue;
    size_t k = j;
    while (k < n && is_space_char(text[k])) ++k;
    if (k < n) {
      char next = text[k];
      if ((next == '"' || next == '\'' || next == '(') && k + 1 < n) next = text[k + 1];
      if (!is_upper_char(next)) continue;
    }
    if (c == '.') {
      std::string prev = word_before(text, i);
      bool initial = prev.size() == 1 && is_upper_char(prev[0]);  // "John F. Kennedy"
      if (initial || abbreviations.count(to_lower(prev))) continue;
    }
    emit(j);
    i = j - 1;
  }
  emit(n);
  return sentences;
}

std::vector<std::string> split_sentences(const std::string& text) {
  return split_sentences(text, default_abbreviations());
}

std::vector<std::string> tokenize(const std::string& sentence_text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  const size_t n = sentence_text.size();
  while (i < n) {
    while (i < n && is_space_char(sentence_text[i])) ++i;
    size_t begin = i;
    while (i < n && !is_space_char(sentence_text[i])) ++i;
    if (i == begin) break;
    std::string chunk = sentence_text.substr(begin, i - begin);
    size_t lo = 0, hi = chunk.size();
    while (lo < hi && is_punct_char(chunk[lo]))
      tokens.push_back(std::string(1, chunk[lo++]));
    size_t core_end = hi;
    while (core_end > lo && is_punct_char(chunk[core_end - 1])) --core_end;
    if (core_end > lo) {
      std::string core = chunk.substr(lo, core_end - lo);
      size_t m = core.size();
      if (m > 2 && core[m - 2] == '\'' && (core[m - 1] == 's' || core[m - 1] == 'S')) {
        tokens.push_back(core.substr(0, m - 2));
        tokens.push_back(core.substr(m - 2));
      } else {
        tokens.push_back(core);
      }
    }
    for (size_t k = core_end; k < hi; ++k) tokens.push_back(std::string(1, chunk[k]));
  }
  return tokens;
}

TermList normalize_terms(const std::vector<std::string>& tokens,
                         const PreprocessOptions& options,
                         const WordSet& stopwords) {
  TermList terms;
  terms.reserve(tokens.size());
  for (const std::string& token : tokens) {
    std::string t = options.lowercase ? to_lower(token) : token;
    if (options.strip_punctuation) {
      size_t b = 0, e = t.size();
      while (b < e && is_punct_char(t[b])) ++b;
      while (e > b && is_punct_char(t[e - 1])) --e;
      t = t.substr(b, e - b);
    }
    if (t.empty()) continue;
    if (options.remove_stopwords && stopwords.count(t)) continue;
    if (options.stem) t = porter_stem(t);
    terms.push_back(std::move(t));
  }
  return terms;
}

TermList normalize_terms(const std::vector<std::string>& tokens,
                         const PreprocessOptions& options) {
  return normalize_terms(tokens, options,
                         options.remove_stopwords ? default_stopwords() : WordSet{});
}

Document preprocess_document(const std::string& doc_id, const std::string& body,
                             const PreprocessOptions& options,
                             const WordSet& stopwords, const WordSet& abbreviations) {
  Document doc;
  doc.doc_id = doc_id;
  doc.options_applied = options;
  for (const std::string& raw : split_sentences(body, abbreviations)) {
    Sentence s;
    s.index = static_cast<int>(doc.sentences.size());
    s.raw_text = raw;
    s.surface_tokens = tokenize(raw);
    s.terms = normalize_terms(s.surface_tokens, options, stopwords);
    for (const std::string& tok : s.surface_tokens)
      if (!is_punctuation_token(tok)) ++s.word_count;
    if (s.word_count == 0) continue;  // punctuation-only fragment, not a sentence
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

Document preprocess_document(const std::string& doc_id, const std::string& body,
                             const PreprocessOptions& options) {
  return preprocess_document(doc_id, body, options,
                             options.remove_stopwords ? default_stopwords() : WordSet{},
                             default_abbreviations());
}

TermSentenceMatrix build_term_matrix(const Document& doc) {
  const int n = static_cast<int>(doc.sentences.size());
  std::map<Term, int> vocab;
  for (const Sentence& s : doc.sentences)
    for (const Term& t : s.terms) vocab.emplace(t, 0);
  if (vocab.empty()) throw EmptyVocabulary("document normalized to empty: " + doc.doc_id);

  TermSentenceMatrix matrix;
  matrix.terms.reserve(vocab.size());
  for (auto& [term, idx] : vocab) {
    idx = static_cast<int>(matrix.terms.size());
    matrix.terms.push_back(term);
  }
  const int m = static_cast<int>(matrix.terms.size());
  matrix.counts = IntMatrix::Zero(m, n);
  matrix.eligible.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (const Term& t : doc.sentences[i].terms) matrix.counts(vocab[t], i) += 1;
    matrix.eligible[i] = doc.sentences[i].terms.empty() ? 0 : 1;
  }
  return matrix;
}

}  // namespace summ

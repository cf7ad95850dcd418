#pragma once

#include "summ/textproc.hpp"
#include "summ/types.hpp"

namespace summ {

enum class Metric { tfidf, stfidf, tf };
enum class LengthBasis { surface, normalized };

struct ScoringParams {
  Metric metric = Metric::tfidf;
  double alpha = 1.0;  // exponent on tf
  double beta = 1.0;   // exponent on idf
  double r = 0.0;      // length-normalization exponent, may be negative
  bool distinct = false;       // D: count each term of a sentence once
  bool update_on_fly = false;  // U: zero covered term weights after each pick
  LengthBasis length_basis = LengthBasis::surface;
};

enum class WeightScope { document, per_sentence };

struct TermWeights {
  WeightScope scope = WeightScope::document;
  Vector doc;           // m, document scope
  Matrix per_sentence;  // m x n, per-sentence scope
  double at(int term, int sentence) const {
    return scope == WeightScope::document ? doc(term) : per_sentence(term, sentence);
  }
};

// idf_j = ln(N / df_j) with df_j = number of sentences containing term j.
TermWeights inverse_document_frequency(const TermSentenceMatrix& matrix);

TermWeights term_frequency(const TermSentenceMatrix& matrix, WeightScope scope);

// score = tf^alpha * idf^beta with 0^0 := 1. A term with idf = 0 and
// beta < 0 scores 0 (with a warning) instead of dividing by zero.
// Per-sentence entries with tf = 0 (term absent) stay 0; a zero tf in
// document scope with alpha < 0 is a DomainError.
TermWeights combined_score(const TermWeights& tf, const TermWeights& idf,
                           const ScoringParams& params);

// Weights for the configured metric: tfidf, stfidf (per-sentence tf), or
// plain tf^alpha.
TermWeights metric_weights(const TermSentenceMatrix& matrix, const ScoringParams& params);

double sentence_raw_score(int sentence_index, const TermSentenceMatrix& matrix,
                          const TermWeights& weights, bool distinct);

// raw / length^r (Eq. 2 shape; r=1 is classic length normalization).
double r_normalize(double raw, int length, double r);

// |s| under the configured basis: surface word count or normalized term count.
int sentence_length(const Sentence& sentence, LengthBasis basis);

}  // namespace summ

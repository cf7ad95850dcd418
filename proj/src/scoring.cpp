#include "summ/scoring.hpp"

#include <cmath>
#include <iostream>

#include "summ/error.hpp"

namespace summ {
namespace {

double checked_pow(double base, double exponent) {
  if (exponent == 0.0) return 1.0;  // 0^0 := 1
  return std::pow(base, exponent);
}

}  // namespace

TermWeights inverse_document_frequency(const TermSentenceMatrix& matrix) {
  TermWeights idf;
  idf.scope = WeightScope::document;
  const int m = matrix.m();
  const double n = matrix.n();
  idf.doc = Vector::Zero(m);
  for (int j = 0; j < m; ++j) {
    int df = (matrix.counts.row(j).array() > 0).count();
    idf.doc(j) = std::log(n / df);
  }
  return idf;
}

TermWeights term_frequency(const TermSentenceMatrix& matrix, WeightScope scope) {
  TermWeights tf;
  tf.scope = scope;
  if (scope == WeightScope::document)
    tf.doc = matrix.counts.cast<double>().rowwise().sum();
  else
    tf.per_sentence = matrix.counts.cast<double>();
  return tf;
}

TermWeights combined_score(const TermWeights& tf, const TermWeights& idf,
                           const ScoringParams& params) {
  TermWeights score;
  score.scope = tf.scope;
  int zero_idf_negative_beta = 0;
  auto one_term = [&](double tf_value, double idf_value) -> double {
    if (idf_value == 0.0 && params.beta < 0.0) {
      ++zero_idf_negative_beta;
      return 0.0;
    }
    return checked_pow(tf_value, params.alpha) * checked_pow(idf_value, params.beta);
  };
  if (tf.scope == WeightScope::document) {
    const auto m = tf.doc.size();
    score.doc = Vector::Zero(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      if (tf.doc(j) == 0.0 && params.alpha < 0.0)
        throw DomainError("tf = 0 cannot be raised to negative alpha");
      score.doc(j) = one_term(tf.doc(j), idf.doc(j));
    }
  } else {
    const auto m = tf.per_sentence.rows();
    const auto n = tf.per_sentence.cols();
    score.per_sentence = Matrix::Zero(m, n);
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (tf.per_sentence(j, i) > 0.0)  // absent terms keep weight 0
          score.per_sentence(j, i) = one_term(tf.per_sentence(j, i), idf.doc(j));
  }
  if (zero_idf_negative_beta > 0)
    std::cerr << "warning: " << zero_idf_negative_beta
              << " term(s) with idf = 0 scored 0 under negative beta\n";
  return score;
}

TermWeights metric_weights(const TermSentenceMatrix& matrix, const ScoringParams& params) {
  switch (params.metric) {
    case Metric::tfidf:
      return combined_score(term_frequency(matrix, WeightScope::document),
                            inverse_document_frequency(matrix), params);
    case Metric::stfidf:
      return combined_score(term_frequency(matrix, WeightScope::per_sentence),
                            inverse_document_frequency(matrix), params);
    case Metric::tf: {
      TermWeights tf = term_frequency(matrix, WeightScope::document);
      for (Eigen::Index j = 0; j < tf.doc.size(); ++j)
        tf.doc(j) = checked_pow(tf.doc(j), params.alpha);
      return tf;
    }
  }
  throw DomainError("unknown metric");
}

double sentence_raw_score(int sentence_index, const TermSentenceMatrix& matrix,
                          const TermWeights& weights, bool distinct) {
  double total = 0.0;
  for (int j = 0; j < matrix.m(); ++j) {
    int count = matrix.counts(j, sentence_index);
    if (count == 0) continue;
    double w = weights.at(j, sentence_index);
    total += distinct ? w : count * w;
  }
  return total;
}

double r_normalize(double raw, int length, double r) {
  if (r == 0.0) return raw;
  return raw / std::pow(static_cast<double>(length), r);
}

int sentence_length(const Sentence& sentence, LengthBasis basis) {
  return basis == LengthBasis::surface ? sentence.word_count
                                       : static_cast<int>(sentence.terms.size());
}

}  // namespace summ

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "summ/greedy.hpp"
#include "summ/scoring.hpp"
#include "summ/simplex.hpp"
#include "summ/textproc.hpp"

namespace summ {

enum class Sense { minimize, maximize };

struct LinearConstraint {
  Vector coeffs;
  Relation relation = Relation::le;
  double rhs = 0.0;
};

struct BinaryProgram {
  Sense sense = Sense::maximize;
  Vector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::string> variable_names;
  int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class SolveStatus { optimal, infeasible, budget_exceeded_nodes };

struct Solution {
  SolveStatus status = SolveStatus::infeasible;
  IntVector assignment;
  double objective_value = 0.0;
  long nodes_explored = 0;
};

inline constexpr long kDefaultNodeLimit = 2'000'000;

// Exact 0/1 optimum by depth-first branch and bound. Bounds come from
// the [0,1] linear relaxation (built-in simplex); branching picks the
// most fractional variable (ties -> smallest index), exploring the
// x = 1 child first. Every incumbent is re-verified against the
// original constraints at 1e-9 before acceptance. When the node limit
// is hit the best incumbent so far is returned with status
// budget_exceeded_nodes (empty assignment if none was found).
Solution solve_binary_program(const BinaryProgram& model, long node_limit = kDefaultNodeLimit);

// minimize sum x_i s.t. each term is covered by >= 1 chosen sentence.
BinaryProgram build_set_cover_model(const TermSentenceMatrix& matrix);

// maximize sum z_j (terms covered) s.t. coverage links z_j to the
// presence of a chosen sentence containing term j, and total cost <= L.
BinaryProgram build_budget_model(const TermSentenceMatrix& matrix, const IntVector& costs,
                                 int budget);

// Compact score model: maximize sum_i gain_i x_i under the cost budget,
// where gain_i sums the per-sentence weights w_ji of terms present in i.
BinaryProgram build_score_model(const TermSentenceMatrix& matrix, const TermWeights& weights,
                                const IntVector& costs, int budget);

// Uncompacted variant with explicit a_ji variables tied to x_i by
// equality rows; kept for equivalence testing against the compact form.
BinaryProgram build_score_model_full(const TermSentenceMatrix& matrix,
                                     const TermWeights& weights, const IntVector& costs,
                                     int budget);

enum class Formulation { set_cover, budget, score };

// Surface word count per sentence (the c_i costs).
IntVector sentence_costs(const Document& doc);

// Per-sentence score-model weights: metric weight times occurrence count
// (times 1 under `distinct`), divided by |s_i|^r, so a sentence's weight
// sum equals its r-normalized greedy score.
TermWeights score_model_weights(const Document& doc, const TermSentenceMatrix& matrix,
                                const ScoringParams& params);

// Builds the chosen model with L = threshold (the slack budget), solves
// it exactly, emits selected sentences in document order and truncates
// to final_limit. Throws SolverError if the solve is infeasible or runs
// out of nodes.
Summary ilp_summarize(const Document& doc, const TermSentenceMatrix& matrix,
                      Formulation formulation, const ScoringParams& params, int threshold,
                      int final_limit, long node_limit = kDefaultNodeLimit);

// CPLEX LP-format export / whitespace "name value" import, for
// cross-checking against external solvers.
void write_lp(const BinaryProgram& model, std::ostream& out);
IntVector read_solution(std::istream& in, const BinaryProgram& model);

}  // namespace summ

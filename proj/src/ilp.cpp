#include "summ/ilp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>

#include "summ/error.hpp"

namespace summ {
namespace {

constexpr double kTol = 1e-9;
constexpr double kIntTol = 1e-6;

bool satisfies(const LinearConstraint& c, const IntVector& v) {
  double lhs = 0.0;
  for (int j = 0; j < v.size(); ++j) lhs += c.coeffs(j) * v(j);
  switch (c.relation) {
    case Relation::le: return lhs <= c.rhs + kTol;
    case Relation::ge: return lhs >= c.rhs - kTol;
    case Relation::eq: return std::abs(lhs - c.rhs) <= kTol;
  }
  return false;
}

struct BranchAndBound {
  const BinaryProgram& model;
  Vector objective;  // always a maximization view
  long node_limit;
  long nodes = 0;
  bool out_of_nodes = false;
  bool found = false;
  double best = 0.0;
  IntVector best_assignment;
  std::vector<int> fixed;  // -1 free, else 0/1

  BranchAndBound(const BinaryProgram& m, long limit) : model(m), node_limit(limit) {
    objective = m.sense == Sense::maximize ? m.objective : Vector(-m.objective);
    fixed.assign(m.num_vars(), -1);
  }

  // Accepts the candidate if it satisfies the original constraints;
  // keeps it when it beats the incumbent.
  bool offer(const IntVector& v) {
    for (const LinearConstraint& c : model.constraints)
      if (!satisfies(c, v)) return false;
    double value = 0.0;
    for (int j = 0; j < v.size(); ++j) value += objective(j) * v(j);
    if (!found || value > best + kTol) {
      found = true;
      best = value;
      best_assignment = v;
    }
    return true;
  }

  void explore() {
    if (nodes >= node_limit) {
      out_of_nodes = true;
      return;
    }
    ++nodes;

    const int V = model.num_vars();
    std::vector<int> free_vars;
    for (int j = 0; j < V; ++j)
      if (fixed[j] < 0) free_vars.push_back(j);
    const int F = static_cast<int>(free_vars.size());

    if (F == 0) {
      IntVector v(V);
      for (int j = 0; j < V; ++j) v(j) = fixed[j];
      offer(v);
      return;
    }

    // Relaxation over the free variables: substituted constraints plus
    // an x <= 1 row per free variable.
    const int n_rows = static_cast<int>(model.constraints.size()) + F;
    Matrix A = Matrix::Zero(n_rows, F);
    Vector b(n_rows);
    std::vector<Relation> rels(n_rows);
    int r = 0;
    for (const LinearConstraint& c : model.constraints) {
      double rhs = c.rhs;
      for (int j = 0; j < V; ++j)
        if (fixed[j] == 1) rhs -= c.coeffs(j);
      for (int f = 0; f < F; ++f) A(r, f) = c.coeffs(free_vars[f]);
      b(r) = rhs;
      rels[r] = c.relation;
      ++r;
    }
    for (int f = 0; f < F; ++f) {
      A(r, f) = 1.0;
      b(r) = 1.0;
      rels[r] = Relation::le;
      ++r;
    }
    double fixed_value = 0.0;
    for (int j = 0; j < V; ++j)
      if (fixed[j] == 1) fixed_value += objective(j);
    Vector c_free(F);
    for (int f = 0; f < F; ++f) c_free(f) = objective(free_vars[f]);

    LpResult lp = simplex_solve(A, rels, b, Vector(-c_free));
    if (lp.status == LpStatus::infeasible) return;
    double bound = fixed_value - lp.objective;
    if (found && bound <= best + kTol) return;

    bool integral = true;
    for (int f = 0; f < F; ++f)
      if (std::abs(lp.x(f) - std::round(lp.x(f))) > kIntTol) {
        integral = false;
        break;
      }
    if (integral) {
      IntVector v(V);
      for (int j = 0; j < V; ++j) v(j) = fixed[j] == 1 ? 1 : 0;
      for (int f = 0; f < F; ++f) v(free_vars[f]) = static_cast<int>(std::round(lp.x(f)));
      // A verified integral relaxation optimum closes this subtree: its
      // value equals the bound. If verification fails numerically, branch.
      if (offer(v)) return;
    }

    int branch = free_vars[0];
    double best_frac = 1.0;
    for (int f = 0; f < F; ++f) {
      double frac = std::abs(lp.x(f) - 0.5);
      if (frac < best_frac - 1e-12) {
        best_frac = frac;
        branch = free_vars[f];
      }
    }
    fixed[branch] = 1;
    explore();
    fixed[branch] = 0;
    explore();
    fixed[branch] = -1;
  }
};

std::string format_number(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_terms(std::ostream& out, const Vector& coeffs,
                 const std::vector<std::string>& names) {
  bool first = true;
  for (int j = 0; j < coeffs.size(); ++j) {
    double c = coeffs(j);
    if (c == 0.0) continue;
    if (first) {
      if (c < 0) out << "- ";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    double mag = std::abs(c);
    if (mag != 1.0) out << format_number(mag) << " ";
    out << names[j];
  }
  if (first) out << "0 " << names[0];
}

}  // namespace

Solution solve_binary_program(const BinaryProgram& model, long node_limit) {
  if (model.num_vars() < 1) throw SolverError("model has no variables");
  BranchAndBound bb(model, node_limit);
  bb.explore();

  Solution solution;
  solution.nodes_explored = bb.nodes;
  if (bb.out_of_nodes)
    solution.status = SolveStatus::budget_exceeded_nodes;
  else
    solution.status = bb.found ? SolveStatus::optimal : SolveStatus::infeasible;
  if (bb.found) {
    solution.assignment = bb.best_assignment;
    solution.objective_value = model.sense == Sense::maximize ? bb.best : -bb.best;
  }
  return solution;
}

BinaryProgram build_set_cover_model(const TermSentenceMatrix& matrix) {
  const int n = matrix.n(), m = matrix.m();
  BinaryProgram model;
  model.sense = Sense::minimize;
  model.objective = Vector::Ones(n);
  for (int i = 0; i < n; ++i) model.variable_names.push_back("x" + std::to_string(i));
  for (int j = 0; j < m; ++j) {
    LinearConstraint c;
    c.coeffs = Vector::Zero(n);
    for (int i = 0; i < n; ++i)
      if (matrix.counts(j, i) > 0) c.coeffs(i) = 1.0;
    c.relation = Relation::ge;
    c.rhs = 1.0;
    model.constraints.push_back(std::move(c));
  }
  return model;
}

BinaryProgram build_budget_model(const TermSentenceMatrix& matrix, const IntVector& costs,
                                 int budget) {
  const int n = matrix.n(), m = matrix.m();
  BinaryProgram model;
  model.sense = Sense::maximize;
  model.objective = Vector::Zero(n + m);
  model.objective.tail(m).setOnes();
  for (int i = 0; i < n; ++i) model.variable_names.push_back("x" + std::to_string(i));
  for (int j = 0; j < m; ++j) model.variable_names.push_back("z" + std::to_string(j));
  for (int j = 0; j < m; ++j) {
    LinearConstraint c;
    c.coeffs = Vector::Zero(n + m);
    for (int i = 0; i < n; ++i)
      if (matrix.counts(j, i) > 0) c.coeffs(i) = 1.0;  // presence, not multiplicity
    c.coeffs(n + j) = -1.0;
    c.relation = Relation::ge;
    c.rhs = 0.0;
    model.constraints.push_back(std::move(c));
  }
  LinearConstraint budget_row;
  budget_row.coeffs = Vector::Zero(n + m);
  for (int i = 0; i < n; ++i) budget_row.coeffs(i) = costs(i);
  budget_row.relation = Relation::le;
  budget_row.rhs = budget;
  model.constraints.push_back(std::move(budget_row));
  return model;
}

BinaryProgram build_score_model(const TermSentenceMatrix& matrix, const TermWeights& weights,
                                const IntVector& costs, int budget) {
  const int n = matrix.n(), m = matrix.m();
  BinaryProgram model;
  model.sense = Sense::maximize;
  model.objective = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j)
      if (matrix.counts(j, i) > 0) model.objective(i) += weights.at(j, i);
    model.variable_names.push_back("x" + std::to_string(i));
  }
  LinearConstraint budget_row;
  budget_row.coeffs = Vector::Zero(n);
  for (int i = 0; i < n; ++i) budget_row.coeffs(i) = costs(i);
  budget_row.relation = Relation::le;
  budget_row.rhs = budget;
  model.constraints.push_back(std::move(budget_row));
  return model;
}

BinaryProgram build_score_model_full(const TermSentenceMatrix& matrix,
                                     const TermWeights& weights, const IntVector& costs,
                                     int budget) {
  const int n = matrix.n(), m = matrix.m();
  std::vector<std::pair<int, int>> pairs;  // (j, i) with term j present in sentence i
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      if (matrix.counts(j, i) > 0) pairs.emplace_back(j, i);

  const int V = n + static_cast<int>(pairs.size());
  BinaryProgram model;
  model.sense = Sense::maximize;
  model.objective = Vector::Zero(V);
  for (int i = 0; i < n; ++i) model.variable_names.push_back("x" + std::to_string(i));
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [j, i] = pairs[p];
    model.objective(n + p) = weights.at(j, i);
    model.variable_names.push_back("a" + std::to_string(j) + "_" + std::to_string(i));
  }
  for (size_t p = 0; p < pairs.size(); ++p) {
    LinearConstraint c;
    c.coeffs = Vector::Zero(V);
    c.coeffs(n + p) = 1.0;
    c.coeffs(pairs[p].second) = -1.0;
    c.relation = Relation::eq;
    c.rhs = 0.0;
    model.constraints.push_back(std::move(c));
  }
  LinearConstraint budget_row;
  budget_row.coeffs = Vector::Zero(V);
  for (int i = 0; i < n; ++i) budget_row.coeffs(i) = costs(i);
  budget_row.relation = Relation::le;
  budget_row.rhs = budget;
  model.constraints.push_back(std::move(budget_row));
  return model;
}

IntVector sentence_costs(const Document& doc) {
  IntVector costs(doc.sentences.size());
  for (size_t i = 0; i < doc.sentences.size(); ++i)
    costs(i) = doc.sentences[i].word_count;
  return costs;
}

TermWeights score_model_weights(const Document& doc, const TermSentenceMatrix& matrix,
                                const ScoringParams& params) {
  TermWeights base = metric_weights(matrix, params);
  TermWeights weights;
  weights.scope = WeightScope::per_sentence;
  weights.per_sentence = Matrix::Zero(matrix.m(), matrix.n());
  for (int i = 0; i < matrix.n(); ++i) {
    double denom = std::pow(
        static_cast<double>(sentence_length(doc.sentences[i], params.length_basis)), params.r);
    for (int j = 0; j < matrix.m(); ++j) {
      int count = matrix.counts(j, i);
      if (count == 0) continue;
      double w = base.at(j, i) * (params.distinct ? 1.0 : count);
      weights.per_sentence(j, i) = params.r == 0.0 ? w : w / denom;
    }
  }
  return weights;
}

Summary ilp_summarize(const Document& doc, const TermSentenceMatrix& matrix,
                      Formulation formulation, const ScoringParams& params, int threshold,
                      int final_limit, long node_limit) {
  if (doc.sentences.empty()) throw EmptyDocument("no sentences in " + doc.doc_id);
  IntVector costs = sentence_costs(doc);
  BinaryProgram model;
  std::string tag;
  switch (formulation) {
    case Formulation::set_cover:
      model = build_set_cover_model(matrix);
      tag = "ilp_set_cover";
      break;
    case Formulation::budget:
      model = build_budget_model(matrix, costs, threshold);
      tag = "ilp_budget";
      break;
    case Formulation::score:
      model = build_score_model(matrix, score_model_weights(doc, matrix, params), costs,
                                threshold);
      tag = "ilp_score";
      break;
  }
  Solution solution = solve_binary_program(model, node_limit);
  if (solution.status == SolveStatus::infeasible)
    throw SolverError("infeasible model for " + doc.doc_id);
  if (solution.status == SolveStatus::budget_exceeded_nodes)
    throw SolverError("node limit exceeded for " + doc.doc_id);

  std::vector<int> selected;
  for (int i = 0; i < matrix.n(); ++i)
    if (solution.assignment(i) == 1) selected.push_back(i);
  return assemble_summary(doc, std::move(selected), final_limit, tag);
}

void write_lp(const BinaryProgram& model, std::ostream& out) {
  out << (model.sense == Sense::maximize ? "Maximize" : "Minimize") << "\n obj: ";
  write_terms(out, model.objective, model.variable_names);
  out << "\nSubject To\n";
  for (size_t k = 0; k < model.constraints.size(); ++k) {
    const LinearConstraint& c = model.constraints[k];
    out << " c" << k << ": ";
    write_terms(out, c.coeffs, model.variable_names);
    switch (c.relation) {
      case Relation::le: out << " <= "; break;
      case Relation::ge: out << " >= "; break;
      case Relation::eq: out << " = "; break;
    }
    out << format_number(c.rhs) << "\n";
  }
  out << "Binary\n";
  for (const std::string& name : model.variable_names) out << " " << name << "\n";
  out << "End\n";
}

IntVector read_solution(std::istream& in, const BinaryProgram& model) {
  std::map<std::string, int> index;
  for (int j = 0; j < model.num_vars(); ++j) index[model.variable_names[j]] = j;
  IntVector assignment = IntVector::Zero(model.num_vars());
  std::string name;
  double value;
  while (in >> name >> value) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown variable in solution: " + name);
    assignment(it->second) = std::lround(value);
  }
  return assignment;
}

}  // namespace summ

// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero if any evaluated criterion fails. Criterion 8 needs the
// license-restricted news corpus and is skipped unless SUMM_DUC02_DOCS
// and SUMM_DUC02_REFS are set.
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "summ/corpus.hpp"
#include "summ/error.hpp"
#include "summ/harness.hpp"
#include "summ/ilp.hpp"
#include "summ/rouge.hpp"
#include "summ/scoring.hpp"
#include "summ/titled.hpp"

using namespace summ;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Document doc_from(const std::vector<std::string>& sentence_words, const char* id = "doc") {
  Document doc;
  doc.doc_id = id;
  for (const auto& text : sentence_words) {
    Sentence s;
    s.index = static_cast<int>(doc.sentences.size());
    s.raw_text = text;
    std::istringstream in(text);
    std::string w;
    while (in >> w) {
      s.surface_tokens.push_back(w);
      s.terms.push_back(w);
      ++s.word_count;
    }
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

std::vector<std::string> random_sentences(std::mt19937_64& rng, const char* const* vocab,
                                          int vocab_size, int n_min, int n_max, int w_min,
                                          int w_max) {
  int n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
  std::vector<std::string> sentences;
  for (int i = 0; i < n; ++i) {
    std::string text;
    int words = w_min + static_cast<int>(rng() % (w_max - w_min + 1));
    for (int k = 0; k < words; ++k) {
      if (!text.empty()) text += " ";
      text += vocab[rng() % vocab_size];
    }
    sentences.push_back(text);
  }
  return sentences;
}

// Exhaustive 0/1 optimum; NaN when infeasible.
double enumerate_optimum(const BinaryProgram& model) {
  const int v = model.num_vars();
  double best = std::numeric_limits<double>::quiet_NaN();
  for (long mask = 0; mask < (1L << v); ++mask) {
    bool ok = true;
    for (const LinearConstraint& con : model.constraints) {
      double lhs = 0.0;
      for (int j = 0; j < v; ++j)
        if ((mask >> j) & 1) lhs += con.coeffs(j);
      if (con.relation == Relation::le && lhs > con.rhs + 1e-9) ok = false;
      if (con.relation == Relation::ge && lhs < con.rhs - 1e-9) ok = false;
      if (con.relation == Relation::eq && std::abs(lhs - con.rhs) > 1e-9) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;
    double value = 0.0;
    for (int j = 0; j < v; ++j)
      if ((mask >> j) & 1) value += model.objective(j);
    if (std::isnan(best) ||
        (model.sense == Sense::maximize ? value > best : value < best))
      best = value;
  }
  return best;
}

BinaryProgram random_program(std::mt19937_64& rng) {
  BinaryProgram model;
  int v = 1 + static_cast<int>(rng() % 18);
  int m = 1 + static_cast<int>(rng() % 30);
  model.sense = rng() % 2 ? Sense::maximize : Sense::minimize;
  model.objective = Vector(v);
  for (int j = 0; j < v; ++j)
    model.objective(j) = (static_cast<int>(rng() % 17) - 8) / 4.0;
  for (int j = 0; j < v; ++j) model.variable_names.push_back("x" + std::to_string(j));
  // Half the programs are anchored on a random assignment (feasible by
  // construction, but the solver does not know that); the rest draw
  // independent right-hand sides and are usually infeasible at this
  // constraint density.
  bool anchored = rng() % 2 == 0;
  long anchor = static_cast<long>(rng() % (1L << v));
  for (int i = 0; i < m; ++i) {
    LinearConstraint c;
    c.coeffs = Vector(v);
    for (int j = 0; j < v; ++j) c.coeffs(j) = static_cast<int>(rng() % 9) - 4;
    int kind = static_cast<int>(rng() % 3);
    c.relation = kind == 0 ? Relation::le : kind == 1 ? Relation::ge : Relation::eq;
    if (anchored) {
      double lhs = 0.0;
      for (int j = 0; j < v; ++j)
        if ((anchor >> j) & 1) lhs += c.coeffs(j);
      int slack = static_cast<int>(rng() % 4);
      c.rhs = c.relation == Relation::le ? lhs + slack
              : c.relation == Relation::ge ? lhs - slack
                                           : lhs;
    } else {
      c.rhs = static_cast<int>(rng() % (2 * v + 5)) - v;
    }
    model.constraints.push_back(std::move(c));
  }
  return model;
}

bool criterion_1() {
  auto start = Clock::now();
  std::mt19937_64 rng(101);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BinaryProgram model = random_program(rng);
    double expected = enumerate_optimum(model);
    Solution sol = solve_binary_program(model);
    if (std::isnan(expected)) {
      ++infeasible;
      if (sol.status != SolveStatus::infeasible) {
        std::printf("CRITERION 1: FAIL (trial %d expected infeasible)\n", trial);
        return false;
      }
    } else {
      ++feasible;
      if (sol.status != SolveStatus::optimal ||
          std::abs(sol.objective_value - expected) > 1e-6) {
        std::printf("CRITERION 1: FAIL (trial %d solver %.9f enum %.9f)\n", trial,
                    sol.objective_value, expected);
        return false;
      }
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    std::printf("CRITERION 1: FAIL (took %.1f s, budget 60 s)\n", elapsed);
    return false;
  }
  std::printf(
      "CRITERION 1: PASS (200/200 programs match enumeration, %d feasible / %d "
      "infeasible, %.1f s)\n",
      feasible, infeasible, elapsed);
  return true;
}

bool criterion_2() {
  std::mt19937_64 rng(202);
  const char* vocab[] = {"c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7"};
  for (int trial = 0; trial < 100; ++trial) {
    Document doc = doc_from(random_sentences(rng, vocab, 8, 2, 12, 1, 4), "cover");
    TermSentenceMatrix matrix = build_term_matrix(doc);
    const int n = matrix.n(), m = matrix.m();

    std::vector<unsigned> masks(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (matrix.counts(j, i) > 0) masks[i] |= 1u << j;
    const unsigned full = m == 32 ? ~0u : (1u << m) - 1;

    int brute = n + 1;
    for (unsigned pick = 0; pick < (1u << n); ++pick) {
      unsigned covered = 0;
      for (int i = 0; i < n; ++i)
        if ((pick >> i) & 1) covered |= masks[i];
      if (covered == full) brute = std::min(brute, std::popcount(pick));
    }

    int greedy_size = 0;
    unsigned covered = 0;
    while (covered != full) {
      int best = -1, best_gain = -1;
      for (int i = 0; i < n; ++i) {
        int gain = std::popcount(masks[i] & ~covered);
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      covered |= masks[best];
      ++greedy_size;
    }

    Solution sol = solve_binary_program(build_set_cover_model(matrix));
    if (sol.status != SolveStatus::optimal ||
        std::abs(sol.objective_value - brute) > 1e-9 || sol.objective_value > greedy_size) {
      std::printf("CRITERION 2: FAIL (trial %d solver %.0f brute %d greedy %d)\n", trial,
                  sol.objective_value, brute, greedy_size);
      return false;
    }
  }
  std::printf("CRITERION 2: PASS (100/100 minimum covers match brute force, all <= greedy)\n");
  return true;
}

bool criterion_3() {
  std::mt19937_64 rng(303);
  const char* vocab[] = {"b0", "b1", "b2", "b3", "b4", "b5"};
  int equivalence_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Document doc = doc_from(random_sentences(rng, vocab, 6, 2, 5, 1, 3), "budget");
    TermSentenceMatrix matrix = build_term_matrix(doc);
    IntVector costs = sentence_costs(doc);
    const int total = costs.sum();

    double prev = -1.0;
    for (int k = 0; k < 20; ++k) {
      int L = static_cast<int>(std::lround(k * total / 19.0));
      Solution sol = solve_binary_program(build_budget_model(matrix, costs, L));
      if (sol.status != SolveStatus::optimal || sol.objective_value < prev - 1e-9) {
        std::printf("CRITERION 3: FAIL (trial %d L=%d objective %.6f dropped below %.6f)\n",
                    trial, L, sol.objective_value, prev);
        return false;
      }
      prev = sol.objective_value;
    }

    ScoringParams params;
    params.r = 0.5;
    TermWeights weights = score_model_weights(doc, matrix, params);
    int budget = 1 + static_cast<int>(rng() % total);
    BinaryProgram full = build_score_model_full(matrix, weights, costs, budget);
    if (full.num_vars() > 18) continue;
    ++equivalence_checked;
    BinaryProgram compact = build_score_model(matrix, weights, costs, budget);
    Solution sol_compact = solve_binary_program(compact);
    Solution sol_full = solve_binary_program(full);
    double enum_compact = enumerate_optimum(compact);
    if (sol_compact.status != SolveStatus::optimal || sol_full.status != SolveStatus::optimal ||
        std::abs(sol_compact.objective_value - sol_full.objective_value) > 1e-6 ||
        std::abs(sol_compact.objective_value - enum_compact) > 1e-6) {
      std::printf("CRITERION 3: FAIL (trial %d compact %.9f full %.9f enum %.9f)\n", trial,
                  sol_compact.objective_value, sol_full.objective_value, enum_compact);
      return false;
    }
  }
  if (equivalence_checked < 10) {
    std::printf("CRITERION 3: FAIL (only %d equivalence instances <= 18 variables)\n",
                equivalence_checked);
    return false;
  }
  std::printf(
      "CRITERION 3: PASS (50 L-sweeps monotonic; compact == full formulation on %d "
      "instances)\n",
      equivalence_checked);
  return true;
}

bool criterion_4() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> idf_dist(0.0, 3.0);
  std::uniform_real_distribution<double> raw_dist(0.0, 50.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double tf = static_cast<double>(rng() % 7);
    double idf = idf_dist(rng);
    int length = 1 + static_cast<int>(rng() % 30);
    double raw = raw_dist(rng);

    double norm1 = r_normalize(raw, length, 1.0);
    double expect1 = raw / length;
    double norm0 = r_normalize(raw, length, 0.0);

    TermWeights tf_w;
    tf_w.scope = WeightScope::document;
    tf_w.doc = Vector::Constant(1, tf);
    TermWeights idf_w;
    idf_w.scope = WeightScope::document;
    idf_w.doc = Vector::Constant(1, idf);
    ScoringParams params;  // alpha = beta = 1
    double combined = combined_score(tf_w, idf_w, params).at(0, 0);
    double expect_c = tf * idf;

    auto rel_ok = [](double got, double want) {
      double scale = std::max(std::abs(want), 1e-300);
      return std::abs(got - want) <= 1e-12 * scale;
    };
    if (!rel_ok(norm1, expect1) || !rel_ok(norm0, raw) || !rel_ok(combined, expect_c)) {
      std::printf("CRITERION 4: FAIL (trial %d tf=%g idf=%g len=%d)\n", trial, tf, idf,
                  length);
      return false;
    }
  }
  std::printf("CRITERION 4: PASS (1000 random triples satisfy the r and alpha/beta "
              "identities to 1e-12)\n");
  return true;
}

bool criterion_5() {
  // Hand trace: title {a}; "a b" seeds level 0, "b c" follows via the new
  // word b, "d" stays unreachable.
  Document traced = doc_from({"a b", "b c", "d"}, "trace");
  LevelTree tree = title_reduction(traced, {"a"});
  bool trace_ok = tree.levels.size() == 2 && tree.levels[0] == std::vector<int>{0} &&
                  tree.levels[1] == std::vector<int>{1} &&
                  tree.uncovered == std::vector<int>{2};
  if (!trace_ok) {
    std::printf("CRITERION 5: FAIL (hand trace not reproduced)\n");
    return false;
  }

  std::mt19937_64 rng(505);
  const char* vocab[] = {"t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"};
  for (int trial = 0; trial < 50; ++trial) {
    Document doc = doc_from(random_sentences(rng, vocab, 10, 3, 10, 1, 5), "levels");
    TermList title;
    int title_words = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < title_words; ++k) title.push_back(vocab[rng() % 10]);
    LevelTree t = title_reduction(doc, title);

    std::set<int> seen;
    bool ok = true;
    for (const auto& level : t.levels) {
      if (level.empty()) ok = false;  // no hollow levels
      for (int idx : level)
        if (!seen.insert(idx).second) ok = false;  // disjointness
    }
    for (int idx : t.uncovered)
      if (!seen.insert(idx).second) ok = false;
    if (seen.size() != doc.sentences.size()) ok = false;  // completeness

    for (size_t k = 0; k < t.levels.size() && ok; ++k) {  // level chain
      std::set<Term> pool;
      if (k == 0)
        pool.insert(title.begin(), title.end());
      else
        for (int idx : t.levels[k - 1])
          pool.insert(doc.sentences[idx].terms.begin(), doc.sentences[idx].terms.end());
      for (int idx : t.levels[k]) {
        bool overlap = false;
        for (const Term& term : doc.sentences[idx].terms)
          if (pool.count(term)) overlap = true;
        if (!overlap) ok = false;
      }
    }
    if (!ok) {
      std::printf("CRITERION 5: FAIL (invariant broken on random document %d)\n", trial);
      return false;
    }
  }
  std::printf("CRITERION 5: PASS (hand trace exact; 50 random level trees satisfy "
              "chain/disjoint/complete)\n");
  return true;
}

struct RougeCase {
  const char* cand;
  std::vector<std::string> refs;
  int n;  // 0 = LCS
  double recall, precision, f1;
  bool stem = false;
  MultiRef mode = MultiRef::average;
  int limit = 10000;
};

bool criterion_6() {
  const double T = 2.0 / 3.0;
  std::vector<RougeCase> cases = {
      {"the cat sat on the mat", {"the cat sat on the mat"}, 1, 1.0, 1.0, 1.0},
      {"the cat sat on the mat", {"the cat sat on the mat"}, 2, 1.0, 1.0, 1.0},
      {"the cat sat on the mat", {"the cat sat on the mat"}, 0, 1.0, 1.0, 1.0},
      {"a b c d e f", {"a b"}, 1, 1.0, 1.0 / 3.0, 0.5},
      {"a b", {"c d"}, 1, 0.0, 0.0, 0.0},
      {"the the the", {"the cat"}, 1, 0.5, 1.0 / 3.0, 0.4},
      {"a a b", {"a a a"}, 1, T, T, T},
      {"a b c x y z", {"a b c"}, 2, 1.0, 0.4, 0.5714285714285715},
      {"a b", {"a b", "c d"}, 1, 0.5, 0.5, 0.5},
      {"a b", {"a b", "c d"}, 1, 1.0, 1.0, 1.0, false, MultiRef::best},
      {"a b c d", {"a b", "a b c d e f g h"}, 1, 0.75, 0.75, T},
      {"a x b c", {"a b c"}, 0, 1.0, 0.75, 0.8571428571428571},
      {"c b a", {"a b c"}, 0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
      {"a b", {"a b c d"}, 0, 0.5, 1.0, T},
      {"a b c x y z w v", {"a b c d e f", "x y z d e f"}, 0, 0.5, 0.375,
       0.42857142857142855},
      {"a b c d x", {"a b c d e"}, 3, T, T, T},
      {"a b c d e", {"a b c d e"}, 4, 1.0, 1.0, 1.0},
      {"a b c", {"a b c d e"}, 4, 0.0, 0.0, 0.0},
      {"The CAT, sat!!", {"the cat sat"}, 2, 1.0, 1.0, 1.0},
      {"a b c d", {"c d"}, 1, 0.0, 0.0, 0.0, false, MultiRef::average, 2},
      {"cats running", {"cat runs"}, 2, 1.0, 1.0, 1.0, true},
  };
  for (size_t k = 0; k < cases.size(); ++k) {
    const RougeCase& c = cases[k];
    RougeConfig config;
    config.use_stemming = c.stem;
    config.multi_ref = c.mode;
    config.word_limit = c.limit;
    RougeScore got = c.n == 0 ? rouge_l(c.cand, c.refs, config)
                              : rouge_n(c.cand, c.refs, c.n, config);
    if (std::abs(got.recall - c.recall) > 1e-9 ||
        std::abs(got.precision - c.precision) > 1e-9 || std::abs(got.f1 - c.f1) > 1e-9) {
      std::printf("CRITERION 6: FAIL (case %zu '%s': got %.12f/%.12f/%.12f)\n", k, c.cand,
                  got.recall, got.precision, got.f1);
      return false;
    }
  }

  std::mt19937_64 rng(606);
  const char* vocab[] = {"n0", "n1", "n2", "n3", "n4", "n5", "n6", "n7"};
  RougeConfig config;
  config.use_stemming = false;
  config.word_limit = 10000;
  auto phrase = [&](int words) {
    std::string s;
    for (int k = 0; k < words; ++k) {
      if (!s.empty()) s += " ";
      s += vocab[rng() % 8];
    }
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::string ref = phrase(4 + static_cast<int>(rng() % 10));
    std::string prefix = phrase(static_cast<int>(rng() % 6));
    std::string suffix = phrase(static_cast<int>(rng() % 6));
    std::string cand = prefix.empty() ? ref : prefix + " " + ref;
    if (!suffix.empty()) cand += " " + suffix;
    for (int n = 1; n <= 4; ++n)
      if (std::abs(rouge_n(cand, {ref}, n, config).recall - 1.0) > 1e-12) {
        std::printf("CRITERION 6: FAIL (extractive recall trial %d n=%d)\n", trial, n);
        return false;
      }
    if (std::abs(rouge_l(cand, {ref}, config).recall - 1.0) > 1e-12) {
      std::printf("CRITERION 6: FAIL (extractive recall trial %d lcs)\n", trial);
      return false;
    }
  }
  std::printf("CRITERION 6: PASS (%zu hand cases within 1e-9; 100 extractive cases at "
              "recall 1.0)\n",
              cases.size());
  return true;
}

bool criterion_7() {
  auto start = Clock::now();
  const std::string cli = SUMM_CLI_PATH;
  const std::string docs = std::string(SUMM_SOURCE_DIR) + "/tests/data/synth/docs";
  const std::string refs = std::string(SUMM_SOURCE_DIR) + "/tests/data/synth/refs";
  fs::path tmp = fs::temp_directory_path() / "summ_acceptance";
  fs::create_directories(tmp);

  auto read_file = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  auto run = [&](const std::string& extra, const fs::path& out) {
    std::string cmd = "\"" + cli + "\" run --dataset \"" + docs + "\" --refs \"" + refs +
                      "\" --seed 7 " + extra + " --out \"" + out.string() +
                      "\" 2>/dev/null";
    return std::system(cmd.c_str()) == 0;
  };

  struct Variant {
    const char* name;
    std::string base;
  };
  std::vector<Variant> variants = {
      {"greedy sweep",
       "--method greedy --flags SW,S,W --r -0.5:0.5:0.25 --limit 50"},
      {"score ilp",
       "--method ilp_score --flags SW --r -0.4:-0.4:1 --alpha 1.2:1.2:1 "
       "--beta 1.2:1.2:1 --threshold 60:80:10 --limit 50"},
  };
  for (const Variant& v : variants) {
    fs::path a = tmp / "run_a.csv", b = tmp / "run_b.csv", c = tmp / "run_c.csv";
    if (!run(v.base + " --jobs 1", a) || !run(v.base + " --jobs 1", b) ||
        !run(v.base + " --jobs 4", c)) {
      std::printf("CRITERION 7: FAIL (%s: CLI run returned nonzero)\n", v.name);
      return false;
    }
    std::string sa = read_file(a), sb = read_file(b), sc = read_file(c);
    if (sa.empty() || sa != sb || sa != sc) {
      std::printf("CRITERION 7: FAIL (%s: output differs across runs or worker counts)\n",
                  v.name);
      return false;
    }
  }
  fs::remove_all(tmp);
  double elapsed = seconds_since(start);
  if (elapsed >= 120.0) {
    std::printf("CRITERION 7: FAIL (took %.1f s, budget 120 s)\n", elapsed);
    return false;
  }
  std::printf("CRITERION 7: PASS (2 pipelines byte-identical across reruns and worker "
              "counts, %.1f s)\n",
              elapsed);
  return true;
}

// Paper-parity numbers; requires the license-restricted news corpus.
bool criterion_8(bool& skipped) {
  const char* docs_env = std::getenv("SUMM_DUC02_DOCS");
  const char* refs_env = std::getenv("SUMM_DUC02_REFS");
  if (!docs_env || !refs_env) {
    skipped = true;
    std::printf("CRITERION 8: SKIP (set SUMM_DUC02_DOCS and SUMM_DUC02_REFS to enable "
                "paper-parity checks)\n");
    return true;
  }

  LoadOptions load;
  load.dedup = true;
  Dataset dataset = load_dataset(docs_env, refs_env, load);

  RougeConfig config;
  config.n_max = 1;
  config.compute_lcs = false;
  config.bootstrap_samples = 0;

  struct Line {
    const char* what;
    double ours, paper, tol;
  };
  std::vector<Line> lines;

  auto headline_f1 = [&](const SweepSpec& spec) {
    std::vector<ResultRow> rows = run_sweep(spec, dataset, config);
    for (const ResultRow& row : rows)
      if (row.metric == "rouge-1") return row.f1;
    throw SolverError("sweep produced no rouge-1 row");
  };

  // (a) score ILP, stem+stopwords, r=-0.4, alpha=beta=1.2, slack 920.
  SweepSpec slack;
  slack.method = Method::ilp_score;
  slack.flag_grid = {"SW"};
  slack.r_range = {-0.4, -0.4, 1.0};
  slack.alpha_range = {1.2, 1.2, 1.0};
  slack.beta_range = {1.2, 1.2, 1.0};
  slack.threshold_range = {920.0, 920.0, 10.0};
  lines.push_back({"score_ilp slack 920 rouge-1 f1", headline_f1(slack), 0.4782, 0.01});

  // (b) whole reduced documents as summaries: the recall ceiling.
  PreprocessOptions sw;
  sw.stem = true;
  sw.remove_stopwords = true;
  RougeReport limit = docs_as_summaries(dataset, config, true, sw);
  lines.push_back(
      {"title-reduced docs-as-summaries rouge-1 recall",
       limit.corpus_mean.at("rouge-1").recall, 0.9027, 0.005});

  // (c) BFS traversal of the title tree, truncated at 100 words.
  SweepSpec bfs;
  bfs.method = Method::title_bfs;
  bfs.flag_grid = {"SW"};
  lines.push_back({"title_bfs rouge-1 f1", headline_f1(bfs), 0.4751, 0.01});

  // (d) r-sweep length/score correlation.
  SweepSpec sweep;
  sweep.method = Method::ilp_score;
  sweep.flag_grid = {"SW"};
  sweep.r_range = {-1.0, 1.0, 0.2};
  sweep.threshold_range = {100.0, 100.0, 10.0};
  std::vector<double> lens, f1s;
  for (const ResultRow& row : run_sweep(sweep, dataset, config))
    if (row.metric == "rouge-1") {
      lens.push_back(row.avg_summary_len);
      f1s.push_back(row.f1);
    }
  double corr = 0.0;
  bool corr_ok = true;
  try {
    corr = pearson(lens, f1s);
  } catch (const Error&) {
    corr_ok = false;
  }
  lines.push_back({"r-sweep length/f1 pearson", corr_ok ? corr : -2.0, 0.939, 0.05});

  bool all_ok = true;
  for (const Line& line : lines) {
    bool ok = std::abs(line.ours - line.paper) <= line.tol;
    all_ok = all_ok && ok;
    if (!ok)
      std::printf("  %-46s ours %.4f | paper %.4f | tol %.3f  <-- MISS\n", line.what,
                  line.ours, line.paper, line.tol);
  }
  if (!all_ok) {
    std::printf("CRITERION 8: FAIL (see side-by-side diff above; exact ROUGE-1.5.5 parity "
                "is not guaranteed)\n");
    return false;
  }
  std::printf("CRITERION 8: PASS (all four paper-parity checks within tolerance)\n");
  return true;
}

}  // namespace

int main() {
  bool pass_1_to_7 = true;
  pass_1_to_7 &= criterion_1();
  pass_1_to_7 &= criterion_2();
  pass_1_to_7 &= criterion_3();
  pass_1_to_7 &= criterion_4();
  pass_1_to_7 &= criterion_5();
  pass_1_to_7 &= criterion_6();
  pass_1_to_7 &= criterion_7();

  bool skipped_8 = false;
  bool pass_8 = criterion_8(skipped_8);

  if (pass_1_to_7)
    std::printf("CRITERION 9: PASS (criteria 1-7 form the acceptance suite%s)\n",
                skipped_8 ? "; paper-table numbers need the news corpus and were not "
                            "checked"
                          : "; paper-parity checks ran as criterion 8");
  else
    std::printf("CRITERION 9: FAIL (criteria 1-7 did not all pass)\n");

  return pass_1_to_7 && pass_8 ? 0 : 1;
}

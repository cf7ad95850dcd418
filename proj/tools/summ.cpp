#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "summ/error.hpp"
#include "summ/harness.hpp"
#include "summ/titled.hpp"

namespace {

summ::ParamRange parse_range(const std::string& text, const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  try {
    if (parts.size() == 1) {
      double v = std::stod(parts[0]);
      return {v, v, 1.0};
    }
    if (parts.size() == 3)
      return {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(name, "expected a number or start:stop:step");
}

std::vector<std::string> parse_flag_list(const std::string& text) {
  if (text == "all") {
    std::vector<std::string> subsets;
    const char letters[4] = {'S', 'W', 'D', 'U'};
    for (int mask = 0; mask < 16; ++mask) {
      std::string flags;
      for (int b = 0; b < 4; ++b)
        if (mask & (1 << b)) flags.push_back(letters[b]);
      subsets.push_back(flags.empty() ? "-" : flags);
    }
    return subsets;
  }
  std::vector<std::string> subsets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) subsets.push_back(part.empty() ? "-" : part);
  if (subsets.empty()) subsets.push_back("-");
  return subsets;
}

// Writes to the path, or to stdout for "-".
void write_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw summ::IoError("cannot write " + path);
  out << content;
}

struct CommonEvalOptions {
  int limit = 100;
  std::uint64_t seed = 20011203;
  int samples = 1000;
  double confidence = 95.0;
  std::string multi_ref = "average";
  bool no_stem = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--limit", limit, "summary word limit");
    cmd->add_option("--seed", seed, "bootstrap seed");
    cmd->add_option("--samples", samples, "bootstrap resamples");
    cmd->add_option("--confidence", confidence, "confidence level (percent)");
    cmd->add_option("--multi-ref", multi_ref, "multi-reference mode: average|best")
        ->check(CLI::IsMember({"average", "best"}));
    cmd->add_flag("--no-stem", no_stem, "disable Porter stemming in evaluation");
  }

  summ::RougeConfig rouge() const {
    summ::RougeConfig config;
    config.word_limit = limit;
    config.bootstrap_seed = seed;
    config.bootstrap_samples = samples;
    config.confidence = confidence;
    config.use_stemming = !no_stem;
    config.multi_ref =
        multi_ref == "best" ? summ::MultiRef::best : summ::MultiRef::average;
    return config;
  }
};

summ::Dataset load_with_config(const std::string& dataset_dir, const std::string& refs_dir,
                               const std::string& config_path, bool repair) {
  summ::LoadOptions options;
  if (!config_path.empty()) options = summ::load_options_file(config_path);
  return summ::load_dataset(dataset_dir, refs_dir, options, repair);
}

int run_command(const std::string& dataset_dir, const std::string& refs_dir,
                const std::string& config_path, bool no_repair, const summ::SweepSpec& spec,
                const CommonEvalOptions& eval, const std::string& out_path,
                const std::string& write_summaries, const std::string& dedup_report,
                const std::string& tree_dump, const std::string& lp_dump) {
  summ::Dataset dataset = load_with_config(dataset_dir, refs_dir, config_path, !no_repair);

  if (!dedup_report.empty()) {
    std::ostringstream report;
    summ::write_dedup_report(dataset, report);
    write_text(dedup_report, report.str());
  }

  std::vector<summ::ResultRow> rows = summ::run_sweep(spec, dataset, eval.rouge());
  std::ostringstream csv;
  summ::write_results_csv(rows, csv);
  write_text(out_path, csv.str());

  // Length/score correlation across the grid (headline metric rows).
  std::vector<double> lengths, scores;
  for (const summ::ResultRow& row : rows)
    if (row.metric == spec.headline_metric) {
      lengths.push_back(row.avg_summary_len);
      scores.push_back(row.f1);
    }
  if (lengths.size() >= 2) {
    try {
      double corr = summ::pearson(lengths, scores);
      std::cerr << "pearson(avg_summary_len, " << spec.headline_metric
                << " f1) = " << corr << "\n";
    } catch (const summ::DegenerateVariance&) {
    }
  }

  bool single_point = spec.flag_grid.size() == 1 &&
                      spec.r_range.values().size() == 1 &&
                      spec.alpha_range.values().size() == 1 &&
                      spec.beta_range.values().size() == 1 &&
                      (!(spec.method == summ::Method::ilp_budget ||
                         spec.method == summ::Method::ilp_score ||
                         spec.method == summ::Method::title_filter_ilp) ||
                       spec.threshold_range.values().size() == 1);

  if (!write_summaries.empty()) {
    if (!single_point)
      throw CLI::ValidationError("--write-summaries", "needs a single-point grid");
    std::filesystem::create_directories(write_summaries);
    std::vector<summ::Summary> summaries = summ::summarize_corpus(
        spec, dataset, spec.flag_grid.front(), spec.r_range.start, spec.alpha_range.start,
        spec.beta_range.start, static_cast<int>(spec.threshold_range.start));
    for (const summ::Summary& s : summaries) {
      std::ofstream out(std::filesystem::path(write_summaries) / (s.doc_id + ".txt"));
      out << s.text << "\n";
    }
  }

  if (!tree_dump.empty()) {
    summ::PreprocessOptions options;
    std::string flags = summ::canonical_flags(spec.flag_grid.front());
    options.stem = flags.find('S') != std::string::npos;
    options.remove_stopwords = flags.find('W') != std::string::npos;
    std::ostringstream jsonl;
    for (const summ::RawArticle& article : dataset.articles) {
      summ::Document doc = summ::make_document(article, options);
      summ::LevelTree tree = summ::title_reduction(doc, doc.title_terms);
      summ::dump_tree_jsonl(tree, doc, jsonl);
    }
    write_text(tree_dump, jsonl.str());
  }

  if (!lp_dump.empty()) {
    if (!single_point) throw CLI::ValidationError("--lp-dump", "needs a single-point grid");
    std::string flags = summ::canonical_flags(spec.flag_grid.front());
    summ::PreprocessOptions options;
    options.stem = flags.find('S') != std::string::npos;
    options.remove_stopwords = flags.find('W') != std::string::npos;
    summ::ScoringParams params;
    params.metric = spec.metric;
    params.r = spec.r_range.start;
    params.alpha = spec.alpha_range.start;
    params.beta = spec.beta_range.start;
    params.distinct = flags.find('D') != std::string::npos;
    params.update_on_fly = flags.find('U') != std::string::npos;
    params.length_basis = spec.length_basis;
    int threshold = static_cast<int>(spec.threshold_range.start);
    std::ostringstream models;
    for (const summ::RawArticle& article : dataset.articles) {
      summ::Document doc = summ::make_document(article, options);
      summ::TermSentenceMatrix matrix = summ::build_term_matrix(doc);
      summ::IntVector costs = summ::sentence_costs(doc);
      summ::BinaryProgram model;
      switch (spec.method) {
        case summ::Method::ilp_set_cover:
          model = summ::build_set_cover_model(matrix);
          break;
        case summ::Method::ilp_budget:
          model = summ::build_budget_model(matrix, costs, threshold);
          break;
        default:
          model = summ::build_score_model(
              matrix, summ::score_model_weights(doc, matrix, params), costs, threshold);
          break;
      }
      models << "\\ " << article.doc_id << "\n";
      summ::write_lp(model, models);
    }
    write_text(lp_dump, models.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unsupervised extractive summarization toolkit"};
  app.require_subcommand(1);

  std::string stopwords_path;
  app.add_option("--stopwords", stopwords_path,
                 "stopword list path (overrides the bundled list)");

  // run
  auto* run = app.add_subcommand("run", "summarize a dataset over a parameter grid");
  std::string dataset_dir, refs_dir, config_path, out_path = "-";
  std::string method = "greedy", flags = "-", metric = "tfidf";
  std::string r_text = "0", alpha_text = "1", beta_text = "1", threshold_text = "100";
  std::string length_basis = "surface", stop_mode = "overrun";
  std::string write_summaries, dedup_report, tree_dump, lp_dump;
  int depth = 1, jobs = 1;
  long node_limit = summ::kDefaultNodeLimit;
  bool no_repair = false;
  CommonEvalOptions eval;
  run->add_option("--dataset", dataset_dir, "document directory")->required();
  run->add_option("--refs", refs_dir, "reference summary directory")->required();
  run->add_option("--config", config_path, "dataset config (dedup/blocklist/exclude)");
  run->add_option("--method", method,
                  "greedy|ilp_set_cover|ilp_budget|ilp_score|title_depth|title_bfs|"
                  "title_filter_ilp")
      ->check(CLI::IsMember({"greedy", "ilp_set_cover", "ilp_budget", "ilp_score",
                             "title_depth", "title_bfs", "title_filter_ilp"}));
  run->add_option("--flags", flags, "comma-separated SWDU subsets, '-' for none, or 'all'");
  run->add_option("--r", r_text, "r range (value or start:stop:step)");
  run->add_option("--alpha", alpha_text, "alpha range");
  run->add_option("--beta", beta_text, "beta range");
  run->add_option("--threshold", threshold_text, "ILP slack budget range");
  run->add_option("--metric", metric, "tfidf|stfidf|tf")
      ->check(CLI::IsMember({"tfidf", "stfidf", "tf"}));
  run->add_option("--length-basis", length_basis, "surface|normalized")
      ->check(CLI::IsMember({"surface", "normalized"}));
  run->add_option("--stop-mode", stop_mode, "overrun|exact")
      ->check(CLI::IsMember({"overrun", "exact"}));
  run->add_option("--depth", depth, "levels for title_depth");
  run->add_option("--jobs", jobs, "worker threads");
  run->add_option("--node-limit", node_limit, "branch-and-bound node budget");
  run->add_option("--out", out_path, "results CSV path ('-' = stdout)");
  run->add_option("--write-summaries", write_summaries, "directory for summary .txt files");
  run->add_option("--dedup-report", dedup_report, "dedup report CSV path");
  run->add_option("--tree-dump", tree_dump, "title-reduction levels as JSON lines");
  run->add_option("--lp-dump", lp_dump, "export ILP models in LP format");
  run->add_flag("--no-repair", no_repair, "fail on bare '&' instead of repairing");
  eval.attach(run);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "score existing summaries against references");
  std::string summaries_dir, eval_refs, eval_out = "-";
  CommonEvalOptions eval_opts;
  eval_cmd->add_option("--summaries", summaries_dir, "directory of <doc_id>.txt files")
      ->required();
  eval_cmd->add_option("--refs", eval_refs, "reference summary directory")->required();
  eval_cmd->add_option("--out", eval_out, "report CSV path ('-' = stdout)");
  eval_opts.attach(eval_cmd);

  // limit
  auto* limit_cmd =
      app.add_subcommand("limit", "docs-as-summaries recall ceiling (no truncation)");
  std::string limit_dataset, limit_refs, limit_config, limit_out = "-", limit_flags = "-";
  bool title_reduce = false, limit_no_repair = false;
  CommonEvalOptions limit_opts;
  limit_cmd->add_option("--dataset", limit_dataset, "document directory")->required();
  limit_cmd->add_option("--refs", limit_refs, "reference summary directory")->required();
  limit_cmd->add_option("--config", limit_config, "dataset config");
  limit_cmd->add_option("--out", limit_out, "report CSV path ('-' = stdout)");
  limit_cmd->add_flag("--title-reduce", title_reduce,
                      "reduce each document with title_reduction first");
  limit_cmd->add_option("--flags", limit_flags, "SW flags for the reduction preprocessing");
  limit_cmd->add_flag("--no-repair", limit_no_repair, "fail on bare '&'");
  limit_opts.attach(limit_cmd);

  // freq
  auto* freq_cmd = app.add_subcommand("freq", "top-N word frequency export");
  std::string freq_dataset, freq_subtract, freq_out = "-";
  int top_n = 100;
  bool freq_no_repair = false;
  freq_cmd->add_option("--dataset", freq_dataset, "document directory")->required();
  freq_cmd->add_option("--subtract", freq_subtract,
                       "directory whose vocabulary is removed before ranking");
  freq_cmd->add_option("--top", top_n, "number of words to keep");
  freq_cmd->add_option("--out", freq_out, "frequency CSV path ('-' = stdout)");
  freq_cmd->add_flag("--no-repair", freq_no_repair, "fail on bare '&'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/message; contract collapses errors to 1
    return code == 0 ? 0 : 1;
  }

  try {
    if (!stopwords_path.empty()) setenv("SUMM_STOPWORDS", stopwords_path.c_str(), 1);

    if (run->parsed()) {
      summ::SweepSpec spec;
      spec.method = summ::parse_method(method);
      spec.flag_grid = parse_flag_list(flags);
      spec.r_range = parse_range(r_text, "--r");
      spec.alpha_range = parse_range(alpha_text, "--alpha");
      spec.beta_range = parse_range(beta_text, "--beta");
      spec.threshold_range = parse_range(threshold_text, "--threshold");
      spec.word_limit = eval.limit;
      spec.metric = metric == "stfidf" ? summ::Metric::stfidf
                    : metric == "tf"   ? summ::Metric::tf
                                       : summ::Metric::tfidf;
      spec.length_basis = length_basis == "normalized" ? summ::LengthBasis::normalized
                                                       : summ::LengthBasis::surface;
      spec.stop_mode =
          stop_mode == "exact" ? summ::StopMode::exact : summ::StopMode::overrun;
      spec.depth = depth;
      spec.node_limit = node_limit;
      spec.jobs = jobs;
      return run_command(dataset_dir, refs_dir, config_path, no_repair, spec, eval,
                         out_path, write_summaries, dedup_report, tree_dump, lp_dump);
    }

    if (eval_cmd->parsed()) {
      summ::Dataset dataset;
      dataset.name = "eval";
      std::vector<summ::Summary> summaries;
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(summaries_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw summ::IoError("no summaries under " + summaries_dir);
      for (const auto& file : files) {
        std::ifstream in(file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        summ::Summary s;
        s.doc_id = file.stem().string();
        s.text = buffer.str();
        s.word_count = summ::count_surface_words(s.text);
        s.method_tag = "external";
        summaries.push_back(std::move(s));
        dataset.articles.push_back({summaries.back().doc_id, std::nullopt, "x", file, {}});
      }
      std::vector<std::filesystem::path> ref_files;
      for (const auto& entry : std::filesystem::recursive_directory_iterator(eval_refs))
        if (entry.is_regular_file()) ref_files.push_back(entry.path());
      std::sort(ref_files.begin(), ref_files.end());
      for (const auto& file : ref_files) {
        std::string name = file.filename().string();
        std::string doc_id = name.substr(0, name.find('.'));
        std::ifstream in(file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        if (!buffer.str().empty()) dataset.references[doc_id].push_back(buffer.str());
      }
      summ::RougeReport report = summ::evaluate_corpus(summaries, dataset, eval_opts.rouge());
      std::ostringstream csv;
      summ::write_report_csv(report, csv);
      write_text(eval_out, csv.str());
      return 0;
    }

    if (limit_cmd->parsed()) {
      summ::Dataset dataset =
          load_with_config(limit_dataset, limit_refs, limit_config, !limit_no_repair);
      summ::PreprocessOptions options;
      std::string canonical = summ::canonical_flags(limit_flags);
      options.stem = canonical.find('S') != std::string::npos;
      options.remove_stopwords = canonical.find('W') != std::string::npos;
      summ::RougeReport report =
          summ::docs_as_summaries(dataset, limit_opts.rouge(), title_reduce, options);
      std::ostringstream csv;
      summ::write_report_csv(report, csv);
      write_text(limit_out, csv.str());
      std::cerr << "mean rouge-1 recall = " << report.corpus_mean.at("rouge-1").recall
                << "\n";
      return 0;
    }

    if (freq_cmd->parsed()) {
      summ::LoadOptions none;
      summ::Dataset dataset = summ::load_dataset(freq_dataset, "", none, !freq_no_repair);
      summ::PreprocessOptions plain;
      std::vector<summ::Document> docs;
      for (const summ::RawArticle& article : dataset.articles)
        docs.push_back(summ::preprocess_document(article.doc_id, article.body_text, plain));
      std::vector<summ::Document> subtract;
      if (!freq_subtract.empty()) {
        summ::Dataset other = summ::load_dataset(freq_subtract, "", none, !freq_no_repair);
        for (const summ::RawArticle& article : other.articles)
          subtract.push_back(
              summ::preprocess_document(article.doc_id, article.body_text, plain));
      }
      auto table = summ::export_frequencies(docs, top_n, subtract);
      std::ostringstream csv;
      summ::write_frequencies_csv(table, csv);
      write_text(freq_out, csv.str());
      return 0;
    }
  } catch (const summ::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const summ::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

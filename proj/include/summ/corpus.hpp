#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "summ/textproc.hpp"

namespace summ {

struct RawArticle {
  std::string doc_id;
  std::optional<std::string> headline;
  std::string body_text;
  std::filesystem::path source_file;
  std::optional<std::string> docset_id;
};

struct Dataset {
  std::string name;
  std::vector<RawArticle> articles;
  std::map<std::string, std::vector<std::string>> references;  // doc_id -> summaries
  std::vector<std::pair<std::string, std::string>> dedup_report;  // (kept, removed)
};

struct LoadOptions {
  bool dedup = false;
  std::vector<std::string> headline_blocklist;  // headline forced absent
  std::vector<std::string> exclude;             // article dropped entirely
};

// Parses a key=value file; recognised keys: dedup, headline_blocklist
// (repeatable), exclude (repeatable). '#' starts a comment line.
LoadOptions load_options_file(const std::filesystem::path& file);

// One DUC-era SGML article block. With `repair`, bare '&' characters are
// escaped before entity validation (the known corpus corruption).
RawArticle parse_duc_document(const std::string& raw_xml, bool repair);

// All <DOC> blocks of one file; plain-text fallback (first line = title)
// when the file contains no <DOC> markup.
std::vector<RawArticle> parse_duc_file(const std::filesystem::path& file, bool repair);

Dataset load_dataset(const std::filesystem::path& root,
                     const std::filesystem::path& reference_root,
                     const LoadOptions& options, bool repair = true);

void write_dedup_report(const Dataset& dataset, std::ostream& out);

// Normalized title terms; falls back to the first sentence's terms when
// the headline is absent or shares no term with any body sentence.
TermList effective_title(const RawArticle& article, const Document& doc,
                         const WordSet& stopwords);
TermList effective_title(const RawArticle& article, const Document& doc);

// preprocess_document + effective_title in one step.
Document make_document(const RawArticle& article, const PreprocessOptions& options,
                       const WordSet& stopwords, const WordSet& abbreviations);
Document make_document(const RawArticle& article, const PreprocessOptions& options);

}  // namespace summ

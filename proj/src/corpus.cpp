#include "summ/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "summ/error.hpp"

namespace summ {
namespace {

bool is_space_char(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string collapse_ws(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;
  for (char c : s) {
    if (is_space_char(c)) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// Case-insensitive search for "<tag" at a tag boundary.
size_t find_tag(const std::string& text, const std::string& tag_upper, size_t from,
                size_t* content_begin) {
  for (size_t i = from; i + tag_upper.size() < text.size(); ++i) {
    if (text[i] != '<') continue;
    size_t j = i + 1;
    size_t k = 0;
    while (k < tag_upper.size() && j < text.size() &&
           std::toupper(static_cast<unsigned char>(text[j])) == tag_upper[k]) {
      ++j;
      ++k;
    }
    if (k != tag_upper.size()) continue;
    if (j < text.size() && (text[j] == '>' || is_space_char(text[j]))) {
      while (j < text.size() && text[j] != '>') ++j;
      if (content_begin) *content_begin = j + 1;
      return i;
    }
  }
  return std::string::npos;
}

// Inner content of every <tag>...</tag> section, in order.
std::vector<std::string> tag_sections(const std::string& text, const std::string& tag_upper) {
  std::vector<std::string> sections;
  size_t pos = 0;
  while (true) {
    size_t begin = 0;
    size_t open = find_tag(text, tag_upper, pos, &begin);
    if (open == std::string::npos) break;
    size_t close = find_tag(text, "/" + tag_upper, begin, nullptr);
    if (close == std::string::npos) {
      sections.push_back(text.substr(begin));
      break;
    }
    sections.push_back(text.substr(begin, close - begin));
    pos = close + 1;
  }
  return sections;
}

std::string strip_tags(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_tag = false;
  for (char c : text) {
    if (c == '<') {
      in_tag = true;
      out.push_back(' ');
    } else if (c == '>') {
      in_tag = false;
    } else if (!in_tag) {
      out.push_back(c);
    }
  }
  return out;
}

// SGML entity decoding. Known entities become their character; other
// well-formed entities are formatting codes (&QL; &MD; ...) and become a
// space. A bare '&' is a ParseError unless `repair` keeps it literal.
std::string decode_entities(const std::string& text, bool repair) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out.push_back(text[i]);
      continue;
    }
    size_t j = i + 1;
    if (j < text.size() && text[j] == '#') {
      ++j;
      size_t d = j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j > d && j < text.size() && text[j] == ';') {
        int code = std::stoi(text.substr(d, j - d));
        out.push_back(code >= 32 && code < 127 ? static_cast<char>(code) : ' ');
        i = j;
        continue;
      }
    } else {
      size_t d = j;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      if (j > d && j < text.size() && text[j] == ';') {
        std::string name = to_lower(text.substr(d, j - d));
        if (name == "amp")
          out.push_back('&');
        else if (name == "lt")
          out.push_back('<');
        else if (name == "gt")
          out.push_back('>');
        else if (name == "quot")
          out.push_back('"');
        else if (name == "apos")
          out.push_back('\'');
        else
          out.push_back(' ');
        i = j;
        continue;
      }
    }
    if (!repair) throw ParseError("bare '&' in document text (repair disabled)");
    out.push_back('&');
  }
  return out;
}

std::string clean_section(const std::string& section, bool repair) {
  return collapse_ws(decode_entities(strip_tags(section), repair));
}

const char* kHeadlineTags[] = {"HEAD", "HEADLINE", "HL", "TI", "TITLE", "TTL", "H3"};

std::string normalized_body(const RawArticle& a) { return to_lower(collapse_ws(a.body_text)); }

}  // namespace

RawArticle parse_duc_document(const std::string& raw_xml, bool repair) {
  RawArticle article;
  auto docnos = tag_sections(raw_xml, "DOCNO");
  if (!docnos.empty()) article.doc_id = collapse_ws(docnos.front());

  for (const char* tag : kHeadlineTags) {
    auto sections = tag_sections(raw_xml, tag);
    if (!sections.empty()) {
      std::string head = clean_section(sections.front(), repair);
      if (!head.empty()) {
        article.headline = head;
        break;
      }
    }
  }

  std::string body;
  for (const char* tag : {"LEADPARA", "TEXT"}) {
    for (const std::string& section : tag_sections(raw_xml, tag)) {
      std::string part = clean_section(section, repair);
      if (part.empty()) continue;
      if (!body.empty()) body.push_back(' ');
      body += part;
    }
  }
  if (body.empty()) throw EmptyBody("no text content" +
                                    (article.doc_id.empty() ? "" : " in " + article.doc_id));
  article.body_text = body;
  return article;
}

std::vector<RawArticle> parse_duc_file(const std::filesystem::path& file, bool repair) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();

  std::vector<RawArticle> articles;
  if (find_tag(content, "DOC", 0, nullptr) != std::string::npos) {
    size_t pos = 0;
    int index = 0;
    while (true) {
      size_t begin = 0;
      size_t open = find_tag(content, "DOC", pos, &begin);
      if (open == std::string::npos) break;
      size_t close = find_tag(content, "/DOC", begin, nullptr);
      size_t end = close == std::string::npos ? content.size() : close;
      RawArticle article = parse_duc_document(content.substr(begin, end - begin), repair);
      if (article.doc_id.empty()) {
        article.doc_id = file.stem().string();
        if (index > 0) article.doc_id += "-" + std::to_string(index);
      }
      article.source_file = file;
      if (file.has_parent_path())
        article.docset_id = file.parent_path().filename().string();
      articles.push_back(std::move(article));
      ++index;
      if (close == std::string::npos) break;
      pos = close + 1;
    }
    if (articles.empty()) throw ParseError("no <DOC> blocks parsed from " + file.string());
  } else {
    // plain-text fallback: first line is the title
    RawArticle article;
    article.doc_id = file.stem().string();
    article.source_file = file;
    size_t nl = content.find('\n');
    std::string first = collapse_ws(nl == std::string::npos ? content : content.substr(0, nl));
    std::string rest = nl == std::string::npos ? "" : collapse_ws(content.substr(nl + 1));
    if (!first.empty()) article.headline = first;
    article.body_text = rest.empty() ? first : rest;
    if (article.body_text.empty()) throw EmptyBody("empty file " + file.string());
    articles.push_back(std::move(article));
  }
  return articles;
}

LoadOptions load_options_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open config: " + file.string());
  LoadOptions options;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = collapse_ws(line.substr(0, eq));
    std::string value = collapse_ws(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    if (key == "dedup") {
      options.dedup = value == "true" || value == "1" || value == "yes";
    } else if (key == "headline_blocklist") {
      options.headline_blocklist.push_back(value);
    } else if (key == "exclude") {
      options.exclude.push_back(value);
    } else {
      throw ParseError("unknown config key '" + key + "' in " + file.string());
    }
  }
  return options;
}

Dataset load_dataset(const std::filesystem::path& root,
                     const std::filesystem::path& reference_root,
                     const LoadOptions& options, bool repair) {
  if (!std::filesystem::is_directory(root)) throw IoError("not a directory: " + root.string());

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  Dataset dataset;
  dataset.name = root.filename().string();
  std::map<std::string, size_t> by_id;  // doc_id -> index in articles
  for (const auto& file : files) {
    for (RawArticle& article : parse_duc_file(file, repair)) {
      if (std::find(options.exclude.begin(), options.exclude.end(), article.doc_id) !=
          options.exclude.end())
        continue;
      if (std::find(options.headline_blocklist.begin(), options.headline_blocklist.end(),
                    article.doc_id) != options.headline_blocklist.end())
        article.headline.reset();
      auto [it, inserted] = by_id.emplace(article.doc_id, dataset.articles.size());
      if (!inserted) {
        if (normalized_body(dataset.articles[it->second]) != normalized_body(article))
          throw DuplicateId("doc_id '" + article.doc_id + "' appears with differing bodies");
        continue;  // same id, same body: keep the first copy
      }
      dataset.articles.push_back(std::move(article));
    }
  }
  if (dataset.articles.empty()) throw IoError("no articles found under " + root.string());

  if (options.dedup) {
    std::map<std::string, std::string> keeper;  // normalized body -> smallest doc_id
    for (const RawArticle& a : dataset.articles) {
      std::string key = normalized_body(a);
      auto it = keeper.find(key);
      if (it == keeper.end() || a.doc_id < it->second) keeper[key] = a.doc_id;
    }
    std::vector<RawArticle> kept;
    for (RawArticle& a : dataset.articles) {
      std::string keep_id = keeper[normalized_body(a)];
      if (a.doc_id == keep_id)
        kept.push_back(std::move(a));
      else
        dataset.dedup_report.emplace_back(keep_id, a.doc_id);
    }
    dataset.articles = std::move(kept);
    std::sort(dataset.dedup_report.begin(), dataset.dedup_report.end());
  }

  if (!reference_root.empty()) {
    if (!std::filesystem::is_directory(reference_root))
      throw IoError("not a directory: " + reference_root.string());
    std::vector<std::filesystem::path> ref_files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(reference_root))
      if (entry.is_regular_file()) ref_files.push_back(entry.path());
    std::sort(ref_files.begin(), ref_files.end());

    std::map<std::string, size_t> retained;
    for (size_t i = 0; i < dataset.articles.size(); ++i)
      retained[dataset.articles[i].doc_id] = i;
    for (const auto& file : ref_files) {
      std::string name = file.filename().string();
      size_t dot = name.find('.');
      std::string doc_id = dot == std::string::npos ? name : name.substr(0, dot);
      if (!retained.count(doc_id)) continue;
      std::ifstream in(file, std::ios::binary);
      if (!in) throw IoError("cannot open reference " + file.string());
      std::stringstream buffer;
      buffer << in.rdbuf();
      std::string text = collapse_ws(buffer.str());
      if (!text.empty()) dataset.references[doc_id].push_back(text);
    }
  }
  return dataset;
}

void write_dedup_report(const Dataset& dataset, std::ostream& out) {
  out << "kept_id,removed_id\n";
  for (const auto& [kept, removed] : dataset.dedup_report)
    out << kept << "," << removed << "\n";
}

TermList effective_title(const RawArticle& article, const Document& doc,
                         const WordSet& stopwords) {
  if (doc.sentences.empty()) throw EmptyDocument("no sentences in " + doc.doc_id);
  if (article.headline) {
    TermList title =
        normalize_terms(tokenize(*article.headline), doc.options_applied, stopwords);
    if (!title.empty()) {
      for (const Sentence& s : doc.sentences)
        for (const Term& t : s.terms)
          if (std::find(title.begin(), title.end(), t) != title.end()) return title;
    }
  }
  for (const Sentence& s : doc.sentences)
    if (!s.terms.empty()) return s.terms;
  return doc.sentences.front().terms;
}

TermList effective_title(const RawArticle& article, const Document& doc) {
  return effective_title(
      article, doc,
      doc.options_applied.remove_stopwords ? default_stopwords() : WordSet{});
}

Document make_document(const RawArticle& article, const PreprocessOptions& options,
                       const WordSet& stopwords, const WordSet& abbreviations) {
  Document doc = preprocess_document(article.doc_id, article.body_text, options,
                                     stopwords, abbreviations);
  if (doc.sentences.empty()) throw EmptyDocument("no sentences in " + article.doc_id);
  doc.title_terms = effective_title(article, doc, stopwords);
  return doc;
}

Document make_document(const RawArticle& article, const PreprocessOptions& options) {
  return make_document(article, options,
                       options.remove_stopwords ? default_stopwords() : WordSet{},
                       default_abbreviations());
}

}  // namespace summ

#include "summ/titled.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <json.hpp>

#include "summ/error.hpp"

namespace summ {

LevelTree title_reduction(const Document& doc, const TermList& title_terms) {
  if (doc.sentences.empty()) throw EmptyDocument("no sentences in " + doc.doc_id);

  LevelTree tree;
  tree.title_terms_used = title_terms;

  std::vector<int> remaining;
  for (const Sentence& s : doc.sentences)
    if (!s.terms.empty()) remaining.push_back(s.index);

  std::set<Term> working(title_terms.begin(), title_terms.end());
  while (!remaining.empty()) {
    std::vector<int> level;
    std::set<Term> next;
    std::vector<int> rest;
    for (int index : remaining) {
      const TermList& terms = doc.sentences[index].terms;
      bool overlap = false;
      for (const Term& t : terms)
        if (working.count(t)) {
          overlap = true;
          break;
        }
      if (overlap) {
        level.push_back(index);
        for (const Term& t : terms)
          if (!working.count(t)) next.insert(t);
      } else {
        rest.push_back(index);
      }
    }
    if (!level.empty()) tree.levels.push_back(std::move(level));
    remaining = std::move(rest);
    if (next.empty()) break;
    working = std::move(next);
  }
  tree.uncovered = std::move(remaining);
  return tree;
}

std::vector<int> bfs_order(const LevelTree& tree) {
  std::vector<int> order;
  for (const auto& level : tree.levels) order.insert(order.end(), level.begin(), level.end());
  return order;
}

Summary depth_summary(const LevelTree& tree, const Document& doc, int depth, int word_limit) {
  std::vector<int> selected;
  for (size_t i = 0; i < tree.levels.size() && i < static_cast<size_t>(depth); ++i)
    selected.insert(selected.end(), tree.levels[i].begin(), tree.levels[i].end());
  std::sort(selected.begin(), selected.end());  // document order, unlike BFS emission
  return assemble_summary(doc, std::move(selected), word_limit, "title_depth");
}

Summary bfs_summary(const LevelTree& tree, const Document& doc, int word_limit) {
  return assemble_summary(doc, bfs_order(tree), word_limit, "title_bfs");
}

Document title_filter(const Document& doc, const LevelTree& tree) {
  Document filtered;
  filtered.doc_id = doc.doc_id;
  filtered.title_terms = doc.title_terms;
  filtered.options_applied = doc.options_applied;
  for (int index : bfs_order(tree)) {
    Sentence s = doc.sentences[index];
    s.index = static_cast<int>(filtered.sentences.size());
    filtered.sentences.push_back(std::move(s));
  }
  return filtered;
}

void dump_tree_jsonl(const LevelTree& tree, const Document& doc, std::ostream& out) {
  for (size_t i = 0; i < tree.levels.size(); ++i) {
    nlohmann::json record;
    record["doc_id"] = doc.doc_id;
    record["level"] = i;
    record["sentences"] = tree.levels[i];
    out << record.dump() << "\n";
  }
  nlohmann::json record;
  record["doc_id"] = doc.doc_id;
  record["level"] = "uncovered";
  record["sentences"] = tree.uncovered;
  out << record.dump() << "\n";
}

}  // namespace summ

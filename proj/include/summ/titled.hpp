#pragma once

#include <iosfwd>
#include <vector>

#include "summ/greedy.hpp"
#include "summ/textproc.hpp"

namespace summ {

struct LevelTree {
  std::vector<std::vector<int>> levels;  // levels[i] = sentence indices, document order
  std::vector<int> uncovered;            // eligible sentences never reached
  TermList title_terms_used;
};

// Level 0 collects the sentences sharing a normalized term with the
// title; each later level matches against the new words accumulated by
// the previous one. Matched sentences leave the working set, so levels
// are disjoint and the loop ends when a level contributes no new words
// or every sentence is placed.
LevelTree title_reduction(const Document& doc, const TermList& title_terms);

// Levels concatenated in order; indices inside a level stay in document
// order. Uncovered sentences are excluded.
std::vector<int> bfs_order(const LevelTree& tree);

// Sentences of levels 0..depth-1 in document order, truncated.
Summary depth_summary(const LevelTree& tree, const Document& doc, int depth, int word_limit);

// BFS traversal emitted as a summary, truncated to word_limit.
Summary bfs_summary(const LevelTree& tree, const Document& doc, int word_limit);

// New Document holding only covered sentences, ordered by bfs_order and
// re-indexed; downstream matrices/scores must be recomputed on it.
Document title_filter(const Document& doc, const LevelTree& tree);

// One JSON record per level, then one for the uncovered set.
void dump_tree_jsonl(const LevelTree& tree, const Document& doc, std::ostream& out);

}  // namespace summ

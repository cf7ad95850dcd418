#include "summ/porter.hpp"

#include <array>
#include <cctype>
#include <string_view>

namespace summ {
namespace {

bool is_consonant(std::string_view w, size_t i) {
  char c = w[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
  if (c == 'y') return i == 0 || !is_consonant(w, i - 1);
  return true;
}

// m in the [C](VC)^m[V] decomposition of the stem.
int measure(std::string_view stem) {
  int m = 0;
  size_t i = 0;
  const size_t n = stem.size();
  while (i < n && is_consonant(stem, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(stem, i)) ++i;
    if (i == n) break;
    ++m;
    while (i < n && is_consonant(stem, i)) ++i;
  }
  return m;
}

bool has_vowel(std::string_view stem) {
  for (size_t i = 0; i < stem.size(); ++i)
    if (!is_consonant(stem, i)) return true;
  return false;
}

bool ends_double_consonant(std::string_view w) {
  size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o condition: stem ends cvc where the final c is not w, x or y.
bool ends_cvc(std::string_view w) {
  size_t n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
  char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Applies the longest matching rule whose stem passes `min_measure`;
// once a suffix matches, no further rule in the step is considered.
void apply_step(std::string& w, const Rule* rules, size_t count, int min_measure) {
  std::string_view best;
  const Rule* chosen = nullptr;
  for (size_t k = 0; k < count; ++k) {
    if (ends_with(w, rules[k].suffix) && rules[k].suffix.size() > best.size()) {
      best = rules[k].suffix;
      chosen = &rules[k];
    }
  }
  if (!chosen) return;
  std::string_view stem(w.data(), w.size() - chosen->suffix.size());
  if (measure(stem) > min_measure) {
    w.resize(stem.size());
    w.append(chosen->replacement);
  }
}

}  // namespace

std::string porter_stem(const std::string& word) {
  std::string w = word;
  for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (w.size() <= 2) return w;

  // step 1a
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // keep
  } else if (ends_with(w, "s")) {
    w.pop_back();
  }

  // step 1b
  bool trimmed = false;
  if (ends_with(w, "eed")) {
    if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0) w.pop_back();
  } else if (ends_with(w, "ed") && has_vowel(std::string_view(w).substr(0, w.size() - 2))) {
    w.resize(w.size() - 2);
    trimmed = true;
  } else if (ends_with(w, "ing") && has_vowel(std::string_view(w).substr(0, w.size() - 3))) {
    w.resize(w.size() - 3);
    trimmed = true;
  }
  if (trimmed) {
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
      w.push_back('e');
    } else if (ends_double_consonant(w) && w.back() != 'l' && w.back() != 's' && w.back() != 'z') {
      w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
      w.push_back('e');
    }
  }

  // step 1c
  if (ends_with(w, "y") && has_vowel(std::string_view(w).substr(0, w.size() - 1))) w.back() = 'i';

  // step 2
  static constexpr std::array<Rule, 20> step2{{{"ational", "ate"},
                                               {"tional", "tion"},
                                               {"enci", "ence"},
                                               {"anci", "ance"},
                                               {"izer", "ize"},
                                               {"abli", "able"},
                                               {"alli", "al"},
                                               {"entli", "ent"},
                                               {"eli", "e"},
                                               {"ousli", "ous"},
                                               {"ization", "ize"},
                                               {"ation", "ate"},
                                               {"ator", "ate"},
                                               {"alism", "al"},
                                               {"iveness", "ive"},
                                               {"fulness", "ful"},
                                               {"ousness", "ous"},
                                               {"aliti", "al"},
                                               {"iviti", "ive"},
                                               {"biliti", "ble"}}};
  apply_step(w, step2.data(), step2.size(), 0);

  // step 3
  static constexpr std::array<Rule, 7> step3{{{"icate", "ic"},
                                              {"ative", ""},
                                              {"alize", "al"},
                                              {"iciti", "ic"},
                                              {"ical", "ic"},
                                              {"ful", ""},
                                              {"ness", ""}}};
  apply_step(w, step3.data(), step3.size(), 0);

  // step 4: all deletions, condition m > 1; "ion" additionally requires
  // the stem to end in s or t.
  {
    static constexpr std::array<std::string_view, 19> step4{
        "al", "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ism",  "ate", "iti", "ous",  "ive",  "ize", "ou"};
    std::string_view best;
    for (auto suf : step4)
      if (ends_with(w, suf) && suf.size() > best.size()) best = suf;
    if (!best.empty()) {
      std::string_view stem(w.data(), w.size() - best.size());
      bool ok = measure(stem) > 1;
      if (best == "ion") ok = ok && !stem.empty() && (stem.back() == 's' || stem.back() == 't');
      if (ok) w.resize(stem.size());
    }
  }

  // step 5a
  if (ends_with(w, "e")) {
    std::string_view stem(w.data(), w.size() - 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
  }

  // step 5b
  if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();

  return w;
}

}  // namespace summ

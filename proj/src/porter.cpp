#include "talkwalk/porter.hpp"

#include <array>
#include <cstddef>
#include <string_view>

// Straight implementation of the 1980 suffix-stripping algorithm. Within each
// step the rule whose suffix matches is decided first (lists are ordered so
// overlapping suffixes match longest-first); if its condition then fails, the
// step ends with the word unchanged.

namespace talkwalk {

namespace {

bool is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      // y is a consonant at the start, and after a vowel.
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// Number of vowel-consonant sequences in [C](VC)^m[V].
int measure(const std::string& w) {
  std::size_t i = 0;
  const std::size_t n = w.size();
  int m = 0;
  while (i < n && is_consonant(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(w, i)) ++i;
    if (i >= n) break;
    ++m;
    while (i < n && is_consonant(w, i)) ++i;
  }
  return m;
}

bool contains_vowel(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

bool ends_double_consonant(const std::string& w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// consonant-vowel-consonant ending where the final consonant is not w, x or y.
bool ends_cvc(const std::string& w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  char last = w[n - 1];
  return is_consonant(w, n - 3) && !is_consonant(w, n - 2) && is_consonant(w, n - 1) &&
         last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string chop(const std::string& w, std::size_t len) { return w.substr(0, w.size() - len); }

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  int min_measure;  // condition: measure(stem) > min_measure
};

// First matching suffix decides; the replacement happens only when the stem's
// measure clears the bar.
std::string apply_rules(const std::string& w, const Rule* rules, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Rule& r = rules[i];
    if (!ends_with(w, r.suffix)) continue;
    std::string stem = chop(w, r.suffix.size());
    if (measure(stem) > r.min_measure) return stem + std::string(r.replacement);
    return w;
  }
  return w;
}

std::string step1a(const std::string& w) {
  if (ends_with(w, "sses")) return chop(w, 2);
  if (ends_with(w, "ies")) return chop(w, 2);
  if (ends_with(w, "ss")) return w;
  if (ends_with(w, "s")) return chop(w, 1);
  return w;
}

std::string step1b(const std::string& w) {
  if (ends_with(w, "eed")) {
    std::string stem = chop(w, 3);
    return measure(stem) > 0 ? stem + "ee" : w;
  }
  std::string stripped;
  if (ends_with(w, "ed")) {
    std::string stem = chop(w, 2);
    if (!contains_vowel(stem)) return w;
    stripped = stem;
  } else if (ends_with(w, "ing")) {
    std::string stem = chop(w, 3);
    if (!contains_vowel(stem)) return w;
    stripped = stem;
  } else {
    return w;
  }
  // Cleanup after removing ed/ing.
  if (ends_with(stripped, "at") || ends_with(stripped, "bl") || ends_with(stripped, "iz"))
    return stripped + "e";
  if (ends_double_consonant(stripped)) {
    char last = stripped.back();
    if (last != 'l' && last != 's' && last != 'z') return chop(stripped, 1);
    return stripped;
  }
  if (measure(stripped) == 1 && ends_cvc(stripped)) return stripped + "e";
  return stripped;
}

std::string step1c(const std::string& w) {
  if (ends_with(w, "y")) {
    std::string stem = chop(w, 1);
    if (contains_vowel(stem)) return stem + "i";
  }
  return w;
}

constexpr std::array<Rule, 20> kStep2Rules{{
    {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},  {"anci", "ance", 0},
    {"izer", "ize", 0},    {"abli", "able", 0},   {"alli", "al", 0},    {"entli", "ent", 0},
    {"eli", "e", 0},       {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
    {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0}, {"fulness", "ful", 0},
    {"ousness", "ous", 0}, {"aliti", "al", 0},    {"iviti", "ive", 0},  {"biliti", "ble", 0},
}};

constexpr std::array<Rule, 7> kStep3Rules{{
    {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0}, {"iciti", "ic", 0},
    {"ical", "ic", 0},  {"ful", "", 0},   {"ness", "", 0},
}};

std::string step4(const std::string& w) {
  // "ion" slots between "ent" and "ou" with its extra stem condition.
  static constexpr std::string_view kBeforeIon[] = {"al",   "ance", "ence", "er",   "ic", "able",
                                                    "ible", "ant",  "ement", "ment", "ent"};
  for (const auto& suffix : kBeforeIon) {
    if (!ends_with(w, suffix)) continue;
    std::string stem = chop(w, suffix.size());
    if (measure(stem) > 1) return stem;
    return w;
  }
  if (ends_with(w, "ion")) {
    std::string stem = chop(w, 3);
    if (measure(stem) > 1 && !stem.empty() && (stem.back() == 's' || stem.back() == 't'))
      return stem;
    return w;
  }
  static constexpr std::string_view kAfterIon[] = {"ou",  "ism", "ate", "iti",
                                                   "ous", "ive", "ize"};
  for (const auto& suffix : kAfterIon) {
    if (!ends_with(w, suffix)) continue;
    std::string stem = chop(w, suffix.size());
    if (measure(stem) > 1) return stem;
    return w;
  }
  return w;
}

std::string step5a(const std::string& w) {
  if (!ends_with(w, "e")) return w;
  std::string stem = chop(w, 1);
  int m = measure(stem);
  if (m > 1) return stem;
  if (m == 1 && !ends_cvc(stem)) return stem;
  return w;
}

std::string step5b(const std::string& w) {
  if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') return chop(w, 1);
  return w;
}

}  // namespace

std::string porter_stem(std::string word) {
  if (word.empty()) return word;
  word = step1a(word);
  word = step1b(word);
  word = step1c(word);
  word = apply_rules(word, kStep2Rules.data(), kStep2Rules.size());
  word = apply_rules(word, kStep3Rules.data(), kStep3Rules.size());
  word = step4(word);
  word = step5a(word);
  word = step5b(word);
  return word;
}

}  // namespace talkwalk

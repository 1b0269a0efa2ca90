#pragma once

/* Z/2-graded ordered alphabets and Lyndon words.
 *
 * Letters are single characters; inside a Word they are stored as indices
 * into the alphabet, so comparing words compares them in the alphabet order.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperell/error.hpp"

namespace hyperell {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
/// Letter counts, one entry per letter of the alphabet.
using Multidegree = std::vector<int>;

class GradedAlphabet {
 public:
  GradedAlphabet() = default;

  /// `symbols[i]` has parity `parities[i]` (0 even, 1 odd); the order of
  /// `symbols` is the order of the alphabet.
  GradedAlphabet(std::string symbols, std::vector<int> parities)
      : symbols_(std::move(symbols)), parity_(std::move(parities)) {
    if (symbols_.empty()) throw ParseError("empty alphabet");
    if (symbols_.size() != parity_.size()) throw ParseError("one parity per letter");
    if (symbols_.size() > 64) throw OutOfRange("at most 64 letters");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const char c = symbols_[i];
      if (c == '[' || c == ']' || c == ',' || c == '(' || c == ')' || c == ' ')
        throw ParseError(std::string("reserved character '") + c + "' used as a letter");
      if (symbols_.find(c) != i) throw ParseError(std::string("letter '") + c + "' repeated");
      if (parity_[i] != 0 && parity_[i] != 1) throw ParseError("parity must be 0 or 1");
    }
  }

  /// "a:odd,b:even" (parities also as 1/0). Order as listed.
  static GradedAlphabet parse(const std::string& spec) {
    std::string symbols;
    std::vector<int> parities;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      const auto colon = item.find(':');
      if (colon != 1) throw ParseError("expected letter:parity, got '" + item + "'");
      const std::string p = item.substr(2);
      int parity;
      if (p == "odd" || p == "1") parity = 1;
      else if (p == "even" || p == "0") parity = 0;
      else throw ParseError("unknown parity '" + p + "'");
      symbols.push_back(item[0]);
      parities.push_back(parity);
    }
    return GradedAlphabet(symbols, parities);
  }

  std::size_t size() const { return symbols_.size(); }
  char symbol(Letter x) const { return symbols_.at(x); }
  int parity(Letter x) const { return parity_.at(x); }
  const std::string& symbols() const { return symbols_; }

  Letter letter(char c) const {
    const auto i = symbols_.find(c);
    if (i == std::string::npos) throw ParseError(std::string("letter '") + c + "' not in alphabet");
    return static_cast<Letter>(i);
  }

  Word word(const std::string& s) const {
    if (s.empty()) throw ParseError("empty word");
    Word w;
    for (char c : s) w.push_back(letter(c));
    return w;
  }

  std::string str(const Word& w) const {
    std::string s;
    for (Letter x : w) s.push_back(symbol(x));
    return s;
  }

  int parity(const Word& w) const {
    int p = 0;
    for (Letter x : w) p ^= parity_.at(x);
    return p;
  }

  /// Parity of any word with these letter counts.
  int parity(const Multidegree& d) const {
    int p = 0;
    for (std::size_t i = 0; i < d.size(); ++i) p ^= (d[i] & 1) * parity_.at(i);
    return p;
  }

  Multidegree multidegree(const Word& w) const {
    Multidegree d(size(), 0);
    for (Letter x : w) ++d.at(x);
    return d;
  }

  /// "a:odd,b:even".
  std::string spec() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ',';
      s += symbols_[i];
      s += parity_[i] ? ":odd" : ":even";
    }
    return s;
  }

  bool operator==(const GradedAlphabet&) const = default;

 private:
  std::string symbols_;
  std::vector<int> parity_;
};

/// Strictly smaller than each of its proper rotations.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (!(w < r)) return false;
  }
  return true;
}

/// w = uv with v the smallest proper suffix. Needs |w| >= 2.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw NotLyndon("a single letter has no standard factorization");
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i)
    if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(i), w.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(best), w.end()))
      best = i;
  const auto cut = w.begin() + static_cast<std::ptrdiff_t>(best);
  return {Word(w.begin(), cut), Word(cut, w.end())};
}

namespace detail {

inline int total(const Multidegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

inline void check_multidegree(const GradedAlphabet& alpha, const Multidegree& d) {
  if (d.size() != alpha.size()) throw OutOfRange("multidegree needs one count per letter");
  for (int c : d)
    if (c < 0) throw OutOfRange("negative letter count");
}

}  // namespace detail

/// Every Lyndon word of length <= n over k letters, in lexicographic order
/// (Duval's successor walk).
inline std::vector<Word> duval_lyndon_words(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  if (k == 0 || n == 0) return out;
  Word w{0};
  const Letter top = static_cast<Letter>(k - 1);
  for (;;) {
    out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

/// Lyndon words with exactly the letter counts `d`, in lexicographic order.
/// Runs Duval's walk with the counts used as a pruning bound.
inline std::vector<Word> lyndon_words(const GradedAlphabet& alpha, const Multidegree& d) {
  detail::check_multidegree(alpha, d);
  const int n = detail::total(d);
  if (n < 1) throw OutOfRange("multidegree total must be >= 1");
  const std::size_t k = alpha.size();
  std::vector<Word> out;
  Word w{0};
  Multidegree used(k, 0);
  auto fits = [&](const Word& x) {
    std::fill(used.begin(), used.end(), 0);
    for (Letter c : x)
      if (++used[c] > d[c]) return false;
    return true;
  };
  const Letter top = static_cast<Letter>(k - 1);
  for (;;) {
    // A prefix that already exceeds the counts is skipped along with every
    // word that extends it: without the periodic extension the increment
    // below lands on the next Lyndon word not starting with w.
    if (fits(w)) {
      if (static_cast<int>(w.size()) == n) out.push_back(w);
      const std::size_t m = w.size();
      while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    }
    while (!w.empty() && w.back() == top) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

/// Reference generator: every arrangement of the multiset, filtered by
/// is_lyndon.
inline std::vector<Word> lyndon_words_by_filter(const GradedAlphabet& alpha, const Multidegree& d) {
  detail::check_multidegree(alpha, d);
  if (detail::total(d) < 1) throw OutOfRange("multidegree total must be >= 1");
  Word w;
  for (std::size_t i = 0; i < d.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(d[i]), static_cast<Letter>(i));
  std::vector<Word> out;
  do {
    if (is_lyndon(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace hyperell

#pragma once

/* The free Lie superalgebra on a graded alphabet, in the Lyndon basis.
 *
 * Basis: B(w) for Lyndon w (standard bracketing), plus the squares
 * <u> = [B(u),B(u)] for Lyndon u of odd degree. The bracket is
 * super-antisymmetric, [x,y] = -(-1)^{|x||y|}[y,x].
 *
 * Products of basis elements are reduced by the usual Lyndon rewriting:
 *
 *   [B(m),B(m)]  ->  <m> if m is odd, 0 if m is even
 *   [B(m),B(n)]  ->  -(-1)^{|m||n|}[B(n),B(m)]               if m > n
 *   [B(m),B(n)]  ->  B(mn)             if m < n and m is a letter or m2 >= n
 *   [B(m),B(n)]  ->  [M1,[M2,N]] - (-1)^{|m1||m2|}[M2,[M1,N]]  otherwise
 *   [<u>,X]      ->  2[B(u),[B(u),X]],   [X,<u>] -> -[<u>,X]
 *
 * where m = m1 m2 is the standard factorization. Each step lowers
 * (length of the left factor, word order), so the recursion terminates.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperell/lyndon.hpp"
#include "hyperell/rational.hpp"

namespace hyperell {

/// B(word), or <word> when `square` is set.
struct BasisKey {
  Word word;
  bool square = false;

  /// The smallest word in the tensor expansion: w, or ww for a square.
  Word expanded() const {
    if (!square) return word;
    Word w = word;
    w.insert(w.end(), word.begin(), word.end());
    return w;
  }

  friend bool operator<(const BasisKey& x, const BasisKey& y) {
    const Word ex = x.expanded(), ey = y.expanded();
    if (ex != ey) return ex < ey;
    return x.square < y.square;
  }
  friend bool operator==(const BasisKey& x, const BasisKey& y) = default;
};

inline int parity(const GradedAlphabet& alpha, const BasisKey& k) { return k.square ? 0 : alpha.parity(k.word); }

inline std::string key_string(const GradedAlphabet& alpha, const BasisKey& k) {
  return k.square ? "(" + alpha.str(k.word) + ")^[2]" : alpha.str(k.word);
}

// ---------------------------------------------------------------------------
// Bracket expressions

class BracketExpr {
 public:
  static BracketExpr letter(Letter x) {
    BracketExpr e;
    e.node_ = std::make_shared<const Node>(Node{x, nullptr, nullptr});
    return e;
  }
  static BracketExpr bracket(const BracketExpr& l, const BracketExpr& r) {
    BracketExpr e;
    e.node_ = std::make_shared<const Node>(Node{0, l.node_, r.node_});
    return e;
  }

  bool is_letter() const { return !node_->left; }
  Letter as_letter() const { return node_->letter; }
  BracketExpr left() const { return BracketExpr(node_->left); }
  BracketExpr right() const { return BracketExpr(node_->right); }

  /// Leaf letters from left to right.
  Word leaves() const {
    Word out;
    collect(out);
    return out;
  }

  std::string str(const GradedAlphabet& alpha) const {
    if (is_letter()) return std::string(1, alpha.symbol(as_letter()));
    return "[" + left().str(alpha) + "," + right().str(alpha) + "]";
  }

  /// "[[a,b],[a,a]]"; whitespace is ignored.
  static BracketExpr parse(const GradedAlphabet& alpha, const std::string& text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
    std::size_t pos = 0;
    BracketExpr e = parse_at(alpha, s, pos);
    if (pos != s.size()) throw ParseError("trailing input at position " + std::to_string(pos) + " in '" + text + "'");
    return e;
  }

 private:
  struct Node {
    Letter letter;
    std::shared_ptr<const Node> left, right;
  };
  std::shared_ptr<const Node> node_;

  BracketExpr() = default;
  explicit BracketExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  void collect(Word& out) const {
    if (is_letter()) {
      out.push_back(as_letter());
      return;
    }
    left().collect(out);
    right().collect(out);
  }

  static BracketExpr parse_at(const GradedAlphabet& alpha, const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("unexpected end of bracket expression");
    if (s[pos] != '[') return letter(alpha.letter(s[pos++]));
    ++pos;
    BracketExpr l = parse_at(alpha, s, pos);
    if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' at position " + std::to_string(pos));
    ++pos;
    BracketExpr r = parse_at(alpha, s, pos);
    if (pos >= s.size() || s[pos] != ']') throw ParseError("expected ']' at position " + std::to_string(pos));
    ++pos;
    return bracket(l, r);
  }
};

/// B(w) as a bracket expression.
inline BracketExpr standard_bracketing(const Word& w) {
  if (!is_lyndon(w)) throw NotLyndon("word is not Lyndon");
  if (w.size() == 1) return BracketExpr::letter(w[0]);
  auto [u, v] = standard_factorization(w);
  return BracketExpr::bracket(standard_bracketing(u), standard_bracketing(v));
}

/// The bracket expression of a basis element.
inline BracketExpr basis_expression(const BasisKey& k) {
  const BracketExpr b = standard_bracketing(k.word);
  return k.square ? BracketExpr::bracket(b, b) : b;
}

// ---------------------------------------------------------------------------
// Vectors

template <class Scalar = Rational>
class BasicLieVector {
 public:
  using Terms = std::map<BasisKey, Scalar>;

  BasicLieVector() = default;
  static BasicLieVector basis(BasisKey k, Scalar c = Scalar(1)) {
    BasicLieVector v;
    v.add(std::move(k), c);
    return v;
  }

  void add(const BasisKey& k, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const BasicLieVector& x, const Scalar& c = Scalar(1)) {
    for (const auto& [k, a] : x.terms_) add(k, a * c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  BasicLieVector& operator+=(const BasicLieVector& x) {
    add(x);
    return *this;
  }
  BasicLieVector& operator-=(const BasicLieVector& x) {
    add(x, Scalar(-1));
    return *this;
  }
  friend BasicLieVector operator+(BasicLieVector x, const BasicLieVector& y) { return x += y; }
  friend BasicLieVector operator-(BasicLieVector x, const BasicLieVector& y) { return x -= y; }
  friend BasicLieVector operator*(const Scalar& c, const BasicLieVector& x) {
    BasicLieVector r;
    r.add(x, c);
    return r;
  }
  friend bool operator==(const BasicLieVector& x, const BasicLieVector& y) { return x.terms_ == y.terms_; }

  /// "2·aaabbb +2·aababb -6·ababbabb", "1·(a)^[2]", or "0".
  std::string str(const GradedAlphabet& alpha) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::ostringstream coef;
      coef << c;
      std::string cs = coef.str();
      if (!first) {
        out += ' ';
        if (cs[0] != '-') cs = "+" + cs;
      }
      out += cs + "·" + key_string(alpha, k);
      first = false;
    }
    return out;
  }

  /// Inverse of str(); '*' is accepted in place of the middle dot and a
  /// missing coefficient means 1.
  static BasicLieVector parse(const GradedAlphabet& alpha, const std::string& text) {
    BasicLieVector v;
    std::istringstream in(text);
    std::string term;
    while (in >> term) {
      if (term == "0") continue;
      std::string coef = "1", key = term;
      std::size_t cut = term.find("·"), skip = 2;
      if (cut == std::string::npos) {
        cut = term.find('*');
        skip = 1;
      }
      if (cut != std::string::npos) {
        coef = term.substr(0, cut);
        key = term.substr(cut + skip);
      } else if (term[0] == '+' || term[0] == '-') {
        coef = term.substr(0, 1) + "1";
        key = term.substr(1);
      }
      if (!coef.empty() && coef[0] == '+') coef.erase(0, 1);
      if (coef.empty() || coef == "-") coef += "1";
      Scalar c;
      try {
        c = Scalar(coef);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + coef + "'");
      }
      BasisKey k;
      if (key.size() > 5 && key.front() == '(' && key.compare(key.size() - 5, 5, ")^[2]") == 0) {
        k.word = alpha.word(key.substr(1, key.size() - 6));
        k.square = true;
        if (alpha.parity(k.word) != 1) throw ParseError("square of an even word: " + key);
      } else {
        k.word = alpha.word(key);
      }
      if (!is_lyndon(k.word)) throw NotLyndon(alpha.str(k.word));
      v.add(k, c);
    }
    return v;
  }

 private:
  Terms terms_;
};

using LieVector = BasicLieVector<Rational>;

// ---------------------------------------------------------------------------
// The algebra

class FreeLieSuperalgebra {
 public:
  explicit FreeLieSuperalgebra(GradedAlphabet alpha) : alpha_(std::move(alpha)) {}
  FreeLieSuperalgebra(const FreeLieSuperalgebra& o) : alpha_(o.alpha_) {}

  const GradedAlphabet& alphabet() const { return alpha_; }

  int parity(const BasisKey& k) const { return hyperell::parity(alpha_, k); }

  Multidegree multidegree(const BasisKey& k) const {
    Multidegree d = alpha_.multidegree(k.word);
    if (k.square)
      for (int& c : d) c *= 2;
    return d;
  }

  /// Lyndon words of multidegree d, then squares <u> for odd Lyndon u of
  /// multidegree d/2; sorted by key.
  std::vector<BasisKey> basis(const Multidegree& d) const {
    std::vector<BasisKey> out;
    for (Word& w : lyndon_words(alpha_, d)) out.push_back({std::move(w), false});
    Multidegree half(d.size());
    bool even = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      even = even && d[i] % 2 == 0;
      half[i] = d[i] / 2;
    }
    if (even && detail::total(half) >= 1 && alpha_.parity(half) == 1)
      for (Word& u : lyndon_words(alpha_, half)) out.push_back({std::move(u), true});
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t dimension(const Multidegree& d) const { return basis(d).size(); }

  /// [k1, k2] in the basis. Results are memoized.
  const LieVector& bracket_keys(const BasisKey& k1, const BasisKey& k2) const {
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find({k1, k2});
      if (it != memo_.end()) return it->second;
    }
    LieVector r = compute(k1, k2);
    std::lock_guard lock(mutex_);
    return memo_.try_emplace({k1, k2}, std::move(r)).first->second;
  }

  LieVector bracket(const LieVector& x, const LieVector& y) const {
    LieVector r;
    for (const auto& [k1, c1] : x.terms())
      for (const auto& [k2, c2] : y.terms()) r.add(bracket_keys(k1, k2), c1 * c2);
    return r;
  }

  LieVector normalize(const BracketExpr& e) const {
    if (e.is_letter()) return LieVector::basis({Word{e.as_letter()}, false});
    return bracket(normalize(e.left()), normalize(e.right()));
  }

  /// A linear combination of bracket expressions; all must share one
  /// multidegree.
  LieVector normalize(const std::vector<std::pair<Rational, BracketExpr>>& combo) const {
    LieVector r;
    std::optional<Multidegree> d;
    for (const auto& [c, e] : combo) {
      const Multidegree de = alpha_.multidegree(e.leaves());
      if (d && *d != de) throw MixedMultidegree("terms of different multidegree");
      d = de;
      r.add(normalize(e), c);
    }
    return r;
  }

  BracketExpr standard_bracketing(const Word& w) const { return hyperell::standard_bracketing(w); }

  std::size_t memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

 private:
  LieVector compute(const BasisKey& k1, const BasisKey& k2) const {
    LieVector r;
    if (k1.square) {
      // [<u>,<u>] = 0 and [<u>,B(u)] = [[u,u],u] = 0 by super-Jacobi.
      if (k2.word == k1.word) return r;
      const BasisKey u{k1.word, false};
      for (const auto& [k, c] : bracket_keys(u, k2).terms()) r.add(bracket_keys(u, k), Rational(2) * c);
      return r;
    }
    if (k2.square) {
      r.add(bracket_keys(k2, k1), Rational(-1));
      return r;
    }
    const Word& m = k1.word;
    const Word& n = k2.word;
    const int pm = alpha_.parity(m), pn = alpha_.parity(n);
    if (m == n) {
      if (pm == 1) r.add(BasisKey{m, true}, Rational(1));
      return r;
    }
    if (n < m) {
      r.add(bracket_keys(k2, k1), Rational((pm & pn) ? 1 : -1));
      return r;
    }
    if (m.size() == 1) {
      r.add(joined(m, n), Rational(1));
      return r;
    }
    auto [m1, m2] = standard_factorization(m);
    if (!(m2 < n)) {
      r.add(joined(m, n), Rational(1));
      return r;
    }
    const BasisKey K1{m1, false}, K2{m2, false};
    for (const auto& [k, c] : bracket_keys(K2, k2).terms()) r.add(bracket_keys(K1, k), c);
    const Rational s((alpha_.parity(m1) & alpha_.parity(m2)) ? 1 : -1);
    for (const auto& [k, c] : bracket_keys(K1, k2).terms()) r.add(bracket_keys(K2, k), s * c);
    return r;
  }

  static BasisKey joined(const Word& m, const Word& n) {
    Word w = m;
    w.insert(w.end(), n.begin(), n.end());
    return {std::move(w), false};
  }

  GradedAlphabet alpha_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<BasisKey, BasisKey>, LieVector> memo_;
};

}  // namespace hyperell

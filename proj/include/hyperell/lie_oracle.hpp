#pragma once

/* Brute-force model of the free Lie superalgebra inside the tensor algebra.
 *
 * A bracket expression maps to a noncommutative polynomial through the super
 * commutator xy - (-1)^{|x||y|} yx; in characteristic 0 this embeds the free
 * Lie superalgebra. The span of all full bracketings of a multidegree is built
 * one sub-multidegree at a time (bracket every spanning vector of d1 with
 * every one of d2, d1 + d2 = d) and kept in row echelon form over Q. Nothing
 * here uses the Lyndon rewriting, so ranks and coordinates computed here are
 * an independent check of FreeLieSuperalgebra.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperell/lie.hpp"

namespace hyperell {

/// A noncommutative polynomial: word -> coefficient, no zero entries.
using TensorPoly = std::map<Word, Rational>;

namespace detail {

inline void add_to(TensorPoly& p, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline void add_to(TensorPoly& p, const TensorPoly& q, const Rational& c) {
  for (const auto& [w, a] : q) add_to(p, w, a * c);
}

inline TensorPoly concat(const TensorPoly& x, const TensorPoly& y) {
  TensorPoly r;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_to(r, w, a * b);
    }
  return r;
}

/// Number of words with letter counts d.
inline double multinomial(const Multidegree& d) {
  double r = 1;
  int n = 0;
  for (int c : d)
    for (int i = 1; i <= c; ++i) r = r * ++n / i;
  return r;
}

}  // namespace detail

/// Row echelon basis over Q; each row's pivot is its smallest word, with
/// coefficient 1.
class EchelonBasis {
 public:
  /// Reduces p against the rows; returns the remainder.
  TensorPoly reduce(TensorPoly p) const {
    for (auto it = p.begin(); it != p.end();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Word w = it->first;
      const Rational c = it->second;
      detail::add_to(p, row->second, -c);
      it = p.upper_bound(w);
    }
    return p;
  }

  /// Adds p to the span; false if it was already there.
  bool insert(const TensorPoly& p) {
    TensorPoly r = reduce(p);
    if (r.empty()) return false;
    const Rational lead = r.begin()->second;
    for (auto& [w, c] : r) c /= lead;
    const Word pivot = r.begin()->first;
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  bool contains(const TensorPoly& p) const { return reduce(p).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<Word, TensorPoly>& rows() const { return rows_; }

 private:
  std::map<Word, TensorPoly> rows_;
};

class LieOracle {
 public:
  static constexpr int kMaxTotal = 8;
  /// Largest number of words of one multidegree the oracle accepts.
  static constexpr double kMaxWords = 1000;

  explicit LieOracle(GradedAlphabet alpha) : alpha_(std::move(alpha)) {}

  const GradedAlphabet& alphabet() const { return alpha_; }

  TensorPoly super_commutator(const TensorPoly& x, int px, const TensorPoly& y, int py) const {
    TensorPoly r = detail::concat(x, y);
    detail::add_to(r, detail::concat(y, x), Rational((px & py) ? 1 : -1));
    return r;
  }

  TensorPoly tensor(const BracketExpr& e) const {
    if (e.is_letter()) return TensorPoly{{Word{e.as_letter()}, Rational(1)}};
    return super_commutator(tensor(e.left()), alpha_.parity(e.left().leaves()), tensor(e.right()),
                            alpha_.parity(e.right().leaves()));
  }

  TensorPoly tensor(const BasisKey& k) const { return tensor(basis_expression(k)); }

  TensorPoly tensor(const LieVector& v) const {
    TensorPoly r;
    for (const auto& [k, c] : v.terms()) detail::add_to(r, tensor(k), c);
    return r;
  }

  /// Echelon basis of the span of every full bracketing of every word with
  /// letter counts d.
  const EchelonBasis& span(const Multidegree& d) {
    check(d);
    if (auto it = spans_.find(d); it != spans_.end()) return it->second;
    EchelonBasis basis;
    const int n = detail::total(d);
    if (n == 1) {
      for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] == 1) basis.insert(TensorPoly{{Word{static_cast<Letter>(i)}, Rational(1)}});
    } else {
      Multidegree d1(d.size(), 0);
      // Every d1 with 0 < d1 < d, in odometer order.
      for (;;) {
        std::size_t i = 0;
        while (i < d.size() && d1[i] == d[i]) d1[i++] = 0;
        if (i == d.size()) break;
        ++d1[i];
        Multidegree d2(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) d2[j] = d[j] - d1[j];
        if (detail::total(d2) == 0) continue;
        const int p1 = alpha_.parity(d1), p2 = alpha_.parity(d2);
        // Copy the rows: span() below may rehash nothing, but keep the
        // recursion free of references into spans_ anyway.
        const auto left = span(d1).rows();
        const auto right = span(d2).rows();
        for (const auto& [w1, x] : left)
          for (const auto& [w2, y] : right) basis.insert(super_commutator(x, p1, y, p2));
      }
    }
    return spans_.emplace(d, std::move(basis)).first->second;
  }

  std::size_t rank(const Multidegree& d) { return span(d).rank(); }

  bool contains(const TensorPoly& p) {
    if (p.empty()) return true;
    return span(alpha_.multidegree(p.begin()->first)).contains(p);
  }

  /// Coordinates of a Lie polynomial in the Lyndon basis, by peeling off
  /// smallest words: B(w) has smallest word w with coefficient 1, <u> has uu
  /// with coefficient 2.
  LieVector coordinates(TensorPoly p) const {
    LieVector out;
    while (!p.empty()) {
      const Word m = p.begin()->first;
      const Rational c = p.begin()->second;
      BasisKey k{m, false};
      Rational lead(1);
      if (!is_lyndon(m)) {
        const std::size_t h = m.size() / 2;
        const Word u(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(h));
        const bool square = m.size() % 2 == 0 && std::equal(u.begin(), u.end(), m.begin() + static_cast<std::ptrdiff_t>(h)) &&
                            is_lyndon(u) && alpha_.parity(u) == 1;
        if (!square) throw Error("not a Lie polynomial: smallest word " + alpha_.str(m));
        k = {u, true};
        lead = 2;
      }
      const Rational f = c / lead;
      out.add(k, f);
      detail::add_to(p, tensor(k), -f);
    }
    return out;
  }

 private:
  void check(const Multidegree& d) const {
    detail::check_multidegree(alpha_, d);
    const int n = detail::total(d);
    if (n < 1) throw OutOfRange("multidegree total must be >= 1");
    if (n > kMaxTotal) throw TooLarge("oracle needs total <= " + std::to_string(kMaxTotal));
    if (detail::multinomial(d) > kMaxWords) throw TooLarge("oracle: too many words of this multidegree");
  }

  GradedAlphabet alpha_;
  std::map<Multidegree, EchelonBasis> spans_;
};

}  // namespace hyperell

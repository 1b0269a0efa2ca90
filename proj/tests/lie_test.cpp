#include <gtest/gtest.h>

#include <random>

#include "hyperell/lie.hpp"
#include "hyperell/lie_oracle.hpp"
#include "hyperell/lyndon.hpp"

using namespace hyperell;

namespace {

const GradedAlphabet kAB = GradedAlphabet::parse("a:odd,b:even");
const GradedAlphabet kABC = GradedAlphabet::parse("a:odd,b:odd,c:even");

std::vector<Multidegree> degrees_up_to(std::size_t letters, int max_total) {
  std::vector<Multidegree> out;
  Multidegree d(letters, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < letters && detail::total(d) >= max_total) d[i++] = 0;
    if (i == letters) break;
    ++d[i];
    if (detail::total(d) <= max_total) out.push_back(d);
  }
  return out;
}

BracketExpr random_expr(std::mt19937& rng, const GradedAlphabet& alpha, int leaves) {
  if (leaves == 1) return BracketExpr::letter(static_cast<Letter>(std::uniform_int_distribution<int>(0, static_cast<int>(alpha.size()) - 1)(rng)));
  const int left = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
  return BracketExpr::bracket(random_expr(rng, alpha, left), random_expr(rng, alpha, leaves - left));
}

}  // namespace

TEST(Alphabet, Parse) {
  EXPECT_EQ(kAB.size(), 2u);
  EXPECT_EQ(kAB.parity(kAB.letter('a')), 1);
  EXPECT_EQ(kAB.parity(kAB.letter('b')), 0);
  EXPECT_EQ(kAB.spec(), "a:odd,b:even");
  EXPECT_EQ(kAB.parity(kAB.word("aab")), 0);
  EXPECT_EQ(kAB.multidegree(kAB.word("abab")), (Multidegree{2, 2}));
  EXPECT_THROW(GradedAlphabet::parse("a:odd,a:even"), ParseError);
  EXPECT_THROW(GradedAlphabet::parse("a:weird"), ParseError);
  EXPECT_THROW(kAB.word("abc"), ParseError);
}

TEST(Lyndon, Predicate) {
  for (const char* w : {"a", "b", "ab", "aab", "abb", "aabab", "aabbab", "ababb"}) EXPECT_TRUE(is_lyndon(kAB.word(w))) << w;
  EXPECT_FALSE(is_lyndon(Word{}));
  for (const char* w : {"aa", "ba", "abab", "aba", "bab", "abaab"}) EXPECT_FALSE(is_lyndon(kAB.word(w))) << w;
}

TEST(Lyndon, StandardFactorization) {
  const auto [u, v] = standard_factorization(kAB.word("aabab"));
  EXPECT_EQ(kAB.str(u), "aab");
  EXPECT_EQ(kAB.str(v), "ab");
  const auto [x, y] = standard_factorization(kAB.word("aabb"));
  EXPECT_EQ(kAB.str(x), "a");
  EXPECT_EQ(kAB.str(y), "abb");
}

TEST(Lyndon, Examples) {
  auto strs = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(kAB.str(w));
    return out;
  };
  EXPECT_EQ(strs(lyndon_words(kAB, {2, 2})), (std::vector<std::string>{"aabb"}));
  EXPECT_EQ(strs(lyndon_words(kAB, {3, 2})), (std::vector<std::string>{"aaabb", "aabab"}));
  EXPECT_EQ(strs(lyndon_words(kAB, {2, 3})), (std::vector<std::string>{"aabbb", "ababb"}));
  EXPECT_TRUE(lyndon_words(kAB, {2, 0}).empty());
  EXPECT_EQ(strs(lyndon_words(kAB, {1, 0})), (std::vector<std::string>{"a"}));
  EXPECT_THROW(lyndon_words(kAB, {1, 1, 1}), OutOfRange);
  EXPECT_THROW(lyndon_words(kAB, {-1, 2}), OutOfRange);
}

TEST(Lyndon, DuvalAgreesWithFilter) {
  for (const auto& d : degrees_up_to(2, 8)) EXPECT_EQ(lyndon_words(kAB, d), lyndon_words_by_filter(kAB, d));
  for (const auto& d : degrees_up_to(3, 7)) EXPECT_EQ(lyndon_words(kABC, d), lyndon_words_by_filter(kABC, d));
}

TEST(Lyndon, NecklaceCounts) {
  // Binary Lyndon words by length.
  const std::vector<std::size_t> want{2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  std::vector<std::size_t> got(want.size(), 0);
  for (const Word& w : duval_lyndon_words(2, want.size())) ++got[w.size() - 1];
  EXPECT_EQ(got, want);
}

TEST(Bracket, Parse) {
  const BracketExpr e = BracketExpr::parse(kAB, "[[a,b],[a,a]]");
  EXPECT_EQ(e.str(kAB), "[[a,b],[a,a]]");
  EXPECT_EQ(kAB.str(e.leaves()), "abaa");
  EXPECT_THROW(BracketExpr::parse(kAB, "[a,b"), ParseError);
  EXPECT_THROW(BracketExpr::parse(kAB, "[a,c]"), ParseError);
  EXPECT_THROW(BracketExpr::parse(kAB, "[a,b]]"), ParseError);
}

TEST(Bracket, StandardBracketing) {
  EXPECT_EQ(standard_bracketing(kAB.word("aabab")).str(kAB), "[[a,[a,b]],[a,b]]");
  EXPECT_EQ(standard_bracketing(kAB.word("aabb")).str(kAB), "[a,[[a,b],b]]");
  EXPECT_THROW(standard_bracketing(kAB.word("ba")), NotLyndon);
}

TEST(Normalize, Examples) {
  const FreeLieSuperalgebra L(kAB);
  auto norm = [&](const char* s) { return L.normalize(BracketExpr::parse(kAB, s)).str(kAB); };
  EXPECT_EQ(norm("[[a,a],[a,b]]"), "2·aaab");
  EXPECT_EQ(norm("[b,a]"), "-1·ab");
  EXPECT_EQ(norm("[a,b]"), "1·ab");
  EXPECT_EQ(norm("[a,a]"), "1·(a)^[2]");
  EXPECT_EQ(norm("[a,[a,a]]"), "0");
  EXPECT_EQ(norm("[b,b]"), "0");
  EXPECT_EQ(norm("[a,[a,b]]"), "1·aab");
  EXPECT_EQ(norm("[[a,a],b]"), "2·aab");
}

TEST(Normalize, MixedMultidegreeRejected) {
  const FreeLieSuperalgebra L(kAB);
  std::vector<std::pair<Rational, BracketExpr>> combo{{1, BracketExpr::parse(kAB, "[a,b]")},
                                                      {1, BracketExpr::parse(kAB, "[a,a]")}};
  EXPECT_THROW(L.normalize(combo), MixedMultidegree);
}

TEST(Normalize, BasisIsFixed) {
  for (const auto* alpha : {&kAB, &kABC}) {
    const FreeLieSuperalgebra L(*alpha);
    for (const auto& d : degrees_up_to(alpha->size(), alpha->size() == 2 ? 7 : 5))
      for (const BasisKey& k : L.basis(d)) EXPECT_EQ(L.normalize(basis_expression(k)), LieVector::basis(k));
  }
}

TEST(Normalize, SuperAntisymmetry) {
  const FreeLieSuperalgebra L(kAB);
  for (const auto& d1 : degrees_up_to(2, 3))
    for (const auto& d2 : degrees_up_to(2, 3))
      for (const BasisKey& x : L.basis(d1))
        for (const BasisKey& y : L.basis(d2)) {
          const int s = L.parity(x) && L.parity(y) ? 1 : -1;
          EXPECT_EQ(L.bracket_keys(x, y), Rational(s) * L.bracket_keys(y, x));
        }
}

TEST(Normalize, Jacobi) {
  const FreeLieSuperalgebra L(kABC);
  const auto degs = degrees_up_to(3, 2);
  std::vector<BasisKey> keys;
  for (const auto& d : degs)
    for (const BasisKey& k : L.basis(d)) keys.push_back(k);
  for (const BasisKey& x : keys)
    for (const BasisKey& y : keys)
      for (const BasisKey& z : keys) {
        const LieVector X = LieVector::basis(x), Y = LieVector::basis(y), Z = LieVector::basis(z);
        const int s = L.parity(x) && L.parity(y) ? -1 : 1;
        const LieVector lhs = L.bracket(X, L.bracket(Y, Z));
        const LieVector rhs = L.bracket(L.bracket(X, Y), Z) + Rational(s) * L.bracket(Y, L.bracket(X, Z));
        ASSERT_EQ(lhs, rhs) << key_string(kABC, x) << " " << key_string(kABC, y) << " " << key_string(kABC, z);
      }
}

TEST(Oracle, Triangularity) {
  for (const auto* alpha : {&kAB, &kABC}) {
    const FreeLieSuperalgebra L(*alpha);
    const LieOracle O(*alpha);
    for (const auto& d : degrees_up_to(alpha->size(), 6))
      for (const BasisKey& k : L.basis(d)) {
        const TensorPoly p = O.tensor(k);
        ASSERT_FALSE(p.empty());
        EXPECT_EQ(p.begin()->first, k.expanded()) << key_string(*alpha, k);
        EXPECT_EQ(p.begin()->second, Rational(k.square ? 2 : 1));
      }
  }
}

TEST(Oracle, DimensionsAgree) {
  for (const auto* alpha : {&kAB, &kABC}) {
    const FreeLieSuperalgebra L(*alpha);
    LieOracle O(*alpha);
    for (const auto& d : degrees_up_to(alpha->size(), alpha->size() == 2 ? 8 : 6)) {
      if (detail::multinomial(d) > LieOracle::kMaxWords) continue;
      EXPECT_EQ(L.dimension(d), O.rank(d)) << d[0] << "," << d[1];
    }
  }
}

TEST(Oracle, FrozenDimensions) {
  const FreeLieSuperalgebra L(kAB);
  EXPECT_EQ(L.dimension({1, 0}), 1u);
  EXPECT_EQ(L.dimension({2, 0}), 1u);
  EXPECT_EQ(L.dimension({3, 0}), 0u);
  EXPECT_EQ(L.dimension({0, 2}), 0u);
  EXPECT_EQ(L.dimension({2, 1}), 1u);
  EXPECT_EQ(L.dimension({2, 2}), 2u);  // aabb and (ab)^[2]
  LieOracle O(kAB);
  EXPECT_EQ(O.rank({2, 2}), 2u);
}

TEST(Oracle, Multilinear) {
  for (int n = 1; n <= 7; ++n) {
    std::string symbols;
    for (int k = 0; k < n; ++k) symbols.push_back(static_cast<char>('a' + k));
    const GradedAlphabet alpha(symbols, std::vector<int>(static_cast<std::size_t>(n), 1));
    const Multidegree d(static_cast<std::size_t>(n), 1);
    std::size_t fact = 1;
    for (int k = 2; k < n; ++k) fact *= static_cast<std::size_t>(k);
    EXPECT_EQ(FreeLieSuperalgebra(alpha).dimension(d), fact);
    if (n <= 6) {
      EXPECT_EQ(LieOracle(alpha).rank(d), fact);
    }
  }
}

TEST(Oracle, RandomExpressionsAgree) {
  std::mt19937 rng(17);
  for (const auto* alpha : {&kAB, &kABC}) {
    const FreeLieSuperalgebra L(*alpha);
    LieOracle O(*alpha);
    for (int trial = 0; trial < 300; ++trial) {
      const BracketExpr e = random_expr(rng, *alpha, 2 + trial % 6);
      const TensorPoly p = O.tensor(e);
      const LieVector v = L.normalize(e);
      EXPECT_EQ(O.tensor(v), p) << e.str(*alpha);
      EXPECT_EQ(O.coordinates(p), v) << e.str(*alpha);
      if (!p.empty()) {
        EXPECT_TRUE(O.contains(p));
      }
    }
  }
}

TEST(Oracle, TooLarge) {
  LieOracle O(kAB);
  EXPECT_THROW(O.rank({5, 4}), TooLarge);
  LieOracle O3(kABC);
  EXPECT_THROW(O3.rank({3, 3, 3}), TooLarge);
  EXPECT_NO_THROW(O3.rank({1, 1, 2}));
}

TEST(LieVector, TextRoundTrip) {
  const FreeLieSuperalgebra L(kAB);
  for (const auto& d : degrees_up_to(2, 6)) {
    LieVector v;
    int c = 1;
    for (const BasisKey& k : L.basis(d)) v.add(k, Rational(c++ % 2 ? c : -c, 3));
    EXPECT_EQ(LieVector::parse(kAB, v.str(kAB)), v) << v.str(kAB);
  }
  EXPECT_EQ(LieVector::parse(kAB, "2*aab -ab"), LieVector::parse(kAB, "2·aab -1·ab"));
  EXPECT_TRUE(LieVector::parse(kAB, "0").is_zero());
  EXPECT_THROW(LieVector::parse(kAB, "1·ba"), NotLyndon);
  EXPECT_THROW(LieVector::parse(kAB, "1·(b)^[2]"), ParseError);
  EXPECT_THROW(LieVector::parse(kAB, "x·ab"), ParseError);
}

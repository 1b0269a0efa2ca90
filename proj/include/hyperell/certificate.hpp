#pragma once

/* The Lie row of the F_1 page and the certificate that H^g_c is nonzero.
 *
 * V_{l,g} is the multidegree (2g-2l+1, l) part of the free Lie superalgebra
 * on {a, b}; omega_g = B(ab^g) spans V_{g,g}. The differential d1 replaces one
 * occurrence of b by [a,a] at a time, with a sign per occurrence.
 *
 * Sign conventions (D1Convention):
 *  - koszul: a and b both odd; d1 is the odd derivation with d1(a) = 0 and
 *    d1(b) = -[a,a], so the occurrence at leaf position i carries
 *    -(-1)^{parity of the letters left of it}. On omega_g this is (-1)^{i-1}
 *    for the i-th b. d1 squares to zero.
 *  - word_position: b even, sign (-1)^{i-1} for the i-th b of the word. Agrees
 *    on omega_g up to g = 4 but d1 does not square to zero from g = 5 on; kept
 *    for comparison.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyperell/annotate.hpp"
#include "hyperell/canonical.hpp"
#include "hyperell/lie.hpp"
#include "hyperell/spectral.hpp"
#include "hyperell/trees.hpp"

namespace hyperell {

enum class D1Convention { koszul, word_position };

inline std::string to_string(D1Convention c) { return c == D1Convention::koszul ? "koszul" : "word_position"; }

inline constexpr Letter kLetterA = 0;
inline constexpr Letter kLetterB = 1;

/// {a < b}: a odd, b odd under koszul and even under word_position.
inline GradedAlphabet certificate_alphabet(D1Convention c = D1Convention::koszul) {
  return GradedAlphabet("ab", {1, c == D1Convention::koszul ? 1 : 0});
}

/// The letter counts of V_{l,g}: (2g-2l+1, l).
inline Multidegree v_multidegree(int l, int g) { return {2 * g - 2 * l + 1, l}; }

struct VSpaceElement {
  int g = 0;
  int l = 0;
  LieVector vector;
};

/// V_{l,g} and d1 under one sign convention. Holds the bracket memo, so
/// reuse one instance across calls.
class LieRow {
 public:
  explicit LieRow(D1Convention c = D1Convention::koszul) : convention_(c), algebra_(certificate_alphabet(c)) {}

  D1Convention convention() const { return convention_; }
  const GradedAlphabet& alphabet() const { return algebra_.alphabet(); }
  const FreeLieSuperalgebra& algebra() const { return algebra_; }

  std::vector<BasisKey> basis(int l, int g) const {
    check(l, g);
    return algebra_.basis(v_multidegree(l, g));
  }
  std::size_t dimension(int l, int g) const { return basis(l, g).size(); }

  /// B(ab^g).
  VSpaceElement omega(int g) const {
    if (g < 2) throw OutOfRange("omega needs g >= 2");
    Word w{kLetterA};
    w.insert(w.end(), static_cast<std::size_t>(g), kLetterB);
    return {g, g, LieVector::basis({w, false})};
  }

  VSpaceElement element(int l, int g, const BasisKey& k) const {
    check(l, g);
    if (algebra_.multidegree(k) != v_multidegree(l, g)) throw MixedMultidegree("basis key outside V_{l,g}");
    return {g, l, LieVector::basis(k)};
  }

  VSpaceElement d1(const VSpaceElement& x) const {
    check(x.l, x.g);
    if (x.l == 0) throw LevelZero("d1 is zero on V_{0,g}: there is no b to replace");
    const Multidegree d = v_multidegree(x.l, x.g);
    VSpaceElement out{x.g, x.l - 1, {}};
    for (const auto& [key, c] : x.vector.terms()) {
      if (algebra_.multidegree(key) != d) throw MixedMultidegree("term outside V_{l,g}");
      const BracketExpr e = basis_expression(key);
      const Word leaves = e.leaves();
      int left_parity = 0, occurrence = 0;
      for (std::size_t pos = 0; pos < leaves.size(); ++pos) {
        if (leaves[pos] == kLetterB) {
          int sign;
          if (convention_ == D1Convention::koszul) sign = left_parity ? 1 : -1;
          else sign = occurrence % 2 ? -1 : 1;
          ++occurrence;
          std::size_t cursor = 0;
          out.vector.add(algebra_.normalize(substitute(e, pos, cursor)), c * sign);
        }
        left_parity ^= alphabet().parity(leaves[pos]);
      }
    }
    return out;
  }

 private:
  void check(int l, int g) const {
    if (g < 1 || l < 0 || l > g) throw OutOfRange("V_{l,g} needs g >= 1 and 0 <= l <= g");
  }

  /// e with its leaf number `target` replaced by [a,a].
  static BracketExpr substitute(const BracketExpr& e, std::size_t target, std::size_t& cursor) {
    if (e.is_letter()) {
      if (cursor++ != target) return e;
      const BracketExpr a = BracketExpr::letter(kLetterA);
      return BracketExpr::bracket(a, a);
    }
    BracketExpr l = substitute(e.left(), target, cursor);
    BracketExpr r = substitute(e.right(), target, cursor);
    return BracketExpr::bracket(l, r);
  }

  D1Convention convention_;
  FreeLieSuperalgebra algebra_;
};

/// A shared instance per convention.
inline const LieRow& lie_row(D1Convention c = D1Convention::koszul) {
  static const LieRow koszul(D1Convention::koszul);
  static const LieRow word_position(D1Convention::word_position);
  return c == D1Convention::koszul ? koszul : word_position;
}

inline VSpaceElement omega(int g) { return lie_row().omega(g); }
inline VSpaceElement d1(const VSpaceElement& x, D1Convention c = D1Convention::koszul) { return lie_row(c).d1(x); }

// ---------------------------------------------------------------------------
// Leading terms of d1(omega_g)

struct LeadingTermReport {
  int g = 0;
  LieVector expansion;
  BasisKey first;   // a^3 b^{g-1}
  BasisKey second;  // a^2 b a b^{g-2}
  Rational first_coefficient, second_coefficient;
  Rational expected_first, expected_second;
  bool remainder_above = false;  // every other key is > second
  bool integral = false;
  bool ok() const {
    return first_coefficient == expected_first && second_coefficient == expected_second && remainder_above && integral;
  }
};

/// Even g: 2 B(a^3 b^{g-1}) + (g-2) B(a^2 b a b^{g-2}) + (keys above);
/// odd g: (g-1) B(a^2 b a b^{g-2}) + (keys above).
inline LeadingTermReport leading_terms(int g, const LieRow& row = lie_row()) {
  if (g < 2 || g > 10) throw OutOfRange("leading terms are checked for 2 <= g <= 10");
  LeadingTermReport r;
  r.g = g;
  r.expansion = row.d1(row.omega(g)).vector;
  Word w1{kLetterA, kLetterA, kLetterA};
  w1.insert(w1.end(), static_cast<std::size_t>(g - 1), kLetterB);
  Word w2{kLetterA, kLetterA, kLetterB, kLetterA};
  w2.insert(w2.end(), static_cast<std::size_t>(g - 2), kLetterB);
  r.first = {w1, false};
  r.second = {w2, false};
  r.first_coefficient = r.expansion.coefficient(r.first);
  r.second_coefficient = r.expansion.coefficient(r.second);
  r.expected_first = g % 2 == 0 ? 2 : 0;
  r.expected_second = g % 2 == 0 ? g - 2 : g - 1;
  r.remainder_above = true;
  r.integral = true;
  for (const auto& [k, c] : r.expansion.terms()) {
    r.integral = r.integral && is_integer(c);
    if (k == r.first || k == r.second) continue;
    if (!(r.second < k)) r.remainder_above = false;
  }
  return r;
}

inline bool verify_leading_terms(int g) { return leading_terms(g).ok(); }

// ---------------------------------------------------------------------------
// The certificate

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct Certificate {
  int g = 0;
  D1Convention convention = D1Convention::koszul;
  VSpaceElement omega;
  VSpaceElement d1_omega;
  VSpaceElement d1_d1_omega;
  LeadingTermReport leading;
  std::vector<CertificateCheck> checks;
  std::vector<std::string> log;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  const CertificateCheck& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw OutOfRange("no certificate check named " + name);
  }
};

inline constexpr int kMaxCertificateGenus = 10;

/// Runs every check and records witnesses; never throws on a failed check.
inline Certificate build_certificate(int g, const LieRow& row = lie_row()) {
  if (g < 2 || g > kMaxCertificateGenus) throw OutOfRange("certificate needs 2 <= g <= 10");
  const GradedAlphabet& alpha = row.alphabet();
  Certificate cert;
  cert.g = g;
  cert.convention = row.convention();
  const std::string G = std::to_string(g);

  cert.omega = row.omega(g);
  cert.log.push_back("omega_" + G + " = " + cert.omega.vector.str(alpha) + " spans V_{" + G + "," + G + "}");

  // (i)
  const auto basis = row.basis(g, g);
  {
    std::string w;
    for (const auto& k : basis) w += (w.empty() ? "" : " ") + key_string(alpha, k);
    cert.checks.push_back({"dim_V_gg_is_1", basis.size() == 1, "basis: " + w});
    cert.log.push_back("(i) dim V_{" + G + "," + G + "} = " + std::to_string(basis.size()));
  }

  // (ii), (iii)
  cert.d1_omega = row.d1(cert.omega);
  cert.d1_d1_omega = row.d1(cert.d1_omega);
  cert.checks.push_back({"d1_omega_nonzero", !cert.d1_omega.vector.is_zero(), cert.d1_omega.vector.str(alpha)});
  cert.log.push_back("(ii) d1(omega_" + G + ") = " + cert.d1_omega.vector.str(alpha));
  cert.checks.push_back({"d1_d1_omega_zero", cert.d1_d1_omega.vector.is_zero(), cert.d1_d1_omega.vector.str(alpha)});
  cert.log.push_back("(iii) d1(d1(omega_" + G + ")) = " + cert.d1_d1_omega.vector.str(alpha));

  cert.leading = leading_terms(g, row);
  cert.log.push_back("leading terms: " + key_string(alpha, cert.leading.first) + " -> " +
                     cert.leading.first_coefficient.str() + " (expected " + cert.leading.expected_first.str() + "), " +
                     key_string(alpha, cert.leading.second) + " -> " + cert.leading.second_coefficient.str() +
                     " (expected " + cert.leading.expected_second.str() + "), rest above: " +
                     (cert.leading.remainder_above ? "yes" : "no"));

  // (iv) The target V_{g-1,g} sits on the stratum of T_{g-1,g}.
  {
    const AnnotatedTree t = build_T_lg(g - 1, g);
    const int edges = static_cast<int>(t.tree.edge_count());
    const bool good = is_good(t);
    std::string rho;
    for (int r : t.rho) rho += (rho.empty() ? "" : ",") + std::to_string(r);
    cert.checks.push_back({"target_stratum_good", good && edges <= g - 1,
                           "T_{" + std::to_string(g - 1) + "," + G + "}: edges=" + std::to_string(edges) +
                               " rho=[" + rho + "] good=" + (good ? "true" : "false")});
    cert.log.push_back("(iv) T_{" + std::to_string(g - 1) + "," + G + "} is " + (good ? "good" : "not good") +
                       " with " + std::to_string(edges) + " edges");
  }

  // (v) F_1^{-g,2g-1} = 0: no good tree has g edges.
  {
    const int max_edges = max_good_tree_edges(2 * g + 2);
    bool empty = max_edges <= g - 1;
    std::string witness = "max good-tree edges for n=" + std::to_string(2 * g + 2) + ": " + std::to_string(max_edges);
    if (g <= 4) {
      const auto dim = f1_table(g).dimension(-g, 2 * g - 1);
      empty = empty && dim == 0;
      witness += "; F_1 table cell (" + std::to_string(-g) + "," + std::to_string(2 * g - 1) + ") = " + std::to_string(dim);
    }
    cert.checks.push_back({"F1_column_minus_g_empty", empty, witness});
    cert.log.push_back("(v) " + witness);
  }

  cert.log.push_back(cert.passed() ? "all checks pass: d1(omega_" + G + ") is a nonzero cocycle in V_{" +
                                         std::to_string(g - 1) + "," + G + "} inside F_1^{" + std::to_string(1 - g) +
                                         "," + std::to_string(2 * g - 1) + "} and F_1^{" + std::to_string(-g) + "," +
                                         std::to_string(2 * g - 1) + "} = 0, so F_2^{" + std::to_string(1 - g) + "," +
                                         std::to_string(2 * g - 1) + "} and H^" + G + "_c are nonzero"
                                   : "certificate FAILED");
  return cert;
}

/// build_certificate, throwing FailedCertificate (with the witness) when a
/// check fails.
inline Certificate certify_nonvanishing(int g, const LieRow& row = lie_row()) {
  Certificate cert = build_certificate(g, row);
  for (const auto& c : cert.checks)
    if (!c.passed) throw FailedCertificate("g=" + std::to_string(g) + " check " + c.name + ": " + c.witness);
  return cert;
}

}  // namespace hyperell

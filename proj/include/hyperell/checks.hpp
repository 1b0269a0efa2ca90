#pragma once

// The invariant suite behind `hyperell check`. Each entry recomputes one
// property from scratch; `quick` shrinks the ranges, `full` runs them as
// stated.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperell/certificate.hpp"
#include "hyperell/lie_oracle.hpp"
#include "hyperell/pushforward.hpp"
#include "hyperell/spectral.hpp"
#include "hyperell/trees.hpp"

namespace hyperell {

enum class CheckLevel { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace checks {

inline std::string base_differentials(CheckLevel) {
  const auto& row = lie_row();
  const auto& alpha = row.alphabet();
  for (int g : {2, 3}) {
    const auto c = build_certificate(g);
    const std::string want = g == 2 ? "2·aaab" : "2·aabab";
    if (c.d1_omega.vector.str(alpha) != want) return "d1(omega_" + std::to_string(g) + ") = " + c.d1_omega.vector.str(alpha);
    if (!c.d1_d1_omega.vector.is_zero()) return "d1 d1 omega_" + std::to_string(g) + " != 0";
  }
  return "";
}

inline std::string leading_term_law(CheckLevel level) {
  for (int g = 2; g <= (level == CheckLevel::full ? 10 : 6); ++g)
    if (!verify_leading_terms(g)) return "g=" + std::to_string(g) + ": " + leading_terms(g).expansion.str(lie_row().alphabet());
  return "";
}

inline std::string certificates(CheckLevel level) {
  for (int g = 2; g <= (level == CheckLevel::full ? 8 : 5); ++g) {
    const auto c = build_certificate(g);
    for (const auto& k : c.checks)
      if (!k.passed) return "g=" + std::to_string(g) + " " + k.name + ": " + k.witness;
  }
  return "";
}

inline std::string lyndon_vs_oracle(CheckLevel level) {
  const int max_total = level == CheckLevel::full ? 7 : 5;
  {
    const auto alpha = GradedAlphabet::parse("a:odd,b:even");
    FreeLieSuperalgebra L(alpha);
    LieOracle O(alpha);
    for (int i = 0; i <= max_total; ++i)
      for (int j = 0; i + j <= max_total; ++j) {
        if (i + j == 0) continue;
        if (L.dimension({i, j}) != O.rank({i, j}))
          return "multidegree (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  }
  {
    const auto alpha = GradedAlphabet::parse("a:odd,b:odd,c:odd");
    FreeLieSuperalgebra L(alpha);
    LieOracle O(alpha);
    if (L.dimension({1, 1, 1}) != O.rank({1, 1, 1})) return "three odd letters, multilinear";
  }
  std::size_t fact = 1;
  for (int n = 1; n <= 7; ++n) {
    if (n > 1) fact *= static_cast<std::size_t>(n - 1);
    std::string symbols;
    for (int k = 0; k < n; ++k) symbols.push_back(static_cast<char>('a' + k));
    const GradedAlphabet alpha(symbols, std::vector<int>(static_cast<std::size_t>(n), 1));
    if (FreeLieSuperalgebra(alpha).dimension(Multidegree(static_cast<std::size_t>(n), 1)) != fact)
      return "multilinear n=" + std::to_string(n);
  }
  return "";
}

inline std::string good_trees(CheckLevel level) {
  for (int g = 2; g <= (level == CheckLevel::full ? 4 : 3); ++g)
    for (const StratumClass& c : enumerate_orbits(2 * g + 2)) {
      const AnnotatedTree t = annotate(c.representative);
      if (in_filtration(t, 0) != is_good(t)) return "filtration vs good: " + c.canonical_key;
      if (is_good(t) && c.edge_count > g - 1) return "good tree with too many edges: " + c.canonical_key;
      if (rational_component_count(t) != genus_zero_vertex_count(pushforward(t)))
        return "rational components: " + c.canonical_key;
    }
  return "";
}

inline std::string genus_preserved(CheckLevel level) {
  for (int g = 2; g <= (level == CheckLevel::full ? 4 : 3); ++g)
    for (const StratumClass& c : enumerate_orbits(2 * g + 2))
      if (genus(pushforward(annotate(c.representative))) != g) return "g=" + std::to_string(g) + ": " + c.canonical_key;
  return "";
}

inline std::string injectivity(CheckLevel level) {
  for (int g = 2; g <= (level == CheckLevel::full ? 4 : 3); ++g) {
    const auto r = injectivity_report(g);
    if (!r.injective())
      return "g=" + std::to_string(g) + ": " + std::to_string(r.classes) + " classes, " +
             std::to_string(r.distinct_images) + " images";
  }
  return "";
}

inline std::string epoly(CheckLevel level) {
  if (stratification_epoly(4).polynomial != Poly{1, 1}) return "m=4";
  if (stratification_epoly(5).polynomial != Poly{1, 5, 1}) return "m=5";
  for (int m = 4; m <= (level == CheckLevel::full ? 8 : 6); ++m) {
    const auto r = stratification_epoly(m);
    if (!r.ok()) return "m=" + std::to_string(m) + ": " + poly_string(r.polynomial);
    // The E_1 rows carry the same numbers as alternating sums.
    for (const auto& [q, s] : row_alternating_sums(e1_table(m))) {
      const int i = q - (m - 3);
      const std::int64_t want = i >= 0 && i < static_cast<int>(r.polynomial.size()) ? r.polynomial[i] : 0;
      if (s != want) return "m=" + std::to_string(m) + " row q=" + std::to_string(q);
    }
  }
  return "";
}

inline std::string automorphisms(CheckLevel) {
  for (int g = 1; g <= 5; ++g)
    for (int l = 0; l <= g; ++l) {
      const std::uint64_t want = detail::factorial(2 * g - 2 * l + 1) * detail::factorial(l) * (std::uint64_t{1} << l);
      if (rooted_automorphisms_T_lg(l, g) != want) return "T_{" + std::to_string(l) + "," + std::to_string(g) + "}";
    }
  return "";
}

inline std::string enumeration(CheckLevel level) {
  if (enumerate_trees(4).size() != 4) return "|Gamma(0,4)|";
  if (enumerate_trees(5).size() != 26) return "|Gamma(0,5)|";
  for (int n = 4; n <= (level == CheckLevel::full ? 7 : 6); ++n) {
    const auto split = enumerate_trees(n);
    const auto levels = grow_trees(n, true, n - 3);
    std::vector<std::string> a, b;
    for (const Graph& t : split) a.push_back(canonical_form(t));
    for (const auto& lv : levels)
      for (const Graph& t : lv) b.push_back(canonical_form(t));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return "generators disagree at n=" + std::to_string(n);
  }
  return "";
}

}  // namespace checks

/// The ten acceptance properties, in order.
inline std::vector<std::pair<std::string, std::function<std::string(CheckLevel)>>> check_suite() {
  return {
      {"base-case differentials", checks::base_differentials},
      {"leading-term law", checks::leading_term_law},
      {"nonvanishing certificates", checks::certificates},
      {"Lyndon basis vs oracle", checks::lyndon_vs_oracle},
      {"good trees and filtration", checks::good_trees},
      {"genus preservation", checks::genus_preserved},
      {"pushforward injectivity", checks::injectivity},
      {"stratification E-polynomial", checks::epoly},
      {"automorphisms of T_{l,g}", checks::automorphisms},
      {"enumeration counts", checks::enumeration},
  };
}

/// Runs the suite; an exception counts as a failure with its message.
inline std::vector<CheckResult> run_checks(CheckLevel level) {
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : check_suite()) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{name, false, "", 0};
    try {
      r.detail = fn(level);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hyperell

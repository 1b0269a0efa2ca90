#pragma once

/* Dimensions of the first pages of the stratification spectral sequences.
 *
 *   E_1^{p,q} = sum over trees T with -p edges of H^{p+q}_c(M_T)
 *
 * for the moduli space of stable genus-0 curves with m marked points, and
 * F_1 the same sum over good trees only (m = 2g+2). Each open stratum is a
 * product of spaces M_{0,k}, one per vertex, with Poincare polynomial
 * prod_{j=2}^{k-2} (1 + jt); compactly supported degrees follow by duality,
 * dim H^j_c(M_{0,k}) = dim H^{2(k-3)-j}(M_{0,k}).
 *
 * Sums run over S_m-orbit classes weighted by orbit size, which is the same
 * as summing over numbered trees.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperell/annotate.hpp"
#include "hyperell/parallel.hpp"
#include "hyperell/trees.hpp"

namespace hyperell {

using Poly = std::vector<std::int64_t>;  // coefficient of t^i (or q^i) at i

namespace detail {

inline Poly poly_mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

inline void poly_add(Poly& x, const Poly& y, std::int64_t c = 1) {
  if (x.size() < y.size()) x.resize(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += c * y[i];
}

/// Betti numbers of M_{0,k} by the product formula, no range check.
inline Poly betti_product(int k) {
  Poly p{1};
  for (int j = 2; j <= k - 2; ++j) p = poly_mul(p, Poly{1, j});
  return p;
}

/// dim H^j_c(M_{0,k}) at index j.
inline Poly compact_betti(int k) {
  const Poly b = betti_product(k);
  const int d = k - 3;
  Poly c(2 * d + 1, 0);
  for (int j = d; j <= 2 * d; ++j) c[j] = b[2 * d - j];
  return c;
}

/// dim H^j_c(M_T) at index j (Kunneth over the vertices).
inline Poly stratum_compact_betti(const Graph& t) {
  Poly p{1};
  for (VertexId v = 0; v < static_cast<VertexId>(t.vertex_count()); ++v)
    p = poly_mul(p, compact_betti(static_cast<int>(t.flags_at(v).size())));
  return p;
}

/// E(M_{0,k})(q) = prod_{j=2}^{k-2} (q - j).
inline Poly epoly_m0k(int k) {
  Poly p{1};
  for (int j = 2; j <= k - 2; ++j) p = poly_mul(p, Poly{-j, 1});
  return p;
}

inline Poly stratum_epoly(const Graph& t) {
  Poly p{1};
  for (VertexId v = 0; v < static_cast<VertexId>(t.vertex_count()); ++v)
    p = poly_mul(p, epoly_m0k(static_cast<int>(t.flags_at(v).size())));
  return p;
}

}  // namespace detail

/// dim H^j(M_{0,n}) for j = 0..n-3.
inline Poly betti_m0n(int n) {
  if (n < 3 || n > 12) throw OutOfRange("betti_m0n needs 3 <= n <= 12");
  return detail::betti_product(n);
}

/// dim H^j_c(M_{0,n}) at index j (zero below n-3).
inline Poly compact_betti_m0n(int n) {
  if (n < 3 || n > 12) throw OutOfRange("compact_betti_m0n needs 3 <= n <= 12");
  return detail::compact_betti(n);
}

struct StratumContribution {
  std::size_t class_index = 0;  // position in enumerate_orbits(m)
  std::string canonical_key;
  std::uint64_t orbit_size = 0;
  std::uint64_t dimension = 0;  // dim H^{p+q}_c(M_T) for one tree of the class
};

struct SpectralCell {
  std::uint64_t dimension = 0;
  std::vector<StratumContribution> strata;
};

struct SpectralTable {
  char kind = 'E';  // 'E' or 'F'
  int leaves = 0;   // m
  int genus = 0;    // F tables only
  std::map<std::pair<int, int>, SpectralCell> cells;  // only nonzero cells

  std::uint64_t dimension(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? 0 : it->second.dimension;
  }
};

namespace detail {

inline SpectralTable build_table(char kind, int m, int genus, bool good_only, unsigned jobs) {
  const auto classes = enumerate_orbits(m);
  std::vector<std::size_t> index(classes.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  // Per class: whether it counts, and its compactly supported Betti numbers.
  const auto rows = parallel_map(
      index,
      [&](std::size_t i) -> std::pair<bool, Poly> {
        const Graph& t = classes[i].representative;
        if (good_only && !is_good(annotate(t))) return {false, {}};
        return {true, stratum_compact_betti(t)};
      },
      jobs);
  SpectralTable table;
  table.kind = kind;
  table.leaves = m;
  table.genus = genus;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!rows[i].first) continue;
    const int p = -classes[i].edge_count;
    const Poly& h = rows[i].second;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] == 0) continue;
      SpectralCell& cell = table.cells[{p, static_cast<int>(j) - p}];
      const auto dim = static_cast<std::uint64_t>(h[j]);
      cell.dimension += classes[i].orbit_size * dim;
      cell.strata.push_back({i, classes[i].canonical_key, classes[i].orbit_size, dim});
    }
  }
  return table;
}

}  // namespace detail

inline SpectralTable e1_table(int m, unsigned jobs = default_jobs()) {
  if (m < 4 || m > 10) throw OutOfRange("e1_table needs 4 <= m <= 10");
  return detail::build_table('E', m, 0, false, jobs);
}

struct BoundsReport {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // nonzero cells outside the box
};

/// F_1^{p,q} = 0 unless 1-g <= p <= 0 and 2g-1 <= q <= 4g-2, and whenever
/// p + q < g.
inline BoundsReport check_f1_bounds(const SpectralTable& t) {
  BoundsReport r;
  const int g = t.genus;
  for (const auto& [pq, cell] : t.cells) {
    const auto [p, q] = pq;
    const bool inside = 1 - g <= p && p <= 0 && 2 * g - 1 <= q && q <= 4 * g - 2 && p + q >= g;
    if (!inside && cell.dimension != 0) {
      r.ok = false;
      r.violations.push_back(pq);
    }
  }
  return r;
}

inline SpectralTable f1_table(int g, unsigned jobs = default_jobs()) {
  if (g < 2 || g > 4) throw OutOfRange("f1_table needs 2 <= g <= 4");
  SpectralTable t = detail::build_table('F', 2 * g + 2, g, true, jobs);
  const auto bounds = check_f1_bounds(t);
  if (!bounds.ok)
    throw Error("F_1 table for g = " + std::to_string(g) + " has a nonzero cell at (" +
                std::to_string(bounds.violations.front().first) + "," +
                std::to_string(bounds.violations.front().second) + ")");
  return t;
}

/// Row q: sum over p of (-1)^{p+q} dim E_1^{p,q}. For the E table this is the
/// coefficient of q^{q-(m-3)} in the stratification E-polynomial.
inline std::map<int, std::int64_t> row_alternating_sums(const SpectralTable& t) {
  std::map<int, std::int64_t> rows;
  for (const auto& [pq, cell] : t.cells) {
    const auto [p, q] = pq;
    const auto d = static_cast<std::int64_t>(cell.dimension);
    rows[q] += ((p + q) % 2 == 0) ? d : -d;
  }
  return rows;
}

struct EPolyReport {
  int m = 0;
  Poly polynomial;  // coefficient of q^i at i
  bool nonnegative = false;
  bool palindromic = false;
  bool constant_one = false;
  bool degree_ok = false;  // degree m-3
  bool ok() const { return nonnegative && palindromic && constant_one && degree_ok; }
};

/// Sum over numbered trees T of prod_v E(M_{0,|F(v)|})(q).
inline EPolyReport stratification_epoly(int m) {
  if (m < 4 || m > 8) throw OutOfRange("stratification_epoly needs 4 <= m <= 8");
  EPolyReport r;
  r.m = m;
  for (const StratumClass& c : enumerate_orbits(m))
    detail::poly_add(r.polynomial, detail::stratum_epoly(c.representative), static_cast<std::int64_t>(c.orbit_size));
  while (!r.polynomial.empty() && r.polynomial.back() == 0) r.polynomial.pop_back();
  const Poly& p = r.polynomial;
  r.nonnegative = std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x >= 0; });
  r.palindromic = std::equal(p.begin(), p.end(), p.rbegin());
  r.constant_one = !p.empty() && p[0] == 1;
  r.degree_ok = static_cast<int>(p.size()) == m - 2;
  return r;
}

inline bool stratification_epoly_check(int m) { return stratification_epoly(m).ok(); }

/// "1 + 5q + q^2".
inline std::string poly_string(const Poly& p, const std::string& var = "q") {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::int64_t c = p[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = c < 0 ? -c : c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hyperell

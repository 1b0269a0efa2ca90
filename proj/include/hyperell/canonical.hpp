#pragma once

/* Canonical labelling of graphs.
 *
 * Up to the (meaningless) identity of individual flags, a graph is fixed by
 * its vertex genera, the leaves at each vertex, and the matrix of edge
 * multiplicities between vertices (diagonal = loops). Canonical forms are
 * therefore computed on that vertex-level structure: colour refinement to an
 * equitable partition, then individualisation with backtracking over every
 * vertex of the first non-trivial cell. The lexicographically least encoding
 * over all leaves of the search tree is the canonical form; the number of
 * leaves attaining it is the order of the vertex-level automorphism group.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hyperell/graph.hpp"

namespace hyperell {

namespace detail {

struct VertexStructure {
  std::vector<int> genus;
  std::vector<std::vector<int>> leaf_colors;  // sorted per vertex
  std::vector<std::vector<int>> mult;         // symmetric; mult[v][v] = loops at v
};

inline VertexStructure vertex_structure(const Graph& g, const std::vector<int>& leaf_color) {
  const auto nv = g.vertex_count();
  VertexStructure s;
  s.genus = g.genus_labels();
  s.leaf_colors.resize(nv);
  s.mult.assign(nv, std::vector<int>(nv, 0));
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f) {
    const VertexId v = g.vertex_of(f);
    if (g.is_leaf(f)) {
      s.leaf_colors[v].push_back(leaf_color[f]);
    } else if (g.partner(f) > f) {
      const VertexId w = g.vertex_of(g.partner(f));
      ++s.mult[v][w];
      if (v != w) ++s.mult[w][v];
    }
  }
  for (auto& c : s.leaf_colors) std::sort(c.begin(), c.end());
  return s;
}

/// Dense ranks of `keys`, order-preserving.
template <class Key>
std::vector<int> rank_by(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}

inline int color_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

inline std::vector<int> refine(const VertexStructure& s, std::vector<int> colors) {
  const auto n = colors.size();
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::vector<std::pair<int, int>> nb;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && s.mult[v][w] > 0) nb.emplace_back(colors[w], s.mult[v][w]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
    auto next = rank_by(sig);
    if (color_count(next) == color_count(colors)) return next;
    colors = std::move(next);
  }
}

inline std::vector<int> encode(const VertexStructure& s, const std::vector<int>& order) {
  std::vector<int> code;
  code.push_back(static_cast<int>(order.size()));
  for (int v : order) {
    code.push_back(s.genus[v]);
    code.push_back(static_cast<int>(s.leaf_colors[v].size()));
    code.insert(code.end(), s.leaf_colors[v].begin(), s.leaf_colors[v].end());
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i; j < order.size(); ++j) code.push_back(s.mult[order[i]][order[j]]);
  return code;
}

struct SearchState {
  const VertexStructure* s;
  std::vector<int> best_code;
  std::vector<int> best_order;
  std::uint64_t matches = 0;
};

inline void search(SearchState& st, const std::vector<int>& colors) {
  const auto n = colors.size();
  const int k = color_count(colors);
  if (k == static_cast<int>(n)) {
    std::vector<int> order(n);
    for (std::size_t v = 0; v < n; ++v) order[colors[v]] = static_cast<int>(v);
    auto code = encode(*st.s, order);
    if (st.matches == 0 || code < st.best_code) {
      st.best_code = std::move(code);
      st.best_order = std::move(order);
      st.matches = 1;
    } else if (code == st.best_code) {
      ++st.matches;
    }
    return;
  }
  std::vector<int> size(k, 0);
  for (int c : colors) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> split(n);
    for (std::size_t u = 0; u < n; ++u) split[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
    search(st, refine(*st.s, rank_by(split)));
  }
}

inline std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail

struct CanonicalLabeling {
  std::string key;
  /// Vertices in canonical order.
  std::vector<VertexId> order;
  /// Order of the automorphism group acting on vertices.
  std::uint64_t vertex_automorphisms = 0;
};

/// Canonical labelling with an explicit leaf colouring (indexed by flag,
/// ignored off leaves). Leaves of equal colour are interchangeable.
inline CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& leaf_color) {
  const auto s = detail::vertex_structure(g, leaf_color);
  const auto n = g.vertex_count();
  std::vector<std::vector<int>> initial(n);
  for (std::size_t v = 0; v < n; ++v) {
    initial[v] = {s.genus[v], s.mult[v][v], static_cast<int>(s.leaf_colors[v].size())};
    initial[v].insert(initial[v].end(), s.leaf_colors[v].begin(), s.leaf_colors[v].end());
  }
  detail::SearchState st{&s, {}, {}, 0};
  if (n == 0) {
    st.best_code = {0};
    st.matches = 1;
  } else {
    detail::search(st, detail::refine(s, detail::rank_by(initial)));
  }
  std::string key;
  for (int x : st.best_code) {
    key += std::to_string(x);
    key += ',';
  }
  return {std::move(key), std::move(st.best_order), st.matches};
}

/// Leaf colours from the graph's own numbering (all 0 when unnumbered).
inline std::vector<int> numbering_colors(const Graph& g) {
  std::vector<int> colors(g.flag_count(), 0);
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f) colors[f] = g.leaf_number(f);
  return colors;
}

/// Equal strings iff the graphs are isomorphic, preserving genus labels and,
/// for numbered graphs, the leaf numbering.
inline std::string canonical_form(const Graph& g) {
  return (g.numbered() ? "N:" : "U:") + canonical_labeling(g, numbering_colors(g)).key;
}

/// Order of the automorphism group acting on flags. Leaves are
/// distinguishable through the numbering when present, otherwise only the
/// `rooted` leaves are, each individually.
inline std::uint64_t automorphism_count(const Graph& g, const std::vector<FlagId>& rooted = {}) {
  auto colors = numbering_colors(g);
  if (!g.numbered()) {
    int next = 1;
    for (FlagId f : rooted) {
      if (f < 0 || f >= static_cast<FlagId>(g.flag_count()) || !g.is_leaf(f))
        throw InvalidGraph("rooted flag " + std::to_string(f) + " is not a leaf");
      colors[f] = next++;
    }
  }
  const auto labeling = canonical_labeling(g, colors);
  const auto s = detail::vertex_structure(g, colors);
  std::uint64_t order = labeling.vertex_automorphisms;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& lc = s.leaf_colors[v];
    for (std::size_t i = 0; i < lc.size();) {
      std::size_t j = i;
      while (j < lc.size() && lc[j] == lc[i]) ++j;
      order *= detail::factorial(static_cast<int>(j - i));
      i = j;
    }
    for (std::size_t w = v; w < g.vertex_count(); ++w) {
      const int m = s.mult[v][w];
      order *= detail::factorial(m);
      if (w == v) order <<= m;
    }
  }
  return order;
}

/// The graph relabelled into canonical vertex order with flags renumbered
/// vertex by vertex; isomorphic inputs give identical outputs.
inline Graph canonical_representative(const Graph& g) {
  const auto labeling = canonical_labeling(g, numbering_colors(g));
  std::vector<int> position(g.vertex_count());
  for (std::size_t i = 0; i < labeling.order.size(); ++i) position[labeling.order[i]] = static_cast<int>(i);
  // Flags sorted by (vertex position, leaf?, leaf number, far vertex position).
  std::vector<FlagId> flags(g.flag_count());
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f) flags[f] = f;
  auto rank = [&](FlagId f) {
    const int far = g.is_leaf(f) ? -1 : position[g.vertex_of(g.partner(f))];
    return std::tuple(position[g.vertex_of(f)], g.is_leaf(f) ? 0 : 1, g.leaf_number(f), far);
  };
  std::stable_sort(flags.begin(), flags.end(), [&](FlagId a, FlagId b) { return rank(a) < rank(b); });
  // Pair up parallel edges in a fixed way: the k-th flag from v to w with the
  // k-th flag from w to v.
  GraphBuilder b;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) b.add_vertex(g.genus_label(labeling.order[i]));
  std::map<std::pair<int, int>, int> done;
  for (FlagId f : flags) {
    const int v = position[g.vertex_of(f)];
    if (g.is_leaf(f)) {
      b.add_leaf(v, g.leaf_number(f));
      continue;
    }
    const int w = position[g.vertex_of(g.partner(f))];
    if (v > w) continue;
    if (v == w && done[{v, w}]++ % 2 == 1) continue;  // each loop contributes two flags at v
    b.add_edge(v, w);
  }
  return b.build();
}

/// All canonical forms reachable from g by contracting exactly `k` edges.
inline std::set<std::string> contraction_forms(const Graph& g, std::size_t k) {
  std::set<std::string> out;
  const auto edges = g.edges();
  if (k > edges.size()) return out;
  std::vector<bool> pick(edges.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<FlagId> chosen;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (pick[i]) chosen.push_back(edges[i].first);
    out.insert(canonical_form(contract_edges(g, chosen)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// [g1] <= [g2] in the contraction order: g2 is obtained from a graph
/// isomorphic to g1 by contracting a subset of its edges.
inline bool leq(const Graph& g1, const Graph& g2) {
  if (graph_type(g1) != graph_type(g2) || g1.numbered() != g2.numbered())
    throw TypeMismatch("leq needs graphs of the same type");
  if (g2.edge_count() > g1.edge_count()) return false;
  return contraction_forms(g1, g1.edge_count() - g2.edge_count()).count(canonical_form(g2)) > 0;
}

}  // namespace hyperell

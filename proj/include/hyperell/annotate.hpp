#pragma once

/* Parity, ramification and edge-valence data on trees of type (0,2k).
 *
 * Leaves are odd. An edge is odd exactly when each side of it carries an odd
 * number of leaves. rho(v) counts the odd flags at v, nu(v) the non-leaf
 * flags; v is internal when nu(v) > 1.
 */

#include <string>
#include <vector>

#include "hyperell/canonical.hpp"
#include "hyperell/graph.hpp"
#include "hyperell/trees.hpp"

namespace hyperell {

struct AnnotatedTree {
  Graph tree;
  std::vector<int> parity;  // per flag, 0 or 1
  std::vector<int> rho;     // per vertex
  std::vector<int> nu;      // per vertex
  std::vector<bool> internal;

  int leaf_count() const { return static_cast<int>(tree.leaf_count()); }
  /// g with 2g + 2 = number of leaves.
  int cover_genus() const { return (leaf_count() - 2) / 2; }
  int odd_edge_count() const {
    int k = 0;
    for (auto [f, h] : tree.edges()) k += parity[f];
    return k;
  }
  int even_edge_count() const { return static_cast<int>(tree.edge_count()) - odd_edge_count(); }
};

inline void require_tree(const Graph& t) {
  if (!is_connected(t)) throw NotATree("graph is disconnected");
  if (betti1(t) != 0) throw NotATree("graph has a cycle");
  for (VertexId v = 0; v < static_cast<VertexId>(t.vertex_count()); ++v)
    if (t.genus_label(v) != 0) throw NotATree("vertex " + std::to_string(v) + " has positive genus");
}

inline AnnotatedTree annotate(const Graph& t) {
  require_tree(t);
  const int n = static_cast<int>(t.leaf_count());
  if (n % 2 != 0) throw OddLeafTotal("parity is defined only for an even number of leaves, got " + std::to_string(n));
  const auto nv = t.vertex_count();

  // Leaves below each vertex, rooting the tree at vertex 0.
  std::vector<int> parent_flag(nv, -1), order;
  std::vector<bool> seen(nv, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (FlagId f : t.flags_at(v)) {
      if (t.is_leaf(f)) continue;
      const VertexId w = t.vertex_of(t.partner(f));
      if (seen[w]) continue;
      seen[w] = true;
      parent_flag[w] = t.partner(f);
      stack.push_back(w);
    }
  }
  std::vector<int> leaves_below(nv, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    for (FlagId f : t.flags_at(v)) leaves_below[v] += t.is_leaf(f);
    for (FlagId f : t.flags_at(v)) {
      if (t.is_leaf(f) || f == parent_flag[v]) continue;
      leaves_below[v] += leaves_below[t.vertex_of(t.partner(f))];
    }
  }

  AnnotatedTree a;
  a.tree = t;
  a.parity.assign(t.flag_count(), 1);
  for (VertexId v = 1; v < static_cast<VertexId>(nv); ++v) {
    const FlagId f = parent_flag[v];
    a.parity[f] = a.parity[t.partner(f)] = leaves_below[v] % 2;
  }
  a.rho.assign(nv, 0);
  a.nu.assign(nv, 0);
  a.internal.assign(nv, false);
  for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
    for (FlagId f : t.flags_at(v)) {
      a.rho[v] += a.parity[f];
      a.nu[v] += !t.is_leaf(f);
    }
    a.internal[v] = a.nu[v] > 1;
  }
  return a;
}

/// Every internal vertex has rho >= 4.
inline bool is_good(const AnnotatedTree& t) {
  for (std::size_t v = 0; v < t.rho.size(); ++v)
    if (t.internal[v] && t.rho[v] < 4) return false;
  return true;
}

/// The star tree T_{l,g}: centre v0 carrying leaves 2l+1..2g+2, joined to
/// v1..vl where v_i carries leaves 2i-1, 2i.
inline Graph build_T_lg_graph(int l, int g) {
  if (g < 1 || l < 0 || l > g) throw OutOfRange("T_{l,g} needs g >= 1 and 0 <= l <= g");
  GraphBuilder b;
  const VertexId v0 = b.add_vertex(0);
  for (int k = 2 * l + 1; k <= 2 * g + 2; ++k) b.add_leaf(v0, k);
  for (int i = 1; i <= l; ++i) {
    const VertexId vi = b.add_vertex(0);
    b.add_edge(v0, vi);
    b.add_leaf(vi, 2 * i - 1);
    b.add_leaf(vi, 2 * i);
  }
  return b.build();
}

inline AnnotatedTree build_T_lg(int l, int g) { return annotate(build_T_lg_graph(l, g)); }

/// The flag of the leaf numbered k.
inline FlagId leaf_flag(const Graph& t, int k) {
  for (FlagId f : t.leaves())
    if (t.leaf_number(f) == k) return f;
  throw InvalidGraph("no leaf numbered " + std::to_string(k));
}

/// |Aut| of T_{l,g} as a rooted tree: leaf 2g+2 fixed, other leaves unlabeled.
inline std::uint64_t rooted_automorphisms_T_lg(int l, int g) {
  const Graph t = build_T_lg_graph(l, g);
  return automorphism_count(t.unnumbered(), {leaf_flag(t, 2 * g + 2)});
}

}  // namespace hyperell

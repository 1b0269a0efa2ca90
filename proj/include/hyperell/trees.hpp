#pragma once

/* Stable genus-0 trees of type (0,n): enumeration of numbered trees, of
 * their S_n-orbits, and an exact count of the largest edge count a good
 * tree can have.
 *
 * Numbered trees are enumerated as systems of pairwise compatible splits
 * (one tree per system, no deduplication). Unnumbered trees are grown by
 * vertex splitting with canonical-form deduplication; the same grower also
 * runs on numbered leaves and serves as the independent cross-check.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperell/canonical.hpp"
#include "hyperell/graph.hpp"

namespace hyperell {

/// Largest n accepted by the numbered enumeration. |Gamma(0,10)| is already
/// 12818912.
inline constexpr int kMaxNumberedLeaves = 9;
/// Largest n accepted by the orbit enumeration.
inline constexpr int kMaxOrbitLeaves = 12;

/// One S_n-orbit of numbered trees.
struct StratumClass {
  Graph representative;  // numbered
  int edge_count = 0;
  std::uint64_t orbit_size = 0;
  std::string canonical_key;  // canonical_form with the numbering forgotten
};

inline int tree_leaf_count(const Graph& t) { return static_cast<int>(t.leaf_count()); }

/// n - 3 - (number of edges): the dimension of the open stratum M_T.
inline int stratum_dimension(const Graph& t) {
  return static_cast<int>(t.leaf_count()) - 3 - static_cast<int>(t.edge_count());
}

namespace detail {

inline void check_range(int n, std::optional<int> edge_count, int max_n) {
  if (n < 3 || n > max_n)
    throw OutOfRange("tree enumeration needs 3 <= n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  if (edge_count && (*edge_count < 0 || *edge_count > n - 3))
    throw OutOfRange("edge count must lie in [0, n-3]");
}

/// Tree of the split system rooted at leaf n: one vertex per cluster plus a
/// root cluster {1..n-1}; bit i of a cluster stands for leaf i+1.
inline Graph tree_from_splits(int n, const std::vector<std::uint32_t>& splits) {
  const std::uint32_t root = (std::uint32_t{1} << (n - 1)) - 1;
  std::vector<std::uint32_t> clusters = splits;
  clusters.push_back(root);
  std::sort(clusters.begin(), clusters.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  // clusters[0] is the root; parents precede children.
  GraphBuilder b;
  for (std::size_t i = 0; i < clusters.size(); ++i) b.add_vertex(0);
  auto smallest_containing = [&](std::uint32_t set, std::size_t skip) {
    std::size_t best = 0;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
      if (j == skip || (clusters[j] & set) != set) continue;
      if (__builtin_popcount(clusters[j]) <= __builtin_popcount(clusters[best])) best = j;
    }
    return best;
  };
  for (std::size_t i = 1; i < clusters.size(); ++i)
    b.add_edge(static_cast<VertexId>(smallest_containing(clusters[i], i)), static_cast<VertexId>(i));
  for (int leaf = 1; leaf < n; ++leaf)
    b.add_leaf(static_cast<VertexId>(smallest_containing(std::uint32_t{1} << (leaf - 1), clusters.size())), leaf);
  b.add_leaf(0, n);
  return b.build();
}

inline bool compatible(std::uint32_t a, std::uint32_t b) {
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

template <class Visit>
void visit_split_systems(const std::vector<std::uint32_t>& splits, std::size_t start,
                         std::vector<std::uint32_t>& chosen, int max_size, Visit&& visit) {
  visit(chosen);
  if (static_cast<int>(chosen.size()) == max_size) return;
  for (std::size_t i = start; i < splits.size(); ++i) {
    const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                [&](std::uint32_t c) { return compatible(c, splits[i]); });
    if (!ok) continue;
    chosen.push_back(splits[i]);
    visit_split_systems(splits, i + 1, chosen, max_size, visit);
    chosen.pop_back();
  }
}

inline std::vector<Graph> sorted_by_key(std::map<std::string, Graph> by_key) {
  std::vector<Graph> out;
  out.reserve(by_key.size());
  for (auto& [key, g] : by_key) out.push_back(std::move(g));
  return out;
}

}  // namespace detail

/// One representative per isomorphism class of stable numbered trees of type
/// (0,n), optionally restricted to a given edge count, in canonical-form order.
inline std::vector<Graph> enumerate_trees(int n, std::optional<int> edge_count = std::nullopt) {
  detail::check_range(n, edge_count, kMaxNumberedLeaves);
  // Splits are stored by their side not containing leaf n.
  std::vector<std::uint32_t> splits;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << (n - 1)); ++s) {
    const int k = __builtin_popcount(s);
    if (k >= 2 && k <= n - 2) splits.push_back(s);
  }
  std::vector<std::pair<std::string, Graph>> found;
  std::vector<std::uint32_t> chosen;
  detail::visit_split_systems(splits, 0, chosen, n - 3, [&](const std::vector<std::uint32_t>& system) {
    if (edge_count && static_cast<int>(system.size()) != *edge_count) return;
    Graph t = detail::tree_from_splits(n, system);
    found.emplace_back(canonical_form(t), std::move(t));
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

/// All trees obtained from `t` by splitting one vertex into two joined by a
/// new edge, each side keeping at least two of the old flags.
inline std::vector<Graph> vertex_splittings(const Graph& t) {
  std::vector<Graph> out;
  for (VertexId v = 0; v < static_cast<VertexId>(t.vertex_count()); ++v) {
    const auto& fs = t.flags_at(v);
    const auto deg = fs.size();
    if (deg < 4) continue;
    // Unnumbered leaves at v are interchangeable: only how many move matters.
    std::vector<FlagId> distinct, plain_leaves;
    for (FlagId f : fs) (t.is_leaf(f) && !t.numbered() ? plain_leaves : distinct).push_back(f);
    const auto nd = distinct.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nd); ++mask) {
      for (std::size_t moved_leaves = 0; moved_leaves <= plain_leaves.size(); ++moved_leaves) {
        const auto moved = static_cast<std::size_t>(__builtin_popcount(mask)) + moved_leaves;
        if (moved < 2 || deg - moved < 2) continue;
        std::vector<bool> move(t.flag_count(), false);
        for (std::size_t i = 0; i < nd; ++i)
          if (mask >> i & 1U) move[distinct[i]] = true;
        for (std::size_t i = 0; i < moved_leaves; ++i) move[plain_leaves[i]] = true;

        std::vector<FlagId> inv = t.involution();
        std::vector<std::vector<FlagId>> verts = t.vertices();
        std::vector<int> gen = t.genus_labels();
        std::vector<int> nums = t.leaf_numbers();
        const auto a = static_cast<FlagId>(inv.size()), c = a + 1;
        inv.push_back(c);
        inv.push_back(a);
        if (!nums.empty()) {
          nums.push_back(0);
          nums.push_back(0);
        }
        std::vector<FlagId> stay{a}, go{c};
        for (FlagId f : fs) (move[f] ? go : stay).push_back(f);
        verts[v] = stay;
        verts.push_back(go);
        gen.push_back(0);
        out.emplace_back(std::move(inv), std::move(verts), std::move(gen), std::move(nums));
      }
    }
  }
  return out;
}

/// Grows all stable trees of type (0,n) level by level from the one-vertex
/// tree, deduplicating by canonical form. Returns levels[k] = the trees with
/// k edges, each level in canonical-form order.
inline std::vector<std::vector<Graph>> grow_trees(int n, bool numbered, int max_edges) {
  GraphBuilder b;
  b.add_vertex(0);
  for (int i = 1; i <= n; ++i) b.add_leaf(0, numbered ? i : 0);
  std::vector<std::vector<Graph>> levels{{b.build()}};
  for (int k = 1; k <= max_edges; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& t : levels.back())
      for (Graph& s : vertex_splittings(t)) {
        auto key = canonical_form(s);
        if (!next.count(key)) next.emplace(std::move(key), std::move(s));
      }
    if (next.empty()) break;
    levels.push_back(detail::sorted_by_key(std::move(next)));
  }
  return levels;
}

/// Orbit size n!/|Aut| of the unnumbered tree underlying `t`; Aut acts
/// faithfully on the leaves of a stable tree.
inline std::uint64_t orbit_size(const Graph& t) {
  return detail::factorial(static_cast<int>(t.leaf_count())) / automorphism_count(t.unnumbered());
}

inline StratumClass make_stratum_class(const Graph& t) {
  const Graph plain = t.unnumbered();
  StratumClass c;
  c.canonical_key = canonical_form(plain);
  c.representative = t.numbered() ? t : canonical_representative(plain).with_default_numbering();
  c.edge_count = static_cast<int>(t.edge_count());
  c.orbit_size = orbit_size(plain);
  return c;
}

/// Groups numbered trees of one type into S_n-orbits. Classes come out in
/// canonical-key order; the representative is the first tree met.
inline std::vector<StratumClass> orbit_representatives(const std::vector<Graph>& trees) {
  std::map<std::string, StratumClass> classes;
  std::optional<GraphType> type;
  for (const Graph& t : trees) {
    const GraphType tt{0, static_cast<int>(t.leaf_count())};
    if (type && *type != tt) throw TypeMismatch("orbit_representatives needs trees of one type");
    type = tt;
    auto key = canonical_form(t.unnumbered());
    if (!classes.count(key)) classes.emplace(key, make_stratum_class(t));
  }
  std::vector<StratumClass> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  return out;
}

/// The S_n-orbits of stable trees of type (0,n), enumerated directly on
/// unnumbered trees, ordered by (edge count, canonical key).
inline std::vector<StratumClass> enumerate_orbits(int n, std::optional<int> edge_count = std::nullopt) {
  detail::check_range(n, edge_count, kMaxOrbitLeaves);
  const auto levels = grow_trees(n, false, edge_count ? *edge_count : n - 3);
  std::vector<StratumClass> out;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (edge_count && static_cast<int>(k) != *edge_count) continue;
    for (const Graph& t : levels[k]) out.push_back(make_stratum_class(t));
  }
  return out;
}

/// Largest number of edges of a good tree of type (0,n), n even: a tree whose
/// internal vertices (two or more edges) all carry at least four odd flags.
/// Exact dynamic programme over subtrees hanging below an edge, keyed by
/// their leaf count (which fixes the parity of that edge). Returns -1 when no
/// good tree exists.
inline int max_good_tree_edges(int n) {
  if (n < 4 || n % 2 != 0) throw OddLeafTotal("good trees need an even leaf count >= 4");
  constexpr int kNone = -1000000;
  // best[s][c][o]: most edges in a multiset of child subtrees with s leaves in
  // total, c children (capped at 2) and o odd children (capped at 4),
  // counting each child's edge.
  std::vector<std::array<std::array<int, 5>, 3>> best(n + 1);
  for (auto& a : best)
    for (auto& b : a) b.fill(kNone);
  best[0][0][0] = 0;
  std::vector<int> below(n + 1, kNone);  // below[k]: edges under a vertex whose parent edge carries k leaves

  auto add_child_size = [&](int k) {
    if (below[k] == kNone) return;
    const int odd = k % 2;
    for (int s = k; s <= n; ++s)
      for (int c = 0; c < 3; ++c)
        for (int o = 0; o < 5; ++o) {
          const int prev = best[s - k][c][o];
          if (prev == kNone) continue;
          const int c2 = std::min(c + 1, 2), o2 = std::min(o + odd, 4);
          best[s][c2][o2] = std::max(best[s][c2][o2], prev + below[k] + 1);
        }
  };

  for (int k = 2; k < n; ++k) {
    for (int leaves = 0; leaves <= k; ++leaves)
      for (int c = 0; c < 3; ++c)
        for (int o = 0; o < 5; ++o) {
          const int edges = best[k - leaves][c][o];
          if (edges == kNone || leaves + c + 1 < 3) continue;
          const int rho = leaves + o + k % 2;
          if (c >= 1 && rho < 4) continue;  // internal: parent edge plus a child edge
          below[k] = std::max(below[k], edges);
        }
    add_child_size(k);
  }
  // Root at leaf n: the root vertex holds that leaf.
  int answer = -1;
  for (int leaves = 0; leaves <= n - 1; ++leaves)
    for (int c = 0; c < 3; ++c)
      for (int o = 0; o < 5; ++o) {
        const int edges = best[n - 1 - leaves][c][o];
        if (edges == kNone || 1 + leaves + c < 3) continue;
        if (c >= 2 && 1 + leaves + o < 4) continue;
        answer = std::max(answer, edges);
      }
  return answer;
}

}  // namespace hyperell

#pragma once

/* Labelled graphs in the flag formalism: a set of flags, a partition of the
 * flags into vertices, and an involution on the flags. Fixed points of the
 * involution are leaves, 2-cycles are edges. Every vertex carries a genus
 * label, and leaves may carry a numbering 1..n.
 *
 * A vertex may carry no flags at all (the one-vertex graph of type (g,0)).
 *
 * Flags are dense indices 0..F-1 and vertices dense indices 0..V-1. Neither
 * order carries meaning; identity of graphs is decided by canonical_form
 * (canonical.hpp).
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperell/error.hpp"

namespace hyperell {

using FlagId = int;
using VertexId = int;

/// The pair (genus, number of leaves).
struct GraphType {
  int genus = 0;
  int leaf_count = 0;

  friend bool operator==(const GraphType&, const GraphType&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// `involution[f] == f` marks a leaf. `leaf_numbers`, when non-empty, is
  /// indexed by flag and holds 0 on non-leaf flags and a bijection of the
  /// leaves onto 1..n otherwise.
  Graph(std::vector<FlagId> involution, std::vector<std::vector<FlagId>> vertices,
        std::vector<int> genus, std::vector<int> leaf_numbers = {})
      : involution_(std::move(involution)),
        vertices_(std::move(vertices)),
        genus_(std::move(genus)),
        leaf_numbers_(std::move(leaf_numbers)) {
    validate();
  }

  std::size_t flag_count() const { return involution_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }

  FlagId partner(FlagId f) const { return involution_.at(f); }
  VertexId vertex_of(FlagId f) const { return vertex_of_.at(f); }
  const std::vector<FlagId>& flags_at(VertexId v) const { return vertices_.at(v); }
  int genus_label(VertexId v) const { return genus_.at(v); }
  bool is_leaf(FlagId f) const { return involution_.at(f) == f; }

  const std::vector<FlagId>& involution() const { return involution_; }
  const std::vector<std::vector<FlagId>>& vertices() const { return vertices_; }
  const std::vector<int>& genus_labels() const { return genus_; }

  bool numbered() const { return !leaf_numbers_.empty(); }
  /// 0 when the graph is unnumbered or f is not a leaf.
  int leaf_number(FlagId f) const { return numbered() ? leaf_numbers_.at(f) : 0; }
  const std::vector<int>& leaf_numbers() const { return leaf_numbers_; }

  std::vector<FlagId> leaves() const {
    std::vector<FlagId> out;
    for (FlagId f = 0; f < static_cast<FlagId>(flag_count()); ++f)
      if (is_leaf(f)) out.push_back(f);
    return out;
  }

  /// Each edge once, as (f, partner(f)) with f < partner(f).
  std::vector<std::pair<FlagId, FlagId>> edges() const {
    std::vector<std::pair<FlagId, FlagId>> out;
    for (FlagId f = 0; f < static_cast<FlagId>(flag_count()); ++f)
      if (involution_[f] > f) out.emplace_back(f, involution_[f]);
    return out;
  }

  std::size_t leaf_count() const {
    std::size_t n = 0;
    for (FlagId f = 0; f < static_cast<FlagId>(flag_count()); ++f) n += is_leaf(f);
    return n;
  }
  std::size_t edge_count() const { return (flag_count() - leaf_count()) / 2; }

  /// Same graph with the numbering dropped.
  Graph unnumbered() const { return Graph(involution_, vertices_, genus_); }

  /// Same graph with a new leaf numbering (indexed by flag, 0 off leaves).
  Graph with_numbering(std::vector<int> numbers) const {
    return Graph(involution_, vertices_, genus_, std::move(numbers));
  }

  /// Numbers the leaves 1..n in increasing flag order.
  Graph with_default_numbering() const {
    std::vector<int> numbers(flag_count(), 0);
    int next = 1;
    for (FlagId f = 0; f < static_cast<FlagId>(flag_count()); ++f)
      if (is_leaf(f)) numbers[f] = next++;
    return with_numbering(std::move(numbers));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.involution_ == b.involution_ && a.vertices_ == b.vertices_ &&
           a.genus_ == b.genus_ && a.leaf_numbers_ == b.leaf_numbers_;
  }

 private:
  void validate() {
    const auto n = static_cast<FlagId>(involution_.size());
    for (FlagId f = 0; f < n; ++f) {
      const FlagId s = involution_[f];
      if (s < 0 || s >= n) throw InvalidGraph("involution maps flag " + std::to_string(f) + " out of range");
      if (involution_[s] != f) throw InvalidGraph("involution is not self-inverse at flag " + std::to_string(f));
    }
    if (genus_.size() != vertices_.size()) throw InvalidGraph("genus labels do not match vertex count");
    vertex_of_.assign(n, -1);
    for (VertexId v = 0; v < static_cast<VertexId>(vertices_.size()); ++v) {
      if (genus_[v] < 0) throw InvalidGraph("negative genus label");
      for (FlagId f : vertices_[v]) {
        if (f < 0 || f >= n) throw InvalidGraph("vertex refers to unknown flag " + std::to_string(f));
        if (vertex_of_[f] != -1) throw InvalidGraph("flag " + std::to_string(f) + " lies in two vertices");
        vertex_of_[f] = v;
      }
    }
    for (FlagId f = 0; f < n; ++f)
      if (vertex_of_[f] == -1) throw InvalidGraph("flag " + std::to_string(f) + " lies in no vertex");
    if (!leaf_numbers_.empty()) {
      if (leaf_numbers_.size() != involution_.size()) throw InvalidGraph("numbering size mismatch");
      const auto leaves_n = static_cast<int>(leaf_count());
      std::vector<bool> seen(leaves_n + 1, false);
      for (FlagId f = 0; f < n; ++f) {
        const int k = leaf_numbers_[f];
        if (!is_leaf(f)) {
          if (k != 0) throw InvalidGraph("numbering assigned to a non-leaf flag");
          continue;
        }
        if (k < 1 || k > leaves_n || seen[k]) throw InvalidGraph("numbering is not a bijection onto 1..n");
        seen[k] = true;
      }
    }
  }

  std::vector<FlagId> involution_;
  std::vector<std::vector<FlagId>> vertices_;
  std::vector<int> genus_;
  std::vector<int> leaf_numbers_;
  std::vector<VertexId> vertex_of_;
};

/// Incremental construction of graphs by vertices, edges and leaves.
class GraphBuilder {
 public:
  VertexId add_vertex(int genus = 0) {
    vertices_.emplace_back();
    genus_.push_back(genus);
    return static_cast<VertexId>(vertices_.size() - 1);
  }

  /// Returns the two new flags (at v, at w). v == w gives a loop.
  std::pair<FlagId, FlagId> add_edge(VertexId v, VertexId w) {
    const FlagId f = new_flag(v);
    const FlagId h = new_flag(w);
    involution_[f] = h;
    involution_[h] = f;
    return {f, h};
  }

  /// A leaf at v; number 0 means unnumbered.
  FlagId add_leaf(VertexId v, int number = 0) {
    const FlagId f = new_flag(v);
    numbers_[f] = number;
    return f;
  }

  Graph build() const {
    const bool numbered = std::any_of(numbers_.begin(), numbers_.end(), [](int k) { return k != 0; });
    return Graph(involution_, vertices_, genus_, numbered ? numbers_ : std::vector<int>{});
  }

 private:
  FlagId new_flag(VertexId v) {
    const auto f = static_cast<FlagId>(involution_.size());
    involution_.push_back(f);
    numbers_.push_back(0);
    vertices_.at(v).push_back(f);
    return f;
  }

  std::vector<FlagId> involution_;
  std::vector<std::vector<FlagId>> vertices_;
  std::vector<int> genus_;
  std::vector<int> numbers_;
};

inline bool is_connected(const Graph& g) {
  const auto nv = g.vertex_count();
  if (nv == 0) return false;
  std::vector<bool> seen(nv, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (FlagId f : g.flags_at(v)) {
      const VertexId w = g.vertex_of(g.partner(f));
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nv;
}

/// b1 = |E| - |V| + 1 of a connected graph.
inline int betti1(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("b0 != 1");
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

inline int genus(const Graph& g) {
  const int b1 = betti1(g);
  const auto& labels = g.genus_labels();
  return std::accumulate(labels.begin(), labels.end(), 0) + b1;
}

inline GraphType graph_type(const Graph& g) {
  return {genus(g), static_cast<int>(g.leaf_count())};
}

/// 2 g(v) - 2 + |F(v)| > 0 at every vertex.
inline bool is_stable(const Graph& g) {
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (2 * g.genus_label(v) - 2 + static_cast<int>(g.flags_at(v).size()) <= 0) return false;
  return true;
}

namespace detail {

/// Mutable flag soup used by the graph surgeries; dead flags and vertices are
/// dropped by `compact`.
struct FlagSoup {
  std::vector<FlagId> partner;
  std::vector<VertexId> owner;
  std::vector<int> number;
  std::vector<bool> flag_alive;
  std::vector<std::vector<FlagId>> flags;
  std::vector<int> genus;
  std::vector<bool> vertex_alive;

  explicit FlagSoup(const Graph& g)
      : partner(g.involution()),
        number(g.flag_count(), 0),
        flag_alive(g.flag_count(), true),
        flags(g.vertices()),
        genus(g.genus_labels()),
        vertex_alive(g.vertex_count(), true) {
    owner.resize(g.flag_count());
    for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f) {
      owner[f] = g.vertex_of(f);
      number[f] = g.leaf_number(f);
    }
  }

  void kill_flag(FlagId f) {
    flag_alive[f] = false;
    auto& at = flags[owner[f]];
    at.erase(std::find(at.begin(), at.end(), f));
  }

  Graph compact(bool numbered) const {
    std::vector<FlagId> remap(partner.size(), -1);
    FlagId next = 0;
    for (FlagId f = 0; f < static_cast<FlagId>(partner.size()); ++f)
      if (flag_alive[f]) remap[f] = next++;
    std::vector<FlagId> inv(next);
    std::vector<int> nums(numbered ? next : 0);
    for (FlagId f = 0; f < static_cast<FlagId>(partner.size()); ++f) {
      if (!flag_alive[f]) continue;
      inv[remap[f]] = remap[partner[f]];
      if (numbered) nums[remap[f]] = partner[f] == f ? number[f] : 0;
    }
    std::vector<std::vector<FlagId>> verts;
    std::vector<int> gen;
    for (VertexId v = 0; v < static_cast<VertexId>(flags.size()); ++v) {
      if (!vertex_alive[v]) continue;
      std::vector<FlagId> fs;
      for (FlagId f : flags[v]) fs.push_back(remap[f]);
      std::sort(fs.begin(), fs.end());
      verts.push_back(std::move(fs));
      gen.push_back(genus[v]);
    }
    return Graph(std::move(inv), std::move(verts), std::move(gen), std::move(nums));
  }
};

}  // namespace detail

/// Repeatedly deletes genus-0 vertices carrying one or two flags. A
/// one-flag vertex takes its edge with it; a two-flag vertex is spliced out,
/// joining its two half-edges (possibly into a loop) or passing a leaf
/// through to the neighbour.
inline Graph stabilize(const Graph& g) {
  const GraphType type = graph_type(g);
  if (2 * type.genus - 2 + type.leaf_count <= 0)
    throw Unstabilizable("type (" + std::to_string(type.genus) + "," + std::to_string(type.leaf_count) +
                         ") has no stable model");
  detail::FlagSoup s(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < static_cast<VertexId>(s.flags.size()); ++v) {
      if (!s.vertex_alive[v] || s.genus[v] != 0 || s.flags[v].size() > 2) continue;
      const std::vector<FlagId> fs = s.flags[v];
      if (fs.size() == 1) {
        const FlagId f = fs[0];
        if (s.partner[f] == f) throw Unstabilizable("graph collapses to a single leaf");
        s.kill_flag(s.partner[f]);
        s.kill_flag(f);
      } else if (fs.size() == 2) {
        const FlagId f = fs[0], h = fs[1];
        if (s.partner[f] == h) throw Unstabilizable("graph collapses to a bare loop");
        const bool f_leaf = s.partner[f] == f, h_leaf = s.partner[h] == h;
        if (f_leaf && h_leaf) throw Unstabilizable("graph collapses to a two-leaf vertex");
        if (f_leaf || h_leaf) {
          const FlagId leaf = f_leaf ? f : h, edge = f_leaf ? h : f;
          const FlagId far = s.partner[edge];
          s.partner[far] = far;
          s.number[far] = s.number[leaf];
          s.kill_flag(leaf);
          s.kill_flag(edge);
        } else {
          const FlagId a = s.partner[f], b = s.partner[h];
          s.partner[a] = b;
          s.partner[b] = a;
          s.kill_flag(f);
          s.kill_flag(h);
        }
      } else {
        throw Unstabilizable("isolated genus-0 vertex");
      }
      s.vertex_alive[v] = false;
      changed = true;
    }
  }
  return s.compact(g.numbered());
}

/// Contracts the edges named by either of their flags. Each contracted
/// cluster becomes one vertex whose genus is the genus of the cluster
/// (labels plus internal first Betti number).
inline Graph contract_edges(const Graph& g, const std::vector<FlagId>& edge_flags) {
  const auto nv = g.vertex_count();
  std::vector<VertexId> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> contracted(g.flag_count(), false);
  for (FlagId f : edge_flags) {
    if (f < 0 || f >= static_cast<FlagId>(g.flag_count()) || g.is_leaf(f))
      throw UnknownEdge("flag " + std::to_string(f) + " is not part of an edge");
    contracted[f] = contracted[g.partner(f)] = true;
  }
  std::vector<int> cluster_vertices(nv, 0), cluster_edges(nv, 0), cluster_genus(nv, 0);
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f) {
    if (!contracted[f] || g.partner(f) < f) continue;
    const VertexId a = find(g.vertex_of(f)), b = find(g.vertex_of(g.partner(f)));
    if (a != b) parent[a] = b;
  }
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f)
    if (contracted[f] && g.partner(f) > f) ++cluster_edges[find(g.vertex_of(f))];
  for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
    ++cluster_vertices[find(v)];
    cluster_genus[find(v)] += g.genus_label(v);
  }

  std::vector<int> new_index(nv, -1);
  std::vector<std::vector<FlagId>> verts;
  std::vector<int> gen;
  for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
    const VertexId r = find(v);
    if (new_index[r] != -1) continue;
    new_index[r] = static_cast<int>(verts.size());
    verts.emplace_back();
    gen.push_back(cluster_genus[r] + cluster_edges[r] - cluster_vertices[r] + 1);
  }
  std::vector<FlagId> remap(g.flag_count(), -1);
  FlagId next = 0;
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f)
    if (!contracted[f]) remap[f] = next++;
  std::vector<FlagId> inv(next);
  std::vector<int> nums(g.numbered() ? next : 0);
  for (FlagId f = 0; f < static_cast<FlagId>(g.flag_count()); ++f) {
    if (contracted[f]) continue;
    inv[remap[f]] = remap[g.partner(f)];
    verts[new_index[find(g.vertex_of(f))]].push_back(remap[f]);
    if (g.numbered()) nums[remap[f]] = g.leaf_number(f);
  }
  return Graph(std::move(inv), std::move(verts), std::move(gen), std::move(nums));
}

}  // namespace hyperell

#pragma once

/* From a genus-0 tree with 2g+2 leaves to the stable dual graph of genus g of
 * the corresponding hyperelliptic curve: build the dual graph of the
 * admissible double cover, then stabilise.
 *
 *  - a vertex with rho >= 2 lifts to one vertex of genus (rho - 2)/2, a
 *    vertex with rho = 0 to two vertices of genus 0;
 *  - an odd edge lifts to one edge, an even edge to two;
 *  - leaves lift to nothing.
 *
 * Even edges at a rho = 0 endpoint send one lift to each of its two covers;
 * when both endpoints have rho = 0 the covers are paired 1-1 and 2-2.
 */

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperell/annotate.hpp"
#include "hyperell/canonical.hpp"
#include "hyperell/graph.hpp"
#include "hyperell/trees.hpp"

namespace hyperell {

struct CoverGraph {
  Graph graph;
  /// cover[v] lists the cover vertices over tree vertex v (one or two).
  std::vector<std::vector<VertexId>> cover;
  std::vector<std::string> trace;
};

inline CoverGraph admissible_cover(const AnnotatedTree& t) {
  if (t.leaf_count() % 2 != 0) throw OddLeafTotal("admissible cover needs an even number of leaves");
  const Graph& tree = t.tree;
  CoverGraph out;
  GraphBuilder b;
  out.cover.resize(tree.vertex_count());
  for (VertexId v = 0; v < static_cast<VertexId>(tree.vertex_count()); ++v) {
    const int rho = t.rho[v];
    if (rho == 0) {
      out.cover[v] = {b.add_vertex(0), b.add_vertex(0)};
      out.trace.push_back("vertex " + std::to_string(v) + ": rho=0 -> two genus-0 vertices");
    } else {
      out.cover[v] = {b.add_vertex((rho - 2) / 2)};
      out.trace.push_back("vertex " + std::to_string(v) + ": rho=" + std::to_string(rho) + " -> one vertex of genus " +
                          std::to_string((rho - 2) / 2));
    }
  }
  for (auto [f, h] : tree.edges()) {
    const VertexId v = tree.vertex_of(f), w = tree.vertex_of(h);
    const auto& cv = out.cover[v];
    const auto& cw = out.cover[w];
    const std::string name = "edge " + std::to_string(v) + "-" + std::to_string(w);
    if (t.parity[f] == 1) {
      b.add_edge(cv[0], cw[0]);
      out.trace.push_back(name + ": odd -> one edge");
    } else {
      b.add_edge(cv[0], cw[0]);
      b.add_edge(cv.size() == 2 ? cv[1] : cv[0], cw.size() == 2 ? cw[1] : cw[0]);
      out.trace.push_back(name + ": even -> two edges");
    }
  }
  out.graph = b.build();
  return out;
}

/// The pre-stabilisation dual graph of the admissible double cover.
inline Graph admissible_cover_graph(const AnnotatedTree& t) { return admissible_cover(t).graph; }

/// Stable dual graph of type (g,0) of the image curve.
inline Graph pushforward(const AnnotatedTree& t) { return stabilize(admissible_cover_graph(t)); }

/// 2 #{rho = 0} + #{internal, rho = 2}.
inline int rational_component_count(const AnnotatedTree& t) {
  if (t.leaf_count() % 2 != 0) throw OddLeafTotal("rational component count needs an even number of leaves");
  int count = 0;
  for (std::size_t v = 0; v < t.rho.size(); ++v) {
    if (t.rho[v] == 0) count += 2;
    else if (t.rho[v] == 2 && t.internal[v]) count += 1;
  }
  return count;
}

/// The stratum of t maps into curves with at most k rational components.
inline bool in_filtration(const AnnotatedTree& t, int k) { return rational_component_count(t) <= k; }

inline int genus_zero_vertex_count(const Graph& g) {
  int k = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) k += g.genus_label(v) == 0;
  return k;
}

struct NodeBoundReport {
  int genus = 0;
  int k = 0;
  /// Orbit classes in the filtration, indexed by edge count.
  std::vector<int> classes_by_edges;
  /// Numbered trees in the filtration, indexed by edge count.
  std::vector<std::uint64_t> trees_by_edges;
  int max_edges = -1;
  bool node_bound_holds = true;      // edges <= g + k - 1
  bool nodes_never_decrease = true;  // edges(pushforward) >= edges(tree)
  std::vector<std::string> violations;

  bool ok() const { return node_bound_holds && nodes_never_decrease; }
};

inline constexpr int kMaxExhaustiveGenus = 4;

inline NodeBoundReport node_bound_report(int g, int k) {
  if (g < 2 || g > kMaxExhaustiveGenus || k < 0)
    throw OutOfRange("node_bound_report needs 2 <= g <= 4 and k >= 0");
  NodeBoundReport r;
  r.genus = g;
  r.k = k;
  r.classes_by_edges.assign(2 * g, 0);
  r.trees_by_edges.assign(2 * g, 0);
  for (const StratumClass& c : enumerate_orbits(2 * g + 2)) {
    const AnnotatedTree t = annotate(c.representative);
    if (!in_filtration(t, k)) continue;
    const int e = c.edge_count;
    ++r.classes_by_edges[e];
    r.trees_by_edges[e] += c.orbit_size;
    r.max_edges = std::max(r.max_edges, e);
    if (e > g + k - 1) {
      r.node_bound_holds = false;
      r.violations.push_back("edge bound: " + c.canonical_key);
    }
    if (static_cast<int>(pushforward(t).edge_count()) < e) {
      r.nodes_never_decrease = false;
      r.violations.push_back("node count drops: " + c.canonical_key);
    }
  }
  return r;
}

inline constexpr int kMaxInjectivityGenus = 4;

struct InjectivityReport {
  int genus = 0;
  std::size_t classes = 0;
  std::size_t distinct_images = 0;
  bool injective() const { return classes == distinct_images; }
};

inline InjectivityReport injectivity_report(int g) {
  if (g < 2 || g > kMaxInjectivityGenus) throw OutOfRange("injectivity check needs 2 <= g <= 4");
  InjectivityReport r;
  r.genus = g;
  std::set<std::string> images;
  for (const StratumClass& c : enumerate_orbits(2 * g + 2)) {
    ++r.classes;
    images.insert(canonical_form(pushforward(annotate(c.representative))));
  }
  r.distinct_images = images.size();
  return r;
}

/// Pairwise distinct images of the orbit classes of Gamma(0, 2g+2).
inline bool verify_injectivity(int g) { return injectivity_report(g).injective(); }

}  // namespace hyperell

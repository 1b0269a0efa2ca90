#pragma once

// JSON and CSV forms of graphs, annotated trees, Lie vectors, certificates
// and spectral tables. Needs nlohmann/json ("json.hpp", shipped in vendor/).
//
// Graph schema:
//   {"format": 1,
//    "flags": [0, 1, ...],
//    "involution": [[i, j], ...],        // i < j, fixed points omitted
//    "vertices": [[flags...], ...],      // each sorted, ordered by first flag
//    "genus": [g0, g1, ...],             // aligned with "vertices"
//    "leaf_numbering": {"flag": n, ...}} // numbered graphs only
// Annotated trees add "parity" (edge index -> 0/1, edges in "involution"
// order), "rho" and "nu" (aligned with "vertices").

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperell/annotate.hpp"
#include "hyperell/certificate.hpp"
#include "hyperell/graph.hpp"
#include "hyperell/lie.hpp"
#include "hyperell/spectral.hpp"

namespace hyperell {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace detail {

/// Vertex order used on output: by smallest flag, empty vertices last.
inline std::vector<VertexId> output_vertex_order(const Graph& g) {
  std::vector<VertexId> order(g.vertex_count());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  auto first = [&](VertexId v) {
    const auto& fs = g.flags_at(v);
    return fs.empty() ? static_cast<FlagId>(g.flag_count()) : *std::min_element(fs.begin(), fs.end());
  };
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return first(a) < first(b); });
  return order;
}

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

inline void check_format(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("format") && j.at("format") != kFormatVersion)
    throw ParseError("unsupported format " + j.at("format").dump());
}

}  // namespace detail

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["format"] = kFormatVersion;
  std::vector<int> flags(g.flag_count());
  for (std::size_t f = 0; f < flags.size(); ++f) flags[f] = static_cast<int>(f);
  j["flags"] = flags;
  Json inv = Json::array();
  for (auto [f, h] : g.edges()) inv.push_back({f, h});
  j["involution"] = inv;
  Json verts = Json::array(), genus = Json::array();
  for (VertexId v : detail::output_vertex_order(g)) {
    auto fs = g.flags_at(v);
    std::sort(fs.begin(), fs.end());
    verts.push_back(fs);
    genus.push_back(g.genus_label(v));
  }
  j["vertices"] = verts;
  j["genus"] = genus;
  if (g.numbered()) {
    Json num = Json::object();
    for (FlagId f : g.leaves()) num[std::to_string(f)] = g.leaf_number(f);
    j["leaf_numbering"] = num;
  }
  return j;
}

/// Flag ids may be any distinct integers; they are renumbered 0..F-1 in
/// increasing order.
inline Graph graph_from_json(const Json& j) {
  detail::check_format(j);
  const auto ids = detail::get_field<std::vector<long long>>(j, "flags");
  std::map<long long, FlagId> index;
  for (long long id : ids)
    if (!index.emplace(id, 0).second) throw ParseError("flag " + std::to_string(id) + " listed twice");
  FlagId next = 0;
  for (auto& [id, f] : index) f = next++;
  auto flag = [&](long long id) {
    auto it = index.find(id);
    if (it == index.end()) throw ParseError("unknown flag " + std::to_string(id));
    return it->second;
  };
  std::vector<FlagId> inv(index.size());
  for (std::size_t f = 0; f < inv.size(); ++f) inv[f] = static_cast<FlagId>(f);
  for (const auto& pair : detail::get_field<std::vector<std::vector<long long>>>(j, "involution")) {
    if (pair.size() != 2) throw ParseError("involution entries are [i, j] pairs");
    const FlagId a = flag(pair[0]), b = flag(pair[1]);
    if (a == b) throw ParseError("fixed points are omitted from the involution");
    if (inv[a] != a || inv[b] != b) throw InvalidGraph("flag paired twice");
    inv[a] = b;
    inv[b] = a;
  }
  std::vector<std::vector<FlagId>> verts;
  for (const auto& vs : detail::get_field<std::vector<std::vector<long long>>>(j, "vertices")) {
    verts.emplace_back();
    for (long long id : vs) verts.back().push_back(flag(id));
  }
  const auto genus = detail::get_field<std::vector<int>>(j, "genus");
  std::vector<int> numbers;
  if (j.contains("leaf_numbering")) {
    numbers.assign(inv.size(), 0);
    const Json& num = j.at("leaf_numbering");
    if (!num.is_object()) throw ParseError("leaf_numbering must be an object");
    for (const auto& [key, value] : num.items()) {
      long long id;
      try {
        id = std::stoll(key);
      } catch (const std::exception&) {
        throw ParseError("leaf_numbering key '" + key + "' is not a flag id");
      }
      if (!value.is_number_integer()) throw ParseError("leaf numbers must be integers");
      numbers[flag(id)] = value.get<int>();
    }
  }
  return Graph(std::move(inv), std::move(verts), genus, std::move(numbers));
}

inline Json annotated_to_json(const AnnotatedTree& t) {
  Json j = graph_to_json(t.tree);
  Json parity = Json::object();
  const auto edges = t.tree.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) parity[std::to_string(e)] = t.parity[edges[e].first];
  j["parity"] = parity;
  Json rho = Json::array(), nu = Json::array();
  for (VertexId v : detail::output_vertex_order(t.tree)) {
    rho.push_back(t.rho[v]);
    nu.push_back(t.nu[v]);
  }
  j["rho"] = rho;
  j["nu"] = nu;
  return j;
}

/// Parses the graph and recomputes the annotation; stored parity/rho/nu, if
/// present, must agree with it.
inline AnnotatedTree annotated_from_json(const Json& j) {
  AnnotatedTree t = annotate(graph_from_json(j));
  const Json again = annotated_to_json(t);
  for (const char* key : {"parity", "rho", "nu"})
    if (j.contains(key) && j.at(key) != again.at(key))
      throw ParseError(std::string("stored '") + key + "' disagrees with the tree");
  return t;
}

inline Json lie_vector_to_json(const GradedAlphabet& alpha, const LieVector& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms()) terms.push_back({{"key", key_string(alpha, k)}, {"coefficient", c.str()}});
  return terms;
}

inline Json certificate_to_json(const Certificate& c) {
  const GradedAlphabet alpha = certificate_alphabet(c.convention);
  Json j;
  j["format"] = kFormatVersion;
  j["genus"] = c.g;
  j["convention"] = to_string(c.convention);
  j["alphabet"] = alpha.spec();
  j["omega"] = c.omega.vector.str(alpha);
  j["d1_omega"] = c.d1_omega.vector.str(alpha);
  j["d1_omega_terms"] = lie_vector_to_json(alpha, c.d1_omega.vector);
  j["d1d1_zero"] = c.d1_d1_omega.vector.is_zero();
  j["d1d1_omega"] = c.d1_d1_omega.vector.str(alpha);
  const LeadingTermReport& L = c.leading;
  j["leading_terms"] = {
      {key_string(alpha, L.first), {{"coefficient", L.first_coefficient.str()}, {"expected", L.expected_first.str()}}},
      {key_string(alpha, L.second), {{"coefficient", L.second_coefficient.str()}, {"expected", L.expected_second.str()}}},
      {"remainder_above", L.remainder_above},
      {"integral", L.integral},
      {"ok", L.ok()}};
  j["good_stratum_check"] = c.check("target_stratum_good").passed && c.check("F1_column_minus_g_empty").passed;
  Json checks = Json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"witness", k.witness}});
  j["checks"] = checks;
  j["passed"] = c.passed();
  j["log"] = c.log;
  return j;
}

/// "p,q,dim,strata" rows sorted by (p,q), after a "# format: 1" line. The
/// strata column lists class:orbit_size x dim, classes numbered as in
/// enumerate_orbits.
inline std::string table_to_csv(const SpectralTable& t) {
  std::ostringstream out;
  out << "# format: " << kFormatVersion << ", kind: " << t.kind << "1, m: " << t.leaves;
  if (t.kind == 'F') out << ", genus: " << t.genus;
  out << "\np,q,dim,strata\n";
  for (const auto& [pq, cell] : t.cells) {
    out << pq.first << ',' << pq.second << ',' << cell.dimension << ',';
    for (std::size_t i = 0; i < cell.strata.size(); ++i) {
      const auto& s = cell.strata[i];
      out << (i ? " " : "") << 'T' << s.class_index << ':' << s.orbit_size << 'x' << s.dimension;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperell

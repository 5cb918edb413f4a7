// The reachability relation of 1-arc-transitive digraphs: alternating
// walks, reachability classes A(e), reachability digraphs <A(e)>, the
// universal-vs-bipartite dichotomy, witness cycles, and the two quotient
// relations derived from it (equal in-neighbourhoods, shared reachability
// sides).
//
// Two consecutive edges of an alternating walk share a tail or a head, and
// conversely any two edges sharing a tail or head lie on an alternating
// walk of length 2, so the reachability relation is exactly the closure of
// "share a tail or share a head".  That closure is what
// reachability_partition computes; a bounded-walk oracle in the tests
// guards the argument.

#pragma once

#include <map>
#include <numeric>
#include <set>

#include "digsym/digraph.hpp"
#include "digsym/symmetry.hpp"

namespace digsym {

struct ReachabilityClass {
  EdgeList edges;
  std::vector<Vertex> vertices;
  /// vertices with positive out-degree within the class
  std::vector<Vertex> tail_side;
  /// vertices with positive in-degree within the class
  std::vector<Vertex> head_side;
  /// set iff tail and head sides are disjoint; then every class edge runs
  /// from the tail side to the head side
  bool bipartite = false;
};

struct EdgeClassPartition {
  std::vector<ReachabilityClass> classes;
  std::map<Edge, std::size_t> class_of;
};

/// The finest partition of the edges closed under "share a tail" and
/// "share a head"; equals the alternating-walk reachability relation.
/// Classes are ordered by their smallest edge.
inline EdgeClassPartition reachability_partition(const Digraph& d) {
  const auto& edges = d.edges();
  const std::size_t m = edges.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, std::size_t x) -> std::size_t {
    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    parent[find(find, a)] = find(find, b);
  };
  std::vector<std::size_t> first_out(d.vertex_count(), m),
      first_in(d.vertex_count(), m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [u, v] = edges[i];
    if (first_out[u] == m)
      first_out[u] = i;
    else
      unite(first_out[u], i);
    if (first_in[v] == m)
      first_in[v] = i;
    else
      unite(first_in[v], i);
  }
  std::map<std::size_t, std::size_t> root_to_class;
  EdgeClassPartition result;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = find(find, i);
    auto [it, fresh] = root_to_class.emplace(root, result.classes.size());
    if (fresh) result.classes.emplace_back();
    result.classes[it->second].edges.push_back(edges[i]);
    result.class_of[edges[i]] = it->second;
  }
  for (auto& cls : result.classes) {
    std::set<Vertex> verts, tails, heads;
    for (const auto& [u, v] : cls.edges) {
      verts.insert(u);
      verts.insert(v);
      tails.insert(u);
      heads.insert(v);
    }
    cls.vertices.assign(verts.begin(), verts.end());
    cls.tail_side.assign(tails.begin(), tails.end());
    cls.head_side.assign(heads.begin(), heads.end());
    std::vector<Vertex> both;
    std::set_intersection(tails.begin(), tails.end(), heads.begin(),
                          heads.end(), std::back_inserter(both));
    cls.bipartite = both.empty();
  }
  return result;
}

/// The reachability digraph <A(e)>: the subdigraph spanned by the class of
/// e, re-indexed by the ascending order of its vertex set.
inline Digraph reachability_digraph(const Digraph& d, Edge e) {
  if (!d.has_edge(e.first, e.second))
    throw parameter_error("edge not present in digraph");
  const auto partition = reachability_partition(d);
  const auto& cls = partition.classes[partition.class_of.at(e)];
  std::vector<Vertex> rank(d.vertex_count(), 0);
  for (std::size_t i = 0; i < cls.vertices.size(); ++i)
    rank[cls.vertices[i]] = static_cast<Vertex>(i);
  EdgeList edges;
  for (const auto& [u, v] : cls.edges) edges.emplace_back(rank[u], rank[v]);
  return Digraph(static_cast<Vertex>(cls.vertices.size()), std::move(edges));
}

/// True iff the reachability relation has a single class.
inline bool is_universal(const Digraph& d) {
  if (d.edge_count() == 0)
    throw empty_edge_set("universality is undefined without edges");
  return reachability_partition(d).classes.size() == 1;
}

/// Delta(D): the common isomorphism type of all reachability digraphs of a
/// connected 1-arc-transitive digraph.  All classes are verified pairwise
/// isomorphic; the representative is the class of the smallest edge.
inline Digraph delta(const Digraph& d) {
  if (d.edge_count() == 0)
    throw empty_edge_set("delta is undefined without edges");
  if (!is_connected(d)) throw parameter_error("delta needs a connected digraph");
  if (!transitivity_report(d).one_arc_transitive)
    throw not_one_arc_transitive("delta needs a 1-arc-transitive digraph");
  Digraph rep = reachability_digraph(d, d.edges().front());
  const auto partition = reachability_partition(d);
  for (const auto& cls : partition.classes) {
    std::vector<Vertex> rank(d.vertex_count(), 0);
    for (std::size_t i = 0; i < cls.vertices.size(); ++i)
      rank[cls.vertices[i]] = static_cast<Vertex>(i);
    EdgeList edges;
    for (const auto& [u, v] : cls.edges) edges.emplace_back(rank[u], rank[v]);
    Digraph other(static_cast<Vertex>(cls.vertices.size()), std::move(edges));
    if (!isomorphic(rep, other))
      throw classes_not_isomorphic(
          "reachability classes of a 1-arc-transitive digraph disagree");
  }
  return rep;
}

enum class Prop51Branch { universal, bipartite, both, falsified };

struct Prop51Report {
  Prop51Branch branch = Prop51Branch::falsified;
  bool delta_connected = false;
  bool delta_one_arc_transitive = false;
};

/// The dichotomy check: Delta(D) must be connected and 1-arc-transitive,
/// and either A is universal with Delta(D) isomorphic to D, or Delta(D) is
/// bipartite with all edges one way.  The "or" is inclusive; `falsified`
/// means neither branch holds.
inline Prop51Report check_prop_5_1(const Digraph& d) {
  const Digraph dd = delta(d);
  Prop51Report report;
  report.delta_connected = is_connected(dd);
  report.delta_one_arc_transitive = transitivity_report(dd).one_arc_transitive;
  const auto partition = reachability_partition(d);
  const bool universal =
      partition.classes.size() == 1 && isomorphic(dd, d);
  bool bipartite = true;
  for (const auto& cls : partition.classes)
    if (!cls.bipartite) bipartite = false;
  if (universal && bipartite)
    report.branch = Prop51Branch::both;
  else if (universal)
    report.branch = Prop51Branch::universal;
  else if (bipartite)
    report.branch = Prop51Branch::bipartite;
  else
    report.branch = Prop51Branch::falsified;
  return report;
}

// ---------------------------------------------------------------------------
// Alternating walks and witness cycles

/// A walk is alternating iff at every internal vertex the two incident walk
/// edges either both point in or both point out.
inline bool is_alternating_walk(const Digraph& d,
                                std::span<const Vertex> walk) {
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!d.adjacent(walk[i], walk[i + 1]))
      throw parameter_error("walk has a non-adjacent consecutive pair");
  for (std::size_t i = 1; i + 1 < walk.size(); ++i)
    if (d.has_edge(walk[i], walk[i - 1]) != d.has_edge(walk[i], walk[i + 1]))
      return false;
  return true;
}

namespace detail {

inline void require_cycle(const Digraph& d, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw parameter_error("cycle needs >= 3 vertices");
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size())
    throw parameter_error("cycle vertices must be distinct");
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!d.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
      throw parameter_error("cycle has a non-adjacent consecutive pair");
}

inline bool cycle_contains_induced_two_arc(const Digraph& d,
                                           std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % len],
                 c = cycle[(i + 2) % len];
    if (d.has_edge(a, b) && d.has_edge(b, c) && !d.adjacent(a, c)) return true;
    if (d.has_edge(c, b) && d.has_edge(b, a) && !d.adjacent(c, a)) return true;
  }
  return false;
}

inline bool opening_leaves_alternating_walk(const Digraph& d,
                                            std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  std::vector<Vertex> walk(len);
  for (std::size_t drop = 0; drop < len; ++drop) {
    // remove the edge between cycle[drop] and cycle[drop+1]
    for (std::size_t i = 0; i < len; ++i)
      walk[i] = cycle[(drop + 1 + i) % len];
    if (is_alternating_walk(d, walk)) return true;
  }
  return false;
}

inline bool cycle_is_induced(const Digraph& d, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (d.adjacent(cycle[i], cycle[j])) return false;
    }
  return true;
}

}  // namespace detail

/// A cycle witnesses that A is universal if it contains an induced 2-arc
/// and removing some cycle edge leaves an alternating walk.
inline bool is_witness_cycle(const Digraph& d, std::span<const Vertex> cycle) {
  detail::require_cycle(d, cycle);
  return detail::cycle_contains_induced_two_arc(d, cycle) &&
         detail::opening_leaves_alternating_walk(d, cycle);
}

struct WitnessCycle {
  std::vector<Vertex> cycle;
  bool induced = false;
};

/// Minimum-length witness cycle of length <= max_len, or nullopt.  Searches
/// simple cycles by increasing length; within a length, the returned cycle
/// is the lexicographically least representation (smallest vertex first,
/// smaller second neighbour than last).  max_len = 0 means vertex_count.
inline std::optional<WitnessCycle> find_witness_cycle(const Digraph& d,
                                                      Vertex max_len = 0) {
  const Vertex n = d.vertex_count();
  if (max_len == 0) max_len = n;
  if (max_len < 3) return std::nullopt;
  std::vector<std::vector<Vertex>> und(n);
  for (const auto& [u, v] : d.edges()) {
    und[u].push_back(v);
    und[v].push_back(u);
  }
  for (auto& a : und) std::sort(a.begin(), a.end());

  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);

  // alternation can fail at no more than two cycle vertices (the endpoints
  // of the dropped edge), which prunes most prefixes early
  auto fails_at = [&](Vertex prev, Vertex mid, Vertex next) {
    return d.has_edge(mid, prev) != d.has_edge(mid, next);
  };

  std::optional<std::vector<Vertex>> best;
  auto extend = [&](auto&& self, Vertex target_len) -> bool {
    const Vertex v = path.back();
    if (path.size() == target_len) {
      if (!d.adjacent(v, path.front())) return false;
      if (path[1] > path.back()) return false;  // direction dedup
      std::size_t failures = 0;
      const std::size_t len = path.size();
      for (std::size_t i = 0; i < len; ++i)
        if (fails_at(path[(i + len - 1) % len], path[i], path[(i + 1) % len]))
          ++failures;
      if (failures > 2) return false;
      if (is_witness_cycle(d, path)) {
        best = path;
        return true;
      }
      return false;
    }
    std::size_t failure_budget = 2;
    {
      std::size_t failures = 0;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (fails_at(path[i - 1], path[i], path[i + 1])) ++failures;
      if (failures > failure_budget) return false;
    }
    for (Vertex w : und[v]) {
      if (on_path[w] || w < path.front()) continue;
      path.push_back(w);
      on_path[w] = 1;
      const bool done = self(self, target_len);
      on_path[w] = 0;
      path.pop_back();
      if (done) return true;
    }
    return false;
  };

  for (Vertex len = 3; len <= std::min<Vertex>(max_len, n); ++len) {
    for (Vertex start = 0; start < n; ++start) {
      path.assign(1, start);
      std::fill(on_path.begin(), on_path.end(), 0);
      on_path[start] = 1;
      if (extend(extend, len)) break;
    }
    if (best) break;
  }
  if (!best) return std::nullopt;
  return WitnessCycle{*best, detail::cycle_is_induced(d, *best)};
}

// ---------------------------------------------------------------------------
// Quotient relations

/// Blocks of equal in-neighbourhood, ordered by smallest member.
inline VertexPartition eq_in_nbhd(const Digraph& d) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    groups[d.in_neighbours(v)].push_back(v);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& [key, block] : groups) blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return VertexPartition(d.vertex_count(), std::move(blocks));
}

/// x ~ y iff x = y or two distinct reachability classes contain both on the
/// same side of each.  Every vertex must lie in at least two classes, all
/// bipartite; the literal relation must already be transitive.
inline VertexPartition eq_reach_sides(const Digraph& d) {
  const Vertex n = d.vertex_count();
  const auto partition = reachability_partition(d);
  std::vector<std::vector<std::pair<std::size_t, int>>> incidences(n);
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    const auto& cls = partition.classes[c];
    if (!cls.bipartite)
      throw not_applicable("reachability class " + std::to_string(c) +
                           " is not bipartite");
    for (Vertex v : cls.tail_side) incidences[v].emplace_back(c, 0);
    for (Vertex v : cls.head_side) incidences[v].emplace_back(c, 1);
  }
  for (Vertex v = 0; v < n; ++v)
    if (incidences[v].size() < 2)
      throw not_applicable("vertex " + std::to_string(v) +
                           " lies in fewer than two reachability classes");
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  for (Vertex x = 0; x < n; ++x) {
    related[x][x] = 1;
    for (Vertex y = x + 1; y < n; ++y) {
      std::size_t shared = 0;
      for (const auto& ix : incidences[x])
        for (const auto& iy : incidences[y])
          if (ix == iy) ++shared;
      if (shared >= 2) related[x][y] = related[y][x] = 1;
    }
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        if (related[a][b] && related[b][c] && !related[a][c])
          throw not_equivalence("shared-sides relation is not transitive");
  std::vector<char> placed(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < n; ++v) {
    if (placed[v]) continue;
    std::vector<Vertex> block;
    for (Vertex w = v; w < n; ++w)
      if (related[v][w]) {
        block.push_back(w);
        placed[w] = 1;
      }
    blocks.push_back(std::move(block));
  }
  return VertexPartition(n, std::move(blocks));
}

}  // namespace digsym

// Exact isomorphism, canonical forms, automorphism groups, and homogeneity
// decision procedures.
//
// Everything here is deterministic: backtracking tries unmapped sources in
// ascending order and candidate images in ascending order, so "the first
// map found" is well defined; canonical forms are minima over the leaves of
// an individualization-refinement tree.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>

#include "digsym/digraph.hpp"

namespace digsym {

/// An induced isomorphism between two vertex subsets, given as
/// (source, image) pairs.
struct PartialMap {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

namespace detail {

// 0 = non-adjacent, 1 = u -> v, 2 = v -> u.
struct AdjacencyMatrix {
  Vertex n = 0;
  std::vector<char> forward;

  explicit AdjacencyMatrix(const Digraph& d)
      : n(d.vertex_count()), forward(static_cast<std::size_t>(n) * n, 0) {
    for (const auto& [u, v] : d.edges())
      forward[static_cast<std::size_t>(u) * n + v] = 1;
  }

  char state(Vertex u, Vertex v) const {
    if (forward[static_cast<std::size_t>(u) * n + v]) return 1;
    if (forward[static_cast<std::size_t>(v) * n + u]) return 2;
    return 0;
  }
};

// Backtracking over bijections a -> b that preserve pair states and vertex
// colours.  Sources are taken ascending and images tried ascending, so the
// first result is lexicographically least.  The callback receives each
// complete bijection and returns true to keep searching.
template <typename Callback>
inline void search_bijections(const AdjacencyMatrix& a,
                              const AdjacencyMatrix& b,
                              const std::vector<std::uint32_t>& col_a,
                              const std::vector<std::uint32_t>& col_b,
                              std::vector<Vertex> map,
                              std::vector<char> used, Callback&& cb) {
  const Vertex n = a.n;
  const Vertex none = n;
  std::vector<Vertex> deg_out_a(n, 0), deg_in_a(n, 0), deg_out_b(n, 0),
      deg_in_b(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (a.state(u, v) == 1) ++deg_out_a[u];
      if (a.state(u, v) == 2) ++deg_in_a[u];
      if (b.state(u, v) == 1) ++deg_out_b[u];
      if (b.state(u, v) == 2) ++deg_in_b[u];
    }
  auto rec = [&](auto&& self, Vertex source) -> bool {
    while (source < n && map[source] != none) ++source;
    if (source == n) return cb(map);
    for (Vertex image = 0; image < n; ++image) {
      if (used[image]) continue;
      if (col_a[source] != col_b[image]) continue;
      if (deg_out_a[source] != deg_out_b[image] ||
          deg_in_a[source] != deg_in_b[image])
        continue;
      bool ok = true;
      for (Vertex s = 0; s < n && ok; ++s)
        if (map[s] != none && a.state(source, s) != b.state(image, map[s]))
          ok = false;
      if (!ok) continue;
      map[source] = image;
      used[image] = 1;
      const bool keep_going = self(self, source + 1);
      map[source] = none;
      used[image] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec, 0);
}

inline std::optional<std::vector<Vertex>> find_bijection(
    const AdjacencyMatrix& a, const AdjacencyMatrix& b,
    const std::vector<std::uint32_t>& col_a,
    const std::vector<std::uint32_t>& col_b,
    const std::vector<std::pair<Vertex, Vertex>>& seed) {
  const Vertex n = a.n;
  std::vector<Vertex> map(n, n);
  std::vector<char> used(n, 0);
  // the recursion only checks fresh assignments, so the seed itself must be
  // validated here: injective, colour-matching, state-preserving
  for (const auto& [s, t] : seed) {
    if (map[s] != n || used[t]) return std::nullopt;
    if (col_a[s] != col_b[t]) return std::nullopt;
    map[s] = t;
    used[t] = 1;
  }
  for (const auto& [s, t] : seed)
    for (const auto& [s2, t2] : seed)
      if (s != s2 && a.state(s, s2) != b.state(t, t2)) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  search_bijections(a, b, col_a, col_b, std::move(map), std::move(used),
                    [&](const std::vector<Vertex>& m) {
                      found = m;
                      return false;
                    });
  return found;
}

inline std::vector<std::uint32_t> zero_colours(Vertex n) {
  return std::vector<std::uint32_t>(n, 0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// PartialMap validation

/// Injective in both coordinates and edge/non-edge preserving between the
/// mapped pairs.
inline bool is_valid_partial_map(const Digraph& source, const Digraph& target,
                                 const PartialMap& pm) {
  for (const auto& [s, t] : pm.pairs)
    if (s >= source.vertex_count() || t >= target.vertex_count()) return false;
  for (std::size_t i = 0; i < pm.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pm.pairs.size(); ++j) {
      const auto& [a, am] = pm.pairs[i];
      const auto& [b, bm] = pm.pairs[j];
      if (a == b || am == bm) return false;
      if (source.has_edge(a, b) != target.has_edge(am, bm)) return false;
      if (source.has_edge(b, a) != target.has_edge(bm, am)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism

/// An edge- and non-edge-preserving bijection, or nullopt.  Deterministic:
/// the first map in lexicographic backtracking order.
inline std::optional<std::vector<Vertex>> isomorphism(const Digraph& d1,
                                                      const Digraph& d2) {
  if (d1.vertex_count() != d2.vertex_count()) return std::nullopt;
  if (d1.edge_count() != d2.edge_count()) return std::nullopt;
  const Vertex n = d1.vertex_count();
  auto degree_profile = [](const Digraph& d) {
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
      p.emplace_back(d.out_degree(v), d.in_degree(v));
    std::sort(p.begin(), p.end());
    return p;
  };
  if (degree_profile(d1) != degree_profile(d2)) return std::nullopt;
  detail::AdjacencyMatrix a(d1), b(d2);
  return detail::find_bijection(a, b, detail::zero_colours(n),
                                detail::zero_colours(n), {});
}

inline bool isomorphic(const Digraph& d1, const Digraph& d2) {
  return isomorphism(d1, d2).has_value();
}

// ---------------------------------------------------------------------------
// Canonical form

/// Relabeling-invariant representative: equal forms iff isomorphic (with
/// matching colours, when given).
struct CanonicalForm {
  Vertex n = 0;
  std::vector<std::uint32_t> colours;
  EdgeList edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.colours <=> b.colours; c != 0) return c;
    return a.edges <=> b.edges;
  }
};

namespace detail {

// One round of directed colour refinement: vertices are re-coloured by the
// rank of (old colour, per-class out-counts, per-class in-counts), iterated
// to a fixpoint.  Class ids depend only on the structure, never on vertex
// indices.
inline std::vector<std::uint32_t> refine_colours(const AdjacencyMatrix& adj,
                                                 std::vector<std::uint32_t> col) {
  const Vertex n = adj.n;
  if (n == 0) return col;
  for (;;) {
    const std::uint32_t classes =
        *std::max_element(col.begin(), col.end()) + 1;
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].assign(1 + 2 * classes, 0);
      sig[v][0] = col[v];
      for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        const char st = adj.state(v, u);
        if (st == 1) ++sig[v][1 + col[u]];
        if (st == 2) ++sig[v][1 + classes + col[u]];
      }
    }
    std::vector<std::vector<std::uint32_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint32_t> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    if (next == col) return col;
    col = std::move(next);
  }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Digraph& d,
                                    const std::vector<std::uint32_t>& colours,
                                    Vertex max_vertices = 16) {
  const Vertex n = d.vertex_count();
  if (n > max_vertices)
    throw guard_exceeded("canonical form capped at " +
                         std::to_string(max_vertices) + " vertices");
  if (colours.size() != n) throw parameter_error("colour vector size mismatch");
  detail::AdjacencyMatrix adj(d);
  CanonicalForm best;
  bool have = false;

  auto consider = [&](const std::vector<std::uint32_t>& discrete) {
    CanonicalForm cand;
    cand.n = n;
    cand.colours.resize(n);
    for (Vertex v = 0; v < n; ++v) cand.colours[discrete[v]] = colours[v];
    cand.edges.reserve(d.edge_count());
    for (const auto& [u, v] : d.edges())
      cand.edges.emplace_back(discrete[u], discrete[v]);
    std::sort(cand.edges.begin(), cand.edges.end());
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  };

  auto rec = [&](auto&& self, std::vector<std::uint32_t> col) -> void {
    col = detail::refine_colours(adj, std::move(col));
    // first class with two or more members becomes the branching target
    std::uint32_t target = UINT32_MAX;
    std::vector<std::uint32_t> count;
    for (Vertex v = 0; v < n; ++v) {
      if (col[v] >= count.size()) count.resize(col[v] + 1, 0);
      ++count[col[v]];
    }
    for (std::uint32_t c = 0; c < count.size(); ++c)
      if (count[c] >= 2) {
        target = c;
        break;
      }
    if (target == UINT32_MAX) {
      consider(col);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<std::uint32_t> split(n);
      for (Vertex u = 0; u < n; ++u)
        split[u] = 2 * col[u] + (u == v ? 0 : 1);
      self(self, std::move(split));
    }
  };

  if (n == 0) return CanonicalForm{0, {}, {}};
  rec(rec, colours);
  return best;
}

inline CanonicalForm canonical_form(const Digraph& d,
                                    Vertex max_vertices = 16) {
  return canonical_form(d, detail::zero_colours(d.vertex_count()),
                        max_vertices);
}

// ---------------------------------------------------------------------------
// Automorphism group

/// Generators plus exact group order from the stabilizer chain
/// G = G_0 >= G_1 >= ... where G_i fixes 0..i-1 pointwise: the order is the
/// product over i of the number of images the backtracking search can give
/// vertex i inside G_i.
struct GeneratorSet {
  std::vector<std::vector<Vertex>> generators;
  std::uint64_t group_order = 1;
};

namespace detail {

inline GeneratorSet automorphism_generators_impl(
    const Digraph& d, const std::vector<std::uint32_t>& colours,
    Vertex max_vertices) {
  const Vertex n = d.vertex_count();
  if (n > max_vertices)
    throw guard_exceeded("automorphism search capped at " +
                         std::to_string(max_vertices) + " vertices");
  AdjacencyMatrix adj(d);
  GeneratorSet result;
  std::set<std::vector<Vertex>> seen;
  for (Vertex level = 0; level < n; ++level) {
    std::uint64_t orbit = 0;
    for (Vertex image = 0; image < n; ++image) {
      std::vector<std::pair<Vertex, Vertex>> seed;
      for (Vertex f = 0; f < level; ++f) seed.emplace_back(f, f);
      seed.emplace_back(level, image);
      bool feasible = true;
      for (const auto& [s, t] : seed)
        if (colours[s] != colours[t]) feasible = false;
      if (!feasible) continue;
      auto found = find_bijection(adj, adj, colours, colours, seed);
      if (!found) continue;
      ++orbit;
      bool identity = true;
      for (Vertex v = 0; v < n; ++v)
        if ((*found)[v] != v) identity = false;
      if (!identity && seen.insert(*found).second)
        result.generators.push_back(*found);
    }
    result.group_order *= orbit;
  }
  return result;
}

}  // namespace detail

inline GeneratorSet automorphism_generators(const Digraph& d,
                                            Vertex max_vertices = 16) {
  return detail::automorphism_generators_impl(
      d, detail::zero_colours(d.vertex_count()), max_vertices);
}

/// True iff some automorphism of d agrees with the partial map.  Decided by
/// backtracking, independent of generator enumeration.
inline bool extends_to_automorphism(const Digraph& d, const PartialMap& pm) {
  if (!is_valid_partial_map(d, d, pm))
    throw invalid_partial_map("partial map is not an induced isomorphism");
  detail::AdjacencyMatrix adj(d);
  const auto colours = detail::zero_colours(d.vertex_count());
  return detail::find_bijection(adj, adj, colours, colours, pm.pairs)
      .has_value();
}

// ---------------------------------------------------------------------------
// Connected subdigraph enumeration

/// Every S with D[S] connected (underlying sense) and 1 <= |S| <= max_size,
/// each exactly once, as ascending vertex lists.
inline std::vector<std::vector<Vertex>> enumerate_connected_subdigraphs(
    const Digraph& d, Vertex max_size) {
  const Vertex n = d.vertex_count();
  if (max_size > n)
    throw parameter_error("max_size exceeds vertex count");
  if (n > 31) throw guard_exceeded("subset enumeration capped at 31 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : d.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::vector<std::vector<Vertex>> out;
  const std::uint32_t all = n == 31 ? 0x7fffffffu : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    const int size = std::popcount(mask);
    if (size > static_cast<int>(max_size)) continue;
    std::uint32_t seen = mask & (~mask + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != mask) continue;
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) subset.push_back(v);
    out.push_back(std::move(subset));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneity

enum class HomogeneityMode { plain, connected, bipartite, two_partite };

struct HomogeneityResult {
  bool homogeneous = false;
  /// A qualifying isomorphism that extends to no (side-preserving, in the
  /// partition modes) automorphism; absent when homogeneous.
  std::optional<PartialMap> witness;
};

namespace detail {

inline std::vector<std::uint32_t> mode_colours(const Digraph& d,
                                               HomogeneityMode mode,
                                               const VertexPartition* part) {
  const Vertex n = d.vertex_count();
  if (mode != HomogeneityMode::bipartite &&
      mode != HomogeneityMode::two_partite)
    return zero_colours(n);
  if (part == nullptr || part->vertex_count() != n ||
      part->block_count() != 2)
    throw parameter_error("partition mode needs a matching 2-block partition");
  std::vector<std::uint32_t> col(n);
  for (Vertex v = 0; v < n; ++v)
    col[v] = static_cast<std::uint32_t>(part->block_of(v));
  if (mode == HomogeneityMode::two_partite) {
    for (const auto& [u, v] : d.edges())
      if (col[u] == col[v])
        throw parameter_error("two-partite mode needs all edges across sides");
  } else {
    // all edges must run one fixed way across the sides
    std::optional<std::uint32_t> from;
    for (const auto& [u, v] : d.edges()) {
      if (col[u] == col[v])
        throw not_bipartite_oriented("bipartite mode needs all edges across sides");
      if (!from) from = col[u];
      if (col[u] != *from)
        throw not_bipartite_oriented("bipartite mode needs all edges one way");
    }
  }
  return col;
}

inline std::vector<std::vector<Vertex>> mode_subsets(const Digraph& d,
                                                     HomogeneityMode mode) {
  const Vertex n = d.vertex_count();
  if (mode == HomogeneityMode::connected)
    return enumerate_connected_subdigraphs(d, n);
  if (n > 31) throw guard_exceeded("subset enumeration capped at 31 vertices");
  std::vector<std::vector<Vertex>> out;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) subset.push_back(v);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace detail

/// Orbit-criterion homogeneity: every isomorphism between qualifying
/// induced subdigraphs extends iff, for each isomorphism class, all
/// induced embeddings of that class form a single orbit under the
/// (side-preserving) automorphism group.
inline HomogeneityResult homogeneity_check(const Digraph& d,
                                           HomogeneityMode mode,
                                           const VertexPartition* partition = nullptr,
                                           Vertex max_vertices = 12) {
  const Vertex n = d.vertex_count();
  const auto colours = detail::mode_colours(d, mode, partition);
  if (n > max_vertices)
    throw guard_exceeded("homogeneity check capped at " +
                         std::to_string(max_vertices) + " vertices");
  if (n <= 1) return {true, std::nullopt};

  const auto generators =
      detail::automorphism_generators_impl(d, colours, max_vertices).generators;
  const auto subsets = detail::mode_subsets(d, mode);

  // classify subsets by coloured canonical form
  std::map<CanonicalForm, std::vector<std::size_t>> classes;
  std::vector<InducedSubdigraph> induced(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    induced[i] = induced_subdigraph(d, subsets[i]);
    std::vector<std::uint32_t> sub_col(subsets[i].size());
    for (std::size_t j = 0; j < subsets[i].size(); ++j)
      sub_col[j] = colours[induced[i].vertices[j]];
    classes[canonical_form(induced[i].digraph, sub_col, max_vertices)]
        .push_back(i);
  }

  for (const auto& [form, members] : classes) {
    const auto& rep = induced[members.front()];
    std::vector<std::uint32_t> rep_col(rep.vertices.size());
    for (std::size_t j = 0; j < rep.vertices.size(); ++j)
      rep_col[j] = colours[rep.vertices[j]];
    detail::AdjacencyMatrix rep_adj(rep.digraph);

    std::set<std::vector<Vertex>> embeddings;
    for (std::size_t idx : members) {
      const auto& host = induced[idx];
      std::vector<std::uint32_t> host_col(host.vertices.size());
      for (std::size_t j = 0; j < host.vertices.size(); ++j)
        host_col[j] = colours[host.vertices[j]];
      detail::AdjacencyMatrix host_adj(host.digraph);
      const Vertex k = rep.digraph.vertex_count();
      detail::search_bijections(
          rep_adj, host_adj, rep_col, host_col, std::vector<Vertex>(k, k),
          std::vector<char>(k, 0), [&](const std::vector<Vertex>& bij) {
            std::vector<Vertex> embedding(k);
            for (Vertex i = 0; i < k; ++i)
              embedding[i] = host.vertices[bij[i]];
            embeddings.insert(std::move(embedding));
            return true;
          });
    }

    // orbit of the least embedding under the automorphism generators
    std::set<std::vector<Vertex>> orbit{*embeddings.begin()};
    std::vector<std::vector<Vertex>> queue{*embeddings.begin()};
    while (!queue.empty()) {
      const auto e = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : generators) {
        std::vector<Vertex> moved(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) moved[i] = g[e[i]];
        if (orbit.insert(moved).second) queue.push_back(std::move(moved));
      }
    }
    if (orbit.size() != embeddings.size()) {
      const auto& base = *embeddings.begin();
      for (const auto& e : embeddings)
        if (!orbit.contains(e)) {
          PartialMap witness;
          for (std::size_t i = 0; i < base.size(); ++i)
            witness.pairs.emplace_back(base[i], e[i]);
          std::sort(witness.pairs.begin(), witness.pairs.end());
          return {false, std::move(witness)};
        }
    }
  }
  return {true, std::nullopt};
}

/// Raw-definition homogeneity: enumerate every pair of qualifying induced
/// subdigraphs, every isomorphism between them, and all vertex
/// permutations.  Slow and trustworthy; the independent oracle for the
/// orbit-criterion checker.
inline HomogeneityResult homogeneity_check_direct(
    const Digraph& d, HomogeneityMode mode,
    const VertexPartition* partition = nullptr, Vertex max_vertices = 6) {
  const Vertex n = d.vertex_count();
  const auto colours = detail::mode_colours(d, mode, partition);
  if (n > max_vertices)
    throw guard_exceeded("direct homogeneity check capped at " +
                         std::to_string(max_vertices) + " vertices");
  if (n <= 1) return {true, std::nullopt};

  std::vector<std::vector<Vertex>> automorphisms;
  {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        if (colours[v] != colours[perm[v]]) ok = false;
        for (Vertex w = 0; w < n && ok; ++w)
          if (v != w && d.has_edge(v, w) != d.has_edge(perm[v], perm[w]))
            ok = false;
      }
      if (ok) automorphisms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  const auto subsets = detail::mode_subsets(d, mode);
  for (const auto& s : subsets)
    for (const auto& t : subsets) {
      if (s.size() != t.size()) continue;
      std::vector<std::size_t> idx(s.size());
      std::iota(idx.begin(), idx.end(), 0);
      do {
        bool iso = true;
        for (std::size_t i = 0; i < s.size() && iso; ++i) {
          if (colours[s[i]] != colours[t[idx[i]]]) iso = false;
          for (std::size_t j = 0; j < s.size() && iso; ++j)
            if (i != j &&
                d.has_edge(s[i], s[j]) != d.has_edge(t[idx[i]], t[idx[j]]))
              iso = false;
        }
        if (!iso) continue;
        bool extends = false;
        for (const auto& alpha : automorphisms) {
          bool agrees = true;
          for (std::size_t i = 0; i < s.size() && agrees; ++i)
            if (alpha[s[i]] != t[idx[i]]) agrees = false;
          if (agrees) {
            extends = true;
            break;
          }
        }
        if (!extends) {
          PartialMap witness;
          for (std::size_t i = 0; i < s.size(); ++i)
            witness.pairs.emplace_back(s[i], t[idx[i]]);
          return {false, std::move(witness)};
        }
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Transitivity

struct TransitivityReport {
  bool vertex_transitive = false;
  bool one_arc_transitive = false;
  std::optional<Digraph> out_type;
  std::optional<Digraph> in_type;
};

inline TransitivityReport transitivity_report(const Digraph& d,
                                              Vertex max_vertices = 16) {
  const Vertex n = d.vertex_count();
  if (n > max_vertices)
    throw guard_exceeded("transitivity report capped at " +
                         std::to_string(max_vertices) + " vertices");
  TransitivityReport report;
  if (n == 0) {
    report.vertex_transitive = true;
    report.one_arc_transitive = true;
    return report;
  }
  const auto generators = automorphism_generators(d, max_vertices).generators;

  std::vector<std::size_t> parent(n + d.edge_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, std::size_t x) -> std::size_t {
    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
  };
  auto unite = [&](std::size_t x, std::size_t y) {
    parent[find(find, x)] = find(find, y);
  };
  std::map<Edge, std::size_t> edge_index;
  for (std::size_t i = 0; i < d.edge_count(); ++i)
    edge_index[d.edges()[i]] = n + i;
  for (const auto& g : generators) {
    for (Vertex v = 0; v < n; ++v) unite(v, g[v]);
    for (const auto& [u, v] : d.edges())
      unite(edge_index[{u, v}], edge_index[{g[u], g[v]}]);
  }
  std::set<std::size_t> vertex_orbits, edge_orbits;
  for (Vertex v = 0; v < n; ++v) vertex_orbits.insert(find(find, v));
  for (std::size_t i = 0; i < d.edge_count(); ++i)
    edge_orbits.insert(find(find, n + i));
  report.vertex_transitive = vertex_orbits.size() <= 1;
  report.one_arc_transitive = edge_orbits.size() <= 1;

  if (report.vertex_transitive) {
    const Digraph out0 = local_digraph(d, 0, Direction::out);
    const Digraph in0 = local_digraph(d, 0, Direction::in);
    for (Vertex v = 1; v < n; ++v) {
      if (!isomorphic(out0, local_digraph(d, v, Direction::out)) ||
          !isomorphic(in0, local_digraph(d, v, Direction::in)))
        throw classes_not_isomorphic(
            "vertex-transitive digraph with non-isomorphic local views");
    }
    report.out_type = out0;
    report.in_type = in0;
  }
  return report;
}

}  // namespace digsym

// Finite digraph value type and structural operations: induced subdigraphs,
// local neighbourhood views, products, quotients, complements.
//
// A digraph here is a finite, irreflexive, antisymmetric edge relation on
// vertices 0..n-1.  Every constructor validates these invariants and every
// operation either preserves them or throws instead of returning an invalid
// value.  All values are immutable after construction.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digsym {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<Edge>;

// ---------------------------------------------------------------------------
// Errors

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  using error::error;
};

/// A digraph or partition invariant (loop, symmetric pair, range, cover)
/// would be broken by the requested value.
class invariant_violation : public error {
 public:
  using error::error;
};

/// A parameter is outside its documented range.
class parameter_error : public error {
 public:
  using error::error;
};

/// A configurable size guard was exceeded.
class guard_exceeded : public error {
 public:
  using error::error;
};

/// Quotient: two adjacent vertices share a block.
class loop_created : public error {
 public:
  using error::error;
};

/// Quotient: two blocks carry edges in both directions.
class symmetric_pair : public error {
 public:
  using error::error;
};

class not_tripartite : public error {
 public:
  using error::error;
};

class not_tournament : public error {
 public:
  using error::error;
};

/// Expected a bipartite digraph with all edges directed across one way.
class not_bipartite_oriented : public error {
 public:
  using error::error;
};

class not_one_arc_transitive : public error {
 public:
  using error::error;
};

class classes_not_isomorphic : public error {
 public:
  using error::error;
};

class not_applicable : public error {
 public:
  using error::error;
};

class not_equivalence : public error {
 public:
  using error::error;
};

class not_complete_multipartite : public error {
 public:
  using error::error;
};

class not_poset : public error {
 public:
  using error::error;
};

class invalid_partial_map : public error {
 public:
  using error::error;
};

class unsatisfiable : public error {
 public:
  using error::error;
};

class empty_edge_set : public error {
 public:
  using error::error;
};

// ---------------------------------------------------------------------------
// Digraph

/// Immutable finite digraph on vertices 0..n-1.  Edges are kept sorted;
/// construction rejects loops, symmetric pairs and out-of-range endpoints.
class Digraph {
 public:
  Digraph() = default;

  Digraph(Vertex vertex_count, EdgeList edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_)
        throw invariant_violation("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
      if (u == v)
        throw invariant_violation("loop at vertex " + std::to_string(u));
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    for (const auto& [u, v] : edges_)
      if (std::binary_search(edges_.begin(), edges_.end(), Edge{v, u}))
        throw invariant_violation("symmetric pair between " +
                                  std::to_string(u) + " and " +
                                  std::to_string(v));
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
  }

  Vertex vertex_count() const { return n_; }
  const EdgeList& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  bool adjacent(Vertex u, Vertex v) const {
    return has_edge(u, v) || has_edge(v, u);
  }

  const std::vector<Vertex>& out_neighbours(Vertex v) const {
    check_vertex(v);
    return out_[v];
  }

  const std::vector<Vertex>& in_neighbours(Vertex v) const {
    check_vertex(v);
    return in_[v];
  }

  Vertex out_degree(Vertex v) const {
    check_vertex(v);
    return static_cast<Vertex>(out_[v].size());
  }

  Vertex in_degree(Vertex v) const {
    check_vertex(v);
    return static_cast<Vertex>(in_[v].size());
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= n_)
      throw parameter_error("vertex out of range: " + std::to_string(v));
  }

  Vertex n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<Vertex>> out_, in_;
};

// ---------------------------------------------------------------------------
// VertexPartition

/// Ordered blocks covering the vertices of a digraph exactly once.
/// Empty blocks are permitted.
class VertexPartition {
 public:
  VertexPartition() = default;

  VertexPartition(Vertex vertex_count, std::vector<std::vector<Vertex>> blocks)
      : n_(vertex_count), blocks_(std::move(blocks)) {
    std::vector<char> seen(n_, 0);
    std::size_t covered = 0;
    for (auto& block : blocks_) {
      std::sort(block.begin(), block.end());
      for (Vertex v : block) {
        if (v >= n_)
          throw invariant_violation("partition vertex out of range: " +
                                    std::to_string(v));
        if (seen[v])
          throw invariant_violation("partition blocks overlap at vertex " +
                                    std::to_string(v));
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != n_)
      throw invariant_violation("partition does not cover all vertices");
    block_of_.assign(n_, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (Vertex v : blocks_[b]) block_of_[v] = b;
  }

  static VertexPartition singletons(Vertex n) {
    std::vector<std::vector<Vertex>> blocks(n);
    for (Vertex v = 0; v < n; ++v) blocks[v] = {v};
    return VertexPartition(n, std::move(blocks));
  }

  Vertex vertex_count() const { return n_; }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::size_t block_of(Vertex v) const {
    if (v >= n_)
      throw parameter_error("vertex out of range: " + std::to_string(v));
    return block_of_[v];
  }

  friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

// ---------------------------------------------------------------------------
// Structural operations

enum class Direction { out, in };

struct InducedSubdigraph {
  Digraph digraph;
  /// new index -> original vertex, ascending
  std::vector<Vertex> vertices;
};

/// Subdigraph induced by a vertex subset.  The result is labeled by the
/// ascending order of the subset, so vertices[i] is the original name of
/// new vertex i.
inline InducedSubdigraph induced_subdigraph(const Digraph& d,
                                            std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Vertex v : subset)
    if (v >= d.vertex_count())
      throw parameter_error("subset vertex out of range: " +
                            std::to_string(v));
  std::vector<Vertex> rank(d.vertex_count(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) rank[subset[i]] = i;
  EdgeList edges;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (Vertex w : d.out_neighbours(subset[i]))
      if (std::binary_search(subset.begin(), subset.end(), w))
        edges.emplace_back(static_cast<Vertex>(i), rank[w]);
  return {Digraph(static_cast<Vertex>(subset.size()), std::move(edges)),
          std::move(subset)};
}

inline std::vector<Vertex> neighbours(const Digraph& d, Vertex v,
                                      Direction dir) {
  return dir == Direction::out ? d.out_neighbours(v) : d.in_neighbours(v);
}

/// D^+(v) or D^-(v): the digraph induced by the chosen neighbourhood.
inline Digraph local_digraph(const Digraph& d, Vertex v, Direction dir) {
  return induced_subdigraph(d, neighbours(d, v, dir)).digraph;
}

/// Undirected edge set {u,v} with u < v, sorted.
inline EdgeList underlying_graph(const Digraph& d) {
  EdgeList und;
  und.reserve(d.edge_count());
  for (const auto& [u, v] : d.edges())
    und.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(und.begin(), und.end());
  und.erase(std::unique(und.begin(), und.end()), und.end());
  return und;
}

/// Weakly connected components (components of the underlying graph),
/// ordered by smallest member.
inline VertexPartition components(const Digraph& d) {
  const Vertex n = d.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      blocks[id].push_back(v);
      for (Vertex w : d.out_neighbours(v))
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      for (Vertex w : d.in_neighbours(v))
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
  }
  return VertexPartition(n, std::move(blocks));
}

inline bool is_connected(const Digraph& d) {
  return components(d).block_count() <= 1;
}

/// Diameter of the underlying graph.  Empty digraph: 0 by convention;
/// disconnected: nullopt (the paper's infinity).
inline std::optional<Vertex> diameter(const Digraph& d) {
  const Vertex n = d.vertex_count();
  if (n == 0) return 0;
  Vertex best = 0;
  std::vector<Vertex> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), n);
    dist[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    Vertex reached = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      best = std::max(best, dist[v]);
      auto visit = [&](Vertex w) {
        if (dist[w] == n) {
          dist[w] = dist[v] + 1;
          ++reached;
          q.push(w);
        }
      };
      for (Vertex w : d.out_neighbours(v)) visit(w);
      for (Vertex w : d.in_neighbours(v)) visit(w);
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

/// Lexicographic product D[E]: vertex (x, x') is x * |VE| + x'; edge
/// (x,x')(y,y') iff xy in ED, or x = y and x'y' in EE.
inline Digraph lexicographic_product(const Digraph& d, const Digraph& e) {
  const Vertex nd = d.vertex_count(), ne = e.vertex_count();
  EdgeList edges;
  edges.reserve(d.edge_count() * ne * ne + nd * e.edge_count());
  for (const auto& [x, y] : d.edges())
    for (Vertex a = 0; a < ne; ++a)
      for (Vertex b = 0; b < ne; ++b)
        edges.emplace_back(x * ne + a, y * ne + b);
  for (Vertex x = 0; x < nd; ++x)
    for (const auto& [a, b] : e.edges())
      edges.emplace_back(x * ne + a, x * ne + b);
  return Digraph(nd * ne, std::move(edges));
}

/// Vertex-shifted union in list order.
inline Digraph disjoint_union(std::span<const Digraph> parts) {
  Vertex n = 0;
  EdgeList edges;
  for (const Digraph& p : parts) {
    for (const auto& [u, v] : p.edges()) edges.emplace_back(n + u, n + v);
    n += p.vertex_count();
  }
  return Digraph(n, std::move(edges));
}

inline Digraph disjoint_union(std::initializer_list<Digraph> parts) {
  return disjoint_union(std::span<const Digraph>(parts.begin(), parts.size()));
}

inline Digraph reverse(const Digraph& d) {
  EdgeList edges;
  edges.reserve(d.edge_count());
  for (const auto& [u, v] : d.edges()) edges.emplace_back(v, u);
  return Digraph(d.vertex_count(), std::move(edges));
}

/// Quotient by a partition: block i becomes vertex i.  Throws loop_created
/// if two adjacent vertices share a block, symmetric_pair if two blocks are
/// joined in both directions; either means the relation is inadmissible.
inline Digraph quotient(const Digraph& d, const VertexPartition& p) {
  if (p.vertex_count() != d.vertex_count())
    throw parameter_error("partition does not match digraph");
  const std::size_t k = p.block_count();
  std::vector<std::vector<char>> cross(k, std::vector<char>(k, 0));
  for (const auto& [u, v] : d.edges()) {
    const std::size_t bu = p.block_of(u), bv = p.block_of(v);
    if (bu == bv)
      throw loop_created("adjacent vertices " + std::to_string(u) + " and " +
                         std::to_string(v) + " share a block");
    cross[bu][bv] = 1;
  }
  EdgeList edges;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (cross[a][b]) {
        if (cross[b][a])
          throw symmetric_pair("blocks " + std::to_string(a) + " and " +
                               std::to_string(b) +
                               " are joined in both directions");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
  return Digraph(static_cast<Vertex>(k), std::move(edges));
}

/// Directed tripartite complement: edge set (union of V_i x V_{i+1}) \ ED.
/// Requires every edge of d to run from block i to block i+1 (mod 3).
inline Digraph tripartite_complement(const Digraph& d,
                                     const VertexPartition& p) {
  if (p.vertex_count() != d.vertex_count())
    throw parameter_error("partition does not match digraph");
  if (p.block_count() != 3)
    throw not_tripartite("expected exactly 3 blocks, got " +
                         std::to_string(p.block_count()));
  for (const auto& [u, v] : d.edges())
    if (p.block_of(v) != (p.block_of(u) + 1) % 3)
      throw not_tripartite("edge " + std::to_string(u) + "->" +
                           std::to_string(v) +
                           " violates the cyclic orientation");
  EdgeList edges;
  for (std::size_t i = 0; i < 3; ++i)
    for (Vertex u : p.blocks()[i])
      for (Vertex v : p.blocks()[(i + 1) % 3])
        if (!d.has_edge(u, v)) edges.emplace_back(u, v);
  return Digraph(d.vertex_count(), std::move(edges));
}

/// Every two vertices adjacent.
inline bool is_tournament(const Digraph& d) {
  const Vertex n = d.vertex_count();
  return d.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace digsym

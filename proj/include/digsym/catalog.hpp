// Constructors for the digraph families used throughout: independent sets,
// directed cycles, tournaments, circle digraphs, matching complements,
// wedges, Y_k, semi-generic orientations, posets, the P(3) twist and cone,
// random approximations of generic structures, and radius-bounded
// truncations of the infinite tree-like families.
//
// Vertex labelings are deterministic and documented per constructor so
// tests can reference vertices directly.  Seeded constructors are pure
// functions of their inputs.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "digsym/digraph.hpp"

namespace digsym {

struct PartitionedDigraph {
  Digraph digraph;
  VertexPartition partition;
};

/// A finite piece of an infinite family.  Local claims (degrees,
/// neighbourhood shapes, reachability classes) hold on interior vertices
/// only: an interior vertex carries its full intended neighbourhood.
struct TruncationReport {
  Digraph digraph;
  std::vector<Vertex> interior;
  std::string family;
  Vertex radius = 0;
};

// ---------------------------------------------------------------------------
// Deterministic seeded randomness (splitmix64; identical on every platform)

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  bool bit() { return next() & 1; }

  /// Uniform value in [0, k).
  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % k;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % k;
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Finite families

/// I_n: n vertices, no edges.
inline Digraph independent(Vertex n) { return Digraph(n, {}); }

/// C_m: edges i -> (i+1 mod m).
inline Digraph directed_cycle(Vertex m) {
  if (m < 3) throw parameter_error("directed cycle needs m >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return Digraph(m, std::move(edges));
}

/// Linear order as a digraph: i -> j iff i < j.
inline Digraph transitive_tournament(Vertex n) {
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Digraph(n, std::move(edges));
}

/// One uniformly directed edge per unordered pair.
inline Digraph random_tournament(Vertex n, std::uint64_t seed) {
  SeededRng rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      edges.emplace_back(rng.bit() ? Edge{i, j} : Edge{j, i});
  return Digraph(n, std::move(edges));
}

/// Rotational circle digraph: vertices at angles 2*pi*j/n, edge j -> k iff
/// ((k - j) mod n) lies in 1..t.  Asymmetry forces t < n/2.
inline Digraph circle_digraph(Vertex n, Vertex t) {
  if (n < 3) throw parameter_error("circle digraph needs n >= 3");
  if (t < 1 || 2 * t >= n)
    throw parameter_error("circle digraph needs 1 <= t < n/2");
  EdgeList edges;
  for (Vertex j = 0; j < n; ++j)
    for (Vertex s = 1; s <= t; ++s) edges.emplace_back(j, (j + s) % n);
  return Digraph(n, std::move(edges));
}

/// Finite stand-in for S(2): the rotational tournament on odd n.
inline Digraph s2_approx(Vertex n) {
  if (n < 3 || n % 2 == 0) throw parameter_error("s2 approximation needs odd n >= 3");
  return circle_digraph(n, (n - 1) / 2);
}

/// Finite stand-in for S(3): steps strictly below n/3 (angle < 2*pi/3).
inline Digraph s3_approx(Vertex n) {
  if (n < 4 || n % 3 == 0)
    throw parameter_error("s3 approximation needs n >= 4 not divisible by 3");
  return circle_digraph(n, (n + 2) / 3 - 1);
}

/// CP_k: complete bipartite K_{k,k} minus a perfect matching, all edges
/// X -> Y.  X = 0..k-1, Y = k..2k-1, matching pairs (i, k+i).
inline PartitionedDigraph cp(Vertex k) {
  if (k < 2) throw parameter_error("cp needs k >= 2");
  EdgeList edges;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < k; ++j)
      if (i != j) edges.emplace_back(i, k + j);
  std::vector<Vertex> x(k), y(k);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), k);
  return {Digraph(2 * k, std::move(edges)),
          VertexPartition(2 * k, {std::move(x), std::move(y)})};
}

/// K_{k,l} with all edges X -> Y.  X = 0..k-1, Y = k..k+l-1.
inline PartitionedDigraph complete_bipartite(Vertex k, Vertex l) {
  if (k < 1 || l < 1) throw parameter_error("complete bipartite needs k, l >= 1");
  EdgeList edges;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < l; ++j) edges.emplace_back(i, k + j);
  std::vector<Vertex> x(k), y(l);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), k);
  return {Digraph(k + l, std::move(edges)),
          VertexPartition(k + l, {std::move(x), std::move(y)})};
}

/// CP'_k: x_i -> y_j for i != j plus the reverse matching y_i -> x_i.
/// Underlying graph is complete bipartite.
inline PartitionedDigraph cpk_prime(Vertex k) {
  if (k < 2) throw parameter_error("cpk_prime needs k >= 2");
  EdgeList edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = 0; j < k; ++j)
      if (i != j) edges.emplace_back(i, k + j);
    edges.emplace_back(k + i, i);
  }
  std::vector<Vertex> x(k), y(k);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), k);
  return {Digraph(2 * k, std::move(edges)),
          VertexPartition(2 * k, {std::move(x), std::move(y)})};
}

/// T^+: a tournament with a new apex (index |VT|) beating every vertex.
inline Digraph cone(const Digraph& t) {
  if (!is_tournament(t)) throw not_tournament("cone requires a tournament");
  const Vertex n = t.vertex_count();
  EdgeList edges = t.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(n, v);
  return Digraph(n + 1, std::move(edges));
}

/// T^: two copies of T^+ (copy 2 shifted by |VT|+1) with reversed cross
/// edges both ways: for every edge u -> v of T^+, copy-1 v -> copy-2 u and
/// copy-2 v -> copy-1 u.  Each vertex's unique non-neighbour is its twin.
inline Digraph t_wedge(const Digraph& t) {
  const Digraph plus = cone(t);
  const Vertex np = plus.vertex_count();
  EdgeList edges;
  for (const auto& [u, v] : plus.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(np + u, np + v);
    edges.emplace_back(v, np + u);
    edges.emplace_back(np + v, u);
  }
  return Digraph(2 * np, std::move(edges));
}

/// Y_k: parts V_i = {i*k .. i*k+k-1}, i = 0,1,2; edges (i,j) -> (i+1,j')
/// for all j' != j.  The three matchings are aligned on equal indices, the
/// unique choice making the tripartite complement k disjoint triangles.
inline PartitionedDigraph y_digraph(Vertex k) {
  if (k < 3) throw parameter_error("y digraph needs k >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex j = 0; j < k; ++j)
      for (Vertex j2 = 0; j2 < k; ++j2)
        if (j2 != j) edges.emplace_back(i * k + j, ((i + 1) % 3) * k + j2);
  std::vector<std::vector<Vertex>> parts(3);
  for (Vertex i = 0; i < 3; ++i) {
    parts[i].resize(k);
    std::iota(parts[i].begin(), parts[i].end(), i * k);
  }
  return {Digraph(3 * k, std::move(edges)),
          VertexPartition(3 * k, std::move(parts))};
}

/// Complete multipartite orientation satisfying the semi-generic parity
/// condition: each vertex draws one bit per opposing class, and the edge
/// between x (earlier class A) and y (later class B) runs x -> y exactly
/// when b(x,B) = b(y,A).  Any 2x2 cross-class quadruple then spans an even
/// number of forward edges.
inline PartitionedDigraph parity_orientation(const std::vector<Vertex>& sizes,
                                             std::uint64_t seed) {
  if (sizes.size() < 2) throw parameter_error("parity orientation needs >= 2 classes");
  SeededRng rng(seed);
  const std::size_t k = sizes.size();
  Vertex n = 0;
  std::vector<Vertex> offset(k);
  for (std::size_t c = 0; c < k; ++c) {
    offset[c] = n;
    n += sizes[c];
  }
  std::vector<std::size_t> class_of(n);
  for (std::size_t c = 0; c < k; ++c)
    for (Vertex j = 0; j < sizes[c]; ++j) class_of[offset[c] + j] = c;
  std::vector<std::vector<char>> bit(n, std::vector<char>(k, 0));
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t c = 0; c < k; ++c)
      if (c != class_of[v]) bit[v][c] = rng.bit() ? 1 : 0;
  EdgeList edges;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (Vertex i = 0; i < sizes[a]; ++i)
        for (Vertex j = 0; j < sizes[b]; ++j) {
          const Vertex x = offset[a] + i, y = offset[b] + j;
          if (bit[x][b] == bit[y][a])
            edges.emplace_back(x, y);
          else
            edges.emplace_back(y, x);
        }
  std::vector<std::vector<Vertex>> blocks(k);
  for (std::size_t c = 0; c < k; ++c) {
    blocks[c].resize(sizes[c]);
    std::iota(blocks[c].begin(), blocks[c].end(), offset[c]);
  }
  return {Digraph(n, std::move(edges)), VertexPartition(n, std::move(blocks))};
}

/// Transitive closure of a random DAG over a sampled linear order.  The
/// output is a partial order as a digraph: transitive, no induced 2-arc.
inline Digraph random_poset(Vertex n, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (Vertex i = n; i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<Vertex> pos(n);
  for (Vertex i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (pos[u] < pos[v] && rng.bit()) below[u][v] = 1;
  // transitive closure along the sampled order
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (below[order[a]][order[b]])
        for (Vertex c = 0; c < n; ++c)
          if (below[order[b]][order[c]]) below[order[a]][order[c]] = 1;
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (below[u][v]) edges.emplace_back(u, v);
  return Digraph(n, std::move(edges));
}

/// The P(3) state twist.  Within-block pairs are unchanged; for x in P_i,
/// y in P_{i+1 mod 3} the cross state is permuted by the 3-cycle
///   x->y  =>  not adjacent  =>  y->x  =>  x->y.
/// Applying the twist three times returns the input.
inline Digraph p3_twist(const Digraph& d, const VertexPartition& p) {
  if (p.vertex_count() != d.vertex_count())
    throw parameter_error("partition does not match digraph");
  if (p.block_count() != 3)
    throw parameter_error("p3 twist needs exactly 3 blocks");
  EdgeList edges;
  for (const auto& [u, v] : d.edges())
    if (p.block_of(u) == p.block_of(v)) edges.emplace_back(u, v);
  for (std::size_t i = 0; i < 3; ++i)
    for (Vertex x : p.blocks()[i])
      for (Vertex y : p.blocks()[(i + 1) % 3]) {
        if (d.has_edge(y, x))
          edges.emplace_back(x, y);
        else if (!d.has_edge(x, y))
          edges.emplace_back(y, x);
      }
  return Digraph(d.vertex_count(), std::move(edges));
}

/// Apex over the twist: new vertex p (index n) with p -> P_1, P_2 -> p,
/// and p not adjacent to P_0.
inline Digraph p3_cone(const Digraph& d, const VertexPartition& p) {
  const Digraph twisted = p3_twist(d, p);
  const Vertex apex = d.vertex_count();
  EdgeList edges = twisted.edges();
  for (Vertex x : p.blocks()[1]) edges.emplace_back(apex, x);
  for (Vertex x : p.blocks()[2]) edges.emplace_back(x, apex);
  return Digraph(apex + 1, std::move(edges));
}

/// One-sided exact-witness bipartite digraph: X = 0..a-1; one Y-vertex
/// y_S = a + S per subset mask S of X; edges x -> y_S iff x in S.  Every
/// disjoint (A, B) over X has the exact witness y_A.
inline PartitionedDigraph powerset_bipartite(Vertex a) {
  if (a > 20) throw guard_exceeded("powerset bipartite capped at a <= 20");
  const Vertex ny = Vertex{1} << a;
  EdgeList edges;
  for (Vertex s = 0; s < ny; ++s)
    for (Vertex x = 0; x < a; ++x)
      if (s >> x & 1) edges.emplace_back(x, a + s);
  std::vector<Vertex> xs(a), ys(ny);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), a);
  return {Digraph(a + ny, std::move(edges)),
          VertexPartition(a + ny, {std::move(xs), std::move(ys)})};
}

// ---------------------------------------------------------------------------
// Random members of generic classes.  Class membership is guaranteed
// (greedy insertion with rejection); genericity itself is only measured
// afterwards, by extension_depth.

namespace detail {

inline VertexPartition two_sides(Vertex a, Vertex b) {
  std::vector<Vertex> x(a), y(b);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), a);
  return VertexPartition(a + b, {std::move(x), std::move(y)});
}

}  // namespace detail

/// Random bipartite digraph: sides of size a and b, each cross pair gets
/// an X -> Y edge with probability 1/2.
inline PartitionedDigraph random_bipartite(Vertex a, Vertex b,
                                           std::uint64_t seed) {
  SeededRng rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j)
      if (rng.bit()) edges.emplace_back(i, a + j);
  return {Digraph(a + b, std::move(edges)), detail::two_sides(a, b)};
}

/// Random 2-partite digraph: each cross pair uniformly x->y, y->x or
/// non-adjacent.
inline PartitionedDigraph random_two_partite(Vertex a, Vertex b,
                                             std::uint64_t seed) {
  SeededRng rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j)
      switch (rng.below(3)) {
        case 0: edges.emplace_back(i, a + j); break;
        case 1: edges.emplace_back(a + j, i); break;
        default: break;
      }
  return {Digraph(a + b, std::move(edges)), detail::two_sides(a, b)};
}

/// Random orientation-of-a-bipartite-graph instance; structurally the same
/// class as random_two_partite, kept separate because it approximates a
/// different limit (measured by the orientation extension property).
inline PartitionedDigraph random_orientation(Vertex a, Vertex b,
                                             std::uint64_t seed) {
  return random_two_partite(a, b, seed ^ 0x6f7269656e74ULL);
}

/// Random orientation of a complete n-partite graph: every cross pair is
/// adjacent, direction uniform.
inline PartitionedDigraph random_n_partite(const std::vector<Vertex>& sizes,
                                           std::uint64_t seed) {
  if (sizes.size() < 2) throw parameter_error("n-partite needs >= 2 classes");
  SeededRng rng(seed);
  Vertex n = 0;
  std::vector<Vertex> offset(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    offset[c] = n;
    n += sizes[c];
  }
  EdgeList edges;
  for (std::size_t a = 0; a < sizes.size(); ++a)
    for (std::size_t b = a + 1; b < sizes.size(); ++b)
      for (Vertex i = 0; i < sizes[a]; ++i)
        for (Vertex j = 0; j < sizes[b]; ++j) {
          const Vertex x = offset[a] + i, y = offset[b] + j;
          edges.emplace_back(rng.bit() ? Edge{x, y} : Edge{y, x});
        }
  std::vector<std::vector<Vertex>> blocks(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    blocks[c].resize(sizes[c]);
    std::iota(blocks[c].begin(), blocks[c].end(), offset[c]);
  }
  return {Digraph(n, std::move(edges)), VertexPartition(n, std::move(blocks))};
}

namespace detail {

// Pair states during greedy insertion: 0 = none, 1 = u->v, 2 = v->u.
using StateMatrix = std::vector<std::vector<char>>;

inline char state_between(const StateMatrix& m, Vertex u, Vertex v) {
  return m[u][v];
}

// Does some tournament member of `forbidden` appear on a vertex subset
// containing `v`?  Brute force over pairwise-adjacent subsets; members are
// small, so permutation matching is enough.
inline bool creates_forbidden_tournament(const StateMatrix& m, Vertex v,
                                         const std::vector<Digraph>& forbidden) {
  const Vertex n = static_cast<Vertex>(m.size());
  for (const Digraph& h : forbidden) {
    const Vertex hn = h.vertex_count();
    if (hn == 0 || hn > n) continue;
    // candidates: vertices adjacent to v (plus v itself)
    std::vector<Vertex> cand;
    for (Vertex u = 0; u < n; ++u)
      if (u != v && m[u][v] != 0) cand.push_back(u);
    if (cand.size() + 1 < hn) continue;
    std::vector<Vertex> pick(hn - 1);
    std::vector<Vertex> subset(hn);
    auto try_subsets = [&](auto&& self, std::size_t from, std::size_t got) -> bool {
      if (got == pick.size()) {
        subset.assign(pick.begin(), pick.end());
        subset.push_back(v);
        for (std::size_t i = 0; i < subset.size(); ++i)
          for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (m[subset[i]][subset[j]] == 0) return false;
        // permutation match against h
        std::vector<Vertex> perm(hn);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool ok = true;
          for (Vertex i = 0; i < hn && ok; ++i)
            for (Vertex j = 0; j < hn && ok; ++j) {
              if (i == j) continue;
              const bool want = h.has_edge(i, j);
              const bool have = m[subset[perm[i]]][subset[perm[j]]] == 1
                                    ? subset[perm[i]] < subset[perm[j]]
                                          ? true
                                          : false
                                    : false;
              (void)have;
              const char st = m[subset[perm[i]]][subset[perm[j]]];
              const bool actual = (st == 1);
              if (want != actual) ok = false;
            }
          if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
      }
      for (std::size_t k = from; k < cand.size(); ++k) {
        pick[got] = cand[k];
        if (self(self, k + 1, got + 1)) return true;
      }
      return false;
    };
    if (hn == 1) return true;  // a 1-vertex member forbids everything
    if (try_subsets(try_subsets, 0, 0)) return true;
  }
  return false;
}

// Does adding v (states already in m) create an independent set of size
// `bound`?  Only sets containing v can be new.
inline bool creates_independent_set(const StateMatrix& m, Vertex v,
                                    Vertex bound) {
  if (bound == 0) return true;
  const Vertex n = static_cast<Vertex>(m.size());
  std::vector<Vertex> cand;
  for (Vertex u = 0; u < n; ++u)
    if (u != v && m[u][v] == 0) cand.push_back(u);
  if (cand.size() + 1 < bound) return false;
  std::vector<Vertex> pick;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() + 1 == bound) return true;
    for (std::size_t k = from; k < cand.size(); ++k) {
      bool ok = true;
      for (Vertex w : pick)
        if (m[w][cand[k]] != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(cand[k]);
      if (self(self, k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

inline Digraph from_states(const StateMatrix& m) {
  const Vertex n = static_cast<Vertex>(m.size());
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (m[u][v] == 1) edges.emplace_back(u, v);
      if (m[u][v] == 2) edges.emplace_back(v, u);
    }
  return Digraph(n, std::move(edges));
}

inline void set_state(StateMatrix& m, Vertex u, Vertex v, char st) {
  m[u][v] = st;
  m[v][u] = static_cast<char>(st == 1 ? 2 : st == 2 ? 1 : 0);
}

}  // namespace detail

/// Random H-free digraph on n vertices by greedy insertion with rejection;
/// the output never contains a tournament isomorphic to a member of
/// `forbidden`.  Unsatisfiable when a member has one vertex.
inline Digraph random_h_free(const std::vector<Digraph>& forbidden, Vertex n,
                             std::uint64_t seed) {
  for (const Digraph& h : forbidden) {
    if (!is_tournament(h))
      throw parameter_error("forbidden members must be tournaments");
    if (h.vertex_count() == 1 && n >= 1)
      throw unsatisfiable("I_1-free digraph cannot have vertices");
  }
  SeededRng rng(seed);
  detail::StateMatrix m;
  for (Vertex v = 0; v < n; ++v) {
    m.push_back(std::vector<char>(v + 1, 0));
    for (auto& row : m) row.resize(v + 1, 0);
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      for (Vertex u = 0; u < v; ++u)
        detail::set_state(m, u, v, static_cast<char>(rng.below(3)));
      if (!detail::creates_forbidden_tournament(m, v, forbidden)) placed = true;
    }
    if (!placed)  // an isolated vertex cannot complete any tournament
      for (Vertex u = 0; u < v; ++u) detail::set_state(m, u, v, 0);
  }
  return detail::from_states(m);
}

/// Random I_bound-free digraph on n vertices (independence number < bound).
inline Digraph random_i_free(Vertex bound, Vertex n, std::uint64_t seed) {
  if (bound < 2 && n >= 1)
    throw unsatisfiable("independence bound below 2 admits no vertices");
  SeededRng rng(seed);
  detail::StateMatrix m;
  for (Vertex v = 0; v < n; ++v) {
    m.push_back(std::vector<char>(v + 1, 0));
    for (auto& row : m) row.resize(v + 1, 0);
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      for (Vertex u = 0; u < v; ++u)
        detail::set_state(m, u, v, static_cast<char>(rng.below(3)));
      if (!detail::creates_independent_set(m, v, bound)) placed = true;
    }
    if (!placed)  // adjacent to everything: no new independent set
      for (Vertex u = 0; u < v; ++u)
        detail::set_state(m, u, v, rng.bit() ? 1 : 2);
  }
  return detail::from_states(m);
}

// ---------------------------------------------------------------------------
// Truncations of infinite families

namespace detail {
constexpr std::size_t kTruncationVertexLimit = 200000;
}

/// Ball of radius r of the (d_in, d_out)-regular directed tree around a
/// root (vertex 0).  Interior = vertices at distance < r; each has exactly
/// d_in in-neighbours and d_out out-neighbours.
inline TruncationReport directed_tree_truncation(Vertex d_in, Vertex d_out,
                                                 Vertex r) {
  if (d_in < 1 || d_out < 1)
    throw parameter_error("tree truncation needs d_in, d_out >= 1");
  EdgeList edges;
  std::vector<Vertex> depth{0};
  std::vector<Vertex> indeg{0}, outdeg{0};
  std::vector<Vertex> interior;
  for (Vertex v = 0; v < depth.size(); ++v) {
    if (depth[v] >= r) continue;
    interior.push_back(v);
    while (indeg[v] < d_in) {
      const Vertex w = static_cast<Vertex>(depth.size());
      if (w >= detail::kTruncationVertexLimit)
        throw guard_exceeded("tree truncation too large");
      depth.push_back(depth[v] + 1);
      indeg.push_back(0);
      outdeg.push_back(1);
      edges.emplace_back(w, v);
      ++indeg[v];
    }
    while (outdeg[v] < d_out) {
      const Vertex w = static_cast<Vertex>(depth.size());
      if (w >= detail::kTruncationVertexLimit)
        throw guard_exceeded("tree truncation too large");
      depth.push_back(depth[v] + 1);
      indeg.push_back(1);
      outdeg.push_back(0);
      edges.emplace_back(v, w);
      ++outdeg[v];
    }
  }
  return {Digraph(static_cast<Vertex>(depth.size()), std::move(edges)),
          std::move(interior),
          "tree(" + std::to_string(d_in) + "," + std::to_string(d_out) + ")",
          r};
}

/// Block tree of copies of a bipartite digraph Delta to block-depth r.
/// Every interior vertex lies in exactly two copies, holding its
/// successors in one and its predecessors in the other.
inline TruncationReport dl_truncation(const PartitionedDigraph& delta,
                                      Vertex r) {
  if (r < 1) throw parameter_error("dl truncation needs r >= 1");
  const Digraph& dg = delta.digraph;
  const VertexPartition& sides = delta.partition;
  if (sides.block_count() != 2 || sides.vertex_count() != dg.vertex_count())
    throw not_bipartite_oriented("dl truncation needs a 2-block partition");
  for (const auto& [u, v] : dg.edges())
    if (sides.block_of(u) != 0 || sides.block_of(v) != 1)
      throw not_bipartite_oriented("dl truncation needs all edges X -> Y");
  if (sides.blocks()[0].empty() || sides.blocks()[1].empty())
    throw parameter_error("dl truncation needs nonempty sides");

  EdgeList edges;
  Vertex next_id = 0;
  // pending: vertex, side it must play in its second block, created depth
  struct Pending {
    Vertex vertex;
    int side;
  };
  std::vector<Pending> frontier, next_frontier;

  auto instantiate = [&](Vertex anchor_host, int anchor_side,
                         std::vector<Pending>& out) {
    // anchor_side < 0: free-standing central copy
    const Vertex anchor_vertex =
        anchor_side >= 0 ? sides.blocks()[anchor_side][0] : 0;
    std::vector<Vertex> map(dg.vertex_count());
    for (Vertex v = 0; v < dg.vertex_count(); ++v) {
      if (anchor_side >= 0 && v == anchor_vertex) {
        map[v] = anchor_host;
        continue;
      }
      if (next_id >= detail::kTruncationVertexLimit)
        throw guard_exceeded("dl truncation too large");
      map[v] = next_id++;
      // a vertex on side s has its within-copy role = s; the second block
      // must host the opposite role
      out.push_back({map[v], 1 - static_cast<int>(sides.block_of(v))});
    }
    for (const auto& [u, v] : dg.edges()) edges.emplace_back(map[u], map[v]);
  };

  instantiate(0, -1, frontier);
  std::vector<Vertex> interior;
  for (Vertex depth = 2; depth <= r; ++depth) {
    next_frontier.clear();
    for (const Pending& p : frontier) {
      interior.push_back(p.vertex);
      instantiate(p.vertex, p.side, next_frontier);
    }
    frontier.swap(next_frontier);
  }
  std::sort(interior.begin(), interior.end());
  return {Digraph(next_id, std::move(edges)), std::move(interior),
          "dl(|V|=" + std::to_string(dg.vertex_count()) + ")", r};
}

/// Tree of tournament blocks to block-depth r: interior vertices lie in
/// exactly lambda copies of T, pairwise sharing only that vertex.
inline TruncationReport x_lambda_truncation(const Digraph& t, Vertex lambda,
                                            Vertex r) {
  if (!is_tournament(t) || t.vertex_count() < 2)
    throw not_tournament("x_lambda needs a tournament with >= 2 vertices");
  if (lambda < 2 || r < 1)
    throw parameter_error("x_lambda needs lambda >= 2 and r >= 1");
  const Vertex tn = t.vertex_count();
  EdgeList edges;
  Vertex next_id = 0;
  std::vector<Vertex> frontier, next_frontier;

  auto instantiate = [&](Vertex anchor_host, bool has_anchor,
                         std::vector<Vertex>& out) {
    std::vector<Vertex> map(tn);
    for (Vertex v = 0; v < tn; ++v) {
      if (has_anchor && v == 0) {
        map[v] = anchor_host;
        continue;
      }
      if (next_id >= detail::kTruncationVertexLimit)
        throw guard_exceeded("x_lambda truncation too large");
      map[v] = next_id++;
      out.push_back(map[v]);
    }
    for (const auto& [u, v] : t.edges()) edges.emplace_back(map[u], map[v]);
  };

  instantiate(0, false, frontier);
  std::vector<Vertex> interior;
  for (Vertex depth = 2; depth <= r; ++depth) {
    next_frontier.clear();
    for (Vertex v : frontier) {
      interior.push_back(v);
      for (Vertex extra = 1; extra < lambda; ++extra)
        instantiate(v, true, next_frontier);
    }
    frontier.swap(next_frontier);
  }
  std::sort(interior.begin(), interior.end());
  return {Digraph(next_id, std::move(edges)), std::move(interior),
          "x_lambda(|T|=" + std::to_string(tn) +
              ",lambda=" + std::to_string(lambda) + ")",
          r};
}

namespace detail {

// Shared scaffolding for M(k,m) and M'(2m): the radius-r ball of a
// semiregular tree with root on the X side, one subdivision vertex per
// tree edge.  Output vertices are the subdivision vertices.
struct SubdividedBall {
  // tree vertices
  std::vector<Vertex> tree_depth;
  std::vector<bool> tree_is_x;
  std::vector<std::vector<Vertex>> tree_subdivs;  // incident subdivision ids
  // subdivision vertices
  std::vector<Vertex> sub_x, sub_y;  // tree endpoints of each subdivision

  bool full(Vertex tree_vertex, Vertex degree) const {
    return tree_subdivs[tree_vertex].size() == degree;
  }
};

inline SubdividedBall build_subdivided_ball(Vertex x_degree, Vertex y_degree,
                                            Vertex r) {
  SubdividedBall ball;
  ball.tree_depth.push_back(0);
  ball.tree_is_x.push_back(true);
  ball.tree_subdivs.emplace_back();
  for (Vertex v = 0; v < ball.tree_depth.size(); ++v) {
    if (ball.tree_depth[v] >= r) continue;
    const Vertex want = ball.tree_is_x[v] ? x_degree : y_degree;
    while (ball.tree_subdivs[v].size() < want) {
      if (ball.tree_depth.size() >= kTruncationVertexLimit)
        throw guard_exceeded("subdivision truncation too large");
      const Vertex child = static_cast<Vertex>(ball.tree_depth.size());
      ball.tree_depth.push_back(ball.tree_depth[v] + 1);
      ball.tree_is_x.push_back(!ball.tree_is_x[v]);
      ball.tree_subdivs.emplace_back();
      const Vertex sub = static_cast<Vertex>(ball.sub_x.size());
      const Vertex xv = ball.tree_is_x[v] ? v : child;
      const Vertex yv = ball.tree_is_x[v] ? child : v;
      ball.sub_x.push_back(xv);
      ball.sub_y.push_back(yv);
      ball.tree_subdivs[v].push_back(sub);
      ball.tree_subdivs[child].push_back(sub);
    }
  }
  return ball;
}

}  // namespace detail

/// M(k, m): subdivide the radius-r ball of T_{k,m} (X-vertices of degree
/// m), fix a cyclic order on each X-neighbourhood, let sigma be the cyclic
/// successor, add w -> sigma(u) for each Y-vertex y and u, w in N(y) with
/// u != w, then delete the tree vertices.  Interior vertices have
/// in- and out-degree k-1.
inline TruncationReport m_truncation(Vertex k, Vertex m, Vertex r) {
  if (k < 3 || m < 2 || r < 2)
    throw parameter_error("m truncation needs k >= 3, m >= 2, r >= 2");
  auto ball = detail::build_subdivided_ball(m, k, r);
  const Vertex tn = static_cast<Vertex>(ball.tree_depth.size());
  const Vertex sn = static_cast<Vertex>(ball.sub_x.size());

  // sigma per fully expanded X-vertex; order = creation order of N(x)
  std::vector<Vertex> sigma(sn, sn), sigma_inv(sn, sn);
  std::vector<bool> x_full(tn, false), y_full(tn, false);
  for (Vertex t = 0; t < tn; ++t) {
    const auto& inc = ball.tree_subdivs[t];
    if (ball.tree_is_x[t]) {
      x_full[t] = inc.size() == m;
      if (x_full[t])
        for (std::size_t i = 0; i < inc.size(); ++i) {
          sigma[inc[i]] = inc[(i + 1) % inc.size()];
          sigma_inv[inc[(i + 1) % inc.size()]] = inc[i];
        }
    } else {
      y_full[t] = inc.size() == k;
    }
  }

  EdgeList edges;
  for (Vertex t = 0; t < tn; ++t) {
    if (ball.tree_is_x[t] || !y_full[t]) continue;
    const auto& inc = ball.tree_subdivs[t];
    for (Vertex w : inc)
      for (Vertex u : inc)
        if (u != w && sigma[u] != sn) edges.emplace_back(w, sigma[u]);
  }

  std::vector<Vertex> interior;
  for (Vertex v = 0; v < sn; ++v) {
    if (!x_full[ball.sub_x[v]] || !y_full[ball.sub_y[v]]) continue;
    bool ok = true;
    for (Vertex u : ball.tree_subdivs[ball.sub_y[v]])
      if (sigma[u] == sn) ok = false;               // out-edges complete
    if (sigma_inv[v] == sn || !y_full[ball.sub_y[sigma_inv[v]]])
      ok = false;                                   // in-edges complete
    if (ok) interior.push_back(v);
  }
  return {Digraph(sn, std::move(edges)), std::move(interior),
          "m(" + std::to_string(k) + "," + std::to_string(m) + ")", r};
}

/// M'(2m): subdivide the radius-r ball of T_{2,2m} (X-vertices of degree
/// 2m), enumerate each X-neighbourhood 1..2m so that the two neighbours of
/// every Y-vertex get distinct parity, and for each Y-vertex with
/// even-indexed neighbour a and odd-indexed neighbour b add edges from a
/// and sigma(a) to b and sigma(b).  Interior vertices have in- and
/// out-degree 2.
inline TruncationReport m_prime_truncation(Vertex m, Vertex r) {
  if (m < 2 || r < 2) throw parameter_error("m' truncation needs m >= 2, r >= 2");
  const Vertex deg = 2 * m;
  auto ball = detail::build_subdivided_ball(deg, 2, r);
  const Vertex tn = static_cast<Vertex>(ball.tree_depth.size());
  const Vertex sn = static_cast<Vertex>(ball.sub_x.size());

  // index of each subdivision vertex within its X-neighbourhood (1..2m)
  std::vector<Vertex> index(sn, 0);
  std::vector<bool> x_full(tn, false), y_full(tn, false);
  for (Vertex t = 0; t < tn; ++t) {
    const auto& inc = ball.tree_subdivs[t];
    if (!ball.tree_is_x[t]) {
      y_full[t] = inc.size() == 2;
      continue;
    }
    x_full[t] = inc.size() == deg;
    // the subdivision toward the root (first incident, for non-root X)
    // already has a parity constraint from its sibling across the Y-vertex
    std::vector<Vertex> free_indices;
    Vertex constrained = sn;
    if (ball.tree_depth[t] > 0) {
      constrained = inc[0];
      const Vertex y = ball.sub_y[constrained];
      const Vertex sibling = ball.tree_subdivs[y][0] == constrained
                                 ? ball.tree_subdivs[y][1]
                                 : ball.tree_subdivs[y][0];
      // sibling was indexed when its own X-vertex (closer to the root)
      // was processed
      index[constrained] = index[sibling] % 2 == 0 ? 1 : 2;
    }
    for (Vertex i = 1; i <= deg; ++i)
      if (constrained == sn || i != index[constrained])
        free_indices.push_back(i);
    std::size_t next = 0;
    for (Vertex s : inc)
      if (s != constrained) index[s] = free_indices[next++];
  }

  auto sigma = [&](Vertex v) -> Vertex {
    const Vertex x = ball.sub_x[v];
    if (!x_full[x]) return sn;
    const Vertex want = index[v] % deg + 1;
    for (Vertex s : ball.tree_subdivs[x])
      if (index[s] == want) return s;
    return sn;
  };

  EdgeList edges;
  auto y_rule_complete = [&](Vertex y) {
    if (!y_full[y]) return false;
    return x_full[ball.sub_x[ball.tree_subdivs[y][0]]] &&
           x_full[ball.sub_x[ball.tree_subdivs[y][1]]];
  };
  for (Vertex t = 0; t < tn; ++t) {
    if (ball.tree_is_x[t] || !y_full[t]) continue;
    const Vertex u1 = ball.tree_subdivs[t][0], u2 = ball.tree_subdivs[t][1];
    const Vertex a = index[u1] % 2 == 0 ? u1 : u2;
    const Vertex b = a == u1 ? u2 : u1;
    const Vertex sa = sigma(a), sb = sigma(b);
    edges.emplace_back(a, b);
    if (sb != sn) edges.emplace_back(a, sb);
    if (sa != sn) edges.emplace_back(sa, b);
    if (sa != sn && sb != sn) edges.emplace_back(sa, sb);
  }

  // interior: both rule applications feeding this vertex are complete
  std::vector<Vertex> sigma_inv(sn, sn);
  for (Vertex v = 0; v < sn; ++v)
    if (Vertex s = sigma(v); s != sn) sigma_inv[s] = v;
  std::vector<Vertex> interior;
  for (Vertex v = 0; v < sn; ++v) {
    if (!x_full[ball.sub_x[v]]) continue;
    if (!y_rule_complete(ball.sub_y[v])) continue;
    const Vertex u = sigma_inv[v];
    if (u == sn || !y_rule_complete(ball.sub_y[u])) continue;
    interior.push_back(v);
  }
  return {Digraph(sn, std::move(edges)), std::move(interior),
          "m_prime(" + std::to_string(2 * m) + ")", r};
}

/// Finite stand-in for R_m: m parts of size s (part i = [i*s, (i+1)*s));
/// between consecutive parts a random bipartite digraph directed
/// V_i -> V_{i+1 mod m}; no other edges.
inline PartitionedDigraph r_m_approx(Vertex m, Vertex s, std::uint64_t seed) {
  if (m < 3 || s < 1) throw parameter_error("r_m needs m >= 3, s >= 1");
  SeededRng rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex a = 0; a < s; ++a)
      for (Vertex b = 0; b < s; ++b)
        if (rng.bit())
          edges.emplace_back(i * s + a, ((i + 1) % m) * s + b);
  std::vector<std::vector<Vertex>> blocks(m);
  for (Vertex i = 0; i < m; ++i) {
    blocks[i].resize(s);
    std::iota(blocks[i].begin(), blocks[i].end(), i * s);
  }
  return {Digraph(m * s, std::move(edges)),
          VertexPartition(m * s, std::move(blocks))};
}

}  // namespace digsym

// Extension-property depth measurement and class predicates for the
// Fraissé-style target structures: generic bipartite / 2-partite /
// n-partite digraphs, generic orientations, H-free and I_n-free digraphs,
// generic posets, and the semi-generic parity condition.
//
// A finite digraph cannot be generic; extension_depth grades how far it
// gets: the largest d such that every one-point extension demand of size
// <= d has a witness.  Witness search is exhaustive, so depths are exact.

#pragma once

#include <array>
#include <map>

#include "digsym/digraph.hpp"

namespace digsym {

// ---------------------------------------------------------------------------
// Class predicates

/// No tournament of `forbidden` embeds into d (induced and plain
/// containment coincide on tournaments: all pairs are adjacent either way).
inline bool is_h_free(const Digraph& d, std::span<const Digraph> forbidden) {
  const Vertex n = d.vertex_count();
  for (const Digraph& h : forbidden) {
    if (!is_tournament(h))
      throw parameter_error("forbidden members must be tournaments");
    const Vertex hn = h.vertex_count();
    if (hn > n) continue;
    std::vector<Vertex> pick;
    auto rec = [&](auto&& self, Vertex from) -> bool {
      if (pick.size() == hn) {
        // pairwise adjacent by construction; match h by brute permutation
        std::vector<Vertex> perm(hn);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool ok = true;
          for (Vertex i = 0; i < hn && ok; ++i)
            for (Vertex j = 0; j < hn && ok; ++j)
              if (i != j &&
                  h.has_edge(i, j) != d.has_edge(pick[perm[i]], pick[perm[j]]))
                ok = false;
          if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
      }
      for (Vertex v = from; v < n; ++v) {
        bool adjacent_to_all = true;
        for (Vertex w : pick)
          if (!d.adjacent(v, w)) {
            adjacent_to_all = false;
            break;
          }
        if (!adjacent_to_all) continue;
        pick.push_back(v);
        if (self(self, v + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (hn >= 1 && rec(rec, 0)) return false;
  }
  return true;
}

/// Independence number strictly below `bound`.
inline bool is_i_free(const Digraph& d, Vertex bound) {
  if (bound == 0) return false;
  const Vertex n = d.vertex_count();
  std::vector<Vertex> pick;
  auto rec = [&](auto&& self, Vertex from) -> bool {
    if (pick.size() == bound) return true;
    for (Vertex v = from; v < n; ++v) {
      bool independent = true;
      for (Vertex w : pick)
        if (d.adjacent(v, w)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      pick.push_back(v);
      if (self(self, v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return !rec(rec, 0);
}

/// Transitive digraph (a partial order written as a digraph).
inline bool is_poset(const Digraph& d) {
  for (const auto& [a, b] : d.edges())
    for (Vertex c : d.out_neighbours(b))
      if (!d.has_edge(a, c)) return false;
  return true;
}

enum class MembershipKind { h_free, i_free, poset, tournament };

struct MembershipParams {
  std::vector<Digraph> forbidden;
  Vertex independence_bound = 0;
};

inline bool class_membership(const Digraph& d, MembershipKind kind,
                             const MembershipParams& params = {}) {
  switch (kind) {
    case MembershipKind::h_free:
      return is_h_free(d, params.forbidden);
    case MembershipKind::i_free:
      return is_i_free(d, params.independence_bound);
    case MembershipKind::poset:
      return is_poset(d);
    case MembershipKind::tournament:
      return is_tournament(d);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Semi-generic parity condition

struct ParityResult {
  bool holds = true;
  /// x1, x2, y1, y2 of the violating quadruple; meaningful iff !holds
  std::array<Vertex, 4> violation{};
};

/// Condition (1): for every two same-class pairs from distinct classes the
/// number of edges directed from the first pair to the second is even.
/// The digraph must be a complete multipartite orientation.
inline ParityResult parity_condition_holds(const Digraph& d,
                                           const VertexPartition& p) {
  if (p.vertex_count() != d.vertex_count())
    throw parameter_error("partition does not match digraph");
  for (Vertex u = 0; u < d.vertex_count(); ++u)
    for (Vertex v = u + 1; v < d.vertex_count(); ++v) {
      const bool same = p.block_of(u) == p.block_of(v);
      if (same && d.adjacent(u, v))
        throw not_complete_multipartite("same-class vertices " +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + " are adjacent");
      if (!same && !d.adjacent(u, v))
        throw not_complete_multipartite("cross-class vertices " +
                                        std::to_string(u) + "," +
                                        std::to_string(v) +
                                        " are not adjacent");
    }
  const auto& blocks = p.blocks();
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      for (std::size_t i1 = 0; i1 < blocks[a].size(); ++i1)
        for (std::size_t i2 = i1 + 1; i2 < blocks[a].size(); ++i2)
          for (std::size_t j1 = 0; j1 < blocks[b].size(); ++j1)
            for (std::size_t j2 = j1 + 1; j2 < blocks[b].size(); ++j2) {
              const Vertex x1 = blocks[a][i1], x2 = blocks[a][i2];
              const Vertex y1 = blocks[b][j1], y2 = blocks[b][j2];
              const int count = d.has_edge(x1, y1) + d.has_edge(x1, y2) +
                                d.has_edge(x2, y1) + d.has_edge(x2, y2);
              if (count % 2 != 0) return {false, {x1, x2, y1, y2}};
            }
    }
  return {};
}

// ---------------------------------------------------------------------------
// Extension depth

enum class DepthKind {
  bip,          // A adjacent, B non-adjacent; witness on the other side
  two_partite,  // A successors of the witness, B predecessors
  orientation,  // A successors, B predecessors, C non-adjacent
  n_partite,    // directed pattern to W, witness in the demand class
  h_free,       // 3-state pattern to W keeping the digraph H-free
  i_free,       // 3-state pattern keeping independence below the bound
  poset         // 3-state pattern keeping the digraph a partial order
};

/// One unmet extension demand, re-checkable against the digraph.  `block`
/// is the side the demand is drawn from (2-sided kinds) or the class the
/// witness must belong to (n_partite); unused otherwise.  For the 3-state
/// kinds, plus lists vertices the new point beats, minus vertices beating
/// it, none its non-neighbours.
struct Demand {
  std::size_t block = 0;
  std::vector<Vertex> plus, minus, none;
};

struct DepthReport {
  DepthKind kind = DepthKind::bip;
  Vertex depth = 0;
  /// per-side (or per-class) depths for the partitioned kinds; the
  /// headline depth is their minimum
  std::vector<Vertex> per_block_depth;
  /// a demand failing at depth+1; absent when the depth is capped by the
  /// input size
  std::optional<Demand> first_failure;
};

struct DepthParams {
  std::vector<Digraph> forbidden;
  Vertex independence_bound = 0;
};

namespace detail {

// Enumerate size-k subsets of `pool` in lexicographic order.
template <typename Callback>
inline bool for_each_combination(const std::vector<Vertex>& pool, std::size_t k,
                                 Callback&& cb) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > pool.size()) return true;
  for (;;) {
    std::vector<Vertex> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (!cb(subset)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - (k - i) - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Vertex> remove_all(const std::vector<Vertex>& pool,
                                      const std::vector<Vertex>& taken) {
  std::vector<Vertex> rest;
  for (Vertex v : pool)
    if (std::find(taken.begin(), taken.end(), v) == taken.end())
      rest.push_back(v);
  return rest;
}

// Extend d by one vertex with the demanded pattern; the new vertex is n.
inline Digraph extend_by_point(const Digraph& d, const Demand& demand) {
  const Vertex p = d.vertex_count();
  EdgeList edges = d.edges();
  for (Vertex w : demand.plus) edges.emplace_back(p, w);
  for (Vertex w : demand.minus) edges.emplace_back(w, p);
  return Digraph(p + 1, std::move(edges));
}

}  // namespace detail

/// The largest d <= max_d such that every extension demand of size <= d
/// has a witness vertex; per-side depths for the partitioned kinds.
/// Demands are enumerated exhaustively, so the answer is exact for the
/// given finite digraph.
inline DepthReport extension_depth(const Digraph& d, DepthKind kind,
                                   const VertexPartition* partition,
                                   Vertex max_d = 4,
                                   const DepthParams& params = {}) {
  if (max_d > 6)
    throw guard_exceeded("extension depth capped at max_d <= 6");
  DepthReport report;
  report.kind = kind;

  const bool two_sided = kind == DepthKind::bip ||
                         kind == DepthKind::two_partite ||
                         kind == DepthKind::orientation;
  const bool partitioned = two_sided || kind == DepthKind::n_partite;
  if (partitioned) {
    if (partition == nullptr || partition->vertex_count() != d.vertex_count())
      throw parameter_error("this depth kind needs a matching partition");
    if (two_sided && partition->block_count() != 2)
      throw parameter_error("two-sided depth kinds need exactly 2 blocks");
    for (const auto& [u, v] : d.edges())
      if (partition->block_of(u) == partition->block_of(v))
        throw parameter_error("edges within a partition class");
    if (kind == DepthKind::bip) {
      std::optional<std::size_t> from;
      for (const auto& [u, v] : d.edges()) {
        if (!from) from = partition->block_of(u);
        if (partition->block_of(u) != *from)
          throw not_bipartite_oriented("bip depth needs all edges one way");
      }
    }
    if (kind == DepthKind::n_partite)
      for (Vertex u = 0; u < d.vertex_count(); ++u)
        for (Vertex v = u + 1; v < d.vertex_count(); ++v)
          if (partition->block_of(u) != partition->block_of(v) &&
              !d.adjacent(u, v))
            throw not_complete_multipartite(
                "n-partite depth needs every cross pair adjacent");
  }
  if (kind == DepthKind::poset && !is_poset(d))
    throw not_poset("poset depth needs a transitive digraph");

  // ---- demand generators per kind, returning false on first failure ----

  // two-sided kinds: demands of size d over side s, witness on side 1-s
  auto run_two_sided = [&](std::size_t s, Vertex d_target,
                           std::optional<Demand>& fail) -> bool {
    const auto& side = partition->blocks()[s];
    const auto& other = partition->blocks()[1 - s];
    const bool with_c = kind == DepthKind::orientation;
    for (std::size_t na = 0; na <= d_target; ++na)
      for (std::size_t nb = 0; na + nb <= d_target; ++nb) {
        const std::size_t nc = d_target - na - nb;
        if (!with_c && nc != 0) continue;
        bool all_met = detail::for_each_combination(
            side, na, [&](const std::vector<Vertex>& a) {
              auto rest = detail::remove_all(side, a);
              return detail::for_each_combination(
                  rest, nb, [&](const std::vector<Vertex>& b) {
                    auto rest2 = detail::remove_all(rest, b);
                    return detail::for_each_combination(
                        rest2, nc, [&](const std::vector<Vertex>& c) {
                          for (Vertex v : other) {
                            bool ok = true;
                            for (Vertex w : a)
                              if (kind == DepthKind::bip ? !d.adjacent(v, w)
                                                         : !d.has_edge(v, w))
                                ok = false;
                            for (Vertex w : b)
                              if (kind == DepthKind::bip ? d.adjacent(v, w)
                                                         : !d.has_edge(w, v))
                                ok = false;
                            for (Vertex w : c)
                              if (d.adjacent(v, w)) ok = false;
                            if (ok) return true;
                          }
                          fail = Demand{s, a, b, c};
                          return false;
                        });
                  });
            });
        if (!all_met) return false;
      }
    return true;
  };

  // n_partite: demands of size d targeting class s
  auto run_n_partite = [&](std::size_t s, Vertex d_target,
                           std::optional<Demand>& fail) -> bool {
    std::vector<Vertex> pool;
    for (std::size_t b = 0; b < partition->block_count(); ++b)
      if (b != s)
        pool.insert(pool.end(), partition->blocks()[b].begin(),
                    partition->blocks()[b].end());
    std::sort(pool.begin(), pool.end());
    return detail::for_each_combination(
        pool, d_target, [&](const std::vector<Vertex>& w) {
          const std::size_t patterns = std::size_t{1} << w.size();
          for (std::size_t bits = 0; bits < patterns; ++bits) {
            Demand demand;
            demand.block = s;
            for (std::size_t i = 0; i < w.size(); ++i)
              (bits >> i & 1 ? demand.minus : demand.plus).push_back(w[i]);
            bool met = false;
            for (Vertex v : partition->blocks()[s]) {
              bool ok = true;
              for (Vertex x : demand.plus)
                if (!d.has_edge(v, x)) ok = false;
              for (Vertex x : demand.minus)
                if (!d.has_edge(x, v)) ok = false;
              if (ok) {
                met = true;
                break;
              }
            }
            if (!met) {
              fail = std::move(demand);
              return false;
            }
          }
          return true;
        });
  };

  // 3-state kinds: demands of size d anywhere, subject to class validity
  auto run_three_state = [&](Vertex d_target,
                             std::optional<Demand>& fail) -> bool {
    std::vector<Vertex> pool(d.vertex_count());
    std::iota(pool.begin(), pool.end(), 0);
    return detail::for_each_combination(
        pool, d_target, [&](const std::vector<Vertex>& w) {
          const auto sub = induced_subdigraph(d, w);
          std::vector<Vertex> rank(d.vertex_count(), 0);
          for (std::size_t i = 0; i < sub.vertices.size(); ++i)
            rank[sub.vertices[i]] = static_cast<Vertex>(i);
          std::size_t patterns = 1;
          for (std::size_t i = 0; i < w.size(); ++i) patterns *= 3;
          for (std::size_t code = 0; code < patterns; ++code) {
            Demand demand;
            std::size_t rest = code;
            for (std::size_t i = 0; i < w.size(); ++i) {
              switch (rest % 3) {
                case 0: demand.plus.push_back(w[i]); break;
                case 1: demand.minus.push_back(w[i]); break;
                default: demand.none.push_back(w[i]); break;
              }
              rest /= 3;
            }
            // the one-point extension itself must stay inside the class
            Demand local;
            for (Vertex x : demand.plus) local.plus.push_back(rank[x]);
            for (Vertex x : demand.minus) local.minus.push_back(rank[x]);
            const Digraph ext = detail::extend_by_point(sub.digraph, local);
            bool valid = true;
            if (kind == DepthKind::h_free)
              valid = is_h_free(ext, params.forbidden);
            else if (kind == DepthKind::i_free)
              valid = is_i_free(ext, params.independence_bound);
            else
              valid = is_poset(ext);
            if (!valid) continue;
            bool met = false;
            for (Vertex v = 0; v < d.vertex_count(); ++v) {
              if (std::find(w.begin(), w.end(), v) != w.end()) continue;
              bool ok = true;
              for (Vertex x : demand.plus)
                if (!d.has_edge(v, x)) ok = false;
              for (Vertex x : demand.minus)
                if (!d.has_edge(x, v)) ok = false;
              for (Vertex x : demand.none)
                if (d.adjacent(v, x)) ok = false;
              if (ok) {
                met = true;
                break;
              }
            }
            if (!met) {
              fail = std::move(demand);
              return false;
            }
          }
          return true;
        });
  };

  auto depth_for = [&](std::size_t block, std::optional<Demand>& fail) {
    Vertex depth = 0;
    for (Vertex d_target = 1; d_target <= max_d; ++d_target) {
      bool all_met = true;
      if (two_sided)
        all_met = run_two_sided(block, d_target, fail);
      else if (kind == DepthKind::n_partite)
        all_met = run_n_partite(block, d_target, fail);
      else
        all_met = run_three_state(d_target, fail);
      if (!all_met) break;
      depth = d_target;
    }
    return depth;
  };

  if (partitioned) {
    const std::size_t blocks =
        two_sided ? 2 : partition->block_count();
    std::vector<std::optional<Demand>> fails(blocks);
    for (std::size_t b = 0; b < blocks; ++b)
      report.per_block_depth.push_back(depth_for(b, fails[b]));
    report.depth = *std::min_element(report.per_block_depth.begin(),
                                     report.per_block_depth.end());
    for (std::size_t b = 0; b < blocks; ++b)
      if (report.per_block_depth[b] == report.depth && fails[b]) {
        report.first_failure = fails[b];
        break;
      }
  } else {
    std::optional<Demand> fail;
    report.depth = depth_for(0, fail);
    report.first_failure = fail;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Dense partitions of a poset

/// Every block X is dense: for all a, b with a -> b some c in X satisfies
/// a -> c -> b.
inline bool dense_partition_check(const Digraph& d, const VertexPartition& p) {
  if (p.vertex_count() != d.vertex_count())
    throw parameter_error("partition does not match digraph");
  if (!is_poset(d)) throw not_poset("dense partition check needs a poset");
  for (const auto& block : p.blocks())
    for (const auto& [a, b] : d.edges()) {
      bool covered = false;
      for (Vertex c : block)
        if (d.has_edge(a, c) && d.has_edge(c, b)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

}  // namespace digsym

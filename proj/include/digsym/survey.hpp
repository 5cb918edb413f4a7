// Exhaustive small-digraph survey: enumerate every asymmetric digraph on
// up to max_n vertices up to isomorphism, keep the connected
// C-homogeneous ones, and match them against the finite catalog members.
//
// Enumeration is brute force over the three states of each unordered pair
// with cheap rejection first (vertex-degree regularity, which
// vertex-transitivity forces; then connectivity) and canonical-form
// deduplication before the expensive homogeneity decision.

#pragma once

#include <string>

#include "digsym/catalog.hpp"
#include "digsym/digraph.hpp"
#include "digsym/symmetry.hpp"

namespace digsym {

enum class OracleMode { orbit, direct };

struct FoundEntry {
  CanonicalForm form;
  Digraph representative;
  /// catalog instance names this digraph is isomorphic to
  std::vector<std::string> matched;
  bool plain_homogeneous = false;
};

struct SurveyResult {
  Vertex max_n = 0;
  std::vector<FoundEntry> found;

  /// indices of found entries matching no catalog instance
  std::vector<std::size_t> unmatched() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < found.size(); ++i)
      if (found[i].matched.empty()) out.push_back(i);
    return out;
  }
};

namespace detail {

inline std::vector<Digraph> connected_regular_representatives(Vertex n) {
  std::vector<Digraph> reps;
  std::set<CanonicalForm> seen;
  const std::size_t npairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<Edge> pairs;
  pairs.reserve(npairs);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  // state per pair: 0 none, 1 u->v, 2 v->u; degrees maintained incrementally
  std::vector<char> state(npairs, 0);
  std::vector<Vertex> out_deg(n, 0), in_deg(n, 0);
  auto apply = [&](std::size_t i, int delta) {
    const auto& [u, v] = pairs[i];
    if (state[i] == 1) {
      out_deg[u] += delta;
      in_deg[v] += delta;
    } else if (state[i] == 2) {
      out_deg[v] += delta;
      in_deg[u] += delta;
    }
  };
  for (;;) {
    bool regular = true;
    for (Vertex v = 1; v < n && regular; ++v)
      if (out_deg[v] != out_deg[0] || in_deg[v] != in_deg[0]) regular = false;
    if (regular) {
      // connectivity via union-find over the chosen pairs
      std::vector<Vertex> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](auto&& self, Vertex x) -> Vertex {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
      };
      Vertex parts = n;
      for (std::size_t i = 0; i < npairs; ++i) {
        if (state[i] == 0) continue;
        const Vertex a = find(find, pairs[i].first),
                     b = find(find, pairs[i].second);
        if (a != b) {
          parent[a] = b;
          --parts;
        }
      }
      if (parts == 1) {
        EdgeList edges;
        for (std::size_t i = 0; i < npairs; ++i) {
          if (state[i] == 1) edges.push_back(pairs[i]);
          if (state[i] == 2)
            edges.emplace_back(pairs[i].second, pairs[i].first);
        }
        Digraph candidate(n, std::move(edges));
        auto form = canonical_form(candidate);
        if (seen.insert(std::move(form)).second)
          reps.push_back(std::move(candidate));
      }
    }
    // odometer increment
    std::size_t i = 0;
    while (i < npairs && state[i] == 2) {
      apply(i, -1);
      state[i] = 0;
      ++i;
    }
    if (i == npairs) break;
    apply(i, -1);
    ++state[i];
    apply(i, +1);
  }
  return reps;
}

struct CatalogInstance {
  std::string name;
  Digraph digraph;
};

inline std::vector<CatalogInstance> finite_catalog_instances(Vertex max_n) {
  std::vector<CatalogInstance> out;
  if (max_n >= 1) out.push_back({"independent(1)", independent(1)});
  for (Vertex m = 3; m <= max_n; ++m)
    out.push_back({"cycle(" + std::to_string(m) + ")", directed_cycle(m)});
  for (Vertex m = 3; m <= max_n; ++m)
    for (Vertex k = 1; m * k <= max_n; ++k)
      out.push_back({"cm_ik(" + std::to_string(m) + "," + std::to_string(k) +
                         ")",
                     lexicographic_product(directed_cycle(m), independent(k))});
  for (Vertex k = 3; 3 * k <= max_n; ++k)
    out.push_back({"y(" + std::to_string(k) + ")", y_digraph(k).digraph});
  if (max_n >= 4) out.push_back({"t_wedge(I_1)", t_wedge(independent(1))});
  if (max_n >= 8) out.push_back({"t_wedge(C_3)", t_wedge(directed_cycle(3))});
  return out;
}

}  // namespace detail

/// Enumerate, decide C-homogeneity with the selected checker, and match
/// the survivors against the finite catalog.  Orbit mode allows
/// max_n <= 6; the raw-definition oracle is bounded to max_n <= 5.
inline SurveyResult survey(Vertex max_n, OracleMode mode = OracleMode::orbit) {
  if (max_n < 1 || max_n > 6)
    throw guard_exceeded("survey supports 1 <= max_n <= 6");
  if (mode == OracleMode::direct && max_n > 5)
    throw guard_exceeded("direct survey oracle bounded to max_n <= 5");
  SurveyResult result;
  result.max_n = max_n;
  for (Vertex n = 1; n <= max_n; ++n) {
    for (Digraph& rep : detail::connected_regular_representatives(n)) {
      const auto verdict =
          mode == OracleMode::orbit
              ? homogeneity_check(rep, HomogeneityMode::connected)
              : homogeneity_check_direct(rep, HomogeneityMode::connected);
      if (!verdict.homogeneous) continue;
      FoundEntry entry;
      entry.form = canonical_form(rep);
      entry.representative = std::move(rep);
      result.found.push_back(std::move(entry));
    }
  }
  std::sort(result.found.begin(), result.found.end(),
            [](const FoundEntry& a, const FoundEntry& b) {
              return a.form < b.form;
            });
  const auto catalog = detail::finite_catalog_instances(max_n);
  for (FoundEntry& entry : result.found) {
    for (const auto& instance : catalog)
      if (isomorphic(entry.representative, instance.digraph))
        entry.matched.push_back(instance.name);
    entry.plain_homogeneous =
        mode == OracleMode::orbit
            ? homogeneity_check(entry.representative, HomogeneityMode::plain)
                  .homogeneous
            : homogeneity_check_direct(entry.representative,
                                       HomogeneityMode::plain)
                  .homogeneous;
  }
  return result;
}

}  // namespace digsym

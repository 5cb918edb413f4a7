#include <catch2/catch_amalgamated.hpp>

#include "digsym/catalog.hpp"
#include "digsym/reachability.hpp"
#include "oracles.hpp"

using namespace digsym;

namespace {

// the five-edge digraph whose boundary cycle witnesses universality
Digraph w5() { return Digraph(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}}); }

Digraph alternating_cycle(Vertex half) {
  // 0 -> 1 <- 2 -> 3 <- ... <- 2h-2? -> ...; tails even, heads odd
  EdgeList edges;
  const Vertex n = 2 * half;
  for (Vertex i = 0; i < n; i += 2) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back((i + 2) % n, (i + 1) % n);
  }
  return Digraph(n, std::move(edges));
}

Digraph cm_ik(Vertex m, Vertex k) {
  return lexicographic_product(directed_cycle(m), independent(k));
}

}  // namespace

TEST_CASE("reachability partition on pinned instances") {
  SECTION("C_3: three singleton classes") {
    const auto part = reachability_partition(directed_cycle(3));
    CHECK(part.classes.size() == 3);
    for (const auto& cls : part.classes) CHECK(cls.edges.size() == 1);
  }
  SECTION("shared head merges") {
    const auto part = reachability_partition(Digraph(3, {{0, 1}, {2, 1}}));
    CHECK(part.classes.size() == 1);
  }
  SECTION("C_3[I_2]: three fiber bundles of four edges") {
    const auto part = reachability_partition(cm_ik(3, 2));
    REQUIRE(part.classes.size() == 3);
    for (const auto& cls : part.classes) {
      CHECK(cls.edges.size() == 4);
      CHECK(cls.bipartite);
    }
  }
}

TEST_CASE("reachability equals bounded alternating-walk closure, n <= 4") {
  for (Vertex n = 0; n <= 4; ++n)
    oracles::for_each_asymmetric_digraph(n, [&](const Digraph& d) {
      const auto oracle = oracles::walk_closure_reachability(d, 8);
      const auto part = reachability_partition(d);
      // same partition: identical class labels up to renaming
      std::map<std::size_t, std::size_t> forward, backward;
      for (const auto& e : d.edges()) {
        const std::size_t mine = part.class_of.at(e);
        const std::size_t theirs = oracle.at(e);
        auto [f, fresh_f] = forward.emplace(mine, theirs);
        auto [b, fresh_b] = backward.emplace(theirs, mine);
        CHECK(f->second == theirs);
        CHECK(b->second == mine);
      }
    });
}

TEST_CASE("class structure invariants") {
  const Digraph instances[] = {w5(),
                               cm_ik(3, 2),
                               cm_ik(4, 2),
                               y_digraph(3).digraph,
                               t_wedge(directed_cycle(3)),
                               circle_digraph(7, 2),
                               random_h_free({}, 7, 42)};
  for (const Digraph& d : instances) {
    const auto part = reachability_partition(d);
    std::size_t total = 0;
    for (const auto& cls : part.classes) {
      total += cls.edges.size();
      // class underlying graph is connected
      std::vector<Vertex> rank(d.vertex_count(), 0);
      for (std::size_t i = 0; i < cls.vertices.size(); ++i)
        rank[cls.vertices[i]] = static_cast<Vertex>(i);
      EdgeList edges;
      for (const auto& [u, v] : cls.edges) edges.emplace_back(rank[u], rank[v]);
      CHECK(is_connected(
          Digraph(static_cast<Vertex>(cls.vertices.size()), std::move(edges))));
      // bipartite flag matches the side structure
      if (cls.bipartite)
        for (const auto& [u, v] : cls.edges) {
          CHECK(std::binary_search(cls.tail_side.begin(), cls.tail_side.end(),
                                   u));
          CHECK(std::binary_search(cls.head_side.begin(), cls.head_side.end(),
                                   v));
        }
    }
    CHECK(total == d.edge_count());
  }
}

TEST_CASE("reachability digraphs") {
  SECTION("Y_3 classes are matching complements") {
    const auto y3 = y_digraph(3);
    const Digraph cls = reachability_digraph(y3.digraph, {0, 4});
    CHECK(isomorphic(cls, cp(3).digraph));
  }
  SECTION("C_4 classes are single edges") {
    CHECK(reachability_digraph(directed_cycle(4), {0, 1}).edge_count() == 1);
  }
  SECTION("the alternating 4-cycle is one class") {
    const Digraph d = alternating_cycle(2);
    CHECK(reachability_digraph(d, d.edges().front()) == d);
  }
  CHECK_THROWS_AS(reachability_digraph(directed_cycle(3), {0, 2}),
                  parameter_error);
}

TEST_CASE("universality") {
  CHECK(is_universal(w5()));
  CHECK(!is_universal(cm_ik(3, 2)));
  CHECK(is_universal(Digraph(2, {{0, 1}})));
  CHECK_THROWS_AS(is_universal(independent(3)), empty_edge_set);
}

TEST_CASE("delta") {
  CHECK(isomorphic(delta(cm_ik(3, 2)), complete_bipartite(2, 2).digraph));
  CHECK(isomorphic(delta(y_digraph(3).digraph), cp(3).digraph));
  CHECK(delta(directed_cycle(5)) == Digraph(2, {{0, 1}}));
  CHECK_THROWS_AS(delta(transitive_tournament(3)), not_one_arc_transitive);
  CHECK_THROWS_AS(delta(disjoint_union({directed_cycle(3), directed_cycle(3)})),
                  parameter_error);
}

TEST_CASE("proposition 5.1 dichotomy") {
  SECTION("bipartite branch") {
    for (const Digraph& d : {cm_ik(3, 2), cm_ik(4, 2), y_digraph(3).digraph}) {
      const auto report = check_prop_5_1(d);
      CHECK(report.branch == Prop51Branch::bipartite);
      CHECK(report.delta_connected);
      CHECK(report.delta_one_arc_transitive);
    }
  }
  SECTION("the alternating 4-cycle satisfies both branches") {
    CHECK(check_prop_5_1(alternating_cycle(2)).branch == Prop51Branch::both);
  }
  SECTION("no falsification across the 1-arc-transitive instance list") {
    std::vector<Digraph> instances;
    for (Vertex m = 3; m <= 6; ++m) instances.push_back(directed_cycle(m));
    for (Vertex m = 3; m <= 10; ++m)
      for (Vertex k = 1; m * k <= 10; ++k) instances.push_back(cm_ik(m, k));
    instances.push_back(y_digraph(3).digraph);
    instances.push_back(t_wedge(independent(1)));
    instances.push_back(t_wedge(directed_cycle(3)));
    instances.push_back(cp(3).digraph);
    instances.push_back(alternating_cycle(2));
    instances.push_back(alternating_cycle(3));
    for (const Digraph& d : instances) {
      const auto report = check_prop_5_1(d);
      CHECK(report.branch != Prop51Branch::falsified);
      CHECK(report.delta_connected);
      CHECK(report.delta_one_arc_transitive);
    }
  }
}

TEST_CASE("alternating walks") {
  const Digraph vee(3, {{0, 1}, {2, 1}});
  CHECK(is_alternating_walk(vee, std::vector<Vertex>{0, 1, 2}));
  CHECK(!is_alternating_walk(directed_cycle(3), std::vector<Vertex>{0, 1, 2}));
  CHECK(is_alternating_walk(Digraph(2, {{0, 1}}), std::vector<Vertex>{0, 1}));
  CHECK_THROWS_AS(
      is_alternating_walk(independent(3), std::vector<Vertex>{0, 1}),
      parameter_error);
}

TEST_CASE("witness cycles") {
  SECTION("the W5 boundary cycle is a witness") {
    CHECK(is_witness_cycle(w5(), std::vector<Vertex>{0, 1, 2, 3, 4}));
  }
  SECTION("the directed 4-cycle is not") {
    CHECK(!is_witness_cycle(directed_cycle(4), std::vector<Vertex>{0, 1, 2, 3}));
  }
  SECTION("the alternating 4-cycle has no induced 2-arc") {
    const Digraph d = alternating_cycle(2);
    CHECK(!is_witness_cycle(d, std::vector<Vertex>{0, 1, 2, 3}));
  }
  CHECK_THROWS_AS(is_witness_cycle(w5(), std::vector<Vertex>{0, 1, 3}),
                  parameter_error);
  CHECK_THROWS_AS(is_witness_cycle(w5(), std::vector<Vertex>{0, 1}),
                  parameter_error);
}

TEST_CASE("find_witness_cycle") {
  SECTION("finds the length-5 witness in W5") {
    const auto found = find_witness_cycle(w5());
    REQUIRE(found.has_value());
    CHECK(found->cycle.size() == 5);
    CHECK(is_witness_cycle(w5(), found->cycle));
    CHECK(found->induced);
  }
  SECTION("no witness in C_3[I_2] at any length") {
    CHECK(!find_witness_cycle(cm_ik(3, 2), 12).has_value());
  }
  SECTION("no witness in a single edge") {
    CHECK(!find_witness_cycle(Digraph(2, {{0, 1}})).has_value());
  }
  SECTION("contract holds on random instances") {
    SeededRng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const Digraph d = random_h_free({}, 6, rng.next());
      const auto found = find_witness_cycle(d);
      if (found) CHECK(is_witness_cycle(d, found->cycle));
    }
  }
  SECTION("minimality by exhaustion") {
    // the alternating 4-cycle component is no witness (no induced 2-arc),
    // so the minimum stays at 5
    const Digraph untouched = disjoint_union({w5(), alternating_cycle(2)});
    auto found = find_witness_cycle(untouched);
    REQUIRE(found.has_value());
    CHECK(found->cycle.size() == 5);
    // a square with a 2-arc and a co-2-arc is a length-4 witness and wins
    const Digraph square(4, {{0, 1}, {1, 2}, {3, 2}, {3, 0}});
    REQUIRE(is_witness_cycle(square, std::vector<Vertex>{0, 1, 2, 3}));
    found = find_witness_cycle(disjoint_union({w5(), square}));
    REQUIRE(found.has_value());
    CHECK(found->cycle.size() == 4);
  }
}

namespace {

// minimum witness-cycle length by brute enumeration of all simple cycles
std::optional<std::size_t> brute_min_witness_length(const Digraph& d) {
  const Vertex n = d.vertex_count();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t len = 3; len <= n; ++len) {
    std::vector<std::size_t> idx(len);
    std::iota(idx.begin(), idx.end(), 0);
    // combinations of size len
    for (;;) {
      std::vector<Vertex> rest;
      for (std::size_t i = 1; i < len; ++i) rest.push_back(all[idx[i]]);
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<Vertex> cycle{all[idx[0]]};
        cycle.insert(cycle.end(), rest.begin(), rest.end());
        bool chain = true;
        for (std::size_t i = 0; i < len && chain; ++i)
          if (!d.adjacent(cycle[i], cycle[(i + 1) % len])) chain = false;
        if (chain && is_witness_cycle(d, cycle)) return len;
      } while (std::next_permutation(rest.begin(), rest.end()));
      std::size_t i = len;
      while (i > 0 && idx[i - 1] == n - (len - i) - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < len; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("witness-cycle search matches brute enumeration, n <= 5") {
  for (Vertex n = 3; n <= 5; ++n)
    oracles::for_each_asymmetric_digraph(n, [&](const Digraph& d) {
      const auto expected = brute_min_witness_length(d);
      const auto found = find_witness_cycle(d);
      REQUIRE(found.has_value() == expected.has_value());
      if (found) {
        CHECK(found->cycle.size() == *expected);
        CHECK(is_witness_cycle(d, found->cycle));
      }
    });
}

TEST_CASE("equal in-neighbourhood partition") {
  SECTION("C_3[I_2] fibers") {
    const auto p = eq_in_nbhd(cm_ik(3, 2));
    CHECK(p.blocks() ==
          std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4, 5}});
  }
  SECTION("C_4 singletons") {
    CHECK(eq_in_nbhd(directed_cycle(4)).block_count() == 4);
  }
  SECTION("I_3 is one block") {
    CHECK(eq_in_nbhd(independent(3)).block_count() == 1);
  }
}

TEST_CASE("shared reachability sides partition") {
  SECTION("Y_3 parts") {
    const auto y3 = y_digraph(3);
    CHECK(eq_reach_sides(y3.digraph) == y3.partition);
  }
  SECTION("C_3[I_2] fibers") {
    CHECK(eq_reach_sides(cm_ik(3, 2)) == eq_in_nbhd(cm_ik(3, 2)));
  }
  SECTION("C_3 degenerates to singletons") {
    CHECK(eq_reach_sides(directed_cycle(3)).block_count() == 3);
  }
  SECTION("isolated vertices are not applicable") {
    CHECK_THROWS_AS(eq_reach_sides(Digraph(3, {{0, 1}})), not_applicable);
  }
}

TEST_CASE("quotient conclusions from the shared relations") {
  SECTION("C_m[I_k] contracts to C_m and reassembles") {
    for (Vertex m = 3; m <= 5; ++m)
      for (Vertex k = 1; k <= 2; ++k) {
        const Digraph d = cm_ik(m, k);
        const Digraph q = quotient(d, eq_in_nbhd(d));
        CHECK(isomorphic(q, directed_cycle(m)));
        CHECK(isomorphic(lexicographic_product(q, independent(k)), d));
      }
  }
  SECTION("Y_3 contracts to C_3 along shared sides") {
    const auto y3 = y_digraph(3);
    CHECK(isomorphic(quotient(y3.digraph, eq_reach_sides(y3.digraph)),
                     directed_cycle(3)));
  }
}

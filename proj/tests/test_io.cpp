#include <catch2/catch_amalgamated.hpp>

#include "digsym/catalog.hpp"
#include "digsym/io.hpp"

using namespace digsym;

TEST_CASE("read basic digraph") {
  const auto file = read_digraph("digraph 3\n0 1\n1 2\n2 0\n");
  CHECK(file.digraph == directed_cycle(3));
  CHECK(file.partitions.empty());
}

TEST_CASE("read rejects invariant violations") {
  CHECK_THROWS_AS(read_digraph("digraph 2\n0 1\n1 0\n"), invariant_violation);
  CHECK_THROWS_AS(read_digraph("digraph 2\n0 0\n"), invariant_violation);
  CHECK_THROWS_AS(read_digraph("digraph 2\n0 5\n"), invariant_violation);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(read_digraph("0 1\n"), parse_error);
  CHECK_THROWS_AS(read_digraph(""), parse_error);
  CHECK_THROWS_AS(read_digraph("digraph x\n"), parse_error);
  CHECK_THROWS_AS(read_digraph("digraph 3\n0 1 2\n"), parse_error);
  CHECK_THROWS_AS(read_digraph("digraph 2\npart a 0 1\n"), parse_error);
  // partition must cover the vertices exactly once
  CHECK_THROWS_AS(read_digraph("digraph 2\npart a : 0\n"), invariant_violation);
  CHECK_THROWS_AS(read_digraph("digraph 2\npart a : 0 1\npart a : 1\n"),
                  invariant_violation);
}

TEST_CASE("comments and empty partition blocks") {
  const auto file = read_digraph(
      "# a comment\ndigraph 2\n0 1\npart sides : 0 1\npart sides :\n");
  CHECK(file.digraph.edge_count() == 1);
  REQUIRE(file.partitions.contains("sides"));
  CHECK(file.partitions.at("sides").block_count() == 2);
  CHECK(file.partitions.at("sides").blocks()[1].empty());
}

TEST_CASE("write then read round trip with partitions") {
  const auto y3 = y_digraph(3);
  const std::map<std::string, VertexPartition> parts{{"parts", y3.partition}};
  const std::string text = write_digraph(y3.digraph, parts);
  const auto file = read_digraph(text);
  CHECK(file.digraph == y3.digraph);
  REQUIRE(file.partitions.contains("parts"));
  CHECK(file.partitions.at("parts") == y3.partition);
  // serialization is stable: writing the parsed value reproduces the text
  CHECK(write_digraph(file.digraph, file.partitions) == text);
}

TEST_CASE("edges are written sorted") {
  const Digraph d(3, {{2, 0}, {0, 1}});
  CHECK(write_digraph(d) == "digraph 3\n0 1\n2 0\n");
}

TEST_CASE("dot export") {
  CHECK(to_dot(Digraph(3, {{2, 0}, {0, 1}})) ==
        "digraph G {\n  0 -> 1;\n  2 -> 0;\n}\n");
  CHECK(to_dot(independent(1)) == "digraph G {\n}\n");
}

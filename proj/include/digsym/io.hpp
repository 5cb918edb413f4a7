// Text serialization for digraphs and named partitions, plus DOT export.
//
// Format (UTF-8, newline-terminated lines):
//   digraph <n>
//   <u> <v>                     one line per edge, 0-based
//   part <name> : <v1> <v2> ... one line per block; block order = line order
//   # comment
//
// Writing emits edges sorted lexicographically, so a read/write round trip
// is bit-exact.

#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "digsym/digraph.hpp"

namespace digsym {

struct DigraphFile {
  Digraph digraph;
  std::map<std::string, VertexPartition> partitions;

  friend bool operator==(const DigraphFile& a, const DigraphFile& b) {
    return a.digraph == b.digraph && a.partitions == b.partitions;
  }
};

inline DigraphFile read_digraph(std::istream& in) {
  std::string line;
  bool have_header = false;
  Vertex n = 0;
  EdgeList edges;
  std::map<std::string, std::vector<std::vector<Vertex>>> raw_parts;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw parse_error("line " + std::to_string(line_no) + ": " + what);
    };
    if (!have_header) {
      if (tok != "digraph") fail("expected 'digraph <n>' header");
      long long val = -1;
      if (!(ls >> val) || val < 0) fail("bad vertex count");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after header");
      n = static_cast<Vertex>(val);
      have_header = true;
    } else if (tok == "part") {
      std::string name, colon;
      if (!(ls >> name >> colon) || colon != ":")
        fail("expected 'part <name> : <vertices>'");
      std::vector<Vertex> block;
      long long v;
      while (ls >> v) {
        if (v < 0) fail("negative vertex");
        block.push_back(static_cast<Vertex>(v));
      }
      if (!ls.eof()) fail("bad vertex token in partition block");
      raw_parts[name].push_back(std::move(block));
    } else {
      long long u, v;
      std::istringstream es(line);
      if (!(es >> u >> v) || u < 0 || v < 0) fail("expected '<u> <v>' edge");
      std::string extra;
      if (es >> extra) fail("trailing tokens after edge");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  if (!have_header) throw parse_error("missing 'digraph <n>' header");
  DigraphFile result;
  result.digraph = Digraph(n, std::move(edges));
  for (auto& [name, blocks] : raw_parts)
    result.partitions.emplace(name, VertexPartition(n, std::move(blocks)));
  return result;
}

inline DigraphFile read_digraph(const std::string& text) {
  std::istringstream in(text);
  return read_digraph(in);
}

inline std::string write_digraph(
    const Digraph& d,
    const std::map<std::string, VertexPartition>& partitions = {}) {
  std::ostringstream out;
  out << "digraph " << d.vertex_count() << "\n";
  for (const auto& [u, v] : d.edges()) out << u << " " << v << "\n";
  for (const auto& [name, part] : partitions) {
    for (const auto& block : part.blocks()) {
      out << "part " << name << " :";
      for (Vertex v : block) out << " " << v;
      out << "\n";
    }
  }
  return out.str();
}

inline std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& [u, v] : d.edges())
    out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace digsym

// digsym: generate, check, and survey finite digraphs.
//
// Subcommands: gen, check, reach, quotient, depth, survey, export.
// Exit codes: 0 success/true, 1 false/none, 2 error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "digsym/catalog.hpp"
#include "digsym/digraph.hpp"
#include "digsym/genericity.hpp"
#include "digsym/io.hpp"
#include "digsym/reachability.hpp"
#include "digsym/survey.hpp"
#include "digsym/symmetry.hpp"

namespace {

using namespace digsym;

Vertex to_uint(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw parameter_error("expected a non-negative integer, got '" + s + "'");
  }
  if (pos != s.size())
    throw parameter_error("expected a non-negative integer, got '" + s + "'");
  return static_cast<Vertex>(v);
}

std::vector<Vertex> to_uint_list(const std::string& s) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(to_uint(item));
  return out;
}

// i1 | c3 | tt<k> | rt<k> (rt uses --seed)
Digraph tournament_spec(const std::string& s, std::uint64_t seed) {
  if (s == "i1") return independent(1);
  if (s == "c3") return directed_cycle(3);
  if (s.rfind("tt", 0) == 0) return transitive_tournament(to_uint(s.substr(2)));
  if (s.rfind("rt", 0) == 0) return random_tournament(to_uint(s.substr(2)), seed);
  throw parameter_error("unknown tournament spec '" + s +
                        "' (use i1, c3, tt<k>, rt<k>)");
}

// cp<k> | k<a>x<b>
PartitionedDigraph delta_spec(const std::string& s) {
  if (s.rfind("cp", 0) == 0) return cp(to_uint(s.substr(2)));
  if (!s.empty() && s[0] == 'k') {
    const auto x = s.find('x');
    if (x != std::string::npos)
      return complete_bipartite(to_uint(s.substr(1, x - 1)),
                                to_uint(s.substr(x + 1)));
  }
  throw parameter_error("unknown delta spec '" + s + "' (use cp<k>, k<a>x<b>)");
}

std::vector<Digraph> forbidden_spec(const std::string& s, std::uint64_t seed) {
  std::vector<Digraph> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(tournament_spec(item, seed));
  return out;
}

DigraphFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parameter_error("cannot open '" + path + "'");
  return read_digraph(in);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw parameter_error("cannot write '" + path + "'");
  out << text;
}

const VertexPartition& parts_of(const DigraphFile& file) {
  const auto it = file.partitions.find("parts");
  if (it == file.partitions.end())
    throw parameter_error("input file carries no 'parts' partition");
  return it->second;
}

VertexPartition interior_partition(const TruncationReport& report) {
  std::vector<Vertex> boundary;
  for (Vertex v = 0; v < report.digraph.vertex_count(); ++v)
    if (!std::binary_search(report.interior.begin(), report.interior.end(), v))
      boundary.push_back(v);
  return VertexPartition(report.digraph.vertex_count(),
                         {report.interior, std::move(boundary)});
}

Vertex arg(const std::vector<std::string>& params, std::size_t i) {
  if (i >= params.size())
    throw parameter_error("missing positional parameter " + std::to_string(i));
  return to_uint(params[i]);
}

std::string sarg(const std::vector<std::string>& params, std::size_t i) {
  if (i >= params.size())
    throw parameter_error("missing positional parameter " + std::to_string(i));
  return params[i];
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& out_path) {
  Digraph d;
  std::map<std::string, VertexPartition> parts;
  if (family == "independent") {
    d = independent(arg(params, 0));
  } else if (family == "cycle") {
    d = directed_cycle(arg(params, 0));
  } else if (family == "transitive-tournament") {
    d = transitive_tournament(arg(params, 0));
  } else if (family == "random-tournament") {
    d = random_tournament(arg(params, 0), seed);
  } else if (family == "circle") {
    d = circle_digraph(arg(params, 0), arg(params, 1));
  } else if (family == "s2") {
    d = s2_approx(arg(params, 0));
  } else if (family == "s3") {
    d = s3_approx(arg(params, 0));
  } else if (family == "cp") {
    auto pd = cp(arg(params, 0));
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "complete-bipartite") {
    auto pd = complete_bipartite(arg(params, 0), arg(params, 1));
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "cpk-prime") {
    auto pd = cpk_prime(arg(params, 0));
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "cone") {
    d = cone(tournament_spec(sarg(params, 0), seed));
  } else if (family == "t-wedge") {
    d = t_wedge(tournament_spec(sarg(params, 0), seed));
  } else if (family == "y") {
    auto pd = y_digraph(arg(params, 0));
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "cm-ik") {
    d = lexicographic_product(directed_cycle(arg(params, 0)),
                              independent(arg(params, 1)));
  } else if (family == "parity") {
    auto pd = parity_orientation(to_uint_list(sarg(params, 0)), seed);
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "poset") {
    d = random_poset(arg(params, 0), seed);
  } else if (family == "p3") {
    // apex cone over the twist of a random poset with a round-robin
    // 3-partition
    const Vertex n = arg(params, 0);
    const Digraph base = random_poset(n, seed);
    std::vector<std::vector<Vertex>> blocks(3);
    for (Vertex v = 0; v < n; ++v) blocks[v % 3].push_back(v);
    d = p3_cone(base, VertexPartition(n, std::move(blocks)));
  } else if (family == "powerset-bipartite") {
    auto pd = powerset_bipartite(arg(params, 0));
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "random-bipartite") {
    auto pd = random_bipartite(arg(params, 0), arg(params, 1), seed);
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "random-2partite") {
    auto pd = random_two_partite(arg(params, 0), arg(params, 1), seed);
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "random-orientation") {
    auto pd = random_orientation(arg(params, 0), arg(params, 1), seed);
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "random-npartite") {
    auto pd = random_n_partite(to_uint_list(sarg(params, 0)), seed);
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else if (family == "random-h-free") {
    d = random_h_free(forbidden_spec(sarg(params, 0), seed ^ 1), arg(params, 1),
                      seed);
  } else if (family == "random-i-free") {
    d = random_i_free(arg(params, 0), arg(params, 1), seed);
  } else if (family == "tree") {
    auto report =
        directed_tree_truncation(arg(params, 0), arg(params, 1), arg(params, 2));
    d = report.digraph;
    parts["interior"] = interior_partition(report);
  } else if (family == "dl") {
    auto report = dl_truncation(delta_spec(sarg(params, 0)), arg(params, 1));
    d = report.digraph;
    parts["interior"] = interior_partition(report);
  } else if (family == "x-lambda") {
    auto report = x_lambda_truncation(tournament_spec(sarg(params, 0), seed),
                                      arg(params, 1), arg(params, 2));
    d = report.digraph;
    parts["interior"] = interior_partition(report);
  } else if (family == "m") {
    auto report = m_truncation(arg(params, 0), arg(params, 1), arg(params, 2));
    d = report.digraph;
    parts["interior"] = interior_partition(report);
  } else if (family == "m-prime") {
    auto report = m_prime_truncation(arg(params, 0), arg(params, 1));
    d = report.digraph;
    parts["interior"] = interior_partition(report);
  } else if (family == "r-m") {
    auto pd = r_m_approx(arg(params, 0), arg(params, 1), seed);
    d = pd.digraph;
    parts["parts"] = pd.partition;
  } else {
    throw parameter_error("unknown family '" + family + "'");
  }
  emit(write_digraph(d, parts), out_path);
  return 0;
}

std::string witness_string(const PartialMap& pm) {
  std::string out;
  for (const auto& [a, b] : pm.pairs)
    out += " " + std::to_string(a) + ":" + std::to_string(b);
  return out;
}

int run_check(const std::string& path, const std::string& property,
              Vertex max_n) {
  const DigraphFile file = load(path);
  const Digraph& d = file.digraph;
  bool value = false;
  std::string extra;
  if (property == "homogeneous" || property == "c-homogeneous" ||
      property == "bipartite-homogeneous" ||
      property == "2partite-homogeneous") {
    HomogeneityMode mode = HomogeneityMode::plain;
    const VertexPartition* partition = nullptr;
    if (property == "c-homogeneous") mode = HomogeneityMode::connected;
    if (property == "bipartite-homogeneous") {
      mode = HomogeneityMode::bipartite;
      partition = &parts_of(file);
    }
    if (property == "2partite-homogeneous") {
      mode = HomogeneityMode::two_partite;
      partition = &parts_of(file);
    }
    const auto result = homogeneity_check(d, mode, partition, max_n);
    value = result.homogeneous;
    if (result.witness) extra = " witness" + witness_string(*result.witness);
  } else if (property == "vertex-transitive") {
    value = transitivity_report(d).vertex_transitive;
  } else if (property == "1-arc-transitive") {
    value = transitivity_report(d).one_arc_transitive;
  } else {
    throw parameter_error("unknown property '" + property + "'");
  }
  std::cout << property << " " << (value ? "true" : "false") << extra << "\n";
  return value ? 0 : 1;
}

int run_reach(const std::string& path, bool want_witness, Vertex max_len,
              const std::string& dot_path) {
  const DigraphFile file = load(path);
  const Digraph& d = file.digraph;
  const auto partition = reachability_partition(d);
  std::cout << "classes " << partition.classes.size() << "\n";
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    const auto& cls = partition.classes[i];
    std::cout << "class " << i << " size " << cls.edges.size() << " bipartite "
              << (cls.bipartite ? "true" : "false") << "\n";
  }
  bool qualifies = d.edge_count() > 0 && is_connected(d) &&
                   transitivity_report(d).one_arc_transitive;
  if (qualifies) {
    const auto report = check_prop_5_1(d);
    const char* branch = report.branch == Prop51Branch::universal ? "universal"
                         : report.branch == Prop51Branch::bipartite
                             ? "bipartite"
                         : report.branch == Prop51Branch::both ? "both"
                                                               : "falsified";
    std::cout << "prop51 " << branch << "\n";
  } else {
    std::cout << "prop51 n/a\n";
  }
  if (!dot_path.empty()) emit(to_dot(delta(d)), dot_path);
  if (want_witness) {
    const auto cycle = find_witness_cycle(d, max_len);
    if (!cycle) {
      std::cout << "witness-cycle none\n";
      return 1;
    }
    std::cout << "witness-cycle";
    for (Vertex v : cycle->cycle) std::cout << " " << v;
    std::cout << " induced " << (cycle->induced ? "true" : "false") << "\n";
  }
  return 0;
}

int run_quotient(const std::string& path, const std::string& relation,
                 const std::string& out_path) {
  const DigraphFile file = load(path);
  VertexPartition partition;
  if (relation == "in-nbhd")
    partition = eq_in_nbhd(file.digraph);
  else if (relation == "reach-sides")
    partition = eq_reach_sides(file.digraph);
  else
    throw parameter_error("unknown relation '" + relation + "'");
  emit(write_digraph(quotient(file.digraph, partition)), out_path);
  return 0;
}

int run_depth(const std::string& path, const std::string& kind_name,
              Vertex max_d, const std::string& forbidden, Vertex bound,
              std::uint64_t seed) {
  const DigraphFile file = load(path);
  DepthKind kind;
  bool needs_partition = false;
  if (kind_name == "bip") {
    kind = DepthKind::bip;
    needs_partition = true;
  } else if (kind_name == "two-partite") {
    kind = DepthKind::two_partite;
    needs_partition = true;
  } else if (kind_name == "orientation") {
    kind = DepthKind::orientation;
    needs_partition = true;
  } else if (kind_name == "n-partite") {
    kind = DepthKind::n_partite;
    needs_partition = true;
  } else if (kind_name == "h-free") {
    kind = DepthKind::h_free;
  } else if (kind_name == "i-free") {
    kind = DepthKind::i_free;
  } else if (kind_name == "poset") {
    kind = DepthKind::poset;
  } else {
    throw parameter_error("unknown depth kind '" + kind_name + "'");
  }
  DepthParams params;
  if (!forbidden.empty()) params.forbidden = forbidden_spec(forbidden, seed);
  params.independence_bound = bound;
  const auto report = extension_depth(
      file.digraph, kind, needs_partition ? &parts_of(file) : nullptr, max_d,
      params);
  std::cout << "depth " << report.depth << "\n";
  for (std::size_t b = 0; b < report.per_block_depth.size(); ++b)
    std::cout << "block " << b << " depth " << report.per_block_depth[b]
              << "\n";
  if (report.first_failure) {
    auto join = [](const std::vector<Vertex>& vs) {
      if (vs.empty()) return std::string("-");
      std::string s;
      for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? "," : "") + std::to_string(vs[i]);
      return s;
    };
    const auto& f = *report.first_failure;
    std::cout << "first-failure block " << f.block << " plus " << join(f.plus)
              << " minus " << join(f.minus) << " none " << join(f.none)
              << "\n";
  }
  return 0;
}

int run_survey(Vertex max_n, const std::string& oracle) {
  OracleMode mode = OracleMode::orbit;
  if (oracle == "direct")
    mode = OracleMode::direct;
  else if (!oracle.empty() && oracle != "orbit")
    throw parameter_error("unknown oracle '" + oracle + "'");
  const auto result = survey(max_n, mode);
  for (const auto& entry : result.found) {
    std::cout << entry.representative.vertex_count() << " ";
    if (entry.form.edges.empty())
      std::cout << "-";
    else
      for (std::size_t i = 0; i < entry.form.edges.size(); ++i)
        std::cout << (i ? "," : "") << entry.form.edges[i].first << ">"
                  << entry.form.edges[i].second;
    std::cout << " matched=";
    if (entry.matched.empty() && !entry.plain_homogeneous)
      std::cout << "NONE";
    else {
      std::string names;
      for (const auto& name : entry.matched)
        names += (names.empty() ? "" : ",") + name;
      if (entry.plain_homogeneous)
        names += (names.empty() ? "" : ",") + std::string("homogeneous");
      std::cout << names;
    }
    std::cout << "\n";
  }
  return 0;
}

int run_export(const std::string& path, const std::string& format,
               const std::string& out_path) {
  const DigraphFile file = load(path);
  if (format == "dot")
    emit(to_dot(file.digraph), out_path);
  else if (format == "edgelist")
    emit(write_digraph(file.digraph, file.partitions), out_path);
  else
    throw parameter_error("unknown format '" + format + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite digraph symmetry toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a catalog digraph");
  std::string family, out_path;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path);

  auto* check = app.add_subcommand("check", "decide a symmetry property");
  std::string check_file, property;
  Vertex check_max = 12;
  check->add_option("file", check_file)->required();
  check->add_option("--property", property)->required();
  check->add_option("--max-n", check_max);

  auto* reach = app.add_subcommand("reach", "reachability relation report");
  std::string reach_file, dot_path;
  bool want_witness = false;
  Vertex max_len = 0;
  reach->add_option("file", reach_file)->required();
  reach->add_flag("--witness", want_witness);
  reach->add_option("--max-len", max_len);
  reach->add_option("--dot", dot_path);

  auto* quot = app.add_subcommand("quotient", "quotient by a derived relation");
  std::string quot_file, relation, quot_out;
  quot->add_option("file", quot_file)->required();
  quot->add_option("--relation", relation)->required();
  quot->add_option("-o,--output", quot_out);

  auto* depth = app.add_subcommand("depth", "extension-property depth");
  std::string depth_file, depth_kind, forbidden;
  Vertex max_d = 4, bound = 0;
  std::uint64_t depth_seed = 0;
  depth->add_option("file", depth_file)->required();
  depth->add_option("--kind", depth_kind)->required();
  depth->add_option("--max-d", max_d);
  depth->add_option("--forbidden", forbidden);
  depth->add_option("--bound", bound);
  depth->add_option("--seed", depth_seed);

  auto* surv = app.add_subcommand("survey", "exhaustive classification survey");
  Vertex survey_max = 5;
  std::string oracle;
  surv->add_option("--max-n", survey_max)->required();
  surv->add_option("--oracle", oracle);

  auto* exp = app.add_subcommand("export", "export to dot or edge list");
  std::string export_file, format, export_out;
  exp->add_option("file", export_file)->required();
  exp->add_option("--format", format)->required();
  exp->add_option("-o,--output", export_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(family, params, seed, out_path);
    if (check->parsed()) return run_check(check_file, property, check_max);
    if (reach->parsed())
      return run_reach(reach_file, want_witness, max_len, dot_path);
    if (quot->parsed()) return run_quotient(quot_file, relation, quot_out);
    if (depth->parsed())
      return run_depth(depth_file, depth_kind, max_d, forbidden, bound,
                       depth_seed);
    if (surv->parsed()) return run_survey(survey_max, oracle);
    if (exp->parsed()) return run_export(export_file, format, export_out);
  } catch (const digsym::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

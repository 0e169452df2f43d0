#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "pgraph/errors.hpp"
#include "pgraph/groups.hpp"
#include "pgraph/io.hpp"
#include "pgraph/reconstruct.hpp"
#include "pgraph/verify.hpp"

namespace pgraph::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string spec;
  std::string in;
  std::string out;
  std::string digraph_out;
  std::string format = "json";
  std::string set;
  std::string corpus;
  std::optional<std::uint64_t> seed;
  std::size_t budget = kDefaultBruteForceBudget;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string render(const UndirectedGraph& g, const std::string& format) {
  if (format == "dot") {
    const NClassPartition classes = n_class_partition(g);
    return to_dot(g, &classes);
  }
  return dump(graph_to_json(g));
}

std::string render(const Digraph& d, const std::string& format) {
  return format == "dot" ? to_dot(d) : dump(digraph_to_json(d));
}

int gen(const Options& o, std::ostream& out) {
  const CayleyTable group = build_group(parse_group_spec(o.spec));
  const Digraph directed = directed_power_graph(group);
  const UndirectedGraph undirected = directed.underlying();
  if (o.out.empty() && o.digraph_out.empty()) {
    emit("", render(undirected, o.format), out);
    return kSuccess;
  }
  if (!o.out.empty()) emit(o.out, render(undirected, o.format), out);
  if (!o.digraph_out.empty()) emit(o.digraph_out, render(directed, o.format), out);
  return kSuccess;
}

int classify(const Options& o, std::ostream& out) {
  const UndirectedGraph g = read_graph_file(o.in);
  emit(o.out, classification_report(g).dump(2) + "\n", out);
  return kSuccess;
}

int reconstruct_cmd(const Options& o, std::ostream& out) {
  const UndirectedGraph g = read_graph_file(o.in);
  emit(o.out, render(reconstruct(g), o.format), out);
  return kSuccess;
}

json verify_one(const std::string& spec_text, const std::string& input, std::size_t budget) {
  const CayleyTable group = build_group(parse_group_spec(spec_text));
  const Digraph oracle = directed_power_graph(group);
  const UndirectedGraph g = input.empty() ? oracle.underlying() : read_graph_file(input);

  json result{{"spec", spec_text}};
  if (g.n() != oracle.n()) {
    result.update(verdict_to_json(Verdict{Verdict::Status::Fail,
                                          "vertex counts differ: graph has " + std::to_string(g.n()) +
                                              ", group has " + std::to_string(oracle.n()),
                                          0, std::nullopt}));
    return result;
  }

  Digraph rebuilt;
  try {
    rebuilt = reconstruct(g);
  } catch (const NotAPowerGraph& e) {
    result.update(verdict_to_json(Verdict{Verdict::Status::Fail, std::string("not a power graph: ") + e.what(), 0,
                                          std::nullopt}));
    return result;
  }

  Verdict verdict = certify(rebuilt, oracle, g);
  try {
    const Verdict brute = brute_force_certify(rebuilt, oracle, n_class_partition(g), budget);
    verdict.permutations_tried = brute.permutations_tried;
    result["brute_force"] = brute.passed() ? "PASS" : "FAIL";
    if (brute.passed() != verdict.passed()) {
      verdict.status = Verdict::Status::Fail;
      verdict.witness = "certify and brute-force search disagree";
    }
  } catch (const BudgetExceeded&) {
    result["brute_force"] = "budget_exceeded";
  }
  result.update(verdict_to_json(verdict));
  return result;
}

int verify(const Options& o, std::ostream& out) {
  if (o.corpus.empty()) {
    if (o.spec.empty()) throw InvalidSpec("verify needs --spec or --corpus");
    const json result = verify_one(o.spec, o.in, o.budget);
    emit(o.out, dump(result), out);
    return result["status"] == "PASS" ? kSuccess : kRejected;
  }

  std::ifstream manifest_file(o.corpus);
  if (!manifest_file) throw IoError("cannot open corpus manifest '" + o.corpus + "'");
  json manifest;
  try {
    manifest = json::parse(manifest_file);
  } catch (const json::exception& e) {
    throw InvalidGraph(std::string("malformed corpus manifest: ") + e.what());
  }
  if (!manifest.contains("specs") || !manifest["specs"].is_array())
    throw InvalidGraph("corpus manifest needs a 'specs' array");

  json results = json::array();
  std::size_t passed = 0;
  for (const auto& spec : manifest["specs"]) {
    json r = verify_one(spec.get<std::string>(), "", o.budget);
    if (r["status"] == "PASS") ++passed;
    results.push_back(std::move(r));
  }
  const std::size_t total = results.size();
  json summary{{"total", total}, {"passed", passed}, {"failed", total - passed}, {"results", std::move(results)}};
  emit(o.out, summary.dump(2) + "\n", out);
  return passed == total ? kSuccess : kRejected;
}

int closure_cmd(const Options& o, std::ostream& out) {
  const UndirectedGraph g = read_graph_file(o.in);
  VertexSet xs(g.n());
  if (!o.set.empty()) {
    xs = parse_vertex_list(o.set, g.n());
  } else if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::bernoulli_distribution coin(0.5);
    for (Vertex v = 0; v < g.n(); ++v)
      if (coin(rng)) xs.insert(v);
  }
  emit(o.out, dump(closure_report(g, xs)), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs of finite groups: closures, N-classes and directed reconstruction", "pgraph"};
  app.require_subcommand(1, 1);
  Options o;

  auto* gen_cmd = app.add_subcommand("gen", "Write the power graph and/or directed power graph of a group");
  gen_cmd->add_option("--spec", o.spec, "Group spec, e.g. dihedral:30")->required();
  gen_cmd->add_option("--out", o.out, "Power graph output file");
  gen_cmd->add_option("--digraph-out", o.digraph_out, "Directed power graph output file");
  gen_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  auto* classify_cmd = app.add_subcommand("classify", "Report N-classes, closures and plain/compound verdicts");
  classify_cmd->add_option("--in", o.in, "Graph JSON")->required();
  classify_cmd->add_option("--out", o.out);

  auto* rec_cmd = app.add_subcommand("reconstruct", "Reconstruct the directed power graph");
  rec_cmd->add_option("--in", o.in, "Graph JSON")->required();
  rec_cmd->add_option("--out", o.out);
  rec_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  auto* verify_cmd = app.add_subcommand("verify", "Reconstruct and certify against the group's directed power graph");
  verify_cmd->add_option("--spec", o.spec);
  verify_cmd->add_option("--in", o.in, "Graph JSON to reconstruct instead of the group's own power graph");
  verify_cmd->add_option("--corpus", o.corpus, "Manifest JSON with a 'specs' array");
  verify_cmd->add_option("--budget", o.budget, "Brute-force candidate budget");
  verify_cmd->add_option("--out", o.out);

  auto* closure_sub = app.add_subcommand("closure", "Neighbourhood and closure of a vertex set");
  closure_sub->add_option("--in", o.in, "Graph JSON")->required();
  closure_sub->add_option("--set", o.set, "Comma-separated vertex ids");
  closure_sub->add_option("--seed", o.seed, "Sample a random set when --set is absent");
  closure_sub->add_option("--out", o.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kIoOrParseError;
  }

  try {
    if (gen_cmd->parsed()) return gen(o, out);
    if (classify_cmd->parsed()) return classify(o, out);
    if (rec_cmd->parsed()) return reconstruct_cmd(o, out);
    if (verify_cmd->parsed()) return verify(o, out);
    return closure_cmd(o, out);
  } catch (const NotAPowerGraph& e) {
    err << "not a power graph: " << e.what() << '\n';
    return kRejected;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParseError;
  }
}

}  // namespace pgraph::cli

#include "pgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "pgraph/classify.hpp"
#include "pgraph/errors.hpp"

namespace pgraph {

using nlohmann::json;

namespace {

std::size_t vertex_count(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw InvalidGraph("missing field 'n'");
  const auto& n = j.at("n");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw InvalidGraph("'n' must be a positive integer");
  return n.get<std::size_t>();
}

std::vector<std::pair<Vertex, Vertex>> pairs(const json& j, const char* field) {
  if (!j.contains(field)) throw InvalidGraph(std::string("missing field '") + field + "'");
  const auto& list = j.at(field);
  if (!list.is_array()) throw InvalidGraph(std::string("'") + field + "' must be an array");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer() ||
        item[0].get<long long>() < 0 || item[1].get<long long>() < 0)
      throw InvalidGraph(std::string("entries of '") + field + "' must be pairs of non-negative integers");
    out.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
  }
  return out;
}

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidGraph(std::string("malformed JSON: ") + e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

void dot_nodes(std::ostringstream& out, std::size_t n, const NClassPartition* classes) {
  for (Vertex v = 0; v < n; ++v) {
    out << "  " << v;
    if (classes) {
      const std::size_t c = classes->class_of(v);
      out << " [class=" << c << ", colorscheme=set312, style=filled, fillcolor=" << (c % 12) + 1 << "]";
    }
    out << ";\n";
  }
}

json members(const VertexSet& s) { return json(s.members()); }

}  // namespace

UndirectedGraph graph_from_json(const json& j) {
  const std::size_t n = vertex_count(j);
  return UndirectedGraph(n, pairs(j, "edges"));
}

json graph_to_json(const UndirectedGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Digraph digraph_from_json(const json& j) {
  const std::size_t n = vertex_count(j);
  return Digraph(n, pairs(j, "arcs"));
}

json digraph_to_json(const Digraph& d) {
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return json{{"n", d.n()}, {"arcs", std::move(arcs)}};
}

UndirectedGraph read_graph(std::istream& in) { return graph_from_json(parse(in)); }
Digraph read_digraph(std::istream& in) { return digraph_from_json(parse(in)); }

UndirectedGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

Digraph read_digraph_file(const std::string& path) {
  auto in = open(path);
  return read_digraph(in);
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string to_dot(const UndirectedGraph& g, const NClassPartition* classes) {
  std::ostringstream out;
  out << "graph G {\n";
  dot_nodes(out, g.n(), classes);
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& d, const NClassPartition* classes) {
  std::ostringstream out;
  out << "digraph G {\n";
  dot_nodes(out, d.n(), classes);
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

json classification_report(const UndirectedGraph& g) {
  const NClassPartition partition = n_class_partition(g);
  const VertexSet stars = star_set(g);
  const bool classifiable = stars.size() == 1;

  std::map<std::size_t, ClassKind> verdicts;
  if (classifiable) verdicts = classify_all(g, partition, stars.first());

  json classes = json::array();
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const VertexSet& c = partition[i];
    json entry{{"index", i},
               {"members", members(c)},
               {"size", c.size()},
               {"closure_size", closure(g, c).size()},
               {"star", partition.star_class() == i}};
    if (auto it = verdicts.find(i); it != verdicts.end()) {
      const ClassKind& k = it->second;
      entry["kind"] = k.compound() ? "compound" : "plain";
      entry["parameters"] = k.parameters ? json{{"p", k.parameters->p}, {"r", k.parameters->r}, {"s", k.parameters->s}}
                                         : json(nullptr);
      entry["critical"] = k.critical;
    } else {
      entry["kind"] = nullptr;
      entry["parameters"] = nullptr;
      entry["critical"] = false;
    }
    classes.push_back(std::move(entry));
  }
  return json{{"n", g.n()},
              {"star_set", members(stars)},
              {"identity", classifiable ? json(stars.first()) : json(nullptr)},
              {"classified", classifiable},
              {"classes", std::move(classes)}};
}

json closure_report(const UndirectedGraph& g, const VertexSet& xs) {
  return json{{"set", members(xs)},
              {"neighbourhood", members(set_neighbourhood(g, xs))},
              {"closure", members(closure(g, xs))}};
}

json verdict_to_json(const Verdict& v) {
  json j{{"status", v.passed() ? "PASS" : "FAIL"}, {"blocks_compared", v.blocks_compared}};
  if (v.witness) j["witness"] = *v.witness;
  if (v.permutations_tried) j["permutations_tried"] = *v.permutations_tried;
  return j;
}

VertexSet parse_vertex_list(const std::string& text, std::size_t n) {
  VertexSet out(n);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view token(text.data() + start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || v >= n)
        throw InvalidGraph("bad vertex id '" + std::string(token) + "'");
      out.insert(v);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace pgraph

#ifndef PGRAPH_TESTS_SUPPORT_HPP
#define PGRAPH_TESTS_SUPPORT_HPP

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "pgraph/graph.hpp"

namespace support {

inline std::vector<std::string> corpus() {
  std::ifstream in(PGRAPH_CORPUS_MANIFEST);
  const auto manifest = nlohmann::json::parse(in);
  return manifest.at("specs").get<std::vector<std::string>>();
}

inline pgraph::UndirectedGraph graph_of(const oracle::Group& g) { return {g.n, oracle::edges(g)}; }
inline pgraph::Digraph digraph_of(const oracle::Group& g) { return {g.n, oracle::arcs(g)}; }

inline pgraph::VertexSet to_vertex_set(std::size_t n, const std::set<std::size_t>& s) {
  return pgraph::VertexSet::from_range(n, {s.begin(), s.end()});
}

inline std::set<std::size_t> to_set(const pgraph::VertexSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

}  // namespace support

#endif  // PGRAPH_TESTS_SUPPORT_HPP

#ifndef PGRAPH_IO_HPP
#define PGRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pgraph/graph.hpp"
#include "pgraph/verify.hpp"

namespace pgraph {

// Graph JSON:   {"n": 4, "edges": [[0,1], ...]}
// Digraph JSON: {"n": 4, "arcs":  [[1,0], ...]}
// Parsing throws InvalidGraph. Output lists are sorted.

UndirectedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const UndirectedGraph& g);
Digraph digraph_from_json(const nlohmann::json& j);
nlohmann::json digraph_to_json(const Digraph& d);

UndirectedGraph read_graph(std::istream& in);
Digraph read_digraph(std::istream& in);
UndirectedGraph read_graph_file(const std::string& path);
Digraph read_digraph_file(const std::string& path);

/// Compact single-line JSON followed by a newline.
std::string dump(const nlohmann::json& j);

/// DOT text; vertex ids are node names. With a partition, nodes get a
/// `class` attribute and a fill colour per class.
std::string to_dot(const UndirectedGraph& g, const NClassPartition* classes = nullptr);
std::string to_dot(const Digraph& d, const NClassPartition* classes = nullptr);

/// Per-class report: members, size, closure size, kind, parameters and the
/// critical flag. Kinds are only filled in when the star set is a single vertex.
nlohmann::json classification_report(const UndirectedGraph& g);

/// {"neighbourhood": [...], "closure": [...], "set": [...]}
nlohmann::json closure_report(const UndirectedGraph& g, const VertexSet& xs);

/// {"status", "witness"?, "blocks_compared", "permutations_tried"?}
nlohmann::json verdict_to_json(const Verdict& v);

/// Parses "1,2,5" into a vertex set; throws InvalidGraph on bad ids.
VertexSet parse_vertex_list(const std::string& text, std::size_t n);

}  // namespace pgraph

#endif  // PGRAPH_IO_HPP

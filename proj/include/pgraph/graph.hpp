#ifndef PGRAPH_GRAPH_HPP
#define PGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pgraph/vertex_set.hpp"

namespace pgraph {

using Edge = std::pair<Vertex, Vertex>;
using Arc = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Rows hold closed neighbourhoods, so N[x] is a reference lookup and all
/// set-level queries reduce to word-wise intersections.
class UndirectedGraph {
public:
  UndirectedGraph() = default;

  /// Throws InvalidGraph on n == 0, self-loops or out-of-range ids.
  /// Duplicate and reversed pairs collapse to one edge.
  UndirectedGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const { return closed_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return u != v && closed_[u].contains(v); }
  const VertexSet& closed_row(Vertex x) const { return closed_[x]; }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
  std::vector<VertexSet> closed_;
  std::size_t edge_count_ = 0;
};

/// Irreflexive directed graph on vertices 0..n-1.
class Digraph {
public:
  Digraph() = default;

  /// Throws InvalidGraph on n == 0, self-loops or out-of-range ids.
  Digraph(std::size_t n, const std::vector<Arc>& arcs);

  std::size_t n() const { return out_.size(); }
  std::size_t arc_count() const;

  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
  const VertexSet& out(Vertex u) const { return out_[u]; }

  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  UndirectedGraph underlying() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  std::vector<VertexSet> out_;
};

VertexSet closed_neighbourhood(const UndirectedGraph& g, Vertex x);

/// Intersection of the closed neighbourhoods of the members of X; V for X = {}.
VertexSet set_neighbourhood(const UndirectedGraph& g, const VertexSet& xs);

/// Neighbourhood closure N[N[X]]. A Moore closure operator on any graph.
VertexSet closure(const UndirectedGraph& g, const VertexSet& xs);

/// Vertices adjacent to every other vertex.
VertexSet star_set(const UndirectedGraph& g);

/// Partition of the vertex set into closed-twin classes (equal N[x]).
///
/// Classes are ordered by their smallest member. When the star set is
/// nonempty it is exactly one class, reported by star_class().
class NClassPartition {
public:
  NClassPartition() = default;
  NClassPartition(std::vector<VertexSet> classes, std::size_t n);

  std::size_t size() const { return classes_.size(); }
  const std::vector<VertexSet>& classes() const { return classes_; }
  const VertexSet& operator[](std::size_t i) const { return classes_[i]; }

  std::size_t class_of(Vertex v) const { return class_of_[v]; }
  std::optional<std::size_t> star_class() const { return star_; }

  /// Index of the class equal to c, if c is one of the classes.
  std::optional<std::size_t> index_of(const VertexSet& c) const;

private:
  friend NClassPartition n_class_partition(const UndirectedGraph& g);

  std::vector<VertexSet> classes_;
  std::vector<std::size_t> class_of_;
  std::optional<std::size_t> star_;
};

NClassPartition n_class_partition(const UndirectedGraph& g);

/// Isomorphism g -> h (map[v] is the image of v), found by matching the
/// N-class quotients of both graphs. Since twins are interchangeable, any
/// class-size-preserving isomorphism of the quotients lifts to one of the
/// graphs. Class members are matched in ascending order, so the result is
/// deterministic. nullopt when the graphs are not isomorphic.
std::optional<std::vector<Vertex>> twin_quotient_isomorphism(const UndirectedGraph& g, const UndirectedGraph& h);

}  // namespace pgraph

#endif  // PGRAPH_GRAPH_HPP

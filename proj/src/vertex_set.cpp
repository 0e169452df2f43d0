#include "pgraph/vertex_set.hpp"

namespace pgraph {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
  for (Vertex v : members) bits_.set(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::from_range(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.bits_.set(v);
  return s;
}

Vertex VertexSet::first() const {
  auto v = bits_.find_first();
  return v == Bits::npos ? universe() : static_cast<Vertex>(v);
}

Vertex VertexSet::next(Vertex v) const {
  auto w = bits_.find_next(v);
  return w == Bits::npos ? universe() : static_cast<Vertex>(w);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool operator<(const VertexSet& lhs, const VertexSet& rhs) {
  Vertex a = lhs.first();
  Vertex b = rhs.first();
  const Vertex end_a = lhs.universe();
  const Vertex end_b = rhs.universe();
  while (a != end_a && b != end_b) {
    if (a != b) return a < b;
    a = lhs.next(a);
    b = rhs.next(b);
  }
  return a == end_a && b != end_b;
}

}  // namespace pgraph

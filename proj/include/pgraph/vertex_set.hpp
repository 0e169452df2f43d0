#ifndef PGRAPH_VERTEX_SET_HPP
#define PGRAPH_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pgraph {

using Vertex = std::size_t;

/// Subset of the vertex range [0, universe) stored as a fixed-width bitset.
///
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_range(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

  void insert(Vertex v) { bits_.set(v); }
  void erase(Vertex v) { bits_.reset(v); }

  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  /// Smallest member, or universe() when empty.
  Vertex first() const;
  /// Smallest member greater than v, or universe() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto v = bits_.find_first(); v != Bits::npos; v = bits_.find_next(v)) f(static_cast<Vertex>(v));
  }

  VertexSet& operator&=(const VertexSet& rhs) { bits_ &= rhs.bits_; return *this; }
  VertexSet& operator|=(const VertexSet& rhs) { bits_ |= rhs.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& rhs) { bits_ -= rhs.bits_; return *this; }

  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on sorted member lists; used for deterministic sorting.
  friend bool operator<(const VertexSet& lhs, const VertexSet& rhs);

  std::size_t hash() const { return boost::hash_value(bits_); }

private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

}  // namespace pgraph

template <>
struct std::hash<pgraph::VertexSet> {
  std::size_t operator()(const pgraph::VertexSet& s) const noexcept { return s.hash(); }
};

#endif  // PGRAPH_VERTEX_SET_HPP

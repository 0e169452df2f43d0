#ifndef PGRAPH_RECONSTRUCT_HPP
#define PGRAPH_RECONSTRUCT_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "pgraph/classify.hpp"
#include "pgraph/graph.hpp"

namespace pgraph {

/// Partition of V \ {identity} that agrees, up to a graph automorphism
/// permuting vertices inside N-classes, with the partition into
/// generator-equivalence classes (elements generating the same cyclic
/// subgroup).
class DiamondPartition {
public:
  /// Blocks must be nonempty, pairwise disjoint and cover V \ {identity};
  /// throws std::invalid_argument otherwise. Blocks are reordered by their
  /// smallest member.
  DiamondPartition(std::vector<VertexSet> blocks, Vertex identity, std::size_t n);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// Block index of v; size() for the identity.
  std::size_t block_of(Vertex v) const { return block_of_[v]; }
  Vertex identity() const { return identity_; }

private:
  std::vector<VertexSet> blocks_;
  std::vector<std::size_t> block_of_;
  Vertex identity_;
};

/// Splits a compound class into consecutive runs of its sorted members with
/// sizes phi(p^(s+1)), ..., phi(p^r). Throws SizeMismatch when |C| differs
/// from p^r - p^s.
std::vector<VertexSet> partition_compound_class(const VertexSet& c, const CompoundParameters& params);

/// Plain classes become single blocks, compound classes are split by
/// partition_compound_class.
DiamondPartition diamond_partition(const UndirectedGraph& g, const NClassPartition& partition,
                                   const std::map<std::size_t, ClassKind>& verdicts, Vertex identity);

/// Orients every edge of g from block sizes:
///   - edges at the identity point into it,
///   - edges inside a block become two opposite arcs,
///   - edges between blocks of different size point from the larger block,
///   - edges between equal-size blocks point away from the block that is
///     adjacent to an involution (a non-identity singleton block).
/// Throws EqualSingletonBlocks / NoInvolutionTiebreak on inputs that cannot
/// come from a power graph.
Digraph assign_arc_directions(const UndirectedGraph& g, const DiamondPartition& dp);

/// Directed power graph, up to isomorphism, from an undirected power graph.
/// Throws NotAPowerGraph when the input is recognisably not a power graph.
Digraph reconstruct(const UndirectedGraph& g);

}  // namespace pgraph

#endif  // PGRAPH_RECONSTRUCT_HPP

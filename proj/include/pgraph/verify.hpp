#ifndef PGRAPH_VERIFY_HPP
#define PGRAPH_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgraph/graph.hpp"

namespace pgraph {

/// Classes of the mutual-arc relation (x ~ y iff x = y or both arcs exist),
/// ordered by smallest member.
struct DiamondClasses {
  std::vector<VertexSet> blocks;
  std::vector<std::size_t> block_of;
};

/// Throws NotTransitive when the mutual-arc relation is not an equivalence.
DiamondClasses diamond_classes_of_digraph(const Digraph& d);

struct QuotientNode {
  std::size_t block_size;
  std::size_t n_class;  // index into the NClassPartition, or npos if the block spans classes
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// One node per block; arcs[i][j] iff some member of block i has an arc to
/// some member of block j (i != j).
struct QuotientDigraph {
  std::vector<QuotientNode> nodes;
  std::vector<std::vector<char>> arcs;
};

QuotientDigraph quotient_digraph(const Digraph& d, const DiamondClasses& classes, const NClassPartition& partition);

/// First violation of block homogeneity: a pair of distinct blocks with
/// arcs in both directions, or with arcs between only some member pairs.
std::optional<std::string> quotient_violation(const Digraph& d, const DiamondClasses& classes);

struct Verdict {
  enum class Status { Pass, Fail };

  Status status = Status::Fail;
  std::optional<std::string> witness;
  std::size_t blocks_compared = 0;
  std::optional<std::size_t> permutations_tried;

  bool passed() const { return status == Status::Pass; }
};

/// PASS iff some permutation fixing every N-class of g setwise maps
/// `reconstructed` onto `oracle`.
///
/// Both underlying graphs must equal g. Blocks of both digraphs are matched
/// inside each N-class by size (equal-size blocks within one class are tried
/// in every order) and the digraphs are then compared pair by pair against
/// the oracle's block-level arc relation. A failing verdict carries the
/// lexicographically smallest offending edge, block or arc.
///
/// Throws VertexCountMismatch when vertex counts differ.
Verdict certify(const Digraph& reconstructed, const Digraph& oracle, const UndirectedGraph& g);

inline constexpr std::size_t kDefaultBruteForceBudget = 1'000'000;

/// Exhaustive backtracking over permutations that fix each class of
/// `partition` setwise. Every tentative image of a vertex counts against the
/// budget; throws BudgetExceeded when it runs out and VertexCountMismatch
/// when vertex counts differ.
Verdict brute_force_certify(const Digraph& reconstructed, const Digraph& oracle, const NClassPartition& partition,
                            std::size_t budget = kDefaultBruteForceBudget);

}  // namespace pgraph

#endif  // PGRAPH_VERIFY_HPP

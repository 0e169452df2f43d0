#include "pgraph/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pgraph/errors.hpp"
#include "pgraph/groups.hpp"

namespace pgraph {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

std::string edge_text(Vertex u, Vertex v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

// Directed power graph of `group`, relabelled onto g through an isomorphism
// of the undirected graphs.
Digraph transport_oracle(const UndirectedGraph& g, const CayleyTable& group, const std::string& name) {
  const UndirectedGraph target = power_graph(group);
  const auto map = twin_quotient_isomorphism(g, target);
  if (!map) throw NotAPowerGraph("graph is not isomorphic to the power graph of " + name);
  std::vector<Vertex> preimage(g.n());
  for (Vertex v = 0; v < g.n(); ++v) preimage[(*map)[v]] = v;
  std::vector<Arc> arcs;
  for (auto [a, b] : directed_power_graph(group).arcs()) arcs.emplace_back(preimage[a], preimage[b]);
  return Digraph(g.n(), arcs);
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

}  // namespace

DiamondPartition::DiamondPartition(std::vector<VertexSet> blocks, Vertex identity, std::size_t n)
    : blocks_(std::move(blocks)), block_of_(n, n), identity_(identity) {
  if (identity >= n) throw std::invalid_argument("identity out of range");
  std::sort(blocks_.begin(), blocks_.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty() || blocks_[i].universe() != n) throw std::invalid_argument("invalid block");
    blocks_[i].for_each([&](Vertex v) {
      if (v == identity || block_of_[v] != n) throw std::invalid_argument("blocks overlap or contain the identity");
      block_of_[v] = i;
    });
  }
  for (Vertex v = 0; v < n; ++v)
    if (v != identity && block_of_[v] == n)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not covered by any block");
  block_of_[identity] = blocks_.size();
}

std::vector<VertexSet> partition_compound_class(const VertexSet& c, const CompoundParameters& params) {
  const auto [p, r, s] = params;
  if (c.size() != ipow(p, r) - ipow(p, s))
    throw SizeMismatch("class of size " + std::to_string(c.size()) + " cannot have parameters (" + std::to_string(p) +
                       "," + std::to_string(r) + "," + std::to_string(s) + ")");
  std::vector<VertexSet> blocks;
  Vertex v = c.first();
  for (std::size_t i = s + 1; i <= r; ++i) {
    VertexSet block(c.universe());
    for (std::size_t k = 0; k < euler_phi(ipow(p, i)); ++k, v = c.next(v)) block.insert(v);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

DiamondPartition diamond_partition(const UndirectedGraph& g, const NClassPartition& partition,
                                   const std::map<std::size_t, ClassKind>& verdicts, Vertex identity) {
  std::vector<VertexSet> blocks;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i == partition.star_class()) continue;
    const auto it = verdicts.find(i);
    if (it == verdicts.end()) throw std::invalid_argument("no verdict for class " + std::to_string(i));
    if (it->second.compound()) {
      for (auto& block : partition_compound_class(partition[i], *it->second.parameters)) blocks.push_back(std::move(block));
    } else {
      blocks.push_back(partition[i]);
    }
  }
  return DiamondPartition(std::move(blocks), identity, g.n());
}

Digraph assign_arc_directions(const UndirectedGraph& g, const DiamondPartition& dp) {
  const Vertex identity = dp.identity();
  if (star_set(g) != VertexSet(g.n(), {identity}))
    throw std::invalid_argument("star set must be exactly {" + std::to_string(identity) + "}");

  const auto& blocks = dp.blocks();
  VertexSet involutions(g.n());
  for (const auto& block : blocks)
    if (block.size() == 1) involutions |= block;

  std::vector<char> near_involution(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    blocks[b].for_each([&](Vertex v) {
      VertexSet others = g.closed_row(v) & involutions;
      others.erase(v);
      if (!others.empty()) near_involution[b] = 1;
    });

  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    if (u == identity || v == identity) {
      arcs.emplace_back(u == identity ? v : u, identity);
      continue;
    }
    const std::size_t bu = dp.block_of(u), bv = dp.block_of(v);
    if (bu == bv) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
      continue;
    }
    const std::size_t su = blocks[bu].size(), sv = blocks[bv].size();
    if (su != sv) {
      su > sv ? arcs.emplace_back(u, v) : arcs.emplace_back(v, u);
      continue;
    }
    if (su == 1) throw EqualSingletonBlocks("edge " + edge_text(u, v) + " joins two non-identity singleton blocks");
    if (near_involution[bu] == near_involution[bv])
      throw NoInvolutionTiebreak("edge " + edge_text(u, v) + " joins equal-size blocks that are " +
                                 (near_involution[bu] ? "both" : "neither") + " adjacent to an involution");
    near_involution[bu] ? arcs.emplace_back(u, v) : arcs.emplace_back(v, u);
  }
  return Digraph(g.n(), arcs);
}

Digraph reconstruct(const UndirectedGraph& g) {
  const std::size_t n = g.n();
  if (n <= 2) {
    const CayleyTable trivial = build_group({CyclicSpec{n}});
    return transport_oracle(g, trivial, "C" + std::to_string(n));
  }

  const VertexSet stars = star_set(g);
  const std::size_t s = stars.size();
  if (s == n) {
    if (!prime_power_decompose(n)) throw NotAPowerGraph("complete graph on " + std::to_string(n) + " vertices, not a prime power");
    return transport_oracle(g, build_group({CyclicSpec{n}}), "C" + std::to_string(n));
  }
  if (s == 1 + euler_phi(n)) return transport_oracle(g, build_group({CyclicSpec{n}}), "C" + std::to_string(n));
  if (s == 2) {
    if (!is_power_of_two(n) || n < 8)
      throw NotAPowerGraph("two star vertices but n = " + std::to_string(n) + " is not 2^k with k >= 3");
    return transport_oracle(g, build_group({QuaternionSpec{n}}), "Q" + std::to_string(n));
  }
  if (s != 1) throw NotAPowerGraph("star set of size " + std::to_string(s) + " matches no finite group");

  try {
    const Vertex identity = stars.first();
    const NClassPartition partition = n_class_partition(g);
    const auto verdicts = classify_all(g, partition, identity);
    return assign_arc_directions(g, diamond_partition(g, partition, verdicts, identity));
  } catch (const Error& e) {
    throw NotAPowerGraph(e.what());
  }
}

}  // namespace pgraph

#include "pgraph/verify.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "pgraph/errors.hpp"

namespace pgraph {

namespace {

constexpr std::size_t kMaxMatchings = 100'000;

std::string pair_text(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::vector<VertexSet> in_rows(const Digraph& d) {
  std::vector<VertexSet> in(d.n(), VertexSet(d.n()));
  for (Vertex u = 0; u < d.n(); ++u) d.out(u).for_each([&](Vertex v) { in[v].insert(u); });
  return in;
}

Verdict fail(std::string witness, std::size_t blocks_compared = 0) {
  Verdict v;
  v.status = Verdict::Status::Fail;
  v.witness = std::move(witness);
  v.blocks_compared = blocks_compared;
  return v;
}

std::optional<std::string> underlying_mismatch(const Digraph& d, const UndirectedGraph& g, const char* who) {
  const UndirectedGraph u = d.underlying();
  if (u == g) return std::nullopt;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      if (u.adjacent(a, b) != g.adjacent(a, b))
        return std::string("edge {") + std::to_string(a) + "," + std::to_string(b) + "} " +
               (g.adjacent(a, b) ? "missing from " : "extra in ") + who;
  return std::nullopt;
}

std::optional<std::string> block_spans_classes(const DiamondClasses& dc, const NClassPartition& partition,
                                               const char* who) {
  for (const auto& block : dc.blocks) {
    const std::size_t c = partition.class_of(block.first());
    if (!block.is_subset_of(partition[c]))
      return std::string("block ") + set_text(block) + " of " + who + " spans several N-classes";
  }
  return std::nullopt;
}

// Blocks of each N-class sorted by (size, smallest member).
std::vector<std::vector<std::size_t>> blocks_per_class(const DiamondClasses& dc, const NClassPartition& partition) {
  std::vector<std::vector<std::size_t>> per(partition.size());
  for (std::size_t b = 0; b < dc.blocks.size(); ++b) per[partition.class_of(dc.blocks[b].first())].push_back(b);
  for (auto& list : per)
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      return std::make_tuple(dc.blocks[x].size(), dc.blocks[x].first()) <
             std::make_tuple(dc.blocks[y].size(), dc.blocks[y].first());
    });
  return per;
}

std::string sizes_text(const DiamondClasses& dc, const std::vector<std::size_t>& list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? "," : "") + std::to_string(dc.blocks[list[i]].size());
  return out + "]";
}

}  // namespace

DiamondClasses diamond_classes_of_digraph(const Digraph& d) {
  const std::size_t n = d.n();
  const auto in = in_rows(d);
  std::vector<VertexSet> mutual(n);
  for (Vertex x = 0; x < n; ++x) {
    mutual[x] = d.out(x) & in[x];
    mutual[x].insert(x);
  }
  DiamondClasses dc;
  dc.block_of.assign(n, n);
  for (Vertex x = 0; x < n; ++x) {
    if (dc.block_of[x] != n) continue;
    mutual[x].for_each([&](Vertex y) {
      if (mutual[y] != mutual[x])
        throw NotTransitive("mutual-arc relation is not transitive at vertices " + std::to_string(x) + " and " +
                            std::to_string(y));
      dc.block_of[y] = dc.blocks.size();
    });
    dc.blocks.push_back(mutual[x]);
  }
  return dc;
}

QuotientDigraph quotient_digraph(const Digraph& d, const DiamondClasses& classes, const NClassPartition& partition) {
  QuotientDigraph q;
  const std::size_t k = classes.blocks.size();
  for (const auto& block : classes.blocks) {
    const std::size_t c = partition.class_of(block.first());
    q.nodes.push_back({block.size(), block.is_subset_of(partition[c]) ? c : QuotientNode::npos});
  }
  q.arcs.assign(k, std::vector<char>(k, 0));
  for (Vertex u = 0; u < d.n(); ++u)
    d.out(u).for_each([&](Vertex v) {
      const std::size_t bu = classes.block_of[u], bv = classes.block_of[v];
      if (bu != bv) q.arcs[bu][bv] = 1;
    });
  return q;
}

std::optional<std::string> quotient_violation(const Digraph& d, const DiamondClasses& classes) {
  const auto& blocks = classes.blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      std::size_t count = 0;
      blocks[i].for_each([&](Vertex u) { count += (d.out(u) & blocks[j]).size(); });
      if (count == 0) continue;
      if (count != blocks[i].size() * blocks[j].size()) {
        std::optional<std::string> missing;
        blocks[i].for_each([&](Vertex u) {
          blocks[j].for_each([&](Vertex v) {
            if (!missing && !d.has_arc(u, v)) missing = pair_text(u, v);
          });
        });
        return "arcs from block " + set_text(blocks[i]) + " to block " + set_text(blocks[j]) +
               " are incomplete, e.g. missing " + *missing;
      }
      bool reverse = false;
      blocks[j].for_each([&](Vertex v) { reverse = reverse || d.out(v).intersects(blocks[i]); });
      if (reverse) return "blocks " + set_text(blocks[i]) + " and " + set_text(blocks[j]) + " have arcs in both directions";
    }
  return std::nullopt;
}

Verdict certify(const Digraph& reconstructed, const Digraph& oracle, const UndirectedGraph& g) {
  if (reconstructed.n() != oracle.n() || reconstructed.n() != g.n())
    throw VertexCountMismatch("vertex counts differ: " + std::to_string(reconstructed.n()) + ", " +
                              std::to_string(oracle.n()) + ", " + std::to_string(g.n()));
  const std::size_t n = g.n();

  if (auto w = underlying_mismatch(reconstructed, g, "reconstruction")) return fail(*w);
  if (auto w = underlying_mismatch(oracle, g, "oracle")) return fail(*w);

  DiamondClasses rec, orc;
  try {
    rec = diamond_classes_of_digraph(reconstructed);
  } catch (const NotTransitive& e) {
    return fail(std::string("reconstruction: ") + e.what());
  }
  try {
    orc = diamond_classes_of_digraph(oracle);
  } catch (const NotTransitive& e) {
    return fail(std::string("oracle: ") + e.what());
  }
  if (auto w = quotient_violation(oracle, orc)) return fail("oracle: " + *w);

  const NClassPartition partition = n_class_partition(g);
  if (auto w = block_spans_classes(rec, partition, "reconstruction")) return fail(*w);
  if (auto w = block_spans_classes(orc, partition, "oracle")) return fail(*w);

  const auto rec_per = blocks_per_class(rec, partition);
  const auto orc_per = blocks_per_class(orc, partition);

  // Size-respecting matching; runs of equal sizes inside one class are ties.
  std::vector<std::size_t> match(rec.blocks.size());
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> ties;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const auto& rl = rec_per[c];
    const auto& ol = orc_per[c];
    bool same = rl.size() == ol.size();
    for (std::size_t k = 0; same && k < rl.size(); ++k) same = rec.blocks[rl[k]].size() == orc.blocks[ol[k]].size();
    if (!same)
      return fail("N-class " + set_text(partition[c]) + ": block sizes " + sizes_text(rec, rl) +
                  " in reconstruction vs " + sizes_text(orc, ol) + " in oracle");
    for (std::size_t k = 0; k < rl.size();) {
      std::size_t end = k;
      while (end < rl.size() && rec.blocks[rl[end]].size() == rec.blocks[rl[k]].size()) ++end;
      for (std::size_t t = k; t < end; ++t) match[rl[t]] = ol[t];
      if (end - k > 1)
        ties.emplace_back(std::vector<std::size_t>(rl.begin() + static_cast<std::ptrdiff_t>(k),
                                                   rl.begin() + static_cast<std::ptrdiff_t>(end)),
                          std::vector<std::size_t>(ol.begin() + static_cast<std::ptrdiff_t>(k),
                                                   ol.begin() + static_cast<std::ptrdiff_t>(end)));
      k = end;
    }
  }
  for (auto& [r, o] : ties) std::sort(o.begin(), o.end());

  auto first_mismatch = [&]() -> std::optional<std::string> {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const std::size_t bu = rec.block_of[u], bv = rec.block_of[v];
        const bool expected =
            bu == bv || oracle.has_arc(orc.blocks[match[bu]].first(), orc.blocks[match[bv]].first());
        if (reconstructed.has_arc(u, v) != expected)
          return "arc " + pair_text(u, v) +
                 (expected ? " expected from oracle but missing in reconstruction"
                           : " present in reconstruction but absent from oracle");
      }
    return std::nullopt;
  };

  std::optional<std::string> witness;
  for (std::size_t tried = 0; tried < kMaxMatchings; ++tried) {
    for (auto& [r, o] : ties)
      for (std::size_t k = 0; k < r.size(); ++k) match[r[k]] = o[k];
    auto w = first_mismatch();
    if (!w) {
      Verdict v;
      v.status = Verdict::Status::Pass;
      v.blocks_compared = rec.blocks.size();
      return v;
    }
    if (!witness) witness = w;
    // advance the tie permutations like an odometer
    std::size_t t = 0;
    while (t < ties.size() && !std::next_permutation(ties[t].second.begin(), ties[t].second.end())) ++t;
    if (t == ties.size()) break;
  }
  return fail(*witness, rec.blocks.size());
}

Verdict brute_force_certify(const Digraph& reconstructed, const Digraph& oracle, const NClassPartition& partition,
                            std::size_t budget) {
  if (reconstructed.n() != oracle.n())
    throw VertexCountMismatch("vertex counts differ: " + std::to_string(reconstructed.n()) + " vs " +
                              std::to_string(oracle.n()));
  const std::size_t n = reconstructed.n();
  const auto rec_in = in_rows(reconstructed);
  const auto orc_in = in_rows(oracle);

  // (out-degree, in-degree, mutual) is invariant under any isomorphism.
  using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;
  auto signature = [](const Digraph& d, const std::vector<VertexSet>& in, Vertex v) {
    return Signature{d.out(v).size(), in[v].size(), (d.out(v) & in[v]).size()};
  };
  std::vector<Signature> rs(n), os(n);
  for (Vertex v = 0; v < n; ++v) {
    rs[v] = signature(reconstructed, rec_in, v);
    os[v] = signature(oracle, orc_in, v);
  }

  Verdict verdict;
  verdict.permutations_tried = 0;
  verdict.blocks_compared = partition.size();
  for (std::size_t c = 0; c < partition.size(); ++c) {
    std::vector<Signature> a, b;
    partition[c].for_each([&](Vertex v) {
      a.push_back(rs[v]);
      b.push_back(os[v]);
    });
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      verdict.witness = "degree signatures differ inside N-class " + set_text(partition[c]);
      return verdict;
    }
  }

  std::vector<Vertex> image(n, n);
  std::vector<char> used(n, 0);
  std::size_t tried = 0;

  auto consistent = [&](Vertex v, Vertex w, Vertex upto) {
    for (Vertex u = 0; u < upto; ++u) {
      const Vertex iu = image[u];
      if (reconstructed.has_arc(v, u) != oracle.has_arc(w, iu)) return false;
      if (reconstructed.has_arc(u, v) != oracle.has_arc(iu, w)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    bool found = false;
    partition[partition.class_of(v)].for_each([&](Vertex w) {
      if (found || used[w] || rs[v] != os[w]) return;
      if (++tried > budget)
        throw BudgetExceeded("brute-force search exceeded its budget of " + std::to_string(budget) + " candidates");
      if (!consistent(v, w, v)) return;
      image[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) {
        found = true;
        return;
      }
      used[w] = 0;
    });
    return found;
  };

  const bool ok = search(search, 0);
  verdict.permutations_tried = tried;
  if (ok) {
    verdict.status = Verdict::Status::Pass;
  } else {
    verdict.witness = "no class-preserving permutation maps the reconstruction onto the oracle";
  }
  return verdict;
}

}  // namespace pgraph

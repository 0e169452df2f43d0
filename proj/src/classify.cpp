#include "pgraph/classify.hpp"

#include <stdexcept>
#include <string>

#include "pgraph/errors.hpp"

namespace pgraph {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

bool critical_from_closure(const VertexSet& c, const VertexSet& hat, Vertex identity) {
  if (c.contains(identity)) return false;
  VertexSet expected = c;
  expected.insert(identity);
  if (hat != expected) return false;
  const auto pp = prime_power_decompose(hat.size());
  return pp && pp->r >= 2;
}

void check_star(const NClassPartition& partition, Vertex identity, std::size_t n) {
  if (identity >= n) throw std::invalid_argument("identity vertex out of range");
  const auto star = partition.star_class();
  if (!star || partition[*star].size() != 1 || !partition[*star].contains(identity))
    throw std::invalid_argument("star set must be exactly {" + std::to_string(identity) + "}");
}

}  // namespace

bool is_prime(std::size_t m) {
  if (m < 2) return false;
  for (std::size_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power_decompose(std::size_t m) {
  if (m < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= m && m % p != 0) ++p;
  if (m % p != 0) p = m;  // m itself is prime
  std::size_t r = 0;
  while (m % p == 0) {
    m /= p;
    ++r;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, r};
}

bool is_critical(const UndirectedGraph& g, const VertexSet& c, Vertex identity) {
  return critical_from_closure(c, closure(g, c), identity);
}

ClassKind classify_class(const UndirectedGraph& g, const NClassPartition& partition, const VertexSet& c,
                         Vertex identity) {
  check_star(partition, identity, g.n());
  const auto index = partition.index_of(c);
  if (!index) throw NotAnNClass("vertex set is not an N-class of the graph");
  if (index == partition.star_class()) throw StarClassGiven("the star class cannot be classified");

  const VertexSet hat = closure(g, c);
  ClassKind kind;
  kind.class_size = c.size();
  kind.closure_size = hat.size();
  kind.critical = critical_from_closure(c, hat, identity);

  const auto pp = prime_power_decompose(hat.size());
  if (!pp || pp->r < 2) return kind;

  const auto [p, r] = *pp;
  const std::size_t pr = ipow(p, r);
  std::optional<std::size_t> found;
  for (std::size_t s = 0; s + 2 <= r && !found; ++s)
    if (c.size() == pr - ipow(p, s)) found = s;
  if (!found) return kind;

  if (*found == 0) {
    // |closure(C)| = |C| + 1 here, so C is critical. It is plain exactly when
    // some vertex outside the closure, adjacent to C, has an N-class no
    // larger than C.
    const Vertex y = c.first();
    for (Vertex x = 0; x < g.n(); ++x) {
      if (hat.contains(x) || !g.adjacent(x, y)) continue;
      if (partition[partition.class_of(x)].size() <= c.size()) return kind;
    }
  }

  kind.type = ClassKind::Type::Compound;
  kind.parameters = CompoundParameters{p, r, *found};
  return kind;
}

std::map<std::size_t, ClassKind> classify_all(const UndirectedGraph& g, const NClassPartition& partition,
                                              Vertex identity) {
  check_star(partition, identity, g.n());
  std::map<std::size_t, ClassKind> verdicts;
  for (std::size_t i = 0; i < partition.size(); ++i)
    if (i != partition.star_class()) verdicts.emplace(i, classify_class(g, partition, partition[i], identity));
  return verdicts;
}

}  // namespace pgraph

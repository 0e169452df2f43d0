#ifndef PGRAPH_CLASSIFY_HPP
#define PGRAPH_CLASSIFY_HPP

#include <cstddef>
#include <map>
#include <optional>

#include "pgraph/graph.hpp"

namespace pgraph {

struct PrimePower {
  std::size_t p;
  std::size_t r;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, r) with m = p^r, p prime, r >= 1; nullopt when m is not a prime power.
std::optional<PrimePower> prime_power_decompose(std::size_t m);

bool is_prime(std::size_t m);

/// p prime, r >= 2, 0 <= s <= r - 2. A compound class with these parameters
/// has p^r - p^s members and closure of size p^r.
struct CompoundParameters {
  std::size_t p;
  std::size_t r;
  std::size_t s;
  friend bool operator==(const CompoundParameters&, const CompoundParameters&) = default;
};

struct ClassKind {
  enum class Type { Plain, Compound };

  Type type = Type::Plain;
  std::optional<CompoundParameters> parameters;  // set iff Compound
  bool critical = false;
  std::size_t class_size = 0;
  std::size_t closure_size = 0;

  bool plain() const { return type == Type::Plain; }
  bool compound() const { return type == Type::Compound; }
};

/// closure(C) = C + {identity} with identity not in C, and |closure(C)| = p^r, r >= 2.
bool is_critical(const UndirectedGraph& g, const VertexSet& c, Vertex identity);

/// Decides plain vs compound for a non-star N-class of a power graph whose
/// star set is {identity}.
///
/// Throws NotAnNClass if c is not a class of `partition`, StarClassGiven if c
/// is the star class, std::invalid_argument if the star set is not {identity}.
ClassKind classify_class(const UndirectedGraph& g, const NClassPartition& partition, const VertexSet& c,
                         Vertex identity);

/// classify_class over every non-star class, keyed by class index.
std::map<std::size_t, ClassKind> classify_all(const UndirectedGraph& g, const NClassPartition& partition,
                                              Vertex identity);

}  // namespace pgraph

#endif  // PGRAPH_CLASSIFY_HPP

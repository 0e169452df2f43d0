#ifndef PGRAPH_GROUPS_HPP
#define PGRAPH_GROUPS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pgraph/graph.hpp"

namespace pgraph {

using Element = std::size_t;

struct GroupSpec;

struct CyclicSpec {
  std::size_t order;
};
/// Dihedral group given by its total order 2m.
struct DihedralSpec {
  std::size_t order;
};
struct QuaternionSpec {
  std::size_t order;
};
struct QuasidihedralSpec {
  std::size_t order;
};
struct SymmetricSpec {
  std::size_t degree;
};
struct DirectProductSpec {
  std::vector<GroupSpec> factors;
};
struct CayleySpec {
  std::string path;
};

/// Compact description of a finite group.
///
/// Element encodings of the built-in families:
///   cyclic          i          -> a^i
///   dihedral        i < m      -> a^i,  m + i -> a^i b        (order 2m)
///   quaternion      i < 2m     -> a^i, 2m + i -> a^i b        (order 4m)
///   quasidihedral   i < 2^(k-1) -> a^i, 2^(k-1) + i -> a^i b  (order 2^k)
///   symmetric       permutations of 0..d-1 in lexicographic order
///   direct product  mixed radix, first factor most significant
struct GroupSpec {
  std::variant<CyclicSpec, DihedralSpec, QuaternionSpec, QuasidihedralSpec, SymmetricSpec,
               DirectProductSpec, CayleySpec>
      variant;
};

/// Parses `cyclic:15`, `dihedral:30`, `quaternion:16`, `quasidihedral:16`,
/// `symmetric:4`, `product:(cyclic:2,cyclic:3)` and `cayley:<path>`.
/// Throws InvalidSpec.
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

/// Finite group as a full multiplication table. Always validated.
class CayleyTable {
public:
  /// Validates the group axioms and throws InvalidCayleyTable naming the
  /// first one violated. The identity is located by scanning.
  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);
  /// Same as from_rows for a row-major n*n table.
  static CayleyTable from_flat(std::size_t n, std::vector<Element> table);

  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }
  Element operator()(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inverse(Element x) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
  CayleyTable(std::size_t n, std::vector<Element> table, Element identity)
      : n_(n), table_(std::move(table)), identity_(identity) {}
  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
};

struct BuildOptions {
  std::size_t max_symmetric_degree = 5;
};

/// Throws InvalidSpec for bad parameters, InvalidCayleyTable or IoError for
/// unusable cayley files.
CayleyTable build_group(const GroupSpec& spec, const BuildOptions& options = {});

/// Cayley table file: first line n, then n rows of n 0-based entries.
CayleyTable read_cayley_table(std::istream& in);
CayleyTable read_cayley_table_file(const std::string& path);
void write_cayley_table(std::ostream& out, const CayleyTable& g);

/// Smallest m >= 1 with x^m = e.
std::size_t element_order(const CayleyTable& g, Element x);

/// order(x) for every element x.
using ElementOrderMap = std::vector<std::size_t>;
ElementOrderMap element_orders(const CayleyTable& g);

/// Arc (x, y) iff x != y and y is a positive power of x.
Digraph directed_power_graph(const CayleyTable& g);

/// Underlying undirected graph of directed_power_graph(g).
UndirectedGraph power_graph(const CayleyTable& g);

std::size_t euler_phi(std::size_t m);

}  // namespace pgraph

#endif  // PGRAPH_GROUPS_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "pgraph/errors.hpp"
#include "pgraph/groups.hpp"
#include "support.hpp"

using namespace pgraph;

namespace {

CayleyTable group(const std::string& spec) { return build_group(parse_group_spec(spec)); }

std::vector<std::size_t> sorted_orders(const CayleyTable& g) {
  auto orders = element_orders(g);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::size_t> sorted_orders(const oracle::Group& g) {
  std::vector<std::size_t> orders;
  for (std::size_t x = 0; x < g.n; ++x) orders.push_back(g.order(x));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("group specs parse and print back") {
  for (const std::string text : {"cyclic:15", "dihedral:30", "quaternion:16", "quasidihedral:32", "symmetric:4",
                                 "product:(cyclic:2,cyclic:4)", "product:(cyclic:2,product:(cyclic:3,cyclic:3))"}) {
    CAPTURE(text);
    CHECK(to_string(parse_group_spec(text)) == text);
  }
}

TEST_CASE("malformed specs are rejected") {
  for (const std::string text : {"cyclic", "cyclic:", "cyclic:x", "cyclic:-3", "torus:4", "product:(cyclic:2",
                                 "product:cyclic:2", "cayley:"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_group_spec(text), InvalidSpec);
  }
}

TEST_CASE("order constraints per family") {
  CHECK_THROWS_AS(group("cyclic:0"), InvalidSpec);
  CHECK_THROWS_AS(group("dihedral:2"), InvalidSpec);
  CHECK_THROWS_AS(group("dihedral:9"), InvalidSpec);
  CHECK_THROWS_AS(group("quaternion:4"), InvalidSpec);
  CHECK_THROWS_AS(group("quaternion:12"), InvalidSpec);
  CHECK_THROWS_AS(group("quasidihedral:8"), InvalidSpec);
  CHECK_THROWS_AS(group("quasidihedral:24"), InvalidSpec);
  CHECK_THROWS_AS(group("symmetric:6"), InvalidSpec);
  CHECK(build_group(parse_group_spec("symmetric:6"), BuildOptions{6}).order() == 720);
  CHECK(group("product:(cyclic:2,dihedral:6,cyclic:5)").order() == 60);
}

TEST_CASE("cyclic(3) is addition mod 3") {
  const auto g = group("cyclic:3");
  CHECK(g.identity() == 0);
  for (Element i = 0; i < 3; ++i)
    for (Element j = 0; j < 3; ++j) CHECK(g(i, j) == (i + j) % 3);
}

TEST_CASE("dihedral(30) has a rotation of order 15 and 15 involutions") {
  const auto g = group("dihedral:30");
  CHECK(g.order() == 30);
  CHECK(element_order(g, 1) == 15);
  std::size_t involutions = 0;
  for (Element x = 0; x < 30; ++x)
    if (x != g.identity() && g(x, x) == g.identity()) ++involutions;
  CHECK(involutions == 15);
  // b a b^-1 = a^-1
  const Element a = 1, b = 15;
  CHECK(g(g(b, a), g.inverse(b)) == g.inverse(a));
}

TEST_CASE("quasidihedral presentation") {
  const auto g = group("quasidihedral:16");
  const Element a = 1, b = 8;
  CHECK(element_order(g, a) == 8);
  CHECK(element_order(g, b) == 2);
  Element a3 = g(a, g(a, a));
  CHECK(g(g(b, a), g.inverse(b)) == a3);
}

TEST_CASE("quaternion(8) has exactly one involution") {
  const auto g = group("quaternion:8");
  std::size_t involutions = 0;
  for (Element x = 0; x < 8; ++x)
    if (element_order(g, x) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("element orders") {
  CHECK(element_order(group("cyclic:7"), 0) == 1);
  const auto s4 = group("symmetric:4");
  std::size_t four_cycles = 0;
  for (Element x = 0; x < 24; ++x)
    if (element_order(s4, x) == 4) ++four_cycles;
  CHECK(four_cycles == 6);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(15) == 8);
  CHECK(euler_phi(9) == 6);
  for (std::size_t m = 1; m <= 200; ++m) CHECK(euler_phi(m) == oracle::phi(m));
}

TEST_CASE("directed power graph examples") {
  CHECK(directed_power_graph(group("cyclic:1")).arc_count() == 0);
  const auto c3 = directed_power_graph(group("cyclic:3"));
  CHECK(c3.arcs() == std::vector<Arc>{{1, 0}, {1, 2}, {2, 0}, {2, 1}});
  const auto c2 = directed_power_graph(group("cyclic:2"));
  CHECK(c2.arcs() == std::vector<Arc>{{1, 0}});
}

TEST_CASE("power graph examples") {
  for (std::size_t n : {2, 4, 8, 9, 25, 27}) {
    const auto g = power_graph(group("cyclic:" + std::to_string(n)));
    CHECK(g.edge_count() == n * (n - 1) / 2);
  }
  CHECK(power_graph(group("cyclic:6")).edge_count() == 13);

  const auto d18 = power_graph(group("dihedral:18"));
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v) CHECK(d18.adjacent(u, v));
  for (Vertex r = 9; r < 18; ++r) CHECK(closed_neighbourhood(d18, r) == VertexSet(18, {0, r}));
}

TEST_CASE("Cayley table validation names the violated axiom") {
  auto message = [](const std::vector<std::vector<Element>>& rows) {
    try {
      CayleyTable::from_rows(rows);
    } catch (const InvalidCayleyTable& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({{0, 1}, {1, 2}}).rfind("closure:", 0) == 0);
  CHECK(message({{1, 0}, {1, 0}}).rfind("identity:", 0) == 0);
  CHECK(message({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}).rfind("latin square:", 0) == 0);
  CHECK(message({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}).rfind("latin square:", 0) == 0);
  // Latin with identity 0, but 2*3 = 0 while 3*2 = 1.
  CHECK(message({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}})
            .rfind("inverse:", 0) == 0);
  // A latin square with identity that is not associative (order-5 loop).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(message(loop).rfind("associativity:", 0) == 0);
  CHECK(message({{0, 1}, {1, 0}}).empty());
}

TEST_CASE("Cayley table files round-trip") {
  const auto g = group("symmetric:3");
  std::stringstream buffer;
  write_cayley_table(buffer, g);
  CHECK(read_cayley_table(buffer) == g);

  std::stringstream truncated("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_cayley_table(truncated), InvalidCayleyTable);
  std::stringstream trailing("1\n0 0\n");
  CHECK_THROWS_AS(read_cayley_table(trailing), InvalidCayleyTable);
  CHECK_THROWS_AS(read_cayley_table_file("/nonexistent/table.txt"), IoError);

  const auto path = std::filesystem::temp_directory_path() / "pgraph_test_s3.txt";
  {
    std::ofstream out(path);
    write_cayley_table(out, g);
  }
  CHECK(group("cayley:" + path.string()) == g);
  std::filesystem::remove(path);
}

TEST_CASE("corpus groups agree with independently built models") {
  for (const auto& spec : support::corpus()) {
    CAPTURE(spec);
    const auto g = group(spec);
    const auto ref = oracle::from_spec(spec);
    REQUIRE(g.order() == ref.n);
    CHECK(sorted_orders(g) == sorted_orders(ref));
    const auto d = directed_power_graph(g);
    CHECK(d.arc_count() == oracle::arcs(ref).size());
    CHECK(power_graph(g).edge_count() == oracle::edges(ref).size());
  }
}

TEST_CASE("built tables satisfy the group axioms and Lagrange") {
  for (const auto& spec : support::corpus()) {
    CAPTURE(spec);
    const auto g = group(spec);
    const std::size_t n = g.order();
    std::vector<Element> flat;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) flat.push_back(g(a, b));
    CHECK_NOTHROW(CayleyTable::from_flat(n, flat));
    for (auto o : element_orders(g)) CHECK(n % o == 0);
    CHECK(element_order(g, g.identity()) == 1);
  }
}

TEST_CASE("generator classes have size phi(order)") {
  for (const auto& spec : support::corpus()) {
    CAPTURE(spec);
    const auto g = group(spec);
    const auto d = directed_power_graph(g);
    const auto orders = element_orders(g);
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t same = 1;
      for (Element y = 0; y < g.order(); ++y)
        if (y != x && d.has_arc(x, y) && d.has_arc(y, x)) ++same;
      CHECK(same == euler_phi(orders[x]));
    }
  }
}

TEST_CASE("underlying graph of the directed power graph is the power graph") {
  for (const auto& spec : support::corpus()) {
    CAPTURE(spec);
    const auto g = group(spec);
    CHECK(directed_power_graph(g).underlying() == power_graph(g));
  }
}

TEST_CASE("neighbourhood containment in p-groups matches the power relation") {
  for (const auto& spec : support::corpus()) {
    const auto g = group(spec);
    const std::size_t n = g.order();
    std::size_t p = 2;
    while (n % p) ++p;
    std::size_t m = n;
    while (m % p == 0) m /= p;
    if (m != 1 || n == 1) continue;
    CAPTURE(spec);
    const auto pg = power_graph(g);
    const auto d = directed_power_graph(g);
    const auto orders = element_orders(g);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (x == y || orders[x] > orders[y]) continue;
        const bool contains = closed_neighbourhood(pg, y).is_subset_of(closed_neighbourhood(pg, x));
        CHECK(contains == d.has_arc(y, x));
      }
  }
}

TEST_CASE("star set sizes follow the cyclic / quaternion trichotomy") {
  CHECK(star_set(power_graph(group("cyclic:6"))).size() == 3);
  CHECK(star_set(power_graph(group("quaternion:8"))).size() == 2);
  for (const auto& spec : support::corpus()) {
    CAPTURE(spec);
    const auto ref = oracle::from_spec(spec);
    const oracle::Adjacency adj(ref.n, oracle::edges(ref));
    CHECK(star_set(power_graph(group(spec))).size() == adj.stars().size());
  }
}

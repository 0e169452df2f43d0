#ifndef PGRAPH_TESTS_ORACLE_HPP
#define PGRAPH_TESTS_ORACLE_HPP

// Reference implementation used only by the tests. Groups are built from
// concrete models (affine maps mod M, permutations, monomial 2x2 matrices,
// tuples) and closed under multiplication by breadth-first search, so nothing
// here shares code with the library's Cayley tables or graph routines.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Key = std::vector<long long>;

struct Group {
  std::size_t n = 0;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> mul;

  std::size_t power(std::size_t x, std::size_t k) const {
    std::size_t result = identity, base = x;
    while (k) {
      if (k & 1) result = mul[result][base];
      base = mul[base][base];
      k >>= 1;
    }
    return result;
  }

  std::size_t order(std::size_t x) const {
    std::size_t k = 1;
    while (power(x, k) != identity) ++k;
    return k;
  }
};

// Closes `generators` under `op` and tabulates the product.
inline Group generate(const std::vector<Key>& generators, const Key& one,
                      const std::function<Key(const Key&, const Key&)>& op) {
  std::map<Key, std::size_t> index{{one, 0}};
  std::vector<Key> elems{one};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Key& g : generators) {
      Key h = op(elems[i], g);
      if (index.emplace(h, elems.size()).second) elems.push_back(h);
    }
  Group out;
  out.n = elems.size();
  out.mul.assign(out.n, std::vector<std::size_t>(out.n));
  for (std::size_t a = 0; a < out.n; ++a)
    for (std::size_t b = 0; b < out.n; ++b) out.mul[a][b] = index.at(op(elems[a], elems[b]));
  return out;
}

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

// Affine maps x -> u*x + c on Z_m, stored as {u, c}.
inline Group affine(long long m, const std::vector<Key>& generators) {
  return generate(generators, Key{1, 0}, [m](const Key& f, const Key& g) {
    return Key{mod(f[0] * g[0], m), mod(f[0] * g[1] + f[1], m)};
  });
}

inline Group cyclic(long long n) { return affine(n, {{1, 1}}); }
inline Group product(const Group& a, const Group& b);

// Order 2m: rotations and reflections of an m-gon. The 2-gon action is not
// faithful, so order 4 is built as the Klein group.
inline Group dihedral(long long order) {
  if (order == 4) return product(cyclic(2), cyclic(2));
  return affine(order / 2, {{1, 1}, {order / 2 - 1, 0}});
}
// Order 2^k with b a b^-1 = a^(2^(k-2) - 1).
inline Group quasidihedral(long long order) {
  const long long m = order / 2;
  return affine(m, {{1, 1}, {m / 2 - 1, 0}});
}

// Generalised quaternion group of order 4m as monomial 2x2 matrices
// <diag(z, 1/z), [[0,-1],[1,0]]> with z a primitive 2m-th root of unity.
// Entries are stored exactly as exponents of z (-1 for a zero entry).
inline Group quaternion(long long order) {
  const long long m = order / 4, w = 2 * m;
  const Key a{1, -1, -1, w - 1};
  const Key b{-1, m, 0, -1};
  const Key one{0, -1, -1, 0};
  return generate({a, b}, one, [w](const Key& x, const Key& y) {
    Key z(4, -1);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        for (int k = 0; k < 2; ++k)
          if (x[2 * r + k] >= 0 && y[2 * k + c] >= 0) z[2 * r + c] = (x[2 * r + k] + y[2 * k + c]) % w;
    return z;
  });
}

inline Group symmetric(long long d) {
  Key id(d), swap(d), cycle(d);
  std::iota(id.begin(), id.end(), 0);
  swap = id;
  std::swap(swap[0], swap[1]);
  for (long long i = 0; i < d; ++i) cycle[i] = (i + 1) % d;
  std::vector<Key> gens{cycle};
  if (d > 1) gens.push_back(swap);
  return generate(gens, id, [d](const Key& f, const Key& g) {
    Key h(d);
    for (long long i = 0; i < d; ++i) h[i] = f[g[i]];
    return h;
  });
}

inline Group product(const Group& a, const Group& b) {
  Group out;
  out.n = a.n * b.n;
  out.identity = a.identity * b.n + b.identity;
  out.mul.assign(out.n, std::vector<std::size_t>(out.n));
  for (std::size_t x = 0; x < out.n; ++x)
    for (std::size_t y = 0; y < out.n; ++y)
      out.mul[x][y] = a.mul[x / b.n][y / b.n] * b.n + b.mul[x % b.n][y % b.n];
  return out;
}

inline std::size_t phi(std::size_t m) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}

// y is a positive power of x.
inline bool is_power(const Group& g, std::size_t x, std::size_t y) {
  const std::size_t o = g.order(x);
  for (std::size_t k = 1; k <= o; ++k)
    if (g.power(x, k) == y) return true;
  return false;
}

inline std::set<std::size_t> cyclic_subgroup(const Group& g, std::size_t x) {
  std::set<std::size_t> s;
  const std::size_t o = g.order(x);
  for (std::size_t k = 1; k <= o; ++k) s.insert(g.power(x, k));
  return s;
}

// Arcs (x, y) with x != y and y a power of x.
inline std::vector<std::pair<std::size_t, std::size_t>> arcs(const Group& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      if (x != y && is_power(g, x, y)) out.emplace_back(x, y);
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edges(const Group& g) {
  std::set<std::pair<std::size_t, std::size_t>> s;
  for (auto [x, y] : arcs(g)) s.emplace(std::min(x, y), std::max(x, y));
  return {s.begin(), s.end()};
}

// Classes of "same cyclic subgroup".
inline std::vector<std::set<std::size_t>> diamond_classes(const Group& g) {
  std::map<std::set<std::size_t>, std::set<std::size_t>> by_subgroup;
  for (std::size_t x = 0; x < g.n; ++x) by_subgroup[cyclic_subgroup(g, x)].insert(x);
  std::vector<std::set<std::size_t>> out;
  for (auto& [sub, cls] : by_subgroup) out.push_back(cls);
  std::sort(out.begin(), out.end());
  return out;
}

// Adjacency-matrix view of a plain undirected graph.
struct Adjacency {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;

  Adjacency(std::size_t n_, const std::vector<std::pair<std::size_t, std::size_t>>& es)
      : n(n_), adj(n_, std::vector<bool>(n_, false)) {
    for (auto [u, v] : es) adj[u][v] = adj[v][u] = true;
  }

  std::set<std::size_t> closed(std::size_t x) const {
    std::set<std::size_t> s{x};
    for (std::size_t y = 0; y < n; ++y)
      if (adj[x][y]) s.insert(y);
    return s;
  }

  // Intersection of closed neighbourhoods; everything for the empty set.
  std::set<std::size_t> nbhd(const std::set<std::size_t>& xs) const {
    std::set<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
      bool all = true;
      for (std::size_t x : xs)
        if (v != x && !adj[v][x]) all = false;
      if (all) out.insert(v);
    }
    return out;
  }

  std::set<std::size_t> closure(const std::set<std::size_t>& xs) const { return nbhd(nbhd(xs)); }

  std::set<std::size_t> stars() const {
    std::set<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (closed(v).size() == n) s.insert(v);
    return s;
  }

  std::vector<std::set<std::size_t>> twin_classes() const {
    std::map<std::set<std::size_t>, std::set<std::size_t>> by_row;
    for (std::size_t v = 0; v < n; ++v) by_row[closed(v)].insert(v);
    std::vector<std::set<std::size_t>> out;
    for (auto& [row, cls] : by_row) out.push_back(cls);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Ground-truth verdict for an N-class of a power graph: compound iff it is a
// union of at least two cyclic-subgroup classes; parameters read off the
// element orders (max order p^r, min order p^(s+1)).
struct ClassTruth {
  bool compound = false;
  std::size_t p = 0, r = 0, s = 0;
  bool critical = false;
  std::size_t closure_size = 0;
};

inline ClassTruth class_truth(const Group& g, const Adjacency& a, const std::set<std::size_t>& cls) {
  ClassTruth t;
  std::set<std::set<std::size_t>> subgroups;
  std::size_t lo = g.n, hi = 0;
  for (std::size_t x : cls) {
    subgroups.insert(cyclic_subgroup(g, x));
    lo = std::min(lo, g.order(x));
    hi = std::max(hi, g.order(x));
  }
  t.compound = subgroups.size() >= 2;
  if (t.compound) {
    std::size_t p = 2;
    while (hi % p) ++p;
    t.p = p;
    for (std::size_t v = hi; v > 1; v /= p) ++t.r;
    for (std::size_t v = lo / p; v > 1; v /= p) ++t.s;
  }
  const auto hat = a.closure(cls);
  t.closure_size = hat.size();
  std::set<std::size_t> with_id = cls;
  with_id.insert(g.identity);
  std::size_t m = hat.size(), p = 2, r = 0;
  while (m > 1 && m % p) ++p;
  while (m > 1 && m % p == 0) m /= p, ++r;
  t.critical = !cls.count(g.identity) && hat == with_id && m == 1 && r >= 2;
  return t;
}

// Builds the oracle group for a manifest-style spec string.
inline Group from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  if (family == "product") {
    const std::string inner = spec.substr(colon + 2, spec.size() - colon - 3);
    int depth = 0;
    std::vector<std::string> parts{""};
    for (char c : inner) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.emplace_back();
        continue;
      }
      parts.back() += c;
    }
    Group g = from_spec(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = product(g, from_spec(parts[i]));
    return g;
  }
  const long long k = std::stoll(spec.substr(colon + 1));
  if (family == "cyclic") return cyclic(k);
  if (family == "dihedral") return dihedral(k);
  if (family == "quaternion") return quaternion(k);
  if (family == "quasidihedral") return quasidihedral(k);
  return symmetric(k);
}

}  // namespace oracle

#endif  // PGRAPH_TESTS_ORACLE_HPP

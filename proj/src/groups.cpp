#include "pgraph/groups.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pgraph/errors.hpp"

namespace pgraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view text, std::string_view family) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidSpec("bad parameter '" + std::string(text) + "' for " + std::string(family));
  return value;
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

// Splits "a,b(c,d),e" at top-level commas.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
    if (depth < 0) throw InvalidSpec("unbalanced parentheses in product");
  }
  if (depth != 0) throw InvalidSpec("unbalanced parentheses in product");
  parts.push_back(s.substr(start));
  return parts;
}

// Groups <a, b> of order 2m with a^m = 1, b^2 = a^c and b a b^-1 = a^t.
// Element (i, e) is a^i b^e, encoded as e*m + i.
std::vector<Element> metacyclic_table(std::size_t m, std::size_t t, std::size_t c) {
  const std::size_t n = 2 * m;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % m, e = x / m;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = y % m, f = y / m;
      std::size_t exp = i + (e ? (t * j) % m : j);
      if (e && f) exp += c;
      table[x * n + y] = ((e ^ f) * m) + exp % m;
    }
  }
  return table;
}

std::vector<Element> cyclic_table(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return table;
}

std::vector<Element> symmetric_table(std::size_t degree) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::size_t>, Element> index;
  for (Element k = 0; k < perms.size(); ++k) index.emplace(perms[k], k);

  const std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  std::vector<std::size_t> composed(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // (a * b)(i) = a(b(i))
      for (std::size_t i = 0; i < degree; ++i) composed[i] = perms[a][perms[b][i]];
      table[a * n + b] = index.at(composed);
    }
  return table;
}

CayleyTable product_table(const std::vector<CayleyTable>& factors) {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();
  std::vector<Element> table(n * n);
  std::vector<std::size_t> xs(factors.size()), ys(factors.size());
  auto decode = [&](Element v, std::vector<std::size_t>& digits) {
    for (std::size_t k = factors.size(); k-- > 0;) {
      digits[k] = v % factors[k].order();
      v /= factors[k].order();
    }
  };
  for (Element x = 0; x < n; ++x) {
    decode(x, xs);
    for (Element y = 0; y < n; ++y) {
      decode(y, ys);
      Element z = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) z = z * factors[k].order() + factors[k](xs[k], ys[k]);
      table[x * n + y] = z;
    }
  }
  return CayleyTable::from_flat(n, std::move(table));
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidSpec("missing ':' in group spec '" + std::string(text) + "'");
  const std::string_view family = trim(text.substr(0, colon));
  const std::string_view arg = trim(text.substr(colon + 1));

  if (family == "cyclic") return {CyclicSpec{parse_count(arg, family)}};
  if (family == "dihedral") return {DihedralSpec{parse_count(arg, family)}};
  if (family == "quaternion") return {QuaternionSpec{parse_count(arg, family)}};
  if (family == "quasidihedral") return {QuasidihedralSpec{parse_count(arg, family)}};
  if (family == "symmetric") return {SymmetricSpec{parse_count(arg, family)}};
  if (family == "cayley") {
    if (arg.empty()) throw InvalidSpec("cayley spec needs a path");
    return {CayleySpec{std::string(arg)}};
  }
  if (family == "product") {
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')')
      throw InvalidSpec("product spec must look like product:(spec,spec,...)");
    DirectProductSpec product;
    for (auto part : split_top_level(arg.substr(1, arg.size() - 2))) product.factors.push_back(parse_group_spec(part));
    return {std::move(product)};
  }
  throw InvalidSpec("unknown group family '" + std::string(family) + "'");
}

std::string to_string(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const CyclicSpec& s) const { return "cyclic:" + std::to_string(s.order); }
    std::string operator()(const DihedralSpec& s) const { return "dihedral:" + std::to_string(s.order); }
    std::string operator()(const QuaternionSpec& s) const { return "quaternion:" + std::to_string(s.order); }
    std::string operator()(const QuasidihedralSpec& s) const { return "quasidihedral:" + std::to_string(s.order); }
    std::string operator()(const SymmetricSpec& s) const { return "symmetric:" + std::to_string(s.degree); }
    std::string operator()(const CayleySpec& s) const { return "cayley:" + s.path; }
    std::string operator()(const DirectProductSpec& s) const {
      std::string out = "product:(";
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += ',';
        out += to_string(s.factors[i]);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, spec.variant);
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InvalidCayleyTable("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                               " entries, expected " + std::to_string(n));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return from_flat(n, std::move(flat));
}

CayleyTable CayleyTable::from_flat(std::size_t n, std::vector<Element> t) {
  if (n == 0) throw InvalidCayleyTable("group order must be at least 1");
  if (t.size() != n * n) throw InvalidCayleyTable("table must have n*n entries");
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };

  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] >= n)
      throw InvalidCayleyTable("closure: entry " + std::to_string(t[k]) + " at row " + std::to_string(k / n) +
                               ", column " + std::to_string(k % n) + " is out of range");

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity == n) throw InvalidCayleyTable("identity: no two-sided identity element");

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]) throw InvalidCayleyTable("latin square: row " + std::to_string(a) + " repeats an entry");
      seen[at(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(b, a)]) throw InvalidCayleyTable("latin square: column " + std::to_string(a) + " repeats an entry");
      seen[at(b, a)] = 1;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == identity && at(b, a) == identity;
    if (!found) throw InvalidCayleyTable("inverse: element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw InvalidCayleyTable("associativity: fails for (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ")");
    }

  return CayleyTable(n, std::move(t), identity);
}

Element CayleyTable::inverse(Element x) const {
  for (Element y = 0; y < n_; ++y)
    if ((*this)(x, y) == identity_) return y;
  return identity_;  // unreachable for validated tables
}

CayleyTable build_group(const GroupSpec& spec, const BuildOptions& options) {
  struct Visitor {
    const BuildOptions& options;

    CayleyTable operator()(const CyclicSpec& s) const {
      if (s.order < 1) throw InvalidSpec("cyclic order must be >= 1");
      return CayleyTable::from_flat(s.order, cyclic_table(s.order));
    }
    CayleyTable operator()(const DihedralSpec& s) const {
      if (s.order < 4 || s.order % 2 != 0) throw InvalidSpec("dihedral order must be even and >= 4");
      const std::size_t m = s.order / 2;
      return CayleyTable::from_flat(s.order, metacyclic_table(m, m - 1, 0));
    }
    CayleyTable operator()(const QuaternionSpec& s) const {
      if (s.order < 8 || !is_power_of_two(s.order)) throw InvalidSpec("quaternion order must be 2^k with k >= 3");
      const std::size_t m = s.order / 2;
      return CayleyTable::from_flat(s.order, metacyclic_table(m, m - 1, m / 2));
    }
    CayleyTable operator()(const QuasidihedralSpec& s) const {
      if (s.order < 16 || !is_power_of_two(s.order))
        throw InvalidSpec("quasidihedral order must be 2^k with k >= 4");
      const std::size_t m = s.order / 2;
      return CayleyTable::from_flat(s.order, metacyclic_table(m, m / 2 - 1, 0));
    }
    CayleyTable operator()(const SymmetricSpec& s) const {
      if (s.degree < 1) throw InvalidSpec("symmetric degree must be >= 1");
      if (s.degree > options.max_symmetric_degree)
        throw InvalidSpec("symmetric degree " + std::to_string(s.degree) + " exceeds the configured maximum " +
                          std::to_string(options.max_symmetric_degree));
      std::size_t n = 1;
      for (std::size_t k = 2; k <= s.degree; ++k) n *= k;
      return CayleyTable::from_flat(n, symmetric_table(s.degree));
    }
    CayleyTable operator()(const DirectProductSpec& s) const {
      if (s.factors.empty()) throw InvalidSpec("direct product needs at least one factor");
      std::vector<CayleyTable> tables;
      for (const auto& f : s.factors) tables.push_back(build_group(f, options));
      return product_table(tables);
    }
    CayleyTable operator()(const CayleySpec& s) const { return read_cayley_table_file(s.path); }
  };
  return std::visit(Visitor{options}, spec.variant);
}

CayleyTable read_cayley_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw InvalidCayleyTable("malformed: missing group order on line 1");
  if (n <= 0) throw InvalidCayleyTable("group order must be at least 1");
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (long long k = 0; k < n * n; ++k) {
    long long v = 0;
    if (!(in >> v))
      throw InvalidCayleyTable("malformed: expected " + std::to_string(n * n) + " entries, found " + std::to_string(k));
    if (v < 0 || v >= n)
      throw InvalidCayleyTable("closure: entry " + std::to_string(v) + " at row " + std::to_string(k / n) +
                               ", column " + std::to_string(k % n) + " is out of range");
    flat.push_back(static_cast<Element>(v));
  }
  std::string extra;
  if (in >> extra) throw InvalidCayleyTable("malformed: trailing data after " + std::to_string(n * n) + " entries");
  return CayleyTable::from_flat(static_cast<std::size_t>(n), std::move(flat));
}

CayleyTable read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cayley table file '" + path + "'");
  return read_cayley_table(in);
}

void write_cayley_table(std::ostream& out, const CayleyTable& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g(a, b);
    out << '\n';
  }
}

std::size_t element_order(const CayleyTable& g, Element x) {
  std::size_t m = 1;
  for (Element p = x; p != g.identity(); p = g(p, x)) ++m;
  return m;
}

ElementOrderMap element_orders(const CayleyTable& g) {
  ElementOrderMap orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  return orders;
}

Digraph directed_power_graph(const CayleyTable& g) {
  std::vector<Arc> arcs;
  for (Element x = 0; x < g.order(); ++x)
    // x^2, x^3, ... until the cycle returns to x
    for (Element p = g(x, x); p != x; p = g(p, x)) arcs.emplace_back(x, p);
  return Digraph(g.order(), arcs);
}

UndirectedGraph power_graph(const CayleyTable& g) { return directed_power_graph(g).underlying(); }

std::size_t euler_phi(std::size_t m) {
  std::size_t result = m;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace pgraph

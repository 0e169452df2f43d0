#include "pgraph/graph.hpp"

#include <algorithm>
#include <string>
#include <map>
#include <unordered_map>

#include "pgraph/errors.hpp"

namespace pgraph {

namespace {

void check_endpoints(std::size_t n, Vertex u, Vertex v, const char* what) {
  if (u >= n || v >= n)
    throw InvalidGraph(std::string(what) + " (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n = " + std::to_string(n));
  if (u == v) throw InvalidGraph(std::string("self-loop on vertex ") + std::to_string(u));
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) throw InvalidGraph("graph must have at least one vertex");
  closed_.reserve(n);
  for (Vertex v = 0; v < n; ++v) closed_.emplace_back(n, std::initializer_list<Vertex>{v});
  for (auto [u, v] : edges) {
    check_endpoints(n, u, v, "edge");
    if (!closed_[u].contains(v)) {
      closed_[u].insert(v);
      closed_[v].insert(u);
      ++edge_count_;
    }
  }
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v = closed_[u].next(u); v < n(); v = closed_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Digraph::Digraph(std::size_t n, const std::vector<Arc>& arcs) {
  if (n == 0) throw InvalidGraph("digraph must have at least one vertex");
  out_.assign(n, VertexSet(n));
  for (auto [u, v] : arcs) {
    check_endpoints(n, u, v, "arc");
    out_[u].insert(v);
  }
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& row : out_) total += row.size();
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < n(); ++u) out_[u].for_each([&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

UndirectedGraph Digraph::underlying() const { return UndirectedGraph(n(), arcs()); }

VertexSet closed_neighbourhood(const UndirectedGraph& g, Vertex x) { return g.closed_row(x); }

VertexSet set_neighbourhood(const UndirectedGraph& g, const VertexSet& xs) {
  VertexSet result = VertexSet::full(g.n());
  xs.for_each([&](Vertex x) { result &= g.closed_row(x); });
  return result;
}

VertexSet closure(const UndirectedGraph& g, const VertexSet& xs) {
  return set_neighbourhood(g, set_neighbourhood(g, xs));
}

VertexSet star_set(const UndirectedGraph& g) {
  VertexSet s(g.n());
  for (Vertex x = 0; x < g.n(); ++x)
    if (g.closed_row(x).size() == g.n()) s.insert(x);
  return s;
}

NClassPartition::NClassPartition(std::vector<VertexSet> classes, std::size_t n)
    : classes_(std::move(classes)), class_of_(n, n) {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    classes_[i].for_each([&](Vertex v) { class_of_[v] = i; });
}

std::optional<std::size_t> NClassPartition::index_of(const VertexSet& c) const {
  if (c.empty() || c.universe() != class_of_.size()) return std::nullopt;
  const std::size_t i = class_of_[c.first()];
  if (i < classes_.size() && classes_[i] == c) return i;
  return std::nullopt;
}

NClassPartition n_class_partition(const UndirectedGraph& g) {
  const std::size_t n = g.n();
  // Bucket by hash of N[x]; equality inside a bucket confirms twins.
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  std::vector<VertexSet> classes;
  std::vector<std::size_t> representative;
  for (Vertex x = 0; x < n; ++x) {
    const VertexSet& row = g.closed_row(x);
    auto& bucket = buckets[row.hash()];
    auto it = std::find_if(bucket.begin(), bucket.end(),
                           [&](std::size_t c) { return g.closed_row(representative[c]) == row; });
    if (it == bucket.end()) {
      bucket.push_back(classes.size());
      classes.emplace_back(n);
      representative.push_back(x);
      classes.back().insert(x);
    } else {
      classes[*it].insert(x);
    }
  }
  // Vertices are scanned in ascending order, so classes are already sorted
  // by their smallest member.
  NClassPartition p(std::move(classes), n);
  for (std::size_t i = 0; i < p.classes_.size(); ++i)
    if (g.closed_row(representative[i]).size() == n) p.star_ = i;
  return p;
}

namespace {

struct Quotient {
  NClassPartition partition;
  std::vector<std::vector<char>> joined;
};

Quotient quotient_of(const UndirectedGraph& g) {
  Quotient q{n_class_partition(g), {}};
  const std::size_t k = q.partition.size();
  q.joined.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      q.joined[i][j] = i != j && g.adjacent(q.partition[i].first(), q.partition[j].first());
  return q;
}

// Colour refinement run jointly on both quotients so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Quotient& a, const Quotient& b) {
  const std::size_t ka = a.partition.size();
  std::vector<const Quotient*> owner;
  std::vector<std::size_t> local;
  for (std::size_t i = 0; i < ka; ++i) owner.push_back(&a), local.push_back(i);
  for (std::size_t i = 0; i < b.partition.size(); ++i) owner.push_back(&b), local.push_back(i);

  const std::size_t total = owner.size();
  std::vector<std::size_t> colour(total);
  for (std::size_t v = 0; v < total; ++v) colour[v] = owner[v]->partition[local[v]].size();

  std::size_t distinct = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(total);
    for (std::size_t v = 0; v < total; ++v) {
      const std::size_t base = owner[v] == &a ? 0 : ka;
      std::vector<std::size_t> around;
      for (std::size_t w = 0; w < owner[v]->partition.size(); ++w)
        if (owner[v]->joined[local[v]][w]) around.push_back(colour[base + w]);
      std::sort(around.begin(), around.end());
      sig[v] = {colour[v], std::move(around)};
      ids.emplace(sig[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < total; ++v) colour[v] = ids[sig[v]];
    if (ids.size() == distinct) break;
    distinct = ids.size();
  }
  return {std::vector<std::size_t>(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(ka)),
          std::vector<std::size_t>(colour.begin() + static_cast<std::ptrdiff_t>(ka), colour.end())};
}

bool extend(const Quotient& a, const Quotient& b, const std::vector<std::size_t>& ca,
            const std::vector<std::size_t>& cb, std::size_t i, std::vector<std::size_t>& image,
            std::vector<char>& used) {
  if (i == ca.size()) return true;
  for (std::size_t j = 0; j < cb.size(); ++j) {
    if (used[j] || cb[j] != ca[i]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < i && ok; ++prev) ok = a.joined[i][prev] == b.joined[j][image[prev]];
    if (!ok) continue;
    image[i] = j;
    used[j] = 1;
    if (extend(a, b, ca, cb, i + 1, image, used)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> twin_quotient_isomorphism(const UndirectedGraph& g, const UndirectedGraph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  const Quotient qa = quotient_of(g);
  const Quotient qb = quotient_of(h);
  if (qa.partition.size() != qb.partition.size()) return std::nullopt;

  const auto [ca, cb] = refine_colours(qa, qb);
  std::vector<std::size_t> sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  std::vector<std::size_t> image(ca.size());
  std::vector<char> used(cb.size(), 0);
  if (!extend(qa, qb, ca, cb, 0, image, used)) return std::nullopt;

  std::vector<Vertex> map(g.n());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto from = qa.partition[i].members();
    const auto to = qb.partition[image[i]].members();
    for (std::size_t k = 0; k < from.size(); ++k) map[from[k]] = to[k];
  }
  return map;
}

}  // namespace pgraph

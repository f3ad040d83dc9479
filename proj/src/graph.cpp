#include "lll/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace lll {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (edges_.size() > std::numeric_limits<EdgeId>::max())
    throw std::invalid_argument("graph: too many edges");
  index_.reserve(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("graph: edge " + std::to_string(e) + " has an endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (!index_.emplace(key(u, v), e).second)
      throw std::invalid_argument("graph: parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
  for (const auto& a : adjacency_) max_degree_ = std::max(max_degree_, a.size());
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
  const auto& [a, b] = edges_.at(e);
  return a == v ? b : a;
}

bool Graph::adjacent(EdgeId a, EdgeId b) const {
  if (a == b) return false;
  const auto& [u, v] = edges_.at(a);
  const auto& [x, y] = edges_.at(b);
  return u == x || u == y || v == x || v == y;
}

std::optional<std::size_t> Graph::girth() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::size_t l = vertex_count();
  std::vector<std::size_t> dist(l);
  std::vector<EdgeId> via(l);
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < l; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (auto [w, e] : adjacency_[u]) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          via[w] = e;
          q.push(w);
        } else if (u == s || via[u] != e) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

Graph cycle_graph(std::size_t l) {
  if (l < 3) return path_graph(l);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < l; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % l));
  return Graph(l, std::move(e));
}

Graph path_graph(std::size_t l) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < l; ++i) e.emplace_back(Vertex(i), Vertex(i + 1));
  return Graph(l, std::move(e));
}

Graph complete_graph(std::size_t l) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) e.emplace_back(Vertex(i), Vertex(j));
  return Graph(l, std::move(e));
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, std::move(e));
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, Vertex(i));
  return Graph(leaves + 1, std::move(e));
}

Graph random_regular_graph(std::size_t d, std::size_t l, Rng& rng) {
  if ((l * d) % 2 != 0) throw std::invalid_argument("random_regular: l*d must be even");
  if (d > 0 && d >= l) throw std::invalid_argument("random_regular: need d < l");
  std::vector<Vertex> points;
  for (Vertex v = 0; v < l; ++v)
    for (std::size_t k = 0; k < d; ++k) points.push_back(v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::unordered_map<std::uint64_t, char> seen;
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      Vertex u = points[i], v = points[i + 1];
      if (u == v) ok = false;
      if (u > v) std::swap(u, v);
      if (ok && !seen.emplace((std::uint64_t(u) << 32) | v, 1).second) ok = false;
      edges.emplace_back(u, v);
    }
    if (ok) return Graph(l, std::move(edges));
  }
  throw std::runtime_error("random_regular: pairing model did not produce a simple graph");
}

Graph gnp_graph(std::size_t l, double prob, Rng& rng) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("gnp: probability outside [0,1]");
  std::bernoulli_distribution coin(prob);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (coin(rng)) e.emplace_back(Vertex(i), Vertex(j));
  return Graph(l, std::move(e));
}

}  // namespace lll

#ifndef LLL_GRAPH_HPP
#define LLL_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lll/engine.hpp"

namespace lll {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph with edges indexed in input order.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, parallel edges or bad endpoints.
  Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::pair<Vertex, Vertex>& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  const std::vector<Incidence>& incident(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;
  Vertex other_end(EdgeId e, Vertex v) const;
  bool adjacent(EdgeId a, EdgeId b) const;

  /// Length of a shortest cycle, or nullopt for a forest. BFS from every vertex.
  std::optional<std::size_t> girth() const;

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
  std::size_t max_degree_ = 0;
};

/// Edge-list format: a header `p edges <l> <m>`, then m lines `u v` with
/// 0-based vertices. Lines starting with `c` and blank lines are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph cycle_graph(std::size_t l);  // l < 3 degenerates to a path
Graph path_graph(std::size_t l);
Graph complete_graph(std::size_t l);
Graph petersen_graph();
Graph star_graph(std::size_t leaves);
/// Uniform-ish random d-regular simple graph by the pairing model with
/// restarts. Requires l*d even and d < l.
Graph random_regular_graph(std::size_t d, std::size_t l, Rng& rng);
Graph gnp_graph(std::size_t l, double prob, Rng& rng);

}  // namespace lll

#endif  // LLL_GRAPH_HPP

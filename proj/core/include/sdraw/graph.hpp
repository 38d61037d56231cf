#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sdraw {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] bool touches(VertexId w) const { return u == w || v == w; }
  [[nodiscard]] bool shares_vertex(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }
  [[nodiscard]] VertexId other(VertexId w) const { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite simple graph with named vertices. Vertex and edge ids are dense
/// indices in insertion order; names are opaque strings.
class Graph {
 public:
  Graph() = default;
  /// Vertices named "0", "1", ..., "n-1".
  explicit Graph(std::size_t n);
  explicit Graph(std::vector<std::string> names);

  VertexId add_vertex(std::string name);
  /// Throws InputError on self-loops, duplicates and unknown endpoints.
  EdgeId add_edge(VertexId a, VertexId b);
  EdgeId add_edge(std::string_view a, std::string_view b);

  [[nodiscard]] std::size_t vertex_count() const { return names_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  [[nodiscard]] std::size_t degree(VertexId v) const {
    return adjacency_.at(v).size();
  }

  [[nodiscard]] std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  [[nodiscard]] bool adjacent(VertexId a, VertexId b) const {
    return find_edge(a, b).has_value();
  }

  [[nodiscard]] const std::string& name(VertexId v) const { return names_.at(v); }
  [[nodiscard]] std::span<const std::string> names() const { return names_; }
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Like find_vertex but throws InputError for unknown names.
  [[nodiscard]] VertexId vertex(std::string_view name) const;

  [[nodiscard]] std::string edge_label(EdgeId e) const;

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    const Edge e(a, b);
    return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Subgraph induced by `vertices` (in the given order), keeping names.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

Graph path_graph(std::size_t edges);
/// Vertices 0..n-1, edges e_i = {i, i+1 mod n} in that order.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Parts named u1..us and v1..vt; edges in row-major (u, v) order.
Graph complete_bipartite(std::size_t s, std::size_t t);

}  // namespace sdraw

#include "sdraw/graph.hpp"

#include <algorithm>
#include <numeric>

#include "sdraw/errors.hpp"

namespace sdraw {

Graph::Graph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

Graph::Graph(std::vector<std::string> names) {
  for (auto& n : names) add_vertex(std::move(n));
}

VertexId Graph::add_vertex(std::string name) {
  if (index_.contains(name)) throw InputError("duplicate vertex '" + name + "'");
  const auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
  if (a >= vertex_count() || b >= vertex_count())
    throw InputError("edge endpoint is not a vertex");
  if (a == b) throw InputError("self-loop at '" + names_[a] + "'");
  const auto k = key(a, b);
  if (edge_index_.contains(k))
    throw InputError("duplicate edge " + names_[a] + "-" + names_[b]);
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back(a, b);
  edge_index_.emplace(k, id);
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  return id;
}

EdgeId Graph::add_edge(std::string_view a, std::string_view b) {
  return add_edge(vertex(a), vertex(b));
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  const auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::string Graph::edge_label(EdgeId e) const {
  const auto& ed = edge(e);
  return names_[ed.u] + "-" + names_[ed.v];
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::ranges::sort(out.back());
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  Graph h;
  std::unordered_map<VertexId, VertexId> local;
  for (VertexId v : vertices) local.emplace(v, h.add_vertex(g.name(v)));
  for (const Edge& e : g.edges()) {
    auto a = local.find(e.u);
    auto b = local.find(e.v);
    if (a != local.end() && b != local.end()) h.add_edge(a->second, b->second);
  }
  return h;
}

Graph path_graph(std::size_t edges) {
  Graph g(edges + 1);
  for (std::size_t i = 0; i < edges; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

Graph complete_bipartite(std::size_t s, std::size_t t) {
  Graph g;
  for (std::size_t i = 1; i <= s; ++i) g.add_vertex("u" + std::to_string(i));
  for (std::size_t i = 1; i <= t; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < t; ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(s + j));
  return g;
}

}  // namespace sdraw

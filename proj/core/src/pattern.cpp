#include "sdraw/pattern.hpp"

#include <set>
#include <unordered_set>

#include "sdraw/errors.hpp"

namespace sdraw {

namespace {

std::string describe(const Graph& g, const EdgePair& p) {
  auto label = [&](const Edge& e) {
    auto name = [&](VertexId v) {
      return v < g.vertex_count() ? g.name(v) : "#" + std::to_string(v);
    };
    return name(e.u) + "-" + name(e.v);
  };
  return "{" + label(p.first) + ", " + label(p.second) + "}";
}

}  // namespace

CrossingPattern::CrossingPattern(Graph graph, std::vector<EdgePair> crossings)
    : graph_(std::move(graph)), raw_(std::move(crossings)) {
  const std::size_t m = graph_.edge_count();
  matrix_.assign(m * m, 0);
  for (const EdgePair& p : raw_) {
    auto e = graph_.find_edge(p.first.u, p.first.v);
    auto f = graph_.find_edge(p.second.u, p.second.v);
    if (!e || !f || *e == *f) continue;
    matrix_[static_cast<std::size_t>(*e) * m + *f] = 1;
    matrix_[static_cast<std::size_t>(*f) * m + *e] = 1;
  }
  validation_ = validate_simple_pattern(*this);
}

CrossingPattern CrossingPattern::from_edge_ids(
    Graph graph, std::span<const std::pair<EdgeId, EdgeId>> pairs) {
  std::vector<EdgePair> raw;
  raw.reserve(pairs.size());
  for (auto [e, f] : pairs) raw.emplace_back(graph.edge(e), graph.edge(f));
  return CrossingPattern(std::move(graph), std::move(raw));
}

std::vector<std::pair<EdgeId, EdgeId>> CrossingPattern::crossing_ids() const {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  const auto m = static_cast<EdgeId>(graph_.edge_count());
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = e + 1; f < m; ++f)
      if (crosses(e, f)) out.emplace_back(e, f);
  return out;
}

std::size_t CrossingPattern::crossing_count() const {
  return static_cast<std::size_t>(std::count(matrix_.begin(), matrix_.end(), 1)) / 2;
}

void CrossingPattern::require_valid() const {
  if (!valid())
    throw InputError("invalid crossing pattern: " + validation_.violations.front().message);
}

PatternValidation validate_simple_pattern(const CrossingPattern& pattern) {
  const Graph& g = pattern.graph();
  PatternValidation out;
  std::set<EdgePair> seen;
  for (const EdgePair& p : pattern.raw_crossings()) {
    const auto e = g.find_edge(p.first.u, p.first.v);
    const auto f = g.find_edge(p.second.u, p.second.v);
    if (!e || !f) {
      out.violations.push_back(
          {p, PatternRule::kUnknownEdge, "unknown edge in crossing pair " + describe(g, p)});
      continue;
    }
    if (*e == *f) {
      out.violations.push_back(
          {p, PatternRule::kSameEdge, "edge paired with itself " + describe(g, p)});
      continue;
    }
    if (p.first.shares_vertex(p.second)) {
      out.violations.push_back({p, PatternRule::kAdjacentEdgesCross,
                                "adjacent edges cross " + describe(g, p)});
    }
    if (!seen.insert(p).second) {
      out.violations.push_back(
          {p, PatternRule::kDuplicatePair, "crossing pair listed twice " + describe(g, p)});
    }
  }
  return out;
}

bool is_path_in(const Graph& g, const PathWitness& path) {
  if (path.vertices.size() != path.edges.size() + 1) return false;
  std::unordered_set<VertexId> distinct(path.vertices.begin(), path.vertices.end());
  if (distinct.size() != path.vertices.size()) return false;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const auto e = g.find_edge(path.vertices[i], path.vertices[i + 1]);
    if (!e || *e != path.edges[i]) return false;
  }
  return true;
}

bool is_plane_path(const CrossingPattern& p, const PathWitness& path) {
  if (!is_path_in(p.graph(), path)) return false;
  for (std::size_t i = 0; i < path.edges.size(); ++i)
    for (std::size_t j = i + 1; j < path.edges.size(); ++j)
      if (p.crosses(path.edges[i], path.edges[j])) return false;
  return true;
}

bool is_self_intersecting_path(const CrossingPattern& p, const PathWitness& path) {
  if (!is_path_in(p.graph(), path)) return false;
  for (std::size_t i = 0; i < path.edges.size(); ++i)
    for (std::size_t j = i + 1; j < path.edges.size(); ++j)
      if (p.crosses(path.edges[i], path.edges[j])) return true;
  return false;
}

ThrackleVerdict is_thrackle(const CrossingPattern& p) {
  p.require_valid();
  const Graph& g = p.graph();
  const auto m = static_cast<EdgeId>(g.edge_count());
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = e + 1; f < m; ++f)
      if (!g.edge(e).shares_vertex(g.edge(f)) && !p.crosses(e, f))
        return {false, std::make_pair(e, f)};
  return {};
}

LocalThrackleVerdict is_local_thrackle(const CrossingPattern& p) {
  p.require_valid();
  const Graph& g = p.graph();
  // Enumerate 3-paths by their middle edge, in both directions.
  for (EdgeId mid = 0; mid < g.edge_count(); ++mid) {
    for (int dir = 0; dir < 2; ++dir) {
      const Edge me = g.edge(mid);
      const VertexId v1 = dir == 0 ? me.u : me.v;
      const VertexId v2 = me.other(v1);
      for (VertexId v0 : g.neighbors(v1)) {
        if (v0 == v2) continue;
        const EdgeId first = *g.find_edge(v0, v1);
        for (VertexId v3 : g.neighbors(v2)) {
          if (v3 == v1 || v3 == v0) continue;
          const EdgeId last = *g.find_edge(v2, v3);
          if (!p.crosses(first, last))
            return {false, PathWitness{{v0, v1, v2, v3}, {first, mid, last}}};
        }
      }
    }
  }
  return {};
}

namespace {

enum class PathGoal { kPlane, kSelfIntersecting };

class PathSearch {
 public:
  PathSearch(const CrossingPattern& p, std::size_t k, PathGoal goal)
      : p_(p), g_(p.graph()), k_(k), goal_(goal), on_path_(g_.vertex_count(), 0) {}

  std::optional<PathWitness> run() {
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      path_.vertices = {s};
      path_.edges.clear();
      on_path_[s] = 1;
      const bool found = extend(0);
      on_path_[s] = 0;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t crossings) {
    if (path_.edges.size() == k_)
      return goal_ == PathGoal::kPlane ? crossings == 0 : crossings > 0;
    const VertexId v = path_.vertices.back();
    for (VertexId w : g_.neighbors(v)) {
      if (on_path_[w]) continue;
      const EdgeId e = *g_.find_edge(v, w);
      std::size_t added = 0;
      for (EdgeId f : path_.edges) added += p_.crosses(e, f) ? 1 : 0;
      if (goal_ == PathGoal::kPlane && added > 0) continue;
      path_.vertices.push_back(w);
      path_.edges.push_back(e);
      on_path_[w] = 1;
      if (extend(crossings + added)) return true;
      on_path_[w] = 0;
      path_.vertices.pop_back();
      path_.edges.pop_back();
    }
    return false;
  }

  const CrossingPattern& p_;
  const Graph& g_;
  std::size_t k_;
  PathGoal goal_;
  std::vector<char> on_path_;
  PathWitness path_;
};

}  // namespace

std::optional<PathWitness> find_plane_path(const CrossingPattern& p, std::size_t k) {
  p.require_valid();
  if (k == 0) throw InputError("path length must be positive");
  if (k >= p.graph().vertex_count()) return std::nullopt;
  return PathSearch(p, k, PathGoal::kPlane).run();
}

std::optional<PathWitness> find_self_intersecting_path(const CrossingPattern& p,
                                                       std::size_t k) {
  p.require_valid();
  if (k < 3) throw InputError("self-intersecting paths need length >= 3");
  if (k >= p.graph().vertex_count()) return std::nullopt;
  return PathSearch(p, k, PathGoal::kSelfIntersecting).run();
}

std::optional<CkkOrdering> weakly_isomorphic_to_ckk(const CrossingPattern& p,
                                                    std::span<const VertexId> U,
                                                    std::span<const VertexId> V) {
  p.require_valid();
  const Graph& g = p.graph();
  const std::size_t k = U.size();
  if (V.size() != k) throw InputError("weak isomorphism to C_{k,k} needs |U| = |V|");
  if (k == 0) throw InputError("empty bipartition");
  if (k > kMaxCkkSide)
    throw InputError("C_{k,k} search is capped at k = " + std::to_string(kMaxCkkSide));
  if (g.vertex_count() != 2 * k || g.edge_count() != k * k)
    throw InputError("pattern graph is not K_{k,k} on the given parts");

  std::vector<std::vector<EdgeId>> edge_of(k, std::vector<EdgeId>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t s = 0; s < k; ++s) {
      const auto e = g.find_edge(U[a], V[s]);
      if (!e) throw InputError("pattern graph is not K_{k,k} on the given parts");
      edge_of[a][s] = *e;
    }
  }
  auto match = match_canonical_ckk(k, [&](std::size_t a, std::size_t s, std::size_t b,
                                          std::size_t t) {
    return p.crosses(edge_of[a][s], edge_of[b][t]);
  });
  if (!match) return std::nullopt;
  CkkOrdering out;
  for (std::size_t i = 0; i < k; ++i) {
    out.u_order.push_back(U[match->first[i]]);
    out.v_order.push_back(V[match->second[i]]);
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> three_path_end_pairs(const Graph& g) {
  std::set<std::pair<EdgeId, EdgeId>> out;
  for (const Edge& me : g.edges()) {
    for (VertexId v0 : g.neighbors(me.u)) {
      if (v0 == me.v) continue;
      for (VertexId v3 : g.neighbors(me.v)) {
        if (v3 == me.u || v3 == v0) continue;
        EdgeId a = *g.find_edge(v0, me.u);
        EdgeId c = *g.find_edge(me.v, v3);
        out.emplace(std::min(a, c), std::max(a, c));
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace sdraw

#include "sdraw/classify.hpp"

#include <algorithm>
#include <set>

namespace sdraw {

namespace {

using Path3 = std::array<VertexId, 4>;

std::vector<Path3> three_paths_between(const Graph& g, VertexId x, VertexId y) {
  std::vector<Path3> out;
  for (VertexId a : g.neighbors(x)) {
    if (a == y) continue;
    for (VertexId b : g.neighbors(a)) {
      if (b == x || b == y) continue;
      if (g.adjacent(b, y)) out.push_back({x, a, b, y});
    }
  }
  return out;
}

bool interiors_disjoint(const Path3& p, const Path3& q) {
  return p[1] != q[1] && p[1] != q[2] && p[2] != q[1] && p[2] != q[2];
}

}  // namespace

std::optional<Theta3Witness> contains_theta3(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId x = 0; x < n; ++x) {
    if (g.degree(x) < 3) continue;
    for (VertexId y = x + 1; y < n; ++y) {
      if (g.degree(y) < 3) continue;
      const auto paths = three_paths_between(g, x, y);
      if (paths.size() < 3) continue;
      // Backtracking over pairwise interior-disjoint triples.
      for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          if (!interiors_disjoint(paths[i], paths[j])) continue;
          for (std::size_t k = j + 1; k < paths.size(); ++k) {
            if (interiors_disjoint(paths[i], paths[k]) &&
                interiors_disjoint(paths[j], paths[k]))
              return Theta3Witness{x, y, {paths[i], paths[j], paths[k]}};
          }
        }
    }
  }
  return std::nullopt;
}

bool is_theta3_witness(const Graph& g, const Theta3Witness& w) {
  std::set<VertexId> interior;
  for (const auto& p : w.paths) {
    if (p[0] != w.x || p[3] != w.y) return false;
    for (int i = 0; i < 3; ++i)
      if (!g.adjacent(p[i], p[i + 1])) return false;
    for (int i = 1; i <= 2; ++i) {
      if (p[i] == w.x || p[i] == w.y) return false;
      if (!interior.insert(p[i]).second) return false;
    }
  }
  return w.x != w.y;
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kCaterpillar: return "caterpillar";
    case ComponentKind::kOddSpikedCycle: return "odd-spiked-cycle";
    case ComponentKind::kEvenSpikedCycle: return "even-spiked-cycle";
    case ComponentKind::kOther: return "other";
  }
  return "other";
}

std::vector<ComponentClass> classify_components(const Graph& g) {
  std::vector<ComponentClass> out;
  for (auto& comp : connected_components(g)) {
    ComponentClass cls;
    cls.vertices = comp;
    std::size_t edges = 0;
    for (VertexId v : comp) edges += g.degree(v);
    edges /= 2;

    // Remove all leaves once; the remainder must be a path or a cycle.
    std::vector<VertexId> core;
    for (VertexId v : comp)
      if (g.degree(v) > 1) core.push_back(v);
    std::set<VertexId> in_core(core.begin(), core.end());
    std::size_t core_edges = 0;
    bool max_deg_two = true;
    for (VertexId v : core) {
      std::size_t d = 0;
      for (VertexId w : g.neighbors(v)) d += in_core.contains(w) ? 1 : 0;
      core_edges += d;
      if (d > 2) max_deg_two = false;
    }
    core_edges /= 2;

    if (edges + 1 == comp.size()) {
      // A tree; its non-leaf part is connected, so degree <= 2 means a path.
      cls.kind = max_deg_two ? ComponentKind::kCaterpillar : ComponentKind::kOther;
    } else if (edges == comp.size() && max_deg_two && core_edges == core.size()) {
      // Unicyclic with a 2-regular core: the core is exactly the cycle and
      // every other vertex was a leaf.
      cls.cycle_length = core.size();
      cls.kind = core.size() % 2 == 1 ? ComponentKind::kOddSpikedCycle
                                      : ComponentKind::kEvenSpikedCycle;
    } else {
      cls.kind = ComponentKind::kOther;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

ThrackleabilityVerdict classify_geometric_local_thrackleable(const Graph& g) {
  ThrackleabilityVerdict v;
  v.components = classify_components(g);
  v.accepted = std::ranges::all_of(v.components, [](const ComponentClass& c) {
    switch (c.kind) {
      case ComponentKind::kCaterpillar:
      case ComponentKind::kOddSpikedCycle: return true;
      case ComponentKind::kEvenSpikedCycle: return c.cycle_length >= 8;
      case ComponentKind::kOther: return false;
    }
    return false;
  });
  return v;
}

ThrackleabilityVerdict classify_geometric_thrackleable(const Graph& g) {
  ThrackleabilityVerdict v;
  v.components = classify_components(g);
  const bool all_caterpillars = std::ranges::all_of(
      v.components, [](const ComponentClass& c) { return c.kind == ComponentKind::kCaterpillar; });
  std::size_t odd_cycles = 0;
  bool rest_isolated = true;
  for (const auto& c : v.components) {
    if (c.kind == ComponentKind::kOddSpikedCycle) {
      ++odd_cycles;
    } else if (c.vertices.size() != 1) {
      rest_isolated = false;
    }
  }
  v.accepted = all_caterpillars || (odd_cycles == 1 && rest_isolated);
  return v;
}

}  // namespace sdraw

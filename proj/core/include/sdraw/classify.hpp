#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sdraw/graph.hpp"

namespace sdraw {

/// Two hubs joined by three internally vertex-disjoint paths of length 3.
struct Theta3Witness {
  VertexId x = 0;
  VertexId y = 0;
  /// Each path lists x, a, b, y.
  std::array<std::array<VertexId, 4>, 3> paths{};
};

std::optional<Theta3Witness> contains_theta3(const Graph& g);
bool is_theta3_witness(const Graph& g, const Theta3Witness& w);

enum class ComponentKind {
  kCaterpillar,
  kOddSpikedCycle,
  kEvenSpikedCycle,
  kOther,
};

std::string_view to_string(ComponentKind kind);

struct ComponentClass {
  std::vector<VertexId> vertices;
  ComponentKind kind = ComponentKind::kOther;
  /// Length of the unique cycle for spiked cycles, 0 otherwise.
  std::size_t cycle_length = 0;
};

/// Per-component classification by one round of leaf removal.
std::vector<ComponentClass> classify_components(const Graph& g);

struct ThrackleabilityVerdict {
  bool accepted = false;
  std::vector<ComponentClass> components;
};

/// Disjoint union of caterpillars, odd spiked cycles and even spiked cycles
/// of length at least eight.
ThrackleabilityVerdict classify_geometric_local_thrackleable(const Graph& g);

/// Woodall: a disjoint union of caterpillars, or one odd spiked cycle plus
/// isolated vertices.
ThrackleabilityVerdict classify_geometric_thrackleable(const Graph& g);

}  // namespace sdraw

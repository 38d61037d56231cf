#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdraw/graph.hpp"

namespace sdraw {

/// Left-right planarity test (de Fraysseix-Rosenstiehl, in the formulation of
/// Brandes). Linear time.
bool is_planar(const Graph& g);
/// Same test on a bare edge list over vertices 0..n-1 (no loops or repeats).
bool is_planar(std::size_t n, std::span<const Edge> edges);

/// Cyclic (counterclockwise) neighbor order at every vertex.
using RotationSystem = std::vector<std::vector<VertexId>>;

/// Number of faces traced by a rotation system, summed over components.
std::size_t count_faces(const Graph& g, const RotationSystem& rot);

/// True if `rot` lists every vertex's neighbors exactly once and satisfies
/// Euler's formula V - E + F = 1 + C on every component (C components).
bool is_planar_rotation_system(const Graph& g, const RotationSystem& rot);

/// Independent oracle: exhaustive search over rotation systems, built edge by
/// edge so that every prefix stays a plane embedding. Exponential; intended
/// for graphs with at most a dozen vertices.
std::optional<RotationSystem> exhaustive_planar_embedding(const Graph& g);

enum class KuratowskiKind { kK5, kK33 };

std::string_view to_string(KuratowskiKind kind);

struct PlanarityCertificate {
  bool planar = false;
  /// For planar graphs up to `embedding_vertex_limit` vertices.
  std::optional<RotationSystem> embedding;
  /// For non-planar graphs: the edges of a K5 or K3,3 subdivision.
  std::vector<EdgeId> kuratowski_edges;
  std::optional<KuratowskiKind> kuratowski_kind;
};

/// Planarity with a certificate. Non-planar graphs get a minimal non-planar
/// edge set found by greedy deletion; planar graphs small enough for the
/// exhaustive embedder get a rotation system.
PlanarityCertificate planarity_certificate(const Graph& g,
                                           std::size_t embedding_vertex_limit = 12);

}  // namespace sdraw

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdraw/geometry.hpp"

namespace sdraw {

/// C_{s,t}: u1..us at x = 0 with heights yU, v1..vt at x = 1 with heights yV.
/// Both height sequences must be strictly increasing.
GeometricDrawing two_line_drawing(std::span<const Rational> yU,
                                  std::span<const Rational> yV);
/// Heights 1..s and 1..t.
GeometricDrawing two_line_drawing(std::size_t s, std::size_t t);

/// Vertex ids of the U part (u1..us) and V part (v1..vt) of a bipartite
/// drawing built here.
struct Bipartition {
  std::vector<VertexId> U;
  std::vector<VertexId> V;
};
Bipartition two_line_parts(const GeometricDrawing& d, std::size_t s, std::size_t t);

/// Odd step for the star polygon of an even n-gon: n/2 - 1 or n/2 - 2.
std::size_t ngon_step(std::size_t n);

/// Even cycle of length n on a regular n-gon, edges v_i v_{i+m}, with
/// spike_counts[i] extra leaves joined to v_i and placed just inside the side
/// v_{i+m} v_{i+m+1}. n must be even, n >= 8 and n != 10. The n-gon is
/// rationalized and, if needed, perturbed until it is in general position.
GeometricDrawing ngon_spiked_cycle(std::size_t n, std::span<const std::size_t> spike_counts);

/// Random straight-line K_{s,t}: U near x = 0 and V near x = 1 at random
/// heights, each point shifted horizontally by up to `x_spread`. Retries
/// until the drawing is in general position.
GeometricDrawing random_bipartite_drawing(std::size_t s, std::size_t t, std::uint64_t seed,
                                          double x_spread);

}  // namespace sdraw

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdraw/pattern.hpp"
#include "sdraw/rational.hpp"
#include "sdraw/type_table.hpp"

namespace sdraw {

enum class Side : std::uint8_t { kUpper, kLower };

std::string to_string(Side side);

/// K_n with vertices on the x-axis (left to right in `order`) and every edge
/// a half-circle above or below the axis.
struct HalfCircleDrawing {
  std::vector<std::string> order;
  /// Side of the edge between positions i < j, at pair_index(i, j, n).
  std::vector<Side> sides;

  [[nodiscard]] std::size_t size() const { return order.size(); }
  [[nodiscard]] Side side(std::size_t a, std::size_t b) const;
  void set_side(std::size_t a, std::size_t b, Side s);
  /// complete_graph(n) with the order names; edge ids follow pair_index.
  [[nodiscard]] Graph graph() const;
};

/// All edges on the upper side, vertices named "0".."n-1".
HalfCircleDrawing halfcircle_drawing(std::size_t n, Side fill = Side::kUpper);

/// Edge {i,j} (pair index p) is upper iff bit 0 of SplitMix64::stream(seed, p)
/// is set.
HalfCircleDrawing sample_halfcircle_drawing(std::size_t n, std::uint64_t seed);

/// Whether edges {a,b} and {c,d} (positions) cross: they interleave and lie
/// on the same side.
bool halfcircle_edges_cross(const HalfCircleDrawing& d, std::size_t a, std::size_t b,
                            std::size_t c, std::size_t e);

CrossingPattern halfcircle_crossings(const HalfCircleDrawing& d);

/// Unordered pair of disjoint k-sets of positions. S is the part that
/// splits around T (S1 left, S2 right, S1 nonempty); T is contiguous among
/// the 2k chosen positions.
struct SeparatedPair {
  std::vector<std::size_t> S;
  std::vector<std::size_t> T;
};

/// For every 2k-subset of positions, the k separated pairs (split index
/// j = 1..k: S takes the first j and the last k-j positions).
std::vector<SeparatedPair> enumerate_separated_pairs(std::size_t n, std::size_t k);

/// The separated pair with split index j on positions 0..2k-1.
SeparatedPair separated_configuration(std::size_t k, std::size_t j);

enum class ScanMode { kSeparatedOnly, kAllPairs };

struct CkkOccurrence {
  std::vector<std::size_t> S;
  std::vector<std::size_t> T;
  /// Positions of U and V in canonical order.
  std::vector<std::size_t> u_order;
  std::vector<std::size_t> v_order;
};

struct CkkCount {
  std::uint64_t count = 0;
  std::vector<CkkOccurrence> witnesses;
};

/// Unordered pairs (S, T) whose bipartite sub-drawing is weakly isomorphic
/// to C_{k,k}, trying both role assignments. k <= kMaxCkkSide.
CkkCount count_weak_ckk(const HalfCircleDrawing& d, std::size_t k, ScanMode mode,
                        std::size_t max_witnesses = 0);

/// Weak isomorphism of the S x T sub-drawing to C_{k,k}, S playing U.
std::optional<CkkOccurrence> halfcircle_ckk_match(const HalfCircleDrawing& d,
                                                  const std::vector<std::size_t>& S,
                                                  const std::vector<std::size_t>& T);

struct PairProbability {
  std::size_t k = 0;
  std::size_t split = 0;
  std::uint64_t favorable = 0;
  std::uint64_t total = 0;
  Rational probability;
  /// Equal to 2^(3 - k^2).
  bool matches_formula = false;
  /// Favorable assignments are exactly one common side for all S x T edges
  /// except u1v0 and u0v1, whose sides are free.
  bool witness_structure = false;
  /// Bit a*k + x set means edge S[a] T[x] is upper.
  std::vector<std::uint64_t> favorable_masks;
};

/// Exhaustive over the 2^(k^2) side assignments of the S x T edges of
/// separated_configuration(k, split). k in 2..4.
PairProbability exact_pair_probability(std::size_t k, std::size_t split);

/// k * C(n, 2k) * 2^(3 - k^2).
Rational expected_count_formula(std::size_t n, std::size_t k);

/// Mean count over all 2^C(n,2) drawings (all-pairs scan); n <= 7.
Rational exhaustive_expectation(std::size_t n, std::size_t k);

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  double mean = 0;
  double standard_error = 0;
};

/// Trial i uses the drawing sampled with seed SplitMix64::stream(seed, i).
/// Integer accumulation keeps the result independent of `jobs`.
MonteCarloResult montecarlo_expectation(std::size_t n, std::size_t k, std::uint64_t trials,
                                        std::uint64_t seed, std::size_t jobs = 1,
                                        ScanMode mode = ScanMode::kSeparatedOnly);

/// Order type of (u_i, u_j, v_s, v_t), given as axis positions, in closed
/// form: around an upper crossing the endpoints read clockwise in decreasing
/// x, around a lower one in increasing x.
OrderType halfcircle_order_type(const HalfCircleDrawing& d, std::size_t ui, std::size_t uj,
                                std::size_t vs, std::size_t vt);

/// Type table for U and V given as position lists.
TypeTable halfcircle_type_table(const HalfCircleDrawing& d, const std::vector<std::size_t>& U,
                                const std::vector<std::size_t>& V);

}  // namespace sdraw

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdraw/graph.hpp"

namespace sdraw {

/// An unordered pair of edges given by their endpoints. Endpoints need not
/// form an edge of the graph; validation reports that case.
struct EdgePair {
  Edge first;
  Edge second;

  EdgePair() = default;
  EdgePair(Edge a, Edge b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

enum class PatternRule {
  kUnknownEdge,
  kSameEdge,
  kAdjacentEdgesCross,
  kDuplicatePair,
};

struct PatternViolation {
  EdgePair pair;
  PatternRule rule;
  std::string message;
};

struct PatternValidation {
  std::vector<PatternViolation> violations;
  [[nodiscard]] bool valid() const { return violations.empty(); }
};

/// The weak-isomorphism class of a drawing: which edge pairs cross.
class CrossingPattern {
 public:
  CrossingPattern() = default;
  /// Accepts arbitrary pairs; call validate() (or any predicate, which
  /// rejects invalid patterns) to check the simple-drawing invariants.
  CrossingPattern(Graph graph, std::vector<EdgePair> crossings);
  static CrossingPattern from_edge_ids(Graph graph,
                                       std::span<const std::pair<EdgeId, EdgeId>> pairs);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  /// Pairs in input order (possibly with duplicates or invalid entries).
  [[nodiscard]] std::span<const EdgePair> raw_crossings() const { return raw_; }
  /// Normalized, sorted, deduplicated pairs of known edges.
  [[nodiscard]] std::vector<std::pair<EdgeId, EdgeId>> crossing_ids() const;
  [[nodiscard]] std::size_t crossing_count() const;

  [[nodiscard]] bool crosses(EdgeId e, EdgeId f) const {
    return matrix_[static_cast<std::size_t>(e) * graph_.edge_count() + f] != 0;
  }

  [[nodiscard]] const PatternValidation& validation() const { return validation_; }
  [[nodiscard]] bool valid() const { return validation_.valid(); }
  /// Throws InputError listing the first violation.
  void require_valid() const;

 private:
  Graph graph_;
  std::vector<EdgePair> raw_;
  std::vector<unsigned char> matrix_;
  PatternValidation validation_;
};

/// Checks the CrossingPattern invariants: known edges, distinct and
/// non-adjacent members, at most one entry per pair.
PatternValidation validate_simple_pattern(const CrossingPattern& pattern);

/// A path v0 v1 ... vk together with its k edges.
struct PathWitness {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] std::size_t length() const { return edges.size(); }
};

/// True if `path` is a genuine path of `g` (distinct vertices, consecutive
/// adjacency, edges matching the vertex sequence).
bool is_path_in(const Graph& g, const PathWitness& path);
bool is_plane_path(const CrossingPattern& p, const PathWitness& path);
bool is_self_intersecting_path(const CrossingPattern& p, const PathWitness& path);

struct ThrackleVerdict {
  bool thrackle = true;
  /// A vertex-disjoint pair that does not cross, when thrackle is false.
  std::optional<std::pair<EdgeId, EdgeId>> counterexample;
};

ThrackleVerdict is_thrackle(const CrossingPattern& p);

struct LocalThrackleVerdict {
  bool local_thrackle = true;
  /// A plane path of length 3, when local_thrackle is false.
  std::optional<PathWitness> witness;
};

/// Checks that the end edges of every 3-edge path cross.
LocalThrackleVerdict is_local_thrackle(const CrossingPattern& p);

/// Exhaustive DFS for a path of length k with pairwise non-crossing edges.
std::optional<PathWitness> find_plane_path(const CrossingPattern& p, std::size_t k);

/// Exhaustive DFS for a path of length k (k >= 3) with two crossing edges.
std::optional<PathWitness> find_self_intersecting_path(const CrossingPattern& p,
                                                       std::size_t k);

/// Largest part size accepted by the weak-isomorphism brute force.
inline constexpr std::size_t kMaxCkkSide = 5;

/// Orderings (u_1..u_k) and (v_1..v_k) under which a crossing pattern on
/// K_{k,k} equals the canonical C_{k,k} pattern.
struct CkkOrdering {
  std::vector<VertexId> u_order;
  std::vector<VertexId> v_order;
};

/// The canonical C_{k,k} rule for positions in the two orders:
/// u_i v_s crosses u_j v_t iff (i < j) xor (s < t), for i != j and s != t.
constexpr bool canonical_ckk_crossing(std::size_t i, std::size_t s, std::size_t j,
                                      std::size_t t) {
  return i != j && s != t && ((i < j) != (s < t));
}

/// Brute force over all k!·k! ordering pairs. `crosses(a, s, b, t)` reports
/// whether the edge between local U-index a and local V-index s crosses the
/// edge between b and t; it is only queried for a != b and s != t. Returns
/// local-index permutations (position -> local index).
template <typename CrossFn>
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
match_canonical_ckk(std::size_t k, CrossFn&& crosses) {
  // Every K_{2,2} of C_{k,k} has exactly one crossing; this rejects most
  // candidates before any permutation is tried.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t)
          if (crosses(a, s, b, t) == crosses(a, t, b, s)) return std::nullopt;

  std::vector<std::size_t> pu(k), pv(k);
  std::iota(pu.begin(), pu.end(), std::size_t{0});
  do {
    std::iota(pv.begin(), pv.end(), std::size_t{0});
    do {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = i + 1; j < k && ok; ++j)
          for (std::size_t s = 0; s < k && ok; ++s)
            for (std::size_t t = s + 1; t < k && ok; ++t)
              // positions i<j, s<t: only u_i v_t x u_j v_s may cross.
              ok = crosses(pu[i], pv[t], pu[j], pv[s]);
      if (ok) return std::make_pair(pu, pv);
    } while (std::next_permutation(pv.begin(), pv.end()));
  } while (std::next_permutation(pu.begin(), pu.end()));
  return std::nullopt;
}

/// The pattern's graph must be exactly K_{k,k} on (U, V) with k <= 5.
std::optional<CkkOrdering> weakly_isomorphic_to_ckk(const CrossingPattern& p,
                                                    std::span<const VertexId> U,
                                                    std::span<const VertexId> V);

/// All vertex-disjoint edge pairs (a, c) such that some 3-edge path has a and
/// c as its end edges; a local thrackle must cross every one of them.
std::vector<std::pair<EdgeId, EdgeId>> three_path_end_pairs(const Graph& g);

}  // namespace sdraw

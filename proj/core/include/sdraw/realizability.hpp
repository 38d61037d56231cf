#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdraw/graph.hpp"

namespace sdraw {

/// A crossing specification: every edge gets a direction (its tail vertex)
/// and the ordered list of edges it crosses, read along that direction.
struct CrossingLists {
  Graph graph;
  /// tails[e] is an endpoint of edge e; the edge runs tail -> other end.
  std::vector<VertexId> tails;
  /// lists[e] is the sequence of edges crossing e, in order from the tail.
  std::vector<std::vector<EdgeId>> lists;

  /// Edges directed u -> v (normalized order) with empty lists.
  static CrossingLists uncrossed(Graph g);

  [[nodiscard]] VertexId head(EdgeId e) const { return graph.edge(e).other(tails[e]); }
  [[nodiscard]] std::size_t crossing_count() const;
  /// Unordered crossing pairs (e < f), sorted.
  [[nodiscard]] std::vector<std::pair<EdgeId, EdgeId>> crossing_pairs() const;
};

/// Throws InputError on bad directions, unknown edges, self-crossings,
/// adjacent partners, repeated partners or asymmetric lists.
void validate_crossing_lists(const CrossingLists& spec);

/// Same spec with every edge reversed (and every list reversed with it).
CrossingLists reversed(const CrossingLists& spec);

enum class AuxVertexKind : std::uint8_t { kOriginal, kCrossing, kSubdivision };

/// The graph H obtained by planarization, subdivision and bracing. It can
/// carry parallel edges (bracing may repeat an uncrossed original edge).
struct AuxiliaryGraph {
  std::vector<AuxVertexKind> kinds;
  /// For crossing vertices: the crossing edge pair (e < f); {0, 0} otherwise.
  std::vector<std::pair<EdgeId, EdgeId>> crossing_of;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t original_vertices = 0;
  std::size_t crossings = 0;
  std::size_t subdivisions = 0;
  std::size_t bracing_edges = 0;

  [[nodiscard]] std::size_t vertex_count() const { return kinds.size(); }
  /// Underlying simple graph (parallel edges merged).
  [[nodiscard]] std::vector<Edge> simple_edges() const;
};

/// Builds H. Validates the spec first.
AuxiliaryGraph build_auxiliary_graph(const CrossingLists& spec);

/// Builds H without validation; `tails` and `lists` are indexed by edge id
/// of `g`. Used by the enumerators, which validate once per crossing set.
AuxiliaryGraph build_auxiliary_graph_unchecked(const Graph& g, std::span<const VertexId> tails,
                                               const std::vector<std::vector<EdgeId>>& lists);

/// |V(H)| and |E(H)| (with multiplicity) from the list lengths alone.
std::pair<std::size_t, std::size_t> auxiliary_counts_formula(const CrossingLists& spec);

/// True iff some simple drawing realizes the spec, decided by planarity of H.
bool is_realizable(const CrossingLists& spec);

/// Every assignment of crossing lists whose unordered crossing pairs are a
/// given set: the product over edges of all orderings of each edge's
/// partners. Index 0 is the lexicographically smallest assignment, with edge 0
/// the most significant digit.
class CrossingListEnumerator {
 public:
  CrossingListEnumerator(Graph g, std::vector<VertexId> tails,
                         std::span<const std::pair<EdgeId, EdgeId>> crossing_set);

  [[nodiscard]] std::uint64_t count() const { return count_; }
  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<VertexId>& tails() const { return tails_; }
  /// Writes assignment `index` into `lists` (resized as needed).
  void fill(std::uint64_t index, std::vector<std::vector<EdgeId>>& lists) const;
  [[nodiscard]] CrossingLists at(std::uint64_t index) const;

 private:
  Graph graph_;
  std::vector<VertexId> tails_;
  std::vector<std::vector<EdgeId>> partners_;  // sorted
  std::vector<std::uint64_t> radix_;           // |partners|!
  std::uint64_t count_ = 1;
};

struct EnumerationSummary {
  std::uint64_t tested = 0;
  std::uint64_t realizable = 0;
  /// Enumeration indices of realizable assignments, up to the cap.
  std::vector<std::uint64_t> witness_indices;
};

/// Tests every assignment of `enumerator`; `jobs` threads.
EnumerationSummary enumerate_realizable(const CrossingListEnumerator& enumerator,
                                        std::size_t jobs = 1, std::size_t max_witnesses = 16);

/// One pass of the C6 audit: six mandatory pairs, one opposite pair
/// excluded, the other two opposite pairs free.
struct C6AuditRun {
  std::pair<EdgeId, EdgeId> excluded;
  std::uint64_t crossing_sets = 0;
  std::uint64_t tested = 0;
  std::uint64_t realizable = 0;
  std::vector<CrossingLists> witnesses;
};

struct C6AuditReport {
  /// The primary run excludes {e0, e3}; totals refer to it.
  std::uint64_t tested = 0;
  std::uint64_t realizable = 0;
  std::vector<CrossingLists> witnesses;
  std::vector<std::pair<EdgeId, EdgeId>> mandatory_pairs;
  /// All three choices of excluded opposite pair, primary first.
  std::vector<C6AuditRun> symmetry_runs;
  bool symmetric = false;
  /// Control: all nine disjoint pairs cross (thrackle set).
  std::uint64_t control_tested = 0;
  std::uint64_t control_realizable = 0;
  /// Realizable control specs up to the dihedral symmetry of C6.
  std::size_t control_dihedral_classes = 0;
  std::vector<CrossingLists> control_witnesses;
};

/// Edges e_i = (i, i+1 mod 6) directed i -> i+1.
C6AuditReport c6_local_thrackle_audit(std::size_t jobs = 1, std::size_t max_witnesses = 8);

/// Number of classes of C6 specs under rotations and reflections of the
/// cycle. Every spec must be on cycle_graph(6).
std::size_t c6_dihedral_classes(std::span<const CrossingLists> specs);

}  // namespace sdraw

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdraw/graph.hpp"
#include "sdraw/pattern.hpp"
#include "sdraw/rational.hpp"
#include "sdraw/type_table.hpp"

namespace sdraw {

/// Sign of twice the signed area of pqr: +1 when r lies left of the directed
/// line p->q (counterclockwise), -1 when right, 0 when collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// Orientation value treated as "clockwise" when reading cyclic orders. All
/// order-type chirality flows from this one constant.
inline constexpr int kClockwise = -1;

/// Indices of `targets` sorted counterclockwise by the direction of
/// (target - center), starting from the positive x-axis. Directions must be
/// nonzero and pairwise distinct.
std::vector<std::size_t> counterclockwise_order(const Point& center,
                                                std::span<const Point> targets);

enum class SegmentContact {
  kDisjoint,
  kProperCrossing,
  /// Any other contact: touching, endpoint on segment, collinear overlap.
  kTouching,
};

SegmentContact segment_contact(const Point& a, const Point& b, const Point& c,
                               const Point& d);

/// Intersection point of two properly crossing segments.
Point crossing_point(const Point& a, const Point& b, const Point& c, const Point& d);

/// One proper crossing between two edges.
struct CrossingRecord {
  EdgeId e = 0;
  EdgeId f = 0;
  /// Segment indices along the polylines of e and f (oriented from
  /// edge(e).u to edge(e).v).
  std::size_t segment_e = 0;
  std::size_t segment_f = 0;
  Point at;
};

/// A straight-line or x-monotone-polyline drawing with exact coordinates.
/// Construction enforces general position and throws GeneralPositionError.
class GeometricDrawing {
 public:
  /// `bends[e]` lists the interior points of edge e from edge(e).u towards
  /// edge(e).v; an empty list (or an empty `bends`) means a straight segment.
  GeometricDrawing(Graph graph, std::vector<Point> points,
                   std::vector<std::vector<Point>> bends = {});

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const Point& point(VertexId v) const { return points_.at(v); }
  [[nodiscard]] std::span<const Point> points() const { return points_; }
  [[nodiscard]] std::span<const Point> bends(EdgeId e) const { return bends_.at(e); }
  [[nodiscard]] bool has_bends() const;

  /// Full point sequence of edge e from edge(e).u to edge(e).v.
  [[nodiscard]] std::vector<Point> polyline(EdgeId e) const;

  [[nodiscard]] std::span<const CrossingRecord> crossings() const { return crossings_; }
  /// Crossings between e and f, in discovery order.
  [[nodiscard]] std::vector<CrossingRecord> crossings_between(EdgeId e, EdgeId f) const;

 private:
  void check_general_position();

  Graph graph_;
  std::vector<Point> points_;
  std::vector<std::vector<Point>> bends_;
  std::vector<CrossingRecord> crossings_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_pair_;
};

enum class SimplicityIssueKind {
  kAdjacentEdgesCross,
  kMultipleCrossings,
};

struct SimplicityIssue {
  SimplicityIssueKind kind;
  EdgeId e = 0;
  EdgeId f = 0;
  std::size_t count = 0;
};

struct DrawingCrossings {
  /// Every pair with at least one crossing.
  CrossingPattern pattern;
  std::vector<SimplicityIssue> issues;

  [[nodiscard]] bool simple() const { return issues.empty(); }
};

DrawingCrossings crossing_pattern_of(const GeometricDrawing& drawing);

/// Like crossing_pattern_of, but throws InputError unless the drawing is simple.
CrossingPattern simple_crossing_pattern(const GeometricDrawing& drawing);

/// Order type of the K_{2,2} on u_i, u_j (i < j in the U order) and v_s, v_t
/// (s < t in the V order). Throws InconsistencyError when both independent
/// pairs cross or a pair crosses more than once.
OrderType order_type(const GeometricDrawing& drawing, VertexId ui, VertexId uj,
                     VertexId vs, VertexId vt);

TypeTable type_table_from_drawing(const GeometricDrawing& drawing,
                                  std::span<const VertexId> U,
                                  std::span<const VertexId> V);

}  // namespace sdraw

#pragma once

#include <nlohmann/json.hpp>

#include "sdraw/classify.hpp"
#include "sdraw/geometry.hpp"
#include "sdraw/halfcircle.hpp"
#include "sdraw/matrix.hpp"
#include "sdraw/pattern.hpp"
#include "sdraw/planarity.hpp"
#include "sdraw/ramsey.hpp"
#include "sdraw/realizability.hpp"
#include "sdraw/type_table.hpp"

namespace sdraw {

using Json = nlohmann::json;

// All readers throw InputError on malformed documents. Writers normalize
// every edge as [a, b] with a < b as strings, and sort edge lists.

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"vertices", "edges", "crossings": [[[a,b],[c,d]], ...]}.
Json to_json(const CrossingPattern& p);
/// Accepts the flat form or {"graph": ..., "crossings": ...}.
CrossingPattern pattern_from_json(const Json& j);

/// Numerators and denominators as integers, or decimal strings when they
/// do not fit in 64 bits.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& num, const Json& den);

/// {"points": {v: [xn, xd, yn, yd]}, "edges": [...], "polylines": {"a|b":
/// [[xn, xd, yn, yd], ...]}}. Polyline entries are interior points in
/// increasing x; endpoints may be included and are then ignored.
Json to_json(const GeometricDrawing& d);
GeometricDrawing drawing_from_json(const Json& j);

/// {"U": [...], "V": [...], "types": [{"u": [i,j], "v": [s,t], "type": w}]},
/// indices 0-based. Missing entries default to type 5.
Json to_json(const TypeTable& t);
TypeTable type_table_from_json(const Json& j);

/// {"graph": ..., "directions": [[tail, head], ...], "lists": {"t->h":
/// [[a,b], ...]}}.
Json to_json(const CrossingLists& spec);
CrossingLists crossing_lists_from_json(const Json& j);

/// {"order": [...], "sides": {"a|b": "upper" | "lower"}}.
Json to_json(const HalfCircleDrawing& d);
HalfCircleDrawing halfcircle_from_json(const Json& j);

/// {"top": [...], "bottom": [...]}.
Json to_json(const TwoRowMatrix& m);
TwoRowMatrix matrix_from_json(const Json& j);

Json path_to_json(const Graph& g, const PathWitness& path);
Json edge_to_json(const Graph& g, EdgeId e);
Json rotation_to_json(const Graph& g, const RotationSystem& rot);
Json to_json(const Theta3Witness& w, const Graph& g);
Json to_json(const ThrackleabilityVerdict& v, const Graph& g);
Json to_json(const C6AuditReport& r);
Json to_json(const ExtractionResult& r, const TypeTable& table);
Json to_json(const ForbiddenWitness& w);
Json to_json(const PpttReport& r);
Json to_json(const PairProbability& p);

}  // namespace sdraw

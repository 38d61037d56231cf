#include "sdraw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sdraw/errors.hpp"

namespace sdraw {

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw InputError("coordinate is not finite");
  int exp = 0;
  const double mant = std::frexp(v, &exp);
  // mant * 2^53 is an exact integer for IEEE doubles.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigInt(scaled)};
  if (exp >= 0) return r * Rational(BigInt(1) << exp);
  return r / Rational(BigInt(1) << -exp);
}

Rational round_to_grid(double v, unsigned bits) {
  const double scaled = std::ldexp(v, static_cast<int>(bits));
  return Rational(BigInt(std::llround(scaled)), BigInt(1) << bits);
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

bool within_box(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orientation(a, b, p) == 0 && within_box(a, b, p);
}

std::uint64_t pair_key(EdgeId e, EdgeId f) {
  if (e > f) std::swap(e, f);
  return (static_cast<std::uint64_t>(e) << 32) | f;
}

std::string pt(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
  return sign(cross(p, q, r));
}

std::vector<std::size_t> counterclockwise_order(const Point& center,
                                                std::span<const Point> targets) {
  struct Dir {
    Rational dx, dy;
    int half;
  };
  std::vector<Dir> dirs;
  dirs.reserve(targets.size());
  for (const Point& t : targets) {
    Rational dx = t.x - center.x, dy = t.y - center.y;
    if (dx == 0 && dy == 0) throw InputError("zero direction in angular sort");
    const int half = (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    dirs.push_back({std::move(dx), std::move(dy), half});
  }
  std::vector<std::size_t> idx(targets.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::ranges::sort(idx, [&](std::size_t a, std::size_t b) {
    if (dirs[a].half != dirs[b].half) return dirs[a].half < dirs[b].half;
    return dirs[a].dx * dirs[b].dy - dirs[a].dy * dirs[b].dx > 0;
  });
  return idx;
}

SegmentContact segment_contact(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentContact::kProperCrossing;
  if ((o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
      (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b)))
    return SegmentContact::kTouching;
  return SegmentContact::kDisjoint;
}

Point crossing_point(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Rational rx = b.x - a.x, ry = b.y - a.y;
  const Rational sx = d.x - c.x, sy = d.y - c.y;
  const Rational denom = rx * sy - ry * sx;
  if (denom == 0) throw InputError("parallel segments have no crossing point");
  const Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return Point(a.x + t * rx, a.y + t * ry);
}

GeometricDrawing::GeometricDrawing(Graph graph, std::vector<Point> points,
                                   std::vector<std::vector<Point>> bends)
    : graph_(std::move(graph)), points_(std::move(points)), bends_(std::move(bends)) {
  if (points_.size() != graph_.vertex_count())
    throw InputError("drawing needs exactly one point per vertex");
  if (bends_.empty()) bends_.resize(graph_.edge_count());
  if (bends_.size() != graph_.edge_count())
    throw InputError("drawing needs one bend list per edge");
  check_general_position();
}

bool GeometricDrawing::has_bends() const {
  return std::ranges::any_of(bends_, [](const auto& b) { return !b.empty(); });
}

std::vector<Point> GeometricDrawing::polyline(EdgeId e) const {
  const Edge& ed = graph_.edge(e);
  std::vector<Point> out;
  out.reserve(bends_[e].size() + 2);
  out.push_back(points_[ed.u]);
  out.insert(out.end(), bends_[e].begin(), bends_[e].end());
  out.push_back(points_[ed.v]);
  return out;
}

std::vector<CrossingRecord> GeometricDrawing::crossings_between(EdgeId e, EdgeId f) const {
  std::vector<CrossingRecord> out;
  const auto it = by_pair_.find(pair_key(e, f));
  if (it == by_pair_.end()) return out;
  for (std::size_t i : it->second) out.push_back(crossings_[i]);
  return out;
}

void GeometricDrawing::check_general_position() {
  const std::size_t n = graph_.vertex_count();
  const auto m = static_cast<EdgeId>(graph_.edge_count());

  {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::ranges::sort(idx, [&](auto a, auto b) { return points_[a] < points_[b]; });
    for (std::size_t i = 1; i < n; ++i)
      if (points_[idx[i]] == points_[idx[i - 1]])
        throw GeneralPositionError("vertices '" + graph_.name(static_cast<VertexId>(idx[i - 1])) +
                                   "' and '" + graph_.name(static_cast<VertexId>(idx[i])) +
                                   "' coincide at " + pt(points_[idx[i]]));
  }

  std::vector<std::vector<Point>> lines(m);
  for (EdgeId e = 0; e < m; ++e) {
    lines[e] = polyline(e);
    const auto& l = lines[e];
    if (l.size() > 2) {
      const bool inc = l[1].x > l[0].x;
      for (std::size_t i = 1; i < l.size(); ++i)
        if (inc ? !(l[i].x > l[i - 1].x) : !(l[i].x < l[i - 1].x))
          throw GeneralPositionError("polyline of edge " + graph_.edge_label(e) +
                                     " is not strictly x-monotone");
    }
  }

  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = graph_.edge(e);
    const auto& l = lines[e];
    const std::size_t segs = l.size() - 1;
    for (std::size_t k = 0; k < segs; ++k) {
      for (VertexId w = 0; w < n; ++w) {
        const Point& p = points_[w];
        if (!on_segment(l[k], l[k + 1], p)) continue;
        if (w == ed.u && k == 0 && p == l[0]) continue;
        if (w == ed.v && k + 1 == segs && p == l[k + 1]) continue;
        throw GeneralPositionError("vertex '" + graph_.name(w) + "' lies on edge " +
                                   graph_.edge_label(e));
      }
    }
  }

  std::map<Point, std::size_t> at_point;
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f = e + 1; f < m; ++f) {
      const Edge& ee = graph_.edge(e);
      const Edge& fe = graph_.edge(f);
      const auto& le = lines[e];
      const auto& lf = lines[f];
      std::optional<VertexId> shared;
      if (ee.shares_vertex(fe)) shared = ee.touches(fe.u) ? fe.u : fe.v;
      for (std::size_t a = 0; a + 1 < le.size(); ++a) {
        for (std::size_t b = 0; b + 1 < lf.size(); ++b) {
          const auto contact = segment_contact(le[a], le[a + 1], lf[b], lf[b + 1]);
          if (contact == SegmentContact::kDisjoint) continue;
          if (contact == SegmentContact::kProperCrossing) {
            CrossingRecord rec{e, f, a, b, crossing_point(le[a], le[a + 1], lf[b], lf[b + 1])};
            if (auto [it, fresh] = at_point.emplace(rec.at, crossings_.size()); !fresh) {
              const auto& other = crossings_[it->second];
              throw GeneralPositionError(
                  "edges " + graph_.edge_label(other.e) + ", " + graph_.edge_label(other.f) +
                  ", " + graph_.edge_label(e) + ", " + graph_.edge_label(f) +
                  " share the crossing point " + pt(rec.at));
            }
            by_pair_[pair_key(e, f)].push_back(crossings_.size());
            crossings_.push_back(std::move(rec));
            continue;
          }
          // Touching is allowed only between the two segments incident to a
          // shared vertex, and only at that vertex.
          bool ok = false;
          if (shared) {
            const Point& c = points_[*shared];
            const bool e_at_c = (*shared == ee.u) ? a == 0 : a + 2 == le.size();
            const bool f_at_c = (*shared == fe.u) ? b == 0 : b + 2 == lf.size();
            if (e_at_c && f_at_c) {
              const Point& pe = (*shared == ee.u) ? le[a + 1] : le[a];
              const Point& pf = (*shared == fe.u) ? lf[b + 1] : lf[b];
              if (orientation(c, pe, pf) != 0) {
                ok = true;
              } else {
                // Collinear: fine only if they leave c in opposite directions.
                const Rational dot = (pe.x - c.x) * (pf.x - c.x) + (pe.y - c.y) * (pf.y - c.y);
                ok = dot < 0;
              }
            }
          }
          if (!ok)
            throw GeneralPositionError("edges " + graph_.edge_label(e) + " and " +
                                       graph_.edge_label(f) + " touch or overlap");
        }
      }
    }
  }
}

DrawingCrossings crossing_pattern_of(const GeometricDrawing& drawing) {
  const Graph& g = drawing.graph();
  std::map<std::pair<EdgeId, EdgeId>, std::size_t> counts;
  for (const auto& rec : drawing.crossings()) ++counts[{rec.e, rec.f}];
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<SimplicityIssue> issues;
  for (const auto& [key, count] : counts) {
    pairs.push_back(key);
    if (g.edge(key.first).shares_vertex(g.edge(key.second)))
      issues.push_back({SimplicityIssueKind::kAdjacentEdgesCross, key.first, key.second, count});
    if (count > 1)
      issues.push_back({SimplicityIssueKind::kMultipleCrossings, key.first, key.second, count});
  }
  return {CrossingPattern::from_edge_ids(g, pairs), std::move(issues)};
}

CrossingPattern simple_crossing_pattern(const GeometricDrawing& drawing) {
  auto dc = crossing_pattern_of(drawing);
  if (!dc.simple()) {
    const auto& is = dc.issues.front();
    const Graph& g = drawing.graph();
    throw InputError("not a simple drawing: edges " + g.edge_label(is.e) + " and " +
                     g.edge_label(is.f) +
                     (is.kind == SimplicityIssueKind::kAdjacentEdgesCross
                          ? " are adjacent and cross"
                          : " cross " + std::to_string(is.count) + " times"));
  }
  return std::move(dc.pattern);
}

namespace {

EdgeId require_edge(const Graph& g, VertexId a, VertexId b) {
  if (auto e = g.find_edge(a, b)) return *e;
  throw InputError("drawing has no edge " + g.name(a) + "-" + g.name(b));
}

}  // namespace

OrderType order_type(const GeometricDrawing& drawing, VertexId ui, VertexId uj,
                     VertexId vs, VertexId vt) {
  const Graph& g = drawing.graph();
  if (ui == uj || vs == vt || ui == vs || ui == vt || uj == vs || uj == vt)
    throw InputError("order type needs four distinct vertices");
  const EdgeId ui_vt = require_edge(g, ui, vt);
  const EdgeId uj_vs = require_edge(g, uj, vs);
  const EdgeId ui_vs = require_edge(g, ui, vs);
  const EdgeId uj_vt = require_edge(g, uj, vt);

  const auto outer = drawing.crossings_between(ui_vt, uj_vs);
  const auto inner = drawing.crossings_between(ui_vs, uj_vt);
  if (outer.size() > 1 || inner.size() > 1)
    throw InconsistencyError("an edge pair of the K_{2,2} on " + g.name(ui) + ", " +
                             g.name(uj) + ", " + g.name(vs) + ", " + g.name(vt) +
                             " crosses more than once");
  if (!outer.empty() && !inner.empty())
    throw InconsistencyError("both independent pairs of the K_{2,2} on " + g.name(ui) +
                             ", " + g.name(uj) + ", " + g.name(vs) + ", " + g.name(vt) +
                             " cross");
  if (outer.empty() && inner.empty()) return OrderType::kPlane;

  const CrossingRecord& rec = outer.empty() ? inner.front() : outer.front();
  // The four ray targets are the endpoints of the two crossing segments.
  std::vector<Point> targets;
  std::vector<VertexId> owner;
  auto add_rays = [&](EdgeId e, std::size_t seg) {
    const auto line = drawing.polyline(e);
    targets.push_back(line[seg]);
    owner.push_back(g.edge(e).u);
    targets.push_back(line[seg + 1]);
    owner.push_back(g.edge(e).v);
  };
  add_rays(rec.e, rec.segment_e);
  add_rays(rec.f, rec.segment_f);

  auto order = counterclockwise_order(rec.at, targets);
  if constexpr (kClockwise < 0) std::ranges::reverse(order);
  std::vector<VertexId> cyc;
  for (auto i : order) cyc.push_back(owner[i]);
  std::ranges::rotate(cyc, std::ranges::find(cyc, ui));

  using V4 = std::vector<VertexId>;
  if (!outer.empty()) {
    if (cyc == V4{ui, vs, vt, uj}) return OrderType::kType1;
    if (cyc == V4{ui, uj, vt, vs}) return OrderType::kType2;
  } else {
    if (cyc == V4{ui, vt, vs, uj}) return OrderType::kType3;
    if (cyc == V4{ui, uj, vs, vt}) return OrderType::kType4;
  }
  throw InconsistencyError("rays around a crossing do not alternate");
}

TypeTable type_table_from_drawing(const GeometricDrawing& drawing,
                                  std::span<const VertexId> U,
                                  std::span<const VertexId> V) {
  const Graph& g = drawing.graph();
  std::vector<std::string> un, vn;
  for (VertexId u : U) un.push_back(g.name(u));
  for (VertexId v : V) vn.push_back(g.name(v));
  TypeTable table(std::move(un), std::move(vn));
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = i + 1; j < U.size(); ++j)
      for (std::size_t s = 0; s < V.size(); ++s)
        for (std::size_t t = s + 1; t < V.size(); ++t)
          table.set(i, j, s, t, order_type(drawing, U[i], U[j], V[s], V[t]));
  return table;
}

}  // namespace sdraw

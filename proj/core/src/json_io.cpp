#include "sdraw/json_io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "sdraw/errors.hpp"

namespace sdraw {

namespace {

template <typename T>
T get_or_throw(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": bad \"" + key + "\": " + e.what());
  }
}

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

Json name_pair(const std::string& a, const std::string& b) {
  return a < b ? Json::array({a, b}) : Json::array({b, a});
}

std::string pair_key(const std::string& a, const std::string& b) {
  return a < b ? a + "|" + b : b + "|" + a;
}

EdgeId edge_from_json(const Graph& g, const Json& e, const char* what) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
    throw InputError(std::string(what) + ": an edge must be a pair of vertex names");
  const VertexId a = g.vertex(e[0].get<std::string>());
  const VertexId b = g.vertex(e[1].get<std::string>());
  const auto id = g.find_edge(a, b);
  if (!id)
    throw InputError(std::string(what) + ": " + e[0].get<std::string>() + "-" +
                     e[1].get<std::string>() + " is not an edge");
  return *id;
}

// Edge-id order, so that reading the output back reproduces the ids.
Json edge_list(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back(name_pair(g.name(e.u), g.name(e.v)));
  return out;
}

Json integer_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("expected an integer (number or decimal string), got " + j.dump());
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const Rational* r : {&p.x, &p.y}) {
    out.push_back(integer_to_json(numerator(*r)));
    out.push_back(integer_to_json(denominator(*r)));
  }
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || (j.size() != 4 && j.size() != 2))
    throw InputError("a point is [x_num, x_den, y_num, y_den] or [x, y] with integers");
  if (j.size() == 2) return Point(Rational(integer_from_json(j[0])), Rational(integer_from_json(j[1])));
  return Point(rational_from_json(j[0], j[1]), rational_from_json(j[2], j[3]));
}

}  // namespace

Json to_json(const Graph& g) {
  Json vs = Json::array();
  for (const auto& n : g.names()) vs.push_back(n);
  return {{"vertices", vs}, {"edges", edge_list(g)}};
}

Graph graph_from_json(const Json& j) {
  const auto names = get_or_throw<std::vector<std::string>>(j, "vertices", "graph");
  const std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) throw InputError("graph: duplicate vertex name");
  Graph g(names);
  const Json& edges = member(j, "edges", "graph");
  if (!edges.is_array()) throw InputError("graph: \"edges\" must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("graph: an edge must be a pair of vertex names");
    g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return g;
}

Json to_json(const CrossingPattern& p) {
  const Graph& g = p.graph();
  Json out = to_json(g);
  std::vector<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>>
      pairs;
  auto named = [&](const Edge& e) {
    auto a = g.name(e.u);
    auto b = g.name(e.v);
    if (b < a) std::swap(a, b);
    return std::make_pair(a, b);
  };
  for (const EdgePair& ep : p.raw_crossings()) {
    auto x = named(ep.first), y = named(ep.second);
    if (y < x) std::swap(x, y);
    pairs.emplace_back(x, y);
  }
  std::ranges::sort(pairs);
  Json cs = Json::array();
  for (const auto& [x, y] : pairs)
    cs.push_back(Json::array({Json::array({x.first, x.second}), Json::array({y.first, y.second})}));
  out["crossings"] = cs;
  return out;
}

CrossingPattern pattern_from_json(const Json& j) {
  Graph g = graph_from_json(j.is_object() && j.contains("graph") ? j.at("graph") : j);
  const Json& cs = member(j, "crossings", "pattern");
  if (!cs.is_array()) throw InputError("pattern: \"crossings\" must be an array");
  std::vector<EdgePair> pairs;
  for (const Json& c : cs) {
    if (!c.is_array() || c.size() != 2)
      throw InputError("pattern: a crossing must be a pair of edges");
    auto end = [&](const Json& e) -> Edge {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InputError("pattern: an edge must be a pair of vertex names");
      return Edge(g.vertex(e[0].get<std::string>()), g.vertex(e[1].get<std::string>()));
    };
    pairs.emplace_back(end(c[0]), end(c[1]));
  }
  return CrossingPattern(std::move(g), std::move(pairs));
}

Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(numerator(r)), integer_to_json(denominator(r))});
}

Rational rational_from_json(const Json& num, const Json& den) {
  const BigInt n = integer_from_json(num);
  const BigInt d = integer_from_json(den);
  if (d == 0) throw InputError("zero denominator");
  return Rational(n, d);
}

Json to_json(const GeometricDrawing& d) {
  const Graph& g = d.graph();
  Json points = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) points[g.name(v)] = point_to_json(d.point(v));
  Json vertices = Json::array();
  for (const auto& n : g.names()) vertices.push_back(n);
  Json out{{"vertices", vertices}, {"points", points}, {"edges", edge_list(g)}};
  if (d.has_bends()) {
    Json lines = Json::object();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto bends = std::vector<Point>(d.bends(e).begin(), d.bends(e).end());
      if (bends.empty()) continue;
      if (d.point(g.edge(e).u).x > d.point(g.edge(e).v).x) std::ranges::reverse(bends);
      Json pl = Json::array();
      for (const auto& p : bends) pl.push_back(point_to_json(p));
      lines[pair_key(g.name(g.edge(e).u), g.name(g.edge(e).v))] = pl;
    }
    out["polylines"] = lines;
  }
  return out;
}

GeometricDrawing drawing_from_json(const Json& j) {
  const Json& pts = member(j, "points", "drawing");
  if (!pts.is_object()) throw InputError("drawing: \"points\" must be an object");
  std::vector<std::string> names;
  for (const auto& [name, _] : pts.items()) names.push_back(name);
  // Keep the order of "vertices" if given, else sorted names.
  if (j.contains("vertices")) {
    const auto vs = get_or_throw<std::vector<std::string>>(j, "vertices", "drawing");
    if (std::set<std::string>(vs.begin(), vs.end()) != std::set<std::string>(names.begin(), names.end()))
      throw InputError("drawing: \"vertices\" and \"points\" disagree");
    names = vs;
  }
  Graph g(names);
  std::vector<Point> points;
  for (const auto& n : names) points.push_back(point_from_json(pts.at(n)));
  const Json& edges = member(j, "edges", "drawing");
  if (!edges.is_array()) throw InputError("drawing: \"edges\" must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("drawing: an edge must be a pair of vertex names");
    g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::vector<std::vector<Point>> bends(g.edge_count());
  if (j.contains("polylines")) {
    const Json& lines = j.at("polylines");
    if (!lines.is_object()) throw InputError("drawing: \"polylines\" must be an object");
    for (const auto& [key, list] : lines.items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos) throw InputError("drawing: polyline key must be \"a|b\"");
      const VertexId a = g.vertex(key.substr(0, bar));
      const VertexId b = g.vertex(key.substr(bar + 1));
      const auto id = g.find_edge(a, b);
      if (!id) throw InputError("drawing: polyline for non-edge " + key);
      const Edge& e = g.edge(*id);
      std::vector<Point> ps;
      for (const Json& p : list) ps.push_back(point_from_json(p));
      std::erase_if(ps, [&](const Point& p) { return p == points[e.u] || p == points[e.v]; });
      std::ranges::sort(ps, [](const Point& p, const Point& q) { return p.x < q.x; });
      if (points[e.u].x > points[e.v].x) std::ranges::reverse(ps);
      bends[*id] = std::move(ps);
    }
  }
  return GeometricDrawing(std::move(g), std::move(points), std::move(bends));
}

Json to_json(const TypeTable& t) {
  Json types = Json::array();
  for (std::size_t i = 0; i < t.u_size(); ++i)
    for (std::size_t j = i + 1; j < t.u_size(); ++j)
      for (std::size_t s = 0; s < t.v_size(); ++s)
        for (std::size_t u = s + 1; u < t.v_size(); ++u)
          types.push_back({{"u", {i, j}}, {"v", {s, u}}, {"type", to_int(t.at(i, j, s, u))}});
  return {{"U", t.u_names()}, {"V", t.v_names()}, {"types", types}};
}

TypeTable type_table_from_json(const Json& j) {
  TypeTable t(get_or_throw<std::vector<std::string>>(j, "U", "type table"),
              get_or_throw<std::vector<std::string>>(j, "V", "type table"));
  const Json& types = member(j, "types", "type table");
  if (!types.is_array()) throw InputError("type table: \"types\" must be an array");
  for (const Json& e : types) {
    const auto u = get_or_throw<std::vector<std::size_t>>(e, "u", "type table entry");
    const auto v = get_or_throw<std::vector<std::size_t>>(e, "v", "type table entry");
    const int w = get_or_throw<int>(e, "type", "type table entry");
    if (u.size() != 2 || v.size() != 2)
      throw InputError("type table entry: \"u\" and \"v\" must be index pairs");
    if (!(u[0] < u[1] && u[1] < t.u_size() && v[0] < v[1] && v[1] < t.v_size()))
      throw InputError("type table entry: indices must be increasing and in range");
    t.set(u[0], u[1], v[0], v[1], order_type_from_int(w));
  }
  return t;
}

Json to_json(const CrossingLists& spec) {
  const Graph& g = spec.graph;
  Json dirs = Json::array();
  Json lists = Json::object();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& tail = g.name(spec.tails[e]);
    const auto& head = g.name(spec.head(e));
    dirs.push_back({tail, head});
    Json l = Json::array();
    for (EdgeId f : spec.lists[e]) l.push_back(edge_to_json(g, f));
    lists[tail + "->" + head] = l;
  }
  return {{"graph", to_json(g)}, {"directions", dirs}, {"lists", lists}};
}

CrossingLists crossing_lists_from_json(const Json& j) {
  CrossingLists spec;
  spec.graph = graph_from_json(member(j, "graph", "crossing lists"));
  const Graph& g = spec.graph;
  spec.tails.resize(g.edge_count());
  std::vector<char> directed(g.edge_count(), 0);
  if (j.contains("directions")) {
    for (const Json& d : j.at("directions")) {
      const EdgeId e = edge_from_json(g, d, "crossing lists");
      if (directed[e]) throw InputError("crossing lists: edge directed twice");
      directed[e] = 1;
      spec.tails[e] = g.vertex(d[0].get<std::string>());
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!directed[e]) spec.tails[e] = g.edge(e).u;
  spec.lists.assign(g.edge_count(), {});
  if (j.contains("lists")) {
    const Json& lists = j.at("lists");
    if (!lists.is_object()) throw InputError("crossing lists: \"lists\" must be an object");
    for (const auto& [key, list] : lists.items()) {
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) throw InputError("crossing lists: key must be \"tail->head\"");
      const VertexId t = g.vertex(key.substr(0, arrow));
      const VertexId h = g.vertex(key.substr(arrow + 2));
      const auto e = g.find_edge(t, h);
      if (!e) throw InputError("crossing lists: " + key + " is not an edge");
      if (spec.tails[*e] != t)
        throw InputError("crossing lists: " + key + " disagrees with the edge direction");
      if (!list.is_array()) throw InputError("crossing lists: a list must be an array");
      for (const Json& f : list) spec.lists[*e].push_back(edge_from_json(g, f, "crossing lists"));
    }
  }
  validate_crossing_lists(spec);
  return spec;
}

Json to_json(const HalfCircleDrawing& d) {
  Json sides = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      sides[pair_key(d.order[i], d.order[j])] = to_string(d.side(i, j));
  return {{"order", d.order}, {"sides", sides}};
}

HalfCircleDrawing halfcircle_from_json(const Json& j) {
  HalfCircleDrawing d;
  d.order = get_or_throw<std::vector<std::string>>(j, "order", "half-circle drawing");
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < d.order.size(); ++i)
    if (!pos.emplace(d.order[i], i).second)
      throw InputError("half-circle drawing: duplicate vertex " + d.order[i]);
  const std::size_t n = d.order.size();
  d.sides.assign(n < 2 ? 0 : n * (n - 1) / 2, Side::kUpper);
  std::vector<char> seen(d.sides.size(), 0);
  const Json& sides = member(j, "sides", "half-circle drawing");
  if (!sides.is_object()) throw InputError("half-circle drawing: \"sides\" must be an object");
  for (const auto& [key, value] : sides.items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw InputError("half-circle drawing: side key must be \"a|b\"");
    const auto a = pos.find(key.substr(0, bar));
    const auto b = pos.find(key.substr(bar + 1));
    if (a == pos.end() || b == pos.end() || a->second == b->second)
      throw InputError("half-circle drawing: bad edge " + key);
    if (!value.is_string() || (value != "upper" && value != "lower"))
      throw InputError("half-circle drawing: side must be \"upper\" or \"lower\"");
    d.set_side(a->second, b->second, value == "upper" ? Side::kUpper : Side::kLower);
    seen[pair_index(std::min(a->second, b->second), std::max(a->second, b->second), n)] = 1;
  }
  if (std::ranges::find(seen, 0) != seen.end())
    throw InputError("half-circle drawing: every vertex pair needs a side");
  return d;
}

Json to_json(const TwoRowMatrix& m) { return {{"top", m.top()}, {"bottom", m.bottom()}}; }

TwoRowMatrix matrix_from_json(const Json& j) {
  return TwoRowMatrix(get_or_throw<std::vector<std::string>>(j, "top", "matrix"),
                      get_or_throw<std::vector<std::string>>(j, "bottom", "matrix"));
}

Json edge_to_json(const Graph& g, EdgeId e) {
  return name_pair(g.name(g.edge(e).u), g.name(g.edge(e).v));
}

Json path_to_json(const Graph& g, const PathWitness& path) {
  Json vs = Json::array();
  for (VertexId v : path.vertices) vs.push_back(g.name(v));
  return {{"vertices", vs}, {"length", path.length()}};
}

Json rotation_to_json(const Graph& g, const RotationSystem& rot) {
  Json out = Json::object();
  for (VertexId v = 0; v < rot.size(); ++v) {
    Json l = Json::array();
    for (VertexId w : rot[v]) l.push_back(g.name(w));
    out[g.name(v)] = l;
  }
  return out;
}

Json to_json(const Theta3Witness& w, const Graph& g) {
  Json paths = Json::array();
  for (const auto& p : w.paths) {
    Json l = Json::array();
    for (VertexId v : p) l.push_back(g.name(v));
    paths.push_back(l);
  }
  return {{"hubs", {g.name(w.x), g.name(w.y)}}, {"paths", paths}};
}

Json to_json(const ThrackleabilityVerdict& v, const Graph& g) {
  Json comps = Json::array();
  for (const auto& c : v.components) {
    Json vs = Json::array();
    for (VertexId x : c.vertices) vs.push_back(g.name(x));
    Json entry{{"vertices", vs}, {"kind", std::string(to_string(c.kind))}};
    if (c.cycle_length) entry["cycle_length"] = c.cycle_length;
    comps.push_back(entry);
  }
  return {{"accepted", v.accepted}, {"components", comps}};
}

namespace {

Json audit_run_to_json(const C6AuditRun& r) {
  Json w = Json::array();
  for (const auto& spec : r.witnesses) w.push_back(to_json(spec));
  return {{"excluded_pair", {r.excluded.first, r.excluded.second}},
          {"crossing_sets", r.crossing_sets},
          {"tested", r.tested},
          {"realizable", r.realizable},
          {"witnesses", w}};
}

}  // namespace

Json to_json(const C6AuditReport& r) {
  Json w = Json::array();
  for (const auto& spec : r.witnesses) w.push_back(to_json(spec));
  Json runs = Json::array();
  for (const auto& run : r.symmetry_runs) runs.push_back(audit_run_to_json(run));
  Json mandatory = Json::array();
  for (const auto& [a, b] : r.mandatory_pairs) mandatory.push_back({a, b});
  Json cw = Json::array();
  for (const auto& spec : r.control_witnesses) cw.push_back(to_json(spec));
  return {{"tested", r.tested},
          {"realizable", r.realizable},
          {"witnesses", w},
          {"mandatory_pairs", mandatory},
          {"symmetry_runs", runs},
          {"symmetric", r.symmetric},
          {"control",
           {{"tested", r.control_tested},
            {"realizable", r.control_realizable},
            {"dihedral_classes", r.control_dihedral_classes},
            {"witnesses", cw}}}};
}

Json to_json(const ExtractionResult& r, const TypeTable& table) {
  auto names = [](const std::vector<std::size_t>& idx, const std::vector<std::string>& all) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(all.at(i));
    return out;
  };
  Json out{{"labeled_pairs", r.labeled_pairs},
           {"unlabeled_pairs", r.unlabeled_pairs},
           {"distinct_labels", r.distinct_labels},
           {"clique_nodes", r.clique_nodes}};
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, CkkWitness>) {
          out["outcome"] = "success";
          out["type"] = to_int(o.type);
          out["S"] = o.S;
          out["T"] = o.T;
          out["u_order"] = names(o.u_order, table.u_names());
          out["v_order"] = names(o.v_order, table.v_names());
          out["v_reversed"] = o.v_reversed;
        } else if constexpr (std::is_same_v<T, PlaneK3kCertificate>) {
          out["outcome"] = "plane_k3k";
          out["S"] = o.S;
          out["T"] = o.T;
        } else if constexpr (std::is_same_v<T, TransitivityViolation>) {
          out["outcome"] = "transitivity_violation";
          out["violation"] = {{"w", o.w}, {"s", o.s}, {"t", o.t}, {"i", o.i}, {"j", o.j}, {"l", o.l}};
        } else if constexpr (std::is_same_v<T, InsufficientV>) {
          out["outcome"] = "insufficient_v";
        } else {
          out["outcome"] = "budget_exceeded";
        }
      },
      r.outcome);
  return out;
}

Json to_json(const ForbiddenWitness& w) {
  Json cols = Json::array();
  for (auto c : w.columns) cols.push_back(c);
  Json sym = w.pattern == ForbiddenPattern::kF1
                 ? Json{{"a", w.symbols[0]}, {"b", w.symbols[1]}, {"s", w.symbols[2]}}
                 : Json{{"a", w.symbols[0]}, {"s", w.symbols[1]}, {"t", w.symbols[2]}};
  return {{"pattern", std::string(to_string(w.pattern))}, {"columns", cols}, {"symbols", sym}};
}

Json to_json(const PpttReport& r) {
  Json out{{"columns", r.columns},
           {"duplicate_columns", r.duplicate_columns},
           {"symbols", r.symbols},
           {"bound", r.bound},
           {"within_bound", r.within_bound},
           {"hypothesis_holds", r.hypothesis_holds},
           {"lemma_violation", r.lemma_violation}};
  if (r.forbidden) out["forbidden"] = to_json(*r.forbidden);
  return out;
}

Json to_json(const PairProbability& p) {
  return {{"k", p.k},
          {"split", p.split},
          {"favorable", p.favorable},
          {"total", p.total},
          {"probability", to_string(p.probability)},
          {"matches_formula", p.matches_formula},
          {"witness_structure", p.witness_structure}};
}

}  // namespace sdraw

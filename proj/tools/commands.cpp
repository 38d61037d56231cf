#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <ostream>
#include <queue>

#include "sdraw/classify.hpp"
#include "sdraw/constructions.hpp"
#include "sdraw/errors.hpp"
#include "sdraw/geometry.hpp"
#include "sdraw/halfcircle.hpp"
#include "sdraw/matrix.hpp"
#include "sdraw/parallel.hpp"
#include "sdraw/planarity.hpp"
#include "sdraw/ramsey.hpp"
#include "sdraw/random.hpp"
#include "sdraw/realizability.hpp"
#include "svg.hpp"

namespace sdraw::cli {

namespace {

template <class T>
std::shared_ptr<T> slot(T init = T{}) {
  return std::make_shared<T>(std::move(init));
}

Json rational_value(const Rational& r) {
  return {{"exact", to_string(r)}, {"value", to_double(r)}};
}

ScanMode parse_mode(const std::string& s) {
  return s == "all" ? ScanMode::kAllPairs : ScanMode::kSeparatedOnly;
}

// U = the color class of the first vertex in a proper 2-coloring.
Bipartition bipartition_of(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          throw InputError("graph is not bipartite; pass --u and --v");
        }
      }
    }
  }
  Bipartition b;
  for (VertexId v = 0; v < g.vertex_count(); ++v) (color[v] == 0 ? b.U : b.V).push_back(v);
  return b;
}

std::vector<VertexId> vertices_named(const Graph& g, const std::vector<std::string>& names) {
  std::vector<VertexId> out;
  for (const auto& n : names) out.push_back(g.vertex(n));
  return out;
}

Json type_histogram(const TypeTable& t) {
  std::array<std::uint64_t, 6> count{};
  for (std::size_t i = 0; i < t.u_size(); ++i)
    for (std::size_t j = i + 1; j < t.u_size(); ++j)
      for (std::size_t s = 0; s < t.v_size(); ++s)
        for (std::size_t u = s + 1; u < t.v_size(); ++u) ++count[to_int(t.at(i, j, s, u))];
  Json h = Json::object();
  for (int w = 1; w <= 5; ++w) h[std::to_string(w)] = count[w];
  return h;
}

Json violation_json(const std::optional<TransitivityViolation>& v) {
  if (!v) return nullptr;
  return {{"type", v->w}, {"v_pair", {v->s, v->t}}, {"u_triple", {v->i, v->j, v->l}}};
}

// --------------------------------------------------------------------------

void add_planar(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("planar", "Planarity test with embedding or Kuratowski certificate");
  auto path = slot<std::string>();
  auto limit = slot<std::size_t>(12);
  sub->add_option("--graph", *path, "graph JSON")->required();
  sub->add_option("--embedding-limit", *limit, "largest vertex count for which an embedding is built")
      ->capture_default_str();
  reg.add(sub, [=](Context& ctx) {
    const Graph g = graph_from_json(ctx.read_json(*path));
    const auto cert = planarity_certificate(g, *limit);
    Json r{{"planar", cert.planar}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    if (cert.embedding) r["embedding"] = rotation_to_json(g, *cert.embedding);
    if (cert.kuratowski_kind) {
      Json es = Json::array();
      for (EdgeId e : cert.kuratowski_edges) es.push_back(edge_to_json(g, e));
      r["kuratowski"] = {{"kind", to_string(*cert.kuratowski_kind)}, {"edges", es}};
    }
    ctx.log() << "planar: " << (cert.planar ? "true" : "false") << '\n';
    return r;
  });
}

void add_realize(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("realize", "Decide whether crossing lists are realizable by a simple drawing");
  auto path = slot<std::string>();
  sub->add_option("--file,--lists", *path, "crossing lists JSON")->required();
  reg.add(sub, [=](Context& ctx) {
    const CrossingLists spec = crossing_lists_from_json(ctx.read_json(*path));
    const auto h = build_auxiliary_graph(spec);
    const bool ok = is_planar(h.vertex_count(), h.simple_edges());
    ctx.log() << "realizable: " << (ok ? "true" : "false") << '\n';
    return Json{{"realizable", ok},
                {"crossings", spec.crossing_count()},
                {"auxiliary",
                 {{"vertices", h.vertex_count()},
                  {"edges", h.edges.size()},
                  {"crossing_vertices", h.crossings},
                  {"subdivision_vertices", h.subdivisions},
                  {"bracing_edges", h.bracing_edges}}}};
  });
}

void add_c6_audit(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("c6-audit", "Exhaustive audit: local thrackle drawings of C6 are thrackles");
  auto jobs = slot<std::size_t>(1);
  auto witnesses = slot<std::size_t>(8);
  sub->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
  sub->add_option("--max-witnesses", *witnesses, "witnesses kept per run")->capture_default_str();
  reg.add(sub, [=](Context& ctx) {
    const auto report = c6_local_thrackle_audit(*jobs, *witnesses);
    ctx.log() << "c6-audit: tested " << report.tested << ", realizable " << report.realizable
              << "; control realizable " << report.control_realizable << '\n';
    return to_json(report);
  });
}

void add_verify(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("verify", "Check a drawing property on a pattern or geometric drawing");
  auto property = slot<std::string>();
  auto pattern = slot<std::string>();
  auto drawing = slot<std::string>();
  auto svg = slot<std::string>();
  auto k = slot<std::size_t>(3);
  sub->add_option("property", *property, "thrackle | local-thrackle | plane-path | self-crossing-path")
      ->required()
      ->check(CLI::IsMember({"thrackle", "local-thrackle", "plane-path", "self-crossing-path"}));
  auto* p = sub->add_option("--pattern", *pattern, "crossing pattern JSON");
  auto* d = sub->add_option("--drawing", *drawing, "geometric drawing JSON");
  p->excludes(d);
  sub->add_option("--k", *k, "path length for the path properties")->capture_default_str();
  sub->add_option("--svg", *svg, "write an SVG rendering of the drawing");
  reg.add(sub, [=](Context& ctx) {
    if (pattern->empty() == drawing->empty()) throw InputError("give exactly one of --pattern, --drawing");
    std::optional<CrossingPattern> cp;
    if (!pattern->empty()) {
      cp.emplace(pattern_from_json(ctx.read_json(*pattern)));
      cp->require_valid();
    } else {
      const auto dr = drawing_from_json(ctx.read_json(*drawing));
      if (!svg->empty()) ctx.write_file(*svg, drawing_svg(dr));
      cp.emplace(simple_crossing_pattern(dr));
    }
    const Graph& g = cp->graph();
    Json r{{"property", *property}};
    if (*property == "thrackle") {
      const auto v = is_thrackle(*cp);
      r["holds"] = v.thrackle;
      if (v.counterexample)
        r["counterexample"] = {edge_to_json(g, v.counterexample->first),
                               edge_to_json(g, v.counterexample->second)};
    } else if (*property == "local-thrackle") {
      const auto v = is_local_thrackle(*cp);
      r["holds"] = v.local_thrackle;
      if (v.witness) r["plane_path"] = path_to_json(g, *v.witness);
    } else if (*property == "plane-path") {
      r["k"] = *k;
      const auto path = find_plane_path(*cp, *k);
      r["holds"] = path.has_value();
      if (path) r["path"] = path_to_json(g, *path);
    } else {
      r["k"] = *k;
      const auto path = find_self_intersecting_path(*cp, *k);
      r["holds"] = path.has_value();
      if (path) r["path"] = path_to_json(g, *path);
    }
    ctx.log() << *property << ": " << (r["holds"].get<bool>() ? "true" : "false") << '\n';
    return r;
  });
}

void add_classify(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("classify", "Geometric thrackleability and local thrackleability of a graph");
  auto path = slot<std::string>();
  sub->add_option("--graph", *path, "graph JSON")->required();
  reg.add(sub, [=](Context& ctx) {
    const Graph g = graph_from_json(ctx.read_json(*path));
    const auto local = classify_geometric_local_thrackleable(g);
    const auto thr = classify_geometric_thrackleable(g);
    const auto theta = contains_theta3(g);
    ctx.log() << "geometric local thrackleable: " << (local.accepted ? "true" : "false")
              << ", geometric thrackleable: " << (thr.accepted ? "true" : "false") << '\n';
    return Json{{"geometric_local_thrackleable", to_json(local, g)},
                {"geometric_thrackleable", to_json(thr, g)},
                {"theta3", theta ? to_json(*theta, g) : Json(nullptr)}};
  });
}

void add_ngon(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("ngon", "Star-polygon drawing of an even spiked cycle");
  auto n = slot<std::size_t>();
  auto spikes = slot<std::vector<std::size_t>>();
  auto svg = slot<std::string>();
  sub->add_option("--n", *n, "cycle length (even, >= 8, not 10)")->required();
  sub->add_option("--spikes", *spikes, "leaves per cycle vertex: one value for all, or n values")
      ->delimiter(',');
  sub->add_option("--svg", *svg, "write an SVG rendering");
  reg.add(sub, [=](Context& ctx) {
    std::vector<std::size_t> counts = *spikes;
    if (counts.size() == 1) counts.assign(*n, counts.front());
    const auto d = ngon_spiked_cycle(*n, counts);
    if (!svg->empty()) ctx.write_file(*svg, drawing_svg(d));
    const auto p = simple_crossing_pattern(d);
    const auto local = is_local_thrackle(p);
    const auto thr = is_thrackle(p);
    ctx.log() << "ngon n=" << *n << ": local thrackle " << (local.local_thrackle ? "true" : "false")
              << ", thrackle " << (thr.thrackle ? "true" : "false") << '\n';
    Json r{{"n", *n},
           {"step", ngon_step(*n)},
           {"vertices", d.graph().vertex_count()},
           {"crossings", p.crossing_count()},
           {"local_thrackle", local.local_thrackle},
           {"thrackle", thr.thrackle},
           {"drawing", to_json(d)}};
    if (thr.counterexample)
      r["thrackle_counterexample"] = {edge_to_json(d.graph(), thr.counterexample->first),
                                      edge_to_json(d.graph(), thr.counterexample->second)};
    return r;
  });
}

void add_twolines(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("twolines", "Straight-line K_{s,t} with the parts on two vertical lines");
  auto s = slot<std::size_t>();
  auto t = slot<std::size_t>();
  auto seed = slot<std::uint64_t>(0);
  auto spread = slot<double>(0.0);
  auto svg = slot<std::string>();
  sub->add_option("--s", *s, "size of U")->required();
  sub->add_option("--t", *t, "size of V")->required();
  auto* so = sub->add_option("--seed", *seed, "random heights (with --spread jitter) instead of the default layout");
  sub->add_option("--spread", *spread, "horizontal jitter for seeded drawings")->capture_default_str();
  sub->add_option("--svg", *svg, "write an SVG rendering");
  reg.add(sub, [=](Context& ctx) {
    const bool random = so->count() > 0;
    const auto d = random ? random_bipartite_drawing(*s, *t, *seed, *spread) : two_line_drawing(*s, *t);
    if (!svg->empty()) ctx.write_file(*svg, drawing_svg(d));
    const auto parts = two_line_parts(d, *s, *t);
    const auto table = type_table_from_drawing(d, parts.U, parts.V);
    const auto v = check_type_transitivity(table);
    ctx.log() << "twolines " << *s << "x" << *t << ": transitive " << (v ? "false" : "true") << '\n';
    return Json{{"drawing", to_json(d)},
                {"types", type_histogram(table)},
                {"transitive", !v},
                {"violation", violation_json(v)},
                {"table", to_json(table)}};
  });
}

void add_typetable(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("typetable", "Order types of every bipartite 4-tuple of a drawing");
  auto path = slot<std::string>();
  auto us = slot<std::vector<std::string>>();
  auto vs = slot<std::vector<std::string>>();
  auto svg = slot<std::string>();
  sub->add_option("--drawing", *path, "geometric drawing JSON")->required();
  sub->add_option("--u", *us, "U vertex names in order (comma separated)")->delimiter(',');
  sub->add_option("--v", *vs, "V vertex names in order (comma separated)")->delimiter(',');
  sub->add_option("--svg", *svg, "write an SVG rendering");
  reg.add(sub, [=](Context& ctx) {
    const auto d = drawing_from_json(ctx.read_json(*path));
    if (!svg->empty()) ctx.write_file(*svg, drawing_svg(d));
    Bipartition parts;
    if (us->empty() != vs->empty()) throw InputError("give both --u and --v, or neither");
    if (us->empty()) {
      parts = bipartition_of(d.graph());
    } else {
      parts.U = vertices_named(d.graph(), *us);
      parts.V = vertices_named(d.graph(), *vs);
    }
    const auto table = type_table_from_drawing(d, parts.U, parts.V);
    ctx.log() << "typetable: |U| = " << parts.U.size() << ", |V| = " << parts.V.size() << '\n';
    return Json{{"table", to_json(table)}, {"types", type_histogram(table)}};
  });
}

TypeTable read_table(Context& ctx, const std::string& path) {
  Json j = ctx.read_json(path);
  // Accept a bare table or a report wrapping one.
  if (j.is_object() && j.contains("result")) j = j.at("result");
  if (j.is_object() && j.contains("table") && !j.contains("U")) j = j.at("table");
  return type_table_from_json(j);
}

void add_find_ckk(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("find-ckk", "Extract a weak C_{k,k} from a type table");
  auto path = slot<std::string>();
  auto k = slot<std::size_t>();
  auto jobs = slot<std::size_t>(1);
  auto budget = slot<std::uint64_t>(kDefaultCliqueBudget);
  sub->add_option("--table", *path, "type table JSON")->required();
  sub->add_option("--k", *k, "size of each side")->required()->check(CLI::Range(2, 64));
  sub->add_option("--jobs", *jobs, "worker threads for labeling")->capture_default_str();
  sub->add_option("--budget", *budget, "clique search node budget")->capture_default_str();
  reg.add(sub, [=](Context& ctx) {
    const auto table = read_table(ctx, *path);
    const auto r = find_weak_ckk(table, *k, *jobs, *budget);
    Json j = to_json(r, table);
    if (const auto* w = std::get_if<CkkWitness>(&r.outcome))
      j["revalidated"] = validate_ckk_witness(table, *w);
    ctx.log() << "find-ckk: " << j.value("outcome", std::string("?")) << '\n';
    return j;
  });
}

void add_transitivity(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("transitivity", "Check that each type-w relation on U is transitive");
  auto path = slot<std::string>();
  sub->add_option("--table", *path, "type table JSON")->required();
  reg.add(sub, [=](Context& ctx) {
    const auto table = read_table(ctx, *path);
    const auto v = check_type_transitivity(table);
    ctx.log() << "transitivity: " << (v ? "violated" : "ok") << '\n';
    return Json{{"transitive", !v}, {"violations", v ? 1 : 0}, {"violation", violation_json(v)}};
  });
}

void add_halfcircle(CLI::App& app, Registry& reg) {
  auto* hc = app.add_subcommand("halfcircle", "Random half-circle drawings of K_n");
  hc->require_subcommand(1);

  {
    auto* sub = hc->add_subcommand("sample", "Sample one drawing");
    auto n = slot<std::size_t>();
    auto seed = slot<std::uint64_t>(0);
    auto k = slot<std::size_t>(0);
    auto mode = slot<std::string>("separated");
    auto svg = slot<std::string>();
    sub->add_option("--n", *n, "number of vertices")->required()->check(CLI::Range(1, 4096));
    sub->add_option("--seed", *seed, "sampling seed")->capture_default_str();
    sub->add_option("--k", *k, "also count weak C_{k,k} subgraphs");
    sub->add_option("--mode", *mode, "separated | all")->check(CLI::IsMember({"separated", "all"}))->capture_default_str();
    sub->add_option("--svg", *svg, "write an SVG rendering");
    reg.add(sub, [=](Context& ctx) {
      const auto d = sample_halfcircle_drawing(*n, *seed);
      if (!svg->empty()) ctx.write_file(*svg, halfcircle_svg(d));
      Json r{{"drawing", to_json(d)}, {"crossings", halfcircle_crossings(d).crossing_count()}};
      if (*k > 0) {
        if (2 * *k > *n) throw InputError("need 2k <= n");
        r["ckk_count"] = count_weak_ckk(d, *k, parse_mode(*mode)).count;
      }
      return r;
    });
  }
  {
    auto* sub = hc->add_subcommand("exact", "Exact probability that a separated pair spans a weak C_{k,k}");
    auto k = slot<std::size_t>();
    auto split = slot<std::size_t>(0);
    sub->add_option("--k", *k, "2, 3 or 4")->required()->check(CLI::Range(2, 4));
    sub->add_option("--split", *split, "split index j (default: every j from 1 to k)");
    reg.add(sub, [=](Context& ctx) {
      Json splits = Json::array();
      bool all_match = true, all_structured = true;
      const std::size_t lo = *split ? *split : 1, hi = *split ? *split : *k;
      for (std::size_t j = lo; j <= hi; ++j) {
        const auto p = exact_pair_probability(*k, j);
        all_match = all_match && p.matches_formula;
        all_structured = all_structured && p.witness_structure;
        splits.push_back(to_json(p));
        ctx.log() << "k=" << *k << " split " << j << ": " << p.favorable << "/" << p.total << '\n';
      }
      const Rational formula(BigInt(1), BigInt(1) << (*k * *k - 3));
      return Json{{"k", *k},
                  {"formula", rational_value(formula)},
                  {"splits", splits},
                  {"all_match_formula", all_match},
                  {"all_witness_structure", all_structured},
                  {"formula_asserted", *k >= 3}};
    });
  }
  {
    auto* sub = hc->add_subcommand("mc", "Monte Carlo estimate of the expected weak C_{k,k} count");
    auto n = slot<std::size_t>();
    auto k = slot<std::size_t>();
    auto trials = slot<std::uint64_t>(10000);
    auto seed = slot<std::uint64_t>(1);
    auto jobs = slot<std::size_t>(1);
    auto mode = slot<std::string>("separated");
    sub->add_option("--n", *n, "number of vertices")->required();
    sub->add_option("--k", *k, "side size")->required();
    sub->add_option("--trials", *trials, "number of samples")->capture_default_str();
    sub->add_option("--seed", *seed, "base seed")->capture_default_str();
    sub->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    sub->add_option("--mode", *mode, "separated | all")->check(CLI::IsMember({"separated", "all"}))->capture_default_str();
    reg.add(sub, [=](Context& ctx) {
      if (2 * *k > *n) throw InputError("need 2k <= n");
      const auto r = montecarlo_expectation(*n, *k, *trials, *seed, *jobs, parse_mode(*mode));
      const Rational formula = expected_count_formula(*n, *k);
      auto within = [&](double ref) { return std::abs(r.mean - ref) <= 3 * r.standard_error; };
      Json j{{"trials", r.trials},
             {"sum", r.sum},
             {"sum_squares", r.sum_squares},
             {"mean", r.mean},
             {"standard_error", r.standard_error},
             {"formula", rational_value(formula)},
             {"within_3se_formula", within(to_double(formula))}};
      if (*n <= 7) {
        const Rational exact = exhaustive_expectation(*n, *k);
        j["exhaustive"] = rational_value(exact);
        j["within_3se_exhaustive"] = within(to_double(exact));
      }
      ctx.log() << "mc n=" << *n << " k=" << *k << ": mean " << r.mean << " +- " << r.standard_error
                << " (formula " << to_double(formula) << ")\n";
      return j;
    });
  }
  {
    auto* sub = hc->add_subcommand("export-typetable", "Type table of a sampled drawing split into U and V");
    auto n = slot<std::size_t>();
    auto seed = slot<std::uint64_t>(0);
    auto split = slot<std::size_t>(0);
    auto k = slot<std::size_t>(0);
    sub->add_option("--n", *n, "number of vertices")->required()->check(CLI::Range(2, 4096));
    sub->add_option("--seed", *seed, "sampling seed")->capture_default_str();
    sub->add_option("--split", *split, "U = the first split positions (default n/2)");
    sub->add_option("--k", *k, "also run find-ckk with this k");
    reg.add(sub, [=](Context& ctx) {
      const auto d = sample_halfcircle_drawing(*n, *seed);
      const std::size_t cut = *split ? *split : *n / 2;
      if (cut == 0 || cut >= *n) throw InputError("split must leave both parts nonempty");
      std::vector<std::size_t> U(cut), V(*n - cut);
      std::iota(U.begin(), U.end(), std::size_t{0});
      std::iota(V.begin(), V.end(), cut);
      const auto table = halfcircle_type_table(d, U, V);
      const auto v = check_type_transitivity(table);
      Json r{{"drawing", to_json(d)},
             {"table", to_json(table)},
             {"types", type_histogram(table)},
             {"transitive", !v},
             {"violation", violation_json(v)}};
      if (*k >= 2) r["find_ckk"] = to_json(find_weak_ckk(table, *k), table);
      ctx.log() << "export-typetable: transitive " << (v ? "false" : "true") << '\n';
      return r;
    });
  }
}

void add_matrix(CLI::App& app, Registry& reg) {
  auto* mx = app.add_subcommand("matrix", "2 x m matrices and the forbidden patterns F1, F2");
  mx->require_subcommand(1);
  {
    auto* sub = mx->add_subcommand("check", "Look for F1/F2 and evaluate the column bound");
    auto path = slot<std::string>();
    sub->add_option("--file", *path, "matrix JSON")->required();
    reg.add(sub, [=](Context& ctx) {
      const auto m = matrix_from_json(ctx.read_json(*path));
      const auto w = contains_forbidden_submatrix(m);
      const auto rep = pptt_bound_check(m);
      ctx.log() << "matrix: " << (w ? std::string(to_string(w->pattern)) : "free") << ", "
                << rep.columns << " distinct columns, bound " << rep.bound << '\n';
      return Json{{"forbidden", w ? to_json(*w) : Json(nullptr)}, {"pptt", to_json(rep)}};
    });
  }
  {
    auto* sub = mx->add_subcommand("stress", "Greedy F1/F2-free matrices against the column bound");
    auto trials = slot<std::uint64_t>(10000);
    auto seed = slot<std::uint64_t>(1);
    auto alphabet = slot<std::size_t>(5);
    auto jobs = slot<std::size_t>(1);
    sub->add_option("--trials", *trials, "number of matrices")->capture_default_str();
    sub->add_option("--seed", *seed, "base seed")->capture_default_str();
    sub->add_option("--max-alphabet", *alphabet, "largest alphabet per row")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    sub->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    reg.add(sub, [=](Context& ctx) {
      struct Tally {
        std::uint64_t violations = 0, not_free = 0, max_columns = 0;
        double max_ratio = 0;
      };
      const std::size_t chunks = std::max<std::size_t>(1, *jobs);
      std::vector<Tally> tallies(chunks);
      const std::uint64_t base = *seed;
      const std::size_t a = *alphabet;
      parallel_chunks(static_cast<std::size_t>(*trials), chunks,
                      [&](std::size_t begin, std::size_t end, std::size_t chunk) {
                        Tally& t = tallies[chunk];
                        for (std::size_t i = begin; i < end; ++i) {
                          const std::uint64_t s = SplitMix64::stream(base, i);
                          const std::size_t ta = 1 + s % a, tb = 1 + (s >> 16) % a;
                          const auto m = greedy_forbidden_free_matrix(ta, tb, s);
                          const auto rep = pptt_bound_check(m);
                          t.violations += rep.lemma_violation;
                          t.not_free += !rep.hypothesis_holds;
                          t.max_columns = std::max<std::uint64_t>(t.max_columns, rep.columns);
                          if (rep.bound > 0)
                            t.max_ratio = std::max(t.max_ratio, static_cast<double>(rep.columns) / rep.bound);
                        }
                      });
      Tally total;
      for (const auto& t : tallies) {
        total.violations += t.violations;
        total.not_free += t.not_free;
        total.max_columns = std::max(total.max_columns, t.max_columns);
        total.max_ratio = std::max(total.max_ratio, t.max_ratio);
      }
      ctx.log() << "matrix stress: " << total.violations << " bound violations in " << *trials
                << " matrices\n";
      return Json{{"trials", *trials},
                  {"violations", total.violations},
                  {"generator_failures", total.not_free},
                  {"max_columns", total.max_columns},
                  {"max_columns_over_bound", total.max_ratio}};
    });
  }
}

}  // namespace

void register_commands(CLI::App& app, Registry& registry) {
  add_planar(app, registry);
  add_realize(app, registry);
  add_c6_audit(app, registry);
  add_verify(app, registry);
  add_classify(app, registry);
  add_ngon(app, registry);
  add_twolines(app, registry);
  add_typetable(app, registry);
  add_find_ckk(app, registry);
  add_transitivity(app, registry);
  add_halfcircle(app, registry);
  add_matrix(app, registry);
}

}  // namespace sdraw::cli

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "sdraw/classify.hpp"
#include "sdraw/constructions.hpp"
#include "sdraw/errors.hpp"
#include "sdraw/geometry.hpp"
#include "sdraw/halfcircle.hpp"
#include "sdraw/json_io.hpp"
#include "sdraw/matrix.hpp"
#include "sdraw/planarity.hpp"
#include "sdraw/ramsey.hpp"
#include "sdraw/realizability.hpp"

using namespace sdraw;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed check; returns the condition.
  bool expect(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
    return cond;
  }
};

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs the CLI in-process; returns the parsed report (null on failure).
Json cli(std::vector<std::string> args, int* exit_code = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (exit_code) *exit_code = code;
  if (code != cli::kExitOk) return nullptr;
  return Json::parse(out.str());
}

std::string temp_file(const std::string& name, const Json& content) {
  const auto path = std::filesystem::temp_directory_path() / ("sdraw_acceptance_" + name + ".json");
  std::ofstream(path) << content.dump();
  return path.string();
}

// Crossing lists of a straight-line drawing: each edge runs u -> v and its
// partners are sorted by L1 distance from u, which is monotone along a segment.
CrossingLists straight_lists(const GeometricDrawing& d) {
  const Graph& g = d.graph();
  CrossingLists spec = CrossingLists::uncrossed(g);
  std::vector<std::vector<std::pair<Rational, EdgeId>>> along(g.edge_count());
  for (const auto& c : d.crossings()) {
    for (auto [e, f] : {std::pair{c.e, c.f}, std::pair{c.f, c.e}}) {
      const Point& p = d.point(g.edge(e).u);
      along[e].emplace_back(abs(c.at.x - p.x) + abs(c.at.y - p.y), f);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::ranges::sort(along[e]);
    for (const auto& [key, f] : along[e]) spec.lists[e].push_back(f);
  }
  return spec;
}

CrossingPattern pattern_of(const CrossingLists& spec) {
  return CrossingPattern::from_edge_ids(spec.graph, spec.crossing_pairs());
}

// Θ3 by brute force: some x, y with three vertex-disjoint middle edges a-b
// where x~a, a~b, b~y.
bool brute_theta3(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto adj = [&](VertexId a, VertexId b) { return g.adjacent(a, b); };
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y) {
      std::vector<std::pair<VertexId, VertexId>> mids;
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
          if (a != b && a != x && a != y && b != x && b != y && adj(x, a) && adj(a, b) && adj(b, y))
            mids.emplace_back(a, b);
      for (std::size_t i = 0; i < mids.size(); ++i)
        for (std::size_t j = i + 1; j < mids.size(); ++j)
          for (std::size_t l = j + 1; l < mids.size(); ++l) {
            const std::set<VertexId> used{mids[i].first, mids[i].second, mids[j].first,
                                          mids[j].second, mids[l].first, mids[l].second};
            if (used.size() == 6) return true;
          }
    }
  return false;
}

Graph caterpillar_forest() {
  Graph g;
  // Spine 0-1-2-3 with legs, and a second spine 4-5 with legs.
  for (int i = 0; i < 14; ++i) g.add_vertex("v" + std::to_string(i));
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 6}, {1, 7}, {1, 8}, {2, 9}, {3, 10},
                      {4, 5}, {4, 11}, {5, 12}, {5, 13}})
    g.add_edge(a, b);
  return g;
}

Graph two_triangles_plus_edge() {
  Graph g(6);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}})
    g.add_edge(a, b);
  return g;
}

// ---------------------------------------------------------------------------

void c6_audit(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Json rep = cli({"c6-audit", "--jobs", std::to_string(jobs())});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.expect(!rep.is_null(), "c6-audit command failed")) return;
  const Json& r = rep["result"];
  // 64 crossing sets times 1 + 9 + 9 + 81 orderings of the free lists.
  o.expect(r["tested"] == 6400, "tested " + r["tested"].dump() + " != 6400");
  o.expect(r["realizable"] == 0, "realizable " + r["realizable"].dump());
  o.expect(r["symmetric"] == true, "excluded-pair runs disagree");
  o.expect(r["control"]["realizable"].get<int>() >= 1, "control run found nothing realizable");
  o.expect(secs <= 300, "runtime " + std::to_string(secs) + " s");
  o.detail << "tested " << r["tested"] << ", realizable " << r["realizable"] << ", control "
           << r["control"]["realizable"] << " realizable, " << secs << " s";
}

void c4_facts(Outcome& o) {
  const std::pair<bool, bool> cases[] = {{true, true}, {true, false}, {false, true}};
  for (auto [a, b] : cases) {
    const std::string path = temp_file("c4_" + std::to_string(a) + std::to_string(b),
                                       to_json(gen::c4_spec(a, b)));
    const Json rep = cli({"realize", "--file", path});
    std::filesystem::remove(path);
    if (!o.expect(!rep.is_null(), "realize failed")) return;
    const bool want = !(a && b);
    o.expect(rep["result"]["realizable"] == want,
             "C4 crossings (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (o.pass) o.detail << "both crossings: false; each single crossing: true";
}

// The 2 * 4 masks: one global side, the two given edges free.
std::set<std::uint64_t> global_side_masks(std::size_t bits, std::size_t p, std::size_t q) {
  const std::uint64_t full = (std::uint64_t{1} << bits) - 1;
  std::set<std::uint64_t> out;
  for (std::uint64_t base : {std::uint64_t{0}, full})
    for (int free = 0; free < 4; ++free) {
      std::uint64_t m = base & ~((std::uint64_t{1} << p) | (std::uint64_t{1} << q));
      if (free & 1) m |= std::uint64_t{1} << p;
      if (free & 2) m |= std::uint64_t{1} << q;
      out.insert(m);
    }
  return out;
}

void exact_probability(Outcome& o) {
  for (std::size_t k : {3, 4}) {
    const Json rep = cli({"halfcircle", "exact", "--k", std::to_string(k)});
    if (!o.expect(!rep.is_null(), "halfcircle exact failed")) return;
    const Rational want(BigInt(1), BigInt(1) << (k * k - 3));
    for (const auto& s : rep["result"]["splits"]) {
      const Rational got(BigInt(s["favorable"].get<std::uint64_t>()),
                         BigInt(s["total"].get<std::uint64_t>()));
      o.expect(got == want, "k=" + std::to_string(k) + " split " + s["split"].dump() + ": " +
                                to_string(got));
    }
    o.expect(rep["result"]["splits"].size() == k, "expected k split indices");
    for (std::size_t j = 1; j <= k; ++j) {
      const auto p = exact_pair_probability(k, j);
      const std::set<std::uint64_t> masks(p.favorable_masks.begin(), p.favorable_masks.end());
      bool structured = false;
      for (std::size_t a = 0; a < k * k && !structured; ++a)
        for (std::size_t b = a + 1; b < k * k && !structured; ++b)
          structured = masks == global_side_masks(k * k, a, b);
      o.expect(p.favorable == 8 && structured,
               "witness structure at k=" + std::to_string(k) + " split " + std::to_string(j));
    }
  }
  if (o.pass) o.detail << "k=3: 8/512 on every split; k=4: 8/65536 = 2^-13; 8 witnesses each";
}

void expectation(Outcome& o) {
  const Json rep = cli({"halfcircle", "mc", "--n", "8", "--k", "3", "--trials", "100000", "--seed",
                        "2024", "--jobs", std::to_string(jobs())});
  if (!o.expect(!rep.is_null(), "halfcircle mc failed")) return;
  const double mean = rep["result"]["mean"], se = rep["result"]["standard_error"];
  o.expect(std::abs(mean - 21.0 / 16.0) <= 3 * se,
           "n=8 mean " + std::to_string(mean) + " vs 21/16, se " + std::to_string(se));
  o.expect(expected_count_formula(8, 3) == Rational(21, 16), "formula at n=8, k=3 is not 21/16");

  // n = 4, k = 2: ground truth over all 2^6 drawings by brute force.
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask)
    total += oracle::brute_count(gen::from_mask(4, mask), 2);
  const double truth = static_cast<double>(total) / 64.0;
  const auto small = montecarlo_expectation(4, 2, 100000, 7, jobs(), ScanMode::kAllPairs);
  o.expect(std::abs(small.mean - truth) <= 3 * small.standard_error,
           "n=4 mean " + std::to_string(small.mean) + " vs " + std::to_string(truth));
  o.expect(exhaustive_expectation(4, 2) == Rational(BigInt(total), BigInt(64)),
           "exhaustive expectation disagrees with brute force");
  o.detail << "n=8: " << mean << " +- " << se << " (21/16 = 1.3125); n=4: " << small.mean
           << " +- " << small.standard_error << " (truth " << truth << ")";
}

void separated_pairs(Outcome& o) {
  std::size_t drawings = 0;
  for (std::size_t k : {2, 3})
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto d = sample_halfcircle_drawing(8, seed * 13 + k);
      const auto sep = count_weak_ckk(d, k, ScanMode::kSeparatedOnly).count;
      const auto all = count_weak_ckk(d, k, ScanMode::kAllPairs).count;
      o.expect(sep == all, "k=" + std::to_string(k) + " seed " + std::to_string(seed));
      ++drawings;
    }
  o.detail << drawings << " drawings, separated-only == all-pairs";
}

void transitivity(Outcome& o) {
  std::size_t two_line = 0, half = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t s = 2 + seed % 7, t = 2 + (seed / 7) % 7;
    const auto d = random_bipartite_drawing(s, t, seed, 0.25);
    const auto parts = two_line_parts(d, s, t);
    const auto table = type_table_from_drawing(d, parts.U, parts.V);
    const std::string path = temp_file("table", to_json(table));
    const Json rep = cli({"transitivity", "--table", path});
    o.expect(!rep.is_null() && rep["result"]["violations"] == 0,
             "two-line seed " + std::to_string(seed));
    ++two_line;
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 13;
    const auto d = sample_halfcircle_drawing(n, seed + 500);
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    SplitMix64 rng(seed);
    std::shuffle(pos.begin(), pos.end(), rng);
    const std::size_t split = std::min<std::size_t>(8, n / 2);
    std::vector<std::size_t> U(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<std::size_t> V(pos.begin() + static_cast<std::ptrdiff_t>(split), pos.end());
    if (V.size() > 8) V.resize(8);
    std::ranges::sort(U);
    std::ranges::sort(V);
    const std::string path = temp_file("table", to_json(halfcircle_type_table(d, U, V)));
    const Json rep = cli({"transitivity", "--table", path});
    o.expect(!rep.is_null() && rep["result"]["violations"] == 0,
             "half-circle seed " + std::to_string(seed));
    ++half;
  }
  std::filesystem::remove(std::filesystem::temp_directory_path() / "sdraw_acceptance_table.json");
  o.detail << two_line << " two-line and " << half << " half-circle tables, 0 violations";
}

void pipeline(Outcome& o) {
  std::size_t canonical = 0, random_ok = 0, colorings = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto d = two_line_drawing(n, n);
    const auto parts = two_line_parts(d, n, n);
    const auto table = type_table_from_drawing(d, parts.U, parts.V);
    for (std::size_t k = 2; k <= n; ++k) {
      const auto r = find_weak_ckk(table, k);
      const auto* w = std::get_if<CkkWitness>(&r.outcome);
      o.expect(w && oracle::valid_ckk_witness(table, *w) && validate_ckk_witness(table, *w),
               "canonical n=" + std::to_string(n) + " k=" + std::to_string(k));
      ++canonical;
    }
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t u = 3 + seed % 6, v = 3 + (seed / 6) % 6;
    const auto table = gen::random_type_table(u, v, seed, 1 + static_cast<int>(seed % 5));
    const auto r = find_weak_ckk(table, 2 + seed % 2);
    if (const auto* w = std::get_if<CkkWitness>(&r.outcome)) {
      o.expect(oracle::valid_ckk_witness(table, *w) && validate_ckk_witness(table, *w),
               "random table seed " + std::to_string(seed));
      ++random_ok;
    }
  }
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 1}, {2, 1}, {1, 2}};
  for (auto [m, t] : cases) {
    const std::size_t n = t * m * m * m * m + 1;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto g = gen::random_coloring(n, seed * 977 + m * 11 + t);
      const auto r = monotone_path_or_clique(g, m, t);
      bool ok = false;
      if (const auto* p = std::get_if<MonotonePath>(&r)) {
        ok = p->vertices.size() == m + 1 && p->color >= 1 && p->color <= 4;
        for (std::size_t i = 0; ok && i + 1 < p->vertices.size(); ++i)
          ok = p->vertices[i] < p->vertices[i + 1] &&
               g.color(p->vertices[i], p->vertices[i + 1]) == p->color;
      } else if (const auto* c = std::get_if<ColorFiveClique>(&r)) {
        ok = c->vertices.size() == t + 1;
        for (std::size_t a = 0; ok && a < c->vertices.size(); ++a)
          for (std::size_t b = a + 1; ok && b < c->vertices.size(); ++b)
            ok = g.color(c->vertices[a], c->vertices[b]) == 5;
      }
      o.expect(ok, "coloring (m,t)=(" + std::to_string(m) + "," + std::to_string(t) + ") seed " +
                       std::to_string(seed));
      ++colorings;
    }
  }
  o.detail << canonical << " canonical extractions, " << random_ok
           << " random witnesses re-validated, " << colorings << " colorings";
}

void geometric_characterization(Outcome& o) {
  const std::vector<std::pair<std::string, std::pair<Graph, bool>>> verdicts{
      {"C4", {cycle_graph(4), false}},
      {"C6", {cycle_graph(6), false}},
      {"C8", {cycle_graph(8), true}},
      {"C5", {cycle_graph(5), true}},
      {"caterpillar forest", {caterpillar_forest(), true}},
      {"theta3", {gen::theta3(), false}},
      {"two triangles plus edge", {two_triangles_plus_edge(), false}},
  };
  for (const auto& [name, gv] : verdicts) {
    const std::string path = temp_file("graph", to_json(gv.first));
    const Json rep = cli({"classify", "--graph", path});
    o.expect(!rep.is_null() &&
                 rep["result"]["geometric_local_thrackleable"]["accepted"] == gv.second,
             name);
  }
  std::filesystem::remove(std::filesystem::temp_directory_path() / "sdraw_acceptance_graph.json");
  std::size_t drawings = 0;
  for (std::size_t n : {8, 12, 14, 16, 18})
    for (std::size_t spikes : {0, 1, 2}) {
      std::vector<std::size_t> counts(n, spikes);
      if (spikes == 2) counts.assign(n, 0), counts[0] = 3, counts[n / 2] = 1;
      const auto d = ngon_spiked_cycle(n, counts);
      const auto p = simple_crossing_pattern(d);
      o.expect(!oracle::any_plane_path(p, 3) && is_local_thrackle(p).local_thrackle,
               "ngon n=" + std::to_string(n) + " is not a local thrackle");
      o.expect(!is_thrackle(p).thrackle, "ngon n=" + std::to_string(n) + " is a thrackle");
      ++drawings;
    }
  o.detail << verdicts.size() << " classifier verdicts, " << drawings
           << " ngon drawings local thrackle and not thrackle";
}

void planarity(Outcome& o) {
  std::size_t agree = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const double q = 0.2 + 0.6 * static_cast<double>(seed % 7) / 6.0;
    const Graph g = oracle::random_graph(n, q, seed + 31);
    const bool lr = is_planar(g);
    const auto emb = exhaustive_planar_embedding(g);
    o.expect(lr == emb.has_value() && (!emb || is_planar_rotation_system(g, *emb)),
             "graph seed " + std::to_string(seed));
    agree += lr == emb.has_value();
  }
  o.expect(!is_planar(complete_graph(5)) && !is_planar(complete_bipartite(3, 3)), "K5/K33");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph base = seed % 2 ? complete_graph(5) : complete_bipartite(3, 3);
    o.expect(!is_planar(gen::random_subdivision(base, seed)), "subdivision " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph tri = gen::stacked_triangulation(4 + seed % 20, seed);
    o.expect(is_planar(gen::edge_subset(tri, 0.8, seed + 1)), "triangulation " + std::to_string(seed));
  }
  o.detail << agree << "/1000 random graphs agree; 50 subdivisions rejected; 50 planar accepted";
}

void matrices(Outcome& o) {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto m = random_two_row_matrix(1 + seed % 30, 1 + seed % 6, 1 + (seed / 6) % 6, seed);
    const bool truth = oracle::matrix_contains_forbidden(m);
    const auto fast = contains_forbidden_submatrix(m);
    o.expect(fast.has_value() == truth && (!fast || is_forbidden_witness(m, *fast)) &&
                 contains_forbidden_submatrix_bruteforce(m).has_value() == truth,
             "matrix seed " + std::to_string(seed));
    hits += truth;
  }
  const Json rep = cli({"matrix", "stress", "--trials", "10000", "--seed", "17", "--jobs",
                        std::to_string(jobs())});
  if (!o.expect(!rep.is_null(), "matrix stress failed")) return;
  o.expect(rep["result"]["violations"] == 0, "bound violations " + rep["result"]["violations"].dump());
  o.expect(rep["result"]["generator_failures"] == 0, "greedy generator produced F1/F2");
  o.detail << "500 matrices agree (" << hits << " contain F1/F2); 10000 greedy matrices, "
           << rep["result"]["violations"] << " violations";
}

void consistency(Outcome& o) {
  std::size_t accepted = 0, specs = 0;
  // Classifier-accepted graphs among random sparse graphs and spiked cycles.
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 1500; ++seed)
    graphs.push_back(oracle::random_graph(4 + seed % 9, 0.15 + 0.05 * (seed % 4), seed + 77));
  for (std::size_t n = 3; n <= 12; ++n)
    for (std::size_t s = 0; s <= 2; ++s) graphs.push_back(gen::with_spikes(cycle_graph(n), s));
  graphs.push_back(gen::theta3());
  graphs.push_back(caterpillar_forest());
  for (const Graph& g : graphs) {
    if (!classify_geometric_local_thrackleable(g).accepted) continue;
    ++accepted;
    o.expect(!brute_theta3(g) && !contains_theta3(g), "accepted graph contains theta3");
  }

  // Realizable local-thrackle specifications from every source in the corpus.
  std::vector<CrossingLists> corpus;
  const auto audit = c6_local_thrackle_audit(jobs(), 64);
  for (const auto& w : audit.witnesses) corpus.push_back(w);
  for (const auto& w : audit.control_witnesses) corpus.push_back(w);
  for (std::size_t n : {8, 12, 14})
    for (std::size_t s : {0, 1}) {
      std::vector<std::size_t> counts(n, s);
      corpus.push_back(straight_lists(ngon_spiked_cycle(n, counts)));
    }
  for (std::uint64_t seed = 0; seed < 3000; ++seed)
    corpus.push_back(gen::random_spec(4 + seed % 5, 0.5, 0.5, seed));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t s = 2 + seed % 3, t = 2 + (seed / 3) % 3;
    corpus.push_back(straight_lists(random_bipartite_drawing(s, t, seed, 0.5)));
  }
  for (const auto& spec : corpus) {
    if (!is_local_thrackle(pattern_of(spec)).local_thrackle || !is_realizable(spec)) continue;
    ++specs;
    o.expect(!brute_theta3(spec.graph) && !contains_theta3(spec.graph),
             "realizable local thrackle on a theta3 graph");
  }
  o.expect(specs > 0, "no realizable local-thrackle specification in the corpus");
  o.detail << accepted << " accepted graphs and " << specs
           << " realizable local-thrackle specs, all theta3-free";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"c6-audit", c6_audit},
      {"c4-facts", c4_facts},
      {"exact-probability", exact_probability},
      {"expectation", expectation},
      {"separated-pairs", separated_pairs},
      {"transitivity", transitivity},
      {"pipeline", pipeline},
      {"geometric-characterization", geometric_characterization},
      {"planarity-oracles", planarity},
      {"forbidden-submatrix", matrices},
      {"cross-module-consistency", consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

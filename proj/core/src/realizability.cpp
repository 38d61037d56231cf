#include "sdraw/realizability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "sdraw/errors.hpp"
#include "sdraw/parallel.hpp"
#include "sdraw/pattern.hpp"
#include "sdraw/planarity.hpp"

namespace sdraw {

CrossingLists CrossingLists::uncrossed(Graph g) {
  CrossingLists spec;
  spec.tails.reserve(g.edge_count());
  for (const Edge& e : g.edges()) spec.tails.push_back(e.u);
  spec.lists.assign(g.edge_count(), {});
  spec.graph = std::move(g);
  return spec;
}

std::size_t CrossingLists::crossing_count() const {
  std::size_t total = 0;
  for (const auto& l : lists) total += l.size();
  return total / 2;
}

std::vector<std::pair<EdgeId, EdgeId>> CrossingLists::crossing_pairs() const {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (EdgeId e = 0; e < lists.size(); ++e)
    for (EdgeId f : lists[e])
      if (e < f) out.emplace_back(e, f);
  std::ranges::sort(out);
  return out;
}

void validate_crossing_lists(const CrossingLists& spec) {
  const Graph& g = spec.graph;
  const std::size_t m = g.edge_count();
  if (spec.tails.size() != m)
    throw InputError("crossing lists: expected a direction for each of the " +
                     std::to_string(m) + " edges");
  if (spec.lists.size() != m)
    throw InputError("crossing lists: expected a list for each of the " + std::to_string(m) +
                     " edges");
  for (EdgeId e = 0; e < m; ++e) {
    if (!g.edge(e).touches(spec.tails[e]))
      throw InputError("crossing lists: direction of " + g.edge_label(e) +
                       " does not start at an endpoint");
    std::set<EdgeId> seen;
    for (EdgeId f : spec.lists[e]) {
      if (f >= m) throw InputError("crossing lists: unknown edge in list of " + g.edge_label(e));
      if (f == e) throw InputError("crossing lists: " + g.edge_label(e) + " crosses itself");
      if (g.edge(e).shares_vertex(g.edge(f)))
        throw InputError("crossing lists: adjacent edges " + g.edge_label(e) + " and " +
                         g.edge_label(f) + " cross");
      if (!seen.insert(f).second)
        throw InputError("crossing lists: " + g.edge_label(f) + " repeated in list of " +
                         g.edge_label(e));
      if (std::ranges::find(spec.lists[f], e) == spec.lists[f].end())
        throw InputError("crossing lists: " + g.edge_label(f) + " is in the list of " +
                         g.edge_label(e) + " but not conversely");
    }
  }
}

CrossingLists reversed(const CrossingLists& spec) {
  CrossingLists out = spec;
  for (EdgeId e = 0; e < out.tails.size(); ++e) {
    out.tails[e] = spec.head(e);
    std::ranges::reverse(out.lists[e]);
  }
  return out;
}

std::vector<Edge> AuxiliaryGraph::simple_edges() const {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges)
    if (a != b) out.emplace_back(a, b);
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AuxiliaryGraph build_auxiliary_graph_unchecked(const Graph& g, std::span<const VertexId> tails,
                                               const std::vector<std::vector<EdgeId>>& lists) {
  AuxiliaryGraph h;
  const std::size_t n = g.vertex_count();
  h.original_vertices = n;
  h.kinds.assign(n, AuxVertexKind::kOriginal);
  h.crossing_of.assign(n, {0, 0});

  std::map<std::pair<EdgeId, EdgeId>, VertexId> crossing_vertex;
  auto vertex_for = [&](EdgeId e, EdgeId f) {
    const std::pair<EdgeId, EdgeId> key{std::min(e, f), std::max(e, f)};
    auto [it, fresh] = crossing_vertex.try_emplace(key, static_cast<VertexId>(h.kinds.size()));
    if (fresh) {
      h.kinds.push_back(AuxVertexKind::kCrossing);
      h.crossing_of.push_back(key);
      ++h.crossings;
    }
    return it->second;
  };

  // Neighbors of each crossing vertex along its lower and higher edge.
  std::map<VertexId, std::pair<std::vector<VertexId>, std::vector<VertexId>>> sides;
  auto note = [&](VertexId x, EdgeId along, VertexId neighbor) {
    if (h.kinds[x] != AuxVertexKind::kCrossing) return;
    auto& s = sides[x];
    (h.crossing_of[x].first == along ? s.first : s.second).push_back(neighbor);
  };

  // Planarization, with the subdivision of crossing-to-crossing edges.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<VertexId> path{tails[e]};
    for (EdgeId f : lists[e]) path.push_back(vertex_for(e, f));
    path.push_back(g.edge(e).other(tails[e]));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const VertexId x = path[i];
      const VertexId y = path[i + 1];
      if (h.kinds[x] == AuxVertexKind::kCrossing && h.kinds[y] == AuxVertexKind::kCrossing) {
        const auto s = static_cast<VertexId>(h.kinds.size());
        h.kinds.push_back(AuxVertexKind::kSubdivision);
        h.crossing_of.emplace_back(0, 0);
        ++h.subdivisions;
        h.edges.emplace_back(x, s);
        h.edges.emplace_back(s, y);
        note(x, e, s);
        note(y, e, s);
      } else {
        h.edges.emplace_back(x, y);
        note(x, e, y);
        note(y, e, x);
      }
    }
  }

  // Bracing.
  for (const auto& [v, s] : sides) {
    if (s.first.size() != 2 || s.second.size() != 2)
      throw InconsistencyError("auxiliary graph: crossing vertex without degree 4");
    for (VertexId a : s.first)
      for (VertexId c : s.second) {
        h.edges.emplace_back(a, c);
        ++h.bracing_edges;
      }
  }
  return h;
}

AuxiliaryGraph build_auxiliary_graph(const CrossingLists& spec) {
  validate_crossing_lists(spec);
  return build_auxiliary_graph_unchecked(spec.graph, spec.tails, spec.lists);
}

std::pair<std::size_t, std::size_t> auxiliary_counts_formula(const CrossingLists& spec) {
  std::size_t list_total = 0, subdivisions = 0, path_edges = 0;
  for (const auto& l : spec.lists) {
    list_total += l.size();
    subdivisions += l.empty() ? 0 : l.size() - 1;
    path_edges += l.size() + 1;
  }
  const std::size_t crossings = list_total / 2;
  return {spec.graph.vertex_count() + crossings + subdivisions,
          path_edges + subdivisions + 4 * crossings};
}

namespace {

bool realizable_unchecked(const Graph& g, std::span<const VertexId> tails,
                          const std::vector<std::vector<EdgeId>>& lists) {
  const AuxiliaryGraph h = build_auxiliary_graph_unchecked(g, tails, lists);
  return is_planar(h.vertex_count(), h.simple_edges());
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

bool is_realizable(const CrossingLists& spec) {
  validate_crossing_lists(spec);
  return realizable_unchecked(spec.graph, spec.tails, spec.lists);
}

CrossingListEnumerator::CrossingListEnumerator(
    Graph g, std::vector<VertexId> tails,
    std::span<const std::pair<EdgeId, EdgeId>> crossing_set)
    : graph_(std::move(g)), tails_(std::move(tails)), partners_(graph_.edge_count()) {
  const std::size_t m = graph_.edge_count();
  if (tails_.size() != m) throw InputError("enumerator: one direction per edge required");
  for (const auto& [e, f] : crossing_set) {
    if (e >= m || f >= m) throw InputError("enumerator: unknown edge in crossing set");
    partners_[e].push_back(f);
    partners_[f].push_back(e);
  }
  for (auto& p : partners_) std::ranges::sort(p);
  CrossingLists probe{graph_, tails_, partners_};
  validate_crossing_lists(probe);
  for (const auto& p : partners_) {
    if (p.size() > 20) throw InputError("enumerator: too many crossings on one edge");
    radix_.push_back(factorial(p.size()));
    if (count_ > UINT64_MAX / radix_.back())
      throw InputError("enumerator: number of assignments overflows 64 bits");
    count_ *= radix_.back();
  }
}

void CrossingListEnumerator::fill(std::uint64_t index,
                                  std::vector<std::vector<EdgeId>>& lists) const {
  const std::size_t m = partners_.size();
  lists.resize(m);
  std::vector<EdgeId> pool;
  for (std::size_t i = m; i-- > 0;) {
    std::uint64_t digit = index % radix_[i];
    index /= radix_[i];
    pool = partners_[i];
    auto& out = lists[i];
    out.clear();
    for (std::size_t k = pool.size(); k > 0; --k) {
      const std::uint64_t f = factorial(k - 1);
      const auto q = static_cast<std::size_t>(digit / f);
      digit %= f;
      out.push_back(pool[q]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
    }
  }
}

CrossingLists CrossingListEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw InputError("enumerator: index out of range");
  CrossingLists spec{graph_, tails_, {}};
  fill(index, spec.lists);
  return spec;
}

EnumerationSummary enumerate_realizable(const CrossingListEnumerator& enumerator,
                                        std::size_t jobs, std::size_t max_witnesses) {
  const std::uint64_t total = enumerator.count();
  std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, total));
  std::vector<EnumerationSummary> parts(chunks);
  parallel_chunks(static_cast<std::size_t>(total), chunks,
                  [&](std::size_t begin, std::size_t end, std::size_t c) {
                    std::vector<std::vector<EdgeId>> lists;
                    auto& part = parts[c];
                    for (std::size_t i = begin; i < end; ++i) {
                      enumerator.fill(i, lists);
                      ++part.tested;
                      if (realizable_unchecked(enumerator.graph(), enumerator.tails(), lists)) {
                        ++part.realizable;
                        if (part.witness_indices.size() < max_witnesses)
                          part.witness_indices.push_back(i);
                      }
                    }
                  });
  EnumerationSummary out;
  for (const auto& part : parts) {
    out.tested += part.tested;
    out.realizable += part.realizable;
    for (auto i : part.witness_indices)
      if (out.witness_indices.size() < max_witnesses) out.witness_indices.push_back(i);
  }
  return out;
}

namespace {

constexpr std::size_t kC6 = 6;

std::vector<VertexId> c6_tails() {
  std::vector<VertexId> t(kC6);
  std::iota(t.begin(), t.end(), VertexId{0});
  return t;
}

C6AuditRun run_c6(const Graph& c6, const std::vector<std::pair<EdgeId, EdgeId>>& mandatory,
                  std::pair<EdgeId, EdgeId> excluded,
                  const std::vector<std::pair<EdgeId, EdgeId>>& free_pairs, std::size_t jobs,
                  std::size_t max_witnesses) {
  C6AuditRun run;
  run.excluded = excluded;
  for (unsigned mask = 0; mask < (1U << free_pairs.size()); ++mask) {
    auto set = mandatory;
    for (std::size_t b = 0; b < free_pairs.size(); ++b)
      if (mask & (1U << b)) set.push_back(free_pairs[b]);
    CrossingListEnumerator en(c6, c6_tails(), set);
    const auto summary = enumerate_realizable(en, jobs, max_witnesses);
    ++run.crossing_sets;
    run.tested += summary.tested;
    run.realizable += summary.realizable;
    for (auto i : summary.witness_indices)
      if (run.witnesses.size() < max_witnesses) run.witnesses.push_back(en.at(i));
  }
  return run;
}

}  // namespace

C6AuditReport c6_local_thrackle_audit(std::size_t jobs, std::size_t max_witnesses) {
  const Graph c6 = cycle_graph(kC6);
  C6AuditReport report;
  report.mandatory_pairs = three_path_end_pairs(c6);
  std::ranges::sort(report.mandatory_pairs);
  std::vector<std::pair<EdgeId, EdgeId>> expected;
  for (EdgeId i = 0; i < kC6; ++i) {
    const EdgeId j = (i + 2) % kC6;
    expected.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::ranges::sort(expected);
  if (report.mandatory_pairs != expected)
    throw InconsistencyError("C6 audit: unexpected mandatory crossing pairs");

  const std::vector<std::pair<EdgeId, EdgeId>> opposite{{0, 3}, {1, 4}, {2, 5}};
  for (std::size_t x = 0; x < opposite.size(); ++x) {
    std::vector<std::pair<EdgeId, EdgeId>> free_pairs;
    for (std::size_t y = 0; y < opposite.size(); ++y)
      if (y != x) free_pairs.push_back(opposite[y]);
    report.symmetry_runs.push_back(
        run_c6(c6, report.mandatory_pairs, opposite[x], free_pairs, jobs, max_witnesses));
  }
  const auto& primary = report.symmetry_runs.front();
  report.tested = primary.tested;
  report.realizable = primary.realizable;
  report.witnesses = primary.witnesses;
  report.symmetric = std::ranges::all_of(report.symmetry_runs, [&](const C6AuditRun& r) {
    return r.tested == primary.tested && r.realizable == primary.realizable;
  });

  auto thrackle_set = report.mandatory_pairs;
  thrackle_set.insert(thrackle_set.end(), opposite.begin(), opposite.end());
  CrossingListEnumerator control(c6, c6_tails(), thrackle_set);
  const auto all = enumerate_realizable(control, jobs, SIZE_MAX);
  report.control_tested = all.tested;
  report.control_realizable = all.realizable;
  std::vector<CrossingLists> realizable;
  realizable.reserve(all.witness_indices.size());
  for (auto i : all.witness_indices) realizable.push_back(control.at(i));
  report.control_dihedral_classes = c6_dihedral_classes(realizable);
  for (std::size_t i = 0; i < realizable.size() && i < max_witnesses; ++i)
    report.control_witnesses.push_back(realizable[i]);
  return report;
}

std::size_t c6_dihedral_classes(std::span<const CrossingLists> specs) {
  using Key = std::vector<std::vector<EdgeId>>;
  std::set<Key> classes;
  for (const auto& spec : specs) {
    if (spec.graph.vertex_count() != kC6 || spec.graph.edge_count() != kC6)
      throw InputError("dihedral classes: spec is not on C6");
    // Lists read along i -> i+1.
    Key base(kC6);
    for (EdgeId i = 0; i < kC6; ++i) {
      base[i] = spec.lists[i];
      if (spec.tails[i] != i) std::ranges::reverse(base[i]);
    }
    std::optional<Key> best;
    for (std::size_t r = 0; r < kC6; ++r) {
      for (int s : {1, -1}) {
        auto sigma = [&](std::size_t x) {
          const auto shift = static_cast<long>(r) + s * static_cast<long>(x);
          return static_cast<EdgeId>(((shift % 6) + 6) % 6);
        };
        // e_i = {i, i+1} maps to {sigma(i), sigma(i+1)}.
        auto image = [&](EdgeId i) { return s == 1 ? sigma(i) : sigma((i + 1) % kC6); };
        Key k(kC6);
        for (EdgeId i = 0; i < kC6; ++i) {
          auto& l = k[image(i)];
          for (EdgeId f : base[i]) l.push_back(image(f));
          if (s == -1) std::ranges::reverse(l);
        }
        if (!best || k < *best) best = std::move(k);
      }
    }
    classes.insert(*best);
  }
  return classes.size();
}

}  // namespace sdraw

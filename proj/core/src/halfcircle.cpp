#include "sdraw/halfcircle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "sdraw/errors.hpp"
#include "sdraw/parallel.hpp"
#include "sdraw/random.hpp"

namespace sdraw {

std::string to_string(Side side) { return side == Side::kUpper ? "upper" : "lower"; }

Side HalfCircleDrawing::side(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return sides[pair_index(a, b, order.size())];
}

void HalfCircleDrawing::set_side(std::size_t a, std::size_t b, Side s) {
  if (a == b || a >= size() || b >= size()) throw InputError("half-circle: bad edge");
  if (a > b) std::swap(a, b);
  sides[pair_index(a, b, order.size())] = s;
}

Graph HalfCircleDrawing::graph() const {
  Graph g(order);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

HalfCircleDrawing halfcircle_drawing(std::size_t n, Side fill) {
  HalfCircleDrawing d;
  for (std::size_t i = 0; i < n; ++i) d.order.push_back(std::to_string(i));
  d.sides.assign(n < 2 ? 0 : n * (n - 1) / 2, fill);
  return d;
}

HalfCircleDrawing sample_halfcircle_drawing(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("half-circle: n must be positive");
  HalfCircleDrawing d = halfcircle_drawing(n);
  for (std::size_t p = 0; p < d.sides.size(); ++p)
    d.sides[p] = (SplitMix64::stream(seed, p) & 1U) ? Side::kUpper : Side::kLower;
  return d;
}

bool halfcircle_edges_cross(const HalfCircleDrawing& d, std::size_t a, std::size_t b,
                            std::size_t c, std::size_t e) {
  if (a > b) std::swap(a, b);
  if (c > e) std::swap(c, e);
  if (a == c || a == e || b == c || b == e) return false;
  const bool interleave = (a < c && c < b && b < e) || (c < a && a < e && e < b);
  return interleave && d.side(a, b) == d.side(c, e);
}

CrossingPattern halfcircle_crossings(const HalfCircleDrawing& d) {
  Graph g = d.graph();
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      const Edge& x = g.edge(e);
      const Edge& y = g.edge(f);
      if (halfcircle_edges_cross(d, x.u, x.v, y.u, y.v)) pairs.emplace_back(e, f);
    }
  return CrossingPattern::from_edge_ids(std::move(g), pairs);
}

SeparatedPair separated_configuration(std::size_t k, std::size_t j) {
  if (k == 0 || j == 0 || j > k) throw InputError("separated pair: need 1 <= j <= k");
  SeparatedPair p;
  for (std::size_t x = 0; x < j; ++x) p.S.push_back(x);
  for (std::size_t x = 0; x < k; ++x) p.T.push_back(j + x);
  for (std::size_t x = j + k; x < 2 * k; ++x) p.S.push_back(x);
  return p;
}

namespace {

// Calls f(subset) for every increasing r-subset of 0..n-1.
template <typename F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    f(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t x = i; x < r; ++x) c[x] = c[x - 1] + 1;
  }
}

}  // namespace

std::vector<SeparatedPair> enumerate_separated_pairs(std::size_t n, std::size_t k) {
  if (k == 0 || 2 * k > n) throw InputError("separated pairs: need 1 <= k and 2k <= n");
  std::vector<SeparatedPair> out;
  for_each_subset(n, 2 * k, [&](const std::vector<std::size_t>& pos) {
    for (std::size_t j = 1; j <= k; ++j) {
      const SeparatedPair local = separated_configuration(k, j);
      SeparatedPair p;
      for (auto x : local.S) p.S.push_back(pos[x]);
      for (auto x : local.T) p.T.push_back(pos[x]);
      out.push_back(std::move(p));
    }
  });
  return out;
}

std::optional<CkkOccurrence> halfcircle_ckk_match(const HalfCircleDrawing& d,
                                                  const std::vector<std::size_t>& S,
                                                  const std::vector<std::size_t>& T) {
  const std::size_t k = S.size();
  if (T.size() != k || k > kMaxCkkSide) throw InputError("weak C_{k,k} check: bad part sizes");
  const auto match = match_canonical_ckk(k, [&](std::size_t a, std::size_t s, std::size_t b,
                                                std::size_t t) {
    return halfcircle_edges_cross(d, S[a], T[s], S[b], T[t]);
  });
  if (!match) return std::nullopt;
  CkkOccurrence occ{S, T, {}, {}};
  for (auto i : match->first) occ.u_order.push_back(S[i]);
  for (auto i : match->second) occ.v_order.push_back(T[i]);
  return occ;
}

namespace {

std::optional<CkkOccurrence> match_either_role(const HalfCircleDrawing& d,
                                               const std::vector<std::size_t>& S,
                                               const std::vector<std::size_t>& T) {
  if (auto m = halfcircle_ckk_match(d, S, T)) return m;
  return halfcircle_ckk_match(d, T, S);
}

}  // namespace

CkkCount count_weak_ckk(const HalfCircleDrawing& d, std::size_t k, ScanMode mode,
                        std::size_t max_witnesses) {
  if (k == 0 || 2 * k > d.size()) throw InputError("count_weak_ckk: need 1 <= k and 2k <= n");
  if (k > kMaxCkkSide)
    throw InputError("count_weak_ckk: k above the weak-isomorphism cap of " +
                     std::to_string(kMaxCkkSide));
  CkkCount out;
  auto consider = [&](const std::vector<std::size_t>& S, const std::vector<std::size_t>& T) {
    if (auto m = match_either_role(d, S, T)) {
      ++out.count;
      if (out.witnesses.size() < max_witnesses) out.witnesses.push_back(std::move(*m));
    }
  };
  std::vector<std::size_t> S, T;
  for_each_subset(d.size(), 2 * k, [&](const std::vector<std::size_t>& pos) {
    if (mode == ScanMode::kSeparatedOnly) {
      for (std::size_t j = 1; j <= k; ++j) {
        const SeparatedPair local = separated_configuration(k, j);
        S.clear();
        T.clear();
        for (auto x : local.S) S.push_back(pos[x]);
        for (auto x : local.T) T.push_back(pos[x]);
        consider(S, T);
      }
      return;
    }
    // Unordered splits: the part containing pos[0] is S.
    for_each_subset(2 * k - 1, k - 1, [&](const std::vector<std::size_t>& rest) {
      S.assign(1, pos[0]);
      for (auto x : rest) S.push_back(pos[x + 1]);
      T.clear();
      for (std::size_t x = 0; x < 2 * k; ++x)
        if (std::ranges::find(S, pos[x]) == S.end()) T.push_back(pos[x]);
      consider(S, T);
    });
  });
  return out;
}

namespace {

Rational pow2(long long e) {
  Rational r = 1;
  if (e >= 0) {
    for (long long i = 0; i < e; ++i) r *= 2;
  } else {
    for (long long i = 0; i < -e; ++i) r /= 2;
  }
  return r;
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

}  // namespace

PairProbability exact_pair_probability(std::size_t k, std::size_t split) {
  if (k < 2 || k > 4) throw InputError("exact probability: k must be 2, 3 or 4");
  const SeparatedPair cfg = separated_configuration(k, split);
  HalfCircleDrawing d = halfcircle_drawing(2 * k);
  PairProbability out;
  out.k = k;
  out.split = split;
  out.total = std::uint64_t{1} << (k * k);
  for (std::uint64_t mask = 0; mask < out.total; ++mask) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t x = 0; x < k; ++x)
        d.set_side(cfg.S[a], cfg.T[x], (mask >> (a * k + x)) & 1U ? Side::kUpper : Side::kLower);
    if (match_either_role(d, cfg.S, cfg.T)) out.favorable_masks.push_back(mask);
  }
  out.favorable = out.favorable_masks.size();
  out.probability = Rational(out.favorable) / Rational(out.total);
  out.matches_formula = out.probability == pow2(3 - static_cast<long long>(k * k));

  // u1: rightmost of S1; u0: leftmost of S2, or leftmost of S1 if S2 is
  // empty; v0, v1: leftmost and rightmost of T. Indices are local to S, T.
  const std::size_t u1 = split - 1;
  const std::size_t u0 = split < k ? split : 0;
  const std::size_t v0 = 0, v1 = k - 1;
  const std::uint64_t free_bits =
      (std::uint64_t{1} << (u1 * k + v0)) | (std::uint64_t{1} << (u0 * k + v1));
  std::set<std::uint64_t> expected;
  for (std::uint64_t base : {std::uint64_t{0}, out.total - 1})
    for (std::uint64_t sub = 0; sub < 4; ++sub) {
      std::uint64_t m = base & ~free_bits;
      if (sub & 1U) m |= std::uint64_t{1} << (u1 * k + v0);
      if (sub & 2U) m |= std::uint64_t{1} << (u0 * k + v1);
      expected.insert(m);
    }
  out.witness_structure =
      std::set<std::uint64_t>(out.favorable_masks.begin(), out.favorable_masks.end()) ==
      expected;
  return out;
}

Rational expected_count_formula(std::size_t n, std::size_t k) {
  if (k == 0 || 2 * k > n) throw InputError("expected count: need 1 <= k and 2k <= n");
  return Rational(k) * binomial(n, 2 * k) * pow2(3 - static_cast<long long>(k * k));
}

Rational exhaustive_expectation(std::size_t n, std::size_t k) {
  if (n > 7) throw InputError("exhaustive expectation: n must be at most 7");
  HalfCircleDrawing d = halfcircle_drawing(n);
  const std::size_t m = d.sides.size();
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t sum = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t p = 0; p < m; ++p) d.sides[p] = (mask >> p) & 1U ? Side::kUpper : Side::kLower;
    sum += count_weak_ckk(d, k, ScanMode::kAllPairs).count;
  }
  return Rational(sum) / Rational(total);
}

MonteCarloResult montecarlo_expectation(std::size_t n, std::size_t k, std::uint64_t trials,
                                        std::uint64_t seed, std::size_t jobs, ScanMode mode) {
  if (trials == 0) throw InputError("Monte Carlo: no samples (trials must be positive)");
  if (k == 0 || 2 * k > n) throw InputError("Monte Carlo: need 1 <= k and 2k <= n");
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, trials));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts(chunks, {0, 0});
  parallel_chunks(static_cast<std::size_t>(trials), chunks,
                  [&](std::size_t begin, std::size_t end, std::size_t c) {
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto d = sample_halfcircle_drawing(n, SplitMix64::stream(seed, i));
                      const std::uint64_t x = count_weak_ckk(d, k, mode).count;
                      parts[c].first += x;
                      parts[c].second += x * x;
                    }
                  });
  MonteCarloResult r;
  r.trials = trials;
  for (const auto& [s, q] : parts) {
    r.sum += s;
    r.sum_squares += q;
  }
  const auto t = static_cast<double>(trials);
  r.mean = static_cast<double>(r.sum) / t;
  if (trials > 1) {
    const double var =
        (static_cast<double>(r.sum_squares) - t * r.mean * r.mean) / (t - 1.0);
    r.standard_error = std::sqrt(std::max(0.0, var) / t);
  }
  return r;
}

OrderType halfcircle_order_type(const HalfCircleDrawing& d, std::size_t ui, std::size_t uj,
                                std::size_t vs, std::size_t vt) {
  const std::array<std::size_t, 4> role{ui, uj, vs, vt};
  for (std::size_t a = 0; a < 4; ++a) {
    if (role[a] >= d.size()) throw InputError("half-circle order type: position out of range");
    for (std::size_t b = a + 1; b < 4; ++b)
      if (role[a] == role[b]) throw InputError("half-circle order type: repeated position");
  }
  const bool outer = halfcircle_edges_cross(d, ui, vt, uj, vs);
  const bool inner = halfcircle_edges_cross(d, ui, vs, uj, vt);
  if (outer && inner) throw InconsistencyError("half-circle order type: both pairs cross");
  if (!outer && !inner) return OrderType::kPlane;

  const Side side = outer ? d.side(ui, vt) : d.side(ui, vs);
  // Role indices 0..3 sorted clockwise around the crossing.
  std::array<int, 4> cw{0, 1, 2, 3};
  std::ranges::sort(cw, [&](int a, int b) {
    return side == Side::kUpper ? role[a] > role[b] : role[a] < role[b];
  });
  std::ranges::rotate(cw, std::ranges::find(cw, 0));
  using A = std::array<int, 4>;
  if (outer) {
    if (cw == A{0, 2, 3, 1}) return OrderType::kType1;
    if (cw == A{0, 1, 3, 2}) return OrderType::kType2;
  } else {
    if (cw == A{0, 3, 2, 1}) return OrderType::kType3;
    if (cw == A{0, 1, 2, 3}) return OrderType::kType4;
  }
  throw InconsistencyError("half-circle order type: endpoints do not alternate");
}

TypeTable halfcircle_type_table(const HalfCircleDrawing& d, const std::vector<std::size_t>& U,
                                const std::vector<std::size_t>& V) {
  std::vector<std::string> un, vn;
  for (auto u : U) un.push_back(d.order.at(u));
  for (auto v : V) vn.push_back(d.order.at(v));
  TypeTable table(std::move(un), std::move(vn));
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = i + 1; j < U.size(); ++j)
      for (std::size_t s = 0; s < V.size(); ++s)
        for (std::size_t t = s + 1; t < V.size(); ++t)
          table.set(i, j, s, t, halfcircle_order_type(d, U[i], U[j], V[s], V[t]));
  return table;
}

}  // namespace sdraw

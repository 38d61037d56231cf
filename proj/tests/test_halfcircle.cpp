#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>

#include "sdraw/errors.hpp"
#include "sdraw/geometry.hpp"
#include "sdraw/halfcircle.hpp"
#include "sdraw/random.hpp"
#include "sdraw/ramsey.hpp"

using namespace sdraw;
using gen::from_mask;
using oracle::brute_ckk;
using oracle::brute_count;
using oracle::circle_oracle_cross;

namespace {

// Polyline approximation of the half-circle drawing restricted to the given
// positions, with exact rational points on each circle. Axis positions are
// spread out and jittered so that no degeneracies arise.
GeometricDrawing arc_drawing(const HalfCircleDrawing& hc, const std::vector<std::size_t>& U,
                             const std::vector<std::size_t>& V, std::uint64_t seed) {
  std::vector<std::size_t> all = U;
  all.insert(all.end(), V.begin(), V.end());
  SplitMix64 rng(seed);
  std::vector<long long> x(hc.size());
  for (std::size_t p = 0; p < hc.size(); ++p)
    x[p] = 4000 * static_cast<long long>(p) + static_cast<long long>(rng.below(1500));
  Graph g(all.size());
  std::vector<Point> pts;
  for (std::size_t p : all) pts.emplace_back(Rational(x[p]), Rational(0));
  std::vector<std::vector<Point>> bends;
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t b = 0; b < V.size(); ++b) {
      const VertexId va = static_cast<VertexId>(a);
      const VertexId vb = static_cast<VertexId>(U.size() + b);
      g.add_edge(va, vb);
      const std::size_t pu = U[a], pv = V[b];
      const Rational left(std::min(x[pu], x[pv])), right(std::max(x[pu], x[pv]));
      const Rational cx = (left + right) / 2, r = (right - left) / 2;
      const int sign = hc.side(std::min(pu, pv), std::max(pu, pv)) == Side::kUpper ? 1 : -1;
      // tan(theta/2) = q walks the circle; q near infinity is the left end.
      const long long steps = 8 + static_cast<long long>(bends.size() % 3);
      std::vector<Point> arc;
      for (long long i = steps - 1; i >= 1; --i) {
        const Rational q = make_rational(steps, i);
        const Rational q2 = q * q;
        arc.emplace_back(cx + r * (1 - q2) / (1 + q2), sign * r * 2 * q / (1 + q2));
      }
      for (long long i = 1; i < steps; ++i) {
        const Rational q = make_rational(i, steps);
        const Rational q2 = q * q;
        arc.emplace_back(cx + r * (1 - q2) / (1 + q2), sign * r * 2 * q / (1 + q2));
      }
      // Listed from left to right; the edge runs from the U endpoint.
      std::ranges::sort(arc, [](const Point& p, const Point& q) { return p.x < q.x; });
      if (x[pu] > x[pv]) std::ranges::reverse(arc);
      bends.push_back(std::move(arc));
    }
  return GeometricDrawing(std::move(g), std::move(pts), std::move(bends));
}

}  // namespace

TEST(HalfCircle, SamplingIsDeterministicAndFollowsTheStream) {
  const auto a = sample_halfcircle_drawing(4, 1234);
  const auto b = sample_halfcircle_drawing(4, 1234);
  EXPECT_EQ(a.sides, b.sides);
  for (std::size_t p = 0; p < 6; ++p)
    EXPECT_EQ(a.sides[p] == Side::kUpper, (SplitMix64::stream(1234, p) & 1) == 1);
  EXPECT_TRUE(sample_halfcircle_drawing(1, 5).sides.empty());
  EXPECT_EQ(sample_halfcircle_drawing(1, 5).graph().edge_count(), 0u);
}

TEST(HalfCircle, SideFrequenciesAreFair) {
  std::vector<int> upper(45, 0);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto d = sample_halfcircle_drawing(10, seed);
    for (std::size_t p = 0; p < 45; ++p) upper[p] += d.sides[p] == Side::kUpper;
  }
  for (int u : upper) EXPECT_NEAR(u / 10000.0, 0.5, 0.02);
}

TEST(HalfCircle, CrossingExamples) {
  auto d = halfcircle_drawing(4);
  EXPECT_TRUE(halfcircle_edges_cross(d, 0, 2, 1, 3));
  d.set_side(1, 3, Side::kLower);
  EXPECT_FALSE(halfcircle_edges_cross(d, 0, 2, 1, 3));
  EXPECT_FALSE(halfcircle_edges_cross(d, 0, 1, 2, 3));
  EXPECT_FALSE(halfcircle_edges_cross(d, 0, 3, 1, 2));
}

TEST(HalfCircle, CrossingsMatchCircleGeometry) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = sample_halfcircle_drawing(9, seed);
    const auto p = halfcircle_crossings(d);
    EXPECT_TRUE(p.valid());
    const auto& g = p.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
        const Edge x = g.edge(e), y = g.edge(f);
        EXPECT_EQ(p.crosses(e, f), circle_oracle_cross(d, x.u, x.v, y.u, y.v));
      }
  }
}

TEST(SeparatedPairs, Counts) {
  for (std::size_t k = 1; k <= 4; ++k) {
    EXPECT_EQ(enumerate_separated_pairs(2 * k, k).size(), k);
    for (std::size_t n = 2 * k; n <= 9; ++n) {
      std::uint64_t binom = 1;
      for (std::size_t i = 0; i < 2 * k; ++i) binom = binom * (n - i) / (i + 1);
      EXPECT_EQ(enumerate_separated_pairs(n, k).size(), k * binom) << n << " " << k;
    }
  }
  EXPECT_EQ(enumerate_separated_pairs(7, 1).size(), 21u);
}

TEST(SeparatedPairs, ShapeAndNoAlternation) {
  for (const auto& sp : enumerate_separated_pairs(9, 3)) {
    ASSERT_EQ(sp.S.size(), 3u);
    ASSERT_EQ(sp.T.size(), 3u);
    std::vector<std::pair<std::size_t, int>> merged;
    for (auto s : sp.S) merged.emplace_back(s, 0);
    for (auto t : sp.T) merged.emplace_back(t, 1);
    std::ranges::sort(merged);
    // T is one contiguous block inside the merged sequence.
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < merged.size(); ++i)
      if (merged[i].second == 1 && (i == 0 || merged[i - 1].second == 0)) ++blocks;
    EXPECT_EQ(blocks, 1u);
    EXPECT_EQ(merged.front().second, 0);
  }
  const auto c = separated_configuration(3, 1);
  EXPECT_EQ(c.S, (std::vector<std::size_t>{0, 4, 5}));
  EXPECT_EQ(c.T, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(WeakCkkCount, SmallExamples) {
  const auto d = halfcircle_drawing(4);
  const auto m = halfcircle_ckk_match(d, {0, 1}, {2, 3});
  ASSERT_TRUE(m);
  EXPECT_FALSE(halfcircle_ckk_match(d, {0, 2}, {1, 3}));
  EXPECT_EQ(count_weak_ckk(d, 2, ScanMode::kAllPairs).count, brute_count(d, 2));
}

TEST(WeakCkkCount, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 4 + seed % 4;
    const std::size_t k = n >= 6 && seed % 2 ? 3 : 2;
    const auto d = sample_halfcircle_drawing(n, seed);
    EXPECT_EQ(count_weak_ckk(d, k, ScanMode::kAllPairs).count, brute_count(d, k)) << seed;
  }
}

TEST(WeakCkkCount, ScanModesAgree) {
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto d = sample_halfcircle_drawing(8, seed * 13 + k);
      EXPECT_EQ(count_weak_ckk(d, k, ScanMode::kSeparatedOnly).count,
                count_weak_ckk(d, k, ScanMode::kAllPairs).count);
    }
}

TEST(WeakCkkCount, WitnessesAreGenuine) {
  const auto d = sample_halfcircle_drawing(8, 99);
  const auto c = count_weak_ckk(d, 2, ScanMode::kAllPairs, 100);
  EXPECT_EQ(c.witnesses.size(), std::min<std::uint64_t>(c.count, 100));
  for (const auto& w : c.witnesses) EXPECT_TRUE(brute_ckk(d, w.S, w.T));
}

TEST(ExactProbability, MatchesFormulaForKThreeAndFour) {
  for (std::size_t k = 3; k <= 4; ++k)
    for (std::size_t j = 1; j <= k; ++j) {
      const auto p = exact_pair_probability(k, j);
      EXPECT_EQ(p.favorable, 8u);
      EXPECT_EQ(p.total, std::uint64_t{1} << (k * k));
      EXPECT_EQ(p.probability, Rational(BigInt(1), BigInt(1) << (k * k - 3)));
      EXPECT_TRUE(p.matches_formula);
      EXPECT_TRUE(p.witness_structure);
    }
}

TEST(ExactProbability, KThreeAgreesWithCircleOracle) {
  for (std::size_t j = 1; j <= 3; ++j) {
    const auto conf = separated_configuration(3, j);
    std::uint64_t favorable = 0;
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
      auto d = halfcircle_drawing(6);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t x = 0; x < 3; ++x) {
          const auto s = conf.S[a], t = conf.T[x];
          d.set_side(std::min(s, t), std::max(s, t),
                     (mask >> (a * 3 + x)) & 1 ? Side::kUpper : Side::kLower);
        }
      favorable += brute_ckk(d, conf.S, conf.T);
    }
    EXPECT_EQ(favorable, 8u) << "split " << j;
  }
}

TEST(ExactProbability, KTwoIsReported) {
  const auto p = exact_pair_probability(2, 1);
  EXPECT_EQ(p.total, 16u);
  EXPECT_GT(p.favorable, 0u);
  EXPECT_THROW(exact_pair_probability(5, 1), InputError);
  EXPECT_THROW(exact_pair_probability(3, 0), InputError);
}

TEST(Expectation, Formula) {
  EXPECT_EQ(expected_count_formula(8, 3), Rational(BigInt(21), BigInt(16)));
  EXPECT_EQ(expected_count_formula(6, 3), Rational(BigInt(3), BigInt(64)));
}

TEST(Expectation, ExhaustiveAtFourMatchesBruteForce) {
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) total += brute_count(from_mask(4, mask), 2);
  EXPECT_EQ(exhaustive_expectation(4, 2), Rational(BigInt(total), BigInt(64)));
}

TEST(MonteCarlo, DeterministicAcrossJobs) {
  const auto a = montecarlo_expectation(8, 3, 2000, 7, 1);
  const auto b = montecarlo_expectation(8, 3, 2000, 7, 4);
  EXPECT_EQ(a.sum, b.sum);
  EXPECT_EQ(a.sum_squares, b.sum_squares);
  EXPECT_EQ(a.trials, 2000u);
  EXPECT_THROW(montecarlo_expectation(8, 3, 0, 7), InputError);
}

TEST(MonteCarlo, MeanNearExpectation) {
  const auto r = montecarlo_expectation(8, 3, 20000, 2024, 4);
  EXPECT_LT(std::abs(r.mean - 1.3125), 3 * r.standard_error);
  const auto small = montecarlo_expectation(4, 2, 20000, 11, 2);
  const double exact = to_double(exhaustive_expectation(4, 2));
  EXPECT_LT(std::abs(small.mean - exact), 3 * small.standard_error);
}

TEST(HalfCircleOrderType, AlternatingOrderIsPlane) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto d = from_mask(4, mask);
    EXPECT_EQ(halfcircle_order_type(d, 0, 2, 1, 3), OrderType::kPlane);
  }
}

TEST(HalfCircleOrderType, MatchesPolylineGeometry) {
  int crossing_cases = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto d = sample_halfcircle_drawing(4, seed);
    std::vector<std::size_t> pos{0, 1, 2, 3};
    SplitMix64 rng(seed);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<std::size_t> U{std::min(pos[0], pos[1]), std::max(pos[0], pos[1])};
    std::vector<std::size_t> V{std::min(pos[2], pos[3]), std::max(pos[2], pos[3])};
    const auto g = arc_drawing(d, U, V, seed);
    const OrderType geo = order_type(g, 0, 1, 2, 3);
    EXPECT_EQ(halfcircle_order_type(d, U[0], U[1], V[0], V[1]), geo) << "seed " << seed;
    crossing_cases += geo != OrderType::kPlane;
  }
  EXPECT_GT(crossing_cases, 20);
}

TEST(HalfCircleOrderType, SeparatedSameSideIsUniform) {
  for (Side side : {Side::kUpper, Side::kLower}) {
    const auto d = halfcircle_drawing(8, side);
    const auto table = halfcircle_type_table(d, {0, 1, 2, 3}, {4, 5, 6, 7});
    const OrderType first = table.at(0, 1, 0, 1);
    EXPECT_NE(first, OrderType::kPlane);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t s = 0; s < 4; ++s)
          for (std::size_t t = s + 1; t < 4; ++t) EXPECT_EQ(table.at(i, j, s, t), first);
  }
}

TEST(HalfCircleOrderType, ExportedTablesAreTransitive) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 6 + seed % 11;
    const auto d = sample_halfcircle_drawing(n, seed);
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    SplitMix64 rng(seed + 1);
    std::shuffle(pos.begin(), pos.end(), rng);
    const std::size_t split = std::min<std::size_t>(8, n / 2);
    std::vector<std::size_t> U(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<std::size_t> V(pos.begin() + static_cast<std::ptrdiff_t>(split), pos.end());
    if (V.size() > 8) V.resize(8);
    std::ranges::sort(U);
    std::ranges::sort(V);
    const auto table = halfcircle_type_table(d, U, V);
    EXPECT_FALSE(check_type_transitivity(table)) << "seed " << seed;
    const auto r = find_weak_ckk(table, 2);
    if (const auto* w = std::get_if<CkkWitness>(&r.outcome)) {
      EXPECT_TRUE(validate_ckk_witness(table, *w));
      std::vector<std::size_t> S, T;
      for (auto i : w->S) S.push_back(U[i]);
      for (auto i : w->T) T.push_back(V[i]);
      EXPECT_TRUE(brute_ckk(d, S, T)) << "seed " << seed;
    }
  }
}

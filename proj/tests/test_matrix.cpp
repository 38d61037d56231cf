#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

#include "sdraw/errors.hpp"
#include "sdraw/matrix.hpp"
#include "sdraw/random.hpp"

using namespace sdraw;
using oracle::matrix_contains_forbidden;

namespace {

TwoRowMatrix renamed(const TwoRowMatrix& m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::map<std::string, std::string> top, bottom;
  std::vector<std::string> t, b;
  for (const auto& s : m.top()) {
    if (!top.count(s)) top[s] = "p" + std::to_string(rng() % 1000000) + "_" + std::to_string(top.size());
    t.push_back(top[s]);
  }
  for (const auto& s : m.bottom()) {
    if (!bottom.count(s)) bottom[s] = "q" + std::to_string(rng() % 1000000) + "_" + std::to_string(bottom.size());
    b.push_back(bottom[s]);
  }
  return TwoRowMatrix(t, b);
}

}  // namespace

TEST(TwoRowMatrix, RejectsBadShapes) {
  EXPECT_THROW(TwoRowMatrix({"a", "b"}, {"s"}), InputError);
  EXPECT_THROW(TwoRowMatrix({"a", "b"}, {"s", "a"}), InputError);
  const TwoRowMatrix m({"a", "b", "a"}, {"s", "s", "t"});
  EXPECT_EQ(m.top_alphabet(), 2u);
  EXPECT_EQ(m.bottom_alphabet(), 2u);
  EXPECT_EQ(m.symbol_count(), 4u);
  EXPECT_EQ(m.top_ids(), (std::vector<std::uint32_t>{0, 1, 0}));
}

TEST(ForbiddenSubmatrix, DisplayedF1) {
  const TwoRowMatrix m({"a", "b", "a", "b"}, {"c", "s", "s", "d"});
  const auto w = contains_forbidden_submatrix(m);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->pattern, ForbiddenPattern::kF1);
  EXPECT_EQ(w->columns, (std::array<std::size_t, 4>{0, 1, 2, 3}));
  EXPECT_EQ(w->symbols, (std::array<std::string, 3>{"a", "b", "s"}));
  EXPECT_TRUE(is_forbidden_witness(m, *w));
}

TEST(ForbiddenSubmatrix, DisplayedF2) {
  const TwoRowMatrix m({"x", "a", "a", "y"}, {"s", "t", "s", "t"});
  const auto w = contains_forbidden_submatrix(m);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->pattern, ForbiddenPattern::kF2);
  EXPECT_EQ(w->columns, (std::array<std::size_t, 4>{0, 1, 2, 3}));
  EXPECT_EQ(w->symbols, (std::array<std::string, 3>{"a", "s", "t"}));
}

TEST(ForbiddenSubmatrix, WildcardsMayRepeat) {
  // The starred entries coincide with named symbols.
  EXPECT_TRUE(contains_forbidden_submatrix(TwoRowMatrix({"a", "b", "a", "b"}, {"s", "s", "s", "s"})));
  EXPECT_TRUE(contains_forbidden_submatrix(TwoRowMatrix({"a", "a", "a", "a"}, {"s", "t", "s", "t"})));
  EXPECT_FALSE(contains_forbidden_submatrix(TwoRowMatrix({"a", "b", "a", "b"}, {"s", "t", "u", "v"})));
  EXPECT_FALSE(contains_forbidden_submatrix(TwoRowMatrix({"a"}, {"s"})));
  EXPECT_FALSE(contains_forbidden_submatrix(TwoRowMatrix({}, {})));
}

TEST(ForbiddenSubmatrix, AgreesWithBruteForce) {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t cols = 1 + seed % 30;
    const auto m = random_two_row_matrix(cols, 1 + seed % 6, 1 + (seed / 6) % 6, seed);
    const auto fast = contains_forbidden_submatrix(m);
    const auto slow = contains_forbidden_submatrix_bruteforce(m);
    const bool truth = matrix_contains_forbidden(m);
    ASSERT_EQ(fast.has_value(), truth) << "seed " << seed;
    ASSERT_EQ(slow.has_value(), truth) << "seed " << seed;
    if (fast) EXPECT_TRUE(is_forbidden_witness(m, *fast));
    if (slow) EXPECT_TRUE(is_forbidden_witness(m, *slow));
    hits += truth;
  }
  EXPECT_GT(hits, 50);
  EXPECT_LT(hits, 450);
}

TEST(ForbiddenSubmatrix, InvariantUnderRenaming) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto m = random_two_row_matrix(4 + seed % 20, 2 + seed % 4, 2 + seed % 3, seed + 10);
    const auto r = renamed(m, seed);
    EXPECT_EQ(contains_forbidden_submatrix(m).has_value(),
              contains_forbidden_submatrix(r).has_value());
  }
}

TEST(ForbiddenSubmatrix, WitnessCheckerRejectsFakes) {
  const TwoRowMatrix m({"a", "b", "a", "c"}, {"s", "t", "t", "u"});
  ForbiddenWitness w{ForbiddenPattern::kF1, {0, 1, 2, 3}, {"a", "b", "t"}};
  EXPECT_FALSE(is_forbidden_witness(m, w));
  w.columns = {3, 2, 1, 0};
  EXPECT_FALSE(is_forbidden_witness(m, w));
}

TEST(Pptt, TrivialAndHypothesisFailure) {
  const auto one = pptt_bound_check(TwoRowMatrix({"a"}, {"s"}));
  EXPECT_EQ(one.columns, 1u);
  EXPECT_EQ(one.symbols, 2u);
  EXPECT_DOUBLE_EQ(one.bound, 34.0);
  EXPECT_TRUE(one.within_bound);
  EXPECT_FALSE(one.lemma_violation);

  const auto f1 = pptt_bound_check(TwoRowMatrix({"a", "b", "a", "b"}, {"c", "s", "s", "d"}));
  EXPECT_FALSE(f1.hypothesis_holds);
  EXPECT_TRUE(f1.forbidden);
  EXPECT_FALSE(f1.lemma_violation);
}

TEST(Pptt, DuplicateColumnsAreRemoved) {
  const auto r = pptt_bound_check(TwoRowMatrix({"a", "a", "b", "a"}, {"s", "s", "t", "s"}));
  EXPECT_EQ(r.columns, 2u);
  EXPECT_EQ(r.duplicate_columns, 2u);
}

TEST(Pptt, GreedyMatricesAreFreeDistinctAndWithinBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t ta = 1 + seed % 5, tb = 1 + (seed / 5) % 5;
    const auto m = greedy_forbidden_free_matrix(ta, tb, seed);
    ASSERT_FALSE(matrix_contains_forbidden(m)) << "seed " << seed;
    std::set<std::pair<std::string, std::string>> cols;
    for (std::size_t c = 0; c < m.columns(); ++c) cols.emplace(m.top()[c], m.bottom()[c]);
    EXPECT_EQ(cols.size(), m.columns());
    const auto r = pptt_bound_check(m);
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.within_bound);
    EXPECT_FALSE(r.lemma_violation);
  }
}

TEST(Pptt, GreedyIsDeterministic) {
  const auto a = greedy_forbidden_free_matrix(4, 4, 31);
  const auto b = greedy_forbidden_free_matrix(4, 4, 31);
  EXPECT_EQ(a.top(), b.top());
  EXPECT_EQ(a.bottom(), b.bottom());
}

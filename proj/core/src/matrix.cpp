#include "sdraw/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "sdraw/errors.hpp"
#include "sdraw/random.hpp"

namespace sdraw {

namespace {

std::vector<std::uint32_t> intern(const std::vector<std::string>& row, std::size_t& count) {
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  out.reserve(row.size());
  for (const auto& s : row)
    out.push_back(ids.try_emplace(s, static_cast<std::uint32_t>(ids.size())).first->second);
  count = ids.size();
  return out;
}

}  // namespace

TwoRowMatrix::TwoRowMatrix(std::vector<std::string> top, std::vector<std::string> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size())
    throw InputError("matrix: rows have different lengths");
  const std::set<std::string> t(top_.begin(), top_.end());
  for (const auto& s : bottom_)
    if (t.contains(s)) throw InputError("matrix: symbol '" + s + "' occurs in both rows");
  top_id_ = intern(top_, top_count_);
  bottom_id_ = intern(bottom_, bottom_count_);
}

std::string_view to_string(ForbiddenPattern p) { return p == ForbiddenPattern::kF1 ? "F1" : "F2"; }

namespace {

// F1 on rows (x = top, y = bottom) or F2 with the rows swapped.
struct RowView {
  const std::vector<std::uint32_t>& alt;   // row carrying the alternating symbols
  const std::vector<std::uint32_t>& same;  // row carrying the repeated middle symbol
  std::size_t alt_alphabet;
};

std::optional<std::array<std::size_t, 4>> find_pattern(const RowView& v) {
  const std::size_t m = v.alt.size();
  constexpr std::size_t kNever = SIZE_MAX;
  std::vector<std::size_t> first(v.alt_alphabet, kNever), last(v.alt_alphabet, kNever);
  for (std::size_t c = 0; c < m; ++c) {
    if (first[v.alt[c]] == kNever) first[v.alt[c]] = c;
    last[v.alt[c]] = c;
  }
  for (std::size_t c2 = 0; c2 < m; ++c2)
    for (std::size_t c3 = c2 + 1; c3 < m; ++c3) {
      if (v.same[c2] != v.same[c3] || v.alt[c2] == v.alt[c3]) continue;
      const auto b = v.alt[c2];
      const auto a = v.alt[c3];
      if (first[a] < c2 && last[b] > c3) return std::array{first[a], c2, c3, last[b]};
    }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> find_pattern_bruteforce(const RowView& v) {
  const std::size_t m = v.alt.size();
  for (std::size_t c1 = 0; c1 < m; ++c1)
    for (std::size_t c2 = c1 + 1; c2 < m; ++c2)
      for (std::size_t c3 = c2 + 1; c3 < m; ++c3)
        for (std::size_t c4 = c3 + 1; c4 < m; ++c4)
          if (v.alt[c1] == v.alt[c3] && v.alt[c2] == v.alt[c4] && v.alt[c1] != v.alt[c2] &&
              v.same[c2] == v.same[c3])
            return std::array{c1, c2, c3, c4};
  return std::nullopt;
}

template <typename Finder>
std::optional<ForbiddenWitness> detect(const TwoRowMatrix& m, Finder&& find) {
  if (auto c = find(RowView{m.top_ids(), m.bottom_ids(), m.top_alphabet()})) {
    return ForbiddenWitness{
        ForbiddenPattern::kF1, *c, {m.top()[(*c)[0]], m.top()[(*c)[1]], m.bottom()[(*c)[1]]}};
  }
  if (auto c = find(RowView{m.bottom_ids(), m.top_ids(), m.bottom_alphabet()})) {
    return ForbiddenWitness{ForbiddenPattern::kF2,
                            *c,
                            {m.top()[(*c)[1]], m.bottom()[(*c)[0]], m.bottom()[(*c)[1]]}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ForbiddenWitness> contains_forbidden_submatrix(const TwoRowMatrix& m) {
  return detect(m, [](const RowView& v) { return find_pattern(v); });
}

std::optional<ForbiddenWitness> contains_forbidden_submatrix_bruteforce(const TwoRowMatrix& m) {
  return detect(m, [](const RowView& v) { return find_pattern_bruteforce(v); });
}

bool is_forbidden_witness(const TwoRowMatrix& m, const ForbiddenWitness& w) {
  const auto& c = w.columns;
  if (!(c[0] < c[1] && c[1] < c[2] && c[2] < c[3] && c[3] < m.columns())) return false;
  const auto& top = m.top();
  const auto& bot = m.bottom();
  if (w.pattern == ForbiddenPattern::kF1)
    return top[c[0]] == top[c[2]] && top[c[1]] == top[c[3]] && top[c[0]] != top[c[1]] &&
           bot[c[1]] == bot[c[2]];
  return bot[c[0]] == bot[c[2]] && bot[c[1]] == bot[c[3]] && bot[c[0]] != bot[c[1]] &&
         top[c[1]] == top[c[2]];
}

PpttReport pptt_bound_check(const TwoRowMatrix& m) {
  std::vector<std::string> top, bottom;
  std::set<std::pair<std::string, std::string>> seen;
  PpttReport r;
  for (std::size_t c = 0; c < m.columns(); ++c) {
    if (!seen.emplace(m.top()[c], m.bottom()[c]).second) {
      ++r.duplicate_columns;
      continue;
    }
    top.push_back(m.top()[c]);
    bottom.push_back(m.bottom()[c]);
  }
  const TwoRowMatrix dedup(std::move(top), std::move(bottom));
  r.columns = dedup.columns();
  r.symbols = dedup.symbol_count();
  const auto n = static_cast<double>(r.symbols);
  r.bound = r.symbols < 2 ? 0.0 : 17.0 * n * std::log2(n);
  r.within_bound = static_cast<double>(r.columns) <= r.bound || r.columns <= 1;
  r.forbidden = contains_forbidden_submatrix(dedup);
  r.hypothesis_holds = !r.forbidden.has_value();
  r.lemma_violation = r.hypothesis_holds && !r.within_bound;
  return r;
}

TwoRowMatrix random_two_row_matrix(std::size_t columns, std::size_t top_alphabet,
                                   std::size_t bottom_alphabet, std::uint64_t seed) {
  if (top_alphabet == 0 || bottom_alphabet == 0)
    throw InputError("random matrix: alphabets must be nonempty");
  SplitMix64 rng(seed);
  std::vector<std::string> top, bottom;
  for (std::size_t c = 0; c < columns; ++c) {
    top.push_back("u" + std::to_string(1 + rng.below(top_alphabet)));
    bottom.push_back("v" + std::to_string(1 + rng.below(bottom_alphabet)));
  }
  return {std::move(top), std::move(bottom)};
}

TwoRowMatrix greedy_forbidden_free_matrix(std::size_t top_alphabet, std::size_t bottom_alphabet,
                                          std::uint64_t seed) {
  if (top_alphabet == 0 || bottom_alphabet == 0)
    throw InputError("greedy matrix: alphabets must be nonempty");
  SplitMix64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < top_alphabet; ++a)
    for (std::size_t b = 0; b < bottom_alphabet; ++b) candidates.emplace_back(a, b);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<std::string> top, bottom;
  for (const auto& [a, b] : candidates) {
    const auto pos = static_cast<std::ptrdiff_t>(rng.below(top.size() + 1));
    top.insert(top.begin() + pos, "u" + std::to_string(a + 1));
    bottom.insert(bottom.begin() + pos, "v" + std::to_string(b + 1));
    if (contains_forbidden_submatrix(TwoRowMatrix(top, bottom))) {
      top.erase(top.begin() + pos);
      bottom.erase(bottom.begin() + pos);
    }
  }
  return {std::move(top), std::move(bottom)};
}

}  // namespace sdraw

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdraw {

/// A 2 x m matrix of symbols. No symbol may occur in both rows.
class TwoRowMatrix {
 public:
  TwoRowMatrix() = default;
  TwoRowMatrix(std::vector<std::string> top, std::vector<std::string> bottom);

  [[nodiscard]] std::size_t columns() const { return top_.size(); }
  [[nodiscard]] const std::vector<std::string>& top() const { return top_; }
  [[nodiscard]] const std::vector<std::string>& bottom() const { return bottom_; }
  /// Symbols interned per row, dense from 0 in order of first occurrence.
  [[nodiscard]] const std::vector<std::uint32_t>& top_ids() const { return top_id_; }
  [[nodiscard]] const std::vector<std::uint32_t>& bottom_ids() const { return bottom_id_; }
  [[nodiscard]] std::size_t top_alphabet() const { return top_count_; }
  [[nodiscard]] std::size_t bottom_alphabet() const { return bottom_count_; }
  /// Number of distinct symbols over both rows.
  [[nodiscard]] std::size_t symbol_count() const { return top_count_ + bottom_count_; }

 private:
  std::vector<std::string> top_, bottom_;
  std::vector<std::uint32_t> top_id_, bottom_id_;
  std::size_t top_count_ = 0, bottom_count_ = 0;
};

enum class ForbiddenPattern { kF1, kF2 };

std::string_view to_string(ForbiddenPattern p);

/// F1: top (a, b, a, b) with a != b, bottom (*, s, s, *).
/// F2: top (*, a, a, *), bottom (s, t, s, t) with s != t.
struct ForbiddenWitness {
  ForbiddenPattern pattern = ForbiddenPattern::kF1;
  std::array<std::size_t, 4> columns{};
  /// F1: {a, b, s}; F2: {a, s, t}.
  std::array<std::string, 3> symbols;
};

/// O(m^2): for every pair of middle columns, look up the first and last
/// occurrence of the required outer symbols.
std::optional<ForbiddenWitness> contains_forbidden_submatrix(const TwoRowMatrix& m);

/// O(m^4) reference scan over all column quadruples.
std::optional<ForbiddenWitness> contains_forbidden_submatrix_bruteforce(const TwoRowMatrix& m);

/// True if `w` really is an occurrence of its pattern in `m`.
bool is_forbidden_witness(const TwoRowMatrix& m, const ForbiddenWitness& w);

struct PpttReport {
  std::size_t columns = 0;           // after deduplication
  std::size_t duplicate_columns = 0;  // removed
  std::size_t symbols = 0;
  double bound = 0;  // 17 n log2 n
  bool within_bound = true;
  /// False when the matrix contains F1 or F2; the bound then says nothing.
  bool hypothesis_holds = true;
  std::optional<ForbiddenWitness> forbidden;
  /// F1/F2-free with distinct columns and above the bound.
  bool lemma_violation = false;
};

PpttReport pptt_bound_check(const TwoRowMatrix& m);

/// Columns drawn uniformly from alphabets u1..u{top_alphabet} and
/// v1..v{bottom_alphabet}.
TwoRowMatrix random_two_row_matrix(std::size_t columns, std::size_t top_alphabet,
                                   std::size_t bottom_alphabet, std::uint64_t seed);

/// Greedy F1/F2-free matrix with distinct columns: candidate columns are
/// tried in random order, each inserted at a random position and kept if the
/// matrix stays free.
TwoRowMatrix greedy_forbidden_free_matrix(std::size_t top_alphabet, std::size_t bottom_alphabet,
                                          std::uint64_t seed);

}  // namespace sdraw

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sdraw/type_table.hpp"

namespace sdraw {

/// Complete graph on vertices 0..n-1 (in that order) with every pair colored
/// 1..5.
class OrderedColoredGraph {
 public:
  explicit OrderedColoredGraph(std::size_t n = 0, int fill = 5);

  [[nodiscard]] std::size_t size() const { return n_; }
  /// Either argument order.
  [[nodiscard]] int color(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, int color);

 private:
  std::size_t n_;
  std::vector<std::uint8_t> colors_;
};

struct MonotonePath {
  int color = 0;
  /// Strictly increasing.
  std::vector<std::size_t> vertices;
};

struct ColorFiveClique {
  std::vector<std::size_t> vertices;
};

using PathOrClique = std::variant<std::monostate, MonotonePath, ColorFiveClique>;

/// One left-to-right pass computing, per vertex, the longest monotone path in
/// each of colors 1-4 ending there. Returns a path with exactly m edges when
/// some color reaches m; otherwise a color-5 clique on t+1 vertices sharing a
/// label, if any label class is that large. Never empty when n > t·m^4.
PathOrClique monotone_path_or_clique(const OrderedColoredGraph& g, std::size_t m, std::size_t t);

bool is_monotone_path(const OrderedColoredGraph& g, const MonotonePath& path);
bool is_monochromatic_clique(const OrderedColoredGraph& g, const std::vector<std::size_t>& vs,
                             int color);

/// Complete graph with integer edge colors; a negative color marks a missing
/// edge, which no clique may use.
class ColoredCompleteGraph {
 public:
  explicit ColoredCompleteGraph(std::size_t n = 0, int fill = -1);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] int color(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, int color);

 private:
  std::size_t n_;
  std::vector<int> colors_;
};

enum class CliqueStatus { kFound, kNone, kBudgetExceeded };

struct CliqueSearchResult {
  CliqueStatus status = CliqueStatus::kNone;
  int color = -1;
  std::vector<std::size_t> vertices;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultCliqueBudget = 50'000'000;

/// Branch and bound over colors in increasing order, then over vertices.
/// For k <= 1 any single vertex is a clique (color -1).
CliqueSearchResult find_monochromatic_clique(const ColoredCompleteGraph& g, std::size_t k,
                                             std::uint64_t budget = kDefaultCliqueBudget);

/// i < j < l in U-order with (i,j) and (j,l) of type w but (i,l) not.
struct TransitivityViolation {
  int w = 0;
  std::size_t s = 0, t = 0;
  std::size_t i = 0, j = 0, l = 0;
};

/// First violation in (s, t, w, i, j, l) lexicographic order.
std::optional<TransitivityViolation> check_type_transitivity(const TypeTable& table);

/// S and T are table indices, increasing. The witness orderings are the U
/// and V indices in canonical C_{k,k} order: U keeps its order, V is
/// reversed for types 3 and 4.
struct CkkWitness {
  std::vector<std::size_t> S;
  std::vector<std::size_t> T;
  OrderType type = OrderType::kType1;
  std::vector<std::size_t> u_order;
  std::vector<std::size_t> v_order;
  bool v_reversed = false;
};

/// A type-5 triangle S shared by all pairs of T: the (S, T) sub-drawing is a
/// plane K_{3,k}.
struct PlaneK3kCertificate {
  std::vector<std::size_t> S;
  std::vector<std::size_t> T;
};

struct InsufficientV {};
struct ExtractionBudgetExceeded {};

using ExtractionOutcome = std::variant<CkkWitness, PlaneK3kCertificate, TransitivityViolation,
                                       InsufficientV, ExtractionBudgetExceeded>;

struct ExtractionResult {
  ExtractionOutcome outcome;
  std::size_t labeled_pairs = 0;
  std::size_t unlabeled_pairs = 0;
  std::size_t distinct_labels = 0;
  std::uint64_t clique_nodes = 0;
};

/// Extraction of a weak C_{k,k} from a type table. Every V-pair (s,t) gets
/// the label (S, w) produced by monotone_path_or_clique(m = k-1, t = 2) on U;
/// paths are upgraded to cliques and re-checked. A label shared by a k-set T
/// of V yields the result. Labels with w <= 4 are searched before w = 5.
ExtractionResult find_weak_ckk(const TypeTable& table, std::size_t k, std::size_t jobs = 1,
                               std::uint64_t budget = kDefaultCliqueBudget);

/// Re-checks a witness against the table: every 4-tuple on (S, T) has the
/// common type, and the orderings reproduce the canonical crossing rule.
bool validate_ckk_witness(const TypeTable& table, const CkkWitness& witness);

/// Canonical C_{n,n} style table: every 4-tuple has type w.
TypeTable uniform_type_table(std::size_t u, std::size_t v, OrderType w);

}  // namespace sdraw

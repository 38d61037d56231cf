#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sdraw {

/// Order type of a bipartite 4-tuple {u_i, u_j, v_s, v_t}, i < j, s < t.
///   1, 2: u_i v_t crosses u_j v_s; clockwise from the crossing the vertices
///         read (u_i, v_s, v_t, u_j) for 1 and (u_i, u_j, v_t, v_s) for 2.
///   3, 4: u_i v_s crosses u_j v_t; clockwise (u_i, v_t, v_s, u_j) for 3 and
///         (u_i, u_j, v_s, v_t) for 4.
///   5:    the K_{2,2} is plane.
enum class OrderType : std::uint8_t {
  kType1 = 1,
  kType2 = 2,
  kType3 = 3,
  kType4 = 4,
  kPlane = 5,
};

constexpr int to_int(OrderType t) { return static_cast<int>(t); }
OrderType order_type_from_int(int value);

/// True for types 1 and 2 (u_i v_t crosses u_j v_s).
constexpr bool crosses_outer_pair(OrderType t) {
  return t == OrderType::kType1 || t == OrderType::kType2;
}

/// Index of the unordered pair {i, j}, i < j < n, in row-major order.
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Order types of all 4-tuples of a bipartite drawing with fixed orders on U
/// and V. Indices are positions in those orders (0-based).
class TypeTable {
 public:
  TypeTable() = default;
  /// All entries start as type 5.
  TypeTable(std::vector<std::string> U, std::vector<std::string> V);

  [[nodiscard]] std::size_t u_size() const { return u_.size(); }
  [[nodiscard]] std::size_t v_size() const { return v_.size(); }
  [[nodiscard]] const std::vector<std::string>& u_names() const { return u_; }
  [[nodiscard]] const std::vector<std::string>& v_names() const { return v_; }

  /// Requires i < j and s < t.
  [[nodiscard]] OrderType at(std::size_t i, std::size_t j, std::size_t s,
                             std::size_t t) const {
    return static_cast<OrderType>(types_[slot(i, j, s, t)]);
  }
  void set(std::size_t i, std::size_t j, std::size_t s, std::size_t t, OrderType w) {
    types_[slot(i, j, s, t)] = static_cast<std::uint8_t>(w);
  }

  /// The table on sub-orders of U and V (indices increasing).
  [[nodiscard]] TypeTable restrict(const std::vector<std::size_t>& us,
                                   const std::vector<std::size_t>& vs) const;

  friend bool operator==(const TypeTable&, const TypeTable&) = default;

 private:
  [[nodiscard]] std::size_t slot(std::size_t i, std::size_t j, std::size_t s,
                                 std::size_t t) const;

  std::vector<std::string> u_;
  std::vector<std::string> v_;
  std::vector<std::uint8_t> types_;
};

}  // namespace sdraw

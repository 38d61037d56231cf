#include "sdraw/type_table.hpp"

#include "sdraw/errors.hpp"

namespace sdraw {

OrderType order_type_from_int(int value) {
  if (value < 1 || value > 5)
    throw InputError("order type must be in 1..5, got " + std::to_string(value));
  return static_cast<OrderType>(value);
}

TypeTable::TypeTable(std::vector<std::string> U, std::vector<std::string> V)
    : u_(std::move(U)), v_(std::move(V)) {
  const std::size_t m = u_.size();
  const std::size_t n = v_.size();
  types_.assign(m * (m - (m > 0 ? 1 : 0)) / 2 * (n * (n - (n > 0 ? 1 : 0)) / 2),
                static_cast<std::uint8_t>(OrderType::kPlane));
}

std::size_t TypeTable::slot(std::size_t i, std::size_t j, std::size_t s,
                            std::size_t t) const {
  if (!(i < j && j < u_.size() && s < t && t < v_.size()))
    throw InputError("type table index out of range or not increasing");
  const std::size_t vn = v_.size();
  return pair_index(i, j, u_.size()) * (vn * (vn - 1) / 2) + pair_index(s, t, vn);
}

TypeTable TypeTable::restrict(const std::vector<std::size_t>& us,
                              const std::vector<std::size_t>& vs) const {
  std::vector<std::string> un, vn;
  for (auto i : us) un.push_back(u_.at(i));
  for (auto s : vs) vn.push_back(v_.at(s));
  TypeTable out(std::move(un), std::move(vn));
  for (std::size_t a = 0; a < us.size(); ++a)
    for (std::size_t b = a + 1; b < us.size(); ++b)
      for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t d = c + 1; d < vs.size(); ++d)
          out.set(a, b, c, d, at(us[a], us[b], vs[c], vs[d]));
  return out;
}

}  // namespace sdraw

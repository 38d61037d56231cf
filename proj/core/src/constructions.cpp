#include "sdraw/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sdraw/errors.hpp"
#include "sdraw/random.hpp"

namespace sdraw {

namespace {

void require_increasing(std::span<const Rational> ys, const char* which) {
  for (std::size_t i = 1; i < ys.size(); ++i)
    if (!(ys[i - 1] < ys[i]))
      throw InputError(std::string(which) + " heights must be strictly increasing");
}

}  // namespace

GeometricDrawing two_line_drawing(std::span<const Rational> yU,
                                  std::span<const Rational> yV) {
  require_increasing(yU, "U");
  require_increasing(yV, "V");
  if (yU.empty() || yV.empty()) throw InputError("both parts need at least one vertex");
  Graph g = complete_bipartite(yU.size(), yV.size());
  std::vector<Point> pts;
  for (const auto& y : yU) pts.emplace_back(Rational(0), y);
  for (const auto& y : yV) pts.emplace_back(Rational(1), y);
  return GeometricDrawing(std::move(g), std::move(pts));
}

GeometricDrawing two_line_drawing(std::size_t s, std::size_t t) {
  // U at heights 1..s, V at heights B^1..B^t with B = s + 1. Three edges meet
  // in a point only if their endpoint height pairs (a, b) are collinear, and
  // that would make a base-B number with nonzero digits below B vanish.
  std::vector<Rational> yU, yV;
  for (std::size_t i = 1; i <= s; ++i) yU.emplace_back(static_cast<long long>(i));
  const BigInt base(static_cast<long long>(s + 1));
  BigInt h = 1;
  for (std::size_t i = 1; i <= t; ++i) {
    h *= base;
    yV.emplace_back(h);
  }
  return two_line_drawing(yU, yV);
}

Bipartition two_line_parts(const GeometricDrawing& d, std::size_t s, std::size_t t) {
  if (d.graph().vertex_count() != s + t) throw InputError("part sizes do not match drawing");
  Bipartition b;
  for (std::size_t i = 0; i < s; ++i) b.U.push_back(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < t; ++i) b.V.push_back(static_cast<VertexId>(s + i));
  return b;
}

std::size_t ngon_step(std::size_t n) {
  return (n / 2 - 1) % 2 == 1 ? n / 2 - 1 : n / 2 - 2;
}

GeometricDrawing ngon_spiked_cycle(std::size_t n, std::span<const std::size_t> spike_counts) {
  if (n == 10)
    throw InputError(
        "n = 10 has no star-polygon drawing (3m > n fails); that case needs a "
        "hand-made drawing and is not generated");
  if (n < 8 || n % 2 != 0) throw InputError("n must be even and at least 8");
  if (!spike_counts.empty() && spike_counts.size() != n)
    throw InputError("spike counts must list one entry per cycle vertex");
  const std::size_t m = ngon_step(n);
  constexpr unsigned kGridBits = 24;
  constexpr double kInset = 1.0 / 1024;

  auto corner = [&](std::size_t i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    return std::pair{std::cos(a), std::sin(a)};
  };

  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    Graph g;
    std::vector<Point> pts;
    // Perturbation far below the grid spacing; attempt 0 is the plain grid.
    auto jitter = [&](std::uint64_t salt) {
      if (attempt == 0) return 0.0;
      const auto r = SplitMix64::stream(attempt, salt);
      return (static_cast<double>(r >> 11) * 0x1.0p-53 - 0.5) * std::ldexp(1.0, -kGridBits + 6);
    };
    for (std::size_t i = 0; i < n; ++i) {
      auto [x, y] = corner(i);
      g.add_vertex("v" + std::to_string(i));
      pts.emplace_back(round_to_grid(x + jitter(2 * i), kGridBits),
                       round_to_grid(y + jitter(2 * i + 1), kGridBits));
    }
    for (std::size_t i = 0; i < n; ++i)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + m) % n));
    std::uint64_t salt = 2 * n;
    for (std::size_t i = 0; i < spike_counts.size(); ++i) {
      const auto [ax, ay] = corner((i + m) % n);
      const auto [bx, by] = corner((i + m + 1) % n);
      const std::size_t c = spike_counts[i];
      for (std::size_t j = 0; j < c; ++j) {
        const double f = static_cast<double>(j + 1) / static_cast<double>(c + 1);
        const double x = (ax + f * (bx - ax)) * (1 - kInset);
        const double y = (ay + f * (by - ay)) * (1 - kInset);
        const VertexId leaf =
            g.add_vertex("s" + std::to_string(i) + "." + std::to_string(j));
        pts.emplace_back(round_to_grid(x + jitter(salt), kGridBits),
                         round_to_grid(y + jitter(salt + 1), kGridBits));
        salt += 2;
        g.add_edge(static_cast<VertexId>(i), leaf);
      }
    }
    try {
      return GeometricDrawing(std::move(g), std::move(pts));
    } catch (const GeneralPositionError&) {
      continue;
    }
  }
  throw InconsistencyError("could not place the n-gon in general position");
}

GeometricDrawing random_bipartite_drawing(std::size_t s, std::size_t t, std::uint64_t seed,
                                          double x_spread) {
  if (s == 0 || t == 0) throw InputError("both parts need at least one vertex");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Graph g = complete_bipartite(s, t);
    std::vector<Point> pts;
    auto coord = [&](double base) {
      return round_to_grid(base + (2 * rng.uniform() - 1) * x_spread, 20);
    };
    for (std::size_t i = 0; i < s + t; ++i) {
      const double base = i < s ? 0.0 : 1.0;
      pts.emplace_back(coord(base), round_to_grid(rng.uniform() * 4, 20));
    }
    try {
      return GeometricDrawing(std::move(g), std::move(pts));
    } catch (const GeneralPositionError&) {
      continue;
    }
  }
  throw InconsistencyError("could not sample a drawing in general position");
}

}  // namespace sdraw

#include "sdraw/ramsey.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>

#include "sdraw/errors.hpp"
#include "sdraw/parallel.hpp"
#include "sdraw/pattern.hpp"

namespace sdraw {

OrderedColoredGraph::OrderedColoredGraph(std::size_t n, int fill)
    : n_(n), colors_(n < 2 ? 0 : n * (n - 1) / 2, static_cast<std::uint8_t>(fill)) {
  if (fill < 1 || fill > 5) throw InputError("ordered colored graph: colors are 1..5");
}

int OrderedColoredGraph::color(std::size_t a, std::size_t b) const {
  if (a == b || a >= n_ || b >= n_) throw InputError("ordered colored graph: bad vertex pair");
  if (a > b) std::swap(a, b);
  return colors_[pair_index(a, b, n_)];
}

void OrderedColoredGraph::set(std::size_t a, std::size_t b, int color) {
  if (a == b || a >= n_ || b >= n_) throw InputError("ordered colored graph: bad vertex pair");
  if (color < 1 || color > 5) throw InputError("ordered colored graph: colors are 1..5");
  if (a > b) std::swap(a, b);
  colors_[pair_index(a, b, n_)] = static_cast<std::uint8_t>(color);
}

PathOrClique monotone_path_or_clique(const OrderedColoredGraph& g, std::size_t m,
                                     std::size_t t) {
  if (m == 0 || t == 0) throw InputError("monotone_path_or_clique: m and t must be positive");
  const std::size_t n = g.size();
  // len[v][c]: edges in the longest color-(c+1) monotone path ending at v.
  std::vector<std::array<std::size_t, 4>> len(n, {0, 0, 0, 0});
  std::vector<std::array<std::size_t, 4>> pred(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      const int c = g.color(u, v);
      if (c == 5) continue;
      auto& cur = len[v][c - 1];
      if (len[u][c - 1] + 1 > cur) {
        cur = len[u][c - 1] + 1;
        pred[v][c - 1] = u;
      }
    }
    for (std::size_t c = 0; c < 4; ++c) {
      if (len[v][c] < m) continue;
      MonotonePath path{static_cast<int>(c + 1), {v}};
      std::size_t x = v;
      for (std::size_t step = 0; step < m; ++step) {
        x = pred[x][c];
        path.vertices.push_back(x);
      }
      std::ranges::reverse(path.vertices);
      return path;
    }
  }
  std::map<std::array<std::size_t, 4>, std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) {
    auto& cls = classes[len[v]];
    cls.push_back(v);
    if (cls.size() == t + 1) return ColorFiveClique{cls};
  }
  return std::monostate{};
}

bool is_monotone_path(const OrderedColoredGraph& g, const MonotonePath& path) {
  if (path.vertices.empty() || path.color < 1 || path.color > 5) return false;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    if (path.vertices[i] >= path.vertices[i + 1] || path.vertices[i + 1] >= g.size())
      return false;
    if (g.color(path.vertices[i], path.vertices[i + 1]) != path.color) return false;
  }
  return true;
}

bool is_monochromatic_clique(const OrderedColoredGraph& g, const std::vector<std::size_t>& vs,
                             int color) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    if (vs[a] >= g.size()) return false;
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (vs[a] == vs[b] || g.color(vs[a], vs[b]) != color) return false;
  }
  return true;
}

ColoredCompleteGraph::ColoredCompleteGraph(std::size_t n, int fill)
    : n_(n), colors_(n < 2 ? 0 : n * (n - 1) / 2, fill) {}

int ColoredCompleteGraph::color(std::size_t a, std::size_t b) const {
  if (a == b || a >= n_ || b >= n_) throw InputError("colored graph: bad vertex pair");
  if (a > b) std::swap(a, b);
  return colors_[pair_index(a, b, n_)];
}

void ColoredCompleteGraph::set(std::size_t a, std::size_t b, int color) {
  if (a == b || a >= n_ || b >= n_) throw InputError("colored graph: bad vertex pair");
  if (a > b) std::swap(a, b);
  colors_[pair_index(a, b, n_)] = color;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const ColoredCompleteGraph& g, std::size_t k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget) {}

  CliqueSearchResult run() {
    CliqueSearchResult result;
    const std::size_t n = g_.size();
    std::map<int, std::vector<std::size_t>> degree_by_color;  // color -> per-vertex degree
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const int c = g_.color(a, b);
        if (c < 0) continue;
        auto& d = degree_by_color[c];
        d.resize(n, 0);
        ++d[a];
        ++d[b];
      }
    for (const auto& [c, deg] : degree_by_color) {
      color_ = c;
      std::vector<std::size_t> cand;
      for (std::size_t v = 0; v < n; ++v)
        if (deg[v] + 1 >= k_) cand.push_back(v);
      clique_.clear();
      if (extend(cand)) {
        result.status = CliqueStatus::kFound;
        result.color = c;
        result.vertices = clique_;
        break;
      }
      if (exceeded_) {
        result.status = CliqueStatus::kBudgetExceeded;
        break;
      }
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool extend(const std::vector<std::size_t>& cand) {
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    if (clique_.size() == k_) return true;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (clique_.size() + (cand.size() - i) < k_) return false;
      const std::size_t v = cand[i];
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g_.color(v, cand[j]) == color_) next.push_back(cand[j]);
      if (clique_.size() + 1 + next.size() < k_) continue;
      clique_.push_back(v);
      if (extend(next)) return true;
      clique_.pop_back();
      if (exceeded_) return false;
    }
    return false;
  }

  const ColoredCompleteGraph& g_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  int color_ = -1;
  std::vector<std::size_t> clique_;
};

}  // namespace

CliqueSearchResult find_monochromatic_clique(const ColoredCompleteGraph& g, std::size_t k,
                                             std::uint64_t budget) {
  if (k <= 1) {
    CliqueSearchResult r;
    if (g.size() > 0 && k == 1) {
      r.status = CliqueStatus::kFound;
      r.vertices = {0};
    } else if (k == 0) {
      r.status = CliqueStatus::kFound;
    }
    return r;
  }
  return CliqueSearch(g, k, budget).run();
}

std::optional<TransitivityViolation> check_type_transitivity(const TypeTable& table) {
  const std::size_t nu = table.u_size(), nv = table.v_size();
  for (std::size_t s = 0; s < nv; ++s)
    for (std::size_t t = s + 1; t < nv; ++t)
      for (int w = 1; w <= 4; ++w)
        for (std::size_t i = 0; i < nu; ++i)
          for (std::size_t j = i + 1; j < nu; ++j) {
            if (to_int(table.at(i, j, s, t)) != w) continue;
            for (std::size_t l = j + 1; l < nu; ++l)
              if (to_int(table.at(j, l, s, t)) == w && to_int(table.at(i, l, s, t)) != w)
                return TransitivityViolation{w, s, t, i, j, l};
          }
  return std::nullopt;
}

namespace {

struct Label {
  int w = 0;
  std::vector<std::size_t> S;
  auto operator<=>(const Label&) const = default;
};

// Per V-pair labeling outcome.
struct PairLabel {
  std::optional<Label> label;
  std::optional<TransitivityViolation> violation;
};

PairLabel label_pair(const TypeTable& table, std::size_t k, std::size_t s, std::size_t t) {
  const std::size_t nu = table.u_size();
  OrderedColoredGraph g(nu);
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j) g.set(i, j, to_int(table.at(i, j, s, t)));
  PairLabel out;
  const auto found = monotone_path_or_clique(g, k - 1, 2);
  if (const auto* path = std::get_if<MonotonePath>(&found)) {
    const auto& S = path->vertices;
    // Consecutive pairs have color w; a failing pair of minimal gap exposes
    // a transitivity violation on three consecutive-enough vertices.
    for (std::size_t gap = 2; gap < S.size() && !out.violation; ++gap)
      for (std::size_t a = 0; a + gap < S.size(); ++a)
        if (g.color(S[a], S[a + gap]) != path->color) {
          out.violation =
              TransitivityViolation{path->color, s, t, S[a], S[a + 1], S[a + gap]};
          break;
        }
    if (!out.violation) out.label = Label{path->color, S};
  } else if (const auto* clique = std::get_if<ColorFiveClique>(&found)) {
    out.label = Label{5, clique->vertices};
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Whether u_a v_x crosses u_b v_y (local indices into S and T) per the table.
bool table_crosses(const TypeTable& table, const std::vector<std::size_t>& S,
                   const std::vector<std::size_t>& T, std::size_t a, std::size_t x,
                   std::size_t b, std::size_t y) {
  const std::size_t i = std::min(a, b), j = std::max(a, b);
  const std::size_t s = std::min(x, y), t = std::max(x, y);
  const OrderType w = table.at(S[i], S[j], T[s], T[t]);
  if (w == OrderType::kPlane) return false;
  // u_a v_x is the edge at U-position i in the crossing pair.
  const std::size_t x_at_i = (a == i) ? x : y;
  return crosses_outer_pair(w) ? x_at_i == t : x_at_i == s;
}

bool ordering_is_canonical(const TypeTable& table, const std::vector<std::size_t>& S,
                           const std::vector<std::size_t>& T,
                           const std::vector<std::size_t>& pu,
                           const std::vector<std::size_t>& pv) {
  const std::size_t k = pu.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
          if (i == j || s == t) continue;
          if (table_crosses(table, S, T, pu[i], pv[s], pu[j], pv[t]) !=
              canonical_ckk_crossing(i, s, j, t))
            return false;
        }
  return true;
}

}  // namespace

ExtractionResult find_weak_ckk(const TypeTable& table, std::size_t k, std::size_t jobs,
                               std::uint64_t budget) {
  if (k < 2) throw InputError("find_weak_ckk: k must be at least 2");
  const std::size_t nu = table.u_size(), nv = table.v_size();
  ExtractionResult result{InsufficientV{}};
  if (nu < k || nv < k) return result;

  const std::size_t pairs = nv * (nv - 1) / 2;
  std::vector<PairLabel> labels(pairs);
  parallel_chunks(nv, jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t s = begin; s < end; ++s)
      for (std::size_t t = s + 1; t < nv; ++t)
        labels[pair_index(s, t, nv)] = label_pair(table, k, s, t);
  });
  for (std::size_t s = 0; s < nv; ++s)
    for (std::size_t t = s + 1; t < nv; ++t)
      if (const auto& v = labels[pair_index(s, t, nv)].violation) {
        result.outcome = *v;
        return result;
      }

  std::map<Label, int> ids;
  for (const auto& pl : labels) {
    if (!pl.label) {
      ++result.unlabeled_pairs;
      continue;
    }
    ++result.labeled_pairs;
    ids.try_emplace(*pl.label, 0);
  }
  int next = 0;
  for (auto& [label, id] : ids) id = next++;
  result.distinct_labels = ids.size();
  if (result.distinct_labels > 4 * binomial(nu, k) + binomial(nu, 3))
    throw InconsistencyError("find_weak_ckk: more labels than the label-space bound");
  std::vector<const Label*> by_id(ids.size());
  for (const auto& [label, id] : ids) by_id[id] = &label;

  auto search = [&](bool allow_plane) {
    ColoredCompleteGraph lg(nv);
    for (std::size_t s = 0; s < nv; ++s)
      for (std::size_t t = s + 1; t < nv; ++t) {
        const auto& pl = labels[pair_index(s, t, nv)];
        if (pl.label && (allow_plane || pl.label->w != 5)) lg.set(s, t, ids.at(*pl.label));
      }
    auto r = find_monochromatic_clique(lg, k, budget);
    result.clique_nodes += r.nodes;
    return r;
  };

  auto found = search(false);
  if (found.status == CliqueStatus::kNone) found = search(true);
  if (found.status == CliqueStatus::kBudgetExceeded) {
    result.outcome = ExtractionBudgetExceeded{};
    return result;
  }
  if (found.status == CliqueStatus::kNone) {
    result.outcome = InsufficientV{};
    return result;
  }

  const Label& label = *by_id[static_cast<std::size_t>(found.color)];
  std::vector<std::size_t> T = found.vertices;
  std::ranges::sort(T);
  if (label.w == 5) {
    result.outcome = PlaneK3kCertificate{label.S, T};
    return result;
  }

  CkkWitness w;
  w.S = label.S;
  w.T = T;
  w.type = static_cast<OrderType>(label.w);
  std::vector<std::size_t> id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = i;
  std::vector<std::size_t> rev(id.rbegin(), id.rend());
  const bool keep = ordering_is_canonical(table, w.S, w.T, id, id);
  const bool flip = ordering_is_canonical(table, w.S, w.T, id, rev);
  if (keep == flip)
    throw InconsistencyError("find_weak_ckk: expected exactly one V-order to match C_{k,k}");
  w.v_reversed = flip;
  w.u_order = w.S;
  for (std::size_t x = 0; x < k; ++x) w.v_order.push_back(w.T[flip ? k - 1 - x : x]);
  result.outcome = std::move(w);
  return result;
}

bool validate_ckk_witness(const TypeTable& table, const CkkWitness& w) {
  const std::size_t k = w.S.size();
  if (k < 2 || w.T.size() != k || w.u_order.size() != k || w.v_order.size() != k) return false;
  if (!std::ranges::is_sorted(w.S) || !std::ranges::is_sorted(w.T)) return false;
  if (std::ranges::adjacent_find(w.S) != w.S.end() || std::ranges::adjacent_find(w.T) != w.T.end())
    return false;
  if (w.S.back() >= table.u_size() || w.T.back() >= table.v_size()) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t)
          if (table.at(w.S[i], w.S[j], w.T[s], w.T[t]) != w.type) return false;
  // Positions of the witness orders inside S and T.
  std::vector<std::size_t> pu(k), pv(k);
  for (std::size_t x = 0; x < k; ++x) {
    const auto iu = std::ranges::find(w.S, w.u_order[x]);
    const auto iv = std::ranges::find(w.T, w.v_order[x]);
    if (iu == w.S.end() || iv == w.T.end()) return false;
    pu[x] = static_cast<std::size_t>(iu - w.S.begin());
    pv[x] = static_cast<std::size_t>(iv - w.T.begin());
  }
  return ordering_is_canonical(table, w.S, w.T, pu, pv);
}

TypeTable uniform_type_table(std::size_t u, std::size_t v, OrderType w) {
  std::vector<std::string> U, V;
  for (std::size_t i = 0; i < u; ++i) U.push_back("u" + std::to_string(i + 1));
  for (std::size_t i = 0; i < v; ++i) V.push_back("v" + std::to_string(i + 1));
  TypeTable table(U, V);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = i + 1; j < u; ++j)
      for (std::size_t s = 0; s < v; ++s)
        for (std::size_t t = s + 1; t < v; ++t) table.set(i, j, s, t, w);
  return table;
}

}  // namespace sdraw

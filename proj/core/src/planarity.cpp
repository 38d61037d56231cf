#include "sdraw/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sdraw/errors.hpp"

namespace sdraw {

namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;
  [[nodiscard]] bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
  int id = kNone;
};

class LeftRightTest {
 public:
  LeftRightTest(std::size_t n, std::span<const Edge> edges)
      : n_(n), edges_(edges.begin(), edges.end()) {}

  bool run() {
    const std::size_t m = edges_.size();
    if (n_ >= 3 && m > 3 * n_ - 6) return false;

    adj_.assign(n_, {});
    for (std::size_t e = 0; e < m; ++e) {
      adj_[edges_[e].u].push_back(static_cast<int>(e));
      adj_[edges_[e].v].push_back(static_cast<int>(e));
    }
    tail_.assign(m, kNone);
    head_.assign(m, kNone);
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_.assign(m, 0);
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);

    std::vector<int> roots;
    for (std::size_t v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(static_cast<int>(v));
        orient(static_cast<int>(v));
      }
    }

    out_.assign(n_, {});
    for (std::size_t e = 0; e < m; ++e) out_[tail_[e]].push_back(static_cast<int>(e));
    for (auto& list : out_)
      std::ranges::stable_sort(list, [&](int a, int b) { return nesting_[a] < nesting_[b]; });

    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, kNone);
    stack_.clear();
    for (int r : roots)
      if (!test(r)) return false;
    return true;
  }

 private:
  void orient(int v) {
    const int e = parent_edge_[v];
    for (int ei : adj_[v]) {
      if (tail_[ei] != kNone) continue;
      const int w = static_cast<int>(edges_[ei].other(static_cast<VertexId>(v)));
      tail_[ei] = v;
      head_[ei] = w;
      lowpt_[ei] = height_[v];
      lowpt2_[ei] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = ei;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[ei] = height_[w];
      }
      nesting_[ei] = 2 * lowpt_[ei] + (lowpt2_[ei] < height_[v] ? 1 : 0);
      if (e != kNone) {
        if (lowpt_[ei] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
          lowpt_[e] = lowpt_[ei];
        } else if (lowpt_[ei] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
        }
      }
    }
  }

  [[nodiscard]] int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  [[nodiscard]] bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  [[nodiscard]] int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    for (int ei : out_[v]) {
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[head_[ei]]) {
        if (!test(head_[ei])) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back({Interval{}, Interval{ei, ei}, next_id_++});
      }
      if (lowpt_[ei] < height_[v]) {
        if (ei == out_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (top_id() != stack_bottom_[ei]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) {
      p.id = next_id_++;
      stack_.push_back(p);
    }
    return true;
  }

  void remove_back_edges(int e) {
    const int u = tail_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && head_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && head_[p.right.high] == u)
        p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_, out_;
  std::vector<int> tail_, head_, lowpt_, lowpt2_, nesting_, height_, parent_edge_;
  std::vector<int> ref_, lowpt_edge_, stack_bottom_;
  std::vector<ConflictPair> stack_;
  int next_id_ = 0;
};

}  // namespace

bool is_planar(std::size_t n, std::span<const Edge> edges) {
  return LeftRightTest(n, edges).run();
}

bool is_planar(const Graph& g) { return is_planar(g.vertex_count(), g.edges()); }

std::size_t count_faces(const Graph& g, const RotationSystem& rot) {
  const std::size_t n = g.vertex_count();
  // position of w in rot[v]
  std::vector<std::map<VertexId, std::size_t>> pos(n);
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = i;
  // dart (u -> v) identified by (v, index of u in rot[v])
  std::vector<std::vector<char>> seen(n);
  for (VertexId v = 0; v < n; ++v) seen[v].assign(rot[v].size(), 0);
  std::size_t faces = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t q = 0; q < rot[v].size(); ++q) {
      if (seen[v][q]) continue;
      ++faces;
      VertexId x = v;
      std::size_t i = q;
      while (!seen[x][i]) {
        seen[x][i] = 1;
        const VertexId y = rot[x][(i + 1) % rot[x].size()];
        const std::size_t j = pos[y].at(x);
        x = y;
        i = j;
      }
    }
  }
  return faces;
}

bool is_planar_rotation_system(const Graph& g, const RotationSystem& rot) {
  const std::size_t n = g.vertex_count();
  if (rot.size() != n) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (rot[v].size() != g.degree(v)) return false;
    std::set<VertexId> s(rot[v].begin(), rot[v].end());
    if (s.size() != rot[v].size()) return false;
    for (VertexId w : rot[v])
      if (!g.adjacent(v, w)) return false;
  }
  // Euler per component: V - E + F = 2, isolated vertices contribute one
  // "face" each only in the formula V - E + F = 1 + C once faces are counted
  // over non-trivial components.
  std::size_t nontrivial = 0, nontrivial_vertices = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() > 1) {
      ++nontrivial;
      nontrivial_vertices += comp.size();
    }
  }
  const std::size_t faces = count_faces(g, rot);
  // sum over nontrivial components of (V_i - E_i + F_i) must be 2 * count
  return nontrivial_vertices + faces == 2 * nontrivial + g.edge_count();
}

namespace {

class ExhaustiveEmbedder {
 public:
  explicit ExhaustiveEmbedder(const Graph& g) : g_(g), rot_(g.vertex_count()) {}

  std::optional<RotationSystem> run() {
    std::vector<char> present(g_.vertex_count(), 0);
    std::vector<char> used(g_.edge_count(), 0);
    for (VertexId root = 0; root < g_.vertex_count(); ++root) {
      if (present[root]) continue;
      present[root] = 1;
      std::vector<VertexId> queue{root};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const VertexId v = queue[qi];
        for (VertexId w : g_.neighbors(v)) {
          const EdgeId e = *g_.find_edge(v, w);
          if (used[e]) continue;
          used[e] = 1;
          order_.push_back({v, w});
          if (!present[w]) {
            present[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    if (!place(0)) return std::nullopt;
    return rot_;
  }

 private:
  // face id for dart (rot[x][q] -> x), i.e. the corner after position q at x
  std::vector<std::vector<int>> faces() const {
    const std::size_t n = rot_.size();
    std::vector<std::vector<int>> id(n);
    for (std::size_t v = 0; v < n; ++v) id[v].assign(rot_[v].size(), -1);
    int next = 0;
    for (VertexId v = 0; v < n; ++v) {
      for (std::size_t q = 0; q < rot_[v].size(); ++q) {
        if (id[v][q] >= 0) continue;
        VertexId x = v;
        std::size_t i = q;
        while (id[x][i] < 0) {
          id[x][i] = next;
          const VertexId y = rot_[x][(i + 1) % rot_[x].size()];
          const auto j = static_cast<std::size_t>(std::ranges::find(rot_[y], x) - rot_[y].begin());
          x = y;
          i = j;
        }
        ++next;
      }
    }
    return id;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const auto [a, b] = order_[idx];
    if (rot_[b].empty()) {
      // New vertex b hangs off a; every corner of a is a distinct choice.
      const std::size_t choices = std::max<std::size_t>(rot_[a].size(), 1);
      for (std::size_t p = 0; p < choices; ++p) {
        rot_[a].insert(rot_[a].begin() + static_cast<std::ptrdiff_t>(p), b);
        rot_[b].push_back(a);
        if (place(idx + 1)) return true;
        rot_[b].pop_back();
        rot_[a].erase(rot_[a].begin() + static_cast<std::ptrdiff_t>(p));
      }
      return false;
    }
    const auto id = faces();
    for (std::size_t qa = 0; qa < rot_[a].size(); ++qa) {
      for (std::size_t qb = 0; qb < rot_[b].size(); ++qb) {
        if (id[a][qa] != id[b][qb]) continue;
        // Insert after position q: between rot[x][q] and rot[x][q+1].
        rot_[a].insert(rot_[a].begin() + static_cast<std::ptrdiff_t>(qa + 1), b);
        rot_[b].insert(rot_[b].begin() + static_cast<std::ptrdiff_t>(qb + 1), a);
        if (place(idx + 1)) return true;
        rot_[b].erase(rot_[b].begin() + static_cast<std::ptrdiff_t>(qb + 1));
        rot_[a].erase(rot_[a].begin() + static_cast<std::ptrdiff_t>(qa + 1));
      }
    }
    return false;
  }

  const Graph& g_;
  RotationSystem rot_;
  std::vector<std::pair<VertexId, VertexId>> order_;
};

}  // namespace

std::optional<RotationSystem> exhaustive_planar_embedding(const Graph& g) {
  return ExhaustiveEmbedder(g).run();
}

std::string_view to_string(KuratowskiKind kind) {
  return kind == KuratowskiKind::kK5 ? "K5" : "K3,3";
}

PlanarityCertificate planarity_certificate(const Graph& g,
                                           std::size_t embedding_vertex_limit) {
  PlanarityCertificate cert;
  cert.planar = is_planar(g);
  if (cert.planar) {
    if (g.vertex_count() <= embedding_vertex_limit)
      cert.embedding = exhaustive_planar_embedding(g);
    return cert;
  }
  std::vector<Edge> kept(g.edges().begin(), g.edges().end());
  std::vector<EdgeId> ids(g.edge_count());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Edge> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_planar(g.vertex_count(), trial)) {
      kept = std::move(trial);
      ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  cert.kuratowski_edges = ids;
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge& e : kept) {
    ++deg[e.u];
    ++deg[e.v];
  }
  const auto branch = std::ranges::count_if(deg, [](std::size_t d) { return d >= 3; });
  if (branch == 5) cert.kuratowski_kind = KuratowskiKind::kK5;
  if (branch == 6) cert.kuratowski_kind = KuratowskiKind::kK33;
  return cert;
}

}  // namespace sdraw

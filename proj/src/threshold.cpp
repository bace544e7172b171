#include "tropigraph/threshold.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

#include "tropigraph/error.hpp"

namespace tropigraph {

namespace {

std::optional<AlternatingC4> find_alternating_c4(const Graph& g,
                                                 std::span<const Vertex> within) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < within.size(); ++i) {
    for (std::size_t j = i + 1; j < within.size(); ++j) {
      if (g.adjacent(within[i], within[j])) edges.emplace_back(within[i], within[j]);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (!g.adjacent(e.u, f.u) && !g.adjacent(e.v, f.v)) {
        return AlternatingC4{e.u, e.v, f.u, f.v};
      }
      if (!g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u)) {
        return AlternatingC4{e.u, e.v, f.v, f.u};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ThresholdCertificate threshold_certificate(const Graph& g) {
  const int n = g.order();
  std::vector<bool> removed(n, false);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  int remaining = n;
  CreationSequence peeled;
  peeled.reserve(n);
  while (remaining > 0) {
    std::optional<CreationEntry> pick;
    for (Vertex v = 0; v < n && !pick; ++v) {
      if (removed[v]) continue;
      if (degree[v] == 0) {
        pick = CreationEntry{v, CreationStep::Isolated};
      } else if (degree[v] == remaining - 1) {
        pick = CreationEntry{v, CreationStep::Dominating};
      }
    }
    if (!pick) {
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v) {
        if (!removed[v]) rest.push_back(v);
      }
      auto witness = find_alternating_c4(g, rest);
      if (!witness) throw Error("internal: stuck without an alternating C4");
      return ThresholdCertificate{*witness};
    }
    removed[pick->vertex] = true;
    --remaining;
    for (Vertex w : g.neighbors(pick->vertex)) {
      if (!removed[w]) --degree[w];
    }
    peeled.push_back(*pick);
  }
  std::reverse(peeled.begin(), peeled.end());
  if (!peeled.empty()) peeled.front().step = CreationStep::Isolated;
  return ThresholdCertificate{std::move(peeled)};
}

bool is_threshold(const Graph& g) { return threshold_certificate(g).is_threshold(); }

Graph replay(const CreationSequence& sequence, int n) {
  Graph g(n);
  std::vector<Vertex> placed;
  std::vector<bool> seen(n, false);
  for (const auto& [v, step] : sequence) {
    if (v < 0 || v >= n || seen[v]) {
      throw BadParameter("creation sequence is not a permutation");
    }
    seen[v] = true;
    if (step == CreationStep::Dominating) {
      for (Vertex u : placed) g.add_edge(u, v);
    }
    placed.push_back(v);
  }
  if (static_cast<int>(placed.size()) != n) {
    throw BadParameter("creation sequence misses vertices");
  }
  return g;
}

bool witness_holds(const Graph& g, const AlternatingC4& w) {
  const Vertex vs[] = {w.a, w.b, w.c, w.d};
  for (int i = 0; i < 4; ++i) {
    if (vs[i] < 0 || vs[i] >= g.order()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  return g.adjacent(w.a, w.b) && g.adjacent(w.c, w.d) && !g.adjacent(w.a, w.c) &&
         !g.adjacent(w.b, w.d);
}

bool ThresholdRealization::realizes(const Graph& g) const {
  if (static_cast<int>(weights.size()) != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if ((weights[u] + weights[v] >= threshold) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

ThresholdRealization threshold_weights(const Graph& g, const Rational& t) {
  const auto cert = threshold_certificate(g);
  if (!cert.is_threshold()) throw NotThreshold("graph is not a threshold graph");
  const int n = g.order();
  // Later vertices move further from t/2: dominating ones upwards, isolated
  // ones downwards, so each pair is decided by its later vertex.
  const Rational scale = t > 0 ? t : Rational(1);
  const Rational step = scale / (2 * (n + 1));
  ThresholdRealization out;
  out.threshold = t;
  out.weights.assign(n, Rational(0));
  int index = 0;
  for (const auto& [v, kind] : cert.creation_sequence()) {
    ++index;
    const Rational offset = step * index;
    out.weights[v] = kind == CreationStep::Dominating ? t / 2 + offset : t / 2 - offset;
  }
  return out;
}

Graph CoverSolution::part_graph(std::size_t i, int n) const {
  return Graph(n, parts.at(i));
}

bool cover_is_valid(const Graph& g, const CoverSolution& cover) {
  const int n = g.order();
  Graph combined = cover.mode == CoverMode::Union ? Graph(n) : complement(Graph(n));
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    Graph part(n);
    for (const Edge& e : cover.parts[i]) {
      if (e.u < 0 || e.v >= n || e.u == e.v) return false;
      part.add_edge(e.u, e.v);
    }
    if (!is_threshold(part)) return false;
    combined = cover.mode == CoverMode::Union ? graph_union(combined, part)
                                              : graph_intersection(combined, part);
  }
  if (cover.parts.empty() && cover.mode == CoverMode::Intersection) {
    return g == complement(Graph(n));
  }
  return combined == g;
}

// --- exact threshold cover ------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Whether some threshold graph T satisfies required <= T <= allowed (edge
// sets as adjacency rows). A vertex with no required edges into the rest can
// be isolated, one allowed to see all of the rest can dominate, and peeling
// either kind preserves solvability. When `completion` is given it receives
// the rows of such a T.
bool threshold_sandwich(std::span<const Mask> required, std::span<const Mask> allowed,
                        std::vector<Mask>* completion) {
  const int n = static_cast<int>(required.size());
  Mask remaining = all_vertices(n);
  if (completion != nullptr) completion->assign(n, 0);
  while (remaining != 0) {
    bool progressed = false;
    for (Mask scan = remaining; scan != 0; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      const Mask others = remaining & ~bit(v);
      if ((required[v] & others) == 0) {
        remaining = others;
        progressed = true;
      } else if ((allowed[v] & others) == others) {
        if (completion != nullptr) {
          (*completion)[v] |= others;
          for (Mask o = others; o != 0; o &= o - 1) {
            (*completion)[std::countr_zero(o)] |= bit(v);
          }
        }
        remaining = others;
        progressed = true;
      }
    }
    if (!progressed) return false;
  }
  return true;
}

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : n_(g.order()), edges_(g.edges()) {
    allowed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) allowed_[v] = g.row_mask(v);
    const std::size_t m = edges_.size();
    conflicts_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (incompatible(g, edges_[i], edges_[j])) {
          conflicts_[i][j] = conflicts_[j][i] = true;
        }
      }
    }
  }

  static bool incompatible(const Graph& g, const Edge& e, const Edge& f) {
    if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return false;
    return (!g.adjacent(e.u, f.u) && !g.adjacent(e.v, f.v)) ||
           (!g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u));
  }

  // Size of a greedily grown set of pairwise incompatible edges.
  int greedy_conflict_clique() const {
    const std::size_t m = edges_.size();
    std::vector<std::size_t> order(m);
    std::vector<int> deg(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      order[i] = i;
      for (std::size_t j = 0; j < m; ++j) deg[i] += conflicts_[i][j] ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> clique;
    for (std::size_t e : order) {
      bool ok = true;
      for (std::size_t c : clique) ok = ok && conflicts_[e][c];
      if (ok) clique.push_back(e);
    }
    return static_cast<int>(clique.size());
  }

  // Tries to split the edges into k classes, each sandwiched between its own
  // edges and E(G) by a threshold graph.
  std::optional<CoverSolution> solve(int k) {
    classes_.assign(k, Class{std::vector<Mask>(n_, 0), std::vector<std::size_t>{}});
    assigned_.assign(edges_.size(), false);
    used_ = 0;
    if (!search(k, edges_.size())) return std::nullopt;
    CoverSolution out;
    out.mode = CoverMode::Union;
    for (int c = 0; c < used_; ++c) {
      std::vector<Mask> rows;
      threshold_sandwich(classes_[c].required, allowed_, &rows);
      std::vector<Edge> part;
      for (Vertex u = 0; u < n_; ++u) {
        for (Mask r = rows[u] & ~(bit(u + 1) - 1); r != 0; r &= r - 1) {
          part.emplace_back(u, std::countr_zero(r));
        }
      }
      out.parts.push_back(std::move(part));
    }
    return out;
  }

 private:
  struct Class {
    std::vector<Mask> required;
    std::vector<std::size_t> members;
  };

  bool fits(const Class& cls, std::size_t e) {
    for (std::size_t f : cls.members) {
      if (conflicts_[e][f]) return false;
    }
    const Edge& edge = edges_[e];
    scratch_ = cls.required;
    scratch_[edge.u] |= bit(edge.v);
    scratch_[edge.v] |= bit(edge.u);
    return threshold_sandwich(scratch_, allowed_, nullptr);
  }

  void place(int c, std::size_t e) {
    const Edge& edge = edges_[e];
    classes_[c].required[edge.u] |= bit(edge.v);
    classes_[c].required[edge.v] |= bit(edge.u);
    classes_[c].members.push_back(e);
    assigned_[e] = true;
  }

  void unplace(int c, std::size_t e) {
    const Edge& edge = edges_[e];
    classes_[c].required[edge.u] &= ~bit(edge.v);
    classes_[c].required[edge.v] &= ~bit(edge.u);
    classes_[c].members.pop_back();
    assigned_[e] = false;
  }

  // Most-constrained edge first; classes tried in index order, with at most
  // one fresh class per branch.
  bool search(int k, std::size_t left) {
    if (left == 0) return true;
    std::size_t best_edge = edges_.size();
    std::vector<int> best_options;
    int best_count = k + 1;
    std::vector<int> options;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (assigned_[e]) continue;
      options.clear();
      for (int c = 0; c < used_; ++c) {
        if (fits(classes_[c], e)) options.push_back(c);
      }
      if (used_ < k) options.push_back(used_);
      const int count = static_cast<int>(options.size());
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best_edge = e;
        best_options = options;
        if (count == 1) break;
      }
    }
    for (int c : best_options) {
      const bool fresh = c == used_;
      if (fresh) ++used_;
      place(c, best_edge);
      if (search(k, left - 1)) return true;
      unplace(c, best_edge);
      if (fresh) --used_;
    }
    return false;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<Mask> allowed_;
  std::vector<std::vector<bool>> conflicts_;
  std::vector<Class> classes_;
  std::vector<bool> assigned_;
  std::vector<Mask> scratch_;
  int used_ = 0;
};

void check_theta_limits(const Graph& g, const SearchLimits& limits) {
  if (g.order() > std::min(limits.theta_vertices, 64) ||
      static_cast<int>(g.size()) > limits.theta_edges) {
    throw TooLarge("exact threshold cover limited to " +
                   std::to_string(limits.theta_vertices) + " vertices / " +
                   std::to_string(limits.theta_edges) + " edges (graph has " +
                   std::to_string(g.order()) + " / " + std::to_string(g.size()) +
                   ")");
  }
}

}  // namespace

CoverSolution star_cover(const Graph& g, std::span<const Vertex> independent) {
  std::vector<bool> in_set(g.order(), false);
  for (Vertex v : independent) in_set.at(v) = true;
  Graph covered(g.order());
  CoverSolution out;
  out.mode = CoverMode::Union;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_set[v]) continue;
    std::vector<Edge> star;
    for (Vertex w : g.neighbors(v)) {
      if (!covered.adjacent(v, w)) {
        star.emplace_back(v, w);
        covered.add_edge(v, w);
      }
    }
    if (!star.empty()) out.parts.push_back(std::move(star));
  }
  if (covered != g) throw BadParameter("star cover needs an independent set");
  return out;
}

ThetaBounds theta_bounds(const Graph& g, const SearchLimits& limits) {
  if (g.size() == 0) return {0, 0};
  const int upper = g.order() - alpha(g, limits.alpha_vertices);
  if (is_triangle_free(g)) return {upper, upper};
  const int lower = g.order() <= 64 ? CoverSearch(g).greedy_conflict_clique() : 1;
  return {std::max(1, std::min(lower, upper)), upper};
}

CoverSolution theta(const Graph& g, const SearchLimits& limits) {
  check_theta_limits(g, limits);
  if (g.size() == 0) return CoverSolution{CoverMode::Union, {}};
  CoverSolution fallback = star_cover(g, max_independent_set(g, limits.alpha_vertices));
  CoverSearch search(g);
  // The search starts from the conflict bound only; the triangle-free
  // equality in theta_bounds is never used here.
  const int lower = std::max(1, search.greedy_conflict_clique());
  for (int k = lower; k < fallback.size(); ++k) {
    if (auto found = search.solve(k)) return *found;
  }
  return fallback;
}

CoverSolution theta_hat(const Graph& g, const SearchLimits& limits) {
  const Graph co = complement(g);
  const CoverSolution cover = theta(co, limits);
  CoverSolution out;
  out.mode = CoverMode::Intersection;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    out.parts.push_back(complement(cover.part_graph(i, g.order())).edges());
  }
  return out;
}

std::vector<Vertex> max_induced_threshold(const Graph& g, const SearchLimits& limits) {
  const int n = g.order();
  if (n > std::min(limits.induced_vertices, 64)) {
    throw TooLarge("induced threshold search limited to " +
                   std::to_string(std::min(limits.induced_vertices, 64)) +
                   " vertices");
  }
  std::vector<Mask> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.row_mask(v);

  auto induces_threshold = [&](Mask set) {
    Mask remaining = set;
    while (remaining != 0) {
      bool progressed = false;
      for (Mask scan = remaining; scan != 0; scan &= scan - 1) {
        const int v = std::countr_zero(scan);
        const Mask others = remaining & ~bit(v);
        const Mask seen = rows[v] & others;
        if (seen == 0 || seen == others) {
          remaining = others;
          progressed = true;
        }
      }
      if (!progressed) return false;
    }
    return true;
  };

  Mask best = 0;
  int best_size = 0;
  // Include/exclude in vertex order; an infeasible partial set stays
  // infeasible because thresholdness is hereditary.
  auto dfs = [&](auto&& self, int v, Mask chosen, int size) -> void {
    if (size + (n - v) <= best_size) return;
    if (v == n) {
      best = chosen;
      best_size = size;
      return;
    }
    const Mask with = chosen | bit(v);
    if (induces_threshold(with)) self(self, v + 1, with, size + 1);
    self(self, v + 1, chosen, size);
  };
  dfs(dfs, 0, 0, 0);

  std::vector<Vertex> out;
  for (Mask b = best; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

}  // namespace tropigraph

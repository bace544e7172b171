#include "tropigraph/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "tropigraph/error.hpp"
#include "tropigraph/verifier.hpp"

namespace tropigraph {

namespace {

void require_positive_threshold(const Rational& t) {
  if (t <= 0) throw BadParameter("threshold must be positive");
}

}  // namespace

namespace {

// Column j pairs an earlier edge uv at t/2 + t/2 = t when both u and v miss
// j. Such columns switch to t/6, 7t/6, 2t/3, which keeps the j-pairs at
// exactly 4t/3 and 5t/6 and every earlier pair at 4t/3 or more.
bool column_needs_lift(const Graph& g, Vertex j) {
  for (Vertex u = 0; u < j; ++u) {
    if (g.adjacent(u, j)) continue;
    for (Vertex v = u + 1; v < j; ++v) {
      if (g.adjacent(u, v) && !g.adjacent(v, j)) return true;
    }
  }
  return false;
}

}  // namespace

Representation minplus_generic(const Graph& g, const Rational& t) {
  require_positive_threshold(t);
  const int n = g.order();
  if (n < 1) throw BadParameter("graph must have a vertex");
  struct Column {
    Rational diag, edge, non_edge;
  };
  std::vector<Column> cols;
  for (Vertex j = 0; j < n; ++j) {
    if (column_needs_lift(g, j)) {
      cols.push_back({t / 6, t * 7 / 6, t * 2 / 3});
    } else {
      cols.push_back({t / 3, t, t / 2});
    }
  }
  Representation rep;
  rep.algebra = Algebra::MinPlus;
  rep.threshold = t;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<TropicalValue> row;
    row.reserve(n);
    for (Vertex j = 0; j < n; ++j) {
      if (j < i) {
        row.push_back(TropicalValue::pos_inf());
      } else if (j == i) {
        row.emplace_back(cols[j].diag);
      } else {
        row.emplace_back(g.adjacent(i, j) ? cols[j].edge : cols[j].non_edge);
      }
    }
    rep.vectors.emplace_back(std::move(row));
  }
  return rep;
}

Representation minplus_extend_vertex(const Representation& rep, const Graph& g,
                                     Vertex v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw BadParameter("vertex out of range");
  if (rep.algebra != Algebra::MinPlus) {
    throw InvalidInputRepresentation("extension needs a min-plus representation");
  }
  std::vector<Vertex> others;
  for (Vertex u = 0; u < n; ++u) {
    if (u != v) others.push_back(u);
  }
  if (rep.order() != n - 1) {
    throw InvalidInputRepresentation("representation must cover g - v");
  }
  try {
    rep.validate();
  } catch (const InvalidRepresentation& e) {
    throw InvalidInputRepresentation(e.what());
  }
  if (n > 1 && !verify(induced(g, others), rep).valid) {
    throw InvalidInputRepresentation("representation does not represent g - v");
  }
  const Rational& t = rep.threshold;
  const std::size_t k = n > 1 ? static_cast<std::size_t>(rep.dim()) : 0;
  Representation out;
  out.algebra = Algebra::MinPlus;
  out.threshold = t;
  out.vectors.reserve(n);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) {
      std::vector<TropicalValue> row(k, TropicalValue::pos_inf());
      row.emplace_back(Rational(t / 3));
      out.vectors.emplace_back(std::move(row));
      continue;
    }
    const auto& old = rep.vectors[u < v ? u : u - 1];
    out.vectors.push_back(
        append(old, g.adjacent(u, v) ? TropicalValue(t) : TropicalValue(Rational(t / 2))));
  }
  return out;
}

Representation minplus_by_extension(const Graph& g, const Rational& t) {
  require_positive_threshold(t);
  const int n = g.order();
  if (n < 1) throw BadParameter("graph must have a vertex");
  if (n == 1) {
    return Representation{Algebra::MinPlus, t, {TropicalVector{TropicalValue(t)}}};
  }
  // Seed on {0, 1}: t + t >= t for an edge, 0 + 0 < t otherwise.
  const TropicalValue seed = g.adjacent(0, 1) ? TropicalValue(t) : TropicalValue(0);
  Representation rep{Algebra::MinPlus, t, {TropicalVector{seed}, TropicalVector{seed}}};
  std::vector<Vertex> prefix{0, 1};
  for (Vertex v = 2; v < n; ++v) {
    prefix.push_back(v);
    rep = minplus_extend_vertex(rep, induced(g, prefix), v);
  }
  return rep;
}

Representation minplus_from_induced_threshold(const Graph& g, const Rational& t,
                                              const SearchLimits& limits) {
  require_positive_threshold(t);
  std::vector<Vertex> core = max_induced_threshold(g, limits);
  if (core.empty()) throw BadParameter("graph must have a vertex");
  Representation rep = threshold_1dim(induced(g, core), t);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::binary_search(core.begin(), core.end(), v)) continue;
    const auto pos = std::upper_bound(core.begin(), core.end(), v);
    const auto index = static_cast<Vertex>(pos - core.begin());
    core.insert(pos, v);
    rep = minplus_extend_vertex(rep, induced(g, core), index);
  }
  return rep;
}

Representation maxplus_generic(const Graph& g, const Rational& t) {
  require_positive_threshold(t);
  const int n = g.order();
  if (n < 1) throw BadParameter("graph must have a vertex");
  Representation rep;
  rep.algebra = Algebra::MaxPlus;
  rep.threshold = t;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<TropicalValue> row;
    row.reserve(n);
    for (Vertex j = 0; j < n; ++j) {
      if (j == i) {
        row.emplace_back(t);
      } else {
        row.emplace_back(g.adjacent(i, j) ? Rational(t / 3) : Rational(-t / 3));
      }
    }
    rep.vectors.emplace_back(std::move(row));
  }
  return rep;
}

Representation maxplus_generic_unrepaired(const Graph& g, const Rational& t) {
  require_positive_threshold(t);
  const int n = g.order();
  Representation rep;
  rep.algebra = Algebra::MaxPlus;
  rep.threshold = t;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<TropicalValue> row;
    for (Vertex j = 0; j < n; ++j) {
      if (j == i) {
        row.emplace_back(t);
      } else {
        row.emplace_back(g.adjacent(i, j) ? Rational(t / 3) : Rational(0));
      }
    }
    rep.vectors.emplace_back(std::move(row));
  }
  return rep;
}

Representation rescale(const Representation& rep, const Rational& new_t) {
  require_positive_threshold(new_t);
  const Rational factor = new_t / rep.threshold;
  Representation out;
  out.algebra = rep.algebra;
  out.threshold = new_t;
  for (const auto& vec : rep.vectors) {
    std::vector<TropicalValue> row;
    row.reserve(vec.dim());
    for (const auto& x : vec) {
      row.push_back(x.is_finite() ? TropicalValue(Rational(x.value() * factor)) : x);
    }
    out.vectors.emplace_back(std::move(row));
  }
  return out;
}

Representation threshold_1dim(const Graph& g, const Rational& t, Algebra alg) {
  require_positive_threshold(t);
  const ThresholdRealization w = threshold_weights(g, t);
  Representation rep;
  rep.algebra = alg;
  rep.threshold = t;
  for (const auto& weight : w.weights) rep.vectors.push_back(TropicalVector{weight});
  return rep;
}

namespace {

Representation from_parts(const Graph& g, const CoverSolution& cover, Algebra alg,
                          CoverMode mode) {
  if (cover.mode != mode) {
    throw InvalidCover(mode == CoverMode::Union ? "expected a union cover"
                                                : "expected an intersection cover");
  }
  if (!cover_is_valid(g, cover)) throw InvalidCover("cover does not produce the graph");
  const int n = g.order();
  std::vector<Graph> parts;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) parts.push_back(cover.part_graph(i, n));
  if (parts.empty()) {
    // Edgeless (union) or complete (intersection): one trivial part.
    parts.push_back(mode == CoverMode::Union ? Graph(n) : complement(Graph(n)));
  }
  std::vector<std::vector<TropicalValue>> rows(n);
  for (const Graph& part : parts) {
    const ThresholdRealization w = threshold_weights(part, 1);
    for (Vertex v = 0; v < n; ++v) rows[v].emplace_back(w.weights[v]);
  }
  Representation rep;
  rep.algebra = alg;
  rep.threshold = 1;
  for (auto& row : rows) rep.vectors.emplace_back(std::move(row));
  return rep;
}

}  // namespace

Representation maxplus_from_cover(const Graph& g, const CoverSolution& cover) {
  return from_parts(g, cover, Algebra::MaxPlus, CoverMode::Union);
}

Representation minplus_from_intersection(const Graph& g, const CoverSolution& cover) {
  return from_parts(g, cover, Algebra::MinPlus, CoverMode::Intersection);
}

namespace {

// Vector of spine vertex p_i (1-based global label i).
TropicalVector spine_vector(int i, int k) {
  const int d = (i - 1) / 2;
  const Rational base = k + d;
  if (i % 2 == 1) {
    return TropicalVector{TropicalValue(Rational(1 / base)),
                          TropicalValue(Rational(base / (base + 1)))};
  }
  return TropicalVector{TropicalValue(Rational(base / (base + 1))),
                        TropicalValue(Rational(1 / (base + 1)))};
}

TropicalVector leaf_vector(const TropicalVector& spine) {
  return TropicalVector{TropicalValue(Rational(1 - spine[0].value())),
                        TropicalValue(Rational(1 - spine[1].value()))};
}

}  // namespace

Representation forest_of_caterpillars(std::span<const CaterpillarSpec> specs,
                                      int k_offset) {
  if (specs.empty()) throw BadSpec("need at least one caterpillar");
  if (k_offset < 2) throw BadParameter("caterpillar offset k must be >= 2");
  Representation rep;
  rep.algebra = Algebra::MinPlus;
  rep.threshold = 1;
  int label = 1;
  for (const CaterpillarSpec& spec : specs) {
    const auto counts = spec.leaf_counts();
    std::vector<TropicalVector> spine;
    for (int s = 0; s < spec.spine_length; ++s) {
      spine.push_back(spine_vector(label + s, k_offset));
    }
    rep.vectors.insert(rep.vectors.end(), spine.begin(), spine.end());
    for (int s = 0; s < spec.spine_length; ++s) {
      for (int j = 0; j < counts[s]; ++j) rep.vectors.push_back(leaf_vector(spine[s]));
    }
    // Next component starts two past the highest label used.
    label += spec.spine_length + 1;
  }
  return rep;
}

Representation caterpillar_2dim(const CaterpillarSpec& spec, int k_offset) {
  return forest_of_caterpillars(std::span<const CaterpillarSpec>(&spec, 1), k_offset);
}

Graph forest_graph(std::span<const CaterpillarSpec> specs) {
  Graph g(0);
  for (const auto& spec : specs) g = disjoint_union(g, caterpillar_graph(spec));
  return g;
}

Representation join_clique(const Graph& g, const Representation& rep, int n_clique) {
  if (n_clique < 0) throw BadParameter("clique size must be non-negative");
  try {
    rep.validate();
  } catch (const InvalidRepresentation& e) {
    throw InvalidInputRepresentation(e.what());
  }
  if (rep.order() != g.order() || rep.order() == 0 || !verify(g, rep).valid) {
    throw InvalidInputRepresentation("representation does not represent g");
  }
  const Rational& t = rep.threshold;
  const auto k = static_cast<std::size_t>(rep.dim());
  std::vector<TropicalValue> clique(k, TropicalValue(t));
  if (rep.algebra == Algebra::MinPlus) {
    // Coordinate i must reach t against every vertex: c_i >= t - min_u u_i.
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& vec : rep.vectors) {
        if (vec[i].is_finite() && t - vec[i].value() > clique[i].value()) {
          clique[i] = TropicalValue(Rational(t - vec[i].value()));
        }
      }
    }
  } else {
    // Some coordinate must reach t: c >= t - max_i u_i for every u.
    Rational lift = t;
    for (const auto& vec : rep.vectors) {
      const TropicalValue best = *std::max_element(vec.begin(), vec.end());
      if (!best.is_finite()) {
        throw InvalidInputRepresentation("all -inf vector cannot join a clique");
      }
      lift = std::max(lift, Rational(t - best.value()));
    }
    clique.assign(k, TropicalValue(lift));
  }
  Representation out = rep;
  for (int i = 0; i < n_clique; ++i) out.vectors.emplace_back(clique);
  return out;
}

Representation multipartite_kdim(std::span<const int> sizes) {
  if (sizes.size() < 2) throw BadParameter("need at least two parts");
  for (int s : sizes) {
    if (s < 1) throw BadParameter("part sizes must be positive");
  }
  std::vector<std::size_t> big;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] > 1) big.push_back(p);
  }
  const std::size_t dim = std::max<std::size_t>(big.size(), 1);

  // Non-singleton parts first, generator order within them.
  std::vector<int> start(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), start.begin() + 1);
  std::vector<Vertex> core_ids;
  std::vector<int> core_sizes;
  Representation core;
  core.algebra = Algebra::MinPlus;
  core.threshold = 1;
  for (std::size_t b = 0; b < big.size(); ++b) {
    const std::size_t p = big[b];
    core_sizes.push_back(sizes[p]);
    std::vector<TropicalValue> row(dim, TropicalValue(1));
    row[b] = TropicalValue(0);
    for (int j = 0; j < sizes[p]; ++j) {
      core_ids.push_back(start[p] + j);
      core.vectors.emplace_back(row);
    }
  }
  std::vector<Vertex> singles;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] == 1) singles.push_back(start[p]);
  }

  Representation joined;
  if (big.empty()) {
    joined = Representation{Algebra::MinPlus, 1, {}};
    for (std::size_t i = 0; i < singles.size(); ++i) {
      joined.vectors.push_back(TropicalVector{TropicalValue(1)});
    }
  } else {
    const Graph core_graph = core_sizes.size() >= 2
                                 ? complete_multipartite(core_sizes)
                                 : empty_graph(core_sizes[0]);
    joined = join_clique(core_graph, core, static_cast<int>(singles.size()));
  }
  std::vector<Vertex> perm = core_ids;
  perm.insert(perm.end(), singles.begin(), singles.end());
  return permute(joined, perm);
}

Representation cycle_3dim(int n) {
  if (n < 5) throw BadParameter("cycle_3dim needs n >= 5");
  const Representation path = caterpillar_2dim(CaterpillarSpec{n - 1, {}});
  return minplus_extend_vertex(path, cycle_graph(n), n - 1);
}

Representation permute(const Representation& rep, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != rep.order()) {
    throw VertexCountMismatch("permutation size differs from representation order");
  }
  std::vector<std::optional<TropicalVector>> slots(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Vertex target = perm[i];
    if (target < 0 || target >= rep.order() || slots[target]) {
      throw BadParameter("not a permutation");
    }
    slots[target] = rep.vectors[i];
  }
  Representation out{rep.algebra, rep.threshold, {}};
  for (auto& slot : slots) out.vectors.push_back(std::move(*slot));
  return out;
}

// --- front ends -------------------------------------------------------------------

Representation represent_caterpillar_forest(const Graph& g, int k_offset) {
  std::vector<CaterpillarSpec> specs;
  std::vector<Vertex> order;  // generator index -> original vertex
  for (const auto& comp : components(g)) {
    const Graph h = induced(g, comp);
    if (h.size() + 1 != comp.size()) throw BadParameter("component is not a tree");
    // Spine: vertices of degree >= 2, which must form a path.
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (h.degree(v) >= 2) inner.push_back(v);
    }
    std::vector<Vertex> spine;
    if (inner.empty()) {
      spine.push_back(0);  // K1 or K2: p1 = first vertex
      if (h.order() == 2) spine.push_back(1);
    } else {
      const Graph core = induced(h, inner);
      Vertex end = -1;
      for (Vertex v = 0; v < core.order(); ++v) {
        if (core.degree(v) > 2) throw BadParameter("tree is not a caterpillar");
        if (core.degree(v) <= 1 && end < 0) end = v;
      }
      if (end < 0) throw BadParameter("tree is not a caterpillar");
      Vertex prev = -1;
      for (Vertex cur = end; cur >= 0;) {
        spine.push_back(inner[cur]);
        Vertex next = -1;
        for (Vertex w : core.neighbors(cur)) {
          if (w != prev) next = w;
        }
        prev = cur;
        cur = next;
      }
    }
    CaterpillarSpec spec;
    spec.spine_length = static_cast<int>(spine.size());
    std::vector<bool> on_spine(h.order(), false);
    for (Vertex s : spine) on_spine[s] = true;
    for (Vertex s : spine) order.push_back(comp[s]);
    for (std::size_t i = 0; i < spine.size(); ++i) {
      int count = 0;
      for (Vertex w : h.neighbors(spine[i])) {
        if (!on_spine[w]) {
          order.push_back(comp[w]);
          ++count;
        }
      }
      if (count > 0) spec.leaves.emplace_back(static_cast<int>(i) + 1, count);
    }
    specs.push_back(std::move(spec));
  }
  if (specs.empty()) throw BadParameter("graph must have a vertex");
  return permute(forest_of_caterpillars(specs, k_offset), order);
}

Representation represent_multipartite(const Graph& g) {
  // Parts are the components of the complement, each of which must be a
  // clique there.
  const Graph co = complement(g);
  std::vector<int> sizes;
  std::vector<Vertex> order;
  for (const auto& comp : components(co)) {
    const std::size_t k = comp.size();
    if (induced(co, comp).size() != k * (k - 1) / 2) {
      throw BadParameter("graph is not complete multipartite");
    }
    sizes.push_back(static_cast<int>(k));
    order.insert(order.end(), comp.begin(), comp.end());
  }
  return permute(multipartite_kdim(sizes), order);
}

Representation represent_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 5) throw BadParameter("cycle method needs a cycle on >= 5 vertices");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) throw BadParameter("graph is not a cycle");
  }
  if (components(g).size() != 1) throw BadParameter("graph is not a cycle");
  std::vector<Vertex> walk{0};
  Vertex prev = -1;
  Vertex cur = 0;
  while (static_cast<int>(walk.size()) < n) {
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  return permute(cycle_3dim(n), walk);
}

}  // namespace tropigraph

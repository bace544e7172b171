#include "tropigraph/verifier.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tropigraph/constructions.hpp"
#include "tropigraph/error.hpp"

namespace tropigraph {

Graph realize_graph(std::span<const TropicalVector> vectors, const Rational& t,
                    Algebra alg) {
  const int n = static_cast<int>(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != vectors[0].dim()) throw DimensionMismatch("ragged vector set");
  }
  const TropicalValue threshold(t);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (trop_dot(vectors[u], vectors[v], alg) >= threshold) g.add_edge(u, v);
    }
  }
  return g;
}

Graph realize_graph(const Representation& rep) {
  return realize_graph(rep.vectors, rep.threshold, rep.algebra);
}

VerificationReport verify(const Graph& g, const Representation& rep) {
  if (g.order() != rep.order()) {
    throw VertexMismatch("graph has " + std::to_string(g.order()) +
                         " vertices, representation has " +
                         std::to_string(rep.order()));
  }
  rep.validate();
  VerificationReport report;
  const TropicalValue threshold(rep.threshold);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      TropicalValue dot = trop_dot(rep.vectors[u], rep.vectors[v], rep.algebra);
      const bool edge = g.adjacent(u, v);
      if ((dot >= threshold) != edge) {
        report.violations.push_back(Violation{u, v, std::move(dot), edge});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::vector<Graph> project_slices(const Representation& rep) {
  rep.validate();
  const int n = rep.order();
  const TropicalValue threshold(rep.threshold);
  std::vector<Graph> slices;
  for (int j = 0; j < rep.dim(); ++j) {
    Graph slice(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (trop_mul(rep.vectors[u][j], rep.vectors[v][j]) >= threshold) {
          slice.add_edge(u, v);
        }
      }
    }
    slices.push_back(std::move(slice));
  }
  return slices;
}

bool slice_law_holds(const Representation& rep) {
  const auto slices = project_slices(rep);
  const int n = rep.order();
  Graph combined = rep.algebra == Algebra::MaxPlus ? Graph(n) : complement(Graph(n));
  for (const Graph& s : slices) {
    combined = rep.algebra == Algebra::MaxPlus ? graph_union(combined, s)
                                               : graph_intersection(combined, s);
  }
  return combined == realize_graph(rep);
}

namespace {

std::vector<Vertex> greedy_independent_set(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<bool> blocked(g.order(), false);
  std::vector<Vertex> out;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverSolution complement_parts(const CoverSolution& cover, int n) {
  CoverSolution out;
  out.mode = cover.mode == CoverMode::Union ? CoverMode::Intersection : CoverMode::Union;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    out.parts.push_back(complement(cover.part_graph(i, n)).edges());
  }
  return out;
}

// Bounds and an upper-bound witness for Theta(h), usable beyond the exact
// limits.
std::pair<DimensionBounds, CoverSolution> cover_bounds(const Graph& h,
                                                       const SearchLimits& limits) {
  DimensionBounds b;
  std::vector<Vertex> independent;
  try {
    const ThetaBounds tb = theta_bounds(h, limits);
    b = {tb.lower, tb.upper};
    independent = max_independent_set(h, limits.alpha_vertices);
  } catch (const TooLarge&) {
    independent = greedy_independent_set(h);
    b = {h.size() > 0 ? 1 : 0, h.order() - static_cast<int>(independent.size())};
  }
  CoverSolution witness = star_cover(h, independent);
  b.upper = std::min(b.upper, witness.size());
  b.lower = std::max(b.lower, 1);
  b.upper = std::max(b.upper, 1);
  return {b, std::move(witness)};
}

}  // namespace

DimensionResult rho(const Graph& g, const SearchLimits& limits) {
  const int n = g.order();
  if (n < 1) throw BadParameter("graph must have a vertex");
  DimensionResult out;
  bool exact = true;

  try {
    const CoverSolution cover = theta(g, limits);
    out.max_plus_witness = maxplus_from_cover(g, cover);
    out.rho_max_plus = out.max_plus_witness->dim();
    out.max_plus_bounds = {out.rho_max_plus, out.rho_max_plus};
  } catch (const TooLarge&) {
    exact = false;
    auto [bounds, witness] = cover_bounds(g, limits);
    out.max_plus_bounds = bounds;
    out.max_plus_witness = maxplus_from_cover(g, witness);
  }

  const Graph co = complement(g);
  try {
    const CoverSolution cover = theta_hat(g, limits);
    out.min_plus_witness = minplus_from_intersection(g, cover);
    out.rho_min_plus = out.min_plus_witness->dim();
    out.min_plus_bounds = {out.rho_min_plus, out.rho_min_plus};
  } catch (const TooLarge&) {
    exact = false;
    auto [bounds, witness] = cover_bounds(co, limits);
    out.min_plus_bounds = bounds;
    out.min_plus_witness = minplus_from_intersection(g, complement_parts(witness, n));
    if (n >= 2 && n - 1 < out.min_plus_witness->dim()) {
      out.min_plus_witness = minplus_by_extension(g);
      out.min_plus_bounds.upper = n - 1;
    }
  }

  if (!exact) {
    out.method = DimensionMethod::BoundsOnly;
    out.rho_min_plus = out.min_plus_bounds.lower == out.min_plus_bounds.upper
                           ? out.min_plus_bounds.upper
                           : 0;
    out.rho_max_plus = out.max_plus_bounds.lower == out.max_plus_bounds.upper
                           ? out.max_plus_bounds.upper
                           : 0;
  }
  return out;
}

std::vector<Graph> isomorphism_classes(int n) {
  if (n < 1 || n > 7) throw TooLarge("isomorphism classes enumerated for 1 <= n <= 7");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  std::vector<Edge> pair_of;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      index[i][j] = index[j][i] = static_cast<int>(pair_of.size());
      pair_of.emplace_back(i, j);
    }
  }
  std::vector<Vertex> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<Vertex>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  // Codes are visited in increasing order, so the first unseen code is the
  // smallest of its orbit.
  const std::uint32_t total = std::uint32_t{1} << pairs;
  std::vector<bool> seen(total, false);
  std::vector<Graph> out;
  for (std::uint32_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::uint32_t bits = code; bits != 0; bits &= bits - 1) {
        const Edge& e = pair_of[std::countr_zero(bits)];
        image |= std::uint32_t{1} << index[p[e.u]][p[e.v]];
      }
      seen[image] = true;
    }
    Graph g(n);
    for (std::uint32_t bits = code; bits != 0; bits &= bits - 1) {
      const Edge& e = pair_of[std::countr_zero(bits)];
      g.add_edge(e.u, e.v);
    }
    out.push_back(std::move(g));
  }
  return out;
}

ConjectureReport check_conjecture(int n_max, const SearchLimits& limits) {
  if (n_max > 7) throw TooLarge("conjecture sweep limited to n_max <= 7");
  ConjectureReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : isomorphism_classes(n)) {
      const DimensionResult r = rho(g, limits);
      if (r.method != DimensionMethod::Exact) {
        throw TooLarge("graph " + to_graph6(g) + " exceeds the exact search limits");
      }
      ConjectureEntry entry{to_graph6(g), n, r.rho_min_plus, r.rho_max_plus};
      if (entry.rho_min_plus > entry.rho_max_plus) report.counterexamples.push_back(entry);
      if (entry.rho_min_plus < entry.rho_max_plus) report.strict.push_back(entry);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace tropigraph

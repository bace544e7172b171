#pragma once

#include <span>
#include <vector>

#include "tropigraph/graph.hpp"
#include "tropigraph/representation.hpp"
#include "tropigraph/threshold.hpp"

namespace tropigraph {

// Dimension-n min-plus representation: vertex i gets t/3 at coordinate i,
// +inf before it, and t or t/2 after it depending on adjacency. A column
// where two adjacent earlier vertices both miss vertex j would put their dot
// at t, so that column uses t/6, 7t/6, 2t/3 instead. Edge dots are exactly
// 4t/3 and non-edge dots exactly 5t/6.
Representation minplus_generic(const Graph& g, const Rational& t = 1);

// Adds vertex v to a min-plus representation of g - v (whose vertices are
// those of g without v, in increasing order) using one extra coordinate.
// Throws InvalidInputRepresentation when `rep` does not represent g - v.
Representation minplus_extend_vertex(const Representation& rep, const Graph& g,
                                     Vertex v);

// Dimension n-1 (n >= 2): a one-dimensional seed for vertices 0 and 1,
// then one extension per remaining vertex.
Representation minplus_by_extension(const Graph& g, const Rational& t = 1);

// Dimension n-k+1 where k is the size of a largest induced threshold
// subgraph: a one-dimensional core extended by the other vertices.
Representation minplus_from_induced_threshold(const Graph& g, const Rational& t = 1,
                                              const SearchLimits& limits = {});

// Dimension-n max-plus representation with entries t on the diagonal, t/3
// for neighbours and -t/3 for non-neighbours. Edge dots are exactly 4t/3 and
// non-edge dots at most 2t/3.
Representation maxplus_generic(const Graph& g, const Rational& t = 1);

// The diagonal-t, neighbour-t/3, otherwise-0 layout. Two non-adjacent
// vertices meet at t on each other's diagonal coordinate, so any graph with
// a non-edge is mis-represented. Kept for regression tests only.
Representation maxplus_generic_unrepaired(const Graph& g, const Rational& t = 1);

// Multiplies every finite entry by new_t / t. Throws BadParameter for
// new_t <= 0.
Representation rescale(const Representation& rep, const Rational& new_t);

// One-dimensional representation from threshold weights; valid in both
// algebras. Throws NotThreshold.
Representation threshold_1dim(const Graph& g, const Rational& t = 1,
                              Algebra alg = Algebra::MinPlus);

// Coordinate j holds vertex weights realizing part j (normalized into
// (0, 1)), t = 1. An empty cover is treated as one empty part. Throws
// InvalidCover.
Representation maxplus_from_cover(const Graph& g, const CoverSolution& cover);
Representation minplus_from_intersection(const Graph& g, const CoverSolution& cover);

// Two-dimensional min-plus representation of caterpillar_graph(spec) with
// t = 1. k_offset >= 2.
Representation caterpillar_2dim(const CaterpillarSpec& spec, int k_offset = 2);

// Same construction over the disjoint union of the caterpillars, spine labels
// continuing across components with a gap of two.
Representation forest_of_caterpillars(std::span<const CaterpillarSpec> specs,
                                      int k_offset = 2);
Graph forest_graph(std::span<const CaterpillarSpec> specs);

// Representation of join(g, complete_graph(n_clique)) of the same dimension;
// clique vertices get the all-t vector (lifted where negative entries would
// need it). Throws InvalidInputRepresentation.
Representation join_clique(const Graph& g, const Representation& rep, int n_clique);

// Complete multipartite graph on `sizes` (>= 2 parts) in generator order:
// part i of the non-singleton parts gets 0 at coordinate i and 1 elsewhere,
// singleton parts are added as a clique. Dimension = number of non-singleton
// parts (1 if there are none).
Representation multipartite_kdim(std::span<const int> sizes);

// Three-dimensional representation of cycle_graph(n), n >= 5.
Representation cycle_3dim(int n);

// Moves the vector of representation vertex i to vertex perm[i].
Representation permute(const Representation& rep, std::span<const Vertex> perm);

// --- front ends for arbitrary input labelling ----------------------------------
// Each recognizes the structure in g, builds the representation in generator
// labelling, and maps it back. They throw BadParameter when g does not have
// the required shape.

Representation represent_caterpillar_forest(const Graph& g, int k_offset = 2);
Representation represent_multipartite(const Graph& g);
Representation represent_cycle(const Graph& g);

}  // namespace tropigraph

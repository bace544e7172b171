#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropigraph/graph.hpp"
#include "tropigraph/representation.hpp"
#include "tropigraph/threshold.hpp"

namespace tropigraph {

// Graph with uv an edge iff dot(vectors[u], vectors[v]) >= t. Throws
// DimensionMismatch on ragged input.
Graph realize_graph(std::span<const TropicalVector> vectors, const Rational& t,
                    Algebra alg);
Graph realize_graph(const Representation& rep);

struct Violation {
  Vertex u = 0;
  Vertex v = 0;
  TropicalValue dot;
  bool expected_edge = false;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Every pair whose dot product disagrees with g. Throws VertexMismatch when
// the vertex counts differ.
VerificationReport verify(const Graph& g, const Representation& rep);

// One graph per coordinate: uv in slice j iff u_j + v_j >= t, with +inf
// adjacent to everything and -inf to nothing.
std::vector<Graph> project_slices(const Representation& rep);

// Whether the realized graph equals the union (max-plus) or intersection
// (min-plus) of the slices.
bool slice_law_holds(const Representation& rep);

enum class DimensionMethod { Exact, BoundsOnly };

struct DimensionBounds {
  int lower = 0;
  int upper = 0;
};

struct DimensionResult {
  DimensionMethod method = DimensionMethod::Exact;
  // Exact values; equal to the bounds' common value when exact.
  int rho_min_plus = 0;
  int rho_max_plus = 0;
  DimensionBounds min_plus_bounds;
  DimensionBounds max_plus_bounds;
  // Witnesses of the upper bounds.
  std::optional<Representation> min_plus_witness;
  std::optional<Representation> max_plus_witness;
};

// Both tropical dimensions through the threshold cover equivalences:
// rho_max = Theta(G), rho_min = Theta(complement G), each at least 1. When
// the exact search is over the limits only bounds are returned.
DimensionResult rho(const Graph& g, const SearchLimits& limits = {});

struct ConjectureEntry {
  std::string graph6;
  int n = 0;
  int rho_min_plus = 0;
  int rho_max_plus = 0;
};

struct ConjectureReport {
  int n_max = 0;
  // One entry per isomorphism class, ordered by n then canonical code.
  std::vector<ConjectureEntry> entries;
  // Classes with rho_min_plus > rho_max_plus.
  std::vector<ConjectureEntry> counterexamples;
  // Classes with rho_min_plus < rho_max_plus.
  std::vector<ConjectureEntry> strict;
};

// Exact rho_min_plus vs rho_max_plus over all graphs on 1..n_max vertices, one
// representative per isomorphism class. Throws TooLarge for n_max > 7.
ConjectureReport check_conjecture(int n_max, const SearchLimits& limits = {});

// Graphs on n vertices, one per isomorphism class (n <= 7), each in its
// canonical labelling.
std::vector<Graph> isomorphism_classes(int n);

}  // namespace tropigraph

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "tropigraph/graph.hpp"
#include "tropigraph/rational.hpp"

namespace tropigraph {

enum class CreationStep { Isolated, Dominating };

struct CreationEntry {
  Vertex vertex = 0;
  CreationStep step = CreationStep::Isolated;

  friend bool operator==(const CreationEntry&, const CreationEntry&) = default;
};

// Vertices in the order they are added. The first entry is always Isolated.
using CreationSequence = std::vector<CreationEntry>;

// Four distinct vertices with ab, cd edges and ac, bd non-edges. An induced
// C4, P4 or 2K2 always contains one.
struct AlternatingC4 {
  Vertex a = 0, b = 0, c = 0, d = 0;
};

struct ThresholdCertificate {
  std::variant<CreationSequence, AlternatingC4> verdict;

  bool is_threshold() const {
    return std::holds_alternative<CreationSequence>(verdict);
  }
  const CreationSequence& creation_sequence() const {
    return std::get<CreationSequence>(verdict);
  }
  const AlternatingC4& witness() const { return std::get<AlternatingC4>(verdict); }
};

// Peels isolated or dominating vertices until none remain (Yes) or the
// remaining induced subgraph has neither (No, with a witness found inside it).
ThresholdCertificate threshold_certificate(const Graph& g);
bool is_threshold(const Graph& g);

// Builds the graph on n vertices described by a creation sequence.
Graph replay(const CreationSequence& sequence, int n);
bool witness_holds(const Graph& g, const AlternatingC4& w);

struct ThresholdRealization {
  std::vector<Rational> weights;
  Rational threshold{1};

  // w(u) + w(v) >= t exactly when uv is an edge, for every pair u != v.
  bool realizes(const Graph& g) const;
};

// Exact weights from the creation sequence. For t > 0 every weight lies
// strictly inside (0, t). Throws NotThreshold.
ThresholdRealization threshold_weights(const Graph& g, const Rational& t = 1);

enum class CoverMode { Union, Intersection };

// Spanning threshold subgraphs given by their edge sets. Union mode covers
// E(G) from below; Intersection mode cuts E(G) out from above.
struct CoverSolution {
  CoverMode mode = CoverMode::Union;
  std::vector<std::vector<Edge>> parts;

  int size() const { return static_cast<int>(parts.size()); }
  Graph part_graph(std::size_t i, int n) const;
};

// Checks the mode's invariants: every part threshold, and union (resp.
// intersection) of the parts equal to E(G).
bool cover_is_valid(const Graph& g, const CoverSolution& cover);

// Limits for the exponential searches. Defaults keep the acceptance suite
// well under a minute.
struct SearchLimits {
  int theta_vertices = 10;
  int theta_edges = 25;
  int alpha_vertices = 32;
  int induced_vertices = 24;
};

// Threshold dimension with an optimal Union-mode witness. Edgeless graphs
// give the empty cover. Throws TooLarge outside the limits.
CoverSolution theta(const Graph& g, const SearchLimits& limits = {});

// Threshold intersection number: theta of the complement, with each part
// complemented into an Intersection-mode witness.
CoverSolution theta_hat(const Graph& g, const SearchLimits& limits = {});

struct ThetaBounds {
  int lower = 0;
  int upper = 0;
};

// upper = n - alpha(G); lower = upper on triangle-free graphs, otherwise the
// size of a greedy set of pairwise incompatible edges (two edges that span
// an alternating C4 of G can never share a threshold subgraph).
ThetaBounds theta_bounds(const Graph& g, const SearchLimits& limits = {});

// One star per vertex outside `independent`, each taking that vertex's
// not-yet-covered edges; empty stars are dropped. Union mode.
CoverSolution star_cover(const Graph& g, std::span<const Vertex> independent);

// Largest vertex set inducing a threshold graph, sorted. Throws TooLarge.
std::vector<Vertex> max_induced_threshold(const Graph& g,
                                          const SearchLimits& limits = {});

}  // namespace tropigraph

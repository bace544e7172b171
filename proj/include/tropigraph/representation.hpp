#pragma once

#include <vector>

#include "tropigraph/rational.hpp"
#include "tropigraph/tropical.hpp"

namespace tropigraph {

// A vertex -> vector map with a threshold: uv is an edge exactly when the
// tropical dot product of their vectors is >= threshold. Vertex v's vector
// is vectors[v].
struct Representation {
  Algebra algebra = Algebra::MinPlus;
  Rational threshold{1};
  std::vector<TropicalVector> vectors;

  int order() const { return static_cast<int>(vectors.size()); }
  // Dimension shared by all vectors; 0 for an empty vertex set.
  int dim() const { return vectors.empty() ? 0 : static_cast<int>(vectors[0].dim()); }

  // Uniform dimension, threshold > 0, and only the algebra's own infinity
  // (+inf for min-plus, -inf for max-plus). Throws InvalidRepresentation.
  void validate() const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

}  // namespace tropigraph

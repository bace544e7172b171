#include "tropigraph/representation.hpp"

#include "tropigraph/error.hpp"

namespace tropigraph {

void Representation::validate() const {
  if (threshold <= 0) throw InvalidRepresentation("threshold must be positive");
  const std::size_t k = vectors.empty() ? 0 : vectors[0].dim();
  for (std::size_t v = 0; v < vectors.size(); ++v) {
    if (vectors[v].dim() != k) {
      throw InvalidRepresentation("vector of vertex " + std::to_string(v) +
                                  " has dimension " +
                                  std::to_string(vectors[v].dim()) + ", expected " +
                                  std::to_string(k));
    }
    for (const auto& x : vectors[v]) {
      if (algebra == Algebra::MinPlus && x.is_neg_inf()) {
        throw InvalidRepresentation("-inf entry in a min-plus representation");
      }
      if (algebra == Algebra::MaxPlus && x.is_pos_inf()) {
        throw InvalidRepresentation("+inf entry in a max-plus representation");
      }
    }
  }
}

}  // namespace tropigraph

#include "tropigraph/applications.hpp"

#include <algorithm>

namespace tropigraph {

namespace {

LabelledData from_rows(std::vector<std::string> names,
                       const std::vector<std::vector<long long>>& rows, long long t,
                       Algebra alg) {
  LabelledData out;
  out.names = std::move(names);
  out.rep.algebra = alg;
  out.rep.threshold = t;
  for (const auto& row : rows) {
    std::vector<TropicalValue> entries(row.begin(), row.end());
    out.rep.vectors.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace

LabelledData student_ratings() {
  return from_rows({"A", "B", "C", "D", "E", "F"},
                   {{2, 2, 1, 0},
                    {1, 2, 2, 1},
                    {1, 1, 3, 3},
                    {3, 3, 0, 0},
                    {2, 1, 3, 2},
                    {1, 2, 2, 3}},
                   3, Algebra::MinPlus);
}

LabelledData mutual_funds() {
  return from_rows({"A", "B", "C", "D", "E", "F", "H"},
                   {{1, 0, 0, 1, 0},
                    {1, 1, 0, 0, 0},
                    {0, 0, 1, 1, 0},
                    {0, 0, 1, 1, 1},
                    {0, 1, 1, 0, 1},
                    {1, 0, 0, 0, 1},
                    {0, 1, 0, 1, 0}},
                   2, Algebra::MaxPlus);
}

std::vector<std::string> edge_labels(const Graph& g, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const Edge& e : g.edges()) out.push_back(names.at(e.u) + "-" + names.at(e.v));
  return out;
}

bool is_maximal_independent(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
    const bool dominated = std::any_of(set.begin(), set.end(),
                                       [&](Vertex s) { return g.adjacent(s, v); });
    if (!dominated) return false;
  }
  return true;
}

}  // namespace tropigraph

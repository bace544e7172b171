#pragma once

#include <string>
#include <vector>

#include "tropigraph/graph.hpp"
#include "tropigraph/representation.hpp"

namespace tropigraph {

// A labelled vector data set; vertex i is names[i].
struct LabelledData {
  std::vector<std::string> names;
  Representation rep;
};

// Six students rated 0-3 in four skill areas; a min-plus edge at t = 3 means
// the pair covers every area with combined rating >= 3.
LabelledData student_ratings();

// Seven mutual funds as 0/1 holdings of five securities; a max-plus edge at
// t = 2 means the funds share a holding.
LabelledData mutual_funds();

// "A-C" style labels for every edge of g, in edge order.
std::vector<std::string> edge_labels(const Graph& g, const std::vector<std::string>& names);

// No two members adjacent, and every other vertex adjacent to a member.
bool is_maximal_independent(const Graph& g, const std::vector<Vertex>& set);

}  // namespace tropigraph

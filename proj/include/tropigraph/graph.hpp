#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropigraph {

using Vertex = int;

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  // Loops and out-of-range endpoints throw BadParameter. Adding an existing
  // edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  // Lexicographically sorted.
  std::vector<Edge> edges() const;

  // Adjacency row as a 64-bit mask; requires order() <= 64.
  std::uint64_t row_mask(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  std::size_t word(Vertex u, Vertex v) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);
// Both operands must have the same order (VertexCountMismatch otherwise).
Graph graph_union(const Graph& a, const Graph& b);
Graph graph_intersection(const Graph& a, const Graph& b);
// Vertices of b are shifted by a.order(); all cross edges are added.
Graph join(const Graph& a, const Graph& b);
// Vertices of b are shifted by a.order(); no cross edges.
Graph disjoint_union(const Graph& a, const Graph& b);
// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced(const Graph& g, std::span<const Vertex> vertices);
// Same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_triangle_free(const Graph& g);
// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

// Exact independence number by branch and bound with greedy-colouring
// bounds. Throws TooLarge when g.order() > max_vertices (hard cap 64).
int alpha(const Graph& g, int max_vertices = 32);
std::vector<Vertex> max_independent_set(const Graph& g, int max_vertices = 32);

// --- generators -------------------------------------------------------------
//
// Labelling conventions:
//   path, cycle      numbered along the walk
//   multipartite     part by part, in the order given
//   star(m)          centre 0, leaves 1..m
//   matching(k)      edges {2i, 2i+1}
//   caterpillar      spine p1..pm as 0..m-1, then leaves grouped by spine
//                    vertex in spine order

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> sizes);
Graph star_graph(int m);
Graph matching_graph(int k);

struct CaterpillarSpec {
  int spine_length = 1;
  // (1-based spine index, leaf count) pairs.
  std::vector<std::pair<int, int>> leaves;

  // Throws BadSpec.
  void validate() const;
  // Leaf count at each spine vertex, index 0 = p1.
  std::vector<int> leaf_counts() const;
  int vertex_count() const;
};

Graph caterpillar_graph(const CaterpillarSpec& spec);

// Family names: path, cycle, complete, empty, multipartite
// (complete_multipartite), star, matching, caterpillar. For caterpillar the
// parameters are the spine length followed by per-spine-vertex leaf counts.
Graph generate(std::string_view family, std::span<const int> params);

// --- I/O ----------------------------------------------------------------------

// graph6 with optional ">>graph6<<" header. Throws ParseError.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n <count>" followed by one "u v" pair per line; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Dispatches on the first token: "n" means edge list, anything else graph6.
Graph parse_graph_auto(std::string_view text);

}  // namespace tropigraph

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropigraph/error.hpp"
#include "tropigraph/graph.hpp"

using namespace tropigraph;

TEST_CASE("graph storage keeps edges symmetric and simple") {
  Graph g(3);
  g.add_edge(0, 2);
  g.add_edge(2, 0);
  CHECK(g.size() == 1);
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_THROWS_AS(g.add_edge(1, 1), BadParameter);
  CHECK_THROWS_AS(g.add_edge(0, 3), BadParameter);
  g.remove_edge(2, 0);
  CHECK(g.size() == 0);

  Graph big(130);
  big.add_edge(3, 129);
  CHECK(big.adjacent(129, 3));
  CHECK(big.degree(129) == 1);
  CHECK_THROWS_AS(big.row_mask(0), TooLarge);
}

TEST_CASE("complement") {
  CHECK(complement(cycle_graph(4)) == Graph(4, {{0, 2}, {1, 3}}));
  CHECK(complement(complete_graph(5)) == Graph(5));
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(1 + i % 9, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("union and intersection on a shared vertex set") {
  const Graph p3 = path_graph(3);
  CHECK(graph_union(p3, Graph(3, {{0, 2}})) == complete_graph(3));
  CHECK(graph_intersection(p3, p3) == p3);
  CHECK(graph_intersection(cycle_graph(4), complement(cycle_graph(4))) == Graph(4));
  CHECK_THROWS_AS(graph_union(Graph(3), Graph(4)), VertexCountMismatch);
  CHECK_THROWS_AS(graph_intersection(Graph(2), Graph(1)), VertexCountMismatch);

  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 7;
    const Graph a = oracle::random_graph(n, rng);
    const Graph b = oracle::random_graph(n, rng);
    CHECK(complement(graph_union(a, b)) ==
          graph_intersection(complement(a), complement(b)));
  }
}

TEST_CASE("join adds every cross edge") {
  CHECK(join(Graph(1), Graph(1)) == complete_graph(2));
  const Graph j = join(matching_graph(2), Graph(1));
  CHECK(j.order() == 5);
  for (Vertex v = 0; v < 4; ++v) CHECK(j.adjacent(v, 4));
  CHECK(j.adjacent(0, 1));
  CHECK(j.adjacent(2, 3));
  CHECK_FALSE(j.adjacent(0, 2));
  CHECK(j.size() == 2 + 0 + 4 * 1);

  const Graph a = cycle_graph(5);
  const Graph b = path_graph(3);
  CHECK(join(a, b).size() == a.size() + b.size() + 15);
}

TEST_CASE("generators") {
  CHECK(path_graph(4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(path_graph(9).size() == 8);
  CHECK(cycle_graph(7).size() == 7);
  CHECK(star_graph(3) == Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(matching_graph(3).size() == 3);

  // K_{2,2} in part order is C4 with vertices 0,2,1,3 around the cycle.
  const int sizes22[] = {2, 2};
  const Vertex to_cycle[] = {0, 2, 1, 3};
  CHECK(complete_multipartite(sizes22) == relabel(cycle_graph(4), to_cycle));

  const int sizes[] = {1, 2, 3, 2};
  const Graph km = complete_multipartite(sizes);
  CHECK(km.size() == 1 * 2 + 1 * 3 + 1 * 2 + 2 * 3 + 2 * 2 + 3 * 2);

  CHECK(caterpillar_graph(CaterpillarSpec{3, {}}) == path_graph(3));
  const Graph cat = caterpillar_graph(CaterpillarSpec{2, {{1, 1}, {2, 1}}});
  CHECK(cat == Graph(4, {{0, 1}, {0, 2}, {1, 3}}));
  CHECK(caterpillar_graph(CaterpillarSpec{1, {{1, 3}}}) == star_graph(3));

  CHECK_THROWS_AS(path_graph(0), BadParameter);
  CHECK_THROWS_AS(cycle_graph(2), BadParameter);
  CHECK_THROWS_AS(caterpillar_graph(CaterpillarSpec{2, {{3, 1}}}), BadSpec);
  CHECK_THROWS_AS(caterpillar_graph(CaterpillarSpec{2, {{1, -1}}}), BadSpec);
  CHECK_THROWS_AS(caterpillar_graph(CaterpillarSpec{0, {}}), BadSpec);

  const int cat_params[] = {3, 0, 2};
  CHECK(generate("caterpillar", cat_params) ==
        caterpillar_graph(CaterpillarSpec{3, {{2, 2}}}));
  const int six[] = {6};
  CHECK(generate("path", six) == path_graph(6));
  CHECK_THROWS_AS(generate("hypercube", six), BadParameter);
}

TEST_CASE("independence number matches subset enumeration") {
  CHECK(alpha(cycle_graph(4)) == 2);
  CHECK(alpha(path_graph(6)) == 3);
  CHECK(alpha(complete_graph(7)) == 1);
  CHECK(alpha(Graph(5)) == 5);
  CHECK(alpha(Graph(0)) == 0);
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(1 + i % 8, rng, 0.2 + 0.1 * (i % 6));
    const auto set = max_independent_set(g);
    CHECK(static_cast<int>(set.size()) == oracle::alpha(g));
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = a + 1; b < set.size(); ++b) CHECK_FALSE(g.adjacent(set[a], set[b]));
  }
  CHECK_THROWS_AS(alpha(Graph(33)), TooLarge);
  CHECK(alpha(Graph(40), 64) == 40);
}

TEST_CASE("triangles, components and induced subgraphs") {
  CHECK(is_triangle_free(cycle_graph(4)));
  CHECK_FALSE(is_triangle_free(complete_graph(3)));
  const auto comps = components(matching_graph(2));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{2, 3});
  const Vertex keep[] = {0, 1, 2};
  CHECK(induced(cycle_graph(4), keep) == path_graph(3));
}

TEST_CASE("graph6") {
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(parse_graph6(">>graph6<<Ch\n") == path_graph(4));
  CHECK_THROWS_AS(parse_graph6("Chh"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // padding bit set
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C h"), ParseError);

  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(i % 13, rng);
    const std::string text = to_graph6(g);
    CHECK(parse_graph6(text) == g);
    CHECK(to_graph6(parse_graph6(text)) == text);
  }
  const Graph large = path_graph(100);
  CHECK(to_graph6(large).substr(0, 4) == "~?@c");
  CHECK(parse_graph6(to_graph6(large)) == large);
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# triangle\nn 3\n0 1\n1 2 # spine\n\n2 0\n");
  CHECK(g == complete_graph(3));
  CHECK(parse_edge_list(to_edge_list(path_graph(5))) == path_graph(5));
  CHECK(parse_graph_auto("n 2\n0 1\n") == complete_graph(2));
  CHECK(parse_graph_auto("Ch\n") == path_graph(4));
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

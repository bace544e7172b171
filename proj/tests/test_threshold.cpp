#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropigraph/error.hpp"
#include "tropigraph/threshold.hpp"

using namespace tropigraph;

namespace {

void check_certificate(const Graph& g) {
  const auto cert = threshold_certificate(g);
  CHECK(cert.is_threshold() == oracle::is_threshold(g));
  if (cert.is_threshold()) {
    const auto& seq = cert.creation_sequence();
    CHECK(static_cast<int>(seq.size()) == g.order());
    if (!seq.empty()) CHECK(seq.front().step == CreationStep::Isolated);
    CHECK(replay(seq, g.order()) == g);
  } else {
    CHECK(witness_holds(g, cert.witness()));
  }
}

void check_theta(const Graph& g) {
  const auto cover = theta(g);
  CHECK(cover.size() == oracle::theta(g));
  CHECK(cover.mode == CoverMode::Union);
  CHECK(cover_is_valid(g, cover));
  const auto bounds = theta_bounds(g);
  CHECK(bounds.lower <= cover.size());
  CHECK(cover.size() <= bounds.upper);
}

}  // namespace

TEST_CASE("small threshold graphs") {
  CHECK(is_threshold(Graph(0)));
  CHECK(is_threshold(Graph(1)));
  CHECK(is_threshold(star_graph(5)));
  CHECK(is_threshold(complete_graph(4)));
  CHECK(is_threshold(path_graph(3)));
  CHECK_FALSE(is_threshold(path_graph(4)));
  CHECK_FALSE(is_threshold(cycle_graph(4)));
  CHECK_FALSE(is_threshold(matching_graph(2)));
  // Dominating vertex over K1 + K2.
  CHECK(is_threshold(Graph(4, {{1, 2}, {0, 3}, {1, 3}, {2, 3}})));
}

TEST_CASE("certificates agree with the induced-subgraph characterization") {
  for (int n = 0; n <= 5; ++n) {
    const std::uint32_t total = 1U << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      check_certificate(oracle::labelled_graph(n, mask));
    }
  }
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) check_certificate(oracle::random_graph(6 + i % 4, rng));
}

TEST_CASE("threshold weights realize the graph inside (0, t)") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t total = 1U << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const Graph g = oracle::labelled_graph(n, mask);
      if (!oracle::is_threshold(g)) {
        CHECK_THROWS_AS(threshold_weights(g), NotThreshold);
        continue;
      }
      for (const Rational t : {Rational(1), Rational(7, 3)}) {
        const auto w = threshold_weights(g, t);
        CHECK(w.realizes(g));
        for (const auto& x : w.weights) {
          CHECK(x > 0);
          CHECK(x < t);
        }
      }
    }
  }
  CHECK_FALSE(threshold_weights(star_graph(2)).realizes(path_graph(3)));
}

TEST_CASE("threshold dimension of named graphs") {
  CHECK(theta(Graph(3)).size() == 0);
  CHECK(theta(complete_graph(5)).size() == 1);
  CHECK(theta(path_graph(4)).size() == 2);
  CHECK(theta(path_graph(6)).size() == 3);
  CHECK(theta(matching_graph(2)).size() == 2);
  CHECK(theta(matching_graph(3)).size() == 3);
  CHECK(theta(cycle_graph(4)).size() == 2);
  CHECK(theta(cycle_graph(5)).size() == 3);
  const int k33[] = {3, 3};
  CHECK(theta(complete_multipartite(k33)).size() == 3);
  const auto b = theta_bounds(cycle_graph(5));
  CHECK(b.lower == 3);
  CHECK(b.upper == 3);
}

TEST_CASE("threshold dimension agrees with exhaustive covering") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t total = 1U << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      check_theta(oracle::labelled_graph(n, mask));
    }
  }
  std::mt19937 rng(23);
  int done = 0;
  while (done < 60) {
    const Graph g = oracle::random_graph(6, rng, 0.45);
    if (g.size() > 14) continue;
    check_theta(g);
    ++done;
  }
}

TEST_CASE("triangle-free bounds are tight") {
  std::mt19937 rng(29);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_graph(3 + i % 6, rng, 0.35);
    if (!is_triangle_free(g)) continue;
    const auto b = theta_bounds(g);
    CHECK(b.lower == b.upper);
    CHECK(b.upper == g.order() - oracle::alpha(g));
    CHECK(theta(g).size() == b.upper);
  }
}

TEST_CASE("threshold intersection number") {
  const auto c4 = theta_hat(cycle_graph(4));
  CHECK(c4.size() == 2);
  CHECK(c4.mode == CoverMode::Intersection);
  CHECK(cover_is_valid(cycle_graph(4), c4));
  const int k33[] = {3, 3};
  CHECK(theta_hat(complete_multipartite(k33)).size() == 2);
  CHECK(theta_hat(star_graph(4)).size() == 1);
  CHECK(theta_hat(complete_graph(4)).size() == 0);

  std::mt19937 rng(31);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_graph(2 + i % 5, rng);
    const auto cover = theta_hat(g);
    CHECK(cover.size() == oracle::theta(complement(g)));
    CHECK(cover_is_valid(g, cover));
  }
}

TEST_CASE("cover validation") {
  const Graph p4 = path_graph(4);
  CoverSolution good{CoverMode::Union, {{{0, 1}, {1, 2}}, {{2, 3}}}};
  CHECK(cover_is_valid(p4, good));
  CoverSolution short_cover{CoverMode::Union, {{{0, 1}, {1, 2}}}};
  CHECK_FALSE(cover_is_valid(p4, short_cover));
  CoverSolution not_threshold{CoverMode::Union, {{{0, 1}, {1, 2}, {2, 3}}}};
  CHECK_FALSE(cover_is_valid(p4, not_threshold));
  CoverSolution extra{CoverMode::Union, {{{0, 1}, {1, 2}}, {{2, 3}, {0, 2}}}};
  CHECK_FALSE(cover_is_valid(p4, extra));
  CHECK(cover_is_valid(Graph(3), CoverSolution{}));
}

TEST_CASE("star cover") {
  const Graph c5 = cycle_graph(5);
  const auto mis = max_independent_set(c5);
  const auto cover = star_cover(c5, mis);
  CHECK(cover.size() == 3);
  CHECK(cover_is_valid(c5, cover));
}

TEST_CASE("largest induced threshold subgraph") {
  CHECK(max_induced_threshold(path_graph(6)).size() == 4);
  CHECK(max_induced_threshold(cycle_graph(4)).size() == 3);
  CHECK(max_induced_threshold(complete_graph(6)).size() == 6);
  std::mt19937 rng(37);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(1 + i % 9, rng);
    const auto set = max_induced_threshold(g);
    CHECK(static_cast<int>(set.size()) == oracle::max_induced_threshold_size(g));
    CHECK(is_threshold(induced(g, set)));
  }
}

TEST_CASE("search limits") {
  SearchLimits tight;
  tight.theta_vertices = 4;
  CHECK_THROWS_AS(theta(path_graph(5), tight), TooLarge);
  CHECK_THROWS_AS(max_induced_threshold(Graph(25)), TooLarge);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "hyperent/hypergraph.hpp"
#include "hyperent/models.hpp"

using namespace hyperent;

namespace {
const std::vector<Edge> kFig1A = {{1, 2, 3}, {3, 4, 5}, {3, 6, 7}};
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("construction canonicalizes, deduplicates and sorts") {
  UniformHypergraph h(7, 3, {{3, 2, 1}, {5, 4, 3}, {3, 2, 1}, {3, 6, 7}});
  CHECK(h.edge_count() == 3);
  CHECK(h.edges()[0] == Edge{1, 2, 3});
  CHECK(h.edges()[1] == Edge{3, 4, 5});
  CHECK(h.edges()[2] == Edge{3, 6, 7});

  // already-canonical input is a fixed point
  UniformHypergraph h2(7, 3, h.edges());
  CHECK(h2.edges() == h.edges());
}

TEST_CASE("construction rejects malformed edges") {
  CHECK_THROWS_WITH_AS(UniformHypergraph(5, 3, {{1, 2, 2}}),
                       doctest::Contains("{1,2,2}"), Error);
  try {
    UniformHypergraph(5, 3, {{1, 2, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateVertexInEdge);
  }
  try {
    UniformHypergraph(5, 3, {{1, 2, 9}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VertexOutOfRange);
  }
  try {
    UniformHypergraph(5, 3, {{1, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongEdgeArity);
  }
  CHECK_THROWS_AS(UniformHypergraph(2, 3, {}), Error);  // k > n
}

TEST_CASE("empty edge set accepted") {
  UniformHypergraph h(3, 3, {});
  CHECK(h.edge_count() == 0);
  CHECK(degrees(h) == std::vector<int>{0, 0, 0});
}

TEST_CASE("degrees") {
  UniformHypergraph fig(7, 3, kFig1A);
  CHECK(degrees(fig) == std::vector<int>{1, 1, 3, 1, 1, 1, 1});
  CHECK(degrees(UniformHypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}})) ==
        std::vector<int>{1, 2, 2, 1});

  // sum of degrees = k * m on random hypergraphs
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto h = random_uniform_hypergraph(8, 3, 1 + seed % 12, seed);
    int sum = 0;
    for (int d : degrees(h)) sum += d;
    CHECK(sum == 3 * static_cast<int>(h.edge_count()));
  }
}

TEST_CASE("isolated vertices") {
  CHECK(isolated_vertices(UniformHypergraph(7, 3, {{1, 2, 3}})) ==
        std::vector<int>{4, 5, 6, 7});
  CHECK(isolated_vertices(UniformHypergraph(3, 3, {{1, 2, 3}})).empty());
  // complete hypergraph has none
  auto complete = random_uniform_hypergraph(5, 3, 10, 0);
  CHECK(isolated_vertices(complete).empty());
}

TEST_CASE("shortest distances on the clique expansion") {
  UniformHypergraph fig(7, 3, kFig1A);
  auto d = shortest_distances(fig);
  CHECK(d(0, 6) == 2.0);  // 1 -> 3 -> 7
  CHECK(d(0, 0) == 0.0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(d(i, j) == d(j, i));

  auto iso = shortest_distances(UniformHypergraph(7, 3, {{1, 2, 3}}));
  CHECK(iso(0, 3) == kInf);

  // triangle inequality on finite entries
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int l = 0; l < 7; ++l)
        if (std::isfinite(d(i, j)) && std::isfinite(d(j, l)))
          CHECK(d(i, l) <= d(i, j) + d(j, l));
}

TEST_CASE("average path length") {
  UniformHypergraph single(7, 3, {{1, 2, 3}});
  CHECK(average_path_length(single, 4.0) == doctest::Approx(3.5714).epsilon(1e-4));
  CHECK(average_path_length(single) == kInf);

  UniformHypergraph tri(3, 3, {{1, 2, 3}});
  CHECK(average_path_length(tri) == doctest::Approx(1.0));

  auto complete = random_uniform_hypergraph(7, 3, 35, 1);
  CHECK(average_path_length(complete) == doctest::Approx(1.0));
}

TEST_CASE("index of dispersion uses the n-1 variance") {
  // degrees (1,1,1,0,0,0,0)
  UniformHypergraph single(7, 3, {{1, 2, 3}});
  CHECK(index_of_dispersion(single) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  // degrees (1,1,1,0,1,1,1): two disjoint edges
  UniformHypergraph two(7, 3, {{1, 2, 3}, {5, 6, 7}});
  CHECK(index_of_dispersion(two) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));

  // d-regular: zero dispersion
  UniformHypergraph matching(6, 3, {{1, 2, 3}, {4, 5, 6}});
  CHECK(index_of_dispersion(matching) == doctest::Approx(0.0));

  CHECK_THROWS_AS(index_of_dispersion(UniformHypergraph(3, 3, {})), Error);
}

TEST_CASE("clustering coefficients") {
  UniformHypergraph h(7, 3, {{1, 2, 3}, {2, 3, 4}, {1, 2, 4}});
  auto c = clustering_coefficients(h);
  CHECK(c.average == doctest::Approx(3.0 / 7.0).epsilon(1e-9));

  UniformHypergraph h5(7, 3,
                       {{1, 2, 3}, {2, 3, 4}, {1, 2, 4}, {1, 3, 4}, {3, 4, 5}});
  CHECK(clustering_coefficients(h5).average ==
        doctest::Approx(2.5 / 7.0).epsilon(1e-9));

  // single edge on n = k: every neighborhood has k-1 < k vertices
  UniformHypergraph tri(3, 3, {{1, 2, 3}});
  CHECK(clustering_coefficients(tri).average == doctest::Approx(0.0));

  // all coefficients in [0,1]; complete hypergraph averages to 1
  auto complete = random_uniform_hypergraph(7, 3, 35, 2);
  auto cc = clustering_coefficients(complete);
  CHECK(cc.average == doctest::Approx(1.0));
  for (double v : cc.per_vertex) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("small world coefficient") {
  // complete hypergraph: ensemble equals the graph itself, sigma = 1
  auto complete = random_uniform_hypergraph(6, 3, 20, 3);
  CHECK(small_world_coefficient(complete, 3, 42) == doctest::Approx(1.0));

  // zero clustering forces sigma = 0
  UniformHypergraph fig(7, 3, kFig1A);
  CHECK(small_world_coefficient(fig, 50, 7, 4.0) == doctest::Approx(0.0));

  // a 2-edge hypergraph can never cluster, so its ensemble degenerates
  UniformHypergraph matching(6, 3, {{1, 2, 3}, {4, 5, 6}});
  CHECK_THROWS_AS(small_world_coefficient(matching, 5, 7, 4.0), Error);
  // disconnected without a cap is degenerate as well
  CHECK_THROWS_AS(small_world_coefficient(matching, 5, 7), Error);
}

TEST_CASE("metric report aggregates") {
  UniformHypergraph h(7, 3, kFig1A);
  auto rep = metric_report(h, 4.0);
  CHECK(rep.degree_vector == degrees(h));
  CHECK(rep.index_of_dispersion.has_value());
  CHECK(!rep.small_world.has_value());

  auto empty_rep = metric_report(UniformHypergraph(3, 3, {}), 4.0);
  CHECK(!empty_rep.index_of_dispersion.has_value());
}

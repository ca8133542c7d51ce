#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "orliczlab/simplicial.hpp"

using namespace orliczlab;

namespace {

// Brute-force oracle for the coboundary: sum over deleted vertices with the
// permutation-sign evaluation, independent of the face tables.
double coboundary_oracle(const SimplicialComplex& X, const Cochain& theta,
                         const VertexTuple& sigma) {
  double acc = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    VertexTuple face;
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (j != i) face.push_back(sigma[j]);
    acc += (i % 2 == 0 ? 1.0 : -1.0) * cochain_value(X, theta, face);
  }
  return acc;
}

Cochain random_cochain(const SimplicialComplex& X, int k, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Cochain theta;
  theta.degree = k;
  theta.values = Eigen::VectorXd::NullaryExpr(X.count(k), [&](Eigen::Index) { return gauss(rng); });
  return theta;
}

}  // namespace

TEST_CASE("boundary faces and signs") {
  const SimplicialComplex X = octahedron_complex();
  const auto faces = boundary_faces(X, {0, 2});
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].first == VertexTuple{2});
  CHECK(faces[0].second == 1);
  CHECK(faces[1].first == VertexTuple{0});
  CHECK(faces[1].second == -1);

  const auto tri = boundary_faces(X, {0, 2, 4});
  REQUIRE(tri.size() == 3);
  CHECK(tri[0].second == 1);
  CHECK(tri[1].second == -1);
  CHECK(tri[2].second == 1);

  CHECK_THROWS_AS(boundary_faces(X, {0}), std::invalid_argument);
  CHECK_THROWS_AS(boundary_faces(X, {0, 1}), std::invalid_argument);  // not an edge here
}

TEST_CASE("coboundary on a path and a triangle") {
  const SimplicialComplex path = interval_complex(3);
  Cochain theta = random_cochain(path, 0, 2);
  const Cochain d = coboundary(path, theta);
  for (int e = 0; e < path.count(1); ++e) {
    const auto& t = path.simplices[1][e];
    CHECK(d.values[e] == doctest::Approx(theta.values[path.index_of({t[1]})] -
                                         theta.values[path.index_of({t[0]})]));
  }

  const SimplicialComplex tri = SimplicialComplex::from_simplices({{}, {}, {{0, 1, 2}}});
  Cochain ones;
  ones.degree = 1;
  ones.values = Eigen::VectorXd::Ones(3);
  const Cochain dones = coboundary(tri, ones);
  CHECK(dones.values[0] == doctest::Approx(1.0));  // 1 - 1 + 1
  CHECK(dones.values[0] ==
        doctest::Approx(coboundary_oracle(tri, ones, {0, 1, 2})));
}

TEST_CASE("delta compose delta is zero") {
  for (const auto& X : {circle_complex(8), torus_complex(4), octahedron_complex(),
                        icosahedron_complex(), barycentric_subdivision(octahedron_complex())}) {
    for (int k = 0; k + 2 <= X.dimension() + 1; ++k) {
      const Cochain theta = random_cochain(X, k, 7 + k);
      const Cochain dd = coboundary(X, coboundary(X, theta));
      if (dd.values.size() > 0) CHECK(dd.values.cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("alternating evaluation on permuted tuples") {
  const SimplicialComplex X = octahedron_complex();
  const Cochain theta = random_cochain(X, 2, 3);
  for (const auto& t : X.simplices[2]) {
    const double base = cochain_value(X, theta, t);
    // All 6 permutations of a triangle with their signs.
    const std::vector<std::pair<VertexTuple, int>> perms = {
        {{t[0], t[1], t[2]}, 1},  {{t[1], t[0], t[2]}, -1}, {{t[1], t[2], t[0]}, 1},
        {{t[2], t[1], t[0]}, -1}, {{t[0], t[2], t[1]}, -1}, {{t[2], t[0], t[1]}, 1}};
    for (const auto& [perm, sign] : perms)
      CHECK(cochain_value(X, theta, perm) == doctest::Approx(sign * base));
  }
  CHECK(cochain_value_or_zero(X, theta, {0, 0, 2}) == 0.0);  // degenerate
  CHECK(cochain_value_or_zero(X, theta, {0, 1, 2}) == 0.0);  // (0,1) is no edge
  CHECK_THROWS_AS(cochain_value(X, theta, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("cochain norms") {
  const SimplicialComplex X = circle_complex(5);
  Cochain zero;
  zero.degree = 1;
  zero.values = Eigen::VectorXd::Zero(5);
  CHECK(cochain_norm(make_power(2.0), zero) == 0.0);

  Cochain two;
  two.degree = 1;
  two.values = Eigen::VectorXd::Zero(5);
  two.values[0] = 3;
  two.values[1] = 4;
  CHECK(cochain_norm(make_power(2.0), two) == doctest::Approx(5.0).epsilon(1e-11));

  Cochain ones;
  ones.degree = 1;
  ones.values = Eigen::VectorXd::Ones(5);
  CHECK(cochain_norm(make_power(1.0), ones) == doctest::Approx(5.0).epsilon(1e-11));
}

TEST_CASE("coboundary norm estimate") {
  const YoungFunction phi2 = make_power(2.0);
  // Single edge: the optimum sqrt(2) is found by construction.
  const SimplicialComplex edge = interval_complex(1);
  const double est = coboundary_norm_estimate(phi2, edge, 0, 200, 1);
  // Exhaustive oracle over directions (cos a, sin a).
  double oracle = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double a = 2.0 * M_PI * i / 5000;
    Cochain theta;
    theta.degree = 0;
    theta.values = Eigen::VectorXd(2);
    theta.values << std::cos(a), std::sin(a);
    const Cochain d = coboundary(edge, theta);
    oracle = std::max(oracle, std::abs(d.values[0]));
  }
  CHECK(oracle == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(est <= oracle + 1e-9);
  CHECK(est > 0.9 * oracle);  // random trials get close in 2 dimensions

  // Empty target octahedron k=2 -> 0.
  CHECK(coboundary_norm_estimate(phi2, octahedron_complex(), 2, 5, 0) == 0.0);

  // Stats bound (k+2)*N on the octahedron.
  const SimplicialComplex oct = octahedron_complex();
  const GeometryStats gs = geometry_stats(oct);
  for (int k = 0; k < 2; ++k)
    CHECK(coboundary_norm_estimate(phi2, oct, k, 100, 0) <= (k + 2.0) * gs.incidence_bound + 1e-9);
}

TEST_CASE("generators have the expected counts") {
  const SimplicialComplex circle = circle_complex(12);
  CHECK(circle.count(0) == 12);
  CHECK(circle.count(1) == 12);

  const SimplicialComplex torus = torus_complex(5);
  CHECK(torus.count(0) == 25);
  CHECK(torus.count(1) == 75);
  CHECK(torus.count(2) == 50);

  const SimplicialComplex oct = octahedron_complex();
  CHECK(oct.count(0) == 6);
  CHECK(oct.count(1) == 12);
  CHECK(oct.count(2) == 8);

  const SimplicialComplex ico = icosahedron_complex();
  CHECK(ico.count(0) == 12);
  CHECK(ico.count(1) == 30);
  CHECK(ico.count(2) == 20);

  // Barycentric subdivision: one new vertex per simplex, 6x the triangles.
  const SimplicialComplex sub = barycentric_subdivision(oct);
  CHECK(sub.count(0) == 6 + 12 + 8);
  CHECK(sub.count(2) == 6 * 8);
  CHECK(sub.count(0) - sub.count(1) + sub.count(2) == 2);  // Euler characteristic

  for (const auto& X : {circle, torus, oct, ico, sub}) CHECK_NOTHROW(X.validate());
  CHECK_THROWS_AS(torus_complex(2), std::invalid_argument);
  CHECK_THROWS_AS(circle_complex(2), std::invalid_argument);
}

TEST_CASE("geometry stats") {
  const GeometryStats gs = geometry_stats(octahedron_complex());
  CHECK(gs.max_vertex_degree == 4);
  // Vertex + 4 edges + 4 triangles containing any vertex.
  CHECK(gs.incidence_bound == 9);
}

TEST_CASE("complex JSON round trip and validation") {
  const SimplicialComplex X = torus_complex(3);
  const SimplicialComplex Y = complex_from_json(complex_to_json(X));
  CHECK(X.simplices == Y.simplices);
  CHECK(X.vertices == Y.vertices);

  // Non-closed input (edge without its vertices listed) is rejected.
  CHECK_THROWS_AS(complex_from_json(R"({"vertices":[0,1],"simplices":{"1":[[0,1]]}})"),
                  std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "orliczlab/zigzag.hpp"

using namespace orliczlab;

namespace {

Cochain random_cochain(const SimplicialComplex& X, int k, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Cochain theta;
  theta.degree = k;
  theta.values = Eigen::VectorXd::NullaryExpr(X.count(k), [&](Eigen::Index) { return gauss(rng); });
  return theta;
}

}  // namespace

TEST_CASE("circle winding form") {
  const Mesh mesh = circle_mesh(12);
  const StarCover cover = StarCover::build(mesh);
  Cochain theta;
  theta.degree = 1;
  theta.values = Eigen::VectorXd::Constant(12, 2.0 * M_PI / 12.0);
  const PiecewiseForm omega = to_piecewise(whitney_interpolate(mesh, theta));
  const ZigzagResult zr = zigzag_derham_to_simplicial(mesh, cover, omega);
  REQUIRE(zr.ok);
  // Total sum reproduces 2*pi up to the documented global sign.
  CHECK(std::abs(std::abs(zr.cochain.values.sum()) - 2.0 * M_PI) < 1e-6);
  // Same class as the direct integration cochain, up to that sign.
  const Cochain direct = de_rham_map(mesh, omega);
  const LinearComplex cx = LinearComplex::from_simplicial(mesh.complex);
  const Eigen::VectorXd h = harmonic_representative(cx, 1, 0);
  const double a = h.dot(zr.cochain.values), b = h.dot(direct.values);
  CHECK(std::abs(std::abs(a) - std::abs(b)) < 1e-6);
}

TEST_CASE("zero form maps to the zero cochain") {
  const Mesh mesh = circle_mesh(6);
  const StarCover cover = StarCover::build(mesh);
  const ZigzagResult zr =
      zigzag_derham_to_simplicial(mesh, cover, PiecewiseForm::zero(mesh, 1));
  REQUIRE(zr.ok);
  CHECK(zr.cochain.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exact forms map to delta-exact cochains") {
  for (const Mesh& mesh : {circle_mesh(8), torus_mesh(3), octahedron_mesh()}) {
    const StarCover cover = StarCover::build(mesh);
    const LinearComplex cx = LinearComplex::from_simplicial(mesh.complex);
    const int n = mesh.dim();
    for (int k = 1; k <= n; ++k) {
      const Eigen::MatrixXd harmonic = harmonic_representatives(cx, k);
      if (harmonic.cols() == 0) continue;
      const Cochain sigma = random_cochain(mesh.complex, k - 1, 13 * k);
      const Cochain dsigma = coboundary(mesh.complex, sigma);
      const PiecewiseForm omega = to_piecewise(whitney_interpolate(mesh, dsigma));
      const ZigzagResult zr = zigzag_derham_to_simplicial(mesh, cover, omega);
      REQUIRE(zr.ok);
      CHECK((harmonic.transpose() * zr.cochain.values).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("class invariance under adding an exact form") {
  const Mesh mesh = torus_mesh(3);
  const StarCover cover = StarCover::build(mesh);
  const LinearComplex cx = LinearComplex::from_simplicial(mesh.complex);
  const Eigen::MatrixXd harmonic = harmonic_representatives(cx, 1);

  Cochain closed;
  closed.degree = 1;
  closed.values = harmonic.col(0);
  const Cochain sigma = random_cochain(mesh.complex, 0, 99);
  Cochain perturbed = closed;
  perturbed.values += coboundary(mesh.complex, sigma).values;

  const ZigzagResult a = zigzag_derham_to_simplicial(
      mesh, cover, to_piecewise(whitney_interpolate(mesh, closed)));
  const ZigzagResult b = zigzag_derham_to_simplicial(
      mesh, cover, to_piecewise(whitney_interpolate(mesh, perturbed)));
  REQUIRE(a.ok);
  REQUIRE(b.ok);
  CHECK((harmonic.transpose() * (a.cochain.values - b.cochain.values)).cwiseAbs().maxCoeff() <
        1e-6);
}

TEST_CASE("betti numbers through the zigzag") {
  SUBCASE("circle") {
    const Mesh mesh = circle_mesh(12);
    const StarCover cover = StarCover::build(mesh);
    for (int k = 0; k <= 1; ++k) {
      const ZigzagBettiReport r = zigzag_betti(mesh, cover, k, 1);
      REQUIRE(r.ok);
      CHECK(r.zigzag_rank == (k == 0 ? 1 : 1));
      CHECK(r.simplicial_betti == r.zigzag_rank);
    }
  }
  SUBCASE("torus") {
    const Mesh mesh = torus_mesh(3);
    const StarCover cover = StarCover::build(mesh);
    const std::vector<int> expect{1, 2, 1};
    for (int k = 0; k <= 2; ++k) {
      const ZigzagBettiReport r = zigzag_betti(mesh, cover, k, 2);
      REQUIRE(r.ok);
      CHECK(r.zigzag_rank == expect[k]);
      CHECK(r.max_exact_pairing < 1e-6);
    }
  }
  SUBCASE("octahedron sphere") {
    const Mesh mesh = octahedron_mesh();
    const StarCover cover = StarCover::build(mesh);
    const std::vector<int> expect{1, 0, 1};
    for (int k = 0; k <= 2; ++k) {
      const ZigzagBettiReport r = zigzag_betti(mesh, cover, k, 3);
      REQUIRE(r.ok);
      CHECK(r.zigzag_rank == expect[k]);
    }
  }
}

TEST_CASE("non-closed input is a reported breakdown") {
  const Mesh mesh = torus_mesh(3);
  const StarCover cover = StarCover::build(mesh);
  // A non-closed Whitney 1-form: random coefficients.
  const Cochain theta = random_cochain(mesh.complex, 1, 7);
  const PiecewiseForm omega = to_piecewise(whitney_interpolate(mesh, theta));
  const ZigzagResult zr = zigzag_derham_to_simplicial(mesh, cover, omega);
  CHECK(!zr.ok);
  CHECK(zr.failure == "input form is not closed");
}

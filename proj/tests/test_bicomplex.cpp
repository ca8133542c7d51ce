#include <doctest.h>

#include <cmath>
#include <random>

#include "orliczlab/bicomplex.hpp"
#include "orliczlab/quadrature.hpp"

using namespace orliczlab;

namespace {

Mesh single_triangle() {
  SimplicialComplex X = SimplicialComplex::from_simplices({{}, {}, {{0, 1, 2}}});
  Eigen::MatrixXd coords(3, 2);
  coords << 0, 0, 1, 0, 0, 1;
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

Mesh two_triangles() {
  SimplicialComplex X = SimplicialComplex::from_simplices({{}, {}, {{0, 1, 2}, {1, 2, 3}}});
  Eigen::MatrixXd coords(4, 2);
  coords << 0, 0, 1, 0, 0, 1, 1, 1;
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

double identity_residual_P(const Mesh& mesh, const StarCover& cover, int k, int m,
                           unsigned seed) {
  const BicomplexElement w = random_poly_element(mesh, cover, k, m, 2, seed, false);
  const BicomplexElement pd = column_homotopy_P(d_double_prime(w));
  const BicomplexElement dp =
      m == 0 ? column_homotopy_P(w) : d_double_prime(column_homotopy_P(w));
  const ElementSample spd = sample_element(pd, 4), sdp = sample_element(dp, 4),
                      sw = sample_element(w, 4);
  double worst = 0.0;
  for (std::size_t d = 0; d < sw.values.size(); ++d)
    for (std::size_t t = 0; t < sw.values[d].size(); ++t)
      worst = std::max(worst,
                       (spd.values[d][t] + sdp.values[d][t] - sw.values[d][t]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

TEST_CASE("star cover invariants") {
  for (const Mesh& mesh : {torus_mesh(4), octahedron_mesh(), ball2_mesh(0.34), circle_mesh(8)}) {
    const StarCover cover = StarCover::build(mesh);
    const int n = mesh.dim();
    for (int m = 0; m <= n; ++m) {
      CHECK(static_cast<int>(cover.stars[m].size()) == mesh.complex.count(m));
      for (int i = 0; i < mesh.complex.count(m); ++i) {
        const StarChart& star = cover.star(m, i);
        CHECK(!star.tops.empty());  // U_Delta nonempty iff Delta in X
        // The center (barycenter of Delta) lies inside the star.
        CHECK(star.contains(star.center, 1e-9));
        // The averaging ball stays inside the star.
        if (star.r > 0.0) {
          for (int dir = 0; dir < 8; ++dir) {
            Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
            if (n == 1) {
              u[0] = dir % 2 == 0 ? 1.0 : -1.0;
            } else {
              const double a = 2.0 * M_PI * dir / 8.0;
              u[0] = std::cos(a);
              u[1] = std::sin(a);
            }
            CHECK(star.contains(star.center + 0.999 * star.r * u, 1e-7));
          }
        }
        // Star-shaped about the ball: segment sampling.
        CHECK(star_shape_violation(star, 40, 17) == 0.0);
      }
    }
  }
}

TEST_CASE("curved vertex stars degrade to apex cones") {
  const StarCover cover = StarCover::build(octahedron_mesh());
  for (int v = 0; v < 6; ++v) {
    CHECK(!cover.star(0, v).flat);  // cone angle 4*pi/3 != 2*pi
    CHECK(cover.star(0, v).r == 0.0);
  }
  // Edge and triangle stars are developable and keep a positive radius.
  for (int e = 0; e < 12; ++e) CHECK(cover.star(1, e).r > 0.0);
  const StarCover flat = StarCover::build(torus_mesh(4));
  for (int v = 0; v < 16; ++v) {
    CHECK(flat.star(0, v).flat);
    CHECK(flat.star(0, v).r > 0.0);
  }
}

TEST_CASE("partition of unity") {
  const Mesh mesh = torus_mesh(3);
  const SimplexRule rule = simplex_rule(2, 3);
  for (int T = 0; T < mesh.complex.count(2); ++T) {
    for (int q = 0; q < rule.weights.size(); ++q) {
      const Eigen::VectorXd y = mesh.bary_to_intrinsic(T, rule.barycentric.row(q).transpose());
      double sum = 0.0;
      for (int v : mesh.complex.simplices[2][T]) {
        const double eta = hat_value(mesh, v, T, y);
        CHECK(eta >= -1e-14);
        CHECK(eta <= 1.0 + 1e-14);
        sum += eta;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
      // Vertices outside the simplex contribute nothing.
      for (int v = 0; v < mesh.complex.count(0); ++v) {
        bool in = false;
        for (int u : mesh.complex.simplices[2][T]) in |= (u == v);
        if (!in) CHECK(hat_value(mesh, v, T, y) == 0.0);
      }
    }
  }
  CHECK(max_hat_gradient(mesh) > 0.0);
  CHECK(std::isfinite(max_hat_gradient(mesh)));
}

TEST_CASE("d' and d'' basics") {
  const Mesh mesh = two_triangles();
  const StarCover cover = StarCover::build(mesh);

  SUBCASE("constant 0-form components have zero derivative") {
    BicomplexElement w = BicomplexElement::zero(mesh, cover, 0, 0);
    for (auto& f : w.fields)
      for (auto& cs : f.poly) cs[0] = Polynomial::constant(2.0);
    CHECK(nodewise_max(d_prime(w)) == 0.0);
  }
  SUBCASE("d'd' = 0 and d''d'' = 0 on random elements") {
    for (int m = 0; m <= 2; ++m) {
      const BicomplexElement w = random_poly_element(mesh, cover, 0, m, 3, 5 + m, false);
      CHECK(nodewise_max(d_prime(d_prime(w))) < 1e-12);
      CHECK(nodewise_max(d_double_prime(d_double_prime(w))) < 1e-12);
    }
  }
  SUBCASE("d' flips sign against the plain derivative on an odd row") {
    // omega in C^{0,1} with every edge component the hat of vertex 0.
    const Mesh tri = single_triangle();
    const StarCover tric = StarCover::build(tri);
    BicomplexElement w = BicomplexElement::zero(tri, tric, 0, 1);
    // hat of vertex 0 in intrinsic coords: 1 - x - y on the unit triangle.
    Polynomial hat = Polynomial::constant(1.0) - Polynomial::variable(0) - Polynomial::variable(1);
    for (auto& f : w.fields) f.poly[0][0] = hat;
    const BicomplexElement dw = d_prime(w);
    // d(hat) = (-1,-1); with the (-1)^1 sign the components are (+1,+1).
    const Eigen::VectorXd y = tri.bary_to_intrinsic(0, Eigen::Vector3d(0.4, 0.3, 0.3));
    for (int e = 0; e < 3; ++e) {
      const Eigen::VectorXd comps = dw.eval(e, 0, y);
      CHECK(comps[0] == doctest::Approx(1.0));
      CHECK(comps[1] == doctest::Approx(1.0));
    }
  }
  SUBCASE("d'' of a restricted global form vanishes") {
    std::vector<Polynomial> amb(2);
    amb[0] = Polynomial::variable(1);
    amb[1] = Polynomial::constant(0.5);
    const PiecewiseForm form = PiecewiseForm::from_ambient(mesh, 1, amb);
    const BicomplexElement w = restrict_E(mesh, cover, form);
    CHECK(nodewise_max(d_double_prime(w)) < 1e-13);
  }
  SUBCASE("d'' on distinct vertex fields") {
    // omega_v = eta_v (the hat of v) as a 0-form on U_v:
    // (d''omega)_(a,b) = eta_b - eta_a nodewise.
    BicomplexElement w = BicomplexElement::zero(mesh, cover, 0, 0);
    for (int v = 0; v < mesh.complex.count(0); ++v) {
      const StarChart& star = cover.star(0, v);
      for (std::size_t t = 0; t < star.tops.size(); ++t) {
        const int T = star.tops[t];
        // Build the hat polynomial by sampling-free construction: reuse
        // barycentric rows via mesh data.
        const auto& tuple = mesh.complex.simplices[2][T];
        int local = -1;
        for (std::size_t i = 0; i < tuple.size(); ++i)
          if (tuple[i] == mesh.complex.vertices[v]) local = static_cast<int>(i);
        REQUIRE(local >= 0);
        const Eigen::MatrixXd Rinv = mesh.charts[T].Rinv;
        Polynomial hat;
        if (local == 0) {
          hat = Polynomial::constant(1.0);
          for (int i = 0; i < 2; ++i) hat += (-Rinv.col(i).sum()) * Polynomial::variable(i);
        } else {
          for (int i = 0; i < 2; ++i) hat += Rinv(local - 1, i) * Polynomial::variable(i);
        }
        w.fields[v].poly[t][0] = hat;
      }
    }
    const BicomplexElement dw = d_double_prime(w);
    const SimplexRule rule = simplex_rule(2, 2);
    for (int e = 0; e < mesh.complex.count(1); ++e) {
      const auto& t = mesh.complex.simplices[1][e];
      const StarChart& star = cover.star(1, e);
      for (std::size_t lt = 0; lt < star.tops.size(); ++lt) {
        const int T = star.tops[lt];
        for (int q = 0; q < rule.weights.size(); ++q) {
          const Eigen::VectorXd y = mesh.bary_to_intrinsic(T, rule.barycentric.row(q).transpose());
          const double expect = hat_value(mesh, t[1], T, y) - hat_value(mesh, t[0], T, y);
          CHECK(dw.eval(e, static_cast<int>(lt), y)[0] == doctest::Approx(expect).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("bicomplex modular and norm") {
  const Mesh mesh = single_triangle();
  const StarCover cover = StarCover::build(mesh);
  const YoungFunction phi2 = make_power(2.0);

  SUBCASE("zero element") {
    const BicomplexElement w = BicomplexElement::zero(mesh, cover, 1, 0);
    CHECK(bicomplex_modular(phi2, w, 1.0) == 0.0);
    CHECK(bicomplex_norm(phi2, w) == 0.0);
  }
  SUBCASE("constant on a single vertex star at alpha = |c| gives the volume") {
    BicomplexElement w = BicomplexElement::zero(mesh, cover, 0, 0);
    w.fields[0].poly[0][0] = Polynomial::constant(-2.0);
    // Other vertex fields stay zero; phi(0) = 0 contributes nothing.
    const double vol = mesh.charts[0].volume;
    for (double p : {1.0, 2.0, 3.0})
      CHECK(bicomplex_modular(make_power(p), w, 2.0) == doctest::Approx(vol).epsilon(1e-12));
  }
  SUBCASE("modular is nonincreasing in alpha") {
    const BicomplexElement w = random_poly_element(mesh, cover, 1, 0, 2, 3, false);
    const double m1 = bicomplex_modular(phi2, w, 1.0);
    const double m2 = bicomplex_modular(phi2, w, 2.0);
    const double m4 = bicomplex_modular(phi2, w, 4.0);
    CHECK(m1 >= m2);
    CHECK(m2 >= m4);
  }
}

TEST_CASE("P identity is exact") {
  const Mesh torus = torus_mesh(3);
  const StarCover cover = StarCover::build(torus);
  for (int k = 0; k <= 1; ++k)
    for (int m = 0; m <= 1; ++m)
      CHECK(identity_residual_P(torus, cover, k, m, 11 + k + 3 * m) < 1e-12);

  // Restriction family: d'' P^0 omega = 0 and the m = 0 identity.
  const Mesh two = two_triangles();
  const StarCover tcov = StarCover::build(two);
  std::vector<Polynomial> amb(2);
  amb[0] = Polynomial::variable(0);
  const PiecewiseForm form = PiecewiseForm::from_ambient(two, 1, amb);
  const BicomplexElement w = restrict_E(two, tcov, form);
  const BicomplexElement p0 = column_homotopy_P(w);
  CHECK(nodewise_max(d_double_prime(p0)) < 1e-13);
  CHECK(identity_residual_P(two, tcov, 1, 1, 23) < 1e-12);
}

TEST_CASE("anticommutation of d' and d''") {
  const Mesh mesh = two_triangles();
  const StarCover cover = StarCover::build(mesh);
  for (int m = 0; m <= 1; ++m) {
    const BicomplexElement w = random_poly_element(mesh, cover, 0, m, 2, 31 + m, false);
    const BicomplexElement a = d_double_prime(d_prime(w));
    const BicomplexElement b = d_prime(d_double_prime(w));
    const ElementSample sa = sample_element(a, 4), sb = sample_element(b, 4);
    double worst = 0.0;
    for (std::size_t d = 0; d < sa.values.size(); ++d)
      for (std::size_t t = 0; t < sa.values[d].size(); ++t)
        worst = std::max(worst, (sa.values[d][t] + sb.values[d][t]).cwiseAbs().maxCoeff());
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("H on exact forms recovers the centered primitive") {
  // Single triangle: H(df)(y) = f(y) - f(center) with the center-point rule.
  const Mesh mesh = single_triangle();
  const StarCover cover = StarCover::build(mesh);
  std::vector<Polynomial> amb(1);
  amb[0] = Polynomial::variable(0) * Polynomial::variable(1) + Polynomial::variable(0);
  const PiecewiseForm f = PiecewiseForm::from_ambient(mesh, 0, amb);
  const PiecewiseForm df = f.derivative();
  const BicomplexElement w = restrict_E(mesh, cover, df);
  const BicomplexElement hw = row_homotopy_H(w);

  const StarChart& star = cover.star(0, 0);
  const Eigen::VectorXd c_intr = star.to_intrinsic(0, star.center);
  const double f_center = f.eval(0, c_intr)[0];
  const SimplexRule rule = simplex_rule(2, 3);
  for (int q = 0; q < rule.weights.size(); ++q) {
    const Eigen::VectorXd y = mesh.bary_to_intrinsic(0, rule.barycentric.row(q).transpose());
    CHECK(hw.eval(0, 0, y)[0] ==
          doctest::Approx(f.eval(0, y)[0] - f_center).epsilon(1e-12));
  }

  // With a genuine averaging ball on a flat edge star (bidegree (1,1), so H
  // carries the sign (-1)^1), H(df) = -(f - avg(f)) where the average uses
  // the same ball rule.
  const Mesh two = two_triangles();
  const StarCover tcov = StarCover::build(two);
  const PiecewiseForm f2 = PiecewiseForm::from_ambient(two, 0, amb);
  const PiecewiseForm df2 = f2.derivative();
  BicomplexElement w2 = BicomplexElement::zero(two, tcov, 1, 1);
  for (int e = 0; e < two.complex.count(1); ++e) {
    const StarChart& star = tcov.star(1, e);
    for (std::size_t t = 0; t < star.tops.size(); ++t)
      w2.fields[e].poly[t] = df2.comps[star.tops[t]];
  }
  HOptions opt;
  opt.radial = 2;
  opt.angular = 4;
  const BicomplexElement hw2 = row_homotopy_H(w2, opt);
  // Average of f over the ball of the middle edge's star (edge (1,2) lex idx?).
  int mid_edge = -1;
  for (int e = 0; e < two.complex.count(1); ++e)
    if (tcov.star(1, e).tops.size() == 2) mid_edge = e;
  REQUIRE(mid_edge >= 0);
  const StarChart& estar = tcov.star(1, mid_edge);
  const BallRule ball = ball_rule(2, estar.r, opt.radial, opt.angular, 1);
  double favg = 0.0;
  for (int q = 0; q < ball.weights.size(); ++q) {
    const Eigen::VectorXd s = estar.center + ball.nodes.row(q).transpose();
    const int local = estar.locate(s);
    favg += ball.weights[q] * f2.eval(estar.tops[local], estar.to_intrinsic(local, s))[0];
  }
  favg /= ball.weights.sum();
  const SimplexRule rule2 = simplex_rule(2, 2);
  for (std::size_t lt = 0; lt < estar.tops.size(); ++lt) {
    const int T = estar.tops[lt];
    for (int q = 0; q < rule2.weights.size(); ++q) {
      const Eigen::VectorXd y = two.bary_to_intrinsic(T, rule2.barycentric.row(q).transpose());
      // m = 1 row: H carries the (-1)^m sign.
      CHECK(hw2.eval(mid_edge, static_cast<int>(lt), y)[0] ==
            doctest::Approx(-(f2.eval(T, y)[0] - favg)).epsilon(1e-10));
    }
  }
}

TEST_CASE("H identity on a closed element") {
  // d'H(omega) = omega for a d'-closed element, d' by finite differences.
  const Mesh mesh = single_triangle();
  const StarCover cover = StarCover::build(mesh);
  std::vector<Polynomial> amb(2);
  amb[0] = Polynomial::variable(1);
  amb[1] = Polynomial::variable(0);  // closed: d(y dx + x dy) = 0
  const PiecewiseForm form = PiecewiseForm::from_ambient(mesh, 1, amb);
  const BicomplexElement w = restrict_E(mesh, cover, form);
  const BicomplexElement hw = row_homotopy_H(w);
  const double step = 1e-5;
  const SimplexRule rule = simplex_rule(2, 2);
  for (int q = 0; q < rule.weights.size(); ++q) {
    const Eigen::VectorXd y = mesh.bary_to_intrinsic(0, rule.barycentric.row(q).transpose());
    for (int j = 0; j < 2; ++j) {
      Eigen::VectorXd yp = y, ym = y;
      yp[j] += step;
      ym[j] -= step;
      const double deriv = (hw.eval(0, 0, yp)[0] - hw.eval(0, 0, ym)[0]) / (2.0 * step);
      CHECK(deriv == doctest::Approx(form.eval(0, y)[j]).epsilon(1e-3));
    }
  }
  // The zero element maps to zero.
  const BicomplexElement z = BicomplexElement::zero(mesh, cover, 1, 0);
  CHECK(nodewise_max(row_homotopy_H(z)) < 1e-15);
}

TEST_CASE("glue and constants") {
  const Mesh mesh = octahedron_mesh();
  const StarCover cover = StarCover::build(mesh);
  const YoungFunction phi2 = make_power(2.0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SUBCASE("restrict then glue is the identity") {
    Cochain theta;
    theta.degree = 1;
    theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(1),
                                                [&](Eigen::Index) { return gauss(rng); });
    const PiecewiseForm form = to_piecewise(whitney_interpolate(mesh, theta));
    const PiecewiseForm glued = glue_E(restrict_E(mesh, cover, form), 1e-8);
    const SampledComass a = sample_comass(mesh, form, 3), b = sample_comass(mesh, glued, 3);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("glue of the constant family is the constant") {
    std::vector<Polynomial> amb(1);
    amb[0] = Polynomial::constant(1.5);
    const PiecewiseForm c = PiecewiseForm::from_ambient(mesh, 0, amb);
    const PiecewiseForm glued = glue_E(restrict_E(mesh, cover, c), 1e-10);
    const SampledComass s = sample_comass(mesh, glued, 2);
    CHECK((s.values.array() - 1.5).abs().maxCoeff() < 1e-13);
  }
  SUBCASE("norm comparison stays in [1, n+1]") {
    for (int trial = 0; trial < 20; ++trial) {
      Cochain theta;
      theta.degree = 1;
      theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(1),
                                                  [&](Eigen::Index) { return gauss(rng); });
      const PiecewiseForm form = to_piecewise(whitney_interpolate(mesh, theta));
      const BicomplexElement w = restrict_E(mesh, cover, form);
      const double nc = bicomplex_norm(phi2, w, 1e-12, 4);
      const SampledComass s = sample_comass(mesh, form, 4);
      const double nl = luxemburg_norm(phi2, s.values, DiscreteMeasure{s.weights});
      CHECK(nc / nl >= 1.0 - 1e-9);
      CHECK(nc / nl <= 3.0 + 1e-9);
    }
  }
  SUBCASE("disagreeing overlaps are rejected") {
    BicomplexElement w = random_poly_element(mesh, cover, 1, 0, 1, 77, false);
    CHECK_THROWS_AS(glue_E(w, 1e-9), std::invalid_argument);
  }
  SUBCASE("constants_F is the inverse of filling constants") {
    Cochain theta;
    theta.degree = 1;
    theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(1),
                                                [&](Eigen::Index) { return gauss(rng); });
    const BicomplexElement w = constants_F_inverse(mesh, cover, theta);
    const Cochain back = constants_F(w, 1e-10);
    CHECK((back.values - theta.values).cwiseAbs().maxCoeff() < 1e-12);

    // All-ones family.
    Cochain ones;
    ones.degree = 2;
    ones.values = Eigen::VectorXd::Ones(mesh.complex.count(2));
    CHECK((constants_F(constants_F_inverse(mesh, cover, ones), 1e-10).values.array() - 1.0)
              .abs()
              .maxCoeff() < 1e-13);
  }
  SUBCASE("F intertwines d'' with the coboundary") {
    for (int m = 0; m <= 1; ++m) {
      Cochain theta;
      theta.degree = m;
      theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(m),
                                                  [&](Eigen::Index) { return gauss(rng); });
      const BicomplexElement w = constants_F_inverse(mesh, cover, theta);
      const Cochain lhs = constants_F(d_double_prime(w), 1e-9);
      const Cochain rhs = coboundary(mesh.complex, theta);
      CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("non-constant components are rejected") {
    const BicomplexElement w = random_poly_element(mesh, cover, 0, 1, 2, 91, false);
    CHECK_THROWS_AS(constants_F(w, 1e-9), std::invalid_argument);
  }
}

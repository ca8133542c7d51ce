#include <doctest.h>

#include <cmath>

#include "orliczlab/polynomial.hpp"
#include "orliczlab/quadrature.hpp"

using namespace orliczlab;

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("Gauss-Legendre moments") {
  for (int n : {1, 2, 4, 8, 16}) {
    const Rule1D g = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += g.weights[i] * std::pow(g.nodes[i], k);
      CHECK(acc == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
  }
  // Smooth function at high order.
  const Rule1D g = gauss_legendre(32);
  double acc = 0.0;
  for (int i = 0; i < 32; ++i) acc += g.weights[i] * std::exp(g.nodes[i]);
  CHECK(acc == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Jacobi moments for (1-x)^alpha") {
  for (double alpha : {1.0, 2.0}) {
    for (int n : {2, 4, 8}) {
      const Rule1D g = gauss_jacobi(n, alpha);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += g.weights[i] * std::pow(g.nodes[i], k);
        // int_0^1 (1-x)^alpha x^k dx = B(k+1, alpha+1)
        const double exact = std::tgamma(k + 1.0) * std::tgamma(alpha + 1.0) /
                             std::tgamma(k + alpha + 2.0);
        CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("simplex rules integrate monomials exactly") {
  SUBCASE("triangle") {
    const SimplexRule rule = simplex_rule(2, 4);  // exact to degree 7
    CHECK(rule.weights.sum() == doctest::Approx(0.5).epsilon(1e-14));
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 4; ++b) {
        double acc = 0.0;
        for (int q = 0; q < rule.weights.size(); ++q) {
          const double x = rule.barycentric(q, 1), y = rule.barycentric(q, 2);
          acc += rule.weights[q] * std::pow(x, a) * std::pow(y, b);
        }
        const double exact = factorial(a) * factorial(b) / factorial(a + b + 2);
        CHECK(acc == doctest::Approx(exact).epsilon(1e-13));
      }
    }
  }
  SUBCASE("tetrahedron") {
    const SimplexRule rule = simplex_rule(3, 4);
    CHECK(rule.weights.sum() == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        for (int c = 0; a + b + c <= 3; ++c) {
          double acc = 0.0;
          for (int q = 0; q < rule.weights.size(); ++q) {
            acc += rule.weights[q] * std::pow(rule.barycentric(q, 1), a) *
                   std::pow(rule.barycentric(q, 2), b) * std::pow(rule.barycentric(q, 3), c);
          }
          const double exact =
              factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3);
          CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("ball rules") {
  SUBCASE("2d volume and moments") {
    const BallRule b = ball_rule(2, 1.0, 6, 12);
    CHECK(b.volume() == doctest::Approx(M_PI).epsilon(1e-12));
    double x2 = 0.0;
    for (int q = 0; q < b.weights.size(); ++q) x2 += b.weights[q] * b.nodes(q, 0) * b.nodes(q, 0);
    CHECK(x2 == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
  }
  SUBCASE("3d volume and moments") {
    const BallRule b = ball_rule(3, 1.0, 6, 10, 6);
    CHECK(b.volume() == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
    double z2 = 0.0;
    for (int q = 0; q < b.weights.size(); ++q) z2 += b.weights[q] * b.nodes(q, 2) * b.nodes(q, 2);
    CHECK(z2 == doctest::Approx(4.0 * M_PI / 15.0).epsilon(1e-12));
  }
  SUBCASE("1d") {
    const BallRule b = ball_rule(1, 0.5, 4, 0);
    CHECK(b.volume() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration handles kinks") {
  const double v = integrate_adaptive([](double t) { return std::abs(t - 0.3); }, 0.0, 1.0, 1e-12);
  // int = 0.3^2/2 + 0.7^2/2
  CHECK(v == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-10));
}

TEST_CASE("polynomial algebra") {
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  Polynomial p = x * x + 3.0 * y;
  Eigen::VectorXd at(2);
  at << 2.0, 5.0;
  CHECK(p.eval(at) == doctest::Approx(19.0));
  CHECK(p.derivative(0).eval(at) == doctest::Approx(4.0));
  CHECK(p.derivative(1).eval(at) == doctest::Approx(3.0));
  CHECK(p.total_degree() == 2);

  // Affine substitution x = A u + b.
  Eigen::MatrixXd A(2, 2);
  A << 0.0, 1.0, 1.0, 0.0;  // swap variables
  Eigen::VectorXd b(2);
  b << 1.0, 0.0;
  const Polynomial q = p.compose_affine(A, b);  // (u1+1)^2 + 3 u0
  Eigen::VectorXd u(2);
  u << 5.0, 2.0;
  CHECK(q.eval(u) == doctest::Approx(9.0 + 15.0));
}

TEST_CASE("exterior algebra") {
  // apply_covector: dx^dy on (e1,e2) = 1.
  Eigen::VectorXd comps = Eigen::VectorXd::Zero(3);
  comps[0] = 1.0;  // dx0^dx1 in 3d basis order (01, 02, 12)
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(3, 2);
  CHECK(apply_covector(3, 2, comps, V) == doctest::Approx(1.0));
  // Antisymmetry.
  Eigen::MatrixXd W(3, 2);
  W.col(0) = V.col(1);
  W.col(1) = V.col(0);
  CHECK(apply_covector(3, 2, comps, W) == doctest::Approx(-1.0));

  // d of a polynomial 1-form: d(x1 dx0) = -dx0^dx1.
  std::vector<Polynomial> one_form(3);
  one_form[0] = Polynomial::variable(1);
  const auto two_form = exterior_derivative_poly(3, 1, one_form);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(3);
  CHECK(two_form[0].eval(zero) == doctest::Approx(-1.0));
  CHECK(two_form[1].eval(zero) == doctest::Approx(0.0));
  CHECK(two_form[2].eval(zero) == doctest::Approx(0.0));

  // d(d(omega)) = 0 for a random polynomial 1-form in 3 variables.
  std::vector<Polynomial> w(3);
  w[0] = Polynomial::variable(0) * Polynomial::variable(1);
  w[1] = Polynomial::variable(2) * Polynomial::variable(2);
  w[2] = Polynomial::variable(0) + 2.0 * Polynomial::variable(1);
  const auto dw = exterior_derivative_poly(3, 1, w);
  const auto ddw = exterior_derivative_poly(3, 2, dw);
  for (const auto& c : ddw) CHECK(c.is_zero(1e-15));
}

// Quadrature: Gauss-Legendre / Gauss-Jacobi rules (Golub-Welsch), conical
// product rules on the reference simplex, polar/spherical rules on balls,
// and an adaptive bisected-Gauss integrator for kinked integrands.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace orliczlab {

struct Rule1D {
  Eigen::VectorXd nodes;    // in [0,1]
  Eigen::VectorXd weights;  // sum = integral of the weight over [0,1]
};

/// n-point Gauss-Legendre on [0,1].
Rule1D gauss_legendre(int n);

/// n-point Gauss-Jacobi on [0,1] for the weight (1-x)^alpha.
Rule1D gauss_jacobi(int n, double alpha);

/// Nodes (barycentric, size dim+1 per node) and weights on the reference
/// simplex; weights sum to 1/dim!. `points_per_axis` >= 1; the rule is exact
/// for polynomials of degree <= 2*points_per_axis - 1 (per collapsed axis).
struct SimplexRule {
  Eigen::MatrixXd barycentric;  // n_nodes x (dim+1)
  Eigen::VectorXd weights;
};

SimplexRule simplex_rule(int dim, int points_per_axis);

/// points_per_axis giving exactness for polynomials of total degree <= order.
inline int points_for_order(int order) { return order / 2 + 1; }

/// Cartesian nodes/weights for a ball of given radius centered at the origin
/// in dimension 1, 2 or 3; weights sum to the ball volume.
struct BallRule {
  Eigen::MatrixXd nodes;  // n_nodes x dim
  Eigen::VectorXd weights;
  double volume() const { return weights.sum(); }
};

BallRule ball_rule(int dim, double radius, int radial, int angular, int polar = 0);

/// Adaptive integration of f over [a,b]: bisected 8-point Gauss panels with
/// embedded error estimate. abs_tol is the absolute target for the panel sum.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 24);

/// Fixed-rule integral of f over [a,b] using an n-point Gauss panel.
double integrate_gauss(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace orliczlab

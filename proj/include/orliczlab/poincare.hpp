// The explicit homotopy on the unit ball B in R^n (n = 2, 3): cone
// contraction toward a point, its average over the half ball, the degree-0
// average, and numerical verification of the homotopy identities and
// empirical norm bounds.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "orliczlab/polynomial.hpp"
#include "orliczlab/quadrature.hpp"
#include "orliczlab/young.hpp"

namespace orliczlab {

using PointFn = std::function<double(const Eigen::VectorXd&)>;

/// Closed-form k-form on the ball; d is supplied (or derived for polynomial
/// components) so that no symbolic differentiation is ever needed here.
struct AnalyticForm {
  int dim = 2;
  int degree = 0;
  std::vector<PointFn> comps;    // covector_basis(dim, degree) order
  std::vector<PointFn> d_comps;  // components of d(omega); empty for degree == dim

  Eigen::VectorXd eval(const Eigen::VectorXd& x) const;
  Eigen::VectorXd eval_d(const Eigen::VectorXd& x) const;
  AnalyticForm d() const;  // the (k+1)-form with comps = d_comps

  static AnalyticForm from_polynomials(int dim, int degree, std::vector<Polynomial> polys);
};

/// Composite Gauss rule for the cone parameter: `points` per panel on a
/// uniform split of [0,1] into `panels` pieces. Refinement doubles the
/// panel count, which scales the quadrature error by 2^{-2*points}.
struct ConeRule {
  int points = 32;
  int panels = 1;
};

/// Quadrature data for the ball: nodes for B and B/2, and the cone rule.
struct BallQuadrature {
  int dim = 2;
  BallRule full;   // B(0,1)
  BallRule half;   // B(0,1/2)
  ConeRule cone;
  int radial = 0, angular = 0, polar = 0;

  static BallQuadrature make(int dim, int radial = 8, int angular = 16, int polar = 8,
                             ConeRule cone = {});
  /// All node counts (and cone panels) multiplied by `factor`.
  BallQuadrature refined(int factor = 2) const;
};

/// chi_x(omega)_y(u_1,...,u_{k-1}) = int_0^1 t^{k-1} omega(y-x, u...) dt
/// evaluated at t y + (1-t) x. Throws for degree 0.
double cone_contraction(const AnalyticForm& omega, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y, const Eigen::MatrixXd& vectors,
                        const ConeRule& rule = {});

/// h(omega) at y: average of cone_contraction over x in B/2.
double averaged_homotopy(const AnalyticForm& omega, const BallQuadrature& quad,
                         const Eigen::VectorXd& y, const Eigen::MatrixXd& vectors);

/// Degree-0 part: mean of f over B/2.
double degree0_average(const AnalyticForm& f, const BallQuadrature& quad);

struct HomotopyReport {
  double max_rel_residual = 0.0;
  int points_checked = 0;
  int points_skipped = 0;  // too close to the boundary for the FD stencil
};

/// Residual of dh(omega) + h(d omega) = omega at the sample points
/// (degree 0: h(f) + h(df) = f). dh is by central differences, step 1e-4.
HomotopyReport verify_homotopy_identity(const AnalyticForm& omega, const BallQuadrature& quad,
                                        const std::vector<Eigen::VectorXd>& sample_points);

struct BoundednessReport {
  double max_ratio = 0.0;        // max ||h(omega)||_phi / ||omega||_phi
  double refined_max_ratio = 0.0;
  bool stable = false;           // ratio moved < 10% under refinement
  bool contradiction = false;    // ||omega|| = 0 with h(omega) != 0
};

BoundednessReport verify_boundedness(const YoungFunction& phi,
                                     const std::vector<AnalyticForm>& omegas,
                                     const BallQuadrature& quad);

/// All k-forms with a single monomial component of total degree <= max_deg.
std::vector<AnalyticForm> monomial_forms(int dim, int degree, int max_deg);

/// Deterministic interior sample points (|y| <= radius), seeded.
std::vector<Eigen::VectorXd> interior_points(int dim, int count, double radius, unsigned seed);

}  // namespace orliczlab

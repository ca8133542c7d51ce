// Modulars and Luxemburg norms on finite weighted measure spaces, plus the
// scaling-equivalence and Hoelder checks that go with them.

#pragma once

#include <Eigen/Dense>
#include <functional>

#include "orliczlab/young.hpp"

namespace orliczlab {

using SampledFunction = Eigen::VectorXd;

/// Finite weighted point set; point ids are the indices 0..n-1.
struct DiscreteMeasure {
  Eigen::VectorXd weights;

  explicit DiscreteMeasure(Eigen::VectorXd w);
  static DiscreteMeasure counting(Eigen::Index n);
  Eigen::Index size() const { return weights.size(); }
  double total_mass() const { return weights.sum(); }
};

/// rho_phi(f) = sum_i w_i phi(f_i).
double modular(const YoungFunction& phi, const SampledFunction& f, const DiscreteMeasure& mu);

struct LuxemburgResult {
  double norm = 0.0;
  double modular_at_norm = 0.0;
  int iterations = 0;
};

/// inf{alpha > 0 : modular(f/alpha) <= 1} by bisection with multiplicative
/// bracketing. Returns 0 for f == 0. tol is relative.
double luxemburg_norm(const YoungFunction& phi, const SampledFunction& f,
                      const DiscreteMeasure& mu, double tol = 1e-12);

LuxemburgResult luxemburg_detail(const YoungFunction& phi, const SampledFunction& f,
                                 const DiscreteMeasure& mu, double tol = 1e-12);

/// Generic Luxemburg bisection for any nonincreasing modular(alpha).
/// alpha0 > 0 seeds the bracket search; zero modulars return 0.
LuxemburgResult luxemburg_from_modular(const std::function<double(double)>& modular_of_alpha,
                                       double alpha0, double tol = 1e-12);

struct ScalingReport {
  double norm_phi = 0.0;        // ||f||_phi
  double norm_scaled = 0.0;     // ||f||_{lambda phi}
  double K = 1.0;               // max(lambda, 1/lambda)
  bool pass = false;
};

/// Scaling-equivalence check: K^{-1}||f||_phi - tol <= ||f||_{lambda phi} <= K||f||_phi + tol.
ScalingReport check_scaling_equivalence(const YoungFunction& phi, double lambda,
                                        const SampledFunction& f, const DiscreteMeasure& mu,
                                        double tol = 1e-9);

struct HolderReport {
  double lhs = 0.0;  // ||fg||_1
  double rhs = 0.0;  // 2 ||f||_phi ||g||_{phi*}
  bool conjugate_norm_finite = true;
  bool pass = false;
};

/// ||fg||_1 <= 2 ||f||_phi ||g||_{phi*} with phi* the numeric grid conjugate.
HolderReport check_holder(const YoungFunction& phi, const SampledFunction& f,
                          const SampledFunction& g, const DiscreteMeasure& mu,
                          const ConjugateParams& cp = {}, double tol = 1e-8);

}  // namespace orliczlab

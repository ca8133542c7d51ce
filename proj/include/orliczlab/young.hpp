// Young functions: even convex phi >= 0 vanishing exactly at 0, together with
// the elementary operations on them (scaling, numeric convex conjugate,
// Delta_2 diagnostics).
//
// Evenness is structural: every constructor evaluates at |t|.

#pragma once

#include <functional>
#include <map>
#include <string>

namespace orliczlab {

struct YoungFunction {
  std::string name;
  std::map<std::string, double> params;
  // Defined for a >= 0; operator() folds in the absolute value.
  std::function<double(double)> eval_abs;

  double operator()(double t) const { return eval_abs(t < 0 ? -t : t); }
};

/// phi_p(t) = |t|^p, p >= 1. Throws std::invalid_argument for p < 1.
YoungFunction make_power(double p);

/// phi_{p,kappa}(t) = |t|^p / log(e + |t|^{-1})^kappa, value 0 at t = 0.
YoungFunction make_power_log(double p, double kappa);

/// phi(t) = e^{|t|} - 1.
YoungFunction make_exp();

/// lambda * phi, lambda > 0.
YoungFunction scale(const YoungFunction& phi, double lambda);

/// Value of the convex conjugate sup_{t >= 0} (s*t - phi(t)) restricted to
/// [0, t_max]. `divergent` is set when the objective is still increasing at
/// t_max and has exceeded `divergence_threshold` there.
struct ConjugateValue {
  double value = 0.0;
  bool divergent = false;
};

ConjugateValue complementary(const YoungFunction& phi, double s, double t_max,
                             int grid_n, double divergence_threshold = 1e8);

/// Parameters for building the numeric conjugate as a YoungFunction.
struct ConjugateParams {
  double t_max = 64.0;
  int grid_n = 128;
  double divergence_threshold = 1e8;
};

/// phi* as a callable Young function; divergent values evaluate to +infinity.
YoungFunction conjugate_young(const YoungFunction& phi, const ConjugateParams& cp = {});

/// max over a geometric grid of phi(2t)/phi(t) on [t_lo, t_hi].
double delta2_margin(const YoungFunction& phi, double t_lo, double t_hi, int grid_n);

/// Sample-grid diagnostics for the Young-function axioms.
struct YoungValidation {
  bool zero_at_origin = false;
  bool positive_off_origin = false;
  bool even = false;
  bool midpoint_convex = false;
  bool nondecreasing = false;
  double max_violation = 0.0;
  bool ok() const {
    return zero_at_origin && positive_off_origin && even && midpoint_convex && nondecreasing;
  }
};

YoungValidation validate_young(const YoungFunction& phi, double t_max = 8.0,
                               int grid_n = 257, double tol = 1e-12);

}  // namespace orliczlab

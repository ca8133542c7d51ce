#include "orliczlab/young.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace orliczlab {

YoungFunction make_power(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("make_power: require p >= 1");
  YoungFunction phi;
  phi.name = "power";
  phi.params["p"] = p;
  phi.eval_abs = [p](double a) { return std::pow(a, p); };
  return phi;
}

YoungFunction make_power_log(double p, double kappa) {
  if (!(p >= 1.0)) throw std::invalid_argument("make_power_log: require p >= 1");
  if (!(kappa >= 0.0)) throw std::invalid_argument("make_power_log: require kappa >= 0");
  YoungFunction phi;
  phi.name = "powerlog";
  phi.params["p"] = p;
  phi.params["kappa"] = kappa;
  const double e = std::exp(1.0);
  phi.eval_abs = [p, kappa, e](double a) {
    if (a == 0.0) return 0.0;
    return std::pow(a, p) / std::pow(std::log(e + 1.0 / a), kappa);
  };
  return phi;
}

YoungFunction make_exp() {
  YoungFunction phi;
  phi.name = "exp";
  phi.eval_abs = [](double a) { return std::expm1(a); };
  return phi;
}

YoungFunction scale(const YoungFunction& phi, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("scale: require lambda > 0");
  YoungFunction out;
  out.name = "scale(" + phi.name + ")";
  out.params = phi.params;
  out.params["lambda"] = lambda * (phi.params.count("lambda") ? phi.params.at("lambda") : 1.0);
  auto inner = phi.eval_abs;
  out.eval_abs = [inner, lambda](double a) { return lambda * inner(a); };
  return out;
}

ConjugateValue complementary(const YoungFunction& phi, double s, double t_max,
                             int grid_n, double divergence_threshold) {
  if (!(s >= 0.0)) throw std::invalid_argument("complementary: require s >= 0");
  if (!(t_max > 0.0)) throw std::invalid_argument("complementary: require t_max > 0");
  if (grid_n < 2) throw std::invalid_argument("complementary: require grid_n >= 2");

  const auto objective = [&](double t) { return s * t - phi.eval_abs(t); };

  // Coarse grid scan for the maximizer of a concave objective.
  double best_t = 0.0, best_v = objective(0.0);
  int best_i = 0;
  for (int i = 1; i <= grid_n; ++i) {
    const double t = t_max * static_cast<double>(i) / grid_n;
    const double v = objective(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
      best_i = i;
    }
  }

  const bool at_right_edge = (best_i == grid_n);
  if (at_right_edge && best_v > divergence_threshold) return {best_v, true};

  // Golden-section refinement on the bracketing cell pair.
  const double h = t_max / grid_n;
  double lo = std::max(0.0, best_t - h);
  double hi = std::min(t_max, best_t + h);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = objective(c), fd = objective(d);
  for (int it = 0; it < 120 && (hi - lo) > 1e-14 * (1.0 + hi); ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = objective(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = objective(d);
    }
  }
  best_v = std::max({best_v, fc, fd, objective(0.5 * (lo + hi))});
  return {std::max(best_v, 0.0), false};
}

YoungFunction conjugate_young(const YoungFunction& phi, const ConjugateParams& cp) {
  YoungFunction out;
  out.name = "conjugate(" + phi.name + ")";
  YoungFunction inner = phi;
  const ConjugateParams params = cp;
  out.eval_abs = [inner, params](double a) {
    const ConjugateValue v = complementary(inner, a, params.t_max, params.grid_n,
                                           params.divergence_threshold);
    if (v.divergent) return std::numeric_limits<double>::infinity();
    return v.value;
  };
  return out;
}

double delta2_margin(const YoungFunction& phi, double t_lo, double t_hi, int grid_n) {
  if (!(0.0 < t_lo && t_lo < t_hi)) throw std::invalid_argument("delta2_margin: require 0 < t_lo < t_hi");
  if (grid_n < 1) throw std::invalid_argument("delta2_margin: require grid_n >= 1");
  const double ratio = std::pow(t_hi / t_lo, 1.0 / grid_n);
  double worst = 0.0;
  double t = t_lo;
  for (int i = 0; i <= grid_n; ++i) {
    const double denom = phi.eval_abs(t);
    if (denom > 0.0) worst = std::max(worst, phi.eval_abs(2.0 * t) / denom);
    t *= ratio;
  }
  return worst;
}

YoungValidation validate_young(const YoungFunction& phi, double t_max, int grid_n, double tol) {
  YoungValidation v;
  v.zero_at_origin = (phi(0.0) == 0.0);
  v.positive_off_origin = true;
  v.even = true;
  v.midpoint_convex = true;
  v.nondecreasing = true;

  std::vector<double> ts;
  ts.reserve(grid_n);
  for (int i = 1; i <= grid_n; ++i) ts.push_back(t_max * static_cast<double>(i) / grid_n);

  double prev = 0.0;
  for (double t : ts) {
    const double ft = phi(t);
    if (!(ft > 0.0)) v.positive_off_origin = false;
    const double d_even = std::abs(phi(-t) - ft);
    if (d_even > tol * (1.0 + std::abs(ft))) v.even = false;
    v.max_violation = std::max(v.max_violation, d_even);
    if (ft < prev - tol * (1.0 + std::abs(ft))) v.nondecreasing = false;
    prev = ft;
  }
  // Midpoint convexity on pairs from a coarser subgrid (full pairing is O(n^2)).
  const int stride = std::max(1, grid_n / 32);
  for (std::size_t i = 0; i < ts.size(); i += stride) {
    for (std::size_t j = i; j < ts.size(); j += stride) {
      const double s = ts[i], t = ts[j];
      const double lhs = phi(0.5 * (s + t));
      const double rhs = 0.5 * (phi(s) + phi(t));
      const double gap = lhs - rhs;
      if (gap > tol * (1.0 + std::abs(rhs))) {
        v.midpoint_convex = false;
        v.max_violation = std::max(v.max_violation, gap);
      }
    }
  }
  return v;
}

}  // namespace orliczlab

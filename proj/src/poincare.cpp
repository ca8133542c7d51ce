#include "orliczlab/poincare.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "orliczlab/orlicz.hpp"
#include "orliczlab/parallel.hpp"

namespace orliczlab {

Eigen::VectorXd AnalyticForm::eval(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(comps.size()));
  for (std::size_t i = 0; i < comps.size(); ++i) out[static_cast<Eigen::Index>(i)] = comps[i](x);
  return out;
}

Eigen::VectorXd AnalyticForm::eval_d(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(d_comps.size()));
  for (std::size_t i = 0; i < d_comps.size(); ++i) out[static_cast<Eigen::Index>(i)] = d_comps[i](x);
  return out;
}

AnalyticForm AnalyticForm::d() const {
  AnalyticForm out;
  out.dim = dim;
  out.degree = degree + 1;
  out.comps = d_comps;
  // d(d omega) = 0.
  out.d_comps.assign(covector_dim(dim, degree + 2), [](const Eigen::VectorXd&) { return 0.0; });
  return out;
}

AnalyticForm AnalyticForm::from_polynomials(int dim, int degree, std::vector<Polynomial> polys) {
  if (static_cast<int>(polys.size()) != covector_dim(dim, degree))
    throw std::invalid_argument("AnalyticForm: wrong component count");
  AnalyticForm f;
  f.dim = dim;
  f.degree = degree;
  for (auto& p : polys) f.comps.push_back([p](const Eigen::VectorXd& x) { return p.eval(x); });
  if (degree < dim) {
    for (auto& dp : exterior_derivative_poly(dim, degree, polys))
      f.d_comps.push_back([dp](const Eigen::VectorXd& x) { return dp.eval(x); });
  }
  return f;
}

BallQuadrature BallQuadrature::make(int dim, int radial, int angular, int polar, ConeRule cone) {
  BallQuadrature q;
  q.dim = dim;
  q.radial = radial;
  q.angular = angular;
  q.polar = polar;
  q.cone = cone;
  q.full = ball_rule(dim, 1.0, radial, angular, polar);
  q.half = ball_rule(dim, 0.5, radial, angular, polar);
  return q;
}

BallQuadrature BallQuadrature::refined(int factor) const {
  return make(dim, radial * factor, angular * factor, std::max(polar * factor, dim == 3 ? 2 : 0),
              ConeRule{cone.points, cone.panels * factor});
}

double cone_contraction(const AnalyticForm& omega, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y, const Eigen::MatrixXd& vectors,
                        const ConeRule& rule) {
  const int k = omega.degree;
  if (k < 1) throw std::invalid_argument("cone_contraction: degree must be >= 1");
  const int n = omega.dim;
  Eigen::MatrixXd V(n, k);
  V.col(0) = y - x;
  for (int i = 1; i < k; ++i) V.col(i) = vectors.col(i - 1);
  const Rule1D gauss = gauss_legendre(rule.points);
  const double h = 1.0 / rule.panels;
  double acc = 0.0;
  for (int panel = 0; panel < rule.panels; ++panel) {
    for (int q = 0; q < rule.points; ++q) {
      const double t = (panel + gauss.nodes[q]) * h;
      const Eigen::VectorXd z = t * y + (1.0 - t) * x;
      const double tk = (k == 1) ? 1.0 : std::pow(t, k - 1);
      acc += h * gauss.weights[q] * tk * apply_covector(n, k, omega.eval(z), V);
    }
  }
  return acc;
}

double averaged_homotopy(const AnalyticForm& omega, const BallQuadrature& quad,
                         const Eigen::VectorXd& y, const Eigen::MatrixXd& vectors) {
  double acc = 0.0;
  for (int q = 0; q < quad.half.weights.size(); ++q) {
    const Eigen::VectorXd x = quad.half.nodes.row(q).transpose();
    acc += quad.half.weights[q] * cone_contraction(omega, x, y, vectors, quad.cone);
  }
  return acc / quad.half.volume();
}

double degree0_average(const AnalyticForm& f, const BallQuadrature& quad) {
  if (f.degree != 0) throw std::invalid_argument("degree0_average: degree must be 0");
  double acc = 0.0;
  for (int q = 0; q < quad.half.weights.size(); ++q)
    acc += quad.half.weights[q] * f.comps[0](quad.half.nodes.row(q).transpose());
  return acc / quad.half.volume();
}

namespace {

// All components of h(omega) at y in one sweep over the (x, t) quadrature:
// the form evaluation at each segment point is shared across components.
Eigen::VectorXd homotopy_components(const AnalyticForm& omega, const BallQuadrature& quad,
                                    const Eigen::VectorXd& y) {
  const int n = omega.dim, k = omega.degree;
  const auto& basis = covector_basis(n, k - 1);
  const Eigen::Index nc = static_cast<Eigen::Index>(basis.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nc);
  const Rule1D gauss = gauss_legendre(quad.cone.points);
  const double h = 1.0 / quad.cone.panels;
  Eigen::MatrixXd V(n, k);
  for (int q = 0; q < quad.half.weights.size(); ++q) {
    const Eigen::VectorXd x = quad.half.nodes.row(q).transpose();
    const double wx = quad.half.weights[q];
    V.col(0) = y - x;
    for (int panel = 0; panel < quad.cone.panels; ++panel) {
      for (int g = 0; g < quad.cone.points; ++g) {
        const double t = (panel + gauss.nodes[g]) * h;
        const Eigen::VectorXd z = t * y + (1.0 - t) * x;
        const Eigen::VectorXd comps = omega.eval(z);
        const double tk = (k == 1) ? 1.0 : std::pow(t, k - 1);
        const double weight = wx * h * gauss.weights[g] * tk;
        for (Eigen::Index j = 0; j < nc; ++j) {
          for (int c = 0; c < k - 1; ++c)
            V.col(c + 1) = Eigen::VectorXd::Unit(n, basis[static_cast<std::size_t>(j)][c]);
          out[j] += weight * apply_covector(n, k, comps, V);
        }
      }
    }
  }
  return out / quad.half.volume();
}

}  // namespace

HomotopyReport verify_homotopy_identity(const AnalyticForm& omega, const BallQuadrature& quad,
                                        const std::vector<Eigen::VectorXd>& sample_points) {
  const int n = omega.dim, k = omega.degree;
  const double fd_step = 1e-4;
  HomotopyReport report;

  std::vector<double> residuals(sample_points.size(), 0.0);
  std::vector<char> skipped(sample_points.size(), 0);

  parallel_for(sample_points.size(), [&](std::size_t p) {
    const Eigen::VectorXd& y = sample_points[p];
    if (y.norm() > 1.0 - 1e-3) {
      skipped[p] = 1;
      return;
    }
    if (k == 0) {
      const double lhs = degree0_average(omega, quad) +
                         averaged_homotopy(omega.d(), quad, y, Eigen::MatrixXd(n, 0));
      const double f = omega.comps[0](y);
      residuals[p] = std::abs(lhs - f) / (1.0 + std::abs(f));
      return;
    }
    const auto& basis_k = covector_basis(n, k);
    const auto& basis_km1 = covector_basis(n, k - 1);
    const Eigen::VectorXd w = omega.eval(y);
    const double scale = 1.0 + w.cwiseAbs().maxCoeff();
    // h components at the 2n FD stencil points, one quadrature sweep each.
    std::vector<Eigen::VectorXd> h_plus(n), h_minus(n);
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd yp = y, ym = y;
      yp[j] += fd_step;
      ym[j] -= fd_step;
      h_plus[j] = homotopy_components(omega, quad, yp);
      h_minus[j] = homotopy_components(omega, quad, ym);
    }
    Eigen::VectorXd hd_all;
    if (k < n) {
      const AnalyticForm dom = omega.d();
      hd_all = homotopy_components(dom, quad, y);  // indexed by k-subsets
    }
    double worst = 0.0;
    for (std::size_t I = 0; I < basis_k.size(); ++I) {
      double dh = 0.0;
      const auto& set = basis_k[I];
      for (std::size_t pos = 0; pos < set.size(); ++pos) {
        const int j = set[pos];
        std::vector<int> sub;
        for (std::size_t q = 0; q < set.size(); ++q)
          if (q != pos) sub.push_back(set[q]);
        int sub_idx = -1;
        for (std::size_t s2 = 0; s2 < basis_km1.size(); ++s2)
          if (basis_km1[s2] == sub) sub_idx = static_cast<int>(s2);
        const double deriv = (h_plus[j][sub_idx] - h_minus[j][sub_idx]) / (2.0 * fd_step);
        dh += ((pos % 2 == 0) ? 1.0 : -1.0) * deriv;
      }
      const double hd = (k < n) ? hd_all[static_cast<Eigen::Index>(I)] : 0.0;
      worst = std::max(worst, std::abs(dh + hd - w[static_cast<Eigen::Index>(I)]) / scale);
    }
    residuals[p] = worst;
  });

  for (std::size_t p = 0; p < sample_points.size(); ++p) {
    if (skipped[p]) {
      ++report.points_skipped;
    } else {
      ++report.points_checked;
      report.max_rel_residual = std::max(report.max_rel_residual, residuals[p]);
    }
  }
  return report;
}

namespace {

double lphi_on_ball(const YoungFunction& phi, const BallRule& rule,
                    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& comps) {
  Eigen::VectorXd values(rule.weights.size());
  for (int q = 0; q < rule.weights.size(); ++q)
    values[q] = comps(rule.nodes.row(q).transpose()).norm();
  const DiscreteMeasure mu{rule.weights};
  return luxemburg_norm(phi, values, mu);
}

double boundedness_ratio(const YoungFunction& phi, const std::vector<AnalyticForm>& omegas,
                         const BallQuadrature& quad, bool& contradiction) {
  double worst = 0.0;
  for (const auto& omega : omegas) {
    const double denom = lphi_on_ball(phi, quad.full, [&](const Eigen::VectorXd& x) {
      return omega.eval(x);
    });
    double num = 0.0;
    if (omega.degree == 0) {
      // The image is the constant h(f); measure it as a constant function on B.
      const double avg = degree0_average(omega, quad);
      num = lphi_on_ball(phi, quad.full, [&](const Eigen::VectorXd&) {
        return Eigen::VectorXd::Constant(1, avg).eval();
      });
    } else {
      num = lphi_on_ball(phi, quad.full, [&](const Eigen::VectorXd& y) {
        return homotopy_components(omega, quad, y);
      });
    }
    if (denom == 0.0) {
      if (num > 1e-10) contradiction = true;
      continue;
    }
    worst = std::max(worst, num / denom);
  }
  return worst;
}

}  // namespace

BoundednessReport verify_boundedness(const YoungFunction& phi,
                                     const std::vector<AnalyticForm>& omegas,
                                     const BallQuadrature& quad) {
  if (omegas.empty()) throw std::invalid_argument("verify_boundedness: empty form list");
  BoundednessReport report;
  report.max_ratio = boundedness_ratio(phi, omegas, quad, report.contradiction);
  report.refined_max_ratio = boundedness_ratio(phi, omegas, quad.refined(2), report.contradiction);
  const double scale = std::max(1e-12, std::abs(report.max_ratio));
  report.stable = std::abs(report.refined_max_ratio - report.max_ratio) <= 0.10 * scale;
  return report;
}

std::vector<AnalyticForm> monomial_forms(int dim, int degree, int max_deg) {
  std::vector<AnalyticForm> forms;
  const int ncomp = covector_dim(dim, degree);
  std::vector<std::array<int, 3>> exps;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b)
      for (int c = 0; a + b + c <= max_deg; ++c) {
        if (dim < 3 && c > 0) continue;
        if (dim < 2 && b > 0) continue;
        exps.push_back({a, b, c});
      }
  for (int comp = 0; comp < ncomp; ++comp) {
    for (const auto& e : exps) {
      std::vector<Polynomial> polys(ncomp);
      Polynomial mono;
      mono.terms[e] = 1.0;
      polys[comp] = mono;
      forms.push_back(AnalyticForm::from_polynomials(dim, degree, std::move(polys)));
    }
  }
  return forms;
}

std::vector<Eigen::VectorXd> interior_points(int dim, int count, double radius, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Eigen::VectorXd> points;
  while (static_cast<int>(points.size()) < count) {
    Eigen::VectorXd y(dim);
    for (int i = 0; i < dim; ++i) y[i] = uni(rng);
    if (y.norm() <= 1.0) points.push_back(radius * y);
  }
  return points;
}

}  // namespace orliczlab

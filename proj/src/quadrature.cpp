#include "orliczlab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace orliczlab {

namespace {

// Golub-Welsch from three-term recurrence coefficients on [-1,1]:
// p_{k+1} = (x - a_k) p_k - b_k p_{k-1}, mu0 = integral of the weight.
Rule1D golub_welsch(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double mu0) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = a[i];
    if (i + 1 < n) {
      const double off = std::sqrt(b[i + 1]);
      J(i, i + 1) = off;
      J(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

Rule1D map_to_unit(Rule1D rule, double weight_scale) {
  // [-1,1] -> [0,1]
  rule.nodes = (rule.nodes.array() + 1.0) / 2.0;
  rule.weights *= weight_scale;
  return rule;
}

}  // namespace

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  static std::map<int, Rule1D> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n), b = Eigen::VectorXd::Zero(n);
  for (int k = 1; k < n; ++k) b[k] = static_cast<double>(k * k) / (4.0 * k * k - 1.0);
  Rule1D rule = map_to_unit(golub_welsch(a, b, 2.0), 0.5);
  std::lock_guard<std::mutex> lock(mtx);
  cache[n] = rule;
  return rule;
}

Rule1D gauss_jacobi(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1");
  // Weight (1-x)^alpha (1+x)^0 on [-1,1]; standard Jacobi recurrence with beta=0.
  const double A = alpha, B = 0.0;
  Eigen::VectorXd a(n), b(n);
  for (int k = 0; k < n; ++k) {
    const double den = (2.0 * k + A + B) * (2.0 * k + A + B + 2.0);
    a[k] = den == 0.0 ? (B - A) / (A + B + 2.0) : (B * B - A * A) / den;
    if (k == 0) {
      b[k] = 0.0;
    } else if (k == 1) {
      b[k] = 4.0 * (1.0 + A) * (1.0 + B) / ((2.0 + A + B) * (2.0 + A + B) * (3.0 + A + B));
    } else {
      const double t = 2.0 * k + A + B;
      b[k] = 4.0 * k * (k + A) * (k + B) * (k + A + B) / (t * t * (t + 1.0) * (t - 1.0));
    }
  }
  const double mu0 = std::pow(2.0, A + B + 1.0) * std::tgamma(A + 1.0) * std::tgamma(B + 1.0) /
                     std::tgamma(A + B + 2.0);
  // Map to [0,1] with weight (1-x)^alpha: scaling gives factor (1/2)^{alpha+1}.
  return map_to_unit(golub_welsch(a, b, mu0), std::pow(0.5, A + 1.0));
}

SimplexRule simplex_rule(int dim, int points_per_axis) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("simplex_rule: dim in {1,2,3}");
  if (points_per_axis < 1) throw std::invalid_argument("simplex_rule: points_per_axis >= 1");
  const int n = points_per_axis;
  SimplexRule rule;
  if (dim == 1) {
    const Rule1D g = gauss_legendre(n);
    rule.barycentric.resize(n, 2);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      const double x = g.nodes[i];
      rule.barycentric(i, 0) = 1.0 - x;
      rule.barycentric(i, 1) = x;
      rule.weights[i] = g.weights[i];
    }
    return rule;
  }
  if (dim == 2) {
    // x = u(1-v), y = v with Jacobian (1-v).
    const Rule1D gu = gauss_legendre(n);
    const Rule1D gv = gauss_jacobi(n, 1.0);
    rule.barycentric.resize(n * n, 3);
    rule.weights.resize(n * n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double u = gu.nodes[i], v = gv.nodes[j];
        const double x = u * (1.0 - v), y = v;
        rule.barycentric(idx, 0) = 1.0 - x - y;
        rule.barycentric(idx, 1) = x;
        rule.barycentric(idx, 2) = y;
        rule.weights[idx] = gu.weights[i] * gv.weights[j];
        ++idx;
      }
    }
    return rule;
  }
  // dim == 3: x = u(1-v)(1-w), y = v(1-w), z = w; Jacobian (1-v)(1-w)^2.
  const Rule1D gu = gauss_legendre(n);
  const Rule1D gv = gauss_jacobi(n, 1.0);
  const Rule1D gw = gauss_jacobi(n, 2.0);
  rule.barycentric.resize(n * n * n, 4);
  rule.weights.resize(n * n * n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double u = gu.nodes[i], v = gv.nodes[j], w = gw.nodes[k];
        const double x = u * (1.0 - v) * (1.0 - w), y = v * (1.0 - w), z = w;
        rule.barycentric(idx, 0) = 1.0 - x - y - z;
        rule.barycentric(idx, 1) = x;
        rule.barycentric(idx, 2) = y;
        rule.barycentric(idx, 3) = z;
        rule.weights[idx] = gu.weights[i] * gv.weights[j] * gw.weights[k];
        ++idx;
      }
    }
  }
  return rule;
}

BallRule ball_rule(int dim, double radius, int radial, int angular, int polar) {
  if (radial < 1) throw std::invalid_argument("ball_rule: radial >= 1");
  BallRule rule;
  if (dim == 1) {
    const Rule1D g = gauss_legendre(radial);
    rule.nodes.resize(radial, 1);
    rule.weights.resize(radial);
    for (int i = 0; i < radial; ++i) {
      rule.nodes(i, 0) = radius * (2.0 * g.nodes[i] - 1.0);
      rule.weights[i] = 2.0 * radius * g.weights[i];
    }
    return rule;
  }
  if (dim == 2) {
    if (angular < 1) throw std::invalid_argument("ball_rule: angular >= 1");
    const Rule1D gr = gauss_legendre(radial);
    rule.nodes.resize(radial * angular, 2);
    rule.weights.resize(radial * angular);
    int idx = 0;
    for (int i = 0; i < radial; ++i) {
      const double r = radius * gr.nodes[i];
      const double wr = radius * gr.weights[i] * r;  // r dr
      for (int j = 0; j < angular; ++j) {
        const double th = 2.0 * M_PI * (j + 0.5) / angular;
        rule.nodes(idx, 0) = r * std::cos(th);
        rule.nodes(idx, 1) = r * std::sin(th);
        rule.weights[idx] = wr * 2.0 * M_PI / angular;
        ++idx;
      }
    }
    return rule;
  }
  if (dim == 3) {
    if (angular < 1 || polar < 1) throw std::invalid_argument("ball_rule: angular, polar >= 1");
    const Rule1D gr = gauss_legendre(radial);
    const Rule1D gu = gauss_legendre(polar);  // u = cos(polar angle) in [-1,1]
    rule.nodes.resize(radial * polar * angular, 3);
    rule.weights.resize(radial * polar * angular);
    int idx = 0;
    for (int i = 0; i < radial; ++i) {
      const double r = radius * gr.nodes[i];
      const double wr = radius * gr.weights[i] * r * r;  // r^2 dr
      for (int k = 0; k < polar; ++k) {
        const double u = 2.0 * gu.nodes[k] - 1.0;
        const double wu = 2.0 * gu.weights[k];
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (int j = 0; j < angular; ++j) {
          const double th = 2.0 * M_PI * (j + 0.5) / angular;
          rule.nodes(idx, 0) = r * s * std::cos(th);
          rule.nodes(idx, 1) = r * s * std::sin(th);
          rule.nodes(idx, 2) = r * u;
          rule.weights[idx] = wr * wu * 2.0 * M_PI / angular;
          ++idx;
        }
      }
    }
    return rule;
  }
  throw std::invalid_argument("ball_rule: dim in {1,2,3}");
}

double integrate_gauss(const std::function<double(double)>& f, double a, double b, int n) {
  const Rule1D g = gauss_legendre(n);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += g.weights[i] * f(a + (b - a) * g.nodes[i]);
  return (b - a) * acc;
}

namespace {

double adaptive_rec(const std::function<double(double)>& f, double a, double b, double whole,
                    double abs_tol, int depth, int max_depth) {
  const double mid = 0.5 * (a + b);
  const double left = integrate_gauss(f, a, mid, 8);
  const double right = integrate_gauss(f, mid, b, 8);
  const double err = std::abs(left + right - whole);
  if (err < abs_tol || depth >= max_depth) return left + right;
  return adaptive_rec(f, a, mid, left, 0.5 * abs_tol, depth + 1, max_depth) +
         adaptive_rec(f, mid, b, right, 0.5 * abs_tol, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  return adaptive_rec(f, a, b, integrate_gauss(f, a, b, 8), abs_tol, 0, max_depth);
}

}  // namespace orliczlab

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "orliczlab/orlicz.hpp"

using namespace orliczlab;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

// Closed-form oracle for phi_p: (sum w |f|^p)^{1/p}.
double lp_norm(const Eigen::VectorXd& f, const Eigen::VectorXd& w, double p) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) acc += w[i] * std::pow(std::abs(f[i]), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

TEST_CASE("modular") {
  const YoungFunction phi2 = make_power(2.0);
  CHECK(modular(phi2, vec({1, 2}), DiscreteMeasure::counting(2)) == doctest::Approx(5.0));
  CHECK(modular(phi2, Eigen::VectorXd::Zero(5), DiscreteMeasure::counting(5)) == 0.0);
  CHECK(modular(make_power(1.0), vec({2, 3}), DiscreteMeasure{vec({0.5, 1.0})}) ==
        doctest::Approx(4.0));
  CHECK_THROWS_AS(modular(phi2, vec({1, 2, 3}), DiscreteMeasure::counting(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure{vec({1.0, 0.0})}, std::invalid_argument);
}

TEST_CASE("Luxemburg norm basics") {
  const YoungFunction phi2 = make_power(2.0);
  CHECK(luxemburg_norm(phi2, vec({3, 4}), DiscreteMeasure::counting(2)) ==
        doctest::Approx(5.0).epsilon(1e-12));
  CHECK(luxemburg_norm(phi2, Eigen::VectorXd::Zero(3), DiscreteMeasure::counting(3)) == 0.0);
  // exp phi, one point: solve e^{1/alpha} - 1 = 1 analytically.
  CHECK(luxemburg_norm(make_exp(), vec({1}), DiscreteMeasure::counting(1)) ==
        doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-11));
}

TEST_CASE("Luxemburg equals the lp norm for power functions") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-2.0, 2.0), uw(0.2, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    Eigen::VectorXd f(n), w(n);
    for (int i = 0; i < n; ++i) {
      f[i] = uni(rng);
      w[i] = uw(rng);
    }
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      const double lux = luxemburg_norm(make_power(p), f, DiscreteMeasure{w});
      const double ref = lp_norm(f, w, p);
      if (ref > 0) CHECK(std::abs(lux - ref) / ref < 1e-10);
    }
  }
}

TEST_CASE("normalization at the norm") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const YoungFunction phi = make_power_log(2.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = uni(rng);
    const DiscreteMeasure mu = DiscreteMeasure::counting(n);
    const LuxemburgResult lr = luxemburg_detail(phi, f, mu);
    if (lr.norm == 0.0) continue;
    CHECK(lr.modular_at_norm <= 1.0 + 1e-12);
    if (lr.norm > 1e-10)
      CHECK(modular(phi, f / (lr.norm * (1.0 - 1e-11)), mu) > 1.0 - 1e-6);
  }
}

TEST_CASE("homogeneity and triangle inequality") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0), uc(-3.0, 3.0);
  const YoungFunction phi = make_exp();
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    Eigen::VectorXd f(n), g(n);
    for (int i = 0; i < n; ++i) {
      f[i] = uni(rng);
      g[i] = uni(rng);
    }
    const DiscreteMeasure mu = DiscreteMeasure::counting(n);
    const double c = uc(rng);
    const double nf = luxemburg_norm(phi, f, mu);
    CHECK(luxemburg_norm(phi, c * f, mu) ==
          doctest::Approx(std::abs(c) * nf).epsilon(1e-9));
    CHECK(luxemburg_norm(phi, f + g, mu) <= nf + luxemburg_norm(phi, g, mu) + 1e-9);
  }
}

TEST_CASE("scaling equivalence bracket") {
  const YoungFunction phi2 = make_power(2.0);
  const DiscreteMeasure mu = DiscreteMeasure::counting(2);
  const Eigen::VectorXd f = vec({3, 4});

  SUBCASE("identity scaling") {
    const ScalingReport r = check_scaling_equivalence(phi2, 1.0, f, mu);
    CHECK(r.pass);
    CHECK(r.norm_phi == doctest::Approx(r.norm_scaled));
  }
  SUBCASE("lambda = 4 against the closed form") {
    const ScalingReport r = check_scaling_equivalence(phi2, 4.0, f, mu);
    CHECK(r.pass);
    CHECK(r.K == doctest::Approx(4.0));
    // Oracle (lambda sum |f|^p)^{1/p}: the norm for lambda*phi_p.
    CHECK(r.norm_scaled == doctest::Approx(std::sqrt(4.0 * 25.0)).epsilon(1e-11));
  }
  SUBCASE("zero function") {
    const ScalingReport r =
        check_scaling_equivalence(phi2, 2.0, Eigen::VectorXd::Zero(2), mu);
    CHECK(r.pass);
    CHECK(r.norm_phi == 0.0);
    CHECK(r.norm_scaled == 0.0);
  }
  SUBCASE("random batch across Young functions") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (const auto& phi : {make_power(2.0), make_power_log(2.0, 1.0), make_exp()}) {
      for (double lambda : {0.5, 2.0, 10.0}) {
        for (int trial = 0; trial < 25; ++trial) {
          const int n = 2 + static_cast<int>(rng() % 10);
          Eigen::VectorXd h(n);
          for (int i = 0; i < n; ++i) h[i] = uni(rng);
          CHECK(check_scaling_equivalence(phi, lambda, h, DiscreteMeasure::counting(n)).pass);
        }
      }
    }
  }
}

TEST_CASE("Hoelder inequality with factor 2") {
  const DiscreteMeasure mu = DiscreteMeasure::counting(2);
  SUBCASE("zero left factor") {
    const HolderReport r =
        check_holder(make_power(2.0), Eigen::VectorXd::Zero(2), vec({1, 1}), mu);
    CHECK(r.pass);
    CHECK(r.lhs == 0.0);
  }
  SUBCASE("ones against Cauchy-Schwarz") {
    const HolderReport r = check_holder(make_power(2.0), vec({1, 1}), vec({1, 1}), mu);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(2.0));
    CHECK(r.rhs >= 2.0);  // 2 ||f||_2 ||g||_{phi*} at least matches Cauchy-Schwarz
  }
  SUBCASE("random batch") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const YoungFunction phi = make_power(1.5);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 18);
      Eigen::VectorXd f(n), g(n);
      for (int i = 0; i < n; ++i) {
        f[i] = uni(rng);
        g[i] = uni(rng);
      }
      CHECK(check_holder(phi, f, g, DiscreteMeasure::counting(n)).pass);
    }
  }
}

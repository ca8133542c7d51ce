#include "orliczlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "orliczlab/bicomplex.hpp"
#include "orliczlab/forms.hpp"
#include "orliczlab/cohomology.hpp"
#include "orliczlab/poincare.hpp"
#include "orliczlab/spec_parse.hpp"
#include "orliczlab/zigzag.hpp"

namespace orliczlab {

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json VerificationReport::to_json(bool with_timing, double wall_ms) const {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["environment"] = environment;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"id", c.id}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  j["checks"] = arr;
  j["pass"] = all_pass();
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  if (with_timing) j["timing_ms"] = wall_ms;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::string out = "id,value,tolerance,pass\n";
  char buf[160];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%d\n", c.id.c_str(), c.value, c.tolerance,
                  c.pass ? 1 : 0);
    out += buf;
  }
  return out;
}

namespace {

void add_check(VerificationReport& r, const std::string& id, double value, double tol,
               bool pass) {
  r.checks.push_back({id, value, tol, pass});
}

void add_residual(VerificationReport& r, const std::string& id, double value, double tol) {
  add_check(r, id, value, tol, value <= tol);
}

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> uni(lo, hi);
  return Eigen::VectorXd::NullaryExpr(n, [&](Eigen::Index) { return uni(rng); });
}

// ---------------------------------------------------------------- orlicz --

VerificationReport suite_orlicz(const SuiteConfig& config) {
  VerificationReport r;
  r.suite = "orlicz";
  std::mt19937_64 rng(config.seed);
  const YoungFunction phi = parse_young_spec(config.phi);

  // Luxemburg equals the l^p closed form for power functions.
  {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const Eigen::VectorXd f = random_vector(rng, n);
        const DiscreteMeasure mu = DiscreteMeasure::counting(n);
        const double lux = luxemburg_norm(make_power(p), f, mu);
        const double ref = std::pow(f.cwiseAbs().array().pow(p).sum(), 1.0 / p);
        if (ref > 0) worst = std::max(worst, std::abs(lux - ref) / ref);
      }
    }
    add_residual(r, "luxemburg_lp_identity", worst, 1e-10);
  }
  // Homogeneity and triangle inequality.
  {
    double worst_h = 0.0, worst_t = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 20);
      const Eigen::VectorXd f = random_vector(rng, n), g = random_vector(rng, n);
      const Eigen::VectorXd w = random_vector(rng, n, 0.1, 2.0);
      const DiscreteMeasure mu{w};
      std::uniform_real_distribution<double> uc(-3.0, 3.0);
      const double c = uc(rng);
      const double nf = luxemburg_norm(phi, f, mu);
      worst_h = std::max(worst_h,
                         std::abs(luxemburg_norm(phi, c * f, mu) - std::abs(c) * nf) /
                             (1.0 + std::abs(c) * nf));
      const double lhs = luxemburg_norm(phi, f + g, mu);
      const double rhs = nf + luxemburg_norm(phi, g, mu);
      worst_t = std::max(worst_t, lhs - rhs);
    }
    add_residual(r, "homogeneity", worst_h, 1e-9);
    add_residual(r, "triangle_inequality", worst_t, 1e-9);
  }
  // Normalization: modular at the norm is <= 1, slightly below it is > 1.
  {
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 20);
      const Eigen::VectorXd f = random_vector(rng, n);
      const DiscreteMeasure mu = DiscreteMeasure::counting(n);
      const LuxemburgResult lr = luxemburg_detail(phi, f, mu);
      if (lr.norm == 0.0) continue;
      if (lr.modular_at_norm > 1.0 + 1e-12) ok = false;
      if (lr.norm > 100e-12 && modular(phi, f / (lr.norm * (1.0 - 10e-12)), mu) <= 1.0 - 1e-9)
        ok = false;
    }
    add_check(r, "normalization", ok ? 0.0 : 1.0, 0.5, ok);
  }
  // Scaling-equivalence bracket of lambda*phi.
  {
    bool ok = true;
    for (double lambda : {0.5, 2.0, 10.0}) {
      for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 20);
        const Eigen::VectorXd f = random_vector(rng, n);
        const DiscreteMeasure mu = DiscreteMeasure::counting(n);
        if (!check_scaling_equivalence(phi, lambda, f, mu).pass) ok = false;
      }
    }
    add_check(r, "scaling_equivalence", ok ? 0.0 : 1.0, 0.5, ok);
  }
  // Hoelder with factor 2 through the grid conjugate.
  {
    bool ok = true;
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 12);
      const Eigen::VectorXd f = random_vector(rng, n), g = random_vector(rng, n);
      const DiscreteMeasure mu = DiscreteMeasure::counting(n);
      if (!check_holder(phi, f, g, mu).pass) ok = false;
    }
    add_check(r, "holder_factor2", ok ? 0.0 : 1.0, 0.5, ok);
  }
  return r;
}

// ------------------------------------------------------------ simplicial --

VerificationReport suite_simplicial(const SuiteConfig& config) {
  VerificationReport r;
  r.suite = "simplicial";
  std::mt19937_64 rng(config.seed);

  const std::vector<std::pair<std::string, SimplicialComplex>> complexes = {
      {"circle12", circle_complex(12)},
      {"torus6", torus_complex(6)},
      {"octahedron", octahedron_complex()},
      {"icosahedron", icosahedron_complex()},
      {"interval8", interval_complex(8)},
      {"subdivided_circle", barycentric_subdivision(circle_complex(6))}};

  double worst_dd = 0.0;
  bool exact_dd = true, closure_ok = true;
  for (const auto& [name, X] : complexes) {
    X.validate();
    for (int k = 0; k + 1 <= X.dimension(); ++k) {
      // Exact integer composition.
      if (k + 2 <= X.dimension()) {
        const Eigen::MatrixXi a = coboundary_matrix_int(X, k + 1);
        const Eigen::MatrixXi b = coboundary_matrix_int(X, k);
        if (a.rows() > 0 && b.rows() > 0 && (a * b).cwiseAbs().maxCoeff() != 0) exact_dd = false;
      }
      Cochain theta;
      theta.degree = k;
      theta.values = random_vector(rng, X.count(k));
      const Cochain dd = coboundary(X, coboundary(X, theta));
      if (dd.values.size() > 0) worst_dd = std::max(worst_dd, dd.values.cwiseAbs().maxCoeff());
    }
    for (int k = 1; k <= X.dimension(); ++k)
      for (const auto& t : X.simplices[k])
        for (const auto& [face, sign] : boundary_faces(X, t))
          if (X.index_of(face) < 0) closure_ok = false;
  }
  add_residual(r, "delta_delta_zero_float", worst_dd, 1e-12);
  add_check(r, "delta_delta_zero_exact", exact_dd ? 0.0 : 1.0, 0.5, exact_dd);
  add_check(r, "face_closure", closure_ok ? 0.0 : 1.0, 0.5, closure_ok);

  // Alternating evaluation on permuted tuples.
  {
    const SimplicialComplex X = octahedron_complex();
    Cochain theta;
    theta.degree = 2;
    theta.values = random_vector(rng, X.count(2));
    double worst = 0.0;
    for (const auto& t : X.simplices[2]) {
      const double base = cochain_value(X, theta, t);
      const std::vector<std::pair<VertexTuple, int>> perms = {
          {{t[0], t[1], t[2]}, 1}, {{t[1], t[0], t[2]}, -1}, {{t[1], t[2], t[0]}, 1},
          {{t[2], t[1], t[0]}, -1}, {{t[0], t[2], t[1]}, -1}, {{t[2], t[0], t[1]}, 1}};
      for (const auto& [perm, sign] : perms)
        worst = std::max(worst, std::abs(cochain_value(X, theta, perm) - sign * base));
    }
    add_residual(r, "alternating_evaluation", worst, 1e-14);
  }

  // Coboundary norm estimate against the (k+2)N incidence bound.
  {
    const SimplicialComplex X = octahedron_complex();
    const GeometryStats gs = geometry_stats(X);
    const YoungFunction phi = parse_young_spec(config.phi);
    bool ok = true;
    for (int k = 0; k < X.dimension(); ++k) {
      const double est = coboundary_norm_estimate(phi, X, k, 50, config.seed);
      if (est > (k + 2.0) * gs.incidence_bound + 1e-9) ok = false;
    }
    add_check(r, "coboundary_norm_bound", ok ? 0.0 : 1.0, 0.5, ok);
  }

  // Exact and floating Betti numbers agree on the generated complexes.
  {
    bool ok = true;
    for (const auto& [name, X] : complexes) {
      const auto exact = betti_numbers_exact(X);
      const auto fl = betti_numbers(LinearComplex::from_simplicial(X));
      if (exact != fl) ok = false;
    }
    add_check(r, "betti_exact_matches_float", ok ? 0.0 : 1.0, 0.5, ok);
  }

  // JSON round trip.
  {
    const SimplicialComplex X = torus_complex(4);
    const SimplicialComplex Y = complex_from_json(complex_to_json(X));
    const bool ok = X.simplices == Y.simplices;
    add_check(r, "json_round_trip", ok ? 0.0 : 1.0, 0.5, ok);
  }
  return r;
}

// -------------------------------------------------------------- poincare --

BallQuadrature poincare_base_quadrature(int dim, int refine) {
  // Deliberately sub-exact cone rule (low-degree Gauss panels) so that
  // quadrature error dominates the finite-difference floor and refinement
  // trends are observable on the polynomial corpus.
  const ConeRule cone = dim == 2 ? ConeRule{2, 3} : ConeRule{3, 2};
  BallQuadrature q = BallQuadrature::make(dim, 3, 8, 3, cone);
  for (int i = 0; i < refine; ++i) q = q.refined(2);
  return q;
}

VerificationReport suite_poincare(const SuiteConfig& config) {
  VerificationReport r;
  r.suite = "poincare";
  const int dim = config.dim;
  if (dim != 2 && dim != 3) throw std::invalid_argument("poincare suite: dim must be 2 or 3");
  const BallQuadrature base = poincare_base_quadrature(dim, config.refine);
  const std::vector<Eigen::VectorXd> points = interior_points(dim, 50, 0.7, config.seed);

  double max_res = 0.0;
  std::vector<double> trend;
  const int levels = 2;
  std::vector<double> level_res(levels, 0.0);
  const int k_lo = (config.degree >= 1 && config.degree <= dim) ? config.degree : 1;
  const int k_hi = (config.degree >= 1 && config.degree <= dim) ? config.degree : dim;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto corpus = monomial_forms(dim, k, 4);
    for (int lvl = 0; lvl < levels; ++lvl) {
      BallQuadrature q = base;
      for (int i = 0; i < lvl; ++i) q = q.refined(2);
      double worst = 0.0;
      for (const auto& omega : corpus) {
        const HomotopyReport hr = verify_homotopy_identity(omega, q, points);
        worst = std::max(worst, hr.max_rel_residual);
      }
      level_res[lvl] = std::max(level_res[lvl], worst);
    }
  }
  max_res = level_res[0];
  for (double v : level_res) trend.push_back(v);
  add_residual(r, "h_identity_max_residual", max_res, 1e-3);
  const double ratio = level_res[1] > 0 ? level_res[0] / level_res[1] : 1e9;
  add_residual(r, "h_identity_refinement_shortfall", std::max(0.0, 4.0 - ratio), 0.0);
  r.extra["refinement_ratio"] = ratio;

  // Degree-0 identity and the closed form h(df) = f - mean(f).
  {
    std::vector<Polynomial> fpoly{Polynomial::variable(0) * Polynomial::variable(0)};
    const AnalyticForm f = AnalyticForm::from_polynomials(dim, 0, fpoly);
    const HomotopyReport hr = verify_homotopy_identity(f, base, points);
    add_residual(r, "degree0_identity", hr.max_rel_residual, 1e-8);

    const AnalyticForm df = f.d();
    const double mean = degree0_average(f, base);
    double worst = 0.0;
    for (const auto& y : points) {
      const double h_df = averaged_homotopy(df, base, y, Eigen::MatrixXd(dim, 0));
      worst = std::max(worst, std::abs(h_df - (f.comps[0](y) - mean)));
    }
    add_residual(r, "h_df_closed_form", worst, 1e-8);
  }

  // Boundedness: empirical ratio, finite and stable under refinement.
  {
    const YoungFunction phi = parse_young_spec(config.phi);
    std::vector<AnalyticForm> sample;
    const auto corpus = monomial_forms(dim, 1, 2);
    std::mt19937_64 rng(config.seed);
    for (int i = 0; i < 6 && i < static_cast<int>(corpus.size()); ++i)
      sample.push_back(corpus[rng() % corpus.size()]);
    const BoundednessReport br =
        verify_boundedness(phi, sample, BallQuadrature::make(dim, 4, 8, 4, ConeRule{8, 1}));
    const bool finite_ok = std::isfinite(br.max_ratio) && !br.contradiction;
    add_check(r, "boundedness_finite", finite_ok ? 0.0 : 1.0, 0.5, finite_ok);
    add_check(r, "boundedness_stable", std::abs(br.refined_max_ratio - br.max_ratio),
              0.10 * std::max(1e-12, br.max_ratio), br.stable);
    r.extra["boundedness_ratio"] = br.max_ratio;
  }

  r.extra["max_residual"] = max_res;
  r.extra["refinement_trend"] = trend;
  return r;
}

// -------------------------------------------------------------- bicomplex --

VerificationReport suite_bicomplex(const SuiteConfig& config) {
  VerificationReport r;
  r.suite = "bicomplex";
  const Mesh mesh = parse_mesh_spec(config.mesh);
  const StarCover cover = StarCover::build(mesh);
  const YoungFunction phi = parse_young_spec(config.phi);
  const int n = mesh.dim();
  std::mt19937_64 rng(config.seed);

  // Partition of unity: hats sum to 1, gradients bounded.
  {
    double worst = 0.0;
    const SimplexRule rule = simplex_rule(n, 2);
    for (int T = 0; T < mesh.complex.count(n); ++T) {
      for (int q = 0; q < rule.weights.size(); ++q) {
        const Eigen::VectorXd y = mesh.bary_to_intrinsic(T, rule.barycentric.row(q).transpose());
        double sum = 0.0;
        for (int v : mesh.complex.simplices[n][T]) sum += hat_value(mesh, v, T, y);
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
    add_residual(r, "pou_sum_to_one", worst, 1e-12);
    r.extra["max_hat_gradient"] = max_hat_gradient(mesh);
  }

  // d'd' = 0, d''d'' = 0, anticommutation, nodewise.
  double worst_dpdp = 0.0, worst_dddd = 0.0, worst_anti = 0.0;
  double worst_P = 0.0, worst_H = 0.0;
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= n; ++m) {
      const BicomplexElement w =
          random_poly_element(mesh, cover, k, m, 2, config.seed + 7 * k + m, false);
      if (k + 2 <= n) worst_dpdp = std::max(worst_dpdp, nodewise_max(d_prime(d_prime(w))));
      worst_dddd = std::max(worst_dddd, nodewise_max(d_double_prime(d_double_prime(w))));
      if (k + 1 <= n) {
        const BicomplexElement a = d_double_prime(d_prime(w));
        const BicomplexElement b = d_prime(d_double_prime(w));
        const ElementSample sa = sample_element(a, 4), sb = sample_element(b, 4);
        for (std::size_t d = 0; d < sa.values.size(); ++d)
          for (std::size_t t = 0; t < sa.values[d].size(); ++t)
            worst_anti = std::max(
                worst_anti, (sa.values[d][t] + sb.values[d][t]).cwiseAbs().maxCoeff());
      }
      // P-identity (exact algebra): P^{m+1} d'' + d'' P^m = Id for m >= 1,
      // P^1 d'' + inc P^0 = Id for m = 0.
      if (m <= n - 1) {
        const BicomplexElement pd = column_homotopy_P(d_double_prime(w));
        BicomplexElement dp = m == 0 ? column_homotopy_P(w) : d_double_prime(column_homotopy_P(w));
        const ElementSample spd = sample_element(pd, 4), sdp = sample_element(dp, 4),
                            sw = sample_element(w, 4);
        for (std::size_t d = 0; d < sw.values.size(); ++d)
          for (std::size_t t = 0; t < sw.values[d].size(); ++t)
            worst_P = std::max(worst_P, (spd.values[d][t] + sdp.values[d][t] - sw.values[d][t])
                                            .cwiseAbs()
                                            .maxCoeff());
      }
    }
  }
  add_residual(r, "dprime_squared", worst_dpdp, 1e-12);
  add_residual(r, "ddoubleprime_squared", worst_dddd, 1e-12);
  add_residual(r, "anticommutation", worst_anti, 1e-12);
  add_residual(r, "P_identity", worst_P, 1e-12);

  // H-identity at interior nodes, d'(H w) by central differences.
  {
    const int k = std::min(std::max(config.degree, 1), n);
    for (int m = 0; m <= std::min(1, n); ++m) {
      const BicomplexElement w =
          random_poly_element(mesh, cover, k, m, 2, config.seed + 31 * m, true);
      const BicomplexElement hw = row_homotopy_H(w);
      const BicomplexElement hdw =
          k < n ? row_homotopy_H(d_prime(w)) : BicomplexElement::zero(mesh, cover, k, m);
      const double msign = (m % 2 == 0) ? 1.0 : -1.0;
      const SimplexRule rule = simplex_rule(n, 2);
      const ElementSample sw = sample_element(w, 2);
      const ElementSample shdw = sample_element(hdw, 2);
      double worst = 0.0;
      for (std::size_t d = 0; d < w.fields.size(); ++d) {
        const StarChart& star = cover.star(m, static_cast<int>(d));
        for (std::size_t t = 0; t < star.tops.size(); ++t) {
          const int T = star.tops[t];
          const double step = 1e-4 * mesh.charts[T].smax;
          for (int q = 0; q < rule.weights.size(); ++q) {
            const Eigen::VectorXd y =
                mesh.bary_to_intrinsic(T, rule.barycentric.row(q).transpose());
            // d'(Hw) component by finite differences of Hw.
            const auto& basis = covector_basis(n, k);
            for (std::size_t I = 0; I < basis.size(); ++I) {
              double dH = 0.0;
              for (std::size_t pos = 0; pos < basis[I].size(); ++pos) {
                const int j = basis[I][pos];
                std::vector<int> sub;
                for (std::size_t qq = 0; qq < basis[I].size(); ++qq)
                  if (qq != pos) sub.push_back(basis[I][qq]);
                // Component index of sub inside basis(n, k-1).
                const auto& bsub = covector_basis(n, k - 1);
                int sub_idx = -1;
                for (std::size_t s = 0; s < bsub.size(); ++s)
                  if (bsub[s] == sub) sub_idx = static_cast<int>(s);
                Eigen::VectorXd yp = y, ym = y;
                yp[j] += step;
                ym[j] -= step;
                const double deriv = (hw.eval(static_cast<int>(d), static_cast<int>(t), yp)[sub_idx] -
                                      hw.eval(static_cast<int>(d), static_cast<int>(t), ym)[sub_idx]) /
                                     (2.0 * step);
                dH += ((pos % 2 == 0) ? 1.0 : -1.0) * deriv;
              }
              dH *= msign;  // d' carries (-1)^m
              const double hd = (k < n) ? shdw.values[d][t](q, static_cast<Eigen::Index>(I)) : 0.0;
              const double wv = sw.values[d][t](q, static_cast<Eigen::Index>(I));
              worst = std::max(worst, std::abs(dH + hd - wv) / (1.0 + std::abs(wv)));
            }
          }
        }
      }
      worst_H = std::max(worst_H, worst);
    }
    add_residual(r, "H_identity", worst_H, 1e-3);
  }

  // ||d'' w|| / ||w||: finite and refinement-stable. --refine deepens both
  // quadrature levels.
  double dd_ratio = 0.0, dd_ratio_refined = 0.0;
  {
    const int base_order = 4 << std::min(config.refine, 4);
    const BicomplexElement w = random_poly_element(mesh, cover, 1 % (n + 1), 0, 2,
                                                   config.seed + 99, false);
    const BicomplexElement dw = d_double_prime(w);
    const double nw = bicomplex_norm(phi, w, 1e-12, base_order);
    const double nd = bicomplex_norm(phi, dw, 1e-12, base_order);
    dd_ratio = nw > 0 ? nd / nw : 0.0;
    const double nw2 = bicomplex_norm(phi, w, 1e-12, 2 * base_order);
    const double nd2 = bicomplex_norm(phi, dw, 1e-12, 2 * base_order);
    dd_ratio_refined = nw2 > 0 ? nd2 / nw2 : 0.0;
    const bool stable = std::abs(dd_ratio_refined - dd_ratio) <= 0.10 * std::max(1e-12, dd_ratio);
    add_check(r, "ddoubleprime_norm_ratio_stable", std::abs(dd_ratio_refined - dd_ratio),
              0.10 * std::max(1e-12, dd_ratio), stable);
    r.extra["ddoubleprime_norm_ratio"] = dd_ratio;
  }

  // Glue ratio in [1, n+1]; constants-extraction ratio in the volume bracket.
  {
    double lo = 1e300, hi = 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      Cochain theta;
      const int k = std::min(config.degree, n);
      theta.degree = k;
      theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(k),
                                                  [&](Eigen::Index) { return gauss(rng); });
      const PiecewiseForm form = to_piecewise(whitney_interpolate(mesh, theta));
      const BicomplexElement w = restrict_E(mesh, cover, form);
      const double nc = bicomplex_norm(phi, w, 1e-12, 4);
      const double nl = lphi_norm(phi, mesh, form, 4);
      if (nl > 0) {
        lo = std::min(lo, nc / nl);
        hi = std::max(hi, nc / nl);
      }
      // Round trip through the glue.
      const PiecewiseForm glued = glue_E(w, 1e-7);
      const SampledComass diff_a = sample_comass(mesh, glued, 2);
      const SampledComass diff_b = sample_comass(mesh, form, 2);
      if ((diff_a.values - diff_b.values).cwiseAbs().maxCoeff() > 1e-9)
        add_check(r, "glue_restrict_identity", 1.0, 0.5, false);
    }
    const double glue_violation =
        std::max(0.0, hi - (n + 1.0 + 1e-9)) + std::max(0.0, (1.0 - 1e-9) - lo);
    add_residual(r, "glue_norm_ratio_bracket", glue_violation, 0.0);
    r.extra["norm_ratios"] = nlohmann::json::object();
    r.extra["norm_ratios"]["E"] = {lo, hi};

    // F: constants against the volume bracket.
    const MeshGeometryStats gs = mesh.geometry();
    double flo = 1e300, fhi = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      Cochain theta;
      theta.degree = std::min(config.degree, n);
      theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(theta.degree),
                                                  [&](Eigen::Index) { return gauss(rng); });
      const BicomplexElement w = constants_F_inverse(mesh, cover, theta);
      const Cochain back = constants_F(w, 1e-9, 2);
      if ((back.values - theta.values).cwiseAbs().maxCoeff() > 1e-9)
        add_check(r, "F_round_trip", 1.0, 0.5, false);
      const double nc = bicomplex_norm(phi, w, 1e-12, 4);
      const double nl = cochain_norm(phi, theta);
      if (nl > 0) {
        flo = std::min(flo, nl / nc);
        fhi = std::max(fhi, nl / nc);
      }
    }
    // Vol(U_Delta) ranges over star volumes; V >= 1 covers them both ways.
    double vol_min = 1e300, vol_max = 0.0;
    for (int m = 0; m <= n; ++m)
      for (int i = 0; i < mesh.complex.count(m); ++i) {
        double vol = 0.0;
        for (int T : cover.star(m, i).tops) vol += mesh.charts[T].volume;
        vol_min = std::min(vol_min, vol);
        vol_max = std::max(vol_max, vol);
      }
    const double V = std::max({1.0, vol_max, 1.0 / vol_min});
    const double f_violation =
        std::max(0.0, fhi - (V * V + 1e-9)) + std::max(0.0, (1.0 / (V * V) - 1e-9) - flo);
    add_residual(r, "F_norm_ratio_bracket", f_violation, 0.0);
    r.extra["norm_ratios"]["F"] = {flo, fhi};
    r.extra["volume_bound_V"] = V;
    (void)gs;
  }

  r.extra["identity_residuals"] = {{"dd", std::max(worst_dpdp, worst_dddd)},
                                   {"anticommute", worst_anti},
                                   {"H", worst_H},
                                   {"P", worst_P}};

  // Zigzag summary for the CLI report.
  {
    const StarCover zcover = StarCover::build(mesh);
    nlohmann::json betti = nlohmann::json::object();
    double closed_residual = 0.0;
    nlohmann::json pairing;
    bool zig_ok = true;
    for (int k = 0; k <= n; ++k) {
      const ZigzagBettiReport zb = zigzag_betti(mesh, zcover, k, config.seed);
      if (!zb.ok) {
        zig_ok = false;
        continue;
      }
      betti[std::to_string(k)] = zb.zigzag_rank;
      if (k == std::min(config.degree, n)) {
        std::vector<std::vector<double>> rows;
        for (int i = 0; i < zb.pairing.rows(); ++i) {
          std::vector<double> row(zb.pairing.cols());
          for (int j = 0; j < zb.pairing.cols(); ++j) row[j] = zb.pairing(i, j);
          rows.push_back(std::move(row));
        }
        pairing = rows;
      }
      closed_residual = std::max(closed_residual, zb.max_exact_pairing);
    }
    add_check(r, "zigzag_betti_ok", zig_ok ? 0.0 : 1.0, 0.5, zig_ok);
    r.extra["zigzag"] = {{"closed_residual", closed_residual},
                         {"betti", betti},
                         {"pairing_matrix", pairing}};
  }
  return r;
}

// -------------------------------------------------------------- endtoend --

VerificationReport suite_endtoend(const SuiteConfig& config) {
  VerificationReport r;
  r.suite = "endtoend";
  const Mesh mesh = parse_mesh_spec(config.mesh);
  const StarCover cover = StarCover::build(mesh);
  const int n = mesh.dim();

  nlohmann::json betti = nlohmann::json::object();
  const auto exact = betti_numbers_exact(mesh.complex);
  bool all_match = true;
  double worst_exact_pairing = 0.0;
  for (int k = 0; k <= n; ++k) {
    const ZigzagBettiReport zb = zigzag_betti(mesh, cover, k, config.seed);
    if (!zb.ok) {
      add_check(r, "zigzag_degree_" + std::to_string(k), 1.0, 0.5, false);
      all_match = false;
      continue;
    }
    betti[std::to_string(k)] = zb.zigzag_rank;
    if (zb.zigzag_rank != exact[k] || zb.simplicial_betti != exact[k]) all_match = false;
    worst_exact_pairing = std::max(worst_exact_pairing, zb.max_exact_pairing);
  }
  add_check(r, "betti_match", all_match ? 0.0 : 1.0, 0.5, all_match);
  add_residual(r, "exact_inputs_map_to_exact", worst_exact_pairing, 1e-6);
  r.extra["betti"] = betti;
  r.extra["betti_exact"] = exact;

  // Circle winding normalization when the mesh is a circle.
  if (n == 1 && mesh.metric == MetricKind::Euclidean) {
    Cochain theta;
    theta.degree = 1;
    theta.values = Eigen::VectorXd::Constant(mesh.complex.count(1), 2.0 * M_PI /
                                                                         mesh.complex.count(1));
    const PiecewiseForm omega = to_piecewise(whitney_interpolate(mesh, theta));
    const ZigzagResult zr = zigzag_derham_to_simplicial(mesh, cover, omega);
    const double total = zr.ok ? zr.cochain.values.sum() : 0.0;
    add_residual(r, "circle_winding_sum", std::abs(std::abs(total) - 2.0 * M_PI), 1e-6);
  }
  return r;
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  VerificationReport r;
  if (name == "orlicz")
    r = suite_orlicz(config);
  else if (name == "simplicial")
    r = suite_simplicial(config);
  else if (name == "poincare")
    r = suite_poincare(config);
  else if (name == "bicomplex")
    r = suite_bicomplex(config);
  else if (name == "endtoend")
    r = suite_endtoend(config);
  else
    throw std::invalid_argument("unknown suite '" + name +
                                "' (orlicz|simplicial|poincare|bicomplex|endtoend)");
  r.environment["mesh"] = config.mesh;
  r.environment["phi"] = config.phi;
  r.environment["degree"] = std::to_string(config.degree);
  r.environment["dim"] = std::to_string(config.dim);
  r.environment["refine"] = std::to_string(config.refine);
  r.environment["seed"] = std::to_string(config.seed);
  return r;
}

std::string emit_norm_table(const std::vector<std::string>& phi_specs,
                            const Eigen::VectorXd& values, const Eigen::VectorXd& weights,
                            const std::string& format) {
  const DiscreteMeasure mu{weights};
  std::vector<std::pair<std::string, LuxemburgResult>> rows;
  for (const auto& spec : phi_specs) {
    const YoungFunction phi = parse_young_spec(spec);
    rows.emplace_back(spec, luxemburg_detail(phi, values, mu));
  }
  if (format == "csv") {
    std::string out = "phi,norm,modular_at_norm,iterations\n";
    for (const auto& [spec, lr] : rows) {
      out += spec + "," + std::to_string(lr.norm) + "," + std::to_string(lr.modular_at_norm) +
             "," + std::to_string(lr.iterations) + "\n";
    }
    return out;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [spec, lr] : rows)
    j.push_back({{"phi", spec},
                 {"norm", lr.norm},
                 {"modular_at_norm", lr.modular_at_norm},
                 {"iterations", lr.iterations}});
  return j.dump();
}

std::string emit_form_norm_table(const std::vector<std::string>& phi_specs,
                                 const std::string& mesh_spec, int degree, unsigned seed,
                                 const std::string& format) {
  const Mesh mesh = parse_mesh_spec(mesh_spec);
  const int k = std::clamp(degree, 0, mesh.dim());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Cochain theta;
  theta.degree = k;
  theta.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(k),
                                              [&](Eigen::Index) { return gauss(rng); });
  const PiecewiseForm form = to_piecewise(whitney_interpolate(mesh, theta));
  std::vector<std::pair<std::string, double>> rows;
  for (const auto& spec : phi_specs)
    rows.emplace_back(spec, lphi_norm(parse_young_spec(spec), mesh, form));
  if (format == "csv") {
    std::string out = "phi,lphi_norm\n";
    for (const auto& [spec, nrm] : rows) out += spec + "," + std::to_string(nrm) + "\n";
    return out;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [spec, nrm] : rows)
    j.push_back({{"phi", spec}, {"mesh", mesh_spec}, {"degree", k}, {"lphi_norm", nrm}});
  return j.dump();
}

}  // namespace orliczlab

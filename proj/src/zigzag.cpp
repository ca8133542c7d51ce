#include "orliczlab/zigzag.hpp"

#include <cmath>
#include <random>

namespace orliczlab {

ZigzagResult zigzag_derham_to_simplicial(const Mesh& mesh, const StarCover& cover,
                                         const PiecewiseForm& omega, const ZigzagOptions& opt) {
  ZigzagResult res;
  const int k = omega.degree;

  // Closedness of the input, sampled nodewise.
  if (k < mesh.dim()) {
    const PiecewiseForm dom = omega.derivative();
    const SampledComass s = sample_comass(mesh, dom, 2);
    res.input_closed_residual = s.values.size() ? s.values.maxCoeff() : 0.0;
    const SampledComass s0 = sample_comass(mesh, omega, 2);
    const double scale = 1.0 + (s0.values.size() ? s0.values.maxCoeff() : 0.0);
    if (res.input_closed_residual > opt.closed_tol * scale) {
      res.ok = false;
      res.failure = "input form is not closed";
      return res;
    }
  }

  BicomplexElement w = restrict_E(mesh, cover, omega);
  {
    const BicomplexElement dw = d_double_prime(w);
    res.restriction_cocycle_residual = nodewise_max(dw, opt.sample_order);
    const double scale = 1.0 + nodewise_max(w, opt.sample_order);
    if (res.restriction_cocycle_residual > opt.cocycle_tol * scale) {
      res.ok = false;
      res.failure = "restriction is not a d''-cocycle";
      return res;
    }
  }

  // Staircase: each step is d'' of the row homotopy. d'' of a d''-image is
  // zero by the formula, so the d''-closedness invariant is maintained
  // identically; the final constancy check is the accumulated-error witness.
  for (int j = 0; j < k; ++j) {
    const BicomplexElement alpha = row_homotopy_H(w, opt.h);
    w = d_double_prime(alpha);
  }

  try {
    res.cochain = constants_F(w, opt.constancy_tol, opt.sample_order);
  } catch (const std::invalid_argument& e) {
    res.ok = false;
    res.failure = std::string("final constants not flat: ") + e.what();
    return res;
  }
  // Record the achieved spread for reporting.
  {
    const ElementSample s = sample_element(w, opt.sample_order);
    double worst = 0.0;
    for (std::size_t d = 0; d < s.values.size(); ++d) {
      double mn = 1e300, mx = -1e300;
      for (const auto& vals : s.values[d])
        for (int q = 0; q < vals.rows(); ++q) {
          mn = std::min(mn, vals(q, 0));
          mx = std::max(mx, vals(q, 0));
        }
      worst = std::max(worst, mx - mn);
    }
    res.final_constancy_spread = worst;
  }
  return res;
}

ZigzagBettiReport zigzag_betti(const Mesh& mesh, const StarCover& cover, int degree,
                               unsigned seed, const ZigzagOptions& opt) {
  ZigzagBettiReport report;
  report.degree = degree;
  const LinearComplex cx = LinearComplex::from_simplicial(mesh.complex);
  const Eigen::MatrixXd harmonic = harmonic_representatives(cx, degree);
  report.simplicial_betti = static_cast<int>(harmonic.cols());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Closed Whitney inputs: the harmonic cocycles span the classes; a couple
  // of exact cocycles witness class invariance.
  std::vector<Cochain> inputs;
  std::vector<bool> is_exact;
  for (int c = 0; c < harmonic.cols(); ++c) {
    Cochain theta;
    theta.degree = degree;
    theta.values = harmonic.col(c);
    inputs.push_back(theta);
    is_exact.push_back(false);
  }
  if (degree > 0) {
    for (int rep = 0; rep < 2; ++rep) {
      Cochain sigma;
      sigma.degree = degree - 1;
      sigma.values = Eigen::VectorXd::NullaryExpr(mesh.complex.count(degree - 1),
                                                  [&](Eigen::Index) { return gauss(rng); });
      Cochain dsigma = coboundary(mesh.complex, sigma);
      if (dsigma.values.size() > 0 && dsigma.values.cwiseAbs().maxCoeff() > 0)
        dsigma.values /= dsigma.values.cwiseAbs().maxCoeff();
      inputs.push_back(dsigma);
      is_exact.push_back(true);
    }
  }

  std::vector<Eigen::VectorXd> outputs;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const MeshForm form = whitney_interpolate(mesh, inputs[i]);
    const ZigzagResult zr = zigzag_derham_to_simplicial(mesh, cover, to_piecewise(form), opt);
    if (!zr.ok) {
      report.ok = false;
      report.failure = zr.failure;
      return report;
    }
    // The output must be a delta-cocycle.
    const Cochain closed = coboundary(mesh.complex, zr.cochain);
    if (closed.values.size() > 0 && closed.values.cwiseAbs().maxCoeff() > 1e-8 *
            (1.0 + zr.cochain.values.cwiseAbs().maxCoeff())) {
      report.ok = false;
      report.failure = "zigzag output is not delta-closed";
      return report;
    }
    outputs.push_back(zr.cochain.values);
  }

  Eigen::MatrixXd pairing(harmonic.cols(), static_cast<Eigen::Index>(outputs.size()));
  for (std::size_t i = 0; i < outputs.size(); ++i)
    pairing.col(static_cast<Eigen::Index>(i)) = harmonic.transpose() * outputs[i];
  report.pairing = pairing;

  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (!is_exact[i]) continue;
    if (pairing.rows() > 0)
      report.max_exact_pairing =
          std::max(report.max_exact_pairing, pairing.col(static_cast<Eigen::Index>(i)).cwiseAbs().maxCoeff());
  }

  // Rank of the pairing against the harmonic inputs only.
  if (harmonic.cols() == 0) {
    report.zigzag_rank = 0;
  } else {
    const Eigen::MatrixXd sub = pairing.leftCols(harmonic.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > 1e-6 * std::max(1.0, svd.singularValues()[0])) ++r;
    report.zigzag_rank = r;
  }
  return report;
}

}  // namespace orliczlab

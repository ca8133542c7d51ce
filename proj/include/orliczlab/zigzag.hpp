// The staircase from closed global forms to simplicial cocycles through the
// bicomplex: restrict to the vertex stars, then alternate the row homotopy H
// with d'' until the first column, and read off the constants.

#pragma once

#include <string>

#include "orliczlab/bicomplex.hpp"
#include "orliczlab/cohomology.hpp"

namespace orliczlab {

struct ZigzagOptions {
  HOptions h;
  double closed_tol = 1e-9;      // residual allowed for d(omega) = 0
  double cocycle_tol = 1e-8;     // d'' residual of the restriction
  double constancy_tol = 1e-6;   // spread allowed in the final constants
  int sample_order = 2;          // quadrature order for residual sampling
};

struct ZigzagResult {
  Cochain cochain;
  double input_closed_residual = 0.0;
  double restriction_cocycle_residual = 0.0;
  double final_constancy_spread = 0.0;
  bool ok = true;
  std::string failure;  // names the failing step on numerical breakdown
};

/// Maps a closed k-form to a delta-closed k-cochain in the image cohomology
/// class (up to one global sign shared by the whole degree).
ZigzagResult zigzag_derham_to_simplicial(const Mesh& mesh, const StarCover& cover,
                                         const PiecewiseForm& omega,
                                         const ZigzagOptions& opt = {});

struct ZigzagBettiReport {
  int degree = 0;
  int simplicial_betti = 0;
  int zigzag_rank = 0;
  Eigen::MatrixXd pairing;          // harmonic reps x zigzag outputs
  double max_exact_pairing = 0.0;   // harmonic pairings of exact inputs
  bool ok = true;
  std::string failure;
};

/// Runs the zigzag on a spanning set of closed Whitney forms (harmonic
/// cocycle representatives plus exact ones) and compares the recovered rank
/// with the simplicial Betti number.
ZigzagBettiReport zigzag_betti(const Mesh& mesh, const StarCover& cover, int degree,
                               unsigned seed, const ZigzagOptions& opt = {});

}  // namespace orliczlab

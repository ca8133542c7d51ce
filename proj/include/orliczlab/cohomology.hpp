// Finite-dimensional linear algebra for cochain complexes: kernels, images,
// cohomology dimensions and harmonic representatives, with an exact-rational
// path for integer incidence matrices.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orliczlab/simplicial.hpp"

namespace orliczlab {

/// Per-degree dimensions and maps D_k : C^k -> C^{k+1} with D_{k+1} D_k = 0.
struct LinearComplex {
  std::vector<int> dims;              // dims[k] = dim C^k
  std::vector<Eigen::MatrixXd> maps;  // maps[k] is dims[k+1] x dims[k]; maps.size() == dims.size()

  int degrees() const { return static_cast<int>(dims.size()); }
  /// Throws std::invalid_argument on shape mismatch or D.D != 0 (tol 1e-10).
  void validate() const;

  static LinearComplex from_simplicial(const SimplicialComplex& X);
};

/// Rank with relative singular-value cutoff 1e-9 * sigma_max.
int numeric_rank(const Eigen::MatrixXd& A);

/// dim Ker D_k - rank D_{k-1}.
int cohomology_dim(const LinearComplex& cx, int k);

/// Orthonormal basis of Ker D_k  ∩  Ker D_{k-1}^T (columns), deterministic
/// up to the fixed sign normalization.
Eigen::MatrixXd harmonic_representatives(const LinearComplex& cx, int k);

/// Column `index` of harmonic_representatives; throws when out of range.
Eigen::VectorXd harmonic_representative(const LinearComplex& cx, int k, int index);

/// Always true in finite dimension (images are closed); exists so reports can
/// state it explicitly.
bool reduced_equals_unreduced(const LinearComplex& cx, int k);

/// Exact rank of an integer matrix over Q (fraction-free elimination).
int exact_rank(const Eigen::MatrixXi& A);

/// Betti numbers of a simplicial complex certified with exact arithmetic.
std::vector<int> betti_numbers_exact(const SimplicialComplex& X);
std::vector<int> betti_numbers(const LinearComplex& cx);

}  // namespace orliczlab

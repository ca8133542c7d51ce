// Cech-de Rham bicomplex over the open-star cover: elements of bidegree
// (k, m), the differentials d' and d'', the modular and Luxemburg norm, the
// row homotopy H (cone contraction averaged over the inner ball), the column
// homotopy P (hat-function weights), and the kernel isomorphisms E and F.
//
// Elements store their component k-form per m-simplex either as polynomials
// per top simplex (exactly differentiable) or as a lazy evaluator (outputs
// of H). Component vectors are always in the intrinsic frame of the top
// simplex being evaluated.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "orliczlab/forms.hpp"
#include "orliczlab/star_cover.hpp"

namespace orliczlab {

using LazyField = std::function<Eigen::VectorXd(int local_top, const Eigen::VectorXd& y)>;

struct BicomplexElement {
  const Mesh* mesh = nullptr;
  const StarCover* cover = nullptr;
  int k = 0;  // form degree
  int m = 0;  // simplex degree

  struct Field {
    bool is_poly = true;
    std::vector<std::vector<Polynomial>> poly;  // [local_top][component]
    LazyField lazy;
  };
  std::vector<Field> fields;  // per canonical m-simplex

  bool polynomial() const;
  int poly_degree() const;
  Eigen::VectorXd eval(int delta, int local_top, const Eigen::VectorXd& y) const;

  static BicomplexElement zero(const Mesh& mesh, const StarCover& cover, int k, int m);
};

/// Componentwise exterior derivative with sign (-1)^m; polynomial fields only.
BicomplexElement d_prime(const BicomplexElement& w);

/// Alternating Cech differential (d''w)_Delta = sum_i (-1)^i w_{face_i}.
BicomplexElement d_double_prime(const BicomplexElement& w);

/// Column homotopy: (P w)_Delta = (-1)^m sum_v eta_v w_{Delta v}
/// (m >= 1); for m = 0 returns the global smoothing included back into C^{k,0}.
BicomplexElement column_homotopy_P(const BicomplexElement& w);

struct HOptions {
  // Ball-average quadrature inside the star (1,1,1) = center point only.
  int radial = 1, angular = 1, polar = 1;
  // Cone integration: Gauss size per smooth piece for polynomial inputs,
  // absolute adaptive tolerance otherwise.
  int gauss_per_piece = 8;
  double adaptive_tol = 1e-10;
};

/// Row homotopy: cone contraction toward points of the inner ball, averaged,
/// with sign (-1)^m. Degree-0 input returns the per-Delta ball average
/// (constant fields, the F-side inclusion).
BicomplexElement row_homotopy_H(const BicomplexElement& w, const HOptions& opt = {});

/// Nodewise samples on a shared per-top quadrature rule; values[delta][t] is
/// nodes x components, weights are physical volumes per node.
struct ElementSample {
  std::vector<std::vector<Eigen::MatrixXd>> values;
  Eigen::VectorXd node_weights;  // per (top, node), independent of delta
  int nodes_per_top = 0;
};
ElementSample sample_element(const BicomplexElement& w, int order);

/// varrho_phi(w/alpha): sum over Delta of the quadrature of phi(|w_Delta|/alpha).
double bicomplex_modular(const YoungFunction& phi, const BicomplexElement& w, double alpha,
                         int order = 4);
double bicomplex_norm(const YoungFunction& phi, const BicomplexElement& w, double tol = 1e-12,
                      int order = 4);

/// Max nodewise component difference between two elements of equal bidegree.
double nodewise_max_diff(const BicomplexElement& a, const BicomplexElement& b, int order = 4);
double nodewise_max(const BicomplexElement& a, int order = 4);

/// Restriction of a global form to the vertex stars (a d''-cocycle).
BicomplexElement restrict_E(const Mesh& mesh, const StarCover& cover, const PiecewiseForm& form);

/// Glue a d''-cocycle of bidegree (k,0) back to a global form; throws
/// not-a-cocycle (std::invalid_argument) when overlaps disagree beyond tol.
PiecewiseForm glue_E(const BicomplexElement& w, double tol = 1e-9);

/// Extract the constant values of a d'-closed (0,m) element; throws
/// not-in-kernel (std::invalid_argument) when a component is not constant.
Cochain constants_F(const BicomplexElement& w, double tol = 1e-9, int order = 4);
BicomplexElement constants_F_inverse(const Mesh& mesh, const StarCover& cover,
                                     const Cochain& theta);

/// Random polynomial element; smooth_per_delta makes each component the
/// restriction of one global polynomial form on its star (weakly
/// differentiable on U_Delta, as the homotopy identities require).
BicomplexElement random_poly_element(const Mesh& mesh, const StarCover& cover, int k, int m,
                                     int max_deg, unsigned seed, bool smooth_per_delta);

}  // namespace orliczlab

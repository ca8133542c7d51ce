// Piecewise-polynomial differential forms on a mesh: the Whitney realization
// of simplicial cochains, symbolic exterior derivatives per piece, pointwise
// comass, the de Rham pairing and Luxemburg norms of forms.
//
// Components are always stored in the orthonormal intrinsic frame of each
// top simplex, so the pointwise comass is the Euclidean component norm for
// every degree in dimension <= 3.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orliczlab/mesh.hpp"
#include "orliczlab/orlicz.hpp"
#include "orliczlab/polynomial.hpp"

namespace orliczlab {

/// Polynomial k-form given per top simplex in intrinsic coordinates.
struct PiecewiseForm {
  const Mesh* mesh = nullptr;
  int degree = 0;
  std::vector<std::vector<Polynomial>> comps;  // [T][component]

  Eigen::VectorXd eval(int T, const Eigen::VectorXd& y_intrinsic) const;
  PiecewiseForm derivative() const;
  int max_poly_degree() const;

  PiecewiseForm& operator+=(const PiecewiseForm& o);
  PiecewiseForm& operator*=(double c);

  static PiecewiseForm zero(const Mesh& mesh, int degree);
  /// Pull back a polynomial k-form given in ambient coordinates.
  static PiecewiseForm from_ambient(const Mesh& mesh, int degree,
                                    const std::vector<Polynomial>& ambient_comps);
};

/// Whitney form: cochain coefficients on the k-simplices.
struct MeshForm {
  const Mesh* mesh = nullptr;
  Cochain coeffs;
  int degree() const { return coeffs.degree; }
};

/// W(theta); throws for degree > mesh dimension.
MeshForm whitney_interpolate(const Mesh& mesh, const Cochain& theta);

/// d on the Whitney side is the coboundary on coefficients.
MeshForm exterior_derivative(const MeshForm& omega);
PiecewiseForm exterior_derivative(const PiecewiseForm& omega);

/// Whitney basis polynomials of all k-faces of top simplex T, in intrinsic
/// coordinates; entry f is the face with local vertex subset
/// covector_basis(dim+1, k+1)[f] of T's tuple.
std::vector<std::vector<Polynomial>> whitney_basis_on_top(const Mesh& mesh, int T, int k);

PiecewiseForm to_piecewise(const MeshForm& omega);

/// Comass |omega|_x: Euclidean norm of the intrinsic components (n <= 3).
double pointwise_norm(const Mesh& mesh, const PiecewiseForm& omega, int T,
                      const Eigen::VectorXd& bary);

/// Integral of a k-form over a canonical k-simplex (quadrature of the
/// pullback); `order` is the polynomial exactness order.
double integrate_form(const Mesh& mesh, const PiecewiseForm& omega, int simplex_index,
                      int order = 6);
double integrate_form(const Mesh& mesh, const MeshForm& omega, int simplex_index, int order = 6);

/// Cochain of all integrals in the form's degree (the de Rham map).
Cochain de_rham_map(const Mesh& mesh, const PiecewiseForm& omega, int order = 6);

/// Pointwise comass sampled at the nodes of a mesh-wide quadrature rule,
/// together with the physical weights: the measure for L^phi norms.
struct SampledComass {
  Eigen::VectorXd values;
  Eigen::VectorXd weights;
};
SampledComass sample_comass(const Mesh& mesh, const PiecewiseForm& omega, int order);

/// Luxemburg norm of |omega|_x over (M, dV) by quadrature + bisection.
double lphi_norm(const YoungFunction& phi, const Mesh& mesh, const PiecewiseForm& omega,
                 int order = 4, double tol = 1e-12);
double lphi_norm(const YoungFunction& phi, const Mesh& mesh, const MeshForm& omega,
                 int order = 4, double tol = 1e-12);

/// Graph norm ||omega||_phi + ||d omega||_phi.
double lphi_graph_norm(const YoungFunction& phi, const Mesh& mesh, const PiecewiseForm& omega,
                       int order = 4, double tol = 1e-12);

}  // namespace orliczlab

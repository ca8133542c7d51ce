// Open-star cover of a mesh: for every simplex Delta the set U_Delta of top
// simplices containing it, developed isometrically into "star coordinates"
// (minimal-wrap lifts on the flat torus, unfolding across shared facets on
// polyhedral surfaces), together with the star center, the certified
// star-shapedness radius and the boundary planes.
//
// Vertex stars of curved surfaces have cone angle != 2*pi at the apex; those
// stars are star-shaped only about the apex itself, so their averaging
// radius is 0 and cones are taken from the center.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orliczlab/mesh.hpp"

namespace orliczlab {

struct StarChart {
  std::vector<int> tops;  // top-simplex indices of U_Delta
  // Rigid placement of each top: intrinsic = M * star + b, star = Minv * (intrinsic - b).
  std::vector<Eigen::MatrixXd> M, Minv;
  std::vector<Eigen::VectorXd> b;
  // Affine barycentric map per top: bary(s) = B * s + c.
  std::vector<Eigen::MatrixXd> B;
  std::vector<Eigen::VectorXd> c;
  Eigen::VectorXd center;  // star coords of Delta's barycenter
  double r = 0.0;          // kernel ball radius / 2; 0 for apex cones
  bool flat = true;
  // Boundary facet planes as (point, inward unit normal).
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> boundary_planes;

  int local_top(int top_index) const;  // position in tops, or -1
  /// Star coords of an intrinsic point of tops[local].
  Eigen::VectorXd to_star(int local, const Eigen::VectorXd& y) const;
  Eigen::VectorXd to_intrinsic(int local, const Eigen::VectorXd& s) const;
  /// Locate the top containing a star point (largest minimal barycentric
  /// coordinate); returns the local index.
  int locate(const Eigen::VectorXd& s) const;
  bool contains(const Eigen::VectorXd& s, double tol = 1e-9) const;
};

struct StarCover {
  const Mesh* mesh = nullptr;
  std::vector<std::vector<StarChart>> stars;  // [m][simplex index]

  const StarChart& star(int m, int idx) const { return stars[m][idx]; }
  static StarCover build(const Mesh& mesh);
};

/// Hat (barycentric) partition of unity: value of eta_v at an intrinsic
/// point of top simplex T; 0 when v is not a vertex of T.
double hat_value(const Mesh& mesh, int vertex_id, int T, const Eigen::VectorXd& y);

/// max over tops of |grad eta_v| (reported; hats are Lipschitz).
double max_hat_gradient(const Mesh& mesh);

/// Segment-sampling star-shapedness check: samples points x in the averaging
/// ball and y in the star and verifies [x,y] stays inside. Returns the worst
/// violation distance (0 when star-shaped).
double star_shape_violation(const StarChart& chart, int samples, unsigned seed);

}  // namespace orliczlab

// Embedded triangulations of dimension <= 3 with Euclidean or flat-torus
// metric. Each top simplex carries an affine chart from the reference
// simplex and an orthonormal tangent frame; flat-torus charts are built on
// minimal-wrap lifts of the vertex coordinates.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "orliczlab/simplicial.hpp"

namespace orliczlab {

enum class MetricKind { Euclidean, FlatTorus };

struct Chart {
  Eigen::VectorXd origin;  // ambient coords of the lifted first vertex
  Eigen::MatrixXd lifted;  // ambient x (n+1) lifted vertex coords
  Eigen::MatrixXd J;       // ambient x n edge matrix
  Eigen::MatrixXd E;       // ambient x n orthonormal tangent frame
  Eigen::MatrixXd R;       // n x n with J = E R
  Eigen::MatrixXd Rinv;
  double volume = 0.0;
  double smin = 0.0, smax = 0.0;  // singular values of J
};

struct MeshGeometryStats {
  GeometryStats combinatorial;
  double max_simplex_diameter = 0.0;
  double bilipschitz_L = 1.0;  // max over charts of smax/smin
  double min_volume = 0.0, max_volume = 0.0;
};

struct Mesh {
  SimplicialComplex complex;
  Eigen::MatrixXd coords;  // V x ambient, rows aligned with complex.vertices
  MetricKind metric = MetricKind::Euclidean;
  Eigen::VectorXd period;  // used by FlatTorus
  std::vector<Chart> charts;  // per top simplex

  int dim() const { return complex.dimension(); }
  int ambient_dim() const { return static_cast<int>(coords.cols()); }
  int vertex_row(int vertex_id) const;

  /// Intrinsic coords (in the chart frame of top simplex T) of T's local
  /// vertex i; vertex 0 sits at the origin.
  Eigen::VectorXd vertex_intrinsic(int T, int local_i) const;
  /// Map barycentric coords on T to intrinsic coords.
  Eigen::VectorXd bary_to_intrinsic(int T, const Eigen::VectorXd& bary) const;
  /// Barycentric coordinates of an intrinsic point.
  Eigen::VectorXd intrinsic_to_bary(int T, const Eigen::VectorXd& y) const;
  /// Ambient position of an intrinsic point of T.
  Eigen::VectorXd intrinsic_to_ambient(int T, const Eigen::VectorXd& y) const;
  double total_volume() const;

  MeshGeometryStats geometry() const;

  /// Validates nondegeneracy (Gram determinant) and builds charts.
  static Mesh build(SimplicialComplex X, Eigen::MatrixXd coords, MetricKind metric,
                    Eigen::VectorXd period = {});
};

// Generators addressable from the CLI.
Mesh circle_mesh(int n);        // regular n-gon on the unit circle in R^2
Mesh interval_mesh(int segments);  // [0,1] subdivided
Mesh torus_mesh(int m);         // unit-square flat torus, m x m grid
Mesh octahedron_mesh();         // boundary of the unit octahedron in R^3
Mesh icosahedron_mesh();        // icosahedral sphere (unit circumradius)
Mesh ball2_mesh(double h);      // unit disk, hex-lattice triangulation
Mesh barycentric_subdivision(const Mesh& mesh);

// Mesh JSON = complex JSON + coordinates/metric/period.
std::string mesh_to_json(const Mesh& mesh);
Mesh mesh_from_json(const std::string& text);

}  // namespace orliczlab

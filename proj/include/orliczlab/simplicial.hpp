// Finite oriented simplicial complexes with the signed coboundary operator,
// l^phi cochain norms, bounded-geometry statistics and the desk-scale
// generators (circle, torus, spheres, interval, barycentric subdivision).
//
// Orientation convention for the whole artifact: simplices are stored on the
// ascending vertex ordering, faces carry the sign (-1)^i, and evaluation on a
// permuted tuple multiplies by the permutation sign.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "orliczlab/orlicz.hpp"
#include "orliczlab/young.hpp"

namespace orliczlab {

using VertexTuple = std::vector<int>;

struct SimplicialComplex {
  std::vector<int> vertices;                          // sorted unique ids
  std::vector<std::vector<VertexTuple>> simplices;    // [k] -> lexicographically sorted ascending tuples
  // faces[k][i] = the k+1 faces of simplices[k][i] as (index into simplices[k-1], sign)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> faces;
  // cofacets[k][i] = indices of (k+1)-simplices having simplices[k][i] as a face
  std::vector<std::vector<std::vector<int>>> cofacets;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  int count(int k) const {
    return (k < 0 || k > dimension()) ? 0 : static_cast<int>(simplices[k].size());
  }
  /// Index of an ascending tuple in X_k, or -1.
  int index_of(const VertexTuple& ascending) const;
  /// Indices of the top simplices whose vertex set contains the given simplex.
  std::vector<int> top_cofaces(int k, int index) const;

  /// Build from per-dimension tuples (any order inside tuples); faces are
  /// completed automatically so the result is closed.
  static SimplicialComplex from_simplices(const std::vector<std::vector<VertexTuple>>& maximal);

  /// Throws std::invalid_argument when closure/duplication invariants fail.
  void validate() const;
};

struct Cochain {
  int degree = 0;
  Eigen::VectorXd values;  // aligned with simplices[degree]
};

/// Faces (v0,...,\hat v_i,...,vk) with signs (-1)^i. Throws for unknown
/// simplices and for k = 0.
std::vector<std::pair<VertexTuple, int>> boundary_faces(const SimplicialComplex& X,
                                                        const VertexTuple& simplex);

/// Cochain value on an arbitrary (possibly permuted) tuple; alternating.
/// Throws when the underlying simplex is absent.
double cochain_value(const SimplicialComplex& X, const Cochain& theta, const VertexTuple& tuple);
/// Same, but 0 for degenerate tuples or tuples absent from the complex.
double cochain_value_or_zero(const SimplicialComplex& X, const Cochain& theta,
                             const VertexTuple& tuple);

/// (delta theta)(sigma) = sum_i (-1)^i theta(partial_i sigma).
Cochain coboundary(const SimplicialComplex& X, const Cochain& theta);

/// Matrix of delta: X_k -> X_{k+1} (rows indexed by X_{k+1}).
Eigen::MatrixXd coboundary_matrix(const SimplicialComplex& X, int k);
Eigen::MatrixXi coboundary_matrix_int(const SimplicialComplex& X, int k);

/// Luxemburg norm of a cochain for the counting measure on X_k.
double cochain_norm(const YoungFunction& phi, const Cochain& theta, double tol = 1e-12);

/// Empirical lower bound for ||delta||: max over random cochains of
/// ||delta theta|| / ||theta||.
double coboundary_norm_estimate(const YoungFunction& phi, const SimplicialComplex& X, int k,
                                int trials, unsigned seed = 0);

struct GeometryStats {
  int max_vertex_degree = 0;     // edges incident to a vertex
  int incidence_bound = 0;       // max simplices (all dims) containing a vertex
  double max_simplex_diameter = 0.0;  // filled by embedded meshes, 0 otherwise
};

GeometryStats geometry_stats(const SimplicialComplex& X);

// Generators.
SimplicialComplex circle_complex(int n);               // n-gon, n >= 3
SimplicialComplex interval_complex(int segments);      // subdivided interval
SimplicialComplex torus_complex(int m);                // m x m grid, m >= 3
SimplicialComplex octahedron_complex();
SimplicialComplex icosahedron_complex();
SimplicialComplex barycentric_subdivision(const SimplicialComplex& X);

// JSON round trip: {"vertices":[...], "simplices":{"0":[[v]],...}}.
std::string complex_to_json(const SimplicialComplex& X);
SimplicialComplex complex_from_json(const std::string& text);

}  // namespace orliczlab

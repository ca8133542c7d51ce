// Dense-by-terms polynomials in up to 3 variables, with exact arithmetic on
// coefficients (add/multiply/differentiate/affine substitution), plus the
// exterior-algebra tables for k-covectors in dimension n <= 3.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <vector>

namespace orliczlab {

struct Polynomial {
  // exponents (for x0,x1,x2) -> coefficient; absent means 0.
  std::map<std::array<int, 3>, double> terms;

  static Polynomial constant(double c);
  static Polynomial variable(int i);  // x_i

  double eval(const Eigen::VectorXd& x) const;
  Polynomial derivative(int i) const;
  int total_degree() const;
  bool is_zero(double tol = 0.0) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double c) { return a *= c; }
  friend Polynomial operator*(double c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Substitute x = A y + b (A: n_old x n_new read from the leading block).
  Polynomial compose_affine(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const;

  void prune(double tol = 0.0);
};

// ---- exterior algebra over R^n, n <= 3 ----------------------------------

/// Lexicographic k-subsets of {0..n-1}; basis order for covector components
/// (n <= 3) and for local vertex subsets of a top simplex (n <= 4).
const std::vector<std::vector<int>>& covector_basis(int n, int k);

inline int covector_dim(int n, int k) {
  if (k < 0 || k > n) return 0;
  static const int binom[5][5] = {{1, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0},
                                  {1, 2, 1, 0, 0},
                                  {1, 3, 3, 1, 0},
                                  {1, 4, 6, 4, 1}};
  return binom[n][k];
}

/// Apply a k-covector with components `comps` (basis order above) to the k
/// vectors given as columns of V (n x k).
double apply_covector(int n, int k, const Eigen::VectorXd& comps, const Eigen::MatrixXd& V);

/// Pullback of component vectors under the linear map A (vectors transform
/// v -> A v, A: n_from x n_to ... comps live on the "from" side, result on
/// the "to" side): out_T = sum_S comps_S det(A[S, T]).
Eigen::VectorXd pullback_components(int n_from, int n_to, int k, const Eigen::VectorXd& comps,
                                    const Eigen::MatrixXd& A);

/// Exterior derivative of a polynomial k-form: comps indexed by
/// covector_basis(n,k); output indexed by covector_basis(n,k+1).
std::vector<Polynomial> exterior_derivative_poly(int n, int k, const std::vector<Polynomial>& comps);

}  // namespace orliczlab

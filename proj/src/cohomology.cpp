#include "orliczlab/cohomology.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "orliczlab/rational.hpp"

namespace orliczlab {

void LinearComplex::validate() const {
  if (maps.size() != dims.size()) throw std::invalid_argument("LinearComplex: maps/dims size mismatch");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const int rows_expect = (k + 1 < dims.size()) ? dims[k + 1] : 0;
    if (maps[k].cols() != dims[k] || maps[k].rows() != rows_expect)
      throw std::invalid_argument("LinearComplex: map shape mismatch at degree " + std::to_string(k));
  }
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    if (maps[k].rows() == 0 || maps[k].cols() == 0 || maps[k + 1].rows() == 0) continue;
    const double comp = (maps[k + 1] * maps[k]).cwiseAbs().maxCoeff();
    if (comp > 1e-10) throw std::invalid_argument("LinearComplex: D.D != 0");
  }
}

LinearComplex LinearComplex::from_simplicial(const SimplicialComplex& X) {
  LinearComplex cx;
  const int n = X.dimension();
  cx.dims.resize(n + 1);
  cx.maps.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    cx.dims[k] = X.count(k);
    cx.maps[k] = coboundary_matrix(X, k);
  }
  return cx;
}

int numeric_rank(const Eigen::MatrixXd& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = 1e-9 * sv[0];
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff && sv[i] > 0.0) ++r;
  return r;
}

int cohomology_dim(const LinearComplex& cx, int k) {
  if (k < 0 || k >= cx.degrees()) throw std::invalid_argument("cohomology_dim: bad degree");
  const int dk = cx.dims[k];
  const int rank_k = numeric_rank(cx.maps[k]);
  const int rank_km1 = (k == 0) ? 0 : numeric_rank(cx.maps[k - 1]);
  return dk - rank_k - rank_km1;
}

Eigen::MatrixXd harmonic_representatives(const LinearComplex& cx, int k) {
  if (k < 0 || k >= cx.degrees()) throw std::invalid_argument("harmonic_representatives: bad degree");
  const int dk = cx.dims[k];
  const int up = (k + 1 < cx.degrees()) ? cx.dims[k + 1] : 0;
  const int down = (k > 0) ? cx.dims[k - 1] : 0;
  Eigen::MatrixXd A(up + down, dk);
  if (up > 0) A.topRows(up) = cx.maps[k];
  if (down > 0) A.bottomRows(down) = cx.maps[k - 1].transpose();
  if (up + down == 0) A = Eigen::MatrixXd::Zero(1, dk);  // whole space is harmonic

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 && sv[0] > 0.0 ? 1e-9 * sv[0] : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff && sv[i] > 0.0) ++r;
  const int null_dim = dk - r;
  Eigen::MatrixXd basis = svd.matrixV().rightCols(null_dim);
  // Fix the sign so the output does not depend on SVD internals: make the
  // largest-magnitude entry of each column positive.
  for (int c = 0; c < basis.cols(); ++c) {
    Eigen::Index imax = 0;
    basis.col(c).cwiseAbs().maxCoeff(&imax);
    if (basis(imax, c) < 0.0) basis.col(c) = -basis.col(c);
  }
  return basis;
}

Eigen::VectorXd harmonic_representative(const LinearComplex& cx, int k, int index) {
  const Eigen::MatrixXd basis = harmonic_representatives(cx, k);
  if (index < 0 || index >= basis.cols())
    throw std::out_of_range("harmonic_representative: index exceeds cohomology dimension");
  return basis.col(index);
}

bool reduced_equals_unreduced(const LinearComplex&, int) {
  // Finite-dimensional subspaces are closed, so Im d = closure(Im d).
  return true;
}

int exact_rank(const Eigen::MatrixXi& A) {
  const int rows = static_cast<int>(A.rows()), cols = static_cast<int>(A.cols());
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M[i][j] = Rational(A(i, j));

  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (!M[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(M[pivot], M[row]);
    const Rational p = M[row][col];
    for (int i = row + 1; i < rows; ++i) {
      if (M[i][col].is_zero()) continue;
      const Rational f = M[i][col] / p;
      for (int j = col; j < cols; ++j) M[i][j] = M[i][j] - f * M[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<int> betti_numbers_exact(const SimplicialComplex& X) {
  const int n = X.dimension();
  std::vector<int> ranks(n + 1, 0);
  for (int k = 0; k <= n; ++k) ranks[k] = exact_rank(coboundary_matrix_int(X, k));
  std::vector<int> betti(n + 1, 0);
  for (int k = 0; k <= n; ++k) betti[k] = X.count(k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return betti;
}

std::vector<int> betti_numbers(const LinearComplex& cx) {
  std::vector<int> betti(cx.degrees(), 0);
  for (int k = 0; k < cx.degrees(); ++k) betti[k] = cohomology_dim(cx, k);
  return betti;
}

}  // namespace orliczlab

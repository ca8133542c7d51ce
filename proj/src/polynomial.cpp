#include "orliczlab/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace orliczlab {

Polynomial Polynomial::constant(double c) {
  Polynomial p;
  if (c != 0.0) p.terms[{0, 0, 0}] = c;
  return p;
}

Polynomial Polynomial::variable(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("Polynomial::variable: index in {0,1,2}");
  Polynomial p;
  std::array<int, 3> e{0, 0, 0};
  e[i] = 1;
  p.terms[e] = 1.0;
  return p;
}

double Polynomial::eval(const Eigen::VectorXd& x) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms) {
    double v = c;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      const double xi = i < x.size() ? x[i] : 0.0;
      double p = xi;
      for (int q = 1; q < e[i]; ++q) p *= xi;
      v *= p;
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial out;
  for (const auto& [e, c] : terms) {
    if (e[i] == 0) continue;
    std::array<int, 3> d = e;
    d[i] -= 1;
    out.terms[d] += c * e[i];
  }
  out.prune();
  return out;
}

int Polynomial::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms)
    if (c != 0.0) deg = std::max(deg, e[0] + e[1] + e[2]);
  return deg;
}

bool Polynomial::is_zero(double tol) const {
  for (const auto& [e, c] : terms)
    if (std::abs(c) > tol) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms) terms[e] += c;
  prune();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms) terms[e] -= c;
  prune();
  return *this;
}

Polynomial& Polynomial::operator*=(double c) {
  if (c == 0.0) {
    terms.clear();
    return *this;
  }
  for (auto& [e, v] : terms) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      const std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.terms[e] += ca * cb;
    }
  }
  out.prune();
  return out;
}

Polynomial Polynomial::compose_affine(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const {
  // Build the affine images of the three variables once.
  std::array<Polynomial, 3> img;
  for (int i = 0; i < 3; ++i) {
    Polynomial p = Polynomial::constant(i < b.size() ? b[i] : 0.0);
    if (i < A.rows()) {
      for (int j = 0; j < A.cols() && j < 3; ++j) {
        if (A(i, j) != 0.0) p += A(i, j) * Polynomial::variable(j);
      }
    }
    img[i] = p;
  }
  Polynomial out;
  for (const auto& [e, c] : terms) {
    Polynomial term = Polynomial::constant(c);
    for (int i = 0; i < 3; ++i)
      for (int q = 0; q < e[i]; ++q) term = term * img[i];
    out += term;
  }
  return out;
}

void Polynomial::prune(double tol) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= tol)
      it = terms.erase(it);
    else
      ++it;
  }
}

namespace {

std::vector<std::vector<int>> make_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n || k < 0) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::vector<int>>& covector_basis(int n, int k) {
  if (n < 0 || n > 4 || k < 0 || k > 4) throw std::invalid_argument("covector_basis: n,k in 0..4");
  // Eagerly built table; safe for concurrent reads.
  static const auto table = [] {
    std::array<std::array<std::vector<std::vector<int>>, 5>, 5> t;
    for (int nn = 0; nn <= 4; ++nn)
      for (int kk = 0; kk <= 4; ++kk) t[nn][kk] = make_subsets(nn, kk);
    return t;
  }();
  return table[n][k];
}

namespace {

double small_det(const Eigen::MatrixXd& M) {
  switch (M.rows()) {
    case 0:
      return 1.0;
    case 1:
      return M(0, 0);
    case 2:
      return M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    case 3:
      return M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
             M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
             M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
    default:
      return M.determinant();
  }
}

}  // namespace

double apply_covector(int n, int k, const Eigen::VectorXd& comps, const Eigen::MatrixXd& V) {
  if (k == 0) return comps.size() > 0 ? comps[0] : 0.0;
  const auto& basis = covector_basis(n, k);
  double acc = 0.0;
  Eigen::MatrixXd sub(k, k);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (comps[static_cast<Eigen::Index>(s)] == 0.0) continue;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = V(basis[s][r], c);
    acc += comps[static_cast<Eigen::Index>(s)] * small_det(sub);
  }
  return acc;
}

Eigen::VectorXd pullback_components(int n_from, int n_to, int k, const Eigen::VectorXd& comps,
                                    const Eigen::MatrixXd& A) {
  const auto& from_basis = covector_basis(n_from, k);
  const auto& to_basis = covector_basis(n_to, k);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(to_basis.size()));
  if (k == 0) {
    if (comps.size() > 0) out[0] = comps[0];
    return out;
  }
  Eigen::MatrixXd sub(k, k);
  for (std::size_t t = 0; t < to_basis.size(); ++t) {
    double acc = 0.0;
    for (std::size_t s = 0; s < from_basis.size(); ++s) {
      if (comps[static_cast<Eigen::Index>(s)] == 0.0) continue;
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub(r, c) = A(from_basis[s][r], to_basis[t][c]);
      acc += comps[static_cast<Eigen::Index>(s)] * small_det(sub);
    }
    out[static_cast<Eigen::Index>(t)] = acc;
  }
  return out;
}

std::vector<Polynomial> exterior_derivative_poly(int n, int k, const std::vector<Polynomial>& comps) {
  const auto& basis_k = covector_basis(n, k);
  const auto& basis_k1 = covector_basis(n, k + 1);
  std::vector<Polynomial> out(basis_k1.size());
  // Index lookup for (k+1)-subsets.
  std::map<std::vector<int>, int> where;
  for (std::size_t t = 0; t < basis_k1.size(); ++t) where[basis_k1[t]] = static_cast<int>(t);
  for (std::size_t s = 0; s < basis_k.size(); ++s) {
    for (int j = 0; j < n; ++j) {
      // dx_j wedge dx_S: skip if j in S; sign = (-1)^{position of j in sorted S+j}.
      const auto& S = basis_k[s];
      bool contains = false;
      int pos = 0;
      for (int v : S) {
        if (v == j) contains = true;
        if (v < j) ++pos;
      }
      if (contains) continue;
      std::vector<int> T = S;
      T.insert(T.begin() + pos, j);
      const int sign = (pos % 2 == 0) ? 1 : -1;
      Polynomial dcomp = comps[s].derivative(j);
      if (dcomp.is_zero()) continue;
      out[where.at(T)] += static_cast<double>(sign) * dcomp;
    }
  }
  return out;
}

}  // namespace orliczlab

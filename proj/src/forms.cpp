#include "orliczlab/forms.hpp"

#include <cmath>
#include <stdexcept>

#include "orliczlab/quadrature.hpp"

namespace orliczlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Gradients of the barycentric functions of top simplex T in intrinsic
// coordinates; column i is grad(lambda_i), i = 0..n.
Eigen::MatrixXd barycentric_gradients(const Mesh& mesh, int T) {
  const int n = mesh.dim();
  Eigen::MatrixXd G(n, n + 1);
  const Eigen::MatrixXd Rinv = mesh.charts[T].Rinv;
  for (int i = 1; i <= n; ++i) G.col(i) = Rinv.row(i - 1).transpose();
  G.col(0) = -G.rightCols(n).rowwise().sum();
  return G;
}

// Wedge of constant 1-forms (rows of U, k x n) as component vector.
Eigen::VectorXd wedge_rows(int n, const Eigen::MatrixXd& U) {
  const int k = static_cast<int>(U.rows());
  if (k == 0) return Eigen::VectorXd::Ones(1);
  const auto& basis = covector_basis(n, k);
  Eigen::VectorXd comps(static_cast<Eigen::Index>(basis.size()));
  Eigen::MatrixXd sub(k, k);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = U(r, basis[s][c]);
    comps[static_cast<Eigen::Index>(s)] = sub.determinant();
  }
  return comps;
}

}  // namespace

Eigen::VectorXd PiecewiseForm::eval(int T, const Eigen::VectorXd& y) const {
  const int n = mesh->dim();
  const auto& cs = comps[T];
  Eigen::VectorXd out(static_cast<Eigen::Index>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) out[static_cast<Eigen::Index>(i)] = cs[i].eval(y);
  (void)n;
  return out;
}

PiecewiseForm PiecewiseForm::derivative() const {
  const int n = mesh->dim();
  if (degree >= n) throw std::invalid_argument("PiecewiseForm::derivative: form has top degree");
  PiecewiseForm out;
  out.mesh = mesh;
  out.degree = degree + 1;
  out.comps.resize(comps.size());
  for (std::size_t T = 0; T < comps.size(); ++T)
    out.comps[T] = exterior_derivative_poly(n, degree, comps[T]);
  return out;
}

int PiecewiseForm::max_poly_degree() const {
  int deg = 0;
  for (const auto& cs : comps)
    for (const auto& p : cs) deg = std::max(deg, p.total_degree());
  return deg;
}

PiecewiseForm& PiecewiseForm::operator+=(const PiecewiseForm& o) {
  for (std::size_t T = 0; T < comps.size(); ++T)
    for (std::size_t i = 0; i < comps[T].size(); ++i) comps[T][i] += o.comps[T][i];
  return *this;
}

PiecewiseForm& PiecewiseForm::operator*=(double c) {
  for (auto& cs : comps)
    for (auto& p : cs) p *= c;
  return *this;
}

PiecewiseForm PiecewiseForm::zero(const Mesh& mesh, int degree) {
  PiecewiseForm f;
  f.mesh = &mesh;
  f.degree = degree;
  f.comps.assign(mesh.complex.count(mesh.dim()),
                 std::vector<Polynomial>(covector_dim(mesh.dim(), degree)));
  return f;
}

PiecewiseForm PiecewiseForm::from_ambient(const Mesh& mesh, int degree,
                                          const std::vector<Polynomial>& ambient_comps) {
  const int n = mesh.dim(), a = mesh.ambient_dim();
  if (static_cast<int>(ambient_comps.size()) != covector_dim(a, degree))
    throw std::invalid_argument("from_ambient: wrong component count");
  PiecewiseForm f = zero(mesh, degree);
  for (int T = 0; T < mesh.complex.count(n); ++T) {
    const Chart& c = mesh.charts[T];
    // x = origin + E y; substitute into each ambient component, then pull the
    // covector back through E.
    std::vector<Polynomial> substituted(ambient_comps.size());
    for (std::size_t i = 0; i < ambient_comps.size(); ++i)
      substituted[i] = ambient_comps[i].compose_affine(c.E, c.origin);
    const auto& from_basis = covector_basis(a, degree);
    const auto& to_basis = covector_basis(n, degree);
    for (std::size_t t = 0; t < to_basis.size(); ++t) {
      Polynomial acc;
      for (std::size_t s = 0; s < from_basis.size(); ++s) {
        Eigen::MatrixXd sub(degree, degree);
        for (int r = 0; r < degree; ++r)
          for (int cidx = 0; cidx < degree; ++cidx)
            sub(r, cidx) = c.E(from_basis[s][r], to_basis[t][cidx]);
        const double d = degree == 0 ? 1.0 : sub.determinant();
        if (d != 0.0) acc += d * substituted[s];
      }
      f.comps[T][t] = acc;
    }
  }
  return f;
}

MeshForm whitney_interpolate(const Mesh& mesh, const Cochain& theta) {
  if (theta.degree > mesh.dim())
    throw std::invalid_argument("whitney_interpolate: degree exceeds mesh dimension");
  if (theta.values.size() != mesh.complex.count(theta.degree))
    throw std::invalid_argument("whitney_interpolate: cochain not aligned with X_k");
  return MeshForm{&mesh, theta};
}

MeshForm exterior_derivative(const MeshForm& omega) {
  if (omega.degree() >= omega.mesh->dim())
    throw std::invalid_argument("exterior_derivative: form already has top degree");
  return MeshForm{omega.mesh, coboundary(omega.mesh->complex, omega.coeffs)};
}

PiecewiseForm exterior_derivative(const PiecewiseForm& omega) { return omega.derivative(); }

std::vector<std::vector<Polynomial>> whitney_basis_on_top(const Mesh& mesh, int T, int k) {
  const int n = mesh.dim();
  const auto& local_sets = covector_basis(n + 1, k + 1);  // (k+1)-subsets of local vertices
  const Eigen::MatrixXd grads = barycentric_gradients(mesh, T);

  // Affine barycentric polynomials lambda_i(y).
  std::vector<Polynomial> lambda(n + 1);
  for (int i = 0; i <= n; ++i) {
    Polynomial p = Polynomial::constant(i == 0 ? 1.0 : 0.0);
    for (int j = 0; j < n; ++j) p += grads(j, i) * Polynomial::variable(j);
    lambda[i] = p;
  }

  const double kfac = factorial(k);
  std::vector<std::vector<Polynomial>> out(local_sets.size());
  const int ncomp = covector_dim(n, k);
  for (std::size_t f = 0; f < local_sets.size(); ++f) {
    const auto& S = local_sets[f];
    std::vector<Polynomial> comps(ncomp);
    for (std::size_t drop = 0; drop < S.size(); ++drop) {
      Eigen::MatrixXd U(k, n);
      int r = 0;
      for (std::size_t j = 0; j < S.size(); ++j) {
        if (j == drop) continue;
        U.row(r++) = grads.col(S[j]).transpose();
      }
      const Eigen::VectorXd wcomps = wedge_rows(n, U);
      const double sign = (drop % 2 == 0) ? 1.0 : -1.0;
      for (int i = 0; i < ncomp; ++i) {
        if (wcomps[i] == 0.0) continue;
        comps[i] += (sign * kfac * wcomps[i]) * lambda[S[drop]];
      }
    }
    out[f] = std::move(comps);
  }
  return out;
}

PiecewiseForm to_piecewise(const MeshForm& omega) {
  const Mesh& mesh = *omega.mesh;
  const int n = mesh.dim(), k = omega.degree();
  PiecewiseForm f = PiecewiseForm::zero(mesh, k);
  for (int T = 0; T < mesh.complex.count(n); ++T) {
    const auto& tuple = mesh.complex.simplices[n][T];
    const auto basis = whitney_basis_on_top(mesh, T, k);
    const auto& local_sets = covector_basis(n + 1, k + 1);
    for (std::size_t fidx = 0; fidx < local_sets.size(); ++fidx) {
      VertexTuple face;
      for (int li : local_sets[fidx]) face.push_back(tuple[li]);
      const int idx = mesh.complex.index_of(face);
      if (idx < 0) throw std::logic_error("to_piecewise: face missing from complex");
      const double coeff = omega.coeffs.values[idx];
      if (coeff == 0.0) continue;
      for (std::size_t i = 0; i < f.comps[T].size(); ++i) f.comps[T][i] += coeff * basis[fidx][i];
    }
  }
  return f;
}

double pointwise_norm(const Mesh& mesh, const PiecewiseForm& omega, int T,
                      const Eigen::VectorXd& bary) {
  return omega.eval(T, mesh.bary_to_intrinsic(T, bary)).norm();
}

double integrate_form(const Mesh& mesh, const PiecewiseForm& omega, int simplex_index, int order) {
  const int k = omega.degree;
  const int n = mesh.dim();
  if (k == 0) {
    // Value at the vertex.
    const int T = mesh.complex.top_cofaces(0, simplex_index).front();
    const auto& tuple = mesh.complex.simplices[n][T];
    const int vid = mesh.complex.simplices[0][simplex_index][0];
    int local = -1;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (tuple[i] == vid) local = static_cast<int>(i);
    return omega.eval(T, mesh.vertex_intrinsic(T, local))[0];
  }
  const int T = mesh.complex.top_cofaces(k, simplex_index).front();
  const auto& top_tuple = mesh.complex.simplices[n][T];
  const auto& sigma = mesh.complex.simplices[k][simplex_index];
  // Intrinsic positions of sigma's vertices inside T.
  Eigen::MatrixXd q(n, k + 1);
  for (int i = 0; i <= k; ++i) {
    int local = -1;
    for (std::size_t j = 0; j < top_tuple.size(); ++j)
      if (top_tuple[j] == sigma[i]) local = static_cast<int>(j);
    if (local < 0) throw std::logic_error("integrate_form: simplex not inside chosen top coface");
    q.col(i) = mesh.vertex_intrinsic(T, local);
  }
  Eigen::MatrixXd V(n, k);
  for (int i = 0; i < k; ++i) V.col(i) = q.col(i + 1) - q.col(0);

  // Reference weights sum to 1/k!, the volume of the standard simplex, which
  // is exactly the Jacobian-free parametrization measure for the pullback.
  const SimplexRule rule = simplex_rule(k, points_for_order(order + omega.max_poly_degree()));
  double acc = 0.0;
  for (int node = 0; node < rule.weights.size(); ++node) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= k; ++i) y += rule.barycentric(node, i) * q.col(i);
    acc += rule.weights[node] * apply_covector(n, k, omega.eval(T, y), V);
  }
  return acc;
}

double integrate_form(const Mesh& mesh, const MeshForm& omega, int simplex_index, int order) {
  return integrate_form(mesh, to_piecewise(omega), simplex_index, order);
}

Cochain de_rham_map(const Mesh& mesh, const PiecewiseForm& omega, int order) {
  Cochain theta;
  theta.degree = omega.degree;
  theta.values.resize(mesh.complex.count(omega.degree));
  for (int i = 0; i < theta.values.size(); ++i)
    theta.values[i] = integrate_form(mesh, omega, i, order);
  return theta;
}

SampledComass sample_comass(const Mesh& mesh, const PiecewiseForm& omega, int order) {
  const int n = mesh.dim();
  const SimplexRule rule = simplex_rule(n, points_for_order(order));
  const int n_top = mesh.complex.count(n);
  const int per = static_cast<int>(rule.weights.size());
  SampledComass s;
  s.values.resize(n_top * per);
  s.weights.resize(n_top * per);
  const double nfac = factorial(n);
  for (int T = 0; T < n_top; ++T) {
    const double scale = nfac * mesh.charts[T].volume;
    for (int q = 0; q < per; ++q) {
      const Eigen::VectorXd bary = rule.barycentric.row(q).transpose();
      s.values[T * per + q] = pointwise_norm(mesh, omega, T, bary);
      s.weights[T * per + q] = rule.weights[q] * scale;
    }
  }
  return s;
}

double lphi_norm(const YoungFunction& phi, const Mesh& mesh, const PiecewiseForm& omega,
                 int order, double tol) {
  const SampledComass s = sample_comass(mesh, omega, std::max(order, omega.max_poly_degree() + 1));
  const DiscreteMeasure mu{s.weights};
  return luxemburg_norm(phi, s.values, mu, tol);
}

double lphi_norm(const YoungFunction& phi, const Mesh& mesh, const MeshForm& omega,
                 int order, double tol) {
  return lphi_norm(phi, mesh, to_piecewise(omega), order, tol);
}

double lphi_graph_norm(const YoungFunction& phi, const Mesh& mesh, const PiecewiseForm& omega,
                       int order, double tol) {
  double norm = lphi_norm(phi, mesh, omega, order, tol);
  if (omega.degree < mesh.dim()) norm += lphi_norm(phi, mesh, omega.derivative(), order, tol);
  return norm;
}

}  // namespace orliczlab

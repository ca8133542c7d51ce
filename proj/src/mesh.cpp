#include "orliczlab/mesh.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace orliczlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

int Mesh::vertex_row(int vertex_id) const {
  const auto it = std::lower_bound(complex.vertices.begin(), complex.vertices.end(), vertex_id);
  if (it == complex.vertices.end() || *it != vertex_id)
    throw std::invalid_argument("Mesh: unknown vertex id");
  return static_cast<int>(it - complex.vertices.begin());
}

Eigen::VectorXd Mesh::vertex_intrinsic(int T, int local_i) const {
  const int n = dim();
  if (local_i == 0) return Eigen::VectorXd::Zero(n);
  return charts[T].R.col(local_i - 1);
}

Eigen::VectorXd Mesh::bary_to_intrinsic(int T, const Eigen::VectorXd& bary) const {
  const int n = dim();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (int i = 1; i <= n; ++i) y += bary[i] * charts[T].R.col(i - 1);
  return y;
}

Eigen::VectorXd Mesh::intrinsic_to_bary(int T, const Eigen::VectorXd& y) const {
  const int n = dim();
  const Eigen::VectorXd xi = charts[T].Rinv * y;
  Eigen::VectorXd bary(n + 1);
  bary[0] = 1.0 - xi.sum();
  bary.tail(n) = xi;
  return bary;
}

Eigen::VectorXd Mesh::intrinsic_to_ambient(int T, const Eigen::VectorXd& y) const {
  return charts[T].origin + charts[T].E * y;
}

double Mesh::total_volume() const {
  double v = 0.0;
  for (const auto& c : charts) v += c.volume;
  return v;
}

MeshGeometryStats Mesh::geometry() const {
  MeshGeometryStats g;
  g.combinatorial = geometry_stats(complex);
  g.min_volume = charts.empty() ? 0.0 : charts[0].volume;
  for (const auto& c : charts) {
    g.bilipschitz_L = std::max(g.bilipschitz_L, c.smax / c.smin);
    g.min_volume = std::min(g.min_volume, c.volume);
    g.max_volume = std::max(g.max_volume, c.volume);
    for (int i = 0; i <= dim(); ++i)
      for (int j = i + 1; j <= dim(); ++j)
        g.max_simplex_diameter =
            std::max(g.max_simplex_diameter, (c.lifted.col(i) - c.lifted.col(j)).norm());
  }
  return g;
}

Mesh Mesh::build(SimplicialComplex X, Eigen::MatrixXd coords, MetricKind metric,
                 Eigen::VectorXd period) {
  Mesh mesh;
  mesh.complex = std::move(X);
  mesh.coords = std::move(coords);
  mesh.metric = metric;
  mesh.period = std::move(period);
  const int n = mesh.dim();
  const int a = mesh.ambient_dim();
  if (n < 1 || n > 3) throw std::invalid_argument("Mesh: dimension must be 1..3");
  if (static_cast<int>(mesh.coords.rows()) != mesh.complex.count(0))
    throw std::invalid_argument("Mesh: coordinate rows must match vertex count");
  if (metric == MetricKind::FlatTorus && mesh.period.size() != a)
    throw std::invalid_argument("Mesh: flat torus requires a period per ambient coordinate");

  const int n_top = mesh.complex.count(n);
  mesh.charts.resize(n_top);
  for (int T = 0; T < n_top; ++T) {
    const auto& tuple = mesh.complex.simplices[n][T];
    Chart c;
    c.lifted.resize(a, n + 1);
    const Eigen::VectorXd base = mesh.coords.row(mesh.vertex_row(tuple[0])).transpose();
    c.lifted.col(0) = base;
    for (int i = 1; i <= n; ++i) {
      Eigen::VectorXd p = mesh.coords.row(mesh.vertex_row(tuple[i])).transpose();
      if (metric == MetricKind::FlatTorus) {
        for (int d = 0; d < a; ++d) {
          const double per = mesh.period[d];
          double delta = p[d] - base[d];
          delta -= per * std::round(delta / per);
          p[d] = base[d] + delta;
        }
      }
      c.lifted.col(i) = p;
    }
    c.origin = c.lifted.col(0);
    c.J.resize(a, n);
    for (int i = 0; i < n; ++i) c.J.col(i) = c.lifted.col(i + 1) - c.origin;

    const Eigen::MatrixXd gram = c.J.transpose() * c.J;
    const double det = gram.determinant();
    if (!(det > 1e-12))
      throw std::invalid_argument("Mesh: degenerate top simplex (Gram determinant <= 1e-12)");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(c.J);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(a, n);
    Eigen::MatrixXd Rfull = Q.transpose() * c.J;
    // Make diag(R) positive so the frame orientation is deterministic.
    for (int i = 0; i < n; ++i) {
      if (Rfull(i, i) < 0.0) {
        Q.col(i) = -Q.col(i);
        Rfull.row(i) = -Rfull.row(i);
      }
    }
    c.E = Q;
    c.R = Rfull;
    c.Rinv = Rfull.inverse();
    c.volume = std::sqrt(det) / factorial(n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c.J);
    c.smax = svd.singularValues()[0];
    c.smin = svd.singularValues()[n - 1];
    mesh.charts[T] = std::move(c);
  }
  return mesh;
}

Mesh circle_mesh(int n) {
  SimplicialComplex X = circle_complex(n);
  Eigen::MatrixXd coords(n, 2);
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * i / n;
    coords(i, 0) = std::cos(th);
    coords(i, 1) = std::sin(th);
  }
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

Mesh interval_mesh(int segments) {
  SimplicialComplex X = interval_complex(segments);
  Eigen::MatrixXd coords(segments + 1, 1);
  for (int i = 0; i <= segments; ++i) coords(i, 0) = static_cast<double>(i) / segments;
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

Mesh torus_mesh(int m) {
  SimplicialComplex X = torus_complex(m);
  Eigen::MatrixXd coords(m * m, 2);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      coords(i * m + j, 0) = static_cast<double>(i) / m;
      coords(i * m + j, 1) = static_cast<double>(j) / m;
    }
  }
  Eigen::VectorXd period(2);
  period << 1.0, 1.0;
  return Mesh::build(std::move(X), std::move(coords), MetricKind::FlatTorus, std::move(period));
}

Mesh octahedron_mesh() {
  SimplicialComplex X = octahedron_complex();
  Eigen::MatrixXd coords(6, 3);
  coords << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

Mesh icosahedron_mesh() {
  SimplicialComplex X = icosahedron_complex();
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Eigen::MatrixXd coords(12, 3);
  coords << -1, phi, 0, 1, phi, 0, -1, -phi, 0, 1, -phi, 0,
            0, -1, phi, 0, 1, phi, 0, -1, -phi, 0, 1, -phi,
            phi, 0, -1, phi, 0, 1, -phi, 0, -1, -phi, 0, 1;
  coords /= std::sqrt(1.0 + phi * phi);  // unit circumradius
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

Mesh ball2_mesh(double h) {
  if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("ball2_mesh: 0 < h <= 1");
  const int m = std::max(1, static_cast<int>(std::lround(1.0 / h)));
  // Hexagonal lattice of side m mapped radially onto the unit disk.
  std::map<std::pair<int, int>, int> id_of;
  std::vector<std::pair<int, int>> axial;
  auto hexdist = [](int q, int r) { return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2; };
  for (int q = -m; q <= m; ++q) {
    for (int r = -m; r <= m; ++r) {
      if (hexdist(q, r) <= m) {
        id_of[{q, r}] = static_cast<int>(axial.size());
        axial.emplace_back(q, r);
      }
    }
  }
  std::vector<VertexTuple> tris;
  auto has = [&](int q, int r) { return id_of.count({q, r}) > 0; };
  for (int q = -m - 1; q <= m; ++q) {
    for (int r = -m - 1; r <= m; ++r) {
      if (has(q, r) && has(q + 1, r) && has(q, r + 1))
        tris.push_back({id_of[{q, r}], id_of[{q + 1, r}], id_of[{q, r + 1}]});
      if (has(q + 1, r) && has(q, r + 1) && has(q + 1, r + 1))
        tris.push_back({id_of[{q + 1, r}], id_of[{q, r + 1}], id_of[{q + 1, r + 1}]});
    }
  }
  SimplicialComplex X = SimplicialComplex::from_simplices({{}, {}, tris});
  Eigen::MatrixXd coords(static_cast<int>(axial.size()), 2);
  for (std::size_t i = 0; i < axial.size(); ++i) {
    const auto [q, r] = axial[i];
    const double x = q + 0.5 * r;
    const double y = r * std::sqrt(3.0) / 2.0;
    const double hd = 0.5 * (std::abs(static_cast<double>(q)) + std::abs(static_cast<double>(r)) +
                             std::abs(static_cast<double>(q + r)));
    const double eu = std::hypot(x, y);
    if (eu == 0.0) {
      coords(i, 0) = coords(i, 1) = 0.0;
    } else {
      const double scale = (hd / m) / eu;
      coords(i, 0) = x * scale;
      coords(i, 1) = y * scale;
    }
  }
  return Mesh::build(std::move(X), std::move(coords), MetricKind::Euclidean);
}

Mesh barycentric_subdivision(const Mesh& mesh) {
  const SimplicialComplex& X = mesh.complex;
  SimplicialComplex sub = barycentric_subdivision(X);
  // New vertex (k,i) sits at the barycenter of simplex i of dimension k,
  // with flat-torus coordinates taken from a minimal-wrap lift.
  const int n = X.dimension();
  std::vector<int> offset(n + 1, 0);
  for (int k = 1; k <= n; ++k) offset[k] = offset[k - 1] + X.count(k - 1);
  Eigen::MatrixXd coords(sub.count(0), mesh.ambient_dim());
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i < X.count(k); ++i) {
      const auto& tuple = X.simplices[k][i];
      Eigen::VectorXd base = mesh.coords.row(mesh.vertex_row(tuple[0])).transpose();
      Eigen::VectorXd acc = base;
      for (std::size_t j = 1; j < tuple.size(); ++j) {
        Eigen::VectorXd p = mesh.coords.row(mesh.vertex_row(tuple[j])).transpose();
        if (mesh.metric == MetricKind::FlatTorus) {
          for (int d = 0; d < mesh.ambient_dim(); ++d) {
            const double per = mesh.period[d];
            double delta = p[d] - base[d];
            delta -= per * std::round(delta / per);
            p[d] = base[d] + delta;
          }
        }
        acc += p;
      }
      coords.row(offset[k] + i) = (acc / static_cast<double>(tuple.size())).transpose();
    }
  }
  return Mesh::build(std::move(sub), std::move(coords), mesh.metric, mesh.period);
}

std::string mesh_to_json(const Mesh& mesh) {
  nlohmann::json j = nlohmann::json::parse(complex_to_json(mesh.complex));
  std::vector<std::vector<double>> coords;
  for (int i = 0; i < mesh.coords.rows(); ++i) {
    std::vector<double> row(mesh.coords.cols());
    for (int d = 0; d < mesh.coords.cols(); ++d) row[d] = mesh.coords(i, d);
    coords.push_back(std::move(row));
  }
  j["coordinates"] = coords;
  j["metric"] = mesh.metric == MetricKind::FlatTorus ? "torus" : "euclidean";
  if (mesh.metric == MetricKind::FlatTorus) {
    std::vector<double> per(mesh.period.size());
    for (int d = 0; d < mesh.period.size(); ++d) per[d] = mesh.period[d];
    j["period"] = per;
  }
  return j.dump();
}

Mesh mesh_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SimplicialComplex X = complex_from_json(text);
  const auto coords_in = j.at("coordinates").get<std::vector<std::vector<double>>>();
  if (coords_in.empty()) throw std::invalid_argument("mesh_from_json: empty coordinates");
  Eigen::MatrixXd coords(coords_in.size(), coords_in[0].size());
  for (std::size_t i = 0; i < coords_in.size(); ++i)
    for (std::size_t d = 0; d < coords_in[i].size(); ++d) coords(i, d) = coords_in[i][d];
  MetricKind metric = MetricKind::Euclidean;
  Eigen::VectorXd period;
  if (j.contains("metric") && j.at("metric").get<std::string>() == "torus") {
    metric = MetricKind::FlatTorus;
    const auto per = j.at("period").get<std::vector<double>>();
    period.resize(per.size());
    for (std::size_t d = 0; d < per.size(); ++d) period[d] = per[d];
  }
  return Mesh::build(std::move(X), std::move(coords), metric, std::move(period));
}

}  // namespace orliczlab

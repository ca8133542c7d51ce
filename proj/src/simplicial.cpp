#include "orliczlab/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace orliczlab {

namespace {

// Sort a tuple ascending; returns the permutation sign, or 0 for repeats.
int canonicalize(VertexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return sign;
}

bool is_ascending(const VertexTuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i - 1] < t[i])) return false;
  return true;
}

}  // namespace

int SimplicialComplex::index_of(const VertexTuple& ascending) const {
  const int k = static_cast<int>(ascending.size()) - 1;
  if (k < 0 || k > dimension()) return -1;
  const auto& list = simplices[k];
  const auto it = std::lower_bound(list.begin(), list.end(), ascending);
  if (it == list.end() || *it != ascending) return -1;
  return static_cast<int>(it - list.begin());
}

std::vector<int> SimplicialComplex::top_cofaces(int k, int index) const {
  const int n = dimension();
  std::vector<int> frontier{index};
  for (int d = k; d < n; ++d) {
    std::set<int> next;
    for (int idx : frontier)
      for (int c : cofacets[d][idx]) next.insert(c);
    frontier.assign(next.begin(), next.end());
  }
  return frontier;
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<std::vector<VertexTuple>>& given) {
  // Collect everything, close under faces, deduplicate.
  std::vector<std::set<VertexTuple>> per_dim;
  auto insert_with_faces = [&](const VertexTuple& canon) {
    std::vector<VertexTuple> stack{canon};
    while (!stack.empty()) {
      VertexTuple cur = stack.back();
      stack.pop_back();
      const int k = static_cast<int>(cur.size()) - 1;
      if (static_cast<int>(per_dim.size()) <= k) per_dim.resize(k + 1);
      if (!per_dim[k].insert(cur).second) continue;
      if (k >= 1) {
        for (std::size_t i = 0; i < cur.size(); ++i) {
          VertexTuple face;
          face.reserve(cur.size() - 1);
          for (std::size_t j = 0; j < cur.size(); ++j)
            if (j != i) face.push_back(cur[j]);
          stack.push_back(face);
        }
      }
    }
  };
  for (const auto& dim_list : given) {
    for (VertexTuple t : dim_list) {
      const int sign = canonicalize(t);
      if (sign == 0) throw std::invalid_argument("from_simplices: degenerate simplex (repeated vertex)");
      insert_with_faces(t);
    }
  }

  SimplicialComplex X;
  X.simplices.resize(per_dim.size());
  std::set<int> verts;
  for (std::size_t k = 0; k < per_dim.size(); ++k) {
    X.simplices[k].assign(per_dim[k].begin(), per_dim[k].end());
    for (const auto& t : X.simplices[k])
      for (int v : t) verts.insert(v);
  }
  X.vertices.assign(verts.begin(), verts.end());

  // Face and cofacet index tables.
  const int n = X.dimension();
  X.faces.resize(n + 1);
  X.cofacets.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    X.faces[k].resize(X.simplices[k].size());
    X.cofacets[k].resize(X.simplices[k].size());
  }
  for (int k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < X.simplices[k].size(); ++i) {
      const auto& t = X.simplices[k][i];
      auto& row = X.faces[k][i];
      for (std::size_t drop = 0; drop < t.size(); ++drop) {
        VertexTuple face;
        face.reserve(t.size() - 1);
        for (std::size_t j = 0; j < t.size(); ++j)
          if (j != drop) face.push_back(t[j]);
        const int fi = X.index_of(face);
        if (fi < 0) throw std::logic_error("from_simplices: face closure failed");
        row.emplace_back(fi, (drop % 2 == 0) ? 1 : -1);
        X.cofacets[k - 1][fi].push_back(static_cast<int>(i));
      }
    }
  }
  return X;
}

void SimplicialComplex::validate() const {
  for (int k = 0; k <= dimension(); ++k) {
    const auto& list = simplices[k];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (static_cast<int>(list[i].size()) != k + 1)
        throw std::invalid_argument("validate: tuple length does not match dimension");
      if (!is_ascending(list[i])) throw std::invalid_argument("validate: tuple not ascending");
      if (i > 0 && !(list[i - 1] < list[i]))
        throw std::invalid_argument("validate: duplicate or unsorted simplices");
    }
  }
  for (int k = 1; k <= dimension(); ++k) {
    for (const auto& t : simplices[k]) {
      for (std::size_t drop = 0; drop < t.size(); ++drop) {
        VertexTuple face;
        for (std::size_t j = 0; j < t.size(); ++j)
          if (j != drop) face.push_back(t[j]);
        if (index_of(face) < 0) throw std::invalid_argument("validate: complex not closed under faces");
      }
    }
  }
}

std::vector<std::pair<VertexTuple, int>> boundary_faces(const SimplicialComplex& X,
                                                        const VertexTuple& simplex) {
  if (simplex.size() < 2) throw std::invalid_argument("boundary_faces: 0-simplices have no boundary");
  if (!is_ascending(simplex)) throw std::invalid_argument("boundary_faces: tuple must be ascending");
  const int idx = X.index_of(simplex);
  if (idx < 0) throw std::invalid_argument("boundary_faces: simplex not in complex");
  std::vector<std::pair<VertexTuple, int>> out;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    VertexTuple face;
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != i) face.push_back(simplex[j]);
    out.emplace_back(std::move(face), (i % 2 == 0) ? 1 : -1);
  }
  return out;
}

double cochain_value(const SimplicialComplex& X, const Cochain& theta, const VertexTuple& tuple) {
  VertexTuple t = tuple;
  const int sign = canonicalize(t);
  if (sign == 0) return 0.0;
  const int idx = X.index_of(t);
  if (idx < 0) throw std::invalid_argument("cochain_value: simplex not in complex");
  return sign * theta.values[idx];
}

double cochain_value_or_zero(const SimplicialComplex& X, const Cochain& theta,
                             const VertexTuple& tuple) {
  VertexTuple t = tuple;
  const int sign = canonicalize(t);
  if (sign == 0) return 0.0;
  const int idx = X.index_of(t);
  if (idx < 0) return 0.0;
  return sign * theta.values[idx];
}

Cochain coboundary(const SimplicialComplex& X, const Cochain& theta) {
  const int k = theta.degree;
  Cochain out;
  out.degree = k + 1;
  out.values = Eigen::VectorXd::Zero(X.count(k + 1));
  if (k + 1 > X.dimension()) return out;
  for (int s = 0; s < X.count(k + 1); ++s) {
    double acc = 0.0;
    for (const auto& [fi, sign] : X.faces[k + 1][s]) acc += sign * theta.values[fi];
    out.values[s] = acc;
  }
  return out;
}

Eigen::MatrixXd coboundary_matrix(const SimplicialComplex& X, int k) {
  return coboundary_matrix_int(X, k).cast<double>();
}

Eigen::MatrixXi coboundary_matrix_int(const SimplicialComplex& X, int k) {
  const int rows = X.count(k + 1), cols = X.count(k);
  Eigen::MatrixXi D = Eigen::MatrixXi::Zero(rows, cols);
  if (rows == 0 || cols == 0) return D;
  for (int s = 0; s < rows; ++s)
    for (const auto& [fi, sign] : X.faces[k + 1][s]) D(s, fi) += sign;
  return D;
}

double cochain_norm(const YoungFunction& phi, const Cochain& theta, double tol) {
  const DiscreteMeasure mu = DiscreteMeasure::counting(theta.values.size());
  return luxemburg_norm(phi, theta.values, mu, tol);
}

double coboundary_norm_estimate(const YoungFunction& phi, const SimplicialComplex& X, int k,
                                int trials, unsigned seed) {
  if (trials < 1) throw std::invalid_argument("coboundary_norm_estimate: trials >= 1");
  if (X.count(k + 1) == 0 || X.count(k) == 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    Cochain theta;
    theta.degree = k;
    theta.values = Eigen::VectorXd::NullaryExpr(X.count(k), [&](Eigen::Index) { return gauss(rng); });
    const double denom = cochain_norm(phi, theta);
    if (denom == 0.0) continue;
    const double num = cochain_norm(phi, coboundary(X, theta));
    best = std::max(best, num / denom);
  }
  return best;
}

GeometryStats geometry_stats(const SimplicialComplex& X) {
  GeometryStats gs;
  std::map<int, int> edge_degree, incidence;
  for (int k = 0; k <= X.dimension(); ++k) {
    for (const auto& t : X.simplices[k]) {
      for (int v : t) incidence[v] += 1;
      if (k == 1) {
        edge_degree[t[0]] += 1;
        edge_degree[t[1]] += 1;
      }
    }
  }
  for (const auto& [v, d] : edge_degree) gs.max_vertex_degree = std::max(gs.max_vertex_degree, d);
  for (const auto& [v, c] : incidence) gs.incidence_bound = std::max(gs.incidence_bound, c);
  return gs;
}

SimplicialComplex circle_complex(int n) {
  if (n < 3) throw std::invalid_argument("circle_complex: n >= 3");
  std::vector<VertexTuple> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_simplices({{}, edges});
}

SimplicialComplex interval_complex(int segments) {
  if (segments < 1) throw std::invalid_argument("interval_complex: segments >= 1");
  std::vector<VertexTuple> edges;
  for (int i = 0; i < segments; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex::from_simplices({{}, edges});
}

SimplicialComplex torus_complex(int m) {
  if (m < 3) throw std::invalid_argument("torus_complex: m >= 3 (smaller grids collapse simplices)");
  auto vid = [m](int i, int j) { return ((i % m + m) % m) * m + ((j % m + m) % m); };
  std::vector<VertexTuple> tris;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      tris.push_back({vid(i, j), vid(i + 1, j), vid(i, j + 1)});
      tris.push_back({vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  return SimplicialComplex::from_simplices({{}, {}, tris});
}

SimplicialComplex octahedron_complex() {
  // Vertices 0..5 = +x,-x,+y,-y,+z,-z.
  std::vector<VertexTuple> tris = {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                                   {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}};
  return SimplicialComplex::from_simplices({{}, {}, tris});
}

SimplicialComplex icosahedron_complex() {
  // Face table matching the golden-ratio coordinates used by the mesh builder.
  std::vector<VertexTuple> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  return SimplicialComplex::from_simplices({{}, {}, tris});
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& X) {
  // New vertex id for simplex (k, i): offset[k] + i. New k-simplices are the
  // chains sigma_0 < sigma_1 < ... < sigma_k under strict face inclusion.
  const int n = X.dimension();
  std::vector<int> offset(n + 1, 0);
  for (int k = 1; k <= n; ++k) offset[k] = offset[k - 1] + X.count(k - 1);

  std::vector<VertexTuple> top_chains;
  std::vector<std::pair<int, int>> chain;  // (dim, index)
  std::function<void(int, int)> extend = [&](int k, int idx) {
    chain.emplace_back(k, idx);
    bool extended = false;
    for (int c : X.cofacets[k][idx]) {
      extended = true;
      extend(k + 1, c);
    }
    if (!extended) {
      VertexTuple t;
      for (auto [d, i] : chain) t.push_back(offset[d] + i);
      top_chains.push_back(t);
    }
    chain.pop_back();
  };
  // Chains may start at any simplex, but maximal chains starting at vertices
  // cover all of them after face closure.
  for (int i = 0; i < X.count(0); ++i) extend(0, i);
  std::vector<std::vector<VertexTuple>> by_dim(n + 1);
  for (auto& t : top_chains) by_dim[t.size() - 1].push_back(t);
  return SimplicialComplex::from_simplices(by_dim);
}

std::string complex_to_json(const SimplicialComplex& X) {
  nlohmann::json j;
  j["vertices"] = X.vertices;
  nlohmann::json dims = nlohmann::json::object();
  for (int k = 0; k <= X.dimension(); ++k) dims[std::to_string(k)] = X.simplices[k];
  j["simplices"] = dims;
  return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::vector<VertexTuple>> dims;
  if (!j.contains("simplices")) throw std::invalid_argument("complex_from_json: missing 'simplices'");
  for (const auto& [key, val] : j.at("simplices").items()) {
    const int k = std::stoi(key);
    if (static_cast<int>(dims.size()) <= k) dims.resize(k + 1);
    dims[k] = val.get<std::vector<VertexTuple>>();
  }
  SimplicialComplex X = SimplicialComplex::from_simplices(dims);
  // Reject inputs that were not closed as given (from_simplices closes them).
  for (int k = 0; k <= X.dimension(); ++k) {
    std::set<VertexTuple> given;
    if (k < static_cast<int>(dims.size()))
      for (VertexTuple t : dims[k]) {
        std::sort(t.begin(), t.end());
        given.insert(t);
      }
    for (const auto& t : X.simplices[k]) {
      if (!given.count(t))
        throw std::invalid_argument("complex_from_json: complex not closed under faces (missing " +
                                    nlohmann::json(t).dump() + ")");
    }
  }
  return X;
}

}  // namespace orliczlab

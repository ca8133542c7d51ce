#include "orliczlab/star_cover.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace orliczlab {

int StarChart::local_top(int top_index) const {
  for (std::size_t i = 0; i < tops.size(); ++i)
    if (tops[i] == top_index) return static_cast<int>(i);
  return -1;
}

Eigen::VectorXd StarChart::to_star(int local, const Eigen::VectorXd& y) const {
  return Minv[local] * (y - b[local]);
}

Eigen::VectorXd StarChart::to_intrinsic(int local, const Eigen::VectorXd& s) const {
  return M[local] * s + b[local];
}

int StarChart::locate(const Eigen::VectorXd& s) const {
  int best = 0;
  double best_min = -1e300;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const Eigen::VectorXd bary = B[i] * s + c[i];
    const double mn = bary.minCoeff();
    if (mn > best_min) {
      best_min = mn;
      best = static_cast<int>(i);
    }
  }
  return best;
}

bool StarChart::contains(const Eigen::VectorXd& s, double tol) const {
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const Eigen::VectorXd bary = B[i] * s + c[i];
    if (bary.minCoeff() >= -tol) return true;
  }
  return false;
}

namespace {

// Rigid motion (rotation part R0, possibly with reflection) sending segment
// (q1,q2) onto (p1,p2) in the plane; `reflect` selects the mirror image.
Eigen::Matrix2d rotation_2d(const Eigen::Vector2d& from, const Eigen::Vector2d& to, bool reflect) {
  const double af = std::atan2(from.y(), from.x());
  const double at = std::atan2(to.y(), to.x());
  Eigen::Matrix2d R;
  const double th = at - af;
  R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  if (reflect) {
    // Reflect across `from` first, then rotate.
    Eigen::Matrix2d F;
    const double a = 2.0 * af;
    F << std::cos(a), std::sin(a), std::sin(a), -std::cos(a);
    R = R * F;
  }
  return R;
}

}  // namespace

StarCover StarCover::build(const Mesh& mesh) {
  StarCover cover;
  cover.mesh = &mesh;
  const SimplicialComplex& X = mesh.complex;
  const int n = mesh.dim();
  const int a = mesh.ambient_dim();
  cover.stars.resize(n + 1);

  for (int m = 0; m <= n; ++m) {
    cover.stars[m].resize(X.count(m));
    for (int idx = 0; idx < X.count(m); ++idx) {
      StarChart chart;
      chart.tops = X.top_cofaces(m, idx);
      const int nt = static_cast<int>(chart.tops.size());
      chart.M.resize(nt);
      chart.Minv.resize(nt);
      chart.b.resize(nt);
      chart.B.resize(nt);
      chart.c.resize(nt);

      // Place tops in star coordinates. placed[i] = n x (n+1) vertex coords.
      std::vector<Eigen::MatrixXd> placed(nt);
      std::vector<bool> done(nt, false);

      auto intrinsic_vertices = [&](int local) {
        const int T = chart.tops[local];
        Eigen::MatrixXd V(n, n + 1);
        for (int i = 0; i <= n; ++i) V.col(i) = mesh.vertex_intrinsic(T, i);
        return V;
      };

      // Seed: star coords of the first top are its intrinsic coords.
      placed[0] = intrinsic_vertices(0);
      done[0] = true;

      if (nt > 1) {
        // Adjacency through shared facets; BFS placement.
        std::queue<int> queue;
        queue.push(0);
        while (!queue.empty()) {
          const int cur = queue.front();
          queue.pop();
          const int Tcur = chart.tops[cur];
          const auto& cur_tuple = X.simplices[n][Tcur];
          for (int other = 0; other < nt; ++other) {
            if (done[other]) continue;
            const int Toth = chart.tops[other];
            const auto& oth_tuple = X.simplices[n][Toth];
            // Shared vertices.
            std::vector<int> shared;
            for (int v : cur_tuple)
              for (int w : oth_tuple)
                if (v == w) shared.push_back(v);
            if (static_cast<int>(shared.size()) != n) continue;  // need a shared facet

            const Eigen::MatrixXd oth_intr = intrinsic_vertices(other);
            auto local_of = [&](const std::vector<int>& tuple, int v) {
              for (std::size_t i = 0; i < tuple.size(); ++i)
                if (tuple[i] == v) return static_cast<int>(i);
              return -1;
            };

            Eigen::MatrixXd target(n, n + 1);
            if (n == 1) {
              // Develop onto the line: the new edge extends away from the
              // side already covered by the current edge.
              const int v = shared[0];
              const double p1 = placed[cur](0, local_of(cur_tuple, v));
              const double q1 = oth_intr(0, local_of(oth_tuple, v));
              const double side_cur =
                  placed[cur](0, 1 - local_of(cur_tuple, v)) - p1;
              bool placed_ok = false;
              for (double sign : {1.0, -1.0}) {
                Eigen::MatrixXd cand(1, 2);
                for (int i = 0; i <= n; ++i) cand(0, i) = p1 + sign * (oth_intr(0, i) - q1);
                const double side_new = cand(0, 1 - local_of(oth_tuple, v)) - p1;
                if (side_cur * side_new < 0.0) {
                  target = cand;
                  placed_ok = true;
                  break;
                }
              }
              if (!placed_ok) continue;
            } else if (n == 2) {
              // Unfold across the shared edge: the rigid motion matching the
              // two shared vertices whose image of the third vertex lands on
              // the far side. Covers flat stars and polyhedral surfaces alike.
              const Eigen::Vector2d p1 = placed[cur].col(local_of(cur_tuple, shared[0]));
              const Eigen::Vector2d p2 = placed[cur].col(local_of(cur_tuple, shared[1]));
              const Eigen::Vector2d q1 = oth_intr.col(local_of(oth_tuple, shared[0]));
              const Eigen::Vector2d q2 = oth_intr.col(local_of(oth_tuple, shared[1]));
              int third_cur = -1, third_oth = -1;
              for (int i = 0; i <= n; ++i) {
                if (cur_tuple[i] != shared[0] && cur_tuple[i] != shared[1]) third_cur = i;
                if (oth_tuple[i] != shared[0] && oth_tuple[i] != shared[1]) third_oth = i;
              }
              bool placed_ok = false;
              for (bool reflect : {false, true}) {
                const Eigen::Matrix2d R0 = rotation_2d(q2 - q1, p2 - p1, reflect);
                Eigen::MatrixXd cand(n, n + 1);
                for (int i = 0; i <= n; ++i) cand.col(i) = p1 + R0 * (oth_intr.col(i) - q1);
                const Eigen::Vector2d edge = p2 - p1;
                Eigen::Vector2d nrm(-edge.y(), edge.x());
                const double side_cur = nrm.dot(placed[cur].col(third_cur) - p1);
                const double side_new = nrm.dot(cand.col(third_oth) - p1);
                if (side_cur * side_new < 0.0) {
                  target = cand;
                  placed_ok = true;
                  break;
                }
              }
              if (!placed_ok) continue;
            } else {
              // No 3D generator produces multi-top stars that need unfolding;
              // flat 3D placements would require a 3-point rigid match.
              throw std::logic_error("StarCover: 3D star placement not supported");
            }
            placed[other] = target;
            done[other] = true;
            queue.push(other);
          }
        }
        for (int i = 0; i < nt; ++i)
          if (!done[i]) throw std::logic_error("StarCover: star is not facet-connected");
      }

      // Rigid map star -> intrinsic per top from vertex correspondences.
      for (int i = 0; i < nt; ++i) {
        const Eigen::MatrixXd intr = intrinsic_vertices(i);
        Eigen::MatrixXd Es(n, n), Ei(n, n);
        for (int j = 0; j < n; ++j) {
          Es.col(j) = placed[i].col(j + 1) - placed[i].col(0);
          Ei.col(j) = intr.col(j + 1) - intr.col(0);
        }
        const Eigen::MatrixXd Mi = Ei * Es.inverse();
        chart.M[i] = Mi;
        chart.Minv[i] = Mi.inverse();
        chart.b[i] = intr.col(0) - Mi * placed[i].col(0);
        // bary(s) affine: bary = Bi * s + ci with rows 1..n from Rinv of the
        // chart and row 0 the complement.
        const int T = chart.tops[i];
        const Eigen::MatrixXd Rinv = mesh.charts[T].Rinv;
        Eigen::MatrixXd Bi(n + 1, n);
        Eigen::VectorXd ci(n + 1);
        const Eigen::MatrixXd lin = Rinv * Mi;           // xi = Rinv * (M s + b)
        const Eigen::VectorXd off = Rinv * chart.b[i];
        Bi.bottomRows(n) = lin;
        ci.tail(n) = off;
        Bi.row(0) = -lin.colwise().sum();
        ci[0] = 1.0 - off.sum();
        chart.B[i] = Bi;
        chart.c[i] = ci;
      }

      // Star center: barycenter of Delta in star coords (use the first top).
      {
        const auto& delta_tuple = X.simplices[m][idx];
        const int T0 = chart.tops[0];
        const auto& top_tuple = X.simplices[n][T0];
        Eigen::VectorXd center = Eigen::VectorXd::Zero(n);
        for (int v : delta_tuple) {
          int local = -1;
          for (std::size_t i = 0; i < top_tuple.size(); ++i)
            if (top_tuple[i] == v) local = static_cast<int>(i);
          center += placed[0].col(local);
        }
        chart.center = center / static_cast<double>(delta_tuple.size());
      }

      // Flatness: curved-surface vertex stars need angle sum 2*pi at the apex.
      chart.flat = true;
      if (a != n && n == 2 && m == 0) {
        double angle = 0.0;
        for (int i = 0; i < nt; ++i) {
          const int T = chart.tops[i];
          const auto& tuple = X.simplices[n][T];
          const int vid = X.simplices[0][idx][0];
          int local = -1;
          for (std::size_t q = 0; q < tuple.size(); ++q)
            if (tuple[q] == vid) local = static_cast<int>(q);
          const Eigen::VectorXd apex = placed[i].col(local);
          std::vector<Eigen::VectorXd> others;
          for (int q = 0; q <= n; ++q)
            if (q != local) others.push_back(placed[i].col(q));
          const Eigen::VectorXd u = others[0] - apex, w = others[1] - apex;
          angle += std::acos(std::clamp(u.dot(w) / (u.norm() * w.norm()), -1.0, 1.0));
        }
        if (std::abs(angle - 2.0 * M_PI) > 1e-9) chart.flat = false;
      }

      // Boundary planes: facets of star tops not shared with another star top.
      for (int i = 0; i < nt; ++i) {
        const int T = chart.tops[i];
        const auto& tuple = X.simplices[n][T];
        for (int drop = 0; drop <= n; ++drop) {
          VertexTuple facet;
          for (int q = 0; q <= n; ++q)
            if (q != drop) facet.push_back(tuple[q]);
          const int fidx = X.index_of(facet);
          int shared_with = 0;
          for (int Tc : X.top_cofaces(n - 1, fidx))
            if (chart.local_top(Tc) >= 0) ++shared_with;
          if (shared_with >= 2) continue;  // internal facet
          // Plane through the facet with inward normal (toward dropped vertex).
          std::vector<Eigen::VectorXd> pts;
          for (int q = 0; q <= n; ++q)
            if (q != drop) pts.push_back(placed[i].col(q));
          const Eigen::VectorXd apex = placed[i].col(drop);
          Eigen::VectorXd nrm(n);
          if (n == 1) {
            nrm[0] = (apex[0] > pts[0][0]) ? 1.0 : -1.0;
          } else if (n == 2) {
            const Eigen::VectorXd e = pts[1] - pts[0];
            nrm << -e[1], e[0];
            if (nrm.dot(apex - pts[0]) < 0.0) nrm = -nrm;
            nrm.normalize();
          } else {
            const Eigen::Vector3d e1 = pts[1] - pts[0], e2 = pts[2] - pts[0];
            Eigen::Vector3d cr = e1.cross(e2);
            if (cr.dot(apex - pts[0]) < 0.0) cr = -cr;
            nrm = cr.normalized();
          }
          chart.boundary_planes.emplace_back(pts[0], nrm);
        }
      }

      // Kernel radius at the center: distance to the nearest boundary plane,
      // negative when the center is outside some inner half-space.
      if (chart.flat) {
        double r0 = 1e300;
        for (const auto& [p, nrm] : chart.boundary_planes)
          r0 = std::min(r0, nrm.dot(chart.center - p));
        if (chart.boundary_planes.empty()) r0 = 0.0;  // should not happen
        chart.r = r0 > 0.0 ? 0.5 * r0 : 0.0;
      } else {
        chart.r = 0.0;
      }

      cover.stars[m][idx] = std::move(chart);
    }
  }
  return cover;
}

double hat_value(const Mesh& mesh, int vertex_id, int T, const Eigen::VectorXd& y) {
  const auto& tuple = mesh.complex.simplices[mesh.dim()][T];
  int local = -1;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] == vertex_id) local = static_cast<int>(i);
  if (local < 0) return 0.0;
  return mesh.intrinsic_to_bary(T, y)[local];
}

double max_hat_gradient(const Mesh& mesh) {
  double worst = 0.0;
  const int n = mesh.dim();
  for (int T = 0; T < mesh.complex.count(n); ++T) {
    const Eigen::MatrixXd Rinv = mesh.charts[T].Rinv;
    for (int i = 1; i <= n; ++i) worst = std::max(worst, Rinv.row(i - 1).norm());
    worst = std::max(worst, Rinv.colwise().sum().norm());
  }
  return worst;
}

double star_shape_violation(const StarChart& chart, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int n = static_cast<int>(chart.center.size());
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    // x in the averaging ball (or the center when r = 0).
    Eigen::VectorXd x = chart.center;
    if (chart.r > 0.0) {
      Eigen::VectorXd dir(n);
      for (int i = 0; i < n; ++i) dir[i] = 2.0 * uni(rng) - 1.0;
      if (dir.norm() > 0) x += chart.r * uni(rng) * dir / dir.norm();
    }
    // y inside a random top (random barycentric point).
    const int local = static_cast<int>(uni(rng) * chart.tops.size()) %
                      static_cast<int>(chart.tops.size());
    Eigen::VectorXd bw(n + 1);
    double tot = 0.0;
    for (int i = 0; i <= n; ++i) {
      bw[i] = -std::log(std::max(uni(rng), 1e-12));
      tot += bw[i];
    }
    bw /= tot;
    // star coords of the barycentric point: invert bary(s) = B s + c via lstsq.
    const Eigen::VectorXd y =
        chart.B[local].colPivHouseholderQr().solve(bw - chart.c[local]);
    for (int q = 1; q < 32; ++q) {
      const double t = static_cast<double>(q) / 32.0;
      const Eigen::VectorXd z = x + t * (y - x);
      if (!chart.contains(z, 1e-7)) {
        // Measure how far outside z sits.
        double best = -1e300;
        for (std::size_t i = 0; i < chart.tops.size(); ++i) {
          const Eigen::VectorXd bary = chart.B[i] * z + chart.c[i];
          best = std::max(best, bary.minCoeff());
        }
        worst = std::max(worst, -best);
      }
    }
  }
  return worst;
}

}  // namespace orliczlab

#include "orliczlab/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "orliczlab/parallel.hpp"
#include "orliczlab/quadrature.hpp"

namespace orliczlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Affine hat polynomial of vertex `vid` on top simplex T (intrinsic coords).
Polynomial hat_polynomial(const Mesh& mesh, int vid, int T) {
  const int n = mesh.dim();
  const auto& tuple = mesh.complex.simplices[n][T];
  int local = -1;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] == vid) local = static_cast<int>(i);
  if (local < 0) return Polynomial();
  const Eigen::MatrixXd Rinv = mesh.charts[T].Rinv;
  Polynomial p;
  if (local == 0) {
    p = Polynomial::constant(1.0);
    for (int i = 0; i < n; ++i) {
      const double coeff = -Rinv.col(i).sum();
      // lambda_0 = 1 - sum_j (Rinv y)_j; coefficient of y_i is -sum_j Rinv(j,i).
      if (coeff != 0.0) p += coeff * Polynomial::variable(i);
    }
  } else {
    p = Polynomial::constant(0.0);
    for (int i = 0; i < n; ++i) {
      const double coeff = Rinv(local - 1, i);
      if (coeff != 0.0) p += coeff * Polynomial::variable(i);
    }
  }
  return p;
}

}  // namespace

bool BicomplexElement::polynomial() const {
  for (const auto& f : fields)
    if (!f.is_poly) return false;
  return true;
}

int BicomplexElement::poly_degree() const {
  int deg = 0;
  for (const auto& f : fields)
    if (f.is_poly)
      for (const auto& cs : f.poly)
        for (const auto& p : cs) deg = std::max(deg, p.total_degree());
  return deg;
}

Eigen::VectorXd BicomplexElement::eval(int delta, int local_top, const Eigen::VectorXd& y) const {
  const Field& f = fields[delta];
  if (f.is_poly) {
    const auto& cs = f.poly[local_top];
    Eigen::VectorXd out(static_cast<Eigen::Index>(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) out[static_cast<Eigen::Index>(i)] = cs[i].eval(y);
    return out;
  }
  return f.lazy(local_top, y);
}

BicomplexElement BicomplexElement::zero(const Mesh& mesh, const StarCover& cover, int k, int m) {
  BicomplexElement w;
  w.mesh = &mesh;
  w.cover = &cover;
  w.k = k;
  w.m = m;
  const int ncomp = covector_dim(mesh.dim(), k);
  w.fields.resize(mesh.complex.count(m));
  for (int d = 0; d < mesh.complex.count(m); ++d) {
    w.fields[d].is_poly = true;
    w.fields[d].poly.assign(cover.star(m, d).tops.size(), std::vector<Polynomial>(ncomp));
  }
  return w;
}

BicomplexElement d_prime(const BicomplexElement& w) {
  if (!w.polynomial())
    throw std::invalid_argument("d_prime: symbolic derivative needs polynomial fields");
  const int n = w.mesh->dim();
  if (w.k >= n) throw std::invalid_argument("d_prime: no degree beyond the mesh dimension");
  BicomplexElement out = BicomplexElement::zero(*w.mesh, *w.cover, w.k + 1, w.m);
  const double sign = (w.m % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t d = 0; d < w.fields.size(); ++d) {
    for (std::size_t t = 0; t < w.fields[d].poly.size(); ++t) {
      auto comps = exterior_derivative_poly(n, w.k, w.fields[d].poly[t]);
      for (auto& p : comps) p *= sign;
      out.fields[d].poly[t] = std::move(comps);
    }
  }
  return out;
}

BicomplexElement d_double_prime(const BicomplexElement& w) {
  const Mesh& mesh = *w.mesh;
  const StarCover& cover = *w.cover;
  const int m1 = w.m + 1;
  BicomplexElement out = BicomplexElement::zero(mesh, cover, w.k, m1);
  const int ncomp = covector_dim(mesh.dim(), w.k);
  // Lazy fields outlive the argument; they share one copy of the source.
  std::shared_ptr<const BicomplexElement> src;
  for (int d = 0; d < mesh.complex.count(m1); ++d) {
    const StarChart& star = cover.star(m1, d);
    const auto& face_rows = mesh.complex.faces[m1][d];  // (face index, sign)
    // Per face: local index of each of our tops inside the face's star.
    std::vector<std::vector<int>> remap(face_rows.size(),
                                        std::vector<int>(star.tops.size(), -1));
    for (std::size_t i = 0; i < face_rows.size(); ++i) {
      const StarChart& fstar = cover.star(w.m, face_rows[i].first);
      for (std::size_t t = 0; t < star.tops.size(); ++t)
        remap[i][t] = fstar.local_top(star.tops[t]);
    }
    bool all_poly = true;
    for (const auto& [fi, sgn] : face_rows)
      if (!w.fields[fi].is_poly) all_poly = false;

    if (all_poly) {
      for (std::size_t t = 0; t < star.tops.size(); ++t) {
        std::vector<Polynomial> comps(ncomp);
        for (std::size_t i = 0; i < face_rows.size(); ++i) {
          const auto& [fi, sgn] = face_rows[i];
          const auto& src_poly = w.fields[fi].poly[remap[i][t]];
          for (int cidx = 0; cidx < ncomp; ++cidx)
            comps[cidx] += static_cast<double>(sgn) * src_poly[cidx];
        }
        out.fields[d].poly[t] = std::move(comps);
      }
    } else {
      if (!src) src = std::make_shared<BicomplexElement>(w);
      auto rows = face_rows;
      auto rmp = remap;
      out.fields[d].is_poly = false;
      out.fields[d].poly.clear();
      out.fields[d].lazy = [src, rows, rmp](int local, const Eigen::VectorXd& y) {
        Eigen::VectorXd acc;
        bool first = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const Eigen::VectorXd v = src->eval(rows[i].first, rmp[i][local], y);
          if (first) {
            acc = rows[i].second * v;
            first = false;
          } else {
            acc += rows[i].second * v;
          }
        }
        return acc;
      };
    }
  }
  return out;
}

BicomplexElement column_homotopy_P(const BicomplexElement& w) {
  const Mesh& mesh = *w.mesh;
  const StarCover& cover = *w.cover;
  const int n = mesh.dim();
  const int ncomp = covector_dim(n, w.k);
  const int m_out = std::max(w.m - 1, 0);
  BicomplexElement out = BicomplexElement::zero(mesh, cover, w.k, m_out);
  const double msign = (w.m % 2 == 0) ? 1.0 : -1.0;
  std::shared_ptr<const BicomplexElement> shared_src;

  for (int d = 0; d < mesh.complex.count(m_out); ++d) {
    const StarChart& star = cover.star(m_out, d);
    const auto& delta_tuple = mesh.complex.simplices[m_out][d];
    // Contributions per local top: (source delta index, source local top,
    // coefficient sign, vertex id of the hat weight).
    struct Term {
      int src_delta, src_local, vid;
      double coeff;
    };
    std::vector<std::vector<Term>> terms(star.tops.size());
    bool all_poly = true;
    for (std::size_t t = 0; t < star.tops.size(); ++t) {
      const int T = star.tops[t];
      const auto& top_tuple = mesh.complex.simplices[n][T];
      for (int vid : top_tuple) {
        VertexTuple cand;
        double reorder = 1.0;
        if (w.m == 0) {
          // P^0: sum_v eta_v w_v restricted to U_{v0}; source is the vertex v.
          cand = {vid};
        } else {
          bool degenerate = false;
          int pos = 0;
          for (int u : delta_tuple) {
            if (u == vid) degenerate = true;
            if (u < vid) ++pos;
          }
          if (degenerate) continue;
          cand = delta_tuple;
          cand.insert(cand.begin() + pos, vid);
          const int flips = static_cast<int>(delta_tuple.size()) - pos;
          reorder = (flips % 2 == 0) ? 1.0 : -1.0;
        }
        const int src_idx = mesh.complex.index_of(cand);
        if (src_idx < 0) continue;  // w_{Delta v} = 0 when Delta v is no simplex
        const int src_dim = w.m == 0 ? 0 : w.m;
        const int src_local = cover.star(src_dim, src_idx).local_top(T);
        if (src_local < 0) throw std::logic_error("column_homotopy_P: top missing from source star");
        terms[t].push_back({src_idx, src_local, vid, (w.m == 0 ? 1.0 : msign) * reorder});
        if (!w.fields[src_idx].is_poly) all_poly = false;
      }
    }

    if (all_poly) {
      for (std::size_t t = 0; t < star.tops.size(); ++t) {
        std::vector<Polynomial> comps(ncomp);
        const int T = star.tops[t];
        for (const Term& term : terms[t]) {
          const Polynomial eta = hat_polynomial(mesh, term.vid, T);
          const auto& src = w.fields[term.src_delta].poly[term.src_local];
          for (int cidx = 0; cidx < ncomp; ++cidx) {
            if (src[cidx].is_zero()) continue;
            comps[cidx] += term.coeff * (eta * src[cidx]);
          }
        }
        out.fields[d].poly[t] = std::move(comps);
      }
    } else {
      if (!shared_src) shared_src = std::make_shared<const BicomplexElement>(w);
      auto srcp = shared_src;
      const Mesh* meshp = &mesh;
      auto tt = terms;
      auto tops = star.tops;
      out.fields[d].is_poly = false;
      out.fields[d].poly.clear();
      out.fields[d].lazy = [srcp, meshp, tt, tops, ncomp](int local, const Eigen::VectorXd& y) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(ncomp);
        for (const auto& term : tt[local]) {
          const double eta = hat_value(*meshp, term.vid, tops[local], y);
          if (eta == 0.0) continue;
          acc += term.coeff * eta * srcp->eval(term.src_delta, term.src_local, y);
        }
        return acc;
      };
    }
  }
  return out;
}

namespace {

// Piece of the segment x + t (y - x) inside one top of the star.
struct ConePiece {
  double lo, hi;
  int local;
};

std::vector<ConePiece> segment_pieces(const StarChart& star, const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& dir) {
  std::vector<ConePiece> pieces;
  for (std::size_t i = 0; i < star.tops.size(); ++i) {
    const Eigen::VectorXd a = star.B[i] * x + star.c[i];
    const Eigen::VectorXd b = star.B[i] * dir;
    double lo = 0.0, hi = 1.0;
    bool empty = false;
    for (int r = 0; r < a.size(); ++r) {
      const double av = a[r], bv = b[r];
      if (std::abs(bv) < 1e-14) {
        if (av < -1e-12) empty = true;
      } else if (bv > 0.0) {
        lo = std::max(lo, -av / bv);
      } else {
        hi = std::min(hi, -av / bv);
      }
      if (lo > hi + 1e-14) {
        empty = true;
        break;
      }
    }
    if (!empty && hi - lo > 1e-13)
      pieces.push_back({lo, hi, static_cast<int>(i)});
  }
  std::sort(pieces.begin(), pieces.end(), [](const ConePiece& p, const ConePiece& q) {
    return p.lo < q.lo;
  });
  // Clip overlaps so each t is integrated once.
  double cursor = 0.0;
  std::vector<ConePiece> merged;
  for (auto& p : pieces) {
    const double lo = std::max(p.lo, cursor);
    if (p.hi <= lo + 1e-14) continue;
    merged.push_back({lo, p.hi, p.local});
    cursor = p.hi;
  }
  return merged;
}

struct ConeIntegrand {
  const BicomplexElement* w;
  const StarChart* star;
  int delta, n, k;
  Eigen::VectorXd x, dir;       // segment x + t dir
  Eigen::MatrixXd u_star;       // n x (k-1) extra vectors in star coords

  double at(double t, int local) const {
    const Eigen::VectorXd s = x + t * dir;
    const Eigen::VectorXd y = star->to_intrinsic(local, s);
    const Eigen::VectorXd comps = w->eval(delta, local, y);
    // Vectors transported to the intrinsic frame of this top.
    Eigen::MatrixXd V(n, k);
    V.col(0) = star->M[local] * dir;
    for (int i = 1; i < k; ++i) V.col(i) = star->M[local] * u_star.col(i - 1);
    const double tk = (k == 1) ? 1.0 : std::pow(t, k - 1);
    return tk * apply_covector(n, k, comps, V);
  }
};

double cone_integral(const ConeIntegrand& ig, const std::vector<ConePiece>& pieces,
                     bool poly_exact, int poly_deg, const HOptions& opt) {
  double acc = 0.0;
  for (const auto& piece : pieces) {
    if (poly_exact) {
      const int npts = std::max(points_for_order(ig.k - 1 + poly_deg), opt.gauss_per_piece / 2);
      const Rule1D g = gauss_legendre(npts);
      double part = 0.0;
      for (int q = 0; q < npts; ++q)
        part += g.weights[q] * ig.at(piece.lo + (piece.hi - piece.lo) * g.nodes[q], piece.local);
      acc += (piece.hi - piece.lo) * part;
    } else {
      acc += integrate_adaptive([&](double t) { return ig.at(t, piece.local); }, piece.lo,
                                piece.hi, opt.adaptive_tol * (piece.hi - piece.lo));
    }
  }
  return acc;
}

}  // namespace

BicomplexElement row_homotopy_H(const BicomplexElement& w, const HOptions& opt) {
  const Mesh& mesh = *w.mesh;
  const StarCover& cover = *w.cover;
  const int n = mesh.dim(), k = w.k, m = w.m;
  const double msign = (m % 2 == 0) ? 1.0 : -1.0;

  BicomplexElement out = BicomplexElement::zero(mesh, cover, std::max(k - 1, 0), m);
  const bool src_poly = w.polynomial();
  const int src_deg = src_poly ? w.poly_degree() : 0;
  std::shared_ptr<const BicomplexElement> shared_src;

  for (std::size_t d = 0; d < w.fields.size(); ++d) {
    const StarChart& star = cover.star(m, static_cast<int>(d));
    // Ball-average nodes in star coordinates (center point when r == 0 or
    // a 1-point rule is requested).
    Eigen::MatrixXd xs;
    Eigen::VectorXd xw;
    if (star.r <= 0.0 || (opt.radial <= 1 && opt.angular <= 1 && (n < 3 || opt.polar <= 1))) {
      xs = star.center.transpose();
      xw = Eigen::VectorXd::Ones(1);
    } else {
      const BallRule ball = ball_rule(n, star.r, opt.radial, opt.angular, opt.polar);
      xs = ball.nodes.rowwise() + star.center.transpose();
      xw = ball.weights / ball.weights.sum();
    }

    if (k == 0) {
      // Degree 0: ball average of the function, a constant per Delta.
      double avg = 0.0;
      for (int q = 0; q < xw.size(); ++q) {
        const Eigen::VectorXd s = xs.row(q).transpose();
        const int local = star.locate(s);
        avg += xw[q] * w.eval(static_cast<int>(d), local, star.to_intrinsic(local, s))[0];
      }
      for (auto& cs : out.fields[d].poly) cs[0] = Polynomial::constant(avg);
      continue;
    }

    if (!shared_src) shared_src = std::make_shared<const BicomplexElement>(w);
    auto wp = shared_src;
    const StarChart* starp = &star;
    const int delta = static_cast<int>(d);
    const HOptions options = opt;
    Eigen::MatrixXd xs_cap = xs;
    Eigen::VectorXd xw_cap = xw;
    out.fields[d].is_poly = false;
    out.fields[d].poly.clear();
    out.fields[d].lazy = [wp, starp, delta, n, k, msign, src_poly, src_deg, options, xs_cap,
                          xw_cap](int local, const Eigen::VectorXd& y) {
      const Eigen::VectorXd s_y = starp->to_star(local, y);
      const auto& basis = covector_basis(n, k - 1);
      Eigen::VectorXd outv(static_cast<Eigen::Index>(basis.size()));
      for (std::size_t J = 0; J < basis.size(); ++J) {
        // Intrinsic basis vectors of this top transported to star coords.
        Eigen::MatrixXd u_star(n, k - 1);
        for (int c = 0; c < k - 1; ++c)
          u_star.col(c) = starp->Minv[local] * Eigen::VectorXd::Unit(n, basis[J][c]);
        double acc = 0.0;
        for (int q = 0; q < xw_cap.size(); ++q) {
          ConeIntegrand ig{wp.get(), starp, delta, n, k, xs_cap.row(q).transpose(),
                           Eigen::VectorXd(s_y - xs_cap.row(q).transpose()), u_star};
          const auto pieces = segment_pieces(*starp, ig.x, ig.dir);
          acc += xw_cap[q] * cone_integral(ig, pieces, src_poly, src_deg, options);
        }
        outv[static_cast<Eigen::Index>(J)] = msign * acc;
      }
      return outv;
    };
  }
  return out;
}

ElementSample sample_element(const BicomplexElement& w, int order) {
  const Mesh& mesh = *w.mesh;
  const int n = mesh.dim();
  const SimplexRule rule = simplex_rule(n, points_for_order(order));
  const int per = static_cast<int>(rule.weights.size());
  ElementSample s;
  s.nodes_per_top = per;
  const int n_top = mesh.complex.count(n);
  s.node_weights.resize(n_top * per);
  const double nfac = factorial(n);
  for (int T = 0; T < n_top; ++T)
    for (int q = 0; q < per; ++q)
      s.node_weights[T * per + q] = rule.weights[q] * nfac * mesh.charts[T].volume;

  s.values.resize(w.fields.size());
  parallel_for(w.fields.size(), [&](std::size_t d) {
    const StarChart& star = w.cover->star(w.m, static_cast<int>(d));
    s.values[d].resize(star.tops.size());
    for (std::size_t t = 0; t < star.tops.size(); ++t) {
      const int T = star.tops[t];
      Eigen::MatrixXd vals(per, covector_dim(n, w.k));
      for (int q = 0; q < per; ++q) {
        const Eigen::VectorXd bary = rule.barycentric.row(q).transpose();
        vals.row(q) = w.eval(static_cast<int>(d), static_cast<int>(t),
                             mesh.bary_to_intrinsic(T, bary)).transpose();
      }
      s.values[d][t] = std::move(vals);
    }
  });
  return s;
}

double bicomplex_modular(const YoungFunction& phi, const BicomplexElement& w, double alpha,
                         int order) {
  if (!(alpha > 0.0)) throw std::invalid_argument("bicomplex_modular: alpha > 0");
  const ElementSample s = sample_element(w, order);
  double acc = 0.0;
  for (std::size_t d = 0; d < s.values.size(); ++d) {
    const StarChart& star = w.cover->star(w.m, static_cast<int>(d));
    for (std::size_t t = 0; t < s.values[d].size(); ++t) {
      const int T = star.tops[t];
      for (int q = 0; q < s.nodes_per_top; ++q)
        acc += s.node_weights[T * s.nodes_per_top + q] *
               phi(s.values[d][t].row(q).norm() / alpha);
    }
  }
  return acc;
}

double bicomplex_norm(const YoungFunction& phi, const BicomplexElement& w, double tol, int order) {
  const ElementSample s = sample_element(w, order);
  std::vector<double> values;
  std::vector<double> weights;
  double vmax = 0.0;
  for (std::size_t d = 0; d < s.values.size(); ++d) {
    const StarChart& star = w.cover->star(w.m, static_cast<int>(d));
    for (std::size_t t = 0; t < s.values[d].size(); ++t) {
      const int T = star.tops[t];
      for (int q = 0; q < s.nodes_per_top; ++q) {
        const double v = s.values[d][t].row(q).norm();
        values.push_back(v);
        weights.push_back(s.node_weights[T * s.nodes_per_top + q]);
        vmax = std::max(vmax, v);
      }
    }
  }
  if (vmax == 0.0) return 0.0;
  double wsum = 0.0;
  for (double x : weights) wsum += x;
  auto modular_of_alpha = [&](double alpha) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * phi(values[i] / alpha);
    return acc;
  };
  return luxemburg_from_modular(modular_of_alpha, vmax * std::max(wsum, 1e-12), tol).norm;
}

double nodewise_max_diff(const BicomplexElement& a, const BicomplexElement& b, int order) {
  const ElementSample sa = sample_element(a, order);
  const ElementSample sb = sample_element(b, order);
  double worst = 0.0;
  for (std::size_t d = 0; d < sa.values.size(); ++d)
    for (std::size_t t = 0; t < sa.values[d].size(); ++t)
      worst = std::max(worst, (sa.values[d][t] - sb.values[d][t]).cwiseAbs().maxCoeff());
  return worst;
}

double nodewise_max(const BicomplexElement& a, int order) {
  const ElementSample sa = sample_element(a, order);
  double worst = 0.0;
  for (std::size_t d = 0; d < sa.values.size(); ++d)
    for (std::size_t t = 0; t < sa.values[d].size(); ++t) {
      if (sa.values[d][t].size() > 0)
        worst = std::max(worst, sa.values[d][t].cwiseAbs().maxCoeff());
    }
  return worst;
}

BicomplexElement restrict_E(const Mesh& mesh, const StarCover& cover, const PiecewiseForm& form) {
  BicomplexElement w = BicomplexElement::zero(mesh, cover, form.degree, 0);
  for (int v = 0; v < mesh.complex.count(0); ++v) {
    const StarChart& star = cover.star(0, v);
    for (std::size_t t = 0; t < star.tops.size(); ++t)
      w.fields[v].poly[t] = form.comps[star.tops[t]];
  }
  return w;
}

PiecewiseForm glue_E(const BicomplexElement& w, double tol) {
  if (w.m != 0) throw std::invalid_argument("glue_E: element must have bidegree (k,0)");
  if (!w.polynomial()) throw std::invalid_argument("glue_E: requires polynomial fields");
  const Mesh& mesh = *w.mesh;
  // Cocycle check: components of the two vertex fields agree on edge stars.
  const BicomplexElement dw = d_double_prime(w);
  const double scale = 1.0 + nodewise_max(w);
  const double residual = nodewise_max(dw);
  if (residual > tol * scale)
    throw std::invalid_argument("glue_E: not a d''-cocycle (overlap disagreement " +
                                std::to_string(residual) + ")");
  PiecewiseForm out = PiecewiseForm::zero(mesh, w.k);
  const int n = mesh.dim();
  for (int T = 0; T < mesh.complex.count(n); ++T) {
    const int v0 = mesh.complex.simplices[n][T][0];
    const int vidx = mesh.complex.index_of({v0});
    const int local = w.cover->star(0, vidx).local_top(T);
    out.comps[T] = w.fields[vidx].poly[local];
  }
  return out;
}

Cochain constants_F(const BicomplexElement& w, double tol, int order) {
  if (w.k != 0) throw std::invalid_argument("constants_F: element must have bidegree (0,m)");
  const ElementSample s = sample_element(w, order);
  Cochain theta;
  theta.degree = w.m;
  theta.values.resize(static_cast<Eigen::Index>(s.values.size()));
  for (std::size_t d = 0; d < s.values.size(); ++d) {
    double mn = 1e300, mx = -1e300, sum = 0.0;
    int count = 0;
    for (const auto& vals : s.values[d]) {
      for (int q = 0; q < vals.rows(); ++q) {
        const double v = vals(q, 0);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
        sum += v;
        ++count;
      }
    }
    const double mean = sum / std::max(count, 1);
    if (mx - mn > tol * (1.0 + std::abs(mean)))
      throw std::invalid_argument("constants_F: component " + std::to_string(d) +
                                  " not constant (spread " + std::to_string(mx - mn) + ")");
    theta.values[static_cast<Eigen::Index>(d)] = mean;
  }
  return theta;
}

BicomplexElement constants_F_inverse(const Mesh& mesh, const StarCover& cover,
                                     const Cochain& theta) {
  BicomplexElement w = BicomplexElement::zero(mesh, cover, 0, theta.degree);
  for (std::size_t d = 0; d < w.fields.size(); ++d)
    for (auto& cs : w.fields[d].poly)
      cs[0] = Polynomial::constant(theta.values[static_cast<Eigen::Index>(d)]);
  return w;
}

BicomplexElement random_poly_element(const Mesh& mesh, const StarCover& cover, int k, int m,
                                     int max_deg, unsigned seed, bool smooth_per_delta) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = mesh.dim();
  const int ncomp = covector_dim(n, k);
  BicomplexElement w = BicomplexElement::zero(mesh, cover, k, m);

  auto random_poly = [&]() {
    Polynomial p;
    for (int a = 0; a <= max_deg; ++a)
      for (int b = 0; a + b <= max_deg; ++b)
        for (int c = 0; a + b + c <= max_deg; ++c) {
          if (n < 3 && c > 0) continue;
          if (n < 2 && b > 0) continue;
          p.terms[{a, b, c}] = uni(rng);
        }
    return p;
  };

  for (std::size_t d = 0; d < w.fields.size(); ++d) {
    const StarChart& star = cover.star(m, static_cast<int>(d));
    if (smooth_per_delta) {
      // One polynomial form in star coordinates, expressed per top.
      std::vector<Polynomial> star_comps(ncomp);
      for (int c = 0; c < ncomp; ++c) star_comps[c] = random_poly();
      for (std::size_t t = 0; t < star.tops.size(); ++t) {
        // s = Minv (y - b): substitute, then pull components through Minv.
        const Eigen::MatrixXd A = star.Minv[t];
        const Eigen::VectorXd shift = -star.Minv[t] * star.b[t];
        std::vector<Polynomial> subst(ncomp);
        for (int c = 0; c < ncomp; ++c) star_comps[c].prune();
        for (int c = 0; c < ncomp; ++c) subst[c] = star_comps[c].compose_affine(A, shift);
        std::vector<Polynomial> comps(ncomp);
        const auto& basis = covector_basis(n, k);
        for (int to = 0; to < ncomp; ++to) {
          Polynomial acc;
          for (int from = 0; from < ncomp; ++from) {
            Eigen::MatrixXd sub(k, k);
            for (int r = 0; r < k; ++r)
              for (int cc = 0; cc < k; ++cc) sub(r, cc) = A(basis[from][r], basis[to][cc]);
            const double det = k == 0 ? 1.0 : sub.determinant();
            if (det != 0.0) acc += det * subst[from];
          }
          comps[to] = acc;
        }
        w.fields[d].poly[t] = std::move(comps);
      }
    } else {
      for (std::size_t t = 0; t < star.tops.size(); ++t) {
        std::vector<Polynomial> comps(ncomp);
        for (int c = 0; c < ncomp; ++c) comps[c] = random_poly();
        w.fields[d].poly[t] = std::move(comps);
      }
    }
  }
  return w;
}

}  // namespace orliczlab

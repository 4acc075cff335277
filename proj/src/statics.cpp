#include "symstress/statics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

namespace symstress {

namespace {

template <class T> bool near(const T& a, const T& b, double tol) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    return a == b;
  } else {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
}

template <class T> int sign_of(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) return sgn(x);
  else return (x > 0) - (x < 0);
}

// Projection of f onto the orthogonal complement of span(gens).
Vec<Rational> remove_component(const std::vector<Vec<Rational>>& gens, const Vec<Rational>& f) {
  RowSpace rs(f.size());
  for (const auto& g : gens) rs.add(g);
  auto basis = rs.basis();
  if (basis.empty()) return f;
  const std::size_t k = basis.size();
  Matrix<Rational> gram(k, k);
  Vec<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], f);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  auto c = solve(gram, rhs);
  Vec<Rational> out = f;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out[j] -= (*c)[i] * basis[i][j];
  return out;
}

Vec<double> remove_component(const std::vector<Vec<double>>& gens, const Vec<double>& f) {
  if (gens.empty()) return f;
  Matrix<double> a(f.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < f.size(); ++i) a(i, j) = gens[j][i];
  auto c = solve_least_squares(a, f);
  Vec<double> out = f;
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < f.size(); ++i) out[i] -= c[j] * gens[j][i];
  return out;
}

bool in_span_of(const std::vector<Vec<Rational>>& gens, const Vec<Rational>& f, double) {
  RowSpace rs(f.size());
  for (const auto& g : gens) rs.add(g);
  return rs.contains(f);
}

bool in_span_of(const std::vector<Vec<double>>& gens, const Vec<double>& f, double rel_tol) {
  double nf = norm2(f);
  if (nf == 0) return true;
  return norm2(remove_component(gens, f)) <= 1e3 * rel_tol * nf;
}

std::size_t span_rank(const std::vector<Vec<Rational>>& gens, std::size_t dim, double) {
  RowSpace rs(dim);
  for (const auto& g : gens) rs.add(g);
  return rs.dimension();
}

std::size_t span_rank(const std::vector<Vec<double>>& gens, std::size_t dim, double rel_tol) {
  if (gens.empty()) return 0;
  Matrix<double> a(gens.size(), dim);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = gens[i][j];
  return rank(a, rel_tol);
}

template <class T> Configuration<T> planar_part(const Configuration<T>& p) {
  Configuration<T> q(2, p.n());
  for (std::size_t i = 0; i < p.n(); ++i)
    for (int k = 0; k < 2; ++k) q.at(i, k) = p.at(i, k);
  return q;
}

}  // namespace

template <class T> FaceStructure trace_faces(const Graph& g, const Configuration<T>& p) {
  FaceStructure fs;
  if (g.m() == 0) {
    if (g.n() > 1) throw DomainError("NonPlanarInput", "graph is not connected");
    fs.faces.push_back({});
    fs.outer = 0;
    return fs;
  }
  if (!is_connected(g)) throw DomainError("NonPlanarInput", "graph is not connected");
  if (!coincident_points(p).empty()) throw DomainError("NonPlanarInput", "coincident points");
  auto cr = count_crossings(g, p);
  if (cr.crossings || cr.overlaps) throw DomainError("NonPlanarInput", "drawing has crossings or overlaps");

  const std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<int>> ccw(n);
  for (std::size_t v = 0; v < n; ++v) {
    ccw[v] = g.neighbours(static_cast<int>(v));
    auto dir = [&](int w) {
      return std::pair<T, T>{p.at(static_cast<std::size_t>(w), 0) - p.at(v, 0),
                             p.at(static_cast<std::size_t>(w), 1) - p.at(v, 1)};
    };
    auto half = [](const std::pair<T, T>& a) {
      return (sign_of(a.second) > 0 || (sign_of(a.second) == 0 && sign_of(a.first) > 0)) ? 0 : 1;
    };
    std::sort(ccw[v].begin(), ccw[v].end(), [&](int a, int b) {
      auto da = dir(a), db = dir(b);
      int ha = half(da), hb = half(db);
      if (ha != hb) return ha < hb;
      T cross = da.first * db.second - da.second * db.first;
      return sign_of(cross) > 0;
    });
  }
  auto position = [&](int v, int u) {
    const auto& l = ccw[static_cast<std::size_t>(v)];
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), u) - l.begin());
  };
  std::map<std::pair<int, int>, int> face_of;
  std::vector<T> areas;
  for (std::size_t v = 0; v < n; ++v)
    for (int w : ccw[v]) {
      std::pair<int, int> start{static_cast<int>(v), w};
      if (face_of.count(start)) continue;
      const int id = static_cast<int>(fs.faces.size());
      std::vector<int> walk;
      T area = T(0);
      auto h = start;
      do {
        face_of[h] = id;
        walk.push_back(h.first);
        auto [a, b] = h;
        area += p.at(static_cast<std::size_t>(a), 0) * p.at(static_cast<std::size_t>(b), 1) -
                p.at(static_cast<std::size_t>(b), 0) * p.at(static_cast<std::size_t>(a), 1);
        const auto& around = ccw[static_cast<std::size_t>(b)];
        std::size_t k = position(b, a);
        int next = around[(k + around.size() - 1) % around.size()];
        h = {b, next};
      } while (h != start);
      fs.faces.push_back(std::move(walk));
      areas.push_back(area);
    }
  if (g.n() - g.m() + static_cast<int>(fs.faces.size()) != 2)
    throw DomainError("NonPlanarInput", "face count violates Euler's formula");
  fs.outer = static_cast<int>(std::min_element(areas.begin(), areas.end()) - areas.begin());
  return fs;
}

int face_left_of(const FaceStructure& fs, int u, int v) {
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    const auto& w = fs.faces[f];
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == u && w[(i + 1) % w.size()] == v) return static_cast<int>(f);
  }
  return -1;
}

template <class T> Projection<T> project(const LiftedFramework<T>& lf) {
  Projection<T> pr;
  pr.framework.graph = lf.graph;
  pr.framework.config = planar_part(lf.config);
  pr.coincident = coincident_points(pr.framework.config);
  return pr;
}

template <class T> bool LoadVector<T>::vertical() const {
  for (std::size_t i = 0; i + 2 < f.size(); i += 3)
    if (sign_of(f[i]) != 0 || sign_of(f[i + 1]) != 0) return false;
  return true;
}

template <class T> LoadVector<T> vertical_load(const std::vector<T>& beta) {
  LoadVector<T> l;
  l.f.assign(3 * beta.size(), T(0));
  for (std::size_t i = 0; i < beta.size(); ++i) l.f[3 * i + 2] = beta[i];
  return l;
}

template <class T> LoadVector<T> induced_load(const LiftedFramework<T>& lf, const Vec<T>& omega) {
  LoadVector<T> l;
  l.f = left_multiply(omega, rigidity_matrix(lf.graph, lf.config));
  return l;
}

template <class T>
ProjectionStress<T> projection_stress(const LiftedFramework<T>& lf, const LoadVector<T>& load, double rel_tol) {
  if (!load.vertical()) throw DomainError("NotVertical", "load has horizontal components");
  ProjectionStress<T> ps;
  auto rt = rigidity_matrix(lf.graph, lf.config).transpose();
  if constexpr (std::is_same_v<T, Rational>) {
    auto w = solve(rt, load.f);
    if (!w) {
      Vec<double> fd;
      for (const auto& x : load.f) fd.push_back(x.get_d());
      solve_least_squares(to_double(rt), fd, &ps.residual);
      return ps;
    }
    ps.omega = *w;
  } else {
    ps.omega = solve_least_squares(rt, load.f, &ps.residual);
    if (ps.residual > 1e3 * rel_tol * std::max(1.0, norm2(load.f))) return ps;
  }
  ps.feasible = true;
  auto proj = project(lf);
  auto v = left_multiply(ps.omega, rigidity_matrix(proj.framework.graph, proj.framework.config));
  ps.certificate_residual = norm2(v);
  ps.certificate = is_self_stress(proj.framework.graph, proj.framework.config, ps.omega, 1e3 * rel_tol);
  return ps;
}

template <class T>
Resolvability vertical_resolvability(const LiftedFramework<T>& lf, const std::vector<LoadVector<T>>& loads,
                                     double rel_tol) {
  Resolvability r;
  const std::size_t n = lf.config.n();
  auto proj = project(lf);
  auto stresses = self_stress_basis(proj.framework.graph, proj.framework.config, rel_tol).basis;
  std::vector<Vec<T>> w;
  for (const auto& s : stresses) w.push_back(induced_load(lf, s).f);
  auto trivial = trivial_motion_generators(lf.config);
  r.resolvable_dim = span_rank(w, 3 * n, rel_tol);
  std::vector<Vec<T>> zparts;
  for (const auto& t : trivial) {
    Vec<T> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = t[3 * i + 2];
    zparts.push_back(std::move(z));
  }
  r.equilibrium_dim = n - span_rank(zparts, n, rel_tol);
  for (const auto& l : loads) {
    if (!l.vertical()) throw DomainError("NotVertical", "load has horizontal components");
    r.feasible.push_back(in_span_of(w, remove_component(trivial, l.f), rel_tol));
  }
  return r;
}

template <class T>
LiftedFramework<T> maxwell_cremona_lift(const Framework<T>& fw, const Vec<T>& omega, std::optional<FaceStructure> faces,
                                        double rel_tol) {
  const Graph& g = fw.graph;
  const auto& p = fw.config;
  if (p.d != 2) throw DomainError("NonPlanarInput", "lifting needs a planar framework");
  double tol = std::is_same_v<T, Rational> ? 0.0 : 1e3 * rel_tol;
  if (omega.size() != static_cast<std::size_t>(g.m()) || !is_self_stress(g, p, omega, tol))
    throw DomainError("NotASelfStress", "coefficients are not in equilibrium");
  FaceStructure fs = faces ? *faces : trace_faces(g, p);

  LiftedFramework<T> lf;
  lf.graph = g;
  lf.config = Configuration<T>(3, p.n());
  for (std::size_t i = 0; i < p.n(); ++i)
    for (int k = 0; k < 2; ++k) lf.config.at(i, k) = p.at(i, k);
  if (g.m() == 0) {
    lf.planes.assign(fs.faces.size(), {T(0), T(0), T(0)});
    lf.faces = fs;
    return lf;
  }

  std::map<std::pair<int, int>, int> face_of;
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    const auto& walk = fs.faces[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      std::pair<int, int> h{walk[i], walk[(i + 1) % walk.size()]};
      if (!g.adjacent(h.first, h.second) || !face_of.emplace(h, static_cast<int>(f)).second)
        throw DomainError("NonPlanarInput", "face list is not a consistent embedding");
    }
  }
  if (face_of.size() != 2 * static_cast<std::size_t>(g.m()))
    throw DomainError("NonPlanarInput", "face list does not cover every edge twice");
  if (fs.outer < 0 || fs.outer >= static_cast<int>(fs.faces.size()))
    throw DomainError("NonPlanarInput", "outer face is not set");

  std::vector<std::optional<std::array<T, 3>>> plane(fs.faces.size());
  plane[static_cast<std::size_t>(fs.outer)] = std::array<T, 3>{T(0), T(0), T(0)};
  std::deque<int> queue{fs.outer};
  auto check = [&](const std::array<T, 3>& a, const std::array<T, 3>& b) {
    return near(a[0], b[0], tol) && near(a[1], b[1], tol) && near(a[2], b[2], tol);
  };
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    const auto& walk = fs.faces[static_cast<std::size_t>(f)];
    const auto& hf = *plane[static_cast<std::size_t>(f)];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int u = walk[i], v = walk[(i + 1) % walk.size()];
      int other = face_of.at({v, u});
      const T& w = omega[static_cast<std::size_t>(g.edge_index(u, v))];
      T dx = p.at(static_cast<std::size_t>(v), 0) - p.at(static_cast<std::size_t>(u), 0);
      T dy = p.at(static_cast<std::size_t>(v), 1) - p.at(static_cast<std::size_t>(u), 1);
      // Face f is left of u->v: g_left - g_right = w * J(p_v - p_u), J(a,b) = (-b,a).
      std::array<T, 3> h;
      h[0] = hf[0] + w * dy;
      h[1] = hf[1] - w * dx;
      h[2] = hf[2] + (hf[0] - h[0]) * p.at(static_cast<std::size_t>(u), 0) +
             (hf[1] - h[1]) * p.at(static_cast<std::size_t>(u), 1);
      auto& slot = plane[static_cast<std::size_t>(other)];
      if (!slot) {
        slot = h;
        queue.push_back(other);
      } else if (!check(*slot, h)) {
        throw DomainError("NotASelfStress", "face gradients do not close up");
      }
    }
  }
  std::vector<bool> seen(p.n(), false);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (!plane[f]) throw DomainError("NonPlanarInput", "dual graph is disconnected");
    const auto& h = *plane[f];
    lf.planes.push_back(h);
    for (int v : fs.faces[f]) {
      auto V = static_cast<std::size_t>(v);
      T z = h[0] * p.at(V, 0) + h[1] * p.at(V, 1) + h[2];
      if (!seen[V]) {
        lf.config.at(V, 2) = z;
        seen[V] = true;
      } else if (!near(lf.config.at(V, 2), z, tol)) {
        throw DomainError("NotASelfStress", "faces disagree on a vertex height");
      }
    }
  }
  lf.faces = fs;
  return lf;
}

template <class T> std::optional<std::array<T, 3>> face_plane(const LiftedFramework<T>& lf, std::size_t face) {
  const auto& walk = lf.faces->faces[face];
  const auto& p = lf.config;
  for (std::size_t a = 0; a < walk.size(); ++a)
    for (std::size_t b = a + 1; b < walk.size(); ++b)
      for (std::size_t c = b + 1; c < walk.size(); ++c) {
        auto A = static_cast<std::size_t>(walk[a]), B = static_cast<std::size_t>(walk[b]),
             C = static_cast<std::size_t>(walk[c]);
        T ux = p.at(B, 0) - p.at(A, 0), uy = p.at(B, 1) - p.at(A, 1), uz = p.at(B, 2) - p.at(A, 2);
        T vx = p.at(C, 0) - p.at(A, 0), vy = p.at(C, 1) - p.at(A, 1), vz = p.at(C, 2) - p.at(A, 2);
        T det = ux * vy - uy * vx;
        if (sign_of(det) == 0) continue;
        std::array<T, 3> h;
        h[0] = (uz * vy - uy * vz) / det;
        h[1] = (ux * vz - uz * vx) / det;
        h[2] = p.at(A, 2) - h[0] * p.at(A, 0) - h[1] * p.at(A, 1);
        return h;
      }
  return std::nullopt;
}

template <class T> bool faces_coplanar(const LiftedFramework<T>& lf, double rel_tol) {
  if (!lf.faces) return true;
  double tol = std::is_same_v<T, Rational> ? 0.0 : 1e3 * rel_tol;
  for (std::size_t f = 0; f < lf.faces->faces.size(); ++f) {
    auto h = face_plane(lf, f);
    if (!h) continue;
    for (int v : lf.faces->faces[f]) {
      auto V = static_cast<std::size_t>(v);
      T z = (*h)[0] * lf.config.at(V, 0) + (*h)[1] * lf.config.at(V, 1) + (*h)[2];
      if (!near(z, lf.config.at(V, 2), tol)) return false;
    }
  }
  return true;
}

double perturbation_bound(std::size_t m, double omega_norm, double eps) {
  return eps / (2.0 * std::sqrt(static_cast<double>(m)) * omega_norm);
}

double diameter(const Configuration<double>& e) {
  double best = 0;
  for (std::size_t i = 0; i < e.n(); ++i)
    for (std::size_t j = i + 1; j < e.n(); ++j) {
      double s = 0;
      for (int k = 0; k < e.d; ++k) s += (e.at(i, k) - e.at(j, k)) * (e.at(i, k) - e.at(j, k));
      best = std::max(best, std::sqrt(s));
    }
  return best;
}

ResidualCheck residual_check(const Graph& g, const Vec<double>& omega, const Configuration<double>& p,
                             const Configuration<double>& e, const std::vector<double>& f) {
  ResidualCheck rc;
  Configuration<double> q = p;
  for (std::size_t i = 0; i < q.coords.size(); ++i) q.coords[i] += e.coords[i];
  auto r = rigidity_matrix(g, q);
  auto v = left_multiply(omega, r);
  double rn = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) rn += r(i, j) * r(i, j);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f[i];
  rc.observed = norm2(v);
  rc.diam = diameter(e);
  rc.bound = 2.0 * std::sqrt(static_cast<double>(g.m())) * rc.diam * norm2(omega);
  // Allowance for floating-point rounding in forming w^T R(p+e) - f.
  double slack = 64 * std::numeric_limits<double>::epsilon() * (norm2(f) + norm2(omega) * std::sqrt(rn));
  rc.holds = rc.observed <= rc.bound + slack;
  return rc;
}

#define SYMSTRESS_INSTANTIATE(T)                                                                                 \
  template FaceStructure trace_faces(const Graph&, const Configuration<T>&);                                     \
  template Projection<T> project(const LiftedFramework<T>&);                                                     \
  template struct LoadVector<T>;                                                                                 \
  template LoadVector<T> vertical_load(const std::vector<T>&);                                                   \
  template LoadVector<T> induced_load(const LiftedFramework<T>&, const Vec<T>&);                                 \
  template ProjectionStress<T> projection_stress(const LiftedFramework<T>&, const LoadVector<T>&, double);       \
  template Resolvability vertical_resolvability(const LiftedFramework<T>&, const std::vector<LoadVector<T>>&,    \
                                                double);                                                         \
  template LiftedFramework<T> maxwell_cremona_lift(const Framework<T>&, const Vec<T>&, std::optional<FaceStructure>, \
                                                   double);                                                      \
  template std::optional<std::array<T, 3>> face_plane(const LiftedFramework<T>&, std::size_t);                   \
  template bool faces_coplanar(const LiftedFramework<T>&, double);

SYMSTRESS_INSTANTIATE(Rational)
SYMSTRESS_INSTANTIATE(double)

}  // namespace symstress

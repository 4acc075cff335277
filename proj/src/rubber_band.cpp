#include "symstress/rubber_band.hpp"

#include "symstress/random.hpp"
#include "symstress/stress_classify.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <tuple>

namespace symstress {

namespace {

std::optional<Vec<Rational>> solve_unique(const Matrix<Rational>& a, const Vec<Rational>& b) {
  if (rank_bareiss(a) < a.cols()) return std::nullopt;
  return solve(a, b);
}

std::optional<Vec<double>> solve_unique(const Matrix<double>& a, const Vec<double>& b) {
  Eigen::MatrixXd A = to_eigen(a);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  lu.setThreshold(1e-12);
  if (lu.rank() < A.cols()) return std::nullopt;
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = lu.solve(rhs);
  return Vec<double>(x.data(), x.data() + x.size());
}

std::optional<Vec<Rational>> solve_consistent(const Matrix<Rational>& a, const Vec<Rational>& b, double) {
  return solve(a, b);
}

std::optional<Vec<double>> solve_consistent(const Matrix<double>& a, const Vec<double>& b, double rel_tol) {
  double res = 0;
  auto x = solve_least_squares(a, b, &res);
  if (res > rel_tol * std::max(1.0, norm2(b))) return std::nullopt;
  return x;
}

double least_squares_residual(const Matrix<Rational>& a, const Vec<Rational>& b) {
  Vec<double> bd;
  for (const auto& x : b) bd.push_back(x.get_d());
  double res = 0;
  solve_least_squares(to_double(a), bd, &res);
  return res;
}

double least_squares_residual(const Matrix<double>& a, const Vec<double>& b) {
  double res = 0;
  solve_least_squares(a, b, &res);
  return res;
}

}  // namespace

template <class T> std::vector<bool> RubberBandProblem<T>::is_boundary() const {
  std::vector<bool> b(static_cast<std::size_t>(graph.n()), false);
  for (int v : boundary) b[static_cast<std::size_t>(v)] = true;
  return b;
}

template <class T> std::vector<int> RubberBandProblem<T>::interior() const {
  auto b = is_boundary();
  std::vector<int> out;
  for (int v = 0; v < graph.n(); ++v)
    if (!b[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

template <class T> ProblemCheck validate(const RubberBandProblem<T>& pr) {
  ProblemCheck chk;
  const auto& g = pr.graph;
  if (static_cast<int>(pr.boundary.size()) != pr.d + 1)
    throw DomainError("InvalidProblem", "boundary must have d+1 = " + std::to_string(pr.d + 1) + " vertices");
  std::set<int> seen;
  for (int v : pr.boundary) {
    if (v < 0 || v >= g.n()) throw DomainError("InvalidProblem", "boundary vertex out of range");
    if (!seen.insert(v).second) throw DomainError("InvalidProblem", "repeated boundary vertex");
  }
  if (pr.boundary_positions.d != pr.d || pr.boundary_positions.n() != pr.boundary.size())
    throw DomainError("InvalidProblem", "boundary placement has the wrong shape");
  if (affine_span_dimension(pr.boundary_positions) != static_cast<std::size_t>(pr.d))
    throw DomainError("InvalidProblem", "boundary placement is not in general position");
  if (pr.weights.size() != static_cast<std::size_t>(g.m()))
    throw DomainError("InvalidProblem", "weights must have one entry per edge");
  if (!is_k_connected(g, pr.d + 1))
    chk.warnings.push_back("graph is not " + std::to_string(pr.d + 1) + "-connected; invertibility is not guaranteed");
  auto isb = pr.is_boundary();
  for (std::size_t i = 0; i < pr.boundary.size(); ++i)
    for (std::size_t j = i + 1; j < pr.boundary.size(); ++j)
      if (!g.adjacent(pr.boundary[i], pr.boundary[j])) {
        chk.warnings.push_back("boundary does not induce a complete graph; boundary stress may be infeasible");
        i = pr.boundary.size();
        break;
      }
  bool mixed = false;
  for (int e = 0; e < g.m(); ++e) {
    auto ed = g.edge(e);
    if (isb[static_cast<std::size_t>(ed.u)] && isb[static_cast<std::size_t>(ed.v)]) continue;
    if (!(pr.weights[static_cast<std::size_t>(e)] > T(0))) mixed = true;
  }
  if (mixed) chk.warnings.push_back("interior weights are not all positive; the interior system may be singular");
  return chk;
}

template <class T> Configuration<T> solve_interior(const RubberBandProblem<T>& pr) {
  const auto& g = pr.graph;
  const int d = pr.d;
  auto interior = pr.interior();
  std::vector<int> slot(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t k = 0; k < interior.size(); ++k) slot[static_cast<std::size_t>(interior[k])] = static_cast<int>(k);
  Configuration<T> p(d, static_cast<std::size_t>(g.n()));
  for (std::size_t b = 0; b < pr.boundary.size(); ++b)
    for (int k = 0; k < d; ++k) p.at(static_cast<std::size_t>(pr.boundary[b]), k) = pr.boundary_positions.at(b, k);
  if (interior.empty()) return p;

  const std::size_t ni = interior.size();
  Matrix<T> L(ni, ni);
  std::vector<Vec<T>> rhs(static_cast<std::size_t>(d), Vec<T>(ni, T(0)));
  for (int e = 0; e < g.m(); ++e) {
    auto ed = g.edge(e);
    const T& w = pr.weights[static_cast<std::size_t>(e)];
    int su = slot[static_cast<std::size_t>(ed.u)], sv = slot[static_cast<std::size_t>(ed.v)];
    for (auto [a, sa, b, sb] : {std::tuple{ed.u, su, ed.v, sv}, std::tuple{ed.v, sv, ed.u, su}}) {
      (void)a;
      if (sa < 0) continue;
      L(static_cast<std::size_t>(sa), static_cast<std::size_t>(sa)) += w;
      if (sb >= 0) {
        L(static_cast<std::size_t>(sa), static_cast<std::size_t>(sb)) -= w;
      } else {
        for (int k = 0; k < d; ++k) rhs[static_cast<std::size_t>(k)][static_cast<std::size_t>(sa)] += w * p.at(static_cast<std::size_t>(b), k);
      }
    }
  }
  for (int k = 0; k < d; ++k) {
    auto x = solve_unique(L, rhs[static_cast<std::size_t>(k)]);
    if (!x) throw DomainError("SingularSystem", "interior equilibrium system is singular");
    for (std::size_t i = 0; i < ni; ++i) p.at(static_cast<std::size_t>(interior[i]), k) = (*x)[i];
  }
  return p;
}

template <class T> Vec<T> solve_boundary_stress(const RubberBandProblem<T>& pr, const Configuration<T>& p) {
  const auto& g = pr.graph;
  const int d = pr.d;
  auto isb = pr.is_boundary();
  std::vector<int> unknown;
  for (int e = 0; e < g.m(); ++e) {
    auto ed = g.edge(e);
    if (isb[static_cast<std::size_t>(ed.u)] && isb[static_cast<std::size_t>(ed.v)]) unknown.push_back(e);
  }
  std::vector<int> row_of(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t b = 0; b < pr.boundary.size(); ++b) row_of[static_cast<std::size_t>(pr.boundary[b])] = static_cast<int>(b);
  const std::size_t rows = pr.boundary.size() * static_cast<std::size_t>(d);
  Matrix<T> A(rows, unknown.size());
  Vec<T> rhs(rows, T(0));
  Vec<T> w(static_cast<std::size_t>(g.m()), T(0));
  std::vector<bool> is_unknown(static_cast<std::size_t>(g.m()), false);
  for (std::size_t c = 0; c < unknown.size(); ++c) is_unknown[static_cast<std::size_t>(unknown[c])] = true;
  std::size_t col = 0;
  for (int e = 0; e < g.m(); ++e) {
    auto ed = g.edge(e);
    const std::size_t E = static_cast<std::size_t>(e);
    if (!is_unknown[E]) w[E] = pr.weights[E];
    for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      int r = row_of[static_cast<std::size_t>(a)];
      if (r < 0) continue;
      for (int k = 0; k < d; ++k) {
        T diff = p.at(static_cast<std::size_t>(a), k) - p.at(static_cast<std::size_t>(b), k);
        std::size_t R = static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k);
        if (is_unknown[E]) A(R, col) += diff;
        else rhs[R] -= pr.weights[E] * diff;
      }
    }
    if (is_unknown[E]) ++col;
  }
  auto x = solve_consistent(A, rhs, 1e-9);
  if (!x)
    throw DomainError("Infeasible", "boundary stress has no solution; least-squares residual " +
                                        std::to_string(least_squares_residual(A, rhs)));
  for (std::size_t c = 0; c < unknown.size(); ++c) w[static_cast<std::size_t>(unknown[c])] = (*x)[c];
  return w;
}

template <class T> RubberBandResult<T> algorithm3(const RubberBandProblem<T>& pr, double rel_tol) {
  RubberBandResult<T> r;
  r.warnings = validate(pr).warnings;
  r.config = solve_interior(pr);
  r.stress = solve_boundary_stress(pr, r.config);
  double tol = std::is_same_v<T, Rational> ? 0.0 : 1e3 * rel_tol;
  if (!is_self_stress(pr.graph, r.config, r.stress, tol))
    throw DomainError("Infeasible", "combined coefficients are not in equilibrium");
  r.s = self_stress_basis(pr.graph, r.config, rel_tol).s;
  r.full_support = support(r.stress).size() == static_cast<std::size_t>(pr.graph.m());
  r.extensive = r.s == 1 && r.full_support;
  return r;
}

BoundaryChoice choose_boundary(const Graph& g, int d) {
  BoundaryChoice c;
  const int k = d + 1;
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) return true;
    for (int v = start; v < g.n(); ++v) {
      bool ok = std::all_of(pick.begin(), pick.end(), [&](int u) { return g.adjacent(u, v); });
      if (!ok) continue;
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (rec(0)) {
    c.vertices = pick;
    c.induces_clique = true;
  } else {
    for (int v = 0; v < std::min(k, g.n()); ++v) c.vertices.push_back(v);
  }
  return c;
}

Vec<Rational> sample_weights(const Graph& g, const std::vector<int>& boundary, std::uint64_t seed, bool mixed_sign) {
  Rng rng(derive_seed(seed, "rubber-band-weights"));
  std::vector<bool> isb(static_cast<std::size_t>(g.n()), false);
  for (int v : boundary) isb[static_cast<std::size_t>(v)] = true;
  Vec<Rational> w(static_cast<std::size_t>(g.m()), Rational(0));
  for (int e = 0; e < g.m(); ++e) {
    auto ed = g.edge(e);
    if (isb[static_cast<std::size_t>(ed.u)] && isb[static_cast<std::size_t>(ed.v)]) continue;
    Rational x;
    if (mixed_sign) {
      do x = rng.rational_in(-10, 10, 100);
      while (sgn(x) == 0);
    } else {
      x = rng.rational_in(1, 10, 100);
    }
    w[static_cast<std::size_t>(e)] = x;
  }
  return w;
}

Configuration<Rational> sample_boundary_positions(int d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "rubber-band-boundary"));
  Configuration<Rational> p(d, static_cast<std::size_t>(d + 1));
  do {
    for (auto& c : p.coords) c = rng.rational(kGenericNumBound, kGenericDen);
  } while (affine_span_dimension(p) != static_cast<std::size_t>(d));
  return p;
}

#define SYMSTRESS_INSTANTIATE(T)                                                                      \
  template struct RubberBandProblem<T>;                                                               \
  template ProblemCheck validate(const RubberBandProblem<T>&);                                        \
  template Configuration<T> solve_interior(const RubberBandProblem<T>&);                              \
  template Vec<T> solve_boundary_stress(const RubberBandProblem<T>&, const Configuration<T>&);        \
  template RubberBandResult<T> algorithm3(const RubberBandProblem<T>&, double);

SYMSTRESS_INSTANTIATE(Rational)
SYMSTRESS_INSTANTIATE(double)

}  // namespace symstress

#include "symstress/framework.hpp"

#include "symstress/random.hpp"

#include <stdexcept>

namespace symstress {

Configuration<double> to_double(const Configuration<Rational>& c) {
  Configuration<double> out;
  out.d = c.d;
  out.coords.reserve(c.coords.size());
  for (const auto& x : c.coords) out.coords.push_back(x.get_d());
  return out;
}

template <class T> Matrix<T> rigidity_matrix(const Graph& g, const Configuration<T>& p) {
  if (p.n() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("configuration size mismatch");
  const int d = p.d;
  Matrix<T> r(static_cast<std::size_t>(g.m()), static_cast<std::size_t>(d * g.n()));
  for (int k = 0; k < g.m(); ++k) {
    const auto& e = g.edge(k);
    for (int c = 0; c < d; ++c) {
      T diff = p.at(static_cast<std::size_t>(e.u), c) - p.at(static_cast<std::size_t>(e.v), c);
      r(static_cast<std::size_t>(k), static_cast<std::size_t>(e.u * d + c)) = diff;
      r(static_cast<std::size_t>(k), static_cast<std::size_t>(e.v * d + c)) = -diff;
    }
  }
  return r;
}

template <class T> StressBasis<T> self_stress_basis(const Graph& g, const Configuration<T>& p, double rel_tol) {
  auto ns = left_null_space(rigidity_matrix(g, p), rel_tol);
  StressBasis<T> sb;
  sb.basis = std::move(ns.basis);
  sb.s = sb.basis.size();
  if constexpr (std::is_same_v<T, Rational>) {
    sb.mode = ScalarMode::Rational;
  } else {
    sb.mode = ScalarMode::Float;
    sb.rel_tol = rel_tol;
  }
  return sb;
}

template <class T> std::vector<Vec<T>> trivial_motion_generators(const Configuration<T>& p) {
  const int d = p.d;
  const std::size_t n = p.n();
  std::vector<Vec<T>> gens;
  for (int a = 0; a < d; ++a) {
    Vec<T> t(n * static_cast<std::size_t>(d), T(0));
    for (std::size_t i = 0; i < n; ++i) t[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] = 1;
    gens.push_back(std::move(t));
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Vec<T> u(n * static_cast<std::size_t>(d), T(0));
      for (std::size_t i = 0; i < n; ++i) {
        u[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] = p.at(i, b);
        u[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(b)] = -p.at(i, a);
      }
      gens.push_back(std::move(u));
    }
  return gens;
}

namespace {

template <class T> Matrix<T> rows_to_matrix(const std::vector<Vec<T>>& rows, std::size_t cols) {
  Matrix<T> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

template <class T> std::size_t rank_of(const Matrix<T>& m, double rel_tol) {
  if constexpr (std::is_same_v<T, Rational>)
    return rank_bareiss(m);
  else
    return rank(m, rel_tol);
}

}  // namespace

template <class T> std::size_t trivial_dimension(const Configuration<T>& p, double rel_tol) {
  auto gens = trivial_motion_generators(p);
  if (p.n() == 0) return 0;
  return rank_of(rows_to_matrix(gens, p.coords.size()), rel_tol);
}

template <class T> std::size_t affine_span_dimension(const Configuration<T>& p, double rel_tol) {
  if (p.n() <= 1) return 0;
  Matrix<T> m(p.n() - 1, static_cast<std::size_t>(p.d));
  for (std::size_t i = 1; i < p.n(); ++i)
    for (int c = 0; c < p.d; ++c) m(i - 1, static_cast<std::size_t>(c)) = p.at(i, c) - p.at(0, c);
  return rank_of(m, rel_tol);
}

template <class T> MotionBasis<T> motion_basis(const Graph& g, const Configuration<T>& p, double rel_tol) {
  MotionBasis<T> mb;
  mb.kernel = null_space(rigidity_matrix(g, p), rel_tol).basis;
  auto gens = trivial_motion_generators(p);
  std::vector<Vec<T>> chosen;
  std::size_t have = 0;
  for (auto& v : gens) {
    chosen.push_back(v);
    std::size_t r = rank_of(rows_to_matrix(chosen, p.coords.size()), rel_tol);
    if (r > have) {
      have = r;
      mb.trivial.push_back(v);
    } else {
      chosen.pop_back();
    }
  }
  mb.f = mb.kernel.size() - mb.trivial.size();
  return mb;
}

MaxwellIndex maxwell_index(const Graph& g, int d) { return {d * g.n() - g.m() - d * (d + 1) / 2}; }

Configuration<Rational> random_generic_configuration(int n, int d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "generic-configuration"));
  Configuration<Rational> p(d, static_cast<std::size_t>(n));
  for (auto& x : p.coords) x = rng.rational(kGenericNumBound, kGenericDen);
  return p;
}

GenericCounts generic_counts(const Graph& g, int d, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  GenericCounts best;
  bool first = true;
  for (int t = 0; t < trials; ++t) {
    auto p = random_generic_configuration(g.n(), d, derive_seed(seed, "generic-counts", static_cast<std::uint64_t>(t)));
    std::size_t r = rank_bareiss(rigidity_matrix(g, p));
    if (first || r > best.max_rank) {
      first = false;
      best.max_rank = r;
      std::size_t triv = trivial_dimension(p);
      best.s = g.m() - static_cast<int>(r);
      best.f = d * g.n() - static_cast<int>(r) - static_cast<int>(triv);
    }
  }
  return best;
}

template <class T> std::vector<std::pair<int, int>> coincident_points(const Configuration<T>& p) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      bool same = true;
      for (int c = 0; c < p.d && same; ++c) same = p.at(i, c) == p.at(j, c);
      if (same) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

namespace {

template <class T> int orient(const Configuration<T>& p, int a, int b, int c) {
  auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uc = static_cast<std::size_t>(c);
  T v = (p.at(ub, 0) - p.at(ua, 0)) * (p.at(uc, 1) - p.at(ua, 1)) -
        (p.at(ub, 1) - p.at(ua, 1)) * (p.at(uc, 0) - p.at(ua, 0));
  if constexpr (std::is_same_v<T, Rational>)
    return sgn(v);
  else
    return (v > 0) - (v < 0);
}

// c collinear with segment ab: does c lie within its closed bounding box?
template <class T> bool within(const Configuration<T>& p, int a, int b, int c) {
  for (int k = 0; k < 2; ++k) {
    const T& x = p.at(static_cast<std::size_t>(c), k);
    const T& lo = p.at(static_cast<std::size_t>(a), k);
    const T& hi = p.at(static_cast<std::size_t>(b), k);
    if (lo <= hi ? (x < lo || x > hi) : (x < hi || x > lo)) return false;
  }
  return true;
}

template <class T> bool same_point(const Configuration<T>& p, int a, int b) {
  return p.at(static_cast<std::size_t>(a), 0) == p.at(static_cast<std::size_t>(b), 0) &&
         p.at(static_cast<std::size_t>(a), 1) == p.at(static_cast<std::size_t>(b), 1);
}

}  // namespace

template <class T> CrossingReport count_crossings(const Graph& g, const Configuration<T>& p) {
  if (p.d != 2) throw std::invalid_argument("crossing count needs d = 2");
  CrossingReport rep;
  for (int k = 0; k < g.m(); ++k)
    for (int l = k + 1; l < g.m(); ++l) {
      const auto& e = g.edge(k);
      const auto& f = g.edge(l);
      int a = e.u, b = e.v, c = f.u, d = f.v;
      bool shared = a == c || a == d || b == c || b == d;
      if (shared) {
        // Adjacent edges only meet badly when they fold onto each other.
        int s = (a == c || a == d) ? a : b;
        int x = s == a ? b : a;
        int y = (s == c) ? d : c;
        if (orient(p, s, x, y) == 0) {
          bool same_dir = true;
          for (int q = 0; q < 2; ++q) {
            T dx = p.at(static_cast<std::size_t>(x), q) - p.at(static_cast<std::size_t>(s), q);
            T dy = p.at(static_cast<std::size_t>(y), q) - p.at(static_cast<std::size_t>(s), q);
            if (dx * dy < 0) same_dir = false;
          }
          if (same_dir) ++rep.overlaps;
        }
        continue;
      }
      if (same_point(p, a, c) || same_point(p, a, d) || same_point(p, b, c) || same_point(p, b, d)) {
        ++rep.overlaps;
        continue;
      }
      int o1 = orient(p, a, b, c), o2 = orient(p, a, b, d);
      int o3 = orient(p, c, d, a), o4 = orient(p, c, d, b);
      if (o1 && o2 && o3 && o4) {
        if (o1 != o2 && o3 != o4) ++rep.crossings;
        continue;
      }
      if ((o1 == 0 && within(p, a, b, c)) || (o2 == 0 && within(p, a, b, d)) ||
          (o3 == 0 && within(p, c, d, a)) || (o4 == 0 && within(p, c, d, b)))
        ++rep.overlaps;
    }
  return rep;
}

template <class T> bool is_self_stress(const Graph& g, const Configuration<T>& p, const Vec<T>& w, double tol) {
  auto r = rigidity_matrix(g, p);
  auto v = left_multiply(w, r);
  if constexpr (std::is_same_v<T, Rational>) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  } else {
    double scale = 0;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) scale = std::max(scale, std::abs(r(i, j)));
    return norm2(v) <= tol * std::max(1.0, scale * norm2(w));
  }
}

#define SYMSTRESS_INSTANTIATE(T)                                                                   \
  template Matrix<T> rigidity_matrix(const Graph&, const Configuration<T>&);                       \
  template StressBasis<T> self_stress_basis(const Graph&, const Configuration<T>&, double);        \
  template MotionBasis<T> motion_basis(const Graph&, const Configuration<T>&, double);             \
  template std::vector<Vec<T>> trivial_motion_generators(const Configuration<T>&);                 \
  template std::size_t trivial_dimension(const Configuration<T>&, double);                         \
  template std::size_t affine_span_dimension(const Configuration<T>&, double);                     \
  template std::vector<std::pair<int, int>> coincident_points(const Configuration<T>&);            \
  template CrossingReport count_crossings(const Graph&, const Configuration<T>&);                  \
  template bool is_self_stress(const Graph&, const Configuration<T>&, const Vec<T>&, double);

SYMSTRESS_INSTANTIATE(Rational)
SYMSTRESS_INSTANTIATE(double)

}  // namespace symstress

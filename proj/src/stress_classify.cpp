#include "symstress/stress_classify.hpp"

#include "symstress/random.hpp"

#include <algorithm>
#include <cmath>

namespace symstress {

namespace {

// Subspace accumulator: exact echelon rows, or orthonormal rows in floating mode.
template <class T> class SpanBuilder;

template <> class SpanBuilder<Rational> {
public:
  SpanBuilder(std::size_t dim, double) : rs_(dim) {}
  bool add(const Vec<Rational>& v) { return rs_.add(v); }
  bool contains(const Vec<Rational>& v) const { return rs_.contains(v); }
  std::size_t dimension() const { return rs_.dimension(); }
  std::vector<Vec<Rational>> basis() const { return rs_.basis(); }

private:
  RowSpace rs_;
};

template <> class SpanBuilder<double> {
public:
  SpanBuilder(std::size_t dim, double rel_tol) : dim_(dim), tol_(std::max(rel_tol, 1e-12)) {}
  bool add(const Vec<double>& v) {
    double n0 = norm2(v);
    if (n0 == 0) return false;
    Vec<double> r = residual(v);
    double n1 = norm2(r);
    if (n1 <= 1e3 * tol_ * n0) return false;
    for (auto& x : r) x /= n1;
    rows_.push_back(std::move(r));
    return true;
  }
  bool contains(const Vec<double>& v) const {
    double n0 = norm2(v);
    if (n0 == 0) return true;
    return norm2(residual(v)) <= 1e3 * tol_ * n0;
  }
  std::size_t dimension() const { return rows_.size(); }
  std::vector<Vec<double>> basis() const { return rows_; }

private:
  Vec<double> residual(Vec<double> v) const {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : rows_) {
        double c = dot(q, v);
        for (std::size_t i = 0; i < dim_; ++i) v[i] -= c * q[i];
      }
    return v;
  }
  std::size_t dim_;
  double tol_;
  std::vector<Vec<double>> rows_;
};

template <class T> bool nonzero(const Vec<T>& w) {
  for (const auto& x : w)
    if (!is_zero(x)) return true;
  return false;
}

}  // namespace

template <class T> std::vector<int> support(const Vec<T>& w, double rel_tol) {
  std::vector<int> out;
  if constexpr (std::is_same_v<T, Rational>) {
    (void)rel_tol;
    for (std::size_t e = 0; e < w.size(); ++e)
      if (sgn(w[e]) != 0) out.push_back(static_cast<int>(e));
  } else {
    double tol = rel_tol * norm_inf(w);
    for (std::size_t e = 0; e < w.size(); ++e)
      if (std::abs(w[e]) > tol) out.push_back(static_cast<int>(e));
  }
  return out;
}

template <class T>
StrongLocalisation is_strongly_localised(const Subgroup& group, const Graph& g, const Vec<T>& w, double rel_tol) {
  StrongLocalisation r;
  auto sup = support(w, rel_tol);
  if (sup.empty()) return r;
  r.witness = subgraph_from_edges(g, sup);
  r.orbit = orbit_of_subgraph(group, g, r.witness);
  r.value = group.order() > 1 && r.orbit.disjoint_copies;
  return r;
}

template <class T> bool is_weakly_localised(const Subgroup& group, const Graph& g, const Vec<T>& w, double rel_tol) {
  auto sup = support(w, rel_tol);
  if (sup.empty()) return false;
  std::vector<bool> in(static_cast<std::size_t>(g.m()), false);
  for (int e : sup) in[static_cast<std::size_t>(e)] = true;
  for (const auto& orb : edge_and_vertex_orbits(group, g).edge_orbits) {
    bool all = std::all_of(orb.begin(), orb.end(), [&](int e) { return in[static_cast<std::size_t>(e)]; });
    if (all) return false;
  }
  return true;
}

template <class T>
std::vector<Vec<T>> weakly_localised_span_from(const Subgroup& group, const Graph& g, const std::vector<Vec<T>>& basis,
                                               std::size_t cap, double rel_tol, std::uint64_t order_seed) {
  const std::size_t s = basis.size();
  const std::size_t m = static_cast<std::size_t>(g.m());
  if (s == 0) return {};
  auto orbits = edge_and_vertex_orbits(group, g).edge_orbits;
  double product = 1;
  for (const auto& o : orbits) product *= static_cast<double>(o.size());
  if (product > static_cast<double>(cap))
    throw DomainError("OrbitProductTooLarge", "selection functions exceed the cap of " + std::to_string(cap));
  if (order_seed != 0) {
    Rng rng(order_seed);
    for (auto& o : orbits)
      for (std::size_t i = o.size(); i > 1; --i)
        std::swap(o[i - 1], o[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i - 1)))]);
    for (std::size_t i = orbits.size(); i > 1; --i)
      std::swap(orbits[i - 1], orbits[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i - 1)))]);
  }
  SpanBuilder<T> span(m, rel_tol);
  std::vector<std::size_t> pick(orbits.size(), 0);
  while (true) {
    Matrix<T> con(orbits.size(), s);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (std::size_t j = 0; j < s; ++j) con(o, j) = basis[j][static_cast<std::size_t>(orbits[o][pick[o]])];
    for (const auto& c : null_space(con, rel_tol).basis) {
      Vec<T> w(m, T(0));
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t e = 0; e < m; ++e) w[e] += c[j] * basis[j][e];
      span.add(w);
    }
    if (span.dimension() == s) break;
    std::size_t o = 0;
    while (o < orbits.size() && ++pick[o] == orbits[o].size()) pick[o++] = 0;
    if (o == orbits.size()) break;
  }
  return span.basis();
}

template <class T>
std::vector<Vec<T>> weakly_localised_span(const Subgroup& group, const Graph& g, const Configuration<T>& p,
                                          std::size_t cap, double rel_tol) {
  auto sb = self_stress_basis(g, p, rel_tol);
  return weakly_localised_span_from(group, g, sb.basis, cap, rel_tol, 0);
}

template <class T> bool in_span(const std::vector<Vec<T>>& span, const Vec<T>& w, double rel_tol) {
  SpanBuilder<T> b(w.size(), rel_tol);
  for (const auto& v : span) b.add(v);
  return b.contains(w);
}

template <class T>
bool is_gamma_extensive(const Subgroup& group, const Graph& g, const Configuration<T>& p, const Vec<T>& w,
                        std::size_t cap, double rel_tol) {
  if (!nonzero(w)) return false;
  return !in_span(weakly_localised_span(group, g, p, cap, rel_tol), w, rel_tol);
}

template <class T> ExtensiveVerdict<T> is_extensive(const Graph& g, const Configuration<T>& p, double rel_tol) {
  ExtensiveVerdict<T> v;
  auto sb = self_stress_basis(g, p, rel_tol);
  v.s = sb.s;
  if (sb.s == 1) {
    v.witness = sb.basis.front();
    v.extensive = support(v.witness).size() == static_cast<std::size_t>(g.m());
  }
  return v;
}

template <class T>
StressClassification<T> classify(const Subgroup& group, const Graph& g, const Configuration<T>& p, std::size_t cap,
                                 double rel_tol) {
  StressClassification<T> c;
  auto sb = self_stress_basis(g, p, rel_tol);
  c.s = sb.s;
  c.group_order = group.order();
  c.rank_rel_tol = std::is_same_v<T, Rational> ? 0.0 : rel_tol;
  c.support_rel_tol = std::is_same_v<T, Rational> ? 0.0 : kSupportRelTol;
  auto weak = weakly_localised_span_from(group, g, sb.basis, cap, rel_tol, 0);
  c.weak_span_dim = weak.size();
  c.gamma_extensive_dim = c.s - c.weak_span_dim;
  for (const auto& w : sb.basis) {
    typename StressClassification<T>::PerStress ps;
    ps.stress = w;
    ps.support = support(w);
    auto strong = is_strongly_localised(group, g, w);
    ps.strongly_localised = strong.value;
    ps.witness = strong.witness;
    ps.weakly_localised = is_weakly_localised(group, g, w);
    ps.gamma_extensive = nonzero(w) && !in_span(weak, w, rel_tol);
    c.stresses.push_back(std::move(ps));
  }
  c.extensive = c.s == 1 && c.stresses.front().support.size() == static_cast<std::size_t>(g.m());
  return c;
}

#define SYMSTRESS_INSTANTIATE(T)                                                                                    \
  template std::vector<int> support(const Vec<T>&, double);                                                         \
  template StrongLocalisation is_strongly_localised(const Subgroup&, const Graph&, const Vec<T>&, double);          \
  template bool is_weakly_localised(const Subgroup&, const Graph&, const Vec<T>&, double);                          \
  template std::vector<Vec<T>> weakly_localised_span(const Subgroup&, const Graph&, const Configuration<T>&,        \
                                                     std::size_t, double);                                          \
  template std::vector<Vec<T>> weakly_localised_span_from(const Subgroup&, const Graph&, const std::vector<Vec<T>>&, \
                                                          std::size_t, double, std::uint64_t);                      \
  template bool in_span(const std::vector<Vec<T>>&, const Vec<T>&, double);                                         \
  template bool is_gamma_extensive(const Subgroup&, const Graph&, const Configuration<T>&, const Vec<T>&,           \
                                   std::size_t, double);                                                            \
  template ExtensiveVerdict<T> is_extensive(const Graph&, const Configuration<T>&, double);                         \
  template StressClassification<T> classify(const Subgroup&, const Graph&, const Configuration<T>&, std::size_t,    \
                                            double);

SYMSTRESS_INSTANTIATE(Rational)
SYMSTRESS_INSTANTIATE(double)

}  // namespace symstress

#include "symstress/pure_condition.hpp"

#include "symstress/maxwell.hpp"
#include "symstress/parallel.hpp"
#include "symstress/random.hpp"
#include "symstress/stress_classify.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace symstress {

namespace {

constexpr std::int64_t kSampleNumBound = 1000;
constexpr std::int64_t kSampleDen = 100;

MultiPoly var(int n, int v) { return MultiPoly::variable(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(v)); }
MultiPoly X(int n, int i) { return var(n, 2 * i); }
MultiPoly Y(int n, int i) { return var(n, 2 * i + 1); }

std::vector<Rational> as_point(const Configuration<Rational>& p) { return p.coords; }

Configuration<Rational> random_config(int n, Rng& rng) {
  Configuration<Rational> p(2, static_cast<std::size_t>(n));
  for (auto& c : p.coords) c = rng.rational(kSampleNumBound, kSampleDen);
  return p;
}

// Rational in (0,1) or (1,2) avoiding the degenerate values 0 and 1.
Rational random_ratio(Rng& rng) {
  Rational t;
  do t = rng.rational(200, 100);
  while (sgn(t) == 0 || t == 1);
  return t;
}

// The calibration factor in K3 variables (x1,y1,x2,y2,...), tie (0,1).
const MultiPoly& calibration_factor() {
  static MultiPoly factor = [] {
    Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    MultiPoly d = tied_down_determinant(k3, 0, 1);
    auto q = d.divide_exact(bracket(3, 0, 1, 2));
    if (!q) throw DomainError("TieDownDivisionFailed", "calibration on K3 did not isolate the bracket");
    return *q;
  }();
  return factor;
}

MultiPoly transplant_calibration(int n, int a, int b) {
  const MultiPoly& f = calibration_factor();
  MultiPoly r(static_cast<std::size_t>(2 * n));
  const std::size_t target[4] = {static_cast<std::size_t>(2 * a), static_cast<std::size_t>(2 * a + 1),
                                 static_cast<std::size_t>(2 * b), static_cast<std::size_t>(2 * b + 1)};
  for (const auto& [m, c] : f.terms()) {
    Monomial t;
    t.deg = m.deg;
    for (std::size_t i = 0; i < 4; ++i) t.e[target[i]] = m.e[i];
    for (std::size_t i = 4; i < 6; ++i)
      if (m.e[i]) throw DomainError("TieDownDivisionFailed", "calibration factor involves an untied vertex");
    r.add_term(t, c);
  }
  return r;
}

struct Candidate {
  FactorKind kind;
  std::array<int, 3> triple{};
  std::array<std::pair<int, int>, 3> lines{};
  MultiPoly poly;
};

std::vector<Candidate> geometric_candidates(int n) {
  std::vector<Candidate> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Candidate c{FactorKind::Collinear, {i, j, k}, {}, bracket(n, i, j, k).primitive_part()};
        out.push_back(std::move(c));
      }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto disjoint = [](std::pair<int, int> a, std::pair<int, int> b) {
    return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second;
  };
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (!disjoint(pairs[a], pairs[b])) continue;
      for (std::size_t c = b + 1; c < pairs.size(); ++c) {
        if (!disjoint(pairs[a], pairs[c]) || !disjoint(pairs[b], pairs[c])) continue;
        std::array<std::pair<int, int>, 3> l{pairs[a], pairs[b], pairs[c]};
        out.push_back({FactorKind::Concurrent, {}, l, concurrency(n, l).primitive_part()});
      }
    }
  return out;
}

Configuration<Rational> construct_collinear(int n, std::array<int, 3> t, Rng& rng) {
  auto p = random_config(n, rng);
  Rational s = random_ratio(rng);
  for (int k = 0; k < 2; ++k)
    p.at(static_cast<std::size_t>(t[2]), k) =
        p.at(static_cast<std::size_t>(t[0]), k) +
        s * (p.at(static_cast<std::size_t>(t[1]), k) - p.at(static_cast<std::size_t>(t[0]), k));
  return p;
}

Configuration<Rational> construct_concurrent(int n, const std::array<std::pair<int, int>, 3>& lines, Rng& rng) {
  auto p = random_config(n, rng);
  Rational cx = rng.rational(kSampleNumBound, kSampleDen), cy = rng.rational(kSampleNumBound, kSampleDen);
  for (const auto& [u, v] : lines) {
    Rational s = random_ratio(rng);
    auto U = static_cast<std::size_t>(u), V = static_cast<std::size_t>(v);
    p.at(V, 0) = p.at(U, 0) + s * (cx - p.at(U, 0));
    p.at(V, 1) = p.at(U, 1) + s * (cy - p.at(U, 1));
  }
  return p;
}

Configuration<Rational> construct(const Candidate& c, int n, Rng& rng) {
  return c.kind == FactorKind::Collinear ? construct_collinear(n, c.triple, rng) : construct_concurrent(n, c.lines, rng);
}

Configuration<Rational> point_to_config(const std::vector<Rational>& x) {
  Configuration<Rational> p(2, x.size() / 2);
  p.coords = x;
  return p;
}

// Real roots of a univariate polynomial (constant first), Newton-polished.
std::vector<double> real_roots(const std::vector<Rational>& c) {
  std::vector<double> out;
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return out;
  std::vector<double> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = c[i].get_d();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -a[static_cast<std::size_t>(i)] / a.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (int i = 0; i < deg; ++i) {
    auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) > 1e-7 * (1 + std::abs(z.real()))) continue;
    long double x = z.real();
    for (int it = 0; it < 50; ++it) {
      long double f = 0, df = 0;
      for (int k = deg; k >= 0; --k) {
        df = df * x + f;
        f = f * x + a[static_cast<std::size_t>(k)];
      }
      if (df == 0) break;
      long double step = f / df;
      x -= step;
      if (std::abs(step) <= 1e-18L * (1 + std::abs(x))) break;
    }
    out.push_back(static_cast<double>(x));
  }
  return out;
}

template <class T> bool stress_is_orbit_constant(const Subgroup& group, const Graph& g, const Vec<T>& w) {
  double tol = 1e-8 * norm_inf(w);
  for (const auto& orb : edge_and_vertex_orbits(group, g).edge_orbits)
    for (int e : orb) {
      if constexpr (std::is_same_v<T, Rational>) {
        if (w[static_cast<std::size_t>(e)] != w[static_cast<std::size_t>(orb.front())]) return false;
      } else {
        if (std::abs(w[static_cast<std::size_t>(e)] - w[static_cast<std::size_t>(orb.front())]) > tol) return false;
      }
    }
  return true;
}

std::vector<int> union_support(const std::vector<Vec<Rational>>& basis) {
  std::set<int> s;
  for (const auto& w : basis)
    for (int e : support(w)) s.insert(e);
  return {s.begin(), s.end()};
}

std::vector<int> union_support(const std::vector<Vec<double>>& basis) {
  std::set<int> s;
  for (const auto& w : basis)
    for (int e : support(w, kSupportRelTol)) s.insert(e);
  return {s.begin(), s.end()};
}

std::pair<std::size_t, std::vector<int>> stress_signature(const Graph& g, const SampledConfiguration& c) {
  if (c.is_exact()) {
    auto sb = self_stress_basis(g, *c.exact);
    return {sb.s, union_support(sb.basis)};
  }
  auto sb = self_stress_basis(g, c.approx, kDefaultRelTol);
  return {sb.s, union_support(sb.basis)};
}

}  // namespace

const char* provenance_name(Provenance p) {
  return p == Provenance::GeometricCandidate ? "geometric-candidate" : "residual-unfactored";
}

const char* factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Collinear: return "collinear";
    case FactorKind::Concurrent: return "concurrent";
    default: return "residual";
  }
}

std::string Factor::describe() const {
  std::ostringstream os;
  if (kind == FactorKind::Collinear) {
    os << "[" << triple[0] + 1 << " " << triple[1] + 1 << " " << triple[2] + 1 << "]";
  } else if (kind == FactorKind::Concurrent) {
    os << "concurrent(";
    for (std::size_t i = 0; i < 3; ++i)
      os << (i ? " " : "") << lines[i].first + 1 << "-" << lines[i].second + 1;
    os << ")";
  } else {
    os << "residual(degree " << poly.total_degree() << ")";
  }
  if (multiplicity > 1) os << "^" << multiplicity;
  return os.str();
}

MultiPoly bracket(int n, int i, int j, int k) {
  return (X(n, j) - X(n, i)) * (Y(n, k) - Y(n, i)) - (Y(n, j) - Y(n, i)) * (X(n, k) - X(n, i));
}

MultiPoly concurrency(int n, std::array<std::pair<int, int>, 3> lines) {
  std::array<std::array<MultiPoly, 3>, 3> L;
  for (std::size_t r = 0; r < 3; ++r) {
    auto [i, j] = lines[r];
    L[r][0] = Y(n, i) - Y(n, j);
    L[r][1] = X(n, j) - X(n, i);
    L[r][2] = X(n, i) * Y(n, j) - X(n, j) * Y(n, i);
  }
  return L[0][0] * (L[1][1] * L[2][2] - L[1][2] * L[2][1]) - L[0][1] * (L[1][0] * L[2][2] - L[1][2] * L[2][0]) +
         L[0][2] * (L[1][0] * L[2][1] - L[1][1] * L[2][0]);
}

MultiPoly tied_down_determinant(const Graph& g, int a, int b) {
  const int n = g.n();
  if (n > kPureConditionMaxVertices)
    throw DomainError("ResourceLimit", "pure condition is limited to " + std::to_string(kPureConditionMaxVertices) +
                                           " vertices");
  std::vector<int> cols;
  for (int c = 0; c < 2 * n; ++c)
    if (c != 2 * a && c != 2 * a + 1 && c != 2 * b) cols.push_back(c);
  const std::size_t m = static_cast<std::size_t>(g.m());
  if (cols.size() != m) throw DomainError("NotIsostatic", "tied-down matrix is not square");
  std::vector<int> pos(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t k = 0; k < cols.size(); ++k) pos[static_cast<std::size_t>(cols[k])] = static_cast<int>(k);

  // Row r has entries at columns of its two endpoints.
  std::vector<std::vector<std::pair<int, MultiPoly>>> rows(m);
  for (std::size_t r = 0; r < m; ++r) {
    auto e = g.edge(static_cast<int>(r));
    MultiPoly dx = X(n, e.u) - X(n, e.v), dy = Y(n, e.u) - Y(n, e.v);
    std::pair<int, MultiPoly> cand[4] = {{2 * e.u, dx}, {2 * e.u + 1, dy}, {2 * e.v, -dx}, {2 * e.v + 1, -dy}};
    for (auto& [c, poly] : cand)
      if (pos[static_cast<std::size_t>(c)] >= 0) rows[r].emplace_back(pos[static_cast<std::size_t>(c)], poly);
  }
  std::unordered_map<std::uint32_t, MultiPoly> level{{0u, MultiPoly::constant(static_cast<std::size_t>(2 * n), 1)}};
  for (std::size_t r = 0; r < m; ++r) {
    std::unordered_map<std::uint32_t, MultiPoly> next;
    for (const auto& [mask, poly] : level)
      for (const auto& [c, entry] : rows[r]) {
        std::uint32_t bit = 1u << c;
        if (mask & bit) continue;
        int above = std::popcount(mask >> (c + 1));
        MultiPoly term = poly * entry;
        auto& slot = next[mask | bit];
        if (slot.nvars() == 0) slot = MultiPoly(static_cast<std::size_t>(2 * n));
        if (above % 2) slot -= term;
        else slot += term;
      }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    level = std::move(next);
  }
  auto it = level.find(static_cast<std::uint32_t>((1ull << m) - 1));
  return it == level.end() ? MultiPoly(static_cast<std::size_t>(2 * n)) : it->second;
}

void require_isostatic(const Graph& g) {
  const int target = 2 * g.n() - 3;
  if (g.n() < 2 || g.m() != target)
    throw DomainError("NotIsostatic", "edge count " + std::to_string(g.m()) + " differs from 2n-3 = " +
                                          std::to_string(target));
  auto gc = generic_counts(g, 2, 3, 7);
  if (static_cast<int>(gc.max_rank) != target)
    throw DomainError("NotIsostatic", "generic rank " + std::to_string(gc.max_rank) + " is below 2n-3");
}

MultiPoly pure_condition(const Graph& g, std::optional<std::pair<int, int>> tie) {
  require_isostatic(g);
  int a = 0, b = -1;
  if (tie) {
    std::tie(a, b) = *tie;
  } else {
    auto nb = g.neighbours(0);
    b = *std::min_element(nb.begin(), nb.end());
  }
  if (!g.adjacent(a, b)) throw DomainError("TieDownDivisionFailed", "tie-down vertices must be adjacent");
  MultiPoly d = tied_down_determinant(g, a, b);
  if (d.is_zero()) throw DomainError("NotIsostatic", "tied-down determinant vanishes identically");
  auto q = d.divide_exact(transplant_calibration(g.n(), a, b));
  if (!q) throw DomainError("TieDownDivisionFailed", "tie-down factor does not divide the determinant");
  return q->primitive_part();
}

FactorList factorize(const MultiPoly& p, std::uint64_t seed) {
  FactorList fl;
  if (p.is_zero()) {
    fl.content = 0;
    fl.verified = true;
    return fl;
  }
  const int n = static_cast<int>(p.nvars() / 2);
  MultiPoly rest = p.primitive_part();
  fl.content = p.leading_coefficient() / rest.leading_coefficient();
  Rng rng(derive_seed(seed, "factorize"));

  for (const auto& cand : geometric_candidates(n)) {
    if (rest.is_constant()) break;
    if (cand.poly.total_degree() > rest.total_degree()) continue;
    int mult = 0;
    while (!rest.is_constant()) {
      auto x = as_point(construct(cand, n, rng));
      if (sgn(rest.evaluate(x)) != 0) break;
      auto q = rest.divide_exact(cand.poly);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult) {
      Factor f;
      f.poly = cand.poly;
      f.multiplicity = mult;
      f.provenance = Provenance::GeometricCandidate;
      f.kind = cand.kind;
      f.triple = cand.triple;
      f.lines = cand.lines;
      fl.factors.push_back(std::move(f));
    }
  }

  if (!rest.is_constant()) {
    MultiPoly prim = rest.primitive_part();
    fl.content *= rest.leading_coefficient() / prim.leading_coefficient();
    rest = std::move(prim);
    Factor f;
    f.poly = rest;
    for (unsigned k = static_cast<unsigned>(rest.total_degree()); k >= 2; --k) {
      if (rest.total_degree() % static_cast<int>(k)) continue;
      if (auto r = rest.nth_root(k)) {
        f.poly = std::move(*r);
        f.multiplicity = static_cast<int>(k);
        break;
      }
    }
    f.provenance = Provenance::ResidualUnfactored;
    f.kind = FactorKind::Residual;
    // Irreducibility evidence from restrictions to random rational lines.
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<Rational> base(f.poly.nvars()), dir(f.poly.nvars());
      for (auto& v : base) v = rng.rational(kSampleNumBound, kSampleDen);
      for (auto& v : dir) v = rng.rational(kSampleNumBound, kSampleDen);
      auto uni = f.poly.restrict_to_line(base, dir);
      if (static_cast<int>(uni.size()) - 1 != f.poly.total_degree()) continue;
      auto ev = univariate_irreducibility(uni);
      bool better = !f.evidence || (ev.certified && !f.evidence->certified);
      if (better) f.evidence = ev;
      if (ev.certified) break;
    }
    fl.factors.push_back(std::move(f));
  } else {
    fl.content *= rest.leading_coefficient();
  }
  fl.verified = expand(fl) == p;
  return fl;
}

MultiPoly expand(const FactorList& fl) {
  std::size_t nv = fl.factors.empty() ? 0 : fl.factors.front().poly.nvars();
  MultiPoly r = MultiPoly::constant(nv, fl.content);
  for (const auto& f : fl.factors) r = r * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

VarietySample sample_variety(const Factor& f, int n, std::uint64_t seed) {
  if (f.kind == FactorKind::Residual) return sample_variety(f.poly, seed);
  Rng rng(derive_seed(seed, "sample-variety"));
  Candidate c{f.kind, f.triple, f.lines, f.poly};
  VarietySample s;
  s.seed = seed;
  s.construction = f.kind == FactorKind::Collinear ? "collinear-triple" : "concurrent-lines";
  s.config.exact = construct(c, n, rng);
  s.config.approx = to_double(*s.config.exact);
  s.residual = std::abs(f.poly.evaluate(s.config.exact->coords).get_d());
  s.scale = f.poly.evaluate_abs(s.config.approx.coords);
  return s;
}

VarietySample sample_variety(const MultiPoly& f, std::uint64_t seed) {
  if (f.is_constant()) throw DomainError("NoRealPointFound", "constant polynomial has no variety to sample");
  const int n = static_cast<int>(f.nvars() / 2);
  Rng rng(derive_seed(seed, "sample-variety"));
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (f.degree_in(v) >= 1) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f.degree_in(a) < f.degree_in(b); });
  VarietySample s;
  s.seed = seed;
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    std::vector<Rational> x(f.nvars());
    for (auto& v : x) v = rng.rational(kSampleNumBound, kSampleDen);
    for (std::size_t v : order) {
      if (f.degree_in(v) != 1) break;
      auto c = f.restrict_to(v, x);
      if (c.size() != 2) continue;
      x[v] = -c[0] / c[1];
      s.construction = "linear-solve";
      s.config.exact = point_to_config(x);
      s.config.approx = to_double(*s.config.exact);
      s.residual = std::abs(f.evaluate(x).get_d());
      s.scale = f.evaluate_abs(s.config.approx.coords);
      return s;
    }
    std::size_t v = order.front();
    for (std::size_t w : order)
      if (f.degree_in(w) >= 2) {
        v = w;
        break;
      }
    auto roots = real_roots(f.restrict_to(v, x));
    if (roots.empty()) continue;
    Configuration<double> p(2, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < x.size(); ++i) p.coords[i] = x[i].get_d();
    p.coords[v] = roots.front();
    double res = std::abs(f.evaluate(p.coords));
    double scale = f.evaluate_abs(p.coords);
    if (res > kVarietyRelTol * scale) continue;
    s.construction = "root-finding";
    s.config.approx = p;
    s.residual = res;
    s.scale = scale;
    return s;
  }
  throw DomainError("NoRealPointFound", "no real point found after " + std::to_string(kSampleRetries) + " retries");
}

StressProfile factor_stress_profile(const Graph& g, const Factor& f, int trials, std::uint64_t seed) {
  StressProfile prof;
  std::map<std::pair<std::size_t, std::vector<int>>, int> votes;
  for (int t = 0; t < trials; ++t) {
    auto smp = sample_variety(f, g.n(), derive_seed(seed, "profile", static_cast<std::uint64_t>(t)));
    auto sig = stress_signature(g, smp.config);
    prof.trials.push_back(sig);
    ++votes[sig];
  }
  int best = -1;
  for (const auto& [sig, count] : votes)
    if (count > best) {
      best = count;
      prof.dim = sig.first;
      prof.support = sig.second;
    }
  prof.stable = votes.size() <= 1;
  prof.full_support = prof.support.size() == static_cast<std::size_t>(g.m());
  return prof;
}

Algorithm2Report algorithm2(const Graph& g, std::uint64_t seed, int trials, std::optional<std::pair<int, int>> tie) {
  Algorithm2Report rep;
  rep.condition = pure_condition(g, tie);
  rep.factors = factorize(rep.condition, seed);
  for (std::size_t i = 0; i < rep.factors.factors.size(); ++i) {
    Algorithm2Entry e;
    e.factor = rep.factors.factors[i];
    e.profile = factor_stress_profile(g, e.factor, trials, derive_seed(seed, "algorithm2", i));
    e.extensive = e.profile.dim == 1 && e.profile.full_support;
    if (e.extensive) rep.failure = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

SampledConfiguration averaged(const SymmetryPair& pair, const SampledConfiguration& c) {
  SampledConfiguration out;
  if (c.is_exact() && pair.exact()) {
    out.exact = average(pair, *c.exact);
    out.approx = to_double(*out.exact);
  } else {
    out.approx = average(pair, c.approx);
  }
  return out;
}

bool vanishes(const MultiPoly& f, const SampledConfiguration& c) {
  if (c.is_exact()) return sgn(f.evaluate(c.exact->coords)) == 0;
  return std::abs(f.evaluate(c.approx.coords)) <= kVarietyRelTol * f.evaluate_abs(c.approx.coords);
}

}  // namespace

bool averaging_invariance(const Graph& g, const Factor& f, const SymmetryPair& pair, int trials, std::uint64_t seed) {
  if (pair.group.order() == 1) return true;
  for (int t = 0; t < trials; ++t) {
    auto smp = sample_variety(f, g.n(), derive_seed(seed, "averaging-invariance", static_cast<std::uint64_t>(t)));
    if (!vanishes(f.poly, averaged(pair, smp.config))) return false;
  }
  return true;
}

Algorithm4Report algorithm4(const Graph& g, std::uint64_t seed, int trials, int jobs) {
  std::vector<SymmetryPair> pairs;
  for (const auto& e : algorithm1(g, {false, jobs}))
    if (e.pair.group.order() > 1) pairs.push_back(e.pair);
  return algorithm4(g, pairs, seed, trials, jobs);
}

Algorithm4Report algorithm4(const Graph& g, const std::vector<SymmetryPair>& pairs, std::uint64_t seed, int trials,
                            int jobs) {
  Algorithm4Report rep;
  rep.alg2 = algorithm2(g, seed);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi)
    for (std::size_t fi = 0; fi < rep.alg2.entries.size(); ++fi)
      if (rep.alg2.entries[fi].extensive) work.emplace_back(pi, fi);
  rep.pairs_tested = pairs.size();

  auto results = parallel_map<std::optional<Algorithm4Hit>>(work.size(), jobs, [&](std::size_t w) {
    auto [pi, fi] = work[w];
    const auto& pair = pairs[pi];
    const auto& f = rep.alg2.entries[fi].factor;
    std::uint64_t s = derive_seed(seed, "algorithm4", w);
    std::optional<Algorithm4Hit> hit;
    if (!averaging_invariance(g, f, pair, trials, s)) return hit;
    Algorithm4Hit h;
    h.pair = pair;
    h.factor_index = fi;
    h.certificate = averaged(pair, sample_variety(f, g.n(), derive_seed(s, "certificate")).config);
    if (h.certificate.is_exact()) {
      auto sb = self_stress_basis(g, *h.certificate.exact);
      h.s = sb.s;
      if (sb.s == 1) {
        const auto& w1 = sb.basis.front();
        h.full_support = support(w1).size() == static_cast<std::size_t>(g.m());
        h.orbit_constant = stress_is_orbit_constant(pair.group, g, w1);
        double mx = 0;
        for (const auto& x : w1) mx = std::max(mx, std::abs(x.get_d()));
        for (const auto& x : w1) h.stress.push_back(x.get_d() / mx);
      }
    } else {
      auto sb = self_stress_basis(g, h.certificate.approx, kDefaultRelTol);
      h.s = sb.s;
      if (sb.s == 1) {
        const auto& w1 = sb.basis.front();
        h.full_support = support(w1, kSupportRelTol).size() == static_cast<std::size_t>(g.m());
        h.orbit_constant = stress_is_orbit_constant(pair.group, g, w1);
        double mx = norm_inf(w1);
        for (double x : w1) h.stress.push_back(x / mx);
      }
    }
    if (!h.stress.empty()) {
      // Fix the sign so the largest entry is positive.
      auto it = std::max_element(h.stress.begin(), h.stress.end(),
                                 [](double a, double b) { return std::abs(a) < std::abs(b); });
      if (*it < 0)
        for (auto& x : h.stress) x = -x;
    }
    hit = std::move(h);
    return hit;
  });
  for (auto& r : results)
    if (r && r->s == 1 && r->full_support) rep.hits.push_back(std::move(*r));
  rep.failure = rep.hits.empty();
  return rep;
}

}  // namespace symstress

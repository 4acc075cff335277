#include "fixtures.hpp"

#include "symstress/pure_condition.hpp"
#include "symstress/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace symstress;

namespace {

std::vector<Rational> flat(const Configuration<Rational>& p) { return p.coords; }

// Oracle: numeric tied-down minor by the exact Bareiss determinant.
Rational numeric_tied_minor(const Graph& g, const Configuration<Rational>& p, int a, int b) {
  auto r = rigidity_matrix(g, p);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < r.cols(); ++c)
    if (c != static_cast<std::size_t>(2 * a) && c != static_cast<std::size_t>(2 * a + 1) &&
        c != static_cast<std::size_t>(2 * b))
      keep.push_back(c);
  Matrix<Rational> m(r.rows(), keep.size());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t k = 0; k < keep.size(); ++k) m(i, k) = r(i, keep[k]);
  return determinant(m);
}

// Oracle: Leibniz expansion over all permutations of a square polynomial matrix.
MultiPoly leibniz(const std::vector<std::vector<MultiPoly>>& a, std::size_t nv) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(nv);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    MultiPoly t = MultiPoly::constant(nv, inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) t = t * a[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Graph strip(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 2);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("K3 tied-down minor matches the Leibniz oracle") {
  Graph g = fx::k3();
  const std::size_t nv = 6;
  auto X = [&](int i) { return MultiPoly::variable(nv, static_cast<std::size_t>(2 * i)); };
  auto Y = [&](int i) { return MultiPoly::variable(nv, static_cast<std::size_t>(2 * i + 1)); };
  // Full 3x6 rigidity matrix with symbolic entries, columns x1 y1 x2 dropped.
  std::vector<std::vector<MultiPoly>> rows;
  for (const auto& e : g.edges()) {
    std::vector<MultiPoly> full(6, MultiPoly(nv));
    full[static_cast<std::size_t>(2 * e.u)] = X(e.u) - X(e.v);
    full[static_cast<std::size_t>(2 * e.u + 1)] = Y(e.u) - Y(e.v);
    full[static_cast<std::size_t>(2 * e.v)] = X(e.v) - X(e.u);
    full[static_cast<std::size_t>(2 * e.v + 1)] = Y(e.v) - Y(e.u);
    rows.push_back({full[3], full[4], full[5]});
  }
  CHECK(tied_down_determinant(g, 0, 1) == leibniz(rows, nv));
}

TEST_CASE("K3 pure condition is the bracket") {
  auto c = pure_condition(fx::k3());
  auto br = bracket(3, 0, 1, 2);
  CHECK((c == br || c == -br));
  CHECK(c.to_string(configuration_variable_names(3)) == "x1*y2 - x1*y3 - y1*x2 + y1*x3 + x2*y3 - y2*x3");
}

TEST_CASE("tied-down minor agrees with numeric determinants") {
  for (const Graph& g : {fx::prism(), fx::fig12()}) {
    auto poly = tied_down_determinant(g, 0, g.neighbours(0).front());
    for (std::uint64_t s = 0; s < 5; ++s) {
      auto p = random_generic_configuration(g.n(), 2, derive_seed(3, "tied", s));
      CHECK(poly.evaluate(flat(p)) == numeric_tied_minor(g, p, 0, g.neighbours(0).front()));
    }
  }
}

TEST_CASE("pure condition does not depend on the tie-down") {
  Graph k = fx::k3();
  auto base = pure_condition(k);
  CHECK(pure_condition(k, std::pair{1, 2}) == base);
  CHECK(pure_condition(k, std::pair{2, 0}) == base);
  Graph g = fx::prism();
  auto c = pure_condition(g);
  CHECK(pure_condition(g, std::pair{4, 5}) == c);
  CHECK(pure_condition(g, std::pair{2, 5}) == c);
}

TEST_CASE("frozen prism and seven-vertex sizes") {
  auto c = pure_condition(fx::prism());
  CHECK(c.size() == 1290);
  CHECK(c.total_degree() == 8);
  auto d = pure_condition(fx::fig12());
  CHECK(d.size() == 8046);
  CHECK(d.total_degree() == 10);
}

TEST_CASE("pure condition transforms by a power of the determinant") {
  Graph g = fx::prism();
  auto c = pure_condition(g);
  const int k = c.total_degree() / 2;
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    Rational a = rng.rational(9, 4), b = rng.rational(9, 4), cc = rng.rational(9, 4), d = rng.rational(9, 4);
    Rational tx = rng.rational(9, 4), ty = rng.rational(9, 4);
    Rational det = a * d - b * cc;
    if (det == 0) continue;
    auto p = random_generic_configuration(6, 2, derive_seed(5, "affine", static_cast<std::uint64_t>(t)));
    auto q = p;
    for (std::size_t i = 0; i < 6; ++i) {
      q.at(i, 0) = a * p.at(i, 0) + b * p.at(i, 1) + tx;
      q.at(i, 1) = cc * p.at(i, 0) + d * p.at(i, 1) + ty;
    }
    Rational scale = 1;
    for (int j = 0; j < k; ++j) scale *= det;
    CHECK(c.evaluate(flat(q)) == scale * c.evaluate(flat(p)));
  }
}

TEST_CASE("vanishing matches the existence of a stress") {
  Graph g = fx::prism();
  auto c = pure_condition(g);
  CHECK(c.evaluate(flat(fx::prism_desargues())) == 0);
  CHECK(self_stress_basis(g, fx::prism_desargues()).s == 1);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto p = random_generic_configuration(6, 2, derive_seed(9, "vanish", s));
    CHECK((c.evaluate(flat(p)) == 0) == (self_stress_basis(g, p).s >= 1));
  }
}

TEST_CASE("brackets and concurrency") {
  auto p = fx::prism_desargues();
  CHECK(bracket(6, 0, 1, 2).evaluate(flat(p)) == 24);  // twice the area of the outer triangle
  CHECK(concurrency(6, {std::pair{0, 3}, std::pair{1, 4}, std::pair{2, 5}}).evaluate(flat(p)) == 0);
  CHECK(concurrency(6, {std::pair{0, 3}, std::pair{1, 4}, std::pair{2, 5}}).evaluate(flat(fx::prism_average_input())) !=
        0);
}

TEST_CASE("prism factorisation") {
  auto c = pure_condition(fx::prism());
  auto fl = factorize(c);
  CHECK(fl.verified);
  CHECK(expand(fl) == c);
  REQUIRE(fl.factors.size() == 3);
  std::vector<std::string> names;
  for (const auto& f : fl.factors) names.push_back(f.describe());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"[1 2 3]", "[4 5 6]", "concurrent(1-4 2-5 3-6)"});
}

TEST_CASE("seven-vertex factorisation has an irreducible residual") {
  auto c = pure_condition(fx::fig12());
  auto fl = factorize(c);
  CHECK(fl.verified);
  CHECK(expand(fl) == c);
  int residuals = 0;
  for (const auto& f : fl.factors) {
    if (f.kind != FactorKind::Residual) continue;
    ++residuals;
    CHECK(f.poly.total_degree() == 6);
    REQUIRE(f.evidence);
    CHECK(f.evidence->certified);
  }
  CHECK(residuals == 1);
}

TEST_CASE("repeated factors are detected") {
  auto b = bracket(4, 0, 1, 2), e = bracket(4, 1, 2, 3);
  auto fl = factorize(b * b * e);
  CHECK(fl.verified);
  REQUIRE(fl.factors.size() == 2);
  int total = 0;
  for (const auto& f : fl.factors) total += f.multiplicity;
  CHECK(total == 3);
}

TEST_CASE("variety samples lie on their factor") {
  auto fl = factorize(pure_condition(fx::prism()));
  for (const auto& f : fl.factors) {
    auto vs = sample_variety(f, 6, 17);
    REQUIRE(vs.config.is_exact());
    CHECK(f.poly.evaluate(flat(*vs.config.exact)) == 0);
  }
  auto fl7 = factorize(pure_condition(fx::fig12()));
  for (const auto& f : fl7.factors) {
    auto vs = sample_variety(f, 7, 3);
    if (vs.config.is_exact())
      CHECK(f.poly.evaluate(flat(*vs.config.exact)) == 0);
    else
      CHECK(vs.residual <= kVarietyRelTol * vs.scale);
  }
  CHECK_THROWS_AS(sample_variety(MultiPoly::constant(4, 1), 1), DomainError);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(pure_condition(fx::k4()), DomainError);
  CHECK_THROWS_AS(pure_condition(fx::prism(), std::pair{0, 4}), DomainError);
  try {
    pure_condition(strip(9));
    FAIL("expected a resource limit");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "ResourceLimit");
  }
  CHECK_NOTHROW(require_isostatic(strip(8)));
}

TEST_CASE("symmetric-extensive search fails on the triangle") {
  auto r = algorithm4(fx::k3());
  CHECK(r.failure);
  CHECK(r.hits.empty());
  CHECK_FALSE(r.alg2.failure);
}

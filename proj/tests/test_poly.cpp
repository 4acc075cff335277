#include "symstress/modp.hpp"
#include "symstress/poly.hpp"
#include "symstress/random.hpp"

#include <doctest.h>

using namespace symstress;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly cst(std::size_t n, long c) { return MultiPoly::constant(n, Rational(c)); }

MultiPoly random_poly(std::size_t n, int terms, int maxdeg, Rng& rng) {
  MultiPoly p(n);
  for (int t = 0; t < terms; ++t) {
    MultiPoly m = cst(n, rng.uniform_int(-5, 5));
    for (std::size_t v = 0; v < n; ++v) m = m * var(n, v).pow(static_cast<unsigned>(rng.uniform_int(0, maxdeg)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("ring laws on random polynomials") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    auto a = random_poly(3, 4, 2, rng), b = random_poly(3, 4, 2, rng), c = random_poly(3, 3, 2, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    std::vector<Rational> x = {Rational(1, 3), Rational(-2), Rational(5, 7)};
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("grlex order and leading terms") {
  auto x = var(2, 0), y = var(2, 1);
  auto p = y * y + x * y * 3 + x - cst(2, 4);
  CHECK(p.total_degree() == 2);
  CHECK(p.leading_coefficient() == 3);  // xy > y^2
  CHECK(p.degree_in(1) == 2);
  CHECK(p.to_string({"x", "y"}) == "3*x*y + y^2 + x - 4");
}

TEST_CASE("exact division fails on non-divisors") {
  auto x = var(2, 0), y = var(2, 1);
  CHECK_FALSE((x * x + y).divide_exact(x + y).has_value());
  CHECK((x * x - y * y).divide_exact(x + y) == x - y);
}

TEST_CASE("roots, content and primitive part") {
  auto x = var(2, 0), y = var(2, 1);
  auto s = x * 2 - y * 3 + cst(2, 1);
  CHECK(s.pow(3).nth_root(3) == s);
  CHECK_FALSE((s.pow(3) + cst(2, 1)).nth_root(3).has_value());
  auto p = (x * Rational(6, 5) - y * Rational(9, 5)) * Rational(-1);
  CHECK(p.content() == Rational(3, 5));
  CHECK(p.primitive_part() == x * 2 - y * 3);
}

TEST_CASE("restrictions") {
  auto x = var(2, 0), y = var(2, 1);
  auto p = x * x * y + y - cst(2, 2);
  auto r = p.restrict_to(0, {Rational(0), Rational(3)});
  CHECK(r == std::vector<Rational>{1, 0, 3});
  auto l = p.restrict_to_line({Rational(0), Rational(1)}, {Rational(1), Rational(0)});
  CHECK(l == std::vector<Rational>{-1, 0, 1});
  auto sw = p.rename({1, 0});
  CHECK(sw == y * y * x + x - cst(2, 2));
}

TEST_CASE("mod-p degree patterns") {
  // x^2 + 1 splits mod 5, stays irreducible mod 7.
  std::vector<Rational> f = {1, 0, 1};
  CHECK(factor_degree_pattern(f, 5) == std::vector<int>{1, 1});
  CHECK(factor_degree_pattern(f, 7) == std::vector<int>{2});
  // (x-1)^2 is not squarefree.
  CHECK_FALSE(factor_degree_pattern({1, -2, 1}, 7).has_value());
  CHECK(subset_sums({1, 2}) == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("univariate irreducibility evidence") {
  auto e = univariate_irreducibility({-2, 0, 0, 0, 1});  // x^4 - 2
  CHECK(e.certified);
  CHECK(e.degree == 4);
  auto r = univariate_irreducibility({-1, 0, 0, 0, 1});  // (x^2+1)(x-1)(x+1)
  CHECK_FALSE(r.certified);
  // x^4 + 1 is reducible mod every prime: never certified.
  CHECK_FALSE(univariate_irreducibility({1, 0, 0, 0, 1}).certified);
}

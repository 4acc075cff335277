#include "fixtures.hpp"

#include "symstress/stress_classify.hpp"

#include <doctest.h>

using namespace symstress;

namespace {

Subgroup z2(int n, const std::vector<std::vector<int>>& c) { return Subgroup::generated_by(n, {fx::cyc(n, c)}); }

}  // namespace

TEST_CASE("support in both modes") {
  CHECK(support(Vec<Rational>{0, 1, 0, -2}) == std::vector<int>{1, 3});
  CHECK(support(Vec<double>{1e-12, 1.0, 0.0, -2.0}) == std::vector<int>{1, 3});
}

TEST_CASE("collapsed triangle stress is strongly localised") {
  Graph g = fx::eight_edge();
  auto p = fx::one_collapsed();
  auto sb = self_stress_basis(g, p);
  REQUIRE(sb.s == 1);
  const auto& w = sb.basis[0];
  auto sup = support(w);
  CHECK(sup == std::vector<int>{g.edge_index(1, 3), g.edge_index(1, 5), g.edge_index(3, 5)});
  Subgroup z = z2(6, {{1, 2}, {3, 4}, {5, 6}});
  auto sl = is_strongly_localised(z, g, w);
  CHECK(sl.value);
  CHECK(sl.witness.vertices == std::vector<int>{1, 3, 5});
  CHECK(is_weakly_localised(z, g, w));
  CHECK_FALSE(is_gamma_extensive(z, g, p, w));
  // Trivial group: every non-zero stress counts as extensive for it.
  CHECK(is_gamma_extensive(Subgroup::trivial(6), g, p, w));
}

TEST_CASE("two collapsed triangles give a two-dimensional weak span") {
  Graph g = fx::eight_edge();
  auto p = fx::two_collapsed();
  Subgroup z = z2(6, {{1, 2}, {3, 4}, {5, 6}});
  auto cl = classify(z, g, p);
  CHECK(cl.s == 2);
  CHECK(cl.weak_span_dim == 2);
  CHECK(cl.gamma_extensive_dim == 0);
  CHECK_FALSE(cl.extensive);
}

TEST_CASE("Desargues stress is extensive under the mirror") {
  Graph g = fx::prism();
  auto p = fx::prism_desargues();
  Subgroup z = z2(6, {{1, 2}, {4, 5}});
  auto cl = classify(z, g, p);
  REQUIRE(cl.s == 1);
  CHECK(cl.weak_span_dim == 0);
  CHECK(cl.stresses[0].gamma_extensive);
  CHECK_FALSE(cl.stresses[0].strongly_localised);
  CHECK(cl.extensive);
  auto ev = is_extensive(g, p);
  CHECK(ev.extensive);
  CHECK(ev.s == 1);
}

TEST_CASE("anti-symmetric stress is extensive under its mirror") {
  Graph g = fx::antisym();
  auto p = fx::antisym_config();
  auto sb = self_stress_basis(g, p);
  REQUIRE(sb.s >= 1);
  Subgroup z = z2(6, {{1, 5}, {2, 6}});
  auto cl = classify(z, g, p);
  CHECK(cl.gamma_extensive_dim >= 1);
  bool any = false;
  for (const auto& s : cl.stresses) any = any || s.gamma_extensive;
  CHECK(any);
  // Anti-symmetry: w(gamma e) = -w(e) on swapped edge pairs.
  for (const auto& w : sb.basis) {
    for (int k = 0; k < g.m(); ++k) {
      int j = edge_image(g, fx::cyc(6, {{1, 5}, {2, 6}}), k);
      if (j != k && sb.s == 1) CHECK(w[static_cast<std::size_t>(j)] == -w[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("nested prism carries two stresses and none is extensive") {
  Graph g = fx::nested_prism();
  auto p = fx::nested_prism_config();
  auto ev = is_extensive(g, p);
  CHECK(ev.s == 2);
  CHECK_FALSE(ev.extensive);
}

TEST_CASE("collinear four-cycle is extensive") {
  auto ev = is_extensive(fx::c4(), fx::c4_collinear());
  CHECK(ev.s == 1);
  CHECK(ev.extensive);
  CHECK_FALSE(is_extensive(fx::c4(), fx::c4_square()).extensive);
}

TEST_CASE("weak span does not depend on selection order") {
  Graph g = fx::eight_edge();
  auto p = fx::two_collapsed();
  Subgroup z = z2(6, {{1, 2}, {3, 4}, {5, 6}});
  auto basis = self_stress_basis(g, p).basis;
  auto a = weakly_localised_span_from(z, g, basis, kSelectionCap, 0, 1);
  auto b = weakly_localised_span_from(z, g, basis, kSelectionCap, 0, 99);
  REQUIRE(a.size() == b.size());
  for (const auto& v : a) CHECK(in_span(b, v));
  for (const auto& v : b) CHECK(in_span(a, v));
}

TEST_CASE("float classification matches exact") {
  Graph g = fx::prism();
  auto p = fx::prism_desargues();
  Subgroup z = z2(6, {{1, 2}, {4, 5}});
  auto e = classify(z, g, p);
  auto f = classify(z, g, to_double(p));
  CHECK(e.s == f.s);
  CHECK(e.weak_span_dim == f.weak_span_dim);
  CHECK(e.extensive == f.extensive);
  CHECK(f.rank_rel_tol > 0);
}

TEST_CASE("selection cap is enforced") {
  Graph g = fx::nested_prism();
  Subgroup z3 = Subgroup::generated_by(9, {fx::cyc(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})});
  CHECK_THROWS_AS(weakly_localised_span(z3, g, fx::nested_prism_config(), 2), DomainError);
}

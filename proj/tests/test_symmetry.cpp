#include "fixtures.hpp"

#include "symstress/maxwell.hpp"
#include "symstress/random.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace symstress;

namespace {

Configuration<Rational> random_config(int n, std::uint64_t seed) { return random_generic_configuration(n, 2, seed); }

// Oracle average computed from explicit cos/sin matrices.
Configuration<double> oracle_average(const SymmetryPair& pair, const Configuration<double>& p) {
  Configuration<double> q(2, p.n());
  const double k = 1.0 / static_cast<double>(pair.group.order());
  for (std::size_t e = 0; e < pair.group.order(); ++e) {
    const auto& g = pair.group.elements()[e];
    const auto& img = pair.images[e];
    double th = 2 * M_PI * img.angle().get_d();
    double m[4];
    if (img.is_rotation()) {
      m[0] = std::cos(th), m[1] = -std::sin(th), m[2] = std::sin(th), m[3] = std::cos(th);
    } else {
      m[0] = std::cos(2 * th), m[1] = std::sin(2 * th), m[2] = std::sin(2 * th), m[3] = -std::cos(2 * th);
    }
    // (Ap)_i = 1/|G| sum_g tau(g)^{-1} p_{g(i)}; tau orthogonal so inverse = transpose.
    for (std::size_t i = 0; i < p.n(); ++i) {
      auto j = static_cast<std::size_t>(g(static_cast<int>(i)));
      q.at(i, 0) += k * (m[0] * p.at(j, 0) + m[2] * p.at(j, 1));
      q.at(i, 1) += k * (m[1] * p.at(j, 0) + m[3] * p.at(j, 1));
    }
  }
  return q;
}

}  // namespace

TEST_CASE("orthogonal elements compose exactly") {
  auto r = OrthogonalElement::rotation(1, 4);
  auto s = OrthogonalElement::reflection_deg(0);
  CHECK((r * r * r * r).is_identity());
  CHECK(r.order() == 4);
  CHECK((s * s).is_identity());
  CHECK((r * s) == OrthogonalElement::reflection_deg(45));
  CHECK((s * r) == OrthogonalElement::reflection_deg(-45));
  CHECK(r.exact());
  CHECK_FALSE(OrthogonalElement::rotation(1, 3).exact());
  CHECK_THROWS_AS(OrthogonalElement::rotation(1, 3).exact_matrix(), DomainError);
  auto m = OrthogonalElement::reflection_deg(90).exact_matrix();
  CHECK(m == std::array<Rational, 4>{-1, 0, 0, 1});
  CHECK(OrthogonalElement::rotation(1, 3).trace() == doctest::Approx(-1.0));
}

TEST_CASE("symmetry pairs are validated") {
  Graph g = fx::prism();
  CHECK_THROWS_AS(make_symmetry_pair(g, {fx::cyc(6, {{1, 4}})}, {OrthogonalElement::reflection_deg(0)}), DomainError);
  CHECK_THROWS_AS(make_symmetry_pair(g, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}})}, {OrthogonalElement::rotation(1, 2)}),
                  DomainError);
  CHECK_THROWS_AS(make_symmetry_pair(g, {fx::cyc(6, {{1, 2}, {4, 5}})}, {OrthogonalElement::identity()}), DomainError);
  auto c3v = make_symmetry_pair(g, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}}), fx::cyc(6, {{1, 2}, {4, 5}})},
                                {OrthogonalElement::rotation(1, 3), OrthogonalElement::reflection_deg(90)});
  CHECK(c3v.label == "C3v");
  CHECK(c3v.group.order() == 6);
  CHECK(fx::prism_mirror(g).label == "Cs");
}

TEST_CASE("mirror average of the prism input") {
  Graph g = fx::prism();
  auto pair = fx::prism_mirror(g);
  auto q = average(pair, fx::prism_average_input());
  CHECK(is_symmetric(pair, q));
  CHECK(q.at(3, 0) == -1);
  CHECK(q.at(3, 1) == Rational(3, 40));
  CHECK(q.at(4, 0) == 1);
  CHECK(q.at(4, 1) == Rational(3, 40));
  CHECK(q.at(5, 0) == 0);
  CHECK(q.at(5, 1) == Rational(49, 30));
  CHECK(q.at(0, 0) == -3);  // already symmetric vertices stay
}

TEST_CASE("rotational average agrees with the trigonometric oracle") {
  Graph g = fx::prism();
  auto c3 = make_symmetry_pair(g, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}})}, {OrthogonalElement::rotation(1, 3)});
  auto p = to_double(fx::prism_c3_input());
  auto q = average(c3, p);
  auto o = oracle_average(c3, p);
  for (std::size_t i = 0; i < q.coords.size(); ++i) CHECK(q.coords[i] == doctest::Approx(o.coords[i]).epsilon(1e-12));
  CHECK(is_symmetric(c3, q, 1e-12));
  CHECK_FALSE(is_symmetric(c3, p, 1e-12));
}

TEST_CASE("averaging is a symmetric idempotent projector") {
  Graph g = fx::c4();
  auto d4 = make_symmetry_pair(g, {fx::cyc(4, {{1, 2, 3, 4}}), fx::cyc(4, {{1, 2}, {3, 4}})},
                               {OrthogonalElement::rotation(1, 4), OrthogonalElement::reflection_deg(90)});
  CHECK(d4.exact());
  auto a = averaging_matrix<Rational>(d4);
  CHECK(a * a == a);
  CHECK(a.transpose() == a);
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto p = random_config(4, s), q = random_config(4, s + 100);
    auto ap = average(d4, p);
    CHECK(average(d4, ap) == ap);
    CHECK(inner(ap, q) == inner(p, average(d4, q)));
  }
}

TEST_CASE("random symmetric configurations are symmetric") {
  Graph g = fx::prism();
  auto pair = fx::prism_mirror(g);
  for (std::uint64_t s = 1; s <= 5; ++s) CHECK(is_symmetric(pair, random_symmetric_configuration<Rational>(pair, s)));
}

TEST_CASE("act composes like the group") {
  Graph g = fx::prism();
  auto c3 = make_symmetry_pair(g, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}})}, {OrthogonalElement::rotation(1, 3)});
  auto p = to_double(random_config(6, 3));
  const auto& r = c3.group.elements()[1];
  auto once = act(c3, r * r, p);
  auto twice = act(c3, r, act(c3, r, p));
  for (std::size_t i = 0; i < once.coords.size(); ++i) CHECK(once.coords[i] == doctest::Approx(twice.coords[i]));
}

TEST_CASE("degeneracy filter") {
  Graph g = fx::prism();
  auto ht = make_symmetry_pair(g, {fx::cyc(6, {{1, 2}, {4, 5}})}, {OrthogonalElement::rotation(1, 2)});
  CHECK_FALSE(degeneracy_filter(ht).accepted);
  auto ht2 = make_symmetry_pair(g, {fx::cyc(6, {{1, 4}, {2, 5}, {3, 6}})}, {OrthogonalElement::rotation(1, 2)});
  CHECK_FALSE(degeneracy_filter(ht2).accepted);
  auto bad_mirror = make_symmetry_pair(g, {fx::cyc(6, {{1, 5}, {2, 4}, {3, 6}})}, {OrthogonalElement::reflection_deg(90)});
  CHECK_FALSE(degeneracy_filter(bad_mirror).accepted);
  CHECK(degeneracy_filter(fx::prism_mirror(g)).accepted);
  auto c2 = make_symmetry_pair(g, {fx::cyc(6, {{1, 5}, {2, 4}, {3, 6}})}, {OrthogonalElement::rotation(1, 2)});
  CHECK(degeneracy_filter(c2).accepted);
}

TEST_CASE("character tables satisfy the orthogonality relations") {
  Graph sq = fx::c4();
  Graph pr = fx::prism();
  std::vector<SymmetryPair> pairs = {
      fx::prism_mirror(pr),
      make_symmetry_pair(pr, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}})}, {OrthogonalElement::rotation(1, 3)}),
      make_symmetry_pair(pr, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}}), fx::cyc(6, {{1, 2}, {4, 5}})},
                         {OrthogonalElement::rotation(1, 3), OrthogonalElement::reflection_deg(90)}),
      make_symmetry_pair(sq, {fx::cyc(4, {{1, 2, 3, 4}}), fx::cyc(4, {{1, 2}, {3, 4}})},
                         {OrthogonalElement::rotation(1, 4), OrthogonalElement::reflection_deg(90)}),
      make_symmetry_pair(sq, {fx::cyc(4, {{1, 2, 3, 4}})}, {OrthogonalElement::rotation(1, 4)}),
  };
  for (const auto& pair : pairs) {
    auto t = character_table(pair);
    for (std::size_t i = 0; i < t.irreps.size(); ++i)
      for (std::size_t j = 0; j < t.irreps.size(); ++j) {
        double s = 0;
        for (std::size_t k = 0; k < t.classes.size(); ++k)
          s += static_cast<double>(t.classes[k].size) * t.irreps[i].chi[k] * t.irreps[j].chi[k];
        s /= static_cast<double>(t.order);
        CHECK(s == doctest::Approx(i == j ? t.irreps[i].norm : 0).epsilon(1e-12));
      }
    // Sum of dim^2 over absolutely irreducible parts equals the order.
    double total = 0;
    for (const auto& ir : t.irreps) total += ir.norm == 1 ? ir.dim * ir.dim : 2.0;
    CHECK(total == doctest::Approx(static_cast<double>(t.order)));
  }
}

TEST_CASE("rigidity character of the eight-edge graph under its mirror") {
  Graph g = fx::eight_edge();
  auto pair = fx::b_mirror(g);
  auto t = character_table(pair);
  auto v = rigidity_character(pair, t);
  auto r = decompose(v, t);
  CHECK(r.detected_s == 0);
  CHECK(r.detected_flexes == 1);
}

TEST_CASE("Maxwell scan on the prism") {
  std::map<std::string, std::vector<int>> s_by_label;
  for (const auto& e : algorithm1(fx::prism())) {
    REQUIRE(e.report);
    s_by_label[e.pair.label].push_back(e.report->detected_s);
  }
  CHECK(s_by_label["Cs"] == std::vector<int>{1, 1, 1, 1});
  CHECK(s_by_label["C2v"] == std::vector<int>{1, 1, 1});
  CHECK(s_by_label["C3v"] == std::vector<int>{1});
  CHECK(s_by_label["C2"] == std::vector<int>{0, 0, 0});
  CHECK(s_by_label["C3"] == std::vector<int>{0});
  CHECK(s_by_label["C1"] == std::vector<int>{0});
  auto all = algorithm1(fx::prism(), {true, 1});
  std::size_t rejected = 0;
  for (const auto& e : all) rejected += e.filter.accepted ? 0 : 1;
  CHECK(rejected > 0);
  CHECK(all.size() == 13 + rejected);
}

TEST_CASE("Maxwell scan on the seven-vertex graph") {
  Graph g = fx::fig12();
  bool saw_depicted = false;
  for (const auto& e : algorithm1(g)) {
    if (e.pair.label != "Cs") continue;
    if (e.pair.generators[0] == fx::cyc(7, {{2, 3}, {6, 7}})) {
      saw_depicted = true;
      CHECK(e.report->detected_s == 0);
    }
    if (e.pair.generators[0] == fx::cyc(7, {{2, 6}, {3, 7}, {4, 5}})) CHECK(e.report->detected_s == 1);
  }
  CHECK(saw_depicted);
}

TEST_CASE("Maxwell scan is independent of the job count") {
  auto a = algorithm1(fx::prism(), {true, 1});
  auto b = algorithm1(fx::prism(), {true, 3});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pair.generators == b[i].pair.generators);
    CHECK(a[i].filter.accepted == b[i].filter.accepted);
  }
}

#include "fixtures.hpp"

#include "symstress/random.hpp"
#include "symstress/statics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace symstress;

namespace {

LiftedFramework<Rational> desargues_lift() {
  Graph g = fx::prism();
  auto p = fx::prism_desargues();
  auto w = self_stress_basis(g, p).basis.front();
  return maxwell_cremona_lift(Framework<Rational>{g, p}, w);
}

// Oracle: four points are coplanar iff the 4x4 determinant [x y z 1] vanishes.
bool coplanar4(const Configuration<Rational>& q, int a, int b, int c, int d) {
  Matrix<Rational> m(4, 4);
  int idx[4] = {a, b, c, d};
  for (std::size_t r = 0; r < 4; ++r) {
    for (int k = 0; k < 3; ++k) m(r, static_cast<std::size_t>(k)) = q.at(static_cast<std::size_t>(idx[r]), k);
    m(r, 3) = 1;
  }
  return determinant(m) == 0;
}

}  // namespace

TEST_CASE("faces of the Desargues prism drawing") {
  auto fs = trace_faces(fx::prism(), fx::prism_desargues());
  CHECK(fs.faces.size() == 5);
  REQUIRE(fs.outer >= 0);
  auto outer = fs.faces[static_cast<std::size_t>(fs.outer)];
  std::sort(outer.begin(), outer.end());
  CHECK(outer == std::vector<int>{0, 1, 2});
  // Each directed edge borders exactly one face.
  Graph g = fx::prism();
  for (const auto& e : g.edges()) {
    int l = face_left_of(fs, e.u, e.v), r = face_left_of(fs, e.v, e.u);
    CHECK(l >= 0);
    CHECK(r >= 0);
    CHECK(l != r);
  }
}

TEST_CASE("non-planar drawings are rejected") {
  auto bow = fx::cfg({{"0", "0"}, {"1", "1"}, {"1", "0"}, {"0", "1"}});
  CHECK_THROWS_AS(trace_faces(fx::c4(), bow), DomainError);
  CHECK_THROWS_AS(trace_faces(Graph::from_one_based(4, {{1, 2}, {3, 4}}), fx::c4_square()), DomainError);
}

TEST_CASE("lift of the Desargues stress is exactly piecewise planar") {
  auto lf = desargues_lift();
  CHECK(faces_coplanar(lf));
  REQUIRE(lf.faces);
  for (const auto& f : lf.faces->faces)
    for (std::size_t i = 3; i < f.size(); ++i) CHECK(coplanar4(lf.config, f[0], f[1], f[2], f[i]));
  for (int v : lf.faces->faces[static_cast<std::size_t>(lf.faces->outer)]) CHECK(lf.config.at(static_cast<std::size_t>(v), 2) == 0);
  bool lifted = false;
  for (std::size_t i = 0; i < lf.config.n(); ++i) lifted = lifted || lf.config.at(i, 2) != 0;
  CHECK(lifted);
}

TEST_CASE("gradient jumps follow the stress") {
  Graph g = fx::prism();
  auto p = fx::prism_desargues();
  auto w = self_stress_basis(g, p).basis.front();
  auto lf = maxwell_cremona_lift(Framework<Rational>{g, p}, w);
  for (int k = 0; k < g.m(); ++k) {
    auto e = g.edge(k);
    int l = face_left_of(*lf.faces, e.u, e.v), r = face_left_of(*lf.faces, e.v, e.u);
    auto pl = face_plane(lf, static_cast<std::size_t>(l)), pr = face_plane(lf, static_cast<std::size_t>(r));
    REQUIRE(pl);
    REQUIRE(pr);
    Rational dx = p.at(static_cast<std::size_t>(e.v), 0) - p.at(static_cast<std::size_t>(e.u), 0);
    Rational dy = p.at(static_cast<std::size_t>(e.v), 1) - p.at(static_cast<std::size_t>(e.u), 1);
    // rotate (dx, dy) by a quarter turn
    Rational jx = -dy, jy = dx;
    Rational gx = (*pl)[0] - (*pr)[0], gy = (*pl)[1] - (*pr)[1];
    // Parallel to J(p_v - p_u) with a common factor across edges.
    CHECK(gx * jy - gy * jx == 0);
  }
}

TEST_CASE("zero coefficients give flat hinges") {
  Graph g = fx::nested_prism();
  auto p = fx::nested_prism_config();
  auto basis = self_stress_basis(g, p).basis;
  REQUIRE(basis.size() == 2);
  // A combination vanishing on the inner triangle edge 7-8.
  int k78 = g.edge_index(6, 7);
  Vec<Rational> w(static_cast<std::size_t>(g.m()));
  const Rational a = basis[1][static_cast<std::size_t>(k78)], b = -basis[0][static_cast<std::size_t>(k78)];
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = a * basis[0][i] + b * basis[1][i];
  REQUIRE(w[static_cast<std::size_t>(k78)] == 0);
  auto lf = maxwell_cremona_lift(Framework<Rational>{g, p}, w);
  CHECK(faces_coplanar(lf));
  int zero_edges = 0;
  for (int k = 0; k < g.m(); ++k) {
    if (w[static_cast<std::size_t>(k)] != 0) continue;
    ++zero_edges;
    auto e = g.edge(k);
    auto pl = face_plane(lf, static_cast<std::size_t>(face_left_of(*lf.faces, e.u, e.v)));
    auto pr = face_plane(lf, static_cast<std::size_t>(face_left_of(*lf.faces, e.v, e.u)));
    CHECK((*pl)[0] == (*pr)[0]);
    CHECK((*pl)[1] == (*pr)[1]);
  }
  CHECK(zero_edges >= 1);
}

TEST_CASE("non-stresses cannot be lifted") {
  Graph g = fx::prism();
  Vec<Rational> w(9, Rational(1));
  CHECK_THROWS_AS(maxwell_cremona_lift(Framework<Rational>{g, fx::prism_desargues()}, w), DomainError);
}

TEST_CASE("projection stresses resolve their induced loads") {
  auto lf = desargues_lift();
  auto pj = project(lf);
  CHECK(pj.coincident.empty());
  CHECK(pj.framework.config == fx::prism_desargues());
  auto w = self_stress_basis(fx::prism(), fx::prism_desargues()).basis.front();
  auto load = induced_load(lf, w);
  CHECK(load.vertical());
  auto ps = projection_stress(lf, load);
  CHECK(ps.feasible);
  CHECK(ps.certificate);
  CHECK(ps.residual == 0);
  auto res = vertical_resolvability(lf, {load, vertical_load(std::vector<Rational>{1, 0, 0, 0, 0, 0})});
  CHECK(res.feasible[0]);
  CHECK(res.resolvable_dim == 1);
  CHECK(res.equilibrium_dim == 3);
  LoadVector<Rational> side;
  side.f.assign(18, Rational(0));
  side.f[0] = 1;
  CHECK_THROWS_AS(projection_stress(lf, side), DomainError);
}

TEST_CASE("perturbation bound") {
  CHECK(perturbation_bound(9, 1, 1e-3) == doctest::Approx(1.6666666666666666e-4).epsilon(1e-12));
  Configuration<double> e(2, 3);
  e.at(1, 0) = 3, e.at(1, 1) = 4;
  CHECK(diameter(e) == doctest::Approx(5.0));
  auto lf = desargues_lift();
  auto pd = to_double(lf.config);
  Vec<double> w;
  auto exact_w = self_stress_basis(fx::prism(), fx::prism_desargues()).basis.front();
  for (const auto& x : exact_w) w.push_back(x.get_d());
  auto f = left_multiply(w, rigidity_matrix(fx::prism(), pd));
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    Configuration<double> d(3, 6);
    for (auto& x : d.coords) x = 1e-3 * (2 * rng.uniform01() - 1);
    auto rc = residual_check(fx::prism(), w, pd, d, f);
    CHECK(rc.holds);
    CHECK(rc.observed <= rc.bound * (1 + 1e-12));
  }
}

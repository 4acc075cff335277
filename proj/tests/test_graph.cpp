#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace symstress;

namespace {

// Oracle: every permutation of the vertex set, kept if it preserves edges.
std::set<Permutation> brute_force_automorphisms(const Graph& g) {
  std::vector<int> img(static_cast<std::size_t>(g.n()));
  std::iota(img.begin(), img.end(), 0);
  std::set<Permutation> out;
  do {
    Permutation p(img);
    if (is_automorphism(g, p)) out.insert(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("edges are stored sorted and 1-based input is shifted") {
  Graph g = Graph::from_one_based(3, {{3, 1}, {2, 1}});
  REQUIRE(g.m() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge_index(2, 0) == 1);
  CHECK(g.edge_index(1, 2) == -1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(0) == 2);
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS(Graph::from_one_based(3, {{1, 1}}));
  CHECK_THROWS(Graph::from_one_based(3, {{1, 4}}));
  CHECK_THROWS(Graph::from_one_based(3, {{1, 2}, {2, 1}}));
}

TEST_CASE("permutation algebra") {
  Permutation a = Permutation::from_cycles(4, {{1, 2, 3}});
  Permutation b = Permutation::from_cycles(4, {{1, 2}});
  CHECK((a * a * a).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK((a * b)(1) == a(b(1)));
  CHECK(a.cycles() == "(1 2 3)");
  CHECK(Permutation::identity(3).cycles() == "()");
  CHECK(a.one_based() == std::vector<int>{2, 3, 1, 4});
}

TEST_CASE("automorphism group matches the brute-force oracle") {
  for (const Graph& g : {fx::prism(), fx::prism_b(), fx::k4(), fx::c4(), fx::fig12(), fx::eight_edge(),
                         fx::antisym(), fx::wheel(5), fx::k3()}) {
    auto aut = automorphism_group(g);
    auto oracle = brute_force_automorphisms(g);
    CHECK(aut.order() == oracle.size());
    for (const auto& p : aut.elements()) CHECK(oracle.count(p) == 1);
  }
}

TEST_CASE("frozen automorphism orders") {
  CHECK(automorphism_group(fx::prism()).order() == 12);
  CHECK(automorphism_group(fx::k4()).order() == 24);
  CHECK(automorphism_group(fx::c4()).order() == 8);
  CHECK(automorphism_group(fx::fig12()).order() == 4);
  CHECK(automorphism_group(fx::nested_prism()).order() == 12);  // outer and inner triangles swap
}

TEST_CASE("subgroup lattice of small groups") {
  // D6 (order 12) has 16 subgroups; D4 has 10; S4 has 30.
  CHECK(subgroups(automorphism_group(fx::prism())).size() == 16);
  CHECK(subgroups(automorphism_group(fx::c4())).size() == 10);
  CHECK(subgroups(automorphism_group(fx::k4())).size() == 30);
  for (const auto& h : subgroups(automorphism_group(fx::prism()))) {
    CHECK(12 % h.order() == 0);
    for (const auto& a : h.elements())
      for (const auto& b : h.elements()) CHECK(h.contains(a * b.inverse()));
  }
}

TEST_CASE("conjugacy classes partition the group") {
  auto aut = automorphism_group(fx::prism());
  auto cls = conjugacy_classes(aut);
  std::size_t total = 0;
  for (const auto& c : cls) total += c.size();
  CHECK(total == aut.order());
  CHECK(cls.size() == 6);  // D6
}

TEST_CASE("fixed elements and edge images") {
  Graph g = fx::prism();
  auto fe = fixed_elements(Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}), g);
  CHECK(fe.vertices.empty());
  CHECK(fe.edges.size() == 3);
  auto fm = fixed_elements(Permutation::from_cycles(6, {{1, 2}, {4, 5}}), g);
  CHECK(fm.vertices == std::vector<int>{2, 5});
  CHECK(fm.edges.size() == 3);
  Permutation r = Permutation::from_cycles(6, {{1, 2, 3}, {4, 5, 6}});
  for (int k = 0; k < g.m(); ++k) {
    int j = edge_image(g, r, k);
    CHECK(j >= 0);
    auto e = g.edge(k), f = g.edge(j);
    CHECK(std::minmax(r(e.u), r(e.v)) == std::minmax(f.u, f.v));
  }
}

TEST_CASE("orbits and subgraph copies") {
  Graph g = fx::eight_edge();
  Subgroup z2 = Subgroup::generated_by(6, {Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}})});
  auto orb = edge_and_vertex_orbits(z2, g);
  CHECK(orb.vertex_orbits.size() == 3);
  CHECK(orb.edge_orbits.size() == 5);  // 1-2, 3-4 fixed
  Subgraph tri = subgraph_from_edges(g, {g.edge_index(1, 3), g.edge_index(1, 5), g.edge_index(3, 5)});
  auto so = orbit_of_subgraph(z2, g, tri);
  CHECK(so.copies.size() == 2);
  CHECK(so.disjoint_copies);
}

TEST_CASE("connectivity and peeling") {
  CHECK(is_connected(fx::prism()));
  CHECK(is_k_connected(fx::prism(), 3));
  CHECK_FALSE(is_k_connected(fx::c4(), 3));
  CHECK(is_k_connected(fx::wheel(6), 3));
  CHECK_FALSE(is_connected(Graph::from_one_based(4, {{1, 2}, {3, 4}})));
  CHECK(peels_to_empty(fx::c4(), 2));
  CHECK_FALSE(peels_to_empty(fx::prism(), 2));
  CHECK(is_peelable_without_edge(fx::prism(), 2));
  CHECK_FALSE(is_peelable_without_edge(fx::nested_prism(), 2));
}

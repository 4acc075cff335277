#pragma once

#include "symstress/framework.hpp"
#include "symstress/symmetry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fx {

using namespace symstress;

inline Configuration<Rational> cfg(const std::vector<std::pair<std::string, std::string>>& pts) {
  Configuration<Rational> p(2, pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    p.at(i, 0) = parse_rational(pts[i].first);
    p.at(i, 1) = parse_rational(pts[i].second);
  }
  return p;
}

inline Permutation cyc(int n, const std::vector<std::vector<int>>& c) { return Permutation::from_cycles(n, c); }

// Triangles {1,2,3},{4,5,6}; rungs 1-4, 2-5, 3-6.
inline Graph prism() { return Graph::from_one_based(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}}); }

// Rungs meet at (0, 1/3).
inline Configuration<Rational> prism_desargues() {
  return cfg({{"-3", "-2/3"}, {"3", "-2/3"}, {"0", "10/3"}, {"-1", "0"}, {"1", "0"}, {"0", "4/3"}});
}

// Mirror-averaging input; its (1 2)(4 5) average is computed, not drawn.
inline Configuration<Rational> prism_average_input() {
  return cfg({{"-3", "-2/3"}, {"3", "-2/3"}, {"0", "10/3"}, {"-4/5", "-1/10"}, {"6/5", "1/4"}, {"-1/4", "49/30"}});
}

// Input for the order-3 rotational average.
inline Configuration<Rational> prism_c3_input() {
  return cfg({{"-3", "-3/5"}, {"3", "-1"}, {"0", "18/5"}, {"-4/5", "-1/5"}, {"9/10", "1/5"}, {"3/10", "23/10"}});
}

inline SymmetryPair prism_mirror(const Graph& g) {
  return make_symmetry_pair(g, {cyc(6, {{1, 2}, {4, 5}})}, {OrthogonalElement::reflection_deg(90)});
}

// Triangles {1,3,5},{2,4,6}; rungs 1-2, 3-4, 5-6.
inline Graph prism_b() { return Graph::from_one_based(6, {{1, 3}, {3, 5}, {1, 5}, {2, 4}, {4, 6}, {2, 6}, {1, 2}, {3, 4}, {5, 6}}); }

// Prism minus the rung 5-6.
inline Graph eight_edge() { return Graph::from_one_based(6, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {5, 1}, {5, 3}, {6, 2}, {6, 4}}); }

// 6 lies on the segment 2-4: the triangle {2,4,6} is collapsed.
inline Configuration<Rational> one_collapsed() {
  return cfg({{"-1", "1/2"}, {"1", "1/2"}, {"-1", "-1/2"}, {"1", "-1/2"}, {"-2", "0"}, {"1", "0"}});
}

inline Configuration<Rational> two_collapsed() {
  return cfg({{"-1", "1/2"}, {"1", "1/2"}, {"-1", "-1/2"}, {"1", "-1/2"}, {"-1", "0"}, {"1", "0"}});
}

inline SymmetryPair b_mirror(const Graph& g) {
  return make_symmetry_pair(g, {cyc(6, {{1, 2}, {3, 4}, {5, 6}})}, {OrthogonalElement::reflection_deg(90)});
}

// Two triangles on the x-axis joined through the quadrilateral 3,4.
inline Graph antisym() {
  return Graph::from_one_based(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {6, 5}, {6, 3}, {6, 4}, {5, 3}, {5, 4}});
}

inline Configuration<Rational> antisym_config() {
  return cfg({{"-2", "0"}, {"-1", "0"}, {"0", "-1"}, {"0", "1"}, {"2", "0"}, {"1", "0"}});
}

inline SymmetryPair antisym_mirror(const Graph& g) {
  return make_symmetry_pair(g, {cyc(6, {{1, 5}, {2, 6}})}, {OrthogonalElement::reflection_deg(90)});
}

// Outer 1-3, middle 4-6, inner 7-9, all homothetic about the origin.
inline Graph nested_prism() {
  return Graph::from_one_based(9, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {7, 8}, {8, 9}, {7, 9},
                                   {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}, {6, 9}});
}

inline Configuration<Rational> nested_prism_config() {
  return cfg({{"0", "17/5"}, {"-17/5", "-17/10"}, {"17/5", "-17/10"},
              {"0", "2"}, {"-2", "-1"}, {"2", "-1"},
              {"0", "1"}, {"-1", "-1/2"}, {"1", "-1/2"}});
}

inline Graph c4() { return Graph::from_one_based(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

inline Configuration<Rational> c4_collinear() { return cfg({{"0", "0"}, {"1", "0"}, {"3", "0"}, {"7", "0"}}); }

inline Configuration<Rational> c4_square() { return cfg({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}}); }

inline Graph k3() { return Graph::from_one_based(3, {{1, 2}, {2, 3}, {1, 3}}); }

inline Graph k4() { return Graph::from_one_based(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// Isostatic on 7 vertices; mirror (2 3)(6 7) fixes 1, 4, 5.
inline Graph fig12() {
  return Graph::from_one_based(7, {{1, 2}, {1, 6}, {1, 7}, {1, 3}, {2, 6}, {3, 7}, {4, 5}, {2, 4}, {3, 4}, {5, 6}, {5, 7}});
}

inline SymmetryPair fig12_mirror(const Graph& g) {
  return make_symmetry_pair(g, {cyc(7, {{2, 3}, {6, 7}})}, {OrthogonalElement::reflection_deg(90)});
}

inline Graph wheel(int spokes) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= spokes; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % spokes + 1);
  }
  return Graph(spokes + 1, e);
}

}  // namespace fx

#pragma once

#include "symstress/framework.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symstress {

template <class T> struct RubberBandProblem {
  Graph graph;
  int d = 2;
  std::vector<int> boundary;              // d+1 vertices
  Configuration<T> boundary_positions;    // one point per boundary vertex, same order
  Vec<T> weights;                         // length m; boundary-induced entries are ignored

  std::vector<int> interior() const;
  std::vector<bool> is_boundary() const;
};

struct ProblemCheck {
  std::vector<std::string> warnings;  // guarantees void, not fatal
};

// Throws InvalidProblem on structural errors; returns warnings otherwise.
template <class T> ProblemCheck validate(const RubberBandProblem<T>& pr);

// Positions of all vertices: boundary as given, interior in equilibrium.
template <class T> Configuration<T> solve_interior(const RubberBandProblem<T>& pr);

// Full stress vector: interior weights plus solved boundary-induced coefficients.
template <class T> Vec<T> solve_boundary_stress(const RubberBandProblem<T>& pr, const Configuration<T>& p);

template <class T> struct RubberBandResult {
  Configuration<T> config;
  Vec<T> stress;
  std::size_t s = 0;
  bool full_support = false;
  bool extensive = false;  // s == 1 and full support
  std::vector<std::string> warnings;
};

template <class T> RubberBandResult<T> algorithm3(const RubberBandProblem<T>& pr, double rel_tol = kDefaultRelTol);

// First vertex set inducing K_{d+1} in lexicographic order; `found` false
// means the returned set is just the first d+1 vertices.
struct BoundaryChoice {
  std::vector<int> vertices;
  bool induces_clique = false;
};
BoundaryChoice choose_boundary(const Graph& g, int d = 2);

// Weights on edges with an interior endpoint: positive rationals in [1,10],
// or non-zero in [-10,10] when mixed_sign.
Vec<Rational> sample_weights(const Graph& g, const std::vector<int>& boundary, std::uint64_t seed,
                             bool mixed_sign = false);

// Generic boundary placement in general position.
Configuration<Rational> sample_boundary_positions(int d, std::uint64_t seed);

}  // namespace symstress

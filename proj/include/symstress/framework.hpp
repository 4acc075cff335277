#pragma once

#include "symstress/graph.hpp"
#include "symstress/linalg.hpp"

#include <cstdint>
#include <vector>

namespace symstress {

inline constexpr double kDefaultRelTol = 1e-9;

template <class T> struct Configuration {
  int d = 2;
  std::vector<T> coords;  // n*d, point i occupies [i*d, i*d+d)

  Configuration() = default;
  Configuration(int dim, std::size_t n) : d(dim), coords(n * static_cast<std::size_t>(dim), T(0)) {}

  std::size_t n() const { return d ? coords.size() / static_cast<std::size_t>(d) : 0; }
  T& at(std::size_t i, int k) { return coords[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)]; }
  const T& at(std::size_t i, int k) const {
    return coords[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)];
  }
  bool operator==(const Configuration& o) const { return d == o.d && coords == o.coords; }
};

Configuration<double> to_double(const Configuration<Rational>& c);

template <class T> struct Framework {
  Graph graph;
  Configuration<T> config;
};

template <class T> struct StressBasis {
  std::vector<Vec<T>> basis;
  std::size_t s = 0;
  ScalarMode mode = ScalarMode::Rational;
  double rel_tol = 0;  // rank threshold (relative), 0 in rational mode
};

template <class T> struct MotionBasis {
  std::vector<Vec<T>> kernel;   // all infinitesimal motions
  std::vector<Vec<T>> trivial;  // independent trivial motions
  std::size_t f = 0;
};

struct MaxwellIndex {
  int k = 0;
};

template <class T> Matrix<T> rigidity_matrix(const Graph& g, const Configuration<T>& p);
template <class T> StressBasis<T> self_stress_basis(const Graph& g, const Configuration<T>& p,
                                                    double rel_tol = kDefaultRelTol);
template <class T> MotionBasis<T> motion_basis(const Graph& g, const Configuration<T>& p,
                                               double rel_tol = kDefaultRelTol);
// Translations and infinitesimal rotations applied to p (not reduced).
template <class T> std::vector<Vec<T>> trivial_motion_generators(const Configuration<T>& p);
template <class T> std::size_t trivial_dimension(const Configuration<T>& p, double rel_tol = kDefaultRelTol);
template <class T> std::size_t affine_span_dimension(const Configuration<T>& p, double rel_tol = kDefaultRelTol);

MaxwellIndex maxwell_index(const Graph& g, int d);

Configuration<Rational> random_generic_configuration(int n, int d, std::uint64_t seed);

struct GenericCounts {
  int f = 0, s = 0;
  std::size_t max_rank = 0;
};
GenericCounts generic_counts(const Graph& g, int d, int trials, std::uint64_t seed = 1);

// Pairs of coincident points (i<j).
template <class T> std::vector<std::pair<int, int>> coincident_points(const Configuration<T>& p);

struct CrossingReport {
  int crossings = 0;  // proper interior intersections of non-adjacent edges
  int overlaps = 0;   // collinear overlapping pairs and vertex-on-edge contacts
};
template <class T> CrossingReport count_crossings(const Graph& g, const Configuration<T>& p);

template <class T> bool is_self_stress(const Graph& g, const Configuration<T>& p, const Vec<T>& w,
                                       double tol = 0);

}  // namespace symstress

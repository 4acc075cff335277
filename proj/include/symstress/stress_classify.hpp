#pragma once

#include "symstress/framework.hpp"

#include <vector>

namespace symstress {

inline constexpr double kSupportRelTol = 1e-8;
inline constexpr std::size_t kSelectionCap = 1000000;

// Edges with non-zero coefficient; floating mode uses |w_e| > rel_tol*|w|_inf.
template <class T> std::vector<int> support(const Vec<T>& w, double rel_tol = kSupportRelTol);

struct StrongLocalisation {
  bool value = false;
  Subgraph witness;      // support closure H
  SubgraphOrbit orbit;   // its images under the group
};

template <class T>
StrongLocalisation is_strongly_localised(const Subgroup& group, const Graph& g, const Vec<T>& w,
                                         double rel_tol = kSupportRelTol);
template <class T>
bool is_weakly_localised(const Subgroup& group, const Graph& g, const Vec<T>& w, double rel_tol = kSupportRelTol);

// Basis (as edge vectors) of the span of weakly localised self-stresses.
template <class T>
std::vector<Vec<T>> weakly_localised_span(const Subgroup& group, const Graph& g, const Configuration<T>& p,
                                          std::size_t cap = kSelectionCap, double rel_tol = kDefaultRelTol);

// Same span computed from a given stress basis with a permuted selection order.
template <class T>
std::vector<Vec<T>> weakly_localised_span_from(const Subgroup& group, const Graph& g, const std::vector<Vec<T>>& basis,
                                               std::size_t cap, double rel_tol, std::uint64_t order_seed);

template <class T>
bool in_span(const std::vector<Vec<T>>& span, const Vec<T>& w, double rel_tol = kDefaultRelTol);

template <class T>
bool is_gamma_extensive(const Subgroup& group, const Graph& g, const Configuration<T>& p, const Vec<T>& w,
                        std::size_t cap = kSelectionCap, double rel_tol = kDefaultRelTol);

template <class T> struct ExtensiveVerdict {
  bool extensive = false;
  std::size_t s = 0;
  Vec<T> witness;
};
template <class T> ExtensiveVerdict<T> is_extensive(const Graph& g, const Configuration<T>& p, double rel_tol = kDefaultRelTol);

template <class T> struct StressClassification {
  struct PerStress {
    Vec<T> stress;
    std::vector<int> support;
    bool strongly_localised = false;
    Subgraph witness;
    bool weakly_localised = false;
    bool gamma_extensive = false;
  };
  std::size_t s = 0;
  std::size_t group_order = 1;
  std::vector<PerStress> stresses;
  std::size_t weak_span_dim = 0;
  std::size_t gamma_extensive_dim = 0;  // s - weak_span_dim
  bool extensive = false;
  double rank_rel_tol = 0;
  double support_rel_tol = 0;
};

template <class T>
StressClassification<T> classify(const Subgroup& group, const Graph& g, const Configuration<T>& p,
                                 std::size_t cap = kSelectionCap, double rel_tol = kDefaultRelTol);

}  // namespace symstress

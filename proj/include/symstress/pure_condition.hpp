#pragma once

#include "symstress/framework.hpp"
#include "symstress/modp.hpp"
#include "symstress/poly.hpp"
#include "symstress/symmetry.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symstress {

inline constexpr int kPureConditionMaxVertices = 8;

// Pure condition of a 2-isostatic graph, normalised (integral, primitive,
// positive leading coefficient). `tie` = (a, b) with b adjacent to a; default
// is vertex 0 and its smallest neighbour.
MultiPoly pure_condition(const Graph& g, std::optional<std::pair<int, int>> tie = std::nullopt);

// Raw tied-down minor: the rigidity matrix with columns x_a, y_a, x_b removed.
MultiPoly tied_down_determinant(const Graph& g, int a, int b);

// [i j k] = det[p_j - p_i, p_k - p_i] in 2n variables.
MultiPoly bracket(int n, int i, int j, int k);
// Concurrency of the lines through the point pairs (a0,a1), (b0,b1), (c0,c1).
MultiPoly concurrency(int n, std::array<std::pair<int, int>, 3> lines);

enum class Provenance { GeometricCandidate, ResidualUnfactored };
enum class FactorKind { Collinear, Concurrent, Residual };

const char* provenance_name(Provenance p);
const char* factor_kind_name(FactorKind k);

struct Factor {
  MultiPoly poly;
  int multiplicity = 1;
  Provenance provenance = Provenance::ResidualUnfactored;
  FactorKind kind = FactorKind::Residual;
  std::array<int, 3> triple{};                       // Collinear
  std::array<std::pair<int, int>, 3> lines{};        // Concurrent
  std::optional<IrreducibilityEvidence> evidence;    // Residual
  std::string describe() const;                       // one-based
};

struct FactorList {
  Rational content = 1;
  std::vector<Factor> factors;
  bool verified = false;  // content * prod f^r == input
};

FactorList factorize(const MultiPoly& p, std::uint64_t seed = 1);
MultiPoly expand(const FactorList& fl);

// A configuration in (or numerically on) a factor variety.
struct SampledConfiguration {
  std::optional<Configuration<Rational>> exact;
  Configuration<double> approx;
  bool is_exact() const { return exact.has_value(); }
};

struct VarietySample {
  SampledConfiguration config;
  double residual = 0;  // |f(p)|
  double scale = 0;     // sum of |terms| at p
  std::uint64_t seed = 0;
  std::string construction;
};

inline constexpr int kSampleRetries = 50;
inline constexpr double kVarietyRelTol = 1e-9;

VarietySample sample_variety(const Factor& f, int n, std::uint64_t seed);
VarietySample sample_variety(const MultiPoly& f, std::uint64_t seed);

struct StressProfile {
  std::size_t dim = 0;
  std::vector<int> support;  // union of basis supports
  bool stable = true;
  bool full_support = false;
  std::vector<std::pair<std::size_t, std::vector<int>>> trials;
};

StressProfile factor_stress_profile(const Graph& g, const Factor& f, int trials, std::uint64_t seed);

struct Algorithm2Entry {
  Factor factor;
  StressProfile profile;
  bool extensive = false;
};

struct Algorithm2Report {
  MultiPoly condition;
  FactorList factors;
  std::vector<Algorithm2Entry> entries;
  bool failure = true;  // no extensive factor
};

void require_isostatic(const Graph& g);
Algorithm2Report algorithm2(const Graph& g, std::uint64_t seed = 1, int trials = 5,
                            std::optional<std::pair<int, int>> tie = std::nullopt);

bool averaging_invariance(const Graph& g, const Factor& f, const SymmetryPair& pair, int trials, std::uint64_t seed);

struct Algorithm4Hit {
  SymmetryPair pair;
  std::size_t factor_index = 0;
  SampledConfiguration certificate;
  std::size_t s = 0;
  bool full_support = false;
  bool orbit_constant = false;
  Vec<double> stress;  // normalised to max |w_e| = 1
};

struct Algorithm4Report {
  Algorithm2Report alg2;
  std::vector<Algorithm4Hit> hits;
  std::size_t pairs_tested = 0;
  bool failure = true;
};

// Every accepted non-trivial pair from the Maxwell scan.
Algorithm4Report algorithm4(const Graph& g, std::uint64_t seed = 1, int trials = 3, int jobs = 1);
// Only the given pairs.
Algorithm4Report algorithm4(const Graph& g, const std::vector<SymmetryPair>& pairs, std::uint64_t seed = 1,
                            int trials = 3, int jobs = 1);

}  // namespace symstress

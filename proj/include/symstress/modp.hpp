#pragma once

#include "symstress/scalar.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace symstress {

// Degrees of the irreducible factors of f mod p (distinct-degree factorization).
// nullopt when p divides a denominator or the leading coefficient, or f is not
// squarefree mod p. Coefficients are constant term first.
std::optional<std::vector<int>> factor_degree_pattern(const std::vector<Rational>& f, std::uint64_t p);

// Every degree a factor over Q could have given a mod-p pattern.
std::set<int> subset_sums(const std::vector<int>& pattern);

struct IrreducibilityEvidence {
  bool certified = false;
  int degree = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<int>> patterns;
  std::set<int> possible_degrees;  // intersection over all primes used
};

IrreducibilityEvidence univariate_irreducibility(const std::vector<Rational>& f, int max_primes = 12);

}  // namespace symstress

#pragma once

#include "symstress/scalar.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace symstress {

std::uint64_t splitmix64(std::uint64_t& state);

// Derive an independent seed for a named pipeline stage.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage, std::uint64_t index = 0);

// Seeded generator with portable bounded draws (the standard distributions
// are implementation-defined, which would break byte-identical reports).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform double in [0,1).
  double uniform01();
  // Rational with numerator in [-num_bound, num_bound] over a fixed denominator.
  Rational rational(std::int64_t num_bound, std::int64_t den);
  // Rational in [lo, hi] on a grid of step 1/den.
  Rational rational_in(const Rational& lo, const Rational& hi, std::int64_t den);

private:
  std::mt19937_64 engine_;
};

// Numerator box and denominator used for generic sampling.
inline constexpr std::int64_t kGenericNumBound = 1000000;
inline constexpr std::int64_t kGenericDen = 1000;

}  // namespace symstress

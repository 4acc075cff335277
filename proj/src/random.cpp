#include "symstress/random.hpp"

#include <stdexcept>

namespace symstress {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage, std::uint64_t index) {
  // FNV-1a over the stage name, mixed with seed and index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stage) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t state = seed ^ h;
  splitmix64(state);
  state ^= index * 0xd1b54a32d192ed03ULL;
  return splitmix64(state);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational Rng::rational(std::int64_t num_bound, std::int64_t den) {
  Rational q(static_cast<long>(uniform_int(-num_bound, num_bound)), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Rational Rng::rational_in(const Rational& lo, const Rational& hi, std::int64_t den) {
  Rational steps = (hi - lo) * den;
  Integer n = steps.get_num() / steps.get_den();
  std::int64_t k = uniform_int(0, n.get_si());
  Rational q = lo + Rational(static_cast<long>(k), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace symstress

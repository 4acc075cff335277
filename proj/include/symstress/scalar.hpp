#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <type_traits>
#include <string>
#include <string_view>

namespace symstress {

using Rational = mpq_class;
using Integer = mpz_class;

enum class ScalarMode { Rational, Float };

// Domain errors carry a short machine-readable kind (e.g. "NotIsostatic").
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// Accepts "7", "-3/4", "0.125", "1e-3", "-2.5e2".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Exact rational for the shortest decimal that round-trips d.
Rational rational_from_double(double d);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double d) { return d == 0.0; }

template <class T> inline double as_double(const T& v) {
  if constexpr (std::is_same_v<T, Rational>)
    return v.get_d();
  else
    return static_cast<double>(v);
}

template <class T> inline T abs_value(const T& v) {
  if constexpr (std::is_same_v<T, Rational>)
    return abs(v);
  else
    return v < 0 ? -v : v;
}

const char* mode_name(ScalarMode m);
ScalarMode parse_mode(std::string_view s);

}  // namespace symstress

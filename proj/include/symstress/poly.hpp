#pragma once

#include "symstress/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symstress {

inline constexpr std::size_t kMaxPolyVars = 32;

struct Monomial {
  std::uint16_t deg = 0;
  std::array<std::uint8_t, kMaxPolyVars> e{};

  std::uint8_t operator[](std::size_t i) const { return e[i]; }
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& o) const;  // this / o, requires o | this
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

// Graded lexicographic order, largest first (x1 > y1 > x2 > ...).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.e > b.e;
  }
};

// Sparse multivariate polynomial over Q. Variables are indexed 0..nvars-1;
// for configuration polynomials variable 2i is x_{i+1} and 2i+1 is y_{i+1}.
class MultiPoly {
public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars);
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned k) const;
  // Quotient when o divides *this exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& o) const;
  // S with S^k == *this, when one exists.
  std::optional<MultiPoly> nth_root(unsigned k) const;

  // Positive rational c with (*this)/c integral and primitive.
  Rational content() const;
  // *this / content, with positive leading coefficient.
  MultiPoly primitive_part() const;

  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate(const std::vector<double>& x) const;
  // Sum of |term| at x, the natural scale for residual checks.
  double evaluate_abs(const std::vector<double>& x) const;

  // Coefficients (constant first) of the restriction to variable `var`,
  // every other variable set from x.
  std::vector<Rational> restrict_to(std::size_t var, const std::vector<Rational>& x) const;
  // Univariate restriction along x = base + t*dir.
  std::vector<Rational> restrict_to_line(const std::vector<Rational>& base, const std::vector<Rational>& dir) const;

  // Substitute variables: result var map[i] replaces var i (same nvars).
  MultiPoly rename(const std::vector<std::size_t>& map) const;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

std::vector<std::string> configuration_variable_names(int n);

}  // namespace symstress

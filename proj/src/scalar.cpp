#include "symstress/scalar.hpp"

#include <charconv>
#include <cmath>

namespace symstress {

namespace {

Rational parse_decimal(std::string_view s) {
  std::size_t epos = s.find_first_of("eE");
  std::string_view mant = s.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string_view::npos) {
    std::string_view e = s.substr(epos + 1);
    if (!e.empty() && e.front() == '+') e.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp10);
    if (ec != std::errc() || ptr != e.data() + e.size())
      throw std::invalid_argument("bad exponent in number: " + std::string(s));
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad number: " + std::string(s));
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac;
    } else {
      throw std::invalid_argument("bad number: " + std::string(s));
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number: " + std::string(s));
  Integer num(digits, 10);
  if (neg) num = -num;
  long shift = exp10 - frac;
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(num * p10) : Rational(num, p10);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational a = parse_decimal(text.substr(0, slash));
  Rational b = parse_decimal(text.substr(slash + 1));
  if (sgn(b) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return a / b;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  if (ec != std::errc()) throw std::invalid_argument("cannot format number");
  return parse_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

const char* mode_name(ScalarMode m) { return m == ScalarMode::Rational ? "rational" : "float"; }

ScalarMode parse_mode(std::string_view s) {
  if (s == "rational" || s == "exact") return ScalarMode::Rational;
  if (s == "float" || s == "double") return ScalarMode::Float;
  throw std::invalid_argument("unknown scalar mode: " + std::string(s));
}

}  // namespace symstress

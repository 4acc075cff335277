#include "symstress/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symstress {

namespace {

std::optional<Rational> rational_root(const Rational& c, unsigned k) {
  if (sgn(c) < 0 && k % 2 == 0) return std::nullopt;
  Integer num = abs(c.get_num()), den = c.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (sgn(c) < 0) r = -r;
  return r;
}

std::vector<Rational> upoly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    unsigned s = static_cast<unsigned>(e[i]) + o.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r;
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  return r;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxPolyVars) throw std::invalid_argument("too many polynomial variables");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  MultiPoly p(nvars);
  Monomial m;
  m.deg = 1;
  m.e[var] = 1;
  p.add_term(m, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0); }

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg; }

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(std::max(nvars_, o.nvars_));
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, Rational(1));
  MultiPoly b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  MultiPoly q(std::max(nvars_, d.nvars_));
  MultiPoly rem = *this;
  const Monomial& ld = d.leading_monomial();
  const Rational& lc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial lm = rem.leading_monomial();
    if (!ld.divides(lm)) return std::nullopt;
    Monomial t = lm.quotient(ld);
    Rational c = rem.leading_coefficient() / lc;
    q.add_term(t, c);
    for (const auto& [m, v] : d.terms_) rem.add_term(t * m, -c * v);
  }
  return q;
}

std::optional<MultiPoly> MultiPoly::nth_root(unsigned k) const {
  if (k == 0) return std::nullopt;
  if (is_zero()) return *this;
  if (k == 1) return *this;
  const Monomial& lm = leading_monomial();
  Monomial sm;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    if (lm.e[i] % k) return std::nullopt;
    sm.e[i] = static_cast<std::uint8_t>(lm.e[i] / k);
  }
  sm.deg = static_cast<std::uint16_t>(lm.deg / k);
  auto lc = rational_root(leading_coefficient(), k);
  if (!lc) return std::nullopt;
  MultiPoly s(nvars_);
  s.add_term(sm, *lc);
  // k * lt(S)^(k-1) divides the leading term of every correction.
  MultiPoly lead = s.pow(k - 1) * Rational(static_cast<long>(k));
  const Monomial& lead_m = lead.leading_monomial();
  const Rational lead_c = lead.leading_coefficient();
  Monomial last = sm;
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    MultiPoly rem = *this - s.pow(k);
    if (rem.is_zero()) return s;
    const Monomial& rm = rem.leading_monomial();
    if (!lead_m.divides(rm)) return std::nullopt;
    Monomial t = rm.quotient(lead_m);
    if (!GrlexGreater{}(last, t)) return std::nullopt;
    s.add_term(t, rem.leading_coefficient() / lead_c);
    last = t;
  }
  return std::nullopt;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(abs(g), l);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (sgn(leading_coefficient()) < 0) c = -c;
  return *this * (Rational(1) / c);
}

Rational MultiPoly::evaluate(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

double MultiPoly::evaluate(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.e[i]) t *= std::pow(x[i], m.e[i]);
    s += t;
  }
  return s;
}

double MultiPoly::evaluate_abs(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = std::abs(c.get_d());
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.e[i]) t *= std::pow(std::abs(x[i]), m.e[i]);
    s += t;
  }
  return s;
}

std::vector<Rational> MultiPoly::restrict_to(std::size_t var, const std::vector<Rational>& x) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, Rational(0));
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var)
        for (int k = 0; k < m.e[i]; ++k) t *= x[i];
    out[m.e[var]] += t;
  }
  trim(out);
  return out;
}

std::vector<Rational> MultiPoly::restrict_to_line(const std::vector<Rational>& base,
                                                  const std::vector<Rational>& dir) const {
  std::vector<std::vector<std::vector<Rational>>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back({Rational(1)});
  std::vector<Rational> out;
  for (const auto& [m, c] : terms_) {
    std::vector<Rational> t{c};
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m.e[i]) continue;
      auto& pw = powers[i];
      while (pw.size() <= m.e[i]) pw.push_back(upoly_mul(pw.back(), {base[i], dir[i]}));
      t = upoly_mul(t, pw[m.e[i]]);
    }
    if (t.size() > out.size()) out.resize(t.size(), Rational(0));
    for (std::size_t k = 0; k < t.size(); ++k) out[k] += t[k];
  }
  trim(out);
  return out;
}

MultiPoly MultiPoly::rename(const std::vector<std::size_t>& map) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial n;
    n.deg = m.deg;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.e[i]) n.e[map[i]] = static_cast<std::uint8_t>(n.e[map[i]] + m.e[i]);
    r.add_term(n, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1 && m.deg > 0;
    if (!unit) os << symstress::to_string(a);
    bool need_star = !unit;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m.e[i]) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
      need_star = true;
    }
  }
  return os.str();
}

std::vector<std::string> configuration_variable_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) {
    v.push_back("x" + std::to_string(i));
    v.push_back("y" + std::to_string(i));
  }
  return v;
}

}  // namespace symstress

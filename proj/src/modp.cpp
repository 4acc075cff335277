#include "symstress/modp.hpp"

#include <algorithm>

namespace symstress {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // constant first, trimmed

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::optional<u64> reduce(const Rational& q, u64 p) {
  Integer n, d;
  mpz_fdiv_r_ui(n.get_mpz_t(), q.get_num_mpz_t(), p);
  mpz_fdiv_r_ui(d.get_mpz_t(), q.get_den_mpz_t(), p);
  u64 dn = d.get_ui();
  if (dn == 0) return std::nullopt;
  return mulmod(n.get_ui(), inv(dn, p), p);
}

Poly polymod(Poly a, const Poly& b, u64 p) {
  trim(a);
  u64 li = inv(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), li, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly polydiv(Poly a, const Poly& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  u64 li = inv(b.back(), p);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    u64 c = mulmod(a[shift + b.size() - 1], li, p);
    q[shift] = c;
    if (c)
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
  }
  trim(q);
  return q;
}

Poly mulmodf(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return polymod(r, f, p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = polymod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 li = inv(a.back(), p);
    for (auto& c : a) c = mulmod(c, li, p);
  }
  return a;
}

Poly powmodf(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = polymod(base, f, p);
  while (e) {
    if (e & 1) r = mulmodf(r, base, f, p);
    base = mulmodf(base, base, f, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> factor_degree_pattern(const std::vector<Rational>& fq, u64 p) {
  Poly f;
  for (const auto& c : fq) {
    auto r = reduce(c, p);
    if (!r) return std::nullopt;
    f.push_back(*r);
  }
  if (f.empty() || f.back() == 0) return std::nullopt;
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return std::vector<int>{};
  Poly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(mulmod(f[i], i % p, p));
  trim(df);
  if (df.empty() || gcd(f, df, p).size() != 1) return std::nullopt;

  std::vector<int> pattern;
  Poly rest = f;
  Poly h{0, 1};  // x
  for (int i = 1; 2 * i <= static_cast<int>(rest.size()) - 1; ++i) {
    h = powmodf(h, p, rest, p);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    Poly g = gcd(rest, hx, p);
    int gd = static_cast<int>(g.size()) - 1;
    if (gd > 0) {
      for (int k = 0; k < gd / i; ++k) pattern.push_back(i);
      rest = polydiv(rest, g, p);
      h = polymod(h, rest, p);
    }
  }
  int rd = static_cast<int>(rest.size()) - 1;
  if (rd > 0) pattern.push_back(rd);
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::set<int> subset_sums(const std::vector<int>& pattern) {
  std::set<int> s{0};
  for (int d : pattern) {
    std::set<int> next = s;
    for (int x : s) next.insert(x + d);
    s = std::move(next);
  }
  return s;
}

IrreducibilityEvidence univariate_irreducibility(const std::vector<Rational>& f, int max_primes) {
  IrreducibilityEvidence ev;
  ev.degree = static_cast<int>(f.size()) - 1;
  for (int d = 0; d <= ev.degree; ++d) ev.possible_degrees.insert(d);
  if (ev.degree <= 1) {
    ev.certified = ev.degree == 1;
    ev.possible_degrees = {0, std::max(ev.degree, 0)};
    return ev;
  }
  u64 p = 1000003;
  int used = 0;
  for (int tries = 0; used < max_primes && tries < 200; ++tries, p += 2) {
    while (!is_prime(p)) p += 2;
    auto pat = factor_degree_pattern(f, p);
    if (!pat) continue;
    ++used;
    ev.primes.push_back(p);
    ev.patterns.push_back(*pat);
    auto sums = subset_sums(*pat);
    std::set<int> keep;
    for (int d : ev.possible_degrees)
      if (sums.count(d)) keep.insert(d);
    ev.possible_degrees = std::move(keep);
    if (ev.possible_degrees.size() <= 2) break;
  }
  ev.certified = ev.possible_degrees == std::set<int>{0, ev.degree};
  return ev;
}

}  // namespace symstress

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/numeric.hpp"

#include <stdexcept>

#include "wci/errors.hpp"
#include "wci/primes.hpp"

namespace wci {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return make_rational(int_from_string(s), 1);
  return make_rational(int_from_string(s.substr(0, slash)),
                       int_from_string(s.substr(slash + 1)));
}

Int int_from_string(const std::string& s) {
  Int n;
  if (n.set_str(s, 10) != 0)
    throw precondition_error("not a decimal integer: '" + s + "'");
  return n;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0 || p < 2) throw precondition_error("valuation needs n != 0, p >= 2");
  Int rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

namespace {

// Pollard-Brent rho; returns a nontrivial factor of composite odd n.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eedu);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = y, d = 1, q = 1, ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += m) {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        d = gcd(abs(x - ys), n);
      }
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (primes::is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 128)
    throw resource_error("composite cofactor too large to factor: " +
                         n.get_str());
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Int> distinct_prime_factors(const Int& n) {
  if (n < 2) throw precondition_error("factoring needs n > 1");
  std::vector<Int> factors;
  Int rest = n;
  for (std::uint64_t p : primes::small_primes()) {
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      factors.emplace_back(p);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    }
  }
  if (rest > 1) factor_into(rest, factors);
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return factors;
}

Int floor_below(const Rational& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (Rational(f) == q) f -= 1;  // q integral: strictly below
  return f;
}

Int ceil_above(const Rational& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (Rational(c) == q) c += 1;
  return c;
}

bool fits_uint64(const Int& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_uint64(const Int& n) {
  if (!fits_uint64(n)) throw resource_error("value does not fit in 64 bits");
  std::uint64_t v = mpz_getlimbn(n.get_mpz_t(), 0);
  return v;
}

Int sum(const std::vector<Int>& v) {
  Int s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace wci

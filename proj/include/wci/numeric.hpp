// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wci {

/// Arbitrary-precision integer. Entries of pairs, coefficients, counts and
/// Hilbert-series coefficients all use this type; there is no fixed-width
/// arithmetic anywhere in the library.
using Int = mpz_class;

/// Exact rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// num/den reduced to lowest terms.
Rational make_rational(const Int& num, const Int& den);

/// Canonical "num/den" rendering, e.g. "41/42", "1/1".
std::string rational_to_string(const Rational& q);

/// Parses "num/den" or a plain integer string.
Rational rational_from_string(const std::string& s);

Int int_from_string(const std::string& s);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// p-adic valuation of n (n != 0, p >= 2).
unsigned valuation(const Int& n, const Int& p);

/// Distinct prime divisors of n > 1, ascending. Uses trial division by small
/// primes, deterministic Miller-Rabin below 2^64 and Pollard-Brent rho for the
/// rest. Composite cofactors wider than ~128 bits raise resource_error.
std::vector<Int> distinct_prime_factors(const Int& n);

/// Largest integer strictly below q.
Int floor_below(const Rational& q);
/// Smallest integer strictly above q.
Int ceil_above(const Rational& q);

bool fits_uint64(const Int& n);
std::uint64_t to_uint64(const Int& n);

Int sum(const std::vector<Int>& v);

}  // namespace wci

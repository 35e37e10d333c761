// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wci/numeric.hpp"

namespace wci::primes {

inline constexpr std::uint64_t kDefaultSieveLimit = 1ull << 28;
inline constexpr std::uint64_t kDefaultDeltaNodeBudget = 2'000'000;

/// Primes up to and including `fixed` small bound, shared and immutable.
/// Used for trial division; built once on first use.
std::span<const std::uint64_t> small_primes();

/// Eratosthenes sieve over [2, limit]. Construction is single-threaded;
/// all queries on a built sieve are read-only and safely shareable.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit,
                 std::uint64_t budget = kDefaultSieveLimit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;
  /// #{p prime : p <= x}, x <= limit.
  std::uint64_t pi(std::uint64_t x) const;
  std::vector<std::uint64_t> primes_up_to(std::uint64_t x) const;
  /// #{p prime : a <= p <= b}, b <= limit.
  std::uint64_t count_in_closed(std::uint64_t a, std::uint64_t b) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> pi_block_;  // prime counts at block boundaries
};

/// Ascending primes <= limit.
std::vector<std::uint64_t> sieve(std::uint64_t limit,
                                 std::uint64_t budget = kDefaultSieveLimit);

/// #{p prime : p <= x}.
std::uint64_t prime_pi(std::uint64_t x,
                       std::uint64_t budget = kDefaultSieveLimit);

/// Primality for arbitrary-precision n: deterministic Miller-Rabin below
/// 2^64, BPSW with extra rounds above.
bool is_prime(const Int& n);

/// Smallest prime strictly greater than n.
Int next_prime_above(const Int& n);
/// Largest prime strictly less than n (n > 2).
Int prev_prime_below(const Int& n);

/// Rosser-Schoenfeld check x/ln x < pi(x) < 1.25506 x/ln x with outward
/// (interval) rounding: a verdict is only returned once it is rigorous,
/// escalating the working precision as needed. Precondition: x >= 17, the
/// classical validity threshold of the lower bound.
bool check_rs_inequality(std::uint64_t x,
                         std::uint64_t budget = kDefaultSieveLimit);
bool check_rs_inequality(std::uint64_t x, const Sieve& sieve);

/// #{p prime : lo < p < hi} with exact rational endpoints.
std::uint64_t count_primes_in_open_interval(
    const Rational& lo, const Rational& hi,
    std::uint64_t budget = kDefaultSieveLimit);
std::uint64_t count_primes_in_open_interval(const Rational& lo,
                                            const Rational& hi,
                                            const Sieve& sieve);

struct IntervalLemmaSample {
  Rational x;
  std::uint64_t count = 0;
  std::uint64_t required = 0;
  bool holds = false;
};

struct IntervalLemmaReport {
  int n = 0;
  bool checked_part_i = false;   // n+1 primes in (x, 2x), needs n >= 5
  bool checked_part_ii = false;  // n+1 primes in (2x/3, x), needs n >= 7
  std::vector<IntervalLemmaSample> part_i;
  std::vector<IntervalLemmaSample> part_ii;
  bool all_hold = true;
};

/// Verifies the prime-interval lemma instances at the sampled x values
/// (each must satisfy x >= 2^n). A reported failure is a bug by contract.
IntervalLemmaReport verify_interval_lemma(
    int n, std::span<const Rational> xs,
    std::uint64_t budget = kDefaultSieveLimit);

/// Primes p_0 < ... < p_{m+1} where the first m+1 reciprocals sum below 1
/// and adding 1/p_{m+1} crosses above it.
struct PrimeChain {
  std::vector<Int> primes;
  Rational partial_sum;  // over all but the last prime
};

/// True iff all PrimeChain invariants hold (ascending primality and the
/// exact straddle inequalities).
bool verify_prime_chain(const PrimeChain& chain);

/// Greedy construction: p_0 = 2, then repeatedly the smallest prime keeping
/// the reciprocal sum below 1, for m+1 primes; finally the smallest prime
/// above p_m whose reciprocal pushes the sum above 1. m >= 1.
PrimeChain straddle_chain(int m);

struct DeltaResult {
  Rational value;
  std::vector<Int> witness;
};

struct DeltaSearch {
  std::optional<DeltaResult> exact;  // empty <=> node budget exceeded
  std::uint64_t nodes_used = 0;
};

/// Exact minimum positive value of 1 - sum of n distinct prime reciprocals,
/// by branch-and-bound with exact rational pruning. n >= 1.
DeltaSearch delta(int n, std::uint64_t node_budget = kDefaultDeltaNodeBudget);

/// A witness certifying delta(n) <= 1/2^n, built by extending the exact
/// delta(4) witness one prime at a time within the gap-halving window
/// (1/g, 2/g). n >= 5.
DeltaResult delta_upper_bound(int n);

}  // namespace wci::primes

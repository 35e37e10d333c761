// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include "wci/errors.hpp"
#include "wci/primes.hpp"

using namespace wci;
using namespace wci::primes;

TEST_CASE("sieve produces the exact prime list") {
  CHECK(sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve(30) ==
        std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(sieve(2) == std::vector<std::uint64_t>{2});
  CHECK_THROWS_AS(sieve(1u << 20, 1u << 10), resource_error);
}

TEST_CASE("prime counting") {
  CHECK(prime_pi(100) == 25);
  CHECK(prime_pi(2) == 1);
  CHECK(prime_pi(1) == 0);
  CHECK(prime_pi(1'000'000) == 78498);
}

TEST_CASE("primality testing across sizes") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1811 * 1811));
  CHECK(is_prime(1811));
  CHECK(is_prime(654149));
  CHECK(is_prime(Int("27082315109")));
  CHECK_FALSE(is_prime(Int("27082315109") * 1811));
  // A Mersenne prime well beyond 64 bits.
  Int m127 = (Int(1) << 127) - 1;
  CHECK(is_prime(m127));
  CHECK_FALSE(is_prime(m127 * 3));
}

TEST_CASE("next and previous primes") {
  CHECK(next_prime_above(1) == 2);
  CHECK(next_prime_above(43) == 47);
  CHECK(next_prime_above(1806) == 1811);
  CHECK(prev_prime_below(3612) == 3607);
  CHECK_THROWS_AS(prev_prime_below(2), precondition_error);
}

TEST_CASE("rosser-schoenfeld band with rigorous rounding") {
  Sieve sv(200'000);
  CHECK(check_rs_inequality(100, sv));  // 21.71 < 25 < 27.25
  CHECK(check_rs_inequality(17, sv));   //  6.00 <  7 <  7.53
  CHECK(check_rs_inequality(100'000, sv));
  for (std::uint64_t x = 17; x <= 2000; ++x) CHECK(check_rs_inequality(x, sv));
  CHECK_THROWS_AS(check_rs_inequality(16, sv), precondition_error);
}

TEST_CASE("prime counts in open rational intervals") {
  Sieve sv(1'000);
  CHECK(count_primes_in_open_interval(Rational(32), Rational(64), sv) == 7);
  CHECK(count_primes_in_open_interval(make_rational(256, 3), Rational(128),
                                      sv) == 8);
  CHECK(count_primes_in_open_interval(Rational(2), Rational(3), sv) == 0);
  // Open endpoints: 7 itself is excluded on both sides.
  CHECK(count_primes_in_open_interval(Rational(7), Rational(11), sv) == 0);
  CHECK_THROWS_AS(
      count_primes_in_open_interval(Rational(3), Rational(2), sv),
      precondition_error);
}

TEST_CASE("interval lemma instances") {
  const auto xs = [](std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(Int(x));
    return out;
  };
  auto r = verify_interval_lemma(5, xs({32}));
  CHECK(r.all_hold);
  CHECK(r.part_i.front().count == 7);  // 37..61
  CHECK(r.part_i.front().required == 6);
  CHECK_FALSE(r.checked_part_ii);

  r = verify_interval_lemma(7, xs({128}));
  CHECK(r.all_hold);
  CHECK(r.checked_part_ii);
  CHECK(r.part_ii.front().count == 8);  // 89..127
  CHECK(r.part_ii.front().required == 8);

  r = verify_interval_lemma(8, xs({256}));
  CHECK(r.all_hold);
  CHECK(r.part_i.front().count == 43);

  CHECK_THROWS_AS(verify_interval_lemma(4, xs({16})), precondition_error);
  CHECK_THROWS_AS(verify_interval_lemma(5, xs({31})), precondition_error);
}

TEST_CASE("straddle chains on the documented instances") {
  auto chain = straddle_chain(1);
  CHECK(chain.primes == std::vector<Int>{2, 3, 5});
  CHECK(chain.partial_sum == make_rational(5, 6));

  chain = straddle_chain(2);
  CHECK(chain.primes == std::vector<Int>{2, 3, 7, 11});
  CHECK(chain.partial_sum == make_rational(41, 42));

  chain = straddle_chain(3);
  CHECK(chain.primes == std::vector<Int>{2, 3, 7, 43, 47});
  CHECK(chain.partial_sum == make_rational(1805, 1806));

  CHECK_THROWS_AS(straddle_chain(0), precondition_error);
}

TEST_CASE("straddle chains verify exactly up to m = 8") {
  for (int m = 1; m <= 8; ++m) {
    const PrimeChain chain = straddle_chain(m);
    CHECK(chain.primes.size() == static_cast<std::size_t>(m) + 2);
    CHECK(verify_prime_chain(chain));
    CHECK(chain.partial_sum < 1);
    CHECK(chain.partial_sum + make_rational(1, chain.primes.back()) > 1);
  }
}

TEST_CASE("exact delta values and witnesses") {
  auto search = delta(1);
  REQUIRE(search.exact.has_value());
  CHECK(search.exact->value == make_rational(1, 2));
  CHECK(search.exact->witness == std::vector<Int>{2});

  search = delta(3);
  REQUIRE(search.exact.has_value());
  CHECK(search.exact->value == make_rational(1, 42));
  CHECK(search.exact->witness == std::vector<Int>{2, 3, 7});

  search = delta(4);
  REQUIRE(search.exact.has_value());
  CHECK(search.exact->value == make_rational(1, 1806));
  CHECK(search.exact->witness == std::vector<Int>{2, 3, 7, 43});
}

TEST_CASE("delta decreases, stays positive, and respects its budget") {
  Rational previous = 1;
  for (int n = 1; n <= 5; ++n) {
    const auto search = delta(n);
    REQUIRE(search.exact.has_value());
    CHECK(search.exact->value > 0);
    CHECK(search.exact->value < previous);
    previous = search.exact->value;
  }
  // delta(5) is attained by extending the delta(4) witness.
  const auto five = delta(5);
  REQUIRE(five.exact.has_value());
  CHECK(five.exact->value == make_rational(5, 3270666));
  CHECK(five.exact->witness == std::vector<Int>{2, 3, 7, 43, 1811});

  const auto starved = delta(4, 3);
  CHECK_FALSE(starved.exact.has_value());
  CHECK(starved.nodes_used > 3);
}

TEST_CASE("delta upper-bound witnesses certify 1/2^n") {
  for (int n = 5; n <= 12; ++n) {
    const DeltaResult witness = delta_upper_bound(n);
    CHECK(witness.witness.size() == static_cast<std::size_t>(n));
    Rational check = 1;
    for (const auto& p : witness.witness) {
      CHECK(is_prime(p));
      check -= make_rational(1, p);
    }
    CHECK(check == witness.value);
    CHECK(witness.value > 0);
    CHECK(witness.value <= make_rational(1, Int(1) << n));
  }
  CHECK_THROWS_AS(delta_upper_bound(4), precondition_error);
}

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "wci/pairs.hpp"

// Brute-force reference implementations, kept independent of the library
// code paths they check.
namespace wci::testutil {

// Subset form of regularity: every nonempty weight subset with gcd > 1 has
// at least as many degrees divisible by that gcd.
inline bool brute_regular_subsets(const Pair& pair) {
  const auto& a = pair.weights();
  const auto& d = pair.degrees();
  const std::size_t n = a.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    Int g = 0;
    std::size_t size = 0;
    for (std::size_t l = 0; l < n; ++l)
      if (mask & (1ull << l)) {
        g = gcd(g, a[l]);
        ++size;
      }
    if (g <= 1) continue;
    std::size_t divisible = 0;
    for (const auto& deg : d)
      if (deg % g == 0) ++divisible;
    if (divisible < size) return false;
  }
  return true;
}

// Value-table dynamic program: which targets up to `target` are nonnegative
// combinations of the weights.
inline bool brute_representable(std::uint64_t target,
                                const std::vector<std::uint64_t>& weights) {
  const std::size_t size = static_cast<std::size_t>(target) + 1;
  if (size == 0) return false;
  std::vector<char> can(size, 0);
  can[0] = 1;
  for (std::size_t v = 1; v < can.size(); ++v)
    for (const auto w : weights)
      if (w <= v && can[v - w]) {
        can[v] = 1;
        break;
      }
  return can[target] != 0;
}

// Positive variant: every weight used at least once.
inline bool brute_positive_representable(
    std::uint64_t target, const std::vector<std::uint64_t>& weights) {
  std::uint64_t base = 0;
  for (const auto w : weights) base += w;
  if (base > target) return false;
  return brute_representable(target - base, weights);
}

// Number of exponent vectors with the given weighted degree.
inline Int brute_count_monomials(const std::vector<std::uint64_t>& weights,
                                 std::uint64_t m) {
  std::vector<Int> ways(m + 1, Int(0));
  ways[0] = 1;
  for (const auto w : weights)
    for (std::uint64_t v = w; v <= m; ++v) ways[v] += ways[v - w];
  return ways[m];
}

// Primitive middle Hodge numbers of the weighted Fermat hypersurface by
// direct Milnor-basis enumeration: exponent vectors with 0 <= e_l <=
// d/a_l - 2, bucketed by weighted degree (q+1)d - sum(a).
inline std::vector<Int> brute_fermat_middle_hodge(
    std::uint64_t d, const std::vector<std::uint64_t>& weights) {
  const long long n = static_cast<long long>(weights.size()) - 2;
  std::vector<Int> h(static_cast<std::size_t>(n) + 1, Int(0));
  std::uint64_t weight_sum = 0;
  for (const auto a : weights) weight_sum += a;
  for (const auto a : weights)
    if (d / a < 2) return h;  // a variable with an empty exponent box
  std::function<void(std::size_t, std::uint64_t)> walk =
      [&](std::size_t l, std::uint64_t degree) {
        if (l == weights.size()) {
          for (long long q = 0; q <= n; ++q) {
            const std::int64_t e =
                static_cast<std::int64_t>(n - q + 1) *
                    static_cast<std::int64_t>(d) -
                static_cast<std::int64_t>(weight_sum);
            if (e >= 0 && degree == static_cast<std::uint64_t>(e))
              h[static_cast<std::size_t>(q)] += 1;
          }
          return;
        }
        const std::uint64_t top = d / weights[l] - 2;
        for (std::uint64_t e = 0; e <= top; ++e)
          walk(l + 1, degree + e * weights[l]);
      };
  if (n >= 0) walk(0, 0);
  return h;
}

// Every canonical pair within the bounds, linear cones included.
inline void for_each_bounded_pair(
    int max_k, int max_weights, std::uint64_t max_degree, std::uint64_t max_weight,
    const std::function<void(const Pair&)>& visit) {
  std::vector<std::uint64_t> degrees, weights;
  std::function<void()> walk_weights = [&]() {
    if (!weights.empty()) {
      std::vector<Int> d(degrees.begin(), degrees.end());
      std::vector<Int> w(weights.begin(), weights.end());
      visit(Pair(std::move(d), std::move(w)));
    }
    if (weights.size() >= static_cast<std::size_t>(max_weights)) return;
    for (std::uint64_t a = weights.empty() ? 1 : weights.back();
         a <= max_weight; ++a) {
      weights.push_back(a);
      walk_weights();
      weights.pop_back();
    }
  };
  std::function<void()> walk_degrees = [&]() {
    if (!degrees.empty()) walk_weights();
    if (degrees.size() >= static_cast<std::size_t>(max_k)) return;
    for (std::uint64_t d = degrees.empty() ? 1 : degrees.back();
         d <= max_degree; ++d) {
      degrees.push_back(d);
      walk_degrees();
      degrees.pop_back();
    }
  };
  walk_degrees();
}

// Deterministic random pair source for property tests.
inline Pair random_pair(std::mt19937_64& rng, int max_k, int max_weights,
                        std::uint64_t max_entry) {
  std::uniform_int_distribution<int> kd(1, max_k), nd(1, max_weights);
  std::uniform_int_distribution<std::uint64_t> ed(1, max_entry);
  std::vector<Int> degrees, weights;
  const int k = kd(rng), n = nd(rng);
  for (int i = 0; i < k; ++i)
    degrees.emplace_back(static_cast<unsigned long>(ed(rng)));
  for (int i = 0; i < n; ++i)
    weights.emplace_back(static_cast<unsigned long>(ed(rng)));
  return Pair(std::move(degrees), std::move(weights));
}

}  // namespace wci::testutil

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/represent.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "wci/errors.hpp"

namespace wci {

bool Representation::verify() const {
  if (coefficients.size() != weights.size()) return false;
  Int s = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] < 0) return false;
    if (positive && coefficients[i] < 1) return false;
    s += coefficients[i] * weights[i];
  }
  return s == target;
}

namespace {

// Minimal representable value in each residue class modulo m using the given
// coins; -1 marks unreachable classes. Dijkstra on the residue cycle graph.
std::vector<Int> residue_min_table(std::uint64_t m,
                                   const std::vector<Int>& coins) {
  std::vector<Int> dist(m, Int(-1));
  using Node = std::pair<Int, std::uint64_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> queue;
  dist[0] = 0;
  queue.push({Int(0), 0});
  std::vector<std::uint64_t> steps;
  steps.reserve(coins.size());
  for (const auto& c : coins) steps.push_back(to_uint64(c % m));
  while (!queue.empty()) {
    auto [v, r] = queue.top();
    queue.pop();
    if (v > dist[r]) continue;
    for (std::size_t i = 0; i < coins.size(); ++i) {
      const std::uint64_t r2 = (r + steps[i]) % m;
      Int v2 = v + coins[i];
      if (dist[r2] < 0 || v2 < dist[r2]) {
        dist[r2] = v2;
        queue.push({std::move(v2), r2});
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<Representation> find_nonneg_representation(
    const Int& target, std::vector<Int> weights, const SearchLimits& limits) {
  if (weights.empty()) throw precondition_error("weights must be nonempty");
  for (const auto& w : weights)
    if (w <= 0) throw precondition_error("weights must be positive");
  if (target < 0) throw precondition_error("target must be nonnegative");
  std::sort(weights.begin(), weights.end());

  Representation rep;
  rep.target = target;
  rep.weights = weights;
  rep.positive = false;
  rep.coefficients.assign(weights.size(), 0);
  if (target == 0) return rep;

  // Weights above the target can never be used.
  const std::size_t usable =
      std::upper_bound(weights.begin(), weights.end(), target) -
      weights.begin();
  if (usable == 0) return std::nullopt;
  if (weights[0] > Int(limits.max_residue_table))
    throw resource_error("smallest usable weight " + weights[0].get_str() +
                         " exceeds the residue table budget");
  const std::uint64_t modulus = to_uint64(weights[0]);

  // tables[l]: minimal value per residue class reachable with weights 1..l
  // (weight 0 contributes multiples of the modulus for free).
  std::vector<std::vector<Int>> tables(usable);
  for (std::size_t l = 0; l < usable; ++l) {
    std::vector<Int> coins(weights.begin() + 1, weights.begin() + l + 1);
    tables[l] = residue_min_table(modulus, coins);
  }
  const auto representable = [&](const Int& v, std::size_t prefix) {
    if (v < 0) return false;
    const auto& table = tables[std::min(prefix, usable - 1)];
    const Int& best = table[to_uint64(v % modulus)];
    return best >= 0 && best <= v;
  };
  if (!representable(target, usable - 1)) return std::nullopt;

  // Lexicographically smallest read from the largest weight down: make each
  // coefficient as small as the remaining prefix allows.
  Int remaining = target;
  for (std::size_t l = weights.size(); l-- > 1;) {
    if (weights[l] > remaining) continue;  // coefficient stays 0
    Int t = 0;
    Int rest = remaining;
    while (!representable(rest, l - 1)) {
      t += 1;
      rest -= weights[l];
      if (rest < 0)
        throw contract_error("oracle prefix feasibility lied at weight " +
                             weights[l].get_str());
    }
    rep.coefficients[l] = t;
    remaining = rest;
  }
  if (remaining % weights[0] != 0)
    throw contract_error("oracle residual not a multiple of the base weight");
  rep.coefficients[0] = remaining / weights[0];
  if (!rep.verify()) throw contract_error("oracle output failed verification");
  return rep;
}

std::optional<Representation> find_positive_representation(
    const Pair& pair, const SearchLimits& limits) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  const Int index = pair.index();
  if (index < 0) return std::nullopt;
  auto alpha = find_nonneg_representation(index, pair.weights(), limits);
  if (!alpha) return std::nullopt;
  Representation rep = std::move(*alpha);
  for (auto& c : rep.coefficients) c += 1;
  rep.target = pair.degree_sum();
  rep.positive = true;
  if (!rep.verify())
    throw contract_error("positive representation failed verification");
  return rep;
}

Int sylvester_frobenius(const Int& a, const Int& b) {
  if (a < 2 || b < 2)
    throw precondition_error("coin values must be at least 2");
  if (gcd(a, b) != 1) throw precondition_error("non-coprime input");
  return a * b - a - b;
}

std::optional<std::pair<Int, Int>> two_coin_representation(const Int& m,
                                                           const Int& a,
                                                           const Int& b) {
  if (a <= 0 || b <= 0)
    throw precondition_error("coin values must be positive");
  if (gcd(a, b) != 1) throw precondition_error("non-coprime input");
  if (m < 0) return std::nullopt;
  Int x = 0;
  if (b > 1) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()) == 0)
      throw contract_error("coprime coin not invertible");
    x = (m % b) * inv % b;
  }
  if (x * a > m) return std::nullopt;
  return std::pair{x, (m - x * a) / b};
}

// ---------------------------------------------------------------------------
// Structural constructor for Cartier regular general-type pairs.
// ---------------------------------------------------------------------------

namespace {

struct Trace {
  std::vector<std::string> lines;
  void add(std::string s) { lines.push_back(std::move(s)); }
  std::string str() const {
    std::string out;
    for (const auto& l : lines) {
      out += "  ";
      out += l;
      out += '\n';
    }
    return out;
  }
};

[[noreturn]] void fail(const Trace& trace, const std::string& what) {
  throw contract_error("proof-path exhausted: " + what, trace.str());
}

std::string render(const std::vector<Int>& degrees,
                   const std::vector<Int>& weights) {
  return Pair(degrees, weights).to_string();
}

void check_beta(const std::vector<Int>& beta, const std::vector<Int>& degrees,
                const std::vector<Int>& weights, const Trace& trace,
                const std::string& where) {
  if (beta.size() != weights.size())
    fail(trace, where + ": coefficient count mismatch");
  Int s = 0;
  for (std::size_t l = 0; l < beta.size(); ++l) {
    if (beta[l] < 1) fail(trace, where + ": non-positive coefficient");
    s += beta[l] * weights[l];
  }
  if (s != sum(degrees)) fail(trace, where + ": defining equation violated");
}

std::vector<Int> erase_index(std::vector<Int> v, std::size_t idx) {
  v.erase(v.begin() + idx);
  return v;
}

// Smallest prime dividing at least two of the values, with the (sorted)
// indices it divides; empty when the values are pairwise coprime.
struct SharedPrime {
  Int p;
  std::vector<std::size_t> indices;
};

std::optional<SharedPrime> smallest_shared_prime(
    const std::vector<Int>& values) {
  std::set<Int> candidates;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const Int g = gcd(values[i], values[j]);
      if (g > 1) candidates.insert(g);
    }
  if (candidates.empty()) return std::nullopt;
  std::optional<Int> best;
  for (const auto& g : candidates)
    for (const auto& p : distinct_prime_factors(g))
      if (!best || p < *best) best = p;
  SharedPrime out;
  out.p = *best;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (mpz_divisible_p(values[i].get_mpz_t(), out.p.get_mpz_t()))
      out.indices.push_back(i);
  return out;
}

std::vector<Int> cartier_beta(const std::vector<Int>& degrees,
                              const std::vector<Int>& weights, Trace& trace,
                              int depth);

// Recurses on the pair with the given entries removed and re-inserts the
// supplied coefficients at the removed weight slots.
std::vector<Int> recurse_with_removed(
    const std::vector<Int>& degrees, const std::vector<Int>& weights,
    const std::vector<std::size_t>& removed_degrees,
    const std::vector<std::size_t>& removed_weights,
    const std::vector<Int>& inserted_coefficients, Trace& trace, int depth) {
  std::vector<Int> sub_degrees, sub_weights;
  for (std::size_t u = 0; u < degrees.size(); ++u)
    if (std::find(removed_degrees.begin(), removed_degrees.end(), u) ==
        removed_degrees.end())
      sub_degrees.push_back(degrees[u]);
  std::vector<std::size_t> kept;
  for (std::size_t l = 0; l < weights.size(); ++l)
    if (std::find(removed_weights.begin(), removed_weights.end(), l) ==
        removed_weights.end()) {
      kept.push_back(l);
      sub_weights.push_back(weights[l]);
    }
  const std::vector<Int> sub_beta =
      cartier_beta(sub_degrees, sub_weights, trace, depth + 1);
  std::vector<Int> beta(weights.size(), Int(0));
  for (std::size_t i = 0; i < kept.size(); ++i) beta[kept[i]] = sub_beta[i];
  for (std::size_t i = 0; i < removed_weights.size(); ++i)
    beta[removed_weights[i]] = inserted_coefficients[i];
  return beta;
}

struct Quotient {
  std::vector<Int> degrees;           // all divided by p
  std::vector<Int> weights;           // original order, selected slots divided
  std::vector<bool> divided;          // per weight slot
  Int index;                          // sum(degrees) - sum(weights)
};

// Divides every degree by p and the weight slots of maximal p-adic
// valuation by p.
Quotient divide_pair(const std::vector<Int>& degrees,
                     const std::vector<Int>& weights, const Int& p,
                     Trace& trace) {
  unsigned max_val = 0;
  for (const auto& a : weights)
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
      max_val = std::max(max_val, valuation(a, p));
  if (max_val == 0) fail(trace, "chosen prime divides no weight");
  Quotient q;
  q.divided.assign(weights.size(), false);
  for (const auto& d : degrees) {
    if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
      fail(trace, "degree not divisible by the chosen prime");
    q.degrees.push_back(d / p);
  }
  q.weights = weights;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (mpz_divisible_p(weights[l].get_mpz_t(), p.get_mpz_t()) &&
        valuation(weights[l], p) == max_val) {
      q.weights[l] = weights[l] / p;
      q.divided[l] = true;
    }
  }
  q.index = sum(q.degrees) - sum(q.weights);
  return q;
}

// Recurse on the quotient (sorting its weights first) and lift the result:
// divided slots keep their coefficient, the rest are scaled by p.
std::vector<Int> lift_quotient_beta(const Quotient& q, const Int& p,
                                    Trace& trace, int depth) {
  std::vector<std::size_t> order(q.weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return q.weights[a] < q.weights[b];
                   });
  std::vector<Int> sorted_weights;
  for (std::size_t idx : order) sorted_weights.push_back(q.weights[idx]);
  std::vector<Int> sorted_degrees = q.degrees;
  std::sort(sorted_degrees.begin(), sorted_degrees.end());
  const std::vector<Int> sub =
      cartier_beta(sorted_degrees, sorted_weights, trace, depth + 1);
  std::vector<Int> beta(q.weights.size(), Int(0));
  for (std::size_t i = 0; i < order.size(); ++i) beta[order[i]] = sub[i];
  for (std::size_t l = 0; l < beta.size(); ++l)
    if (!q.divided[l]) beta[l] *= p;
  return beta;
}

// Indices of weight slots equal to the value, ascending.
std::vector<std::size_t> slots_equal(const std::vector<Int>& weights,
                                     const Int& value) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < weights.size(); ++l)
    if (weights[l] == value) out.push_back(l);
  return out;
}

// Explicit coefficient assignments for the all-degrees-equal shape
// ((pc)^k | c^k, p^r) reached in the Fano-quotient analysis.
std::vector<Int> fano_full_match_beta(const std::vector<Int>& degrees,
                                      const std::vector<Int>& weights,
                                      const Int& p, const Int& c, Trace& trace,
                                      int depth) {
  const std::size_t k = degrees.size();
  const auto c_slots = slots_equal(weights, c);
  const auto p_slots = slots_equal(weights, p);
  const std::size_t r = p_slots.size();
  if (c_slots.size() != k || c_slots.size() + p_slots.size() != weights.size())
    fail(trace, "full-match shape is not (c^k, p^r)");
  if (r < 2 || r > k) fail(trace, "full-match shape needs 2 <= r <= k");
  std::vector<Int> beta(weights.size(), Int(0));
  const auto assign = [&](const std::vector<std::size_t>& slots,
                          const std::vector<Int>& values) {
    for (std::size_t i = 0; i < slots.size(); ++i) beta[slots[i]] = values[i];
  };
  if (k == 2) {
    trace.add("terminal identity pc+pc = c + (p-1)c + p + (c-1)p");
    assign(c_slots, {Int(1), p - 1});
    assign(p_slots, {Int(1), c - 1});
    return beta;
  }
  if (r == 2) {
    trace.add("terminal shape (c^k, p^2)");
    std::vector<Int> cv{Int(1), p - 1};
    cv.insert(cv.end(), k - 2, p);
    assign(c_slots, cv);
    assign(p_slots, {Int(1), c - 1});
    return beta;
  }
  if (r == 3 && c > 2) {
    trace.add("terminal shape (c^k, p^3), c > 2");
    std::vector<Int> cv{Int(1), p - 1};
    cv.insert(cv.end(), k - 2, p);
    assign(c_slots, cv);
    assign(p_slots, {Int(1), Int(1), c - 2});
    return beta;
  }
  if (r == 3 && c == 2) {
    trace.add("terminal shape (2^k, p^3)");
    std::vector<Int> cv{Int(1) + Int(k - 2) * p - Int(k)};
    cv.insert(cv.end(), k - 1, Int(1));
    assign(c_slots, cv);
    assign(p_slots, {Int(2), Int(1), Int(1)});
    return beta;
  }
  // r >= 4: peel two degrees and the weights (c, c, p, p); the reduced pair
  // is Cartier regular of general type with N-4 > k-2.
  trace.add("peeling (pc, pc | c, c, p, p) and recursing");
  std::vector<Int> beta_rest = recurse_with_removed(
      degrees, weights, {0, 1}, {c_slots[0], c_slots[1], p_slots[0], p_slots[1]},
      {Int(1), p - 1, Int(1), c - 1}, trace, depth);
  return beta_rest;
}

// The Fano-quotient analysis with 1 < f < k matching weights: peel the
// explicit identity on (p, p, c, c) and close the remainder directly or by
// recursion depending on N - k.
std::vector<Int> fano_partial_match_beta(const std::vector<Int>& degrees,
                                         const std::vector<Int>& weights,
                                         const Int& p, const Int& c,
                                         Trace& trace, int depth) {
  const std::size_t k = degrees.size();
  const long long nk = static_cast<long long>(weights.size()) - 1 -
                       static_cast<long long>(k);
  const auto c_slots = slots_equal(weights, c);
  const auto p_slots = slots_equal(weights, p);
  if (c_slots.size() < 2 || p_slots.size() < 2)
    fail(trace, "partial-match shape needs two weights equal to each of p, c");
  const Int pc = p * c;
  std::vector<Int> beta(weights.size(), Int(0));
  beta[p_slots[0]] = 1;
  beta[p_slots[1]] = c - 1;
  beta[c_slots[0]] = 1;
  beta[c_slots[1]] = p - 1;
  std::vector<std::size_t> used{p_slots[0], p_slots[1], c_slots[0],
                                c_slots[1]};
  std::vector<std::size_t> rest;
  for (std::size_t l = 0; l < weights.size(); ++l)
    if (std::find(used.begin(), used.end(), l) == used.end())
      rest.push_back(l);

  if (nk == 1) {
    trace.add("partial match, N = k+1: remaining slots get pc/a_l");
    for (std::size_t l : rest) {
      if (!mpz_divisible_p(pc.get_mpz_t(), weights[l].get_mpz_t()))
        fail(trace, "remaining weight does not divide pc");
      beta[l] = pc / weights[l];
    }
    return beta;
  }
  if (nk == 2) {
    if (k <= 2) fail(trace, "partial match with N = k+2 needs k > 2");
    // The remaining k-1 weights (each a proper divisor of pc) must absorb
    // (k-2)pc with positive coefficients. Solve the bounded split exactly.
    trace.add("partial match, N = k+2: splitting (k-2)pc over the rest");
    std::vector<Int> rest_values;
    Int rest_sum = 0;
    for (std::size_t l : rest) {
      rest_values.push_back(weights[l]);
      rest_sum += weights[l];
    }
    const Int target = Int(k - 2) * pc - rest_sum;
    if (target < 0) fail(trace, "remaining weights already exceed the split");
    const auto cert = find_nonneg_representation(target, rest_values);
    if (!cert) fail(trace, "no positive split of the remaining weights");
    for (std::size_t i = 0; i < rest.size(); ++i)
      beta[rest[i]] = cert->coefficients[i] + 1;
    return beta;
  }
  // N - k > 2: peel and recurse on the reduced Cartier regular pair.
  trace.add("partial match, N - k > 2: peeling (pc, pc | p, p, c, c)");
  return recurse_with_removed(degrees, weights, {0, 1}, used,
                              {Int(1), c - 1, Int(1), p - 1}, trace, depth);
}

std::vector<Int> cartier_beta(const std::vector<Int>& degrees,
                              const std::vector<Int>& weights, Trace& trace,
                              int depth) {
  if (depth > 200) fail(trace, "recursion depth exceeded");
  trace.add("pair " + render(degrees, weights));
  const Pair pair(degrees, weights);
  if (pair.degenerate()) fail(trace, "degenerate pair in recursion");
  if (!is_cartier(pair)) fail(trace, "recursion produced a non-Cartier pair");
  if (!is_regular(pair)) fail(trace, "recursion produced a non-regular pair");
  const Int index = pair.index();
  if (index <= 0) fail(trace, "recursion produced a non-general-type pair");
  if (pair.dim() <= 0) fail(trace, "recursion needs N > k");

  // Weight 1 shortcut: everything else gets coefficient 1.
  if (weights[0] == 1) {
    trace.add("weight-1 shortcut, coefficient i+1 = " + Int(index + 1).get_str());
    std::vector<Int> beta(weights.size(), Int(1));
    beta[0] = index + 1;
    check_beta(beta, degrees, weights, trace, "weight-1 shortcut");
    return beta;
  }

  // Matched degree/weight removal.
  if (const auto match = linear_cone_match(pair)) {
    const auto [u, l] = *match;
    trace.add("removing matched entry " + degrees[u].get_str());
    std::vector<Int> beta = recurse_with_removed(degrees, weights, {u}, {l},
                                                 {Int(1)}, trace, depth);
    check_beta(beta, degrees, weights, trace, "matched-entry removal");
    return beta;
  }

  // All weights exceed 1 and no weight equals a degree. Divide by a prime.
  // A prime with squared valuation in some weight leaves every quotient
  // weight above 1, so the quotient cannot be Fano; prefer such a prime,
  // otherwise the smallest prime dividing a weight.
  std::map<Int, unsigned> weight_primes;  // prime -> max valuation
  for (const auto& a : weights)
    for (const auto& q : distinct_prime_factors(a)) {
      auto [it, inserted] = weight_primes.try_emplace(q, 0u);
      it->second = std::max(it->second, valuation(a, q));
    }
  if (weight_primes.empty()) fail(trace, "no prime divides any weight");
  Int p = weight_primes.begin()->first;
  for (const auto& [q, val] : weight_primes)
    if (val >= 2) {
      p = q;
      break;
    }

  Quotient quotient = divide_pair(degrees, weights, p, trace);
  trace.add("divided by p = " + p.get_str() + ", quotient index " +
            quotient.index.get_str());
  if (quotient.index == 0) {
    std::vector<Int> beta(weights.size(), p);
    for (std::size_t l = 0; l < beta.size(); ++l)
      if (quotient.divided[l]) beta[l] = 1;
    check_beta(beta, degrees, weights, trace, "Calabi-Yau quotient");
    return beta;
  }
  if (quotient.index > 0) {
    std::vector<Int> beta = lift_quotient_beta(quotient, p, trace, depth);
    check_beta(beta, degrees, weights, trace, "general-type quotient");
    return beta;
  }

  // Fano quotient. The weights must all be squarefree, at least two primes
  // must divide them, and the analysis needs an odd prime.
  if (weight_primes.at(p) >= 2)
    fail(trace, "Fano quotient despite a squared prime divisor");
  for (const auto& [q, val] : weight_primes)
    if (val >= 2) fail(trace, "weights not squarefree in the Fano branch");
  if (weight_primes.size() < 2)
    fail(trace, "a single prime divides every weight");
  p = 0;
  for (const auto& [q, val] : weight_primes)
    if (q != 2) {
      p = q;
      break;
    }
  if (p == 0) fail(trace, "no odd prime divides any weight");
  Int c = 1;
  for (const auto& [q, val] : weight_primes)
    if (q != p) c *= q;
  const Int full_product = p * c;
  trace.add("Fano analysis with odd p = " + p.get_str() + ", c = " +
            c.get_str());

  // Normalize every degree to p*c, folding the correction into slot 0.
  bool needs_normalization = false;
  for (const auto& d : degrees) {
    if (!mpz_divisible_p(d.get_mpz_t(), full_product.get_mpz_t()))
      fail(trace, "degree not divisible by the full prime product");
    if (d != full_product) needs_normalization = true;
  }
  if (needs_normalization) {
    trace.add("normalizing degrees to " + full_product.get_str());
    if (!mpz_divisible_p(full_product.get_mpz_t(), weights[0].get_mpz_t()))
      fail(trace, "base weight does not divide the full prime product");
    std::vector<Int> reduced(degrees.size(), full_product);
    std::vector<Int> beta = cartier_beta(reduced, weights, trace, depth + 1);
    Int correction = 0;
    for (const auto& d : degrees)
      correction += (d / full_product - 1) * (full_product / weights[0]);
    beta[0] += correction;
    check_beta(beta, degrees, weights, trace, "degree normalization");
    return beta;
  }

  // All degrees equal p*c now; re-dispatch on the odd-p quotient.
  quotient = divide_pair(degrees, weights, p, trace);
  trace.add("odd-p quotient index " + quotient.index.get_str());
  if (quotient.index == 0) {
    std::vector<Int> beta(weights.size(), p);
    for (std::size_t l = 0; l < beta.size(); ++l)
      if (quotient.divided[l]) beta[l] = 1;
    check_beta(beta, degrees, weights, trace, "Calabi-Yau odd-p quotient");
    return beta;
  }
  if (quotient.index > 0) {
    std::vector<Int> beta = lift_quotient_beta(quotient, p, trace, depth);
    check_beta(beta, degrees, weights, trace, "general-type odd-p quotient");
    return beta;
  }

  std::size_t f = 0;
  for (const auto& a : quotient.weights)
    if (a == c) ++f;
  const std::size_t k = degrees.size();
  trace.add("Fano odd-p quotient, f = " + std::to_string(f));
  if (f == 0 || f == 1 || f > k)
    fail(trace, "matching count f = " + std::to_string(f) +
                    " impossible for a regular pair");
  std::vector<Int> beta =
      f == k ? fano_full_match_beta(degrees, weights, p, c, trace, depth)
             : fano_partial_match_beta(degrees, weights, p, c, trace, depth);
  check_beta(beta, degrees, weights, trace, "Fano analysis");
  return beta;
}

}  // namespace

Representation constructive_representation_cartier(const Pair& pair) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  if (!is_cartier(pair))
    throw precondition_error("constructive representation needs a Cartier pair");
  if (!is_regular(pair))
    throw precondition_error("constructive representation needs a regular pair");
  if (classify(pair).kind != PairKind::kGeneralType)
    throw precondition_error(
        "constructive representation needs a general-type pair");
  if (pair.dim() <= 0)
    throw precondition_error("constructive representation needs N > k");
  Trace trace;
  Representation rep;
  rep.coefficients = cartier_beta(pair.degrees(), pair.weights(), trace, 0);
  rep.target = pair.degree_sum();
  rep.weights = pair.weights();
  rep.positive = true;
  if (!rep.verify())
    throw contract_error("constructive representation failed verification",
                         trace.str());
  return rep;
}

// ---------------------------------------------------------------------------
// Codimension <= 2 constructor.
// ---------------------------------------------------------------------------

namespace {

// Positive coefficients for a single degree over a pairwise-coprime weight
// group, through the codimension-1 (Cartier) constructor.
std::vector<Int> codim1_group_beta(const Int& degree,
                                   const std::vector<Int>& group_weights,
                                   Trace& trace, int depth) {
  trace.add("codim-1 delegate on " + render({degree}, group_weights));
  return cartier_beta({degree}, group_weights, trace, depth + 1);
}

std::vector<Int> codim2_beta(const std::vector<Int>& degrees,
                             const std::vector<Int>& weights,
                             const SearchLimits& limits, Trace& trace,
                             int depth);

// Shared-prime division step: divide both degrees and the two p-divisible
// weights by p, then close directly (Calabi-Yau), by recursion (general
// type), or through the two Fano terminal identities.
std::vector<Int> codim2_shared_prime(const std::vector<Int>& degrees,
                                     const std::vector<Int>& weights,
                                     const SharedPrime& shared,
                                     const SearchLimits& limits, Trace& trace,
                                     int depth) {
  const Int& p = shared.p;
  if (shared.indices.size() != 2)
    fail(trace, "prime divides " + std::to_string(shared.indices.size()) +
                    " weights in a regular codim-2 pair");
  const std::size_t la = shared.indices[0], lb = shared.indices[1];
  for (const auto& d : degrees)
    if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
      fail(trace, "shared prime does not divide both degrees");
  std::vector<Int> qd{degrees[0] / p, degrees[1] / p};
  std::vector<Int> qw = weights;
  qw[la] /= p;
  qw[lb] /= p;
  const Int qindex = qd[0] + qd[1] - sum(qw);
  trace.add("shared prime p = " + p.get_str() + ", quotient index " +
            qindex.get_str());

  if (qindex == 0) {
    std::vector<Int> beta(weights.size(), p);
    beta[la] = beta[lb] = 1;
    return beta;
  }
  if (qindex > 0) {
    // Recurse on the sorted quotient and lift.
    std::vector<std::size_t> order(qw.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return qw[a] < qw[b];
                     });
    std::vector<Int> sorted_weights;
    for (std::size_t idx : order) sorted_weights.push_back(qw[idx]);
    std::sort(qd.begin(), qd.end());
    const std::vector<Int> sub =
        codim2_beta(qd, sorted_weights, limits, trace, depth + 1);
    std::vector<Int> beta(weights.size(), Int(0));
    for (std::size_t i = 0; i < order.size(); ++i) beta[order[i]] = sub[i];
    for (std::size_t l = 0; l < beta.size(); ++l)
      if (l != la && l != lb) beta[l] *= p;
    return beta;
  }

  // Fano quotient: both divided weights must have been exactly p.
  if (weights[la] != p || weights[lb] != p)
    fail(trace, "Fano quotient without two weights equal to p");
  const Int d1q = degrees[0] / p, d2q = degrees[1] / p;
  std::vector<std::size_t> other;
  for (std::size_t l = 0; l < weights.size(); ++l)
    if (l != la && l != lb) other.push_back(l);

  // Count how the quotient degrees match the untouched weights.
  std::vector<std::size_t> match1 = {}, match2 = {};
  for (std::size_t l : other) {
    if (weights[l] == d1q) match1.push_back(l);
    if (weights[l] == d2q) match2.push_back(l);
  }
  const bool both_match =
      d1q == d2q ? match1.size() >= 2 : (!match1.empty() && !match2.empty());
  if (both_match) {
    // ((p a, p g) | a, g, p, p): two-coin on (a, p).
    if (weights.size() != 4)
      fail(trace, "double-match Fano shape needs exactly four weights");
    const std::size_t sa = match1[0];
    const std::size_t sg = d1q == d2q ? match1[1] : match2[0];
    const Int alpha = weights[sa], gamma = weights[sg];
    const Int m = (p * alpha - alpha - p) + (p * gamma - gamma - p);
    const auto coin = two_coin_representation(m, alpha, p);
    if (!coin) fail(trace, "two-coin representation unexpectedly missing");
    trace.add("terminal identity pa+pg with two-coin over (a, p)");
    std::vector<Int> beta(weights.size(), Int(0));
    beta[sa] = coin->first + 1;
    beta[sg] = 1;
    beta[la] = coin->second + 1;
    beta[lb] = 1;
    return beta;
  }
  if (!match1.empty() || !match2.empty()) {
    // ((a p, 6 p) | a, 2, 3, p, p) with the matched weight a.
    if (weights.size() != 5)
      fail(trace, "single-match Fano shape needs exactly five weights");
    const bool first_matches = !match1.empty();
    const std::size_t sa = first_matches ? match1[0] : match2[0];
    const Int unmatched = first_matches ? d2q : d1q;
    if (unmatched != 6)
      fail(trace, "single-match Fano shape needs the other degree to be 6p");
    if (p < 5) fail(trace, "single-match Fano shape needs p >= 5");
    std::vector<Int> leftover;
    for (std::size_t l : other)
      if (l != sa) leftover.push_back(weights[l]);
    std::sort(leftover.begin(), leftover.end());
    if (leftover != std::vector<Int>{Int(2), Int(3)})
      fail(trace, "single-match Fano shape needs weights {2, 3}");
    trace.add("terminal identity ap+6p = pa + ((p-3)/2)2 + 3 + p + 4p");
    std::vector<Int> beta(weights.size(), Int(0));
    beta[sa] = p;
    for (std::size_t l : other) {
      if (l == sa) continue;
      if (weights[l] == 2)
        beta[l] = (p - 3) / 2;
      else
        beta[l] = 1;
    }
    beta[la] = 1;
    beta[lb] = 4;
    return beta;
  }
  fail(trace, "Fano quotient with no degree matching a weight");
}

std::vector<Int> codim2_beta(const std::vector<Int>& degrees,
                             const std::vector<Int>& weights,
                             const SearchLimits& limits, Trace& trace,
                             int depth) {
  if (depth > 200) fail(trace, "recursion depth exceeded");
  trace.add("pair " + render(degrees, weights));
  const Pair pair(degrees, weights);
  if (degrees.size() != 2) fail(trace, "codim-2 recursion needs two degrees");
  if (weights.size() < 4) fail(trace, "codim-2 recursion needs N > 2");
  if (!is_regular(pair)) fail(trace, "recursion produced a non-regular pair");
  const Int index = pair.index();
  if (index <= 0) fail(trace, "recursion produced a non-general-type pair");

  if (weights[0] == 1) {
    trace.add("weight-1 shortcut");
    std::vector<Int> beta(weights.size(), Int(1));
    beta[0] = index + 1;
    check_beta(beta, degrees, weights, trace, "weight-1 shortcut");
    return beta;
  }

  if (const auto match = linear_cone_match(pair)) {
    const auto [u, l] = *match;
    trace.add("removing matched entry " + degrees[u].get_str());
    const std::vector<Int> rest_degrees = erase_index(degrees, u);
    const std::vector<Int> rest_weights = erase_index(weights, l);
    const std::vector<Int> sub =
        codim1_group_beta(rest_degrees[0], rest_weights, trace, depth);
    std::vector<Int> beta = sub;
    beta.insert(beta.begin() + l, Int(1));
    check_beta(beta, degrees, weights, trace, "matched-entry removal");
    return beta;
  }

  const auto shared = smallest_shared_prime(weights);
  if (shared) {
    std::vector<Int> beta =
        codim2_shared_prime(degrees, weights, *shared, limits, trace, depth);
    check_beta(beta, degrees, weights, trace, "shared-prime division");
    return beta;
  }

  // Pairwise-coprime weights: split by divisibility against the degrees.
  const Int d1 = degrees[0], d2 = degrees[1];
  std::vector<std::size_t> group1, group2;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (mpz_divisible_p(d1.get_mpz_t(), weights[l].get_mpz_t()))
      group1.push_back(l);
    else if (mpz_divisible_p(d2.get_mpz_t(), weights[l].get_mpz_t()))
      group2.push_back(l);
    else
      fail(trace, "weight divides neither degree in a regular pair");
  }
  const auto values = [&](const std::vector<std::size_t>& idx) {
    std::vector<Int> v;
    for (std::size_t l : idx) v.push_back(weights[l]);
    return v;
  };

  if (group2.empty() || group1.empty()) {
    // Every weight divides one degree; add the oracle certificate of the
    // other degree on top of a codim-1 certificate.
    const bool via_d1 = group2.empty();
    const Int& own = via_d1 ? d1 : d2;
    const Int& added = via_d1 ? d2 : d1;
    trace.add("all weights divide one degree; adding the other's certificate");
    const std::vector<Int> base =
        codim1_group_beta(own, weights, trace, depth);
    const auto cert = find_nonneg_representation(added, weights, limits);
    if (!cert)
      fail(trace, "missing nonnegative certificate for degree " +
                      added.get_str());
    std::vector<Int> beta(weights.size());
    for (std::size_t l = 0; l < weights.size(); ++l)
      beta[l] = base[l] + cert->coefficients[l];
    check_beta(beta, degrees, weights, trace, "certificate addition");
    return beta;
  }

  const auto two_coin_branch = [&](const Int& coin_degree,
                                   const std::vector<std::size_t>& coin_group,
                                   const Int& unit_degree,
                                   const std::vector<std::size_t>& unit_group) {
    // coin_degree is divisible by the two coprime coin weights; every unit
    // weight divides unit_degree, so its slack is positive and the combined
    // slack clears the Frobenius bound.
    const Int ax = weights[coin_group[0]], ay = weights[coin_group[1]];
    Int slack = unit_degree;
    for (std::size_t l : unit_group) slack -= weights[l];
    if (!(slack > 0)) fail(trace, "unit-group slack not positive");
    const Int m = (coin_degree - ax - ay) + slack;
    const auto coin = two_coin_representation(m, ax, ay);
    if (!coin) fail(trace, "two-coin certificate unexpectedly missing");
    trace.add("two-coin branch over (" + ax.get_str() + ", " + ay.get_str() +
              ")");
    std::vector<Int> beta(weights.size(), Int(1));
    beta[coin_group[0]] = coin->first + 1;
    beta[coin_group[1]] = coin->second + 1;
    return beta;
  };

  std::vector<Int> beta(weights.size(), Int(0));
  if (group1.size() == 1) {
    trace.add("single weight divides the first degree");
    const std::vector<Int> sub =
        codim1_group_beta(d2, values(group2), trace, depth);
    for (std::size_t i = 0; i < group2.size(); ++i) beta[group2[i]] = sub[i];
    beta[group1[0]] = d1 / weights[group1[0]];
  } else if (group2.size() == 1) {
    trace.add("single weight divides the second degree");
    const std::vector<Int> sub =
        codim1_group_beta(d1, values(group1), trace, depth);
    for (std::size_t i = 0; i < group1.size(); ++i) beta[group1[i]] = sub[i];
    beta[group2[0]] = d2 / weights[group2[0]];
  } else if (group1.size() == 2) {
    beta = two_coin_branch(d1, group1, d2, group2);
  } else if (group2.size() == 2) {
    beta = two_coin_branch(d2, group2, d1, group1);
  } else {
    trace.add("coprime split with two codim-1 delegates");
    const std::vector<Int> sub1 =
        codim1_group_beta(d1, values(group1), trace, depth);
    const std::vector<Int> sub2 =
        codim1_group_beta(d2, values(group2), trace, depth);
    for (std::size_t i = 0; i < group1.size(); ++i) beta[group1[i]] = sub1[i];
    for (std::size_t i = 0; i < group2.size(); ++i) beta[group2[i]] = sub2[i];
  }
  check_beta(beta, degrees, weights, trace, "coprime split");
  return beta;
}

}  // namespace

Representation representation_codim_le2(const Pair& pair,
                                        const SearchLimits& limits) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  const std::size_t k = pair.codim();
  if (k != 1 && k != 2)
    throw precondition_error("codim constructor handles k = 1 or 2 only");
  if (!is_regular(pair))
    throw precondition_error("codim constructor needs a regular pair");
  if (classify(pair).kind != PairKind::kGeneralType)
    throw precondition_error("codim constructor needs a general-type pair");

  if (k == 1) {
    if (pair.weight_count() < 3)
      throw precondition_error("codimension 1 needs N > 1");
    // A regular pair with one degree is Cartier: each weight must divide it.
    if (!is_cartier(pair))
      throw contract_error("regular codim-1 pair is not Cartier: " +
                           pair.to_string());
    return constructive_representation_cartier(pair);
  }

  if (pair.weight_count() < 4)
    throw precondition_error("codimension 2 needs N > 2");
  for (const auto& d : pair.degrees())
    if (!find_nonneg_representation(d, pair.weights(), limits))
      throw precondition_error(
          "missing nonnegative certificate for degree " + d.get_str());

  Trace trace;
  Representation rep;
  rep.coefficients =
      codim2_beta(pair.degrees(), pair.weights(), limits, trace, 0);
  rep.target = pair.degree_sum();
  rep.weights = pair.weights();
  rep.positive = true;
  if (!rep.verify())
    throw contract_error("codim-2 representation failed verification",
                         trace.str());
  return rep;
}

}  // namespace wci

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/pairs.hpp"

#include <algorithm>
#include <set>

#include "wci/errors.hpp"

namespace wci {

Pair::Pair(std::vector<Int> degrees, std::vector<Int> weights)
    : degrees_(std::move(degrees)), weights_(std::move(weights)) {
  for (const auto& d : degrees_)
    if (d <= 0) throw precondition_error("degrees must be positive");
  for (const auto& a : weights_)
    if (a <= 0) throw precondition_error("weights must be positive");
  std::sort(degrees_.begin(), degrees_.end());
  std::sort(weights_.begin(), weights_.end());
}

Int Pair::index() const { return degree_sum() - weight_sum(); }
Int Pair::degree_sum() const { return sum(degrees_); }
Int Pair::weight_sum() const { return sum(weights_); }

std::string Pair::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    s += (i ? "," : "") + degrees_[i].get_str();
  s += " | ";
  for (std::size_t i = 0; i < weights_.size(); ++i)
    s += (i ? "," : "") + weights_[i].get_str();
  return s + ")";
}

std::string pair_kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::kFano:
      return "Fano";
    case PairKind::kCalabiYau:
      return "CalabiYau";
    case PairKind::kGeneralType:
      return "GeneralType";
  }
  return "?";
}

PairClass classify(const Pair& pair) {
  PairClass c;
  c.index = pair.index();
  c.kind = c.index < 0    ? PairKind::kFano
           : c.index == 0 ? PairKind::kCalabiYau
                          : PairKind::kGeneralType;
  return c;
}

namespace {

// Closure of the weight multiset under pairwise gcd. A divisor at which the
// counting condition fails forces a failure at the gcd of the weights it
// divides, so these candidates decide regularity exactly.
std::vector<Int> gcd_closure(const std::vector<Int>& weights) {
  std::set<Int> closure(weights.begin(), weights.end());
  std::vector<Int> worklist(closure.begin(), closure.end());
  while (!worklist.empty()) {
    const Int x = worklist.back();
    worklist.pop_back();
    for (const auto& y : closure) {
      const Int g = gcd(x, y);
      if (g > 1 && closure.insert(g).second) worklist.push_back(g);
    }
  }
  std::vector<Int> out;
  for (const auto& g : closure)
    if (g > 1) out.push_back(g);
  return out;  // ascending from the set ordering
}

}  // namespace

std::optional<RegularityWitness> regularity_violation(const Pair& pair) {
  for (const auto& divisor : gcd_closure(pair.weights())) {
    RegularityWitness w;
    w.divisor = divisor;
    for (std::size_t l = 0; l < pair.weights().size(); ++l) {
      if (mpz_divisible_p(pair.weights()[l].get_mpz_t(),
                          divisor.get_mpz_t())) {
        ++w.weights_divisible;
        w.weight_indices.push_back(l);
      }
    }
    for (const auto& d : pair.degrees())
      if (mpz_divisible_p(d.get_mpz_t(), divisor.get_mpz_t()))
        ++w.degrees_divisible;
    if (w.degrees_divisible < w.weights_divisible) return w;
  }
  return std::nullopt;
}

bool is_regular(const Pair& pair) {
  return !regularity_violation(pair).has_value();
}

bool is_space_well_formed(std::span<const Int> weights) {
  if (weights.size() < 2)
    throw precondition_error("well-formedness needs at least two weights");
  const std::size_t n = weights.size();
  std::vector<Int> prefix(n + 1, 0), suffix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = gcd(prefix[i], weights[i]);
  for (std::size_t i = n; i-- > 0;) suffix[i] = gcd(suffix[i + 1], weights[i]);
  for (std::size_t l = 0; l < n; ++l)
    if (gcd(prefix[l], suffix[l + 1]) != 1) return false;
  return true;
}

Int picard_generator(std::span<const Int> weights) {
  if (weights.empty())
    throw precondition_error("picard generator needs at least one weight");
  Int r = 1;
  for (const auto& a : weights) r = lcm(r, a);
  return r;
}

std::optional<CartierWitness> cartier_violation(const Pair& pair) {
  for (std::size_t l = 0; l < pair.weights().size(); ++l)
    for (std::size_t u = 0; u < pair.degrees().size(); ++u)
      if (!mpz_divisible_p(pair.degrees()[u].get_mpz_t(),
                           pair.weights()[l].get_mpz_t()))
        return CartierWitness{l, u};
  return std::nullopt;
}

bool is_cartier(const Pair& pair) {
  return !cartier_violation(pair).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> linear_cone_match(
    const Pair& pair) {
  for (std::size_t u = 0; u < pair.degrees().size(); ++u)
    for (std::size_t l = 0; l < pair.weights().size(); ++l)
      if (pair.degrees()[u] == pair.weights()[l]) return std::pair{u, l};
  return std::nullopt;
}

bool is_linear_cone(const Pair& pair) {
  return linear_cone_match(pair).has_value();
}

Pair normalize(const Pair& pair) {
  const auto& d = pair.degrees();
  const auto& a = pair.weights();
  std::vector<Int> degrees, weights;
  std::size_t i = 0, j = 0;
  while (i < d.size() && j < a.size()) {
    if (d[i] == a[j]) {  // matched, drop both
      ++i;
      ++j;
    } else if (d[i] < a[j]) {
      degrees.push_back(d[i++]);
    } else {
      weights.push_back(a[j++]);
    }
  }
  degrees.insert(degrees.end(), d.begin() + i, d.end());
  weights.insert(weights.end(), a.begin() + j, a.end());
  return Pair(std::move(degrees), std::move(weights));
}

namespace {

// (6^k | 1^s, 2^k, 3^k) up to order.
bool pst_exceptional_shape(const Pair& pair) {
  const std::size_t k = pair.codim();
  for (const auto& d : pair.degrees())
    if (d != 6) return false;
  std::size_t twos = 0, threes = 0;
  for (const auto& a : pair.weights()) {
    if (a == 1) continue;
    if (a == 2)
      ++twos;
    else if (a == 3)
      ++threes;
    else
      return false;
  }
  return twos == k && threes == k;
}

}  // namespace

bool check_pst_bound(const Pair& pair) {
  if (pair.degenerate())
    throw precondition_error("degenerate pair");
  if (!is_regular(pair))
    throw precondition_error("pst bound needs a regular pair");
  if (classify(pair).kind == PairKind::kGeneralType)
    throw precondition_error("pst bound needs a Fano or Calabi-Yau pair");
  if (is_linear_cone(pair))
    throw precondition_error("pst bound needs no degree equal to a weight");

  const Int i = pair.index();  // <= 0 here
  const Int first = Int(pair.codim()) - i - 1;
  const Int second = first + 1;
  const auto& a = pair.weights();
  const Int max_index = Int(a.size()) - 1;
  if (first > max_index) return false;
  if (a[mpz_get_ui(first.get_mpz_t())] != 1) return false;
  if (second <= max_index && a[mpz_get_ui(second.get_mpz_t())] == 1)
    return true;
  return pst_exceptional_shape(pair);
}

CheckReport check_pair(const Pair& pair) {
  CheckReport r;
  r.regular_witness = regularity_violation(pair);
  r.regular = !r.regular_witness.has_value();
  r.space_well_formed = is_space_well_formed(pair.weights());
  r.cartier_witness = cartier_violation(pair);
  r.cartier = !r.cartier_witness.has_value();
  r.linear_cone_pair = linear_cone_match(pair);
  r.linear_cone = r.linear_cone_pair.has_value();
  return r;
}

}  // namespace wci

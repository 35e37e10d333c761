// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/hodge.hpp"

#include "wci/errors.hpp"

namespace wci {

namespace {

std::size_t series_length(const Int& top, const SeriesLimits& limits) {
  if (top < 0) throw precondition_error("series truncation below zero");
  if (top + 1 > Int(limits.max_terms))
    throw resource_error("series of " + Int(top + 1).get_str() +
                         " terms exceeds the budget");
  return to_uint64(top) + 1;
}

// poly *= (1 - t^e), truncated to the vector length; e = 0 zeroes it.
void mul_one_minus_power(std::vector<Int>& poly, const Int& e) {
  if (e == 0) {
    for (auto& c : poly) c = 0;
    return;
  }
  if (e >= Int(poly.size())) return;
  const std::size_t step = to_uint64(e);
  for (std::size_t j = poly.size(); j-- > step;) poly[j] -= poly[j - step];
}

// poly /= (1 - t^e), truncated; e >= 1.
void div_one_minus_power(std::vector<Int>& poly, const Int& e) {
  if (e <= 0) throw precondition_error("series division needs e >= 1");
  if (e >= Int(poly.size())) return;
  const std::size_t step = to_uint64(e);
  for (std::size_t j = step; j < poly.size(); ++j) poly[j] += poly[j - step];
}

}  // namespace

Int count_monomials(const std::vector<Int>& weights, const Int& m,
                    const SeriesLimits& limits) {
  for (const auto& a : weights)
    if (a <= 0) throw precondition_error("weights must be positive");
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (weights.empty()) return 0;
  std::vector<Int> poly(series_length(m, limits), Int(0));
  poly[0] = 1;
  for (const auto& a : weights) div_one_minus_power(poly, a);
  return poly.back();
}

Int h0n(const Pair& pair, const SeriesLimits& limits) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  const Int index = pair.index();
  if (index < 0) return 0;
  std::vector<Int> poly(series_length(index, limits), Int(0));
  poly[0] = 1;
  for (const auto& d : pair.degrees()) mul_one_minus_power(poly, d);
  for (const auto& a : pair.weights()) div_one_minus_power(poly, a);
  return poly.back();
}

std::string theorem_branch_name(TheoremBranch branch) {
  switch (branch) {
    case TheoremBranch::kFano:
      return "Fano";
    case TheoremBranch::kCalabiYau:
      return "CalabiYau";
    case TheoremBranch::kCartierGeneralType:
      return "CartierGeneralType";
    case TheoremBranch::kCodim2GeneralType:
      return "Codim2GeneralType";
    case TheoremBranch::kUnclassified:
      return "Unclassified";
  }
  return "?";
}

HodgeVerdict hodge_level_verdict(const Pair& pair, const SeriesLimits& limits) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  if (pair.dim() <= 0)
    throw precondition_error("hodge verdict needs N > k");
  HodgeVerdict v;
  v.dimension = pair.dim();
  v.index = pair.index();
  v.h0n = h0n(pair, limits);
  v.hodge_level_max = v.h0n > 0;

  const PairClass cls = classify(pair);
  if (cls.kind == PairKind::kFano) {
    v.branch = TheoremBranch::kFano;
  } else if (cls.kind == PairKind::kCalabiYau) {
    v.branch = TheoremBranch::kCalabiYau;
  } else if (is_regular(pair)) {
    if (is_cartier(pair)) {
      v.branch = TheoremBranch::kCartierGeneralType;
    } else if (pair.codim() == 2 && pair.weight_count() >= 4 &&
               find_nonneg_representation(pair.degrees()[0], pair.weights()) &&
               find_nonneg_representation(pair.degrees()[1], pair.weights())) {
      v.branch = TheoremBranch::kCodim2GeneralType;
    }
  }

  // Each labeled branch predicts the computed verdict; a mismatch would be
  // a bug by contract.
  const bool predicted_max = v.branch == TheoremBranch::kCalabiYau ||
                             v.branch == TheoremBranch::kCartierGeneralType ||
                             v.branch == TheoremBranch::kCodim2GeneralType;
  const bool predicted_not_max = v.branch == TheoremBranch::kFano;
  if ((predicted_max && !v.hodge_level_max) ||
      (predicted_not_max && v.hodge_level_max))
    throw contract_error("verdict contradicts its theorem branch for " +
                         pair.to_string());
  if (v.branch == TheoremBranch::kCalabiYau && v.h0n != 1)
    throw contract_error("Calabi-Yau pair with h0n != 1: " + pair.to_string());
  return v;
}

HodgeVector hypersurface_middle_hodge(const Pair& pair,
                                      const SeriesLimits& limits) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  if (pair.codim() != 1)
    throw precondition_error("middle Hodge numbers computed for k = 1 only");
  if (!is_cartier(pair))
    throw precondition_error(
        "middle Hodge numbers need a Cartier hypersurface");
  if (pair.dim() < 0)
    throw precondition_error("hypersurface needs at least two weights");

  const Int d = pair.degrees()[0];
  const Int weight_sum = pair.weight_sum();
  const long long n = pair.dim();
  HodgeVector out;
  out.h.assign(static_cast<std::size_t>(n) + 1, Int(0));

  const Int top = Int(static_cast<long>(n) + 1) * d - weight_sum;  // exponent at q = 0
  if (top < 0) return out;
  std::vector<Int> poly(series_length(top, limits), Int(0));
  poly[0] = 1;
  for (const auto& a : pair.weights()) {
    mul_one_minus_power(poly, d - a);  // d == a zeroes the series
    div_one_minus_power(poly, a);
  }
  for (long long q = 0; q <= n; ++q) {
    const Int e = Int(static_cast<long>(n - q) + 1) * d - weight_sum;
    if (e >= 0 && e < Int(poly.size()))
      out.h[static_cast<std::size_t>(q)] = poly[to_uint64(e)];
  }
  return out;
}

bool verify_h0n_consistency(const Pair& pair, const SeriesLimits& limits,
                            const SearchLimits& search) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  const bool monomial = h0n(pair, limits) > 0;
  const bool representation = find_positive_representation(pair, search).has_value();
  return monomial == representation;
}

}  // namespace wci

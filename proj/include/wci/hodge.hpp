// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wci/pairs.hpp"
#include "wci/represent.hpp"

namespace wci {

struct SeriesLimits {
  /// Maximum number of power-series coefficients held at once.
  std::uint64_t max_terms = 1u << 24;
};

/// Number of ways to write m as a nonnegative integer combination of the
/// weights: the coefficient of t^m in prod 1/(1 - t^{a_l}), computed with
/// exact big-integer truncated series. 0 for m < 0, 1 for m = 0.
Int count_monomials(const std::vector<Int>& weights, const Int& m,
                    const SeriesLimits& limits = {});

/// h^{0,n}: the coefficient of t^{index} in
/// prod_u (1 - t^{d_u}) * prod_l (1 - t^{a_l})^{-1}, i.e. the dimension of
/// the degree-index piece of the complete-intersection coordinate ring.
/// Zero whenever the index is negative. Pair must be nondegenerate.
Int h0n(const Pair& pair, const SeriesLimits& limits = {});

enum class TheoremBranch {
  kFano,
  kCalabiYau,
  kCartierGeneralType,
  kCodim2GeneralType,
  kUnclassified,
};

std::string theorem_branch_name(TheoremBranch branch);

/// Hodge-level maximality verdict together with the classification branch
/// that predicts it (when one applies).
struct HodgeVerdict {
  long long dimension = 0;
  Int index;
  Int h0n;
  bool hodge_level_max = false;
  TheoremBranch branch = TheoremBranch::kUnclassified;
};

/// Computes h^{0,n} and labels the predicting branch: Fano pairs never have
/// maximal Hodge level, Calabi-Yau pairs always do with h^{0,n} = 1, Cartier
/// regular general-type pairs always do, and codimension-2 regular
/// general-type pairs with oracle certificates for both degrees do as well.
/// Pair must be nondegenerate with N > k.
HodgeVerdict hodge_level_verdict(const Pair& pair,
                                 const SeriesLimits& limits = {});

/// Primitive middle Hodge numbers h_pr^{q, n-q} for q = 0..n.
struct HodgeVector {
  std::vector<Int> h;
};

/// Hypersurface (k = 1) primitive middle Hodge numbers:
/// h_pr^{q, n-q} = coefficient of t^{(n-q+1)d - sum(a)} in
/// prod_l (1 - t^{d - a_l}) / (1 - t^{a_l}). Requires k = 1 and a Cartier
/// pair (so the Fermat-type model exists); anything else is rejected.
HodgeVector hypersurface_middle_hodge(const Pair& pair,
                                      const SeriesLimits& limits = {});

/// True iff h^{0,n} > 0 exactly when a positive representation exists.
bool verify_h0n_consistency(const Pair& pair, const SeriesLimits& limits = {},
                            const SearchLimits& search = {});

}  // namespace wci

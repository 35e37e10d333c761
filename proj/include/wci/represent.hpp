// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wci/pairs.hpp"

namespace wci {

/// A certificate vector: target = sum of coefficients[l] * weights[l],
/// with every coefficient >= 1 when the positivity flag is set.
struct Representation {
  std::vector<Int> coefficients;
  Int target;
  std::vector<Int> weights;
  bool positive = false;

  /// Re-substitutes the defining equation; every constructor in this module
  /// runs this before returning.
  bool verify() const;
};

struct SearchLimits {
  /// Upper bound on the residue table (indexed by the smallest usable
  /// weight). Exceeding it raises resource_error, never a wrong answer.
  std::uint64_t max_residue_table = 1u << 22;
};

/// Decides whether target is a nonnegative integer combination of the
/// weights, and if so returns the lexicographically smallest coefficient
/// vector on the canonical (ascending) weight order, read from the largest
/// weight down. Dynamic program over residues modulo the smallest weight,
/// so huge targets with moderate weights stay tractable.
std::optional<Representation> find_nonneg_representation(
    const Int& target, std::vector<Int> weights, const SearchLimits& limits = {});

/// Positive certificate for sum(degrees) = sum beta_l * a_l, beta_l >= 1,
/// via the nonnegative oracle at the pair's index; empty whenever the index
/// is negative. Pair must be nondegenerate.
std::optional<Representation> find_positive_representation(
    const Pair& pair, const SearchLimits& limits = {});

/// Positive certificate for a Cartier regular general-type pair with more
/// weights than degrees, built by structural recursion (weight 1 shortcut,
/// matched-entry removal, division by a prime shared between weights and
/// degrees, and the explicit terminal identities) — never by search over
/// the target. Failure of any recursion step is a bug by contract and
/// raises contract_error carrying the full recursion trace.
Representation constructive_representation_cartier(const Pair& pair);

/// Largest integer not representable as a nonnegative combination of the
/// coprime pair (a, b): ab - a - b. Requires gcd(a,b) = 1 and a, b >= 2.
Int sylvester_frobenius(const Int& a, const Int& b);

/// Nonnegative (x, y) with m = x*a + y*b for coprime a, b, minimizing x;
/// empty iff none exists. Guaranteed nonempty for m > ab - a - b.
std::optional<std::pair<Int, Int>> two_coin_representation(const Int& m,
                                                           const Int& a,
                                                           const Int& b);

/// Positive certificate for regular general-type pairs of codimension 1 or
/// 2. Codimension 1 delegates to the Cartier constructor (such pairs are
/// Cartier); codimension 2 needs N > 2 and nonnegative certificates for
/// both degrees (checked via the oracle) and follows the structural proof:
/// coprime-split, two-coin and common-prime-division branches with explicit
/// terminal identities. Output re-verified.
Representation representation_codim_le2(const Pair& pair,
                                        const SearchLimits& limits = {});

}  // namespace wci

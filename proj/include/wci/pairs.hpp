// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wci/numeric.hpp"

namespace wci {

/// A multidegree together with ambient weights, the central object of the
/// library. Stored in canonical form: both lists sorted ascending, every
/// entry strictly positive. Lists may become empty through normalize();
/// such pairs are degenerate and rejected by the operations that need a
/// genuine complete intersection.
class Pair {
 public:
  Pair() = default;
  Pair(std::vector<Int> degrees, std::vector<Int> weights);

  const std::vector<Int>& degrees() const { return degrees_; }
  const std::vector<Int>& weights() const { return weights_; }

  /// k, the number of defining degrees.
  std::size_t codim() const { return degrees_.size(); }
  /// N + 1, the number of ambient weights.
  std::size_t weight_count() const { return weights_.size(); }
  /// n = N - k, the dimension of the cut-out variety (may be negative).
  long long dim() const {
    return static_cast<long long>(weights_.size()) - 1 -
           static_cast<long long>(degrees_.size());
  }
  /// i = sum of degrees - sum of weights.
  Int index() const;
  Int degree_sum() const;
  Int weight_sum() const;

  bool degenerate() const { return degrees_.empty() || weights_.empty(); }

  bool operator==(const Pair&) const = default;

  /// Canonical "(d_1,...,d_k | a_0,...,a_N)" rendering for messages.
  std::string to_string() const;

 private:
  std::vector<Int> degrees_;
  std::vector<Int> weights_;
};

enum class PairKind { kFano, kCalabiYau, kGeneralType };

std::string pair_kind_name(PairKind kind);

struct PairClass {
  PairKind kind = PairKind::kCalabiYau;
  Int index;
};

/// Signs the index: negative Fano, zero Calabi-Yau, positive general type.
PairClass classify(const Pair& pair);

/// A divisor at which the degree/weight divisibility counting fails,
/// re-checkable by divisibility alone.
struct RegularityWitness {
  Int divisor;
  std::size_t degrees_divisible = 0;
  std::size_t weights_divisible = 0;
  std::vector<std::size_t> weight_indices;  // weights the divisor divides
};

/// Empty result means the pair is regular: for every integer d > 1 the
/// number of degrees divisible by d is at least the number of weights
/// divisible by d. Candidate divisors range over the gcd-closure of the
/// weight multiset, which is equivalent and avoids factoring.
std::optional<RegularityWitness> regularity_violation(const Pair& pair);
bool is_regular(const Pair& pair);

/// True iff dropping any single weight leaves a list with gcd 1.
/// Needs at least two weights.
bool is_space_well_formed(std::span<const Int> weights);

/// lcm of the weights: the degree generating the Picard group of the
/// ambient space.
Int picard_generator(std::span<const Int> weights);

struct CartierWitness {
  std::size_t weight_index = 0;
  std::size_t degree_index = 0;
};

/// Empty result means every weight divides every degree.
std::optional<CartierWitness> cartier_violation(const Pair& pair);
bool is_cartier(const Pair& pair);

/// First (degree index, weight index) with equal values, if any.
std::optional<std::pair<std::size_t, std::size_t>> linear_cone_match(
    const Pair& pair);
bool is_linear_cone(const Pair& pair);

/// Greedily removes matched equal degree/weight entries until no degree
/// equals any weight. Preserves the index; idempotent. The result may be
/// degenerate (a pure linear cone empties the degree list).
Pair normalize(const Pair& pair);

/// Minimal-weight bound for Fano/Calabi-Yau regular pairs: with weights
/// ascending, a_{k-i-1} = 1, and a_{k-i} = 1 as well unless the pair is
/// (6^k | 1^s, 2^k, 3^k) up to order. Preconditions (regular, Fano or
/// Calabi-Yau, no degree equal to a weight) are reported as
/// precondition_error, distinct from a failed check.
bool check_pst_bound(const Pair& pair);

/// Aggregate of the combinatorial validity checks, each failure carrying
/// an independently re-checkable witness.
struct CheckReport {
  bool regular = false;
  std::optional<RegularityWitness> regular_witness;
  bool space_well_formed = false;
  bool cartier = false;
  std::optional<CartierWitness> cartier_witness;
  bool linear_cone = false;
  std::optional<std::pair<std::size_t, std::size_t>> linear_cone_pair;
};

/// Runs every check on the pair. Needs at least two weights (the space
/// well-formedness test is undefined below that).
CheckReport check_pair(const Pair& pair);

}  // namespace wci

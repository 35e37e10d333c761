// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wci/hodge.hpp"
#include "wci/pairs.hpp"
#include "wci/primes.hpp"
#include "wci/represent.hpp"

namespace wci {

/// Arithmetic verification record for the quasi-smooth general-type family
/// with vanishing h^{0,n}. Weights are the pairwise products of straddle
/// chain primes, doubled; one degree 2*prod(p) in even dimension, two
/// degrees prod(p) in odd dimension.
struct CounterexampleReport {
  int n = 0;  // dimension
  int m = 0;  // n = 2m (even) or 2m - 1 (odd)
  primes::PrimeChain chain;
  Pair pair;
  Int index;

  bool general_type = false;
  bool cartier = false;
  bool ambient_well_formed = false;
  bool h0n_zero = false;
  bool no_linear_monomial = false;   // index != a_l for every l
  bool quadratic_deficit = false;    // index - a_s - a_t < 0 for all s, t
  bool not_regular = false;
  std::optional<RegularityWitness> regularity_witness;
  Int index_via_rational;            // 2 prod(p) (1 - sum 1/p), cross-check
  Int quadratic_deficit_max;         // index - 2 min(a), must be negative

  bool all_checks() const {
    return general_type && cartier && ambient_well_formed && h0n_zero &&
           no_linear_monomial && quadratic_deficit && not_regular;
  }
};

/// Builds and fully verifies the dimension-n counterexample (n > 2).
/// Any failed check is a bug by contract.
CounterexampleReport build_counterexample(int n);

/// The N = k family on which positive representations provably fail:
/// first N+1 primes, degrees (prod p)^N, weights prod(p)/p_l.
struct PointFamilyReport {
  int n_primes = 0;  // N + 1
  Pair pair;
  Int index;
  bool regular = false;
  bool cartier = false;
  bool general_type = false;
  bool no_positive_representation = false;
  bool codim_equals_ambient_dim = false;  // N == k, outside the theorems
  bool all_checks() const {
    return regular && cartier && general_type && no_positive_representation &&
           codim_equals_ambient_dim;
  }
};

PointFamilyReport build_point_family(int N);

struct ScanBounds {
  int max_k = 2;
  int max_weights = 5;  // N + 1
  Int max_degree_sum = 24;
  Int max_weight = 12;
  bool include_linear_cones = false;
  int jobs = 1;
};

/// One enumerated regular pair with everything recomputed for it.
struct ScanRecord {
  Pair pair;
  PairClass cls;
  bool regular = false;
  bool cartier = false;
  bool oracle_some = false;
  std::optional<std::vector<Int>> beta_oracle;
  std::optional<std::vector<Int>> beta_cartier;
  std::optional<std::vector<Int>> beta_codim2;
  Int h0n;
  std::vector<std::string> violations;  // empty <=> conforms
};

struct ScanSummary {
  std::uint64_t pairs_scanned = 0;
  std::uint64_t violations = 0;
  std::map<std::string, std::uint64_t> violations_by_rule;
  std::uint64_t fano = 0, calabi_yau = 0, general_type = 0;
  std::uint64_t cartier = 0;
  std::uint64_t positive_representations = 0;
  std::uint64_t cartier_constructed = 0;  // structural certificates built
  std::uint64_t codim2_constructed = 0;
};

/// Enumerates every regular pair within the bounds in canonical form
/// (ascending lists, optionally skipping pairs a linear-cone reduction
/// would shrink), checks each classification statement that applies, and
/// streams the records. Enumeration order is canonical and independent of
/// the worker count. Violations are bugs by contract; the summary counts
/// them per rule.
ScanSummary scan_theorem(const ScanBounds& bounds,
                         const std::function<void(const ScanRecord&)>& emit);

/// Checks every rule against a single pair, as the scan would.
ScanRecord scan_single(const Pair& pair);

}  // namespace wci

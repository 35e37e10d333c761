// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/construct.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "wci/errors.hpp"

namespace wci {

CounterexampleReport build_counterexample(int n) {
  if (n <= 2) throw precondition_error("counterexample needs dimension n > 2");
  CounterexampleReport r;
  r.n = n;
  r.m = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  r.chain = primes::straddle_chain(r.m);

  const auto& p = r.chain.primes;  // m + 2 primes; the last only straddles
  Int prod = 1;
  for (int j = 0; j <= r.m; ++j) prod *= p[static_cast<std::size_t>(j)];
  std::vector<Int> weights;
  for (int s = 0; s <= r.m; ++s) {
    const Int a = prod / p[static_cast<std::size_t>(s)];
    weights.push_back(a);
    weights.push_back(a);
  }
  std::vector<Int> degrees;
  if (n % 2 == 0)
    degrees = {2 * prod};
  else
    degrees = {prod, prod};
  r.pair = Pair(std::move(degrees), std::move(weights));
  r.index = r.pair.index();

  r.general_type = r.index > 0;
  r.cartier = is_cartier(r.pair);
  r.ambient_well_formed = is_space_well_formed(r.pair.weights());
  r.h0n_zero = h0n(r.pair) == 0;
  r.no_linear_monomial = true;
  for (const auto& a : r.pair.weights())
    if (r.index == a) r.no_linear_monomial = false;
  r.quadratic_deficit_max = r.index - 2 * r.pair.weights().front();
  r.quadratic_deficit = r.quadratic_deficit_max < 0;
  r.regularity_witness = regularity_violation(r.pair);
  r.not_regular = r.regularity_witness.has_value();

  // Same index through the exact rational identity 2 prod(p) (1 - sum 1/p).
  const Rational ix =
      Rational(2 * prod) * (Rational(1) - r.chain.partial_sum);
  if (ix.get_den() != 1)
    throw contract_error("rational index is not integral for n = " +
                         std::to_string(n));
  r.index_via_rational = ix.get_num();
  if (r.index_via_rational != r.index)
    throw contract_error("index mismatch between integer and rational routes");

  if (!r.all_checks())
    throw contract_error("counterexample checks failed for n = " +
                         std::to_string(n) + ", pair " + r.pair.to_string());
  return r;
}

PointFamilyReport build_point_family(int N) {
  if (N < 1) throw precondition_error("point family needs N >= 1");
  PointFamilyReport r;
  r.n_primes = N + 1;
  std::vector<Int> primes;
  Int p = 1;
  for (int i = 0; i <= N; ++i) {
    p = primes::next_prime_above(p);
    primes.push_back(p);
  }
  Int prod = 1;
  for (const auto& q : primes) prod *= q;
  std::vector<Int> weights;
  for (const auto& q : primes) weights.push_back(prod / q);
  std::vector<Int> degrees(static_cast<std::size_t>(N), prod);
  r.pair = Pair(std::move(degrees), std::move(weights));
  r.index = r.pair.index();

  r.regular = is_regular(r.pair);
  r.cartier = is_cartier(r.pair);
  r.general_type = r.index > 0;
  r.no_positive_representation =
      !find_positive_representation(r.pair).has_value();
  r.codim_equals_ambient_dim = r.pair.dim() == 0;
  if (!r.all_checks())
    throw contract_error("point family checks failed for N = " +
                         std::to_string(N));
  return r;
}

namespace {

// True when the weight multiset contains the degree multiset; fills the
// leftover weights.
bool weights_contain_degrees(const Pair& pair, std::vector<Int>& leftover) {
  leftover.clear();
  std::vector<Int> ws = pair.weights();
  for (const auto& d : pair.degrees()) {
    auto it = std::find(ws.begin(), ws.end(), d);
    if (it == ws.end()) return false;
    ws.erase(it);
  }
  leftover = std::move(ws);
  return true;
}

}  // namespace

ScanRecord scan_single(const Pair& pair) {
  if (pair.degenerate()) throw precondition_error("degenerate pair");
  ScanRecord rec;
  rec.pair = pair;
  rec.cls = classify(pair);
  rec.regular = is_regular(pair);
  rec.cartier = is_cartier(pair);
  const auto note = [&rec](const std::string& rule) {
    rec.violations.push_back(rule);
  };

  auto oracle = find_positive_representation(pair);
  rec.oracle_some = oracle.has_value();
  if (oracle) {
    if (!oracle->verify()) note("oracle_verification");
    rec.beta_oracle = std::move(oracle->coefficients);
  }
  rec.h0n = h0n(pair);

  const bool general_type = rec.cls.kind == PairKind::kGeneralType;
  const bool proper = pair.dim() > 0;  // N > k

  // Monomial existence and positive representations coincide on genuine
  // (positive-dimensional) intersections; N <= k shadows are exempt.
  if (proper && (rec.h0n > 0) != rec.oracle_some)
    note("bridge_monomial_representation");
  if (rec.cls.kind == PairKind::kFano && rec.h0n != 0) note("fano_h0n_zero");
  if (rec.cls.kind == PairKind::kCalabiYau && rec.h0n != 1)
    note("calabi_yau_h0n_one");

  // Cartier regular general-type pairs with N > k always carry a positive
  // representation, found constructively as well as by the oracle.
  if (rec.regular && rec.cartier && general_type && proper) {
    if (!rec.oracle_some) note("cartier_positive_representation");
    try {
      Representation b = constructive_representation_cartier(pair);
      if (!b.verify()) note("cartier_constructor");
      rec.beta_cartier = std::move(b.coefficients);
    } catch (const std::exception&) {
      note("cartier_constructor");
    }
  }

  // Codimension <= 2 regular general-type pairs (with certificates for both
  // degrees when k = 2) have h^{0,n} > 0 and a constructive certificate.
  if (rec.regular && general_type && proper && pair.codim() <= 2) {
    bool applicable = true;
    if (pair.codim() == 2) {
      applicable = pair.weight_count() >= 4;
      for (const auto& d : pair.degrees())
        applicable =
            applicable &&
            find_nonneg_representation(d, pair.weights()).has_value();
    }
    if (applicable) {
      if (rec.h0n <= 0) note("codim2_h0n_positive");
      try {
        Representation b = representation_codim_le2(pair);
        if (!b.verify()) note("codim2_constructor");
        rec.beta_codim2 = std::move(b.coefficients);
      } catch (const std::exception&) {
        note("codim2_constructor");
      }
    }
  }

  // Minimal-weight bound for Fano/Calabi-Yau pairs away from linear cones.
  if (rec.regular && rec.cls.kind != PairKind::kGeneralType &&
      !is_linear_cone(pair)) {
    if (!check_pst_bound(pair)) note("pst_minimal_weight");
  }

  // Regular pairs with at least as many extra weights and no weight 1 are
  // of general type.
  if (rec.regular && pair.dim() >= 0 && pair.weights().front() > 1 &&
      !general_type)
    note("no_weight_one_general_type");

  // A regular pair whose weights contain all degrees has only weight-1
  // leftovers.
  std::vector<Int> leftover;
  if (rec.regular && weights_contain_degrees(pair, leftover)) {
    for (const auto& a : leftover)
      if (a != 1) {
        note("regular_linear_cone_shape");
        break;
      }
  }
  return rec;
}

namespace {

using SmallVec = std::vector<std::uint32_t>;

void enumerate_degree_sets(const ScanBounds& bounds, SmallVec& current,
                           std::uint32_t sum, std::vector<SmallVec>& out) {
  if (!current.empty()) out.push_back(current);
  if (current.size() >= static_cast<std::size_t>(bounds.max_k)) return;
  const std::uint32_t max_sum = to_uint64(bounds.max_degree_sum);
  for (std::uint32_t d = current.empty() ? 1 : current.back();
       sum + d <= max_sum; ++d) {
    current.push_back(d);
    enumerate_degree_sets(bounds, current, sum + d, out);
    current.pop_back();
  }
}

struct ChunkContext {
  const ScanBounds* bounds = nullptr;
  const SmallVec* degrees = nullptr;
  std::uint32_t max_weight = 0;
  std::vector<std::uint32_t> divisible_degrees;  // per divisor
  std::vector<bool> is_degree_value;
};

void apply_record(const ScanRecord& rec, ScanSummary& summary,
                  std::vector<ScanRecord>& out) {
  ++summary.pairs_scanned;
  summary.violations += rec.violations.size();
  for (const auto& rule : rec.violations) ++summary.violations_by_rule[rule];
  switch (rec.cls.kind) {
    case PairKind::kFano:
      ++summary.fano;
      break;
    case PairKind::kCalabiYau:
      ++summary.calabi_yau;
      break;
    case PairKind::kGeneralType:
      ++summary.general_type;
      break;
  }
  if (rec.cartier) ++summary.cartier;
  if (rec.oracle_some) ++summary.positive_representations;
  if (rec.beta_cartier) ++summary.cartier_constructed;
  if (rec.beta_codim2) ++summary.codim2_constructed;
  out.push_back(rec);
}

void enumerate_weights(const ChunkContext& ctx, SmallVec& weights,
                       std::vector<std::uint32_t>& weight_div_count,
                       ScanSummary& summary, std::vector<ScanRecord>& out) {
  if (!weights.empty()) {
    std::vector<Int> d(ctx.degrees->begin(), ctx.degrees->end());
    std::vector<Int> w(weights.begin(), weights.end());
    apply_record(scan_single(Pair(std::move(d), std::move(w))), summary, out);
  }
  if (weights.size() >= static_cast<std::size_t>(ctx.bounds->max_weights))
    return;
  for (std::uint32_t a = weights.empty() ? 1 : weights.back();
       a <= ctx.max_weight; ++a) {
    if (!ctx.bounds->include_linear_cones && ctx.is_degree_value[a]) continue;
    bool feasible = true;
    for (std::uint32_t div = 2; div <= a && feasible; ++div)
      if (a % div == 0 &&
          weight_div_count[div] + 1 > ctx.divisible_degrees[div])
        feasible = false;
    if (!feasible) continue;
    for (std::uint32_t div = 2; div <= a; ++div)
      if (a % div == 0) ++weight_div_count[div];
    weights.push_back(a);
    enumerate_weights(ctx, weights, weight_div_count, summary, out);
    weights.pop_back();
    for (std::uint32_t div = 2; div <= a; ++div)
      if (a % div == 0) --weight_div_count[div];
  }
}

void process_chunk(const ScanBounds& bounds, const SmallVec& degrees,
                   ScanSummary& summary, std::vector<ScanRecord>& out) {
  ChunkContext ctx;
  ctx.bounds = &bounds;
  ctx.degrees = &degrees;
  ctx.max_weight = to_uint64(bounds.max_weight);
  ctx.divisible_degrees.assign(ctx.max_weight + 1, 0);
  for (std::uint32_t div = 2; div <= ctx.max_weight; ++div)
    for (std::uint32_t d : degrees)
      if (d % div == 0) ++ctx.divisible_degrees[div];
  const std::uint32_t top =
      std::max<std::uint32_t>(ctx.max_weight,
                              degrees.empty() ? 0 : degrees.back());
  ctx.is_degree_value.assign(top + 1, false);
  for (std::uint32_t d : degrees) ctx.is_degree_value[d] = true;

  SmallVec weights;
  std::vector<std::uint32_t> weight_div_count(ctx.max_weight + 1, 0);
  enumerate_weights(ctx, weights, weight_div_count, summary, out);
}

void merge_summary(ScanSummary& into, const ScanSummary& from) {
  into.pairs_scanned += from.pairs_scanned;
  into.violations += from.violations;
  for (const auto& [rule, count] : from.violations_by_rule)
    into.violations_by_rule[rule] += count;
  into.fano += from.fano;
  into.calabi_yau += from.calabi_yau;
  into.general_type += from.general_type;
  into.cartier += from.cartier;
  into.positive_representations += from.positive_representations;
  into.cartier_constructed += from.cartier_constructed;
  into.codim2_constructed += from.codim2_constructed;
}

}  // namespace

ScanSummary scan_theorem(const ScanBounds& bounds,
                         const std::function<void(const ScanRecord&)>& emit) {
  if (bounds.max_k < 1 || bounds.max_weights < 1 || bounds.max_weight < 1 ||
      bounds.max_degree_sum < 1 || bounds.jobs < 1)
    throw precondition_error("scan bounds must all be positive");
  if (!fits_uint64(bounds.max_degree_sum) || !fits_uint64(bounds.max_weight))
    throw resource_error("scan bounds beyond enumeration range");

  std::vector<SmallVec> degree_sets;
  SmallVec current;
  enumerate_degree_sets(bounds, current, 0, degree_sets);

  ScanSummary total;
  if (bounds.jobs == 1) {
    for (const auto& degrees : degree_sets) {
      ScanSummary summary;
      std::vector<ScanRecord> records;
      process_chunk(bounds, degrees, summary, records);
      for (const auto& rec : records) emit(rec);
      merge_summary(total, summary);
    }
    return total;
  }

  // Workers claim chunks in order; records are surfaced strictly in chunk
  // order so output never depends on scheduling.
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<std::size_t> next_chunk{0};
  std::size_t emit_next = 0;
  std::map<std::size_t, std::pair<ScanSummary, std::vector<ScanRecord>>> done;
  const std::size_t window =
      static_cast<std::size_t>(bounds.jobs) * 8;

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next_chunk.fetch_add(1);
      if (i >= degree_sets.size()) return;
      {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return i < emit_next + window; });
      }
      ScanSummary summary;
      std::vector<ScanRecord> records;
      process_chunk(bounds, degree_sets[i], summary, records);
      {
        std::lock_guard lock(mutex);
        done.emplace(i, std::pair{std::move(summary), std::move(records)});
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> threads;
  const int workers = std::min<int>(bounds.jobs,
                                    static_cast<int>(degree_sets.size()));
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) threads.emplace_back(worker);

  while (emit_next < degree_sets.size()) {
    std::unique_lock lock(mutex);
    cv.wait(lock, [&] { return done.count(emit_next) > 0; });
    auto node = done.extract(emit_next);
    lock.unlock();
    for (const auto& rec : node.mapped().second) emit(rec);
    merge_summary(total, node.mapped().first);
    {
      std::lock_guard relock(mutex);
      ++emit_next;
    }
    cv.notify_all();
  }
  for (auto& t : threads) t.join();
  return total;
}

}  // namespace wci

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "wci/construct.hpp"
#include "wci/errors.hpp"
#include "wci/json_io.hpp"

using namespace wci;

namespace {

Pair make(std::vector<long> d, std::vector<long> a) {
  std::vector<Int> dd(d.begin(), d.end()), aa(a.begin(), a.end());
  return Pair(std::move(dd), std::move(aa));
}

}  // namespace

TEST_CASE("counterexample pairs for the documented dimensions") {
  auto r = build_counterexample(4);
  CHECK(r.pair == make({84}, {6, 6, 14, 14, 21, 21}));
  CHECK(r.index == 2);
  CHECK(r.chain.primes == std::vector<Int>{2, 3, 7, 11});
  CHECK(r.all_checks());

  r = build_counterexample(3);
  CHECK(r.pair == make({42, 42}, {6, 6, 14, 14, 21, 21}));
  CHECK(r.index == 2);
  CHECK(r.all_checks());

  r = build_counterexample(6);
  CHECK(r.pair == make({3612}, {42, 42, 258, 258, 602, 602, 903, 903}));
  CHECK(r.index == 2);
  CHECK(r.all_checks());

  CHECK_THROWS_AS(build_counterexample(2), precondition_error);
}

TEST_CASE("counterexamples verify across dimensions 3..12") {
  for (int n = 3; n <= 12; ++n) {
    const CounterexampleReport r = build_counterexample(n);
    CAPTURE(n);
    CHECK(r.all_checks());
    CHECK(r.general_type);
    CHECK(r.cartier);
    CHECK(r.ambient_well_formed);
    CHECK(r.h0n_zero);
    CHECK(r.not_regular);
    CHECK(r.index == r.index_via_rational);
    CHECK(r.pair.dim() == n);
  }
}

TEST_CASE("point family instances") {
  auto r = build_point_family(1);
  CHECK(r.pair == make({6}, {2, 3}));
  CHECK(r.all_checks());

  r = build_point_family(2);
  CHECK(r.pair == make({30, 30}, {6, 10, 15}));
  CHECK(r.all_checks());

  r = build_point_family(3);
  CHECK(r.pair == make({210, 210, 210}, {30, 42, 70, 105}));
  CHECK(r.all_checks());

  for (int n = 4; n <= 5; ++n) CHECK(build_point_family(n).all_checks());
  CHECK_THROWS_AS(build_point_family(0), precondition_error);
}

TEST_CASE("single-pair scan classifies without false violations") {
  const ScanRecord rec = scan_single(make({6}, {3, 2}));
  CHECK(rec.regular);
  CHECK(rec.cartier);
  CHECK(rec.cls.kind == PairKind::kGeneralType);
  CHECK_FALSE(rec.oracle_some);  // N = k: no theorem applies
  CHECK(rec.violations.empty());
  CHECK(rec.h0n == 0);
}

TEST_CASE("scan over small bounds finds no violations") {
  ScanBounds bounds;
  bounds.max_k = 2;
  bounds.max_weights = 5;  // N <= 4
  bounds.max_degree_sum = 24;
  bounds.max_weight = 12;
  std::uint64_t seen = 0;
  bool contains_example = false;
  const ScanSummary summary = scan_theorem(bounds, [&](const ScanRecord& rec) {
    ++seen;
    if (rec.pair == make({6}, {3, 2})) contains_example = true;
    CHECK(rec.regular);
  });
  CHECK(summary.violations == 0);
  CHECK(summary.pairs_scanned == seen);
  CHECK(seen > 0);
  CHECK(contains_example);
  CHECK(summary.cartier_constructed > 0);
  CHECK(summary.codim2_constructed > 0);
}

TEST_CASE("scan output is independent of the worker count") {
  ScanBounds bounds;
  bounds.max_k = 2;
  bounds.max_weights = 4;
  bounds.max_degree_sum = 16;
  bounds.max_weight = 9;

  const auto run = [&](int jobs) {
    bounds.jobs = jobs;
    std::ostringstream out;
    const ScanSummary summary = scan_theorem(bounds, [&](const ScanRecord& r) {
      out << to_json(r).dump() << '\n';
    });
    return std::pair{out.str(), summary.pairs_scanned};
  };
  const auto [single, count1] = run(1);
  const auto [quad, count4] = run(4);
  CHECK(single == quad);
  CHECK(count1 == count4);
  CHECK(count1 > 0);
}

TEST_CASE("oracle verdicts match exhaustive search over the scan enumeration") {
  ScanBounds bounds;
  bounds.max_k = 3;
  bounds.max_weights = 5;
  bounds.max_degree_sum = 30;
  bounds.max_weight = 12;
  scan_theorem(bounds, [](const ScanRecord& rec) {
    std::vector<std::uint64_t> ws;
    for (const auto& a : rec.pair.weights()) ws.push_back(to_uint64(a));
    std::uint64_t base = 0;
    for (const auto w : ws) base += w;
    const std::uint64_t target = to_uint64(rec.pair.degree_sum());
    bool brute = base <= target;
    if (brute) {
      // Value-table dynamic program, independent of the residue oracle.
      std::vector<char> can(target - base + 1, 0);
      can[0] = 1;
      for (std::uint64_t v = 1; v <= target - base; ++v)
        for (const auto w : ws)
          if (w <= v && can[v - w]) {
            can[v] = 1;
            break;
          }
      brute = can[target - base] != 0;
    }
    CAPTURE(rec.pair.to_string());
    CHECK(rec.oracle_some == brute);
  });
}

TEST_CASE("scan can include linear cones and still conforms") {
  ScanBounds bounds;
  bounds.max_k = 2;
  bounds.max_weights = 4;
  bounds.max_degree_sum = 12;
  bounds.max_weight = 8;
  bounds.include_linear_cones = true;
  const ScanSummary summary = scan_theorem(bounds, [](const ScanRecord&) {});
  CHECK(summary.violations == 0);
  CHECK(summary.pairs_scanned > 0);
}

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include "testutil.hpp"
#include "wci/errors.hpp"
#include "wci/hodge.hpp"

using namespace wci;

namespace {

Pair make(std::vector<long> d, std::vector<long> a) {
  std::vector<Int> dd(d.begin(), d.end()), aa(a.begin(), a.end());
  return Pair(std::move(dd), std::move(aa));
}

std::vector<Int> ints(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("monomial counting by series matches enumeration") {
  CHECK(count_monomials(ints({1, 1, 1, 1}), 2) == 10);  // C(5,3)
  CHECK(count_monomials(ints({2, 3}), 6) == 2);         // x^3 and y^2
  CHECK(count_monomials(ints({2, 3}), 1) == 0);
  CHECK(count_monomials(ints({2, 3}), 0) == 1);
  CHECK(count_monomials(ints({2, 3}), -1) == 0);

  std::mt19937_64 rng(0xC0DE);
  std::uniform_int_distribution<std::uint64_t> wd(1, 10), md(0, 60);
  for (int i = 0; i < 400; ++i) {
    std::vector<std::uint64_t> ws;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) ws.push_back(wd(rng));
    const std::uint64_t m = md(rng);
    CHECK(count_monomials(std::vector<Int>(ws.begin(), ws.end()),
                          Int(static_cast<unsigned long>(m))) ==
          testutil::brute_count_monomials(ws, m));
  }
}

TEST_CASE("h0n on the documented instances") {
  CHECK(h0n(make({5}, {1, 1, 1, 1, 1})) == 1);
  CHECK(h0n(make({6}, {1, 1, 1, 1})) == 10);  // sextic surface p_g
  CHECK(h0n(make({84}, {6, 6, 14, 14, 21, 21})) == 0);
  CHECK(h0n(make({3}, {1, 1, 1, 1})) == 0);  // Fano
}

TEST_CASE("hodge verdict labels the predicting branch") {
  auto v = hodge_level_verdict(make({3}, {1, 1, 1, 1}));
  CHECK_FALSE(v.hodge_level_max);
  CHECK(v.branch == TheoremBranch::kFano);

  v = hodge_level_verdict(make({6, 6}, {2, 2, 3, 3}));
  CHECK(v.hodge_level_max);
  CHECK(v.h0n > 0);
  CHECK(v.branch == TheoremBranch::kCartierGeneralType);

  v = hodge_level_verdict(make({84}, {6, 6, 14, 14, 21, 21}));
  CHECK_FALSE(v.hodge_level_max);
  CHECK(v.branch == TheoremBranch::kUnclassified);  // not regular

  v = hodge_level_verdict(make({5}, {1, 1, 1, 1, 1}));
  CHECK(v.hodge_level_max);
  CHECK(v.h0n == 1);
  CHECK(v.branch == TheoremBranch::kCalabiYau);
}

TEST_CASE("quintic threefold middle Hodge numbers") {
  const HodgeVector got = hypersurface_middle_hodge(make({5}, {1, 1, 1, 1, 1}));
  const auto brute = testutil::brute_fermat_middle_hodge(5, {1, 1, 1, 1, 1});
  CHECK(got.h == brute);
  CHECK(got.h == ints({1, 101, 101, 1}));
}

TEST_CASE("cubic curve and conic middle Hodge numbers") {
  CHECK(hypersurface_middle_hodge(make({3}, {1, 1, 1})).h == ints({1, 1}));
  CHECK(hypersurface_middle_hodge(make({2}, {1, 1, 1})).h == ints({0, 0}));
}

TEST_CASE("middle Hodge numbers reject unsupported inputs") {
  CHECK_THROWS_AS(hypersurface_middle_hodge(make({6, 6}, {2, 2, 3, 3})),
                  precondition_error);  // k = 2
  CHECK_THROWS_AS(hypersurface_middle_hodge(make({5}, {1, 2})),
                  precondition_error);  // not Cartier
}

TEST_CASE("middle Hodge vectors are symmetric and end at h0n") {
  testutil::for_each_bounded_pair(1, 5, 12, 6, [](const Pair& pair) {
    if (pair.codim() != 1 || pair.dim() < 1) return;
    if (!is_cartier(pair)) return;
    const HodgeVector v = hypersurface_middle_hodge(pair);
    const auto brute = testutil::brute_fermat_middle_hodge(
        to_uint64(pair.degrees()[0]),
        [&] {
          std::vector<std::uint64_t> ws;
          for (const auto& a : pair.weights()) ws.push_back(to_uint64(a));
          return ws;
        }());
    CAPTURE(pair.to_string());
    CHECK(v.h == brute);
    // Palindromic (Hodge symmetry).
    for (std::size_t q = 0; q < v.h.size(); ++q)
      CHECK(v.h[q] == v.h[v.h.size() - 1 - q]);
    // The q = n entry is the degree-index dimension.
    CHECK(v.h.back() == h0n(pair));
  });
}

TEST_CASE("h0n positivity coincides with positive representability") {
  CHECK(verify_h0n_consistency(make({5}, {1, 1, 1, 1, 1})));
  CHECK(verify_h0n_consistency(make({84}, {6, 6, 14, 14, 21, 21})));
  CHECK(verify_h0n_consistency(make({6}, {3, 2})));
  // The equivalence is a statement about genuine intersections: regular
  // pairs with more weights than degrees.
  testutil::for_each_bounded_pair(2, 4, 14, 8, [](const Pair& pair) {
    if (pair.dim() <= 0 || !is_regular(pair)) return;
    CAPTURE(pair.to_string());
    CHECK(verify_h0n_consistency(pair));
  });
}

TEST_CASE("fano pairs have zero h0n and calabi-yau pairs exactly one") {
  testutil::for_each_bounded_pair(2, 4, 12, 8, [](const Pair& pair) {
    const auto kind = classify(pair).kind;
    if (kind == PairKind::kFano) CHECK(h0n(pair) == 0);
    if (kind == PairKind::kCalabiYau) CHECK(h0n(pair) == 1);
  });
}

// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/primes.hpp"

#include <mpfr.h>

#include <algorithm>
#include <mutex>

#include "wci/errors.hpp"

namespace wci::primes {

namespace {

constexpr std::uint64_t kSmallPrimeLimit = 100'000;
constexpr std::size_t kPiBlock = 4096;

std::vector<std::uint64_t> sieve_vector(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) primes.push_back(i);
  return primes;
}

}  // namespace

std::span<const std::uint64_t> small_primes() {
  static const std::vector<std::uint64_t> primes =
      sieve_vector(kSmallPrimeLimit);
  return primes;
}

Sieve::Sieve(std::uint64_t limit, std::uint64_t budget) : limit_(limit) {
  if (limit < 2) throw precondition_error("sieve limit must be >= 2");
  if (limit > budget)
    throw resource_error("sieve limit " + std::to_string(limit) +
                         " exceeds budget " + std::to_string(budget));
  composite_.assign(limit + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  pi_block_.assign(limit / kPiBlock + 2, 0);
  std::uint32_t running = 0;
  for (std::uint64_t i = 0; i <= limit; ++i) {
    if (i % kPiBlock == 0) pi_block_[i / kPiBlock] = running;
    if (!composite_[i]) ++running;
  }
  pi_block_[limit / kPiBlock + 1] = running;
}

bool Sieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw precondition_error("sieve query beyond limit");
  return n >= 2 && !composite_[n];
}

std::uint64_t Sieve::pi(std::uint64_t x) const {
  if (x > limit_) throw precondition_error("sieve query beyond limit");
  std::uint64_t count = pi_block_[x / kPiBlock];
  for (std::uint64_t i = (x / kPiBlock) * kPiBlock; i <= x; ++i)
    if (!composite_[i]) ++count;
  return count;
}

std::vector<std::uint64_t> Sieve::primes_up_to(std::uint64_t x) const {
  if (x > limit_) throw precondition_error("sieve query beyond limit");
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= x; ++i)
    if (!composite_[i]) out.push_back(i);
  return out;
}

std::uint64_t Sieve::count_in_closed(std::uint64_t a, std::uint64_t b) const {
  if (b > limit_) throw precondition_error("sieve query beyond limit");
  if (a > b) return 0;
  return pi(b) - (a <= 2 ? 0 : pi(a - 1));
}

std::vector<std::uint64_t> sieve(std::uint64_t limit, std::uint64_t budget) {
  Sieve s(limit, budget);
  return s.primes_up_to(limit);
}

std::uint64_t prime_pi(std::uint64_t x, std::uint64_t budget) {
  if (x < 2) return 0;
  return Sieve(x, budget).pi(x);
}

namespace {

// One Miller-Rabin round; n odd > 2, 1 < a < n-1.
bool mr_round(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

const Int kTwo64 = Int(1) << 64;

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (std::uint64_t p : small_primes()) {
    Int pz(static_cast<unsigned long>(p));
    if (pz * pz > n) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == pz;
  }
  if (n < kTwo64) {
    // Deterministic for all 64-bit inputs with the first twelve prime bases.
    static const unsigned long bases[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};
    Int d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    for (unsigned long a : bases)
      if (!mr_round(n, Int(a), d, s)) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 32) >= 1;
}

Int next_prime_above(const Int& n) {
  if (n < 2) return 2;
  Int c = n + 1;
  if (c == 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

Int prev_prime_below(const Int& n) {
  if (n <= 2) throw precondition_error("no prime below " + n.get_str());
  if (n == 3) return 2;
  Int c = n - 1;
  if (c % 2 == 0) --c;
  while (c > 2 && !is_prime(c)) c -= 2;
  return c >= 2 ? c : 2;
}

namespace {

enum class TriState { kTrue, kFalse, kUnknown };

// x/ln x < pi  and  pi < (62753/50000) x/ln x, each decided with outward
// rounding at the given precision.
std::pair<TriState, TriState> rs_at_precision(std::uint64_t x,
                                              std::uint64_t pi,
                                              mpfr_prec_t prec) {
  mpfr_t ln_lo, ln_hi, t, lo, hi;
  mpfr_inits2(prec, ln_lo, ln_hi, t, lo, hi, static_cast<mpfr_ptr>(nullptr));

  mpfr_set_ui(t, x, MPFR_RNDN);  // exact: prec >= 96 > 64 bits
  mpfr_log(ln_lo, t, MPFR_RNDD);
  mpfr_log(ln_hi, t, MPFR_RNDU);

  TriState lower = TriState::kUnknown;
  mpfr_div(hi, t, ln_lo, MPFR_RNDU);  // upper bound of x/ln x
  mpfr_div(lo, t, ln_hi, MPFR_RNDD);  // lower bound of x/ln x
  if (mpfr_cmp_ui(hi, pi) < 0)
    lower = TriState::kTrue;
  else if (mpfr_cmp_ui(lo, pi) >= 0)
    lower = TriState::kFalse;

  TriState upper = TriState::kUnknown;
  mpfr_t num, den;
  mpfr_inits2(prec, num, den, static_cast<mpfr_ptr>(nullptr));
  Int alpha_num = Int(62753) * Int(static_cast<unsigned long>(x));
  mpfr_set_z(num, alpha_num.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_ui(den, ln_hi, 50000, MPFR_RNDU);
  mpfr_div(lo, num, den, MPFR_RNDD);  // lower bound of alpha x/ln x
  mpfr_set_z(num, alpha_num.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_ui(den, ln_lo, 50000, MPFR_RNDD);
  mpfr_div(hi, num, den, MPFR_RNDU);  // upper bound of alpha x/ln x
  if (mpfr_cmp_ui(lo, pi) > 0)
    upper = TriState::kTrue;
  else if (mpfr_cmp_ui(hi, pi) <= 0)
    upper = TriState::kFalse;

  mpfr_clears(ln_lo, ln_hi, t, lo, hi, num, den,
              static_cast<mpfr_ptr>(nullptr));
  return {lower, upper};
}

}  // namespace

bool check_rs_inequality(std::uint64_t x, const Sieve& sv) {
  if (x < 17)
    throw precondition_error(
        "x/ln x < pi(x) is only asserted for x >= 17; got x = " +
        std::to_string(x));
  const std::uint64_t pi = sv.pi(x);
  for (mpfr_prec_t prec = 96; prec <= 8192; prec *= 2) {
    auto [lower, upper] = rs_at_precision(x, pi, prec);
    if (lower == TriState::kFalse || upper == TriState::kFalse) return false;
    if (lower == TriState::kTrue && upper == TriState::kTrue) return true;
  }
  throw resource_error("rs-check precision escalation exhausted at x = " +
                       std::to_string(x));
}

bool check_rs_inequality(std::uint64_t x, std::uint64_t budget) {
  if (x < 17)
    throw precondition_error(
        "x/ln x < pi(x) is only asserted for x >= 17; got x = " +
        std::to_string(x));
  Sieve sv(x, budget);
  return check_rs_inequality(x, sv);
}

std::uint64_t count_primes_in_open_interval(const Rational& lo,
                                            const Rational& hi,
                                            const Sieve& sv) {
  if (!(lo > 0 && lo < hi))
    throw precondition_error("interval must satisfy 0 < lo < hi");
  const Int first = ceil_above(lo);
  const Int last = floor_below(hi);
  if (last < first) return 0;
  if (!fits_uint64(last) || to_uint64(last) > sv.limit())
    throw resource_error("interval endpoint beyond sieve limit");
  const std::uint64_t a = fits_uint64(first) ? to_uint64(first) : 0;
  return sv.count_in_closed(std::max<std::uint64_t>(a, 2), to_uint64(last));
}

std::uint64_t count_primes_in_open_interval(const Rational& lo,
                                            const Rational& hi,
                                            std::uint64_t budget) {
  const Int last = floor_below(hi);
  if (last < 2) {
    if (!(lo > 0 && lo < hi))
      throw precondition_error("interval must satisfy 0 < lo < hi");
    return 0;
  }
  if (!fits_uint64(last))
    throw resource_error("interval endpoint beyond sieve budget");
  Sieve sv(std::max<std::uint64_t>(to_uint64(last), 2), budget);
  return count_primes_in_open_interval(lo, hi, sv);
}

IntervalLemmaReport verify_interval_lemma(int n, std::span<const Rational> xs,
                                          std::uint64_t budget) {
  if (n < 5)
    throw precondition_error("interval lemma needs n >= 5");
  const Int min_x = Int(1) << n;
  Int max_needed = 2;
  for (const auto& x : xs) {
    if (x < min_x)
      throw precondition_error("sample x below 2^n");
    Int top = ceil_above(2 * x);
    if (top > max_needed) max_needed = top;
  }
  if (!fits_uint64(max_needed))
    throw resource_error("sample beyond sieve budget");
  Sieve sv(std::max<std::uint64_t>(to_uint64(max_needed), 2), budget);

  IntervalLemmaReport report;
  report.n = n;
  report.checked_part_i = true;
  report.checked_part_ii = n >= 7;
  const std::uint64_t required = static_cast<std::uint64_t>(n) + 1;
  for (const auto& x : xs) {
    IntervalLemmaSample a{x, count_primes_in_open_interval(x, 2 * x, sv),
                          required, false};
    a.holds = a.count >= required;
    report.all_hold = report.all_hold && a.holds;
    report.part_i.push_back(a);
    if (report.checked_part_ii) {
      IntervalLemmaSample b{
          x, count_primes_in_open_interval(x * make_rational(2, 3), x, sv),
          required, false};
      b.holds = b.count >= required;
      report.all_hold = report.all_hold && b.holds;
      report.part_ii.push_back(b);
    }
  }
  return report;
}

bool verify_prime_chain(const PrimeChain& chain) {
  if (chain.primes.size() < 2) return false;
  Rational sum = 0;
  for (std::size_t i = 0; i < chain.primes.size(); ++i) {
    if (i > 0 && !(chain.primes[i - 1] < chain.primes[i])) return false;
    if (!is_prime(chain.primes[i])) return false;
    if (i + 1 < chain.primes.size())
      sum += make_rational(1, chain.primes[i]);
  }
  if (sum != chain.partial_sum) return false;
  return sum < 1 && sum + make_rational(1, chain.primes.back()) > 1;
}

namespace {

// Largest integer <= q (plain floor, not the strict floor_below).
Int rational_floor(const Rational& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

// Smallest integer >= q.
Int rational_ceil(const Rational& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

// Smallest prime p > last with sum + 1/p < 1.
Int next_greedy_prime(const Int& last, const Rational& sum) {
  const Rational gap = Rational(1) - sum;
  Int threshold = rational_floor(Rational(1) / gap);  // need p > 1/gap
  if (threshold < last) threshold = last;
  return next_prime_above(threshold);
}

}  // namespace

PrimeChain straddle_chain(int m) {
  if (m < 1) throw precondition_error("straddle chain needs m >= 1");
  PrimeChain chain;
  Rational sum = 0;
  Int last = 1;
  for (int i = 0; i <= m; ++i) {
    const Int p = next_greedy_prime(last, sum);
    sum += make_rational(1, p);
    if (!(sum < 1))
      throw contract_error("greedy straddle prime crossed 1 at p = " +
                           p.get_str());
    chain.primes.push_back(p);
    last = p;
  }
  const Int push = next_prime_above(last);
  if (!(sum + make_rational(1, push) > 1))
    throw contract_error(
        "no prime below 1/(1-partial_sum) pushes the sum above 1; next was " +
        push.get_str());
  chain.primes.push_back(push);
  chain.partial_sum = sum;
  if (!verify_prime_chain(chain))
    throw contract_error("straddle chain failed re-verification");
  return chain;
}

namespace {

struct DeltaContext {
  int n = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exceeded = false;
  Rational best;
  std::vector<Int> best_witness;
  std::vector<Int> current;
  std::vector<Rational> level_min;  // exact delta(1..n-1)
  const Sieve* fast = nullptr;      // accelerates candidate iteration
};

// Greedy chain of n primes with reciprocal sum kept below 1; the classical
// seed for the search upper bound.
DeltaResult greedy_delta_witness(int n) {
  DeltaResult r;
  Rational sum = 0;
  Int last = 1;
  for (int i = 0; i < n; ++i) {
    const Int p = next_greedy_prime(last, sum);
    sum += make_rational(1, p);
    r.witness.push_back(p);
    last = p;
  }
  r.value = Rational(1) - sum;
  return r;
}

Int next_candidate_prime(const DeltaContext& ctx, const Int& above) {
  if (ctx.fast != nullptr && fits_uint64(above) &&
      to_uint64(above) < ctx.fast->limit()) {
    std::uint64_t c = to_uint64(above) + 1;
    while (c <= ctx.fast->limit() && !ctx.fast->is_prime(c)) ++c;
    if (c <= ctx.fast->limit()) return Int(static_cast<unsigned long>(c));
  }
  return next_prime_above(above);
}

void delta_dfs(DeltaContext& ctx, const Int& last, const Rational& gap,
               int chosen) {
  if (ctx.exceeded) return;
  const int remaining = ctx.n - chosen;
  if (remaining == 1) {
    // The smallest admissible prime minimizes the final value within this
    // branch; larger primes only move the value back toward the gap.
    if (++ctx.nodes > ctx.budget) {
      ctx.exceeded = true;
      return;
    }
    Int threshold = rational_floor(Rational(1) / gap);
    if (threshold < last) threshold = last;
    const Int q = next_candidate_prime(ctx, threshold);
    const Rational v = gap - make_rational(1, q);
    if (v > 0 && v < ctx.best) {
      ctx.best = v;
      ctx.best_witness = ctx.current;
      ctx.best_witness.push_back(q);
    }
    return;
  }
  // Any completion keeps the running gap at or above the exact minimum for
  // that many primes, which bounds the next candidate from below; beating
  // the incumbent bounds it from above by remaining/(gap - best).
  const Rational& floor_next = ctx.level_min[static_cast<std::size_t>(chosen)];
  const Rational slack = gap - floor_next;
  if (!(slack > 0)) return;
  Int q_lo = rational_ceil(Rational(1) / slack) - 1;  // iterate with q > q_lo
  if (q_lo < last) q_lo = last;
  const Rational span = gap - ctx.best;
  if (!(span > 0))
    throw contract_error("delta search incumbent not below running gap");
  const Int q_hi = floor_below(Rational(remaining) / span);
  Int q = next_candidate_prime(ctx, q_lo);
  while (q <= q_hi) {
    if (++ctx.nodes > ctx.budget) {
      ctx.exceeded = true;
      return;
    }
    ctx.current.push_back(q);
    delta_dfs(ctx, q, gap - make_rational(1, q), chosen + 1);
    ctx.current.pop_back();
    if (ctx.exceeded) return;
    q = next_candidate_prime(ctx, q);
  }
}

}  // namespace

DeltaSearch delta(int n, std::uint64_t node_budget) {
  if (n < 1) throw precondition_error("delta needs n >= 1");
  DeltaSearch out;
  Sieve fast(2'000'000);

  std::vector<Rational> level_min;   // exact minima for 1..level-1
  std::vector<Int> prev_witness;     // attaining primes for level-1
  std::uint64_t nodes = 0;
  for (int level = 1; level <= n; ++level) {
    DeltaContext ctx;
    ctx.n = level;
    ctx.budget = node_budget;
    ctx.nodes = nodes;
    ctx.fast = &fast;
    ctx.level_min = level_min;
    // Seed: extend the previous exact witness by the smallest admissible
    // prime. The seed value drops strictly below delta(level-1), which
    // keeps gap - best positive at every interior search node.
    DeltaResult seed;
    if (level == 1) {
      seed = greedy_delta_witness(1);
    } else {
      const Rational g = level_min.back();
      Int thr = rational_floor(Rational(1) / g);
      if (thr < prev_witness.back()) thr = prev_witness.back();
      const Int p = next_prime_above(thr);
      seed.witness = prev_witness;
      seed.witness.push_back(p);
      seed.value = g - make_rational(1, p);
      if (!(seed.value > 0 && seed.value < g))
        throw contract_error("delta seed extension failed");
    }
    ctx.best = seed.value;
    ctx.best_witness = seed.witness;
    delta_dfs(ctx, Int(1), Rational(1), 0);
    nodes = ctx.nodes;
    out.nodes_used = nodes;
    if (ctx.exceeded) return out;  // exact empty: budget exceeded
    level_min.push_back(ctx.best);
    prev_witness = ctx.best_witness;
    if (level == n) {
      Rational check = 1;
      for (const auto& p : ctx.best_witness) check -= make_rational(1, p);
      if (check != ctx.best || !(ctx.best > 0))
        throw contract_error("delta witness failed re-verification");
      out.exact = DeltaResult{ctx.best, ctx.best_witness};
    }
  }
  return out;
}

DeltaResult delta_upper_bound(int n) {
  if (n < 5) throw precondition_error("delta upper bound needs n >= 5");
  DeltaSearch base = delta(4);
  if (!base.exact) throw contract_error("exact delta(4) unavailable");
  DeltaResult r = *base.exact;
  Rational gap = r.value;
  for (int j = 5; j <= n; ++j) {
    // Any prime in (1/g, 2/g) more than halves the gap; take the top of the
    // window so witness primes grow geometrically.
    const Rational window_top = Rational(2) / gap;
    Int p = floor_below(window_top);
    while (!is_prime(p)) --p;
    if (!(Rational(1) / gap < Rational(p)))
      throw contract_error("no prime found in the gap-halving window");
    r.witness.push_back(p);
    gap -= make_rational(1, p);
    if (!(gap > 0)) throw contract_error("gap went non-positive at n = " +
                                         std::to_string(j));
  }
  r.value = gap;
  Rational check = 1;
  for (const auto& p : r.witness) check -= make_rational(1, p);
  const Rational bound = make_rational(1, Int(1) << n);
  if (check != r.value || !(r.value <= bound))
    throw contract_error("delta upper-bound witness failed verification");
  return r;
}

}  // namespace wci::primes

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sigmalat/rational.hpp"

namespace sigmalat::arith {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
// Least k >= 1 with a^k = 1 mod m; 0 when gcd(a, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// sigma(n) from the factorization of n.
mpz_class divisor_sum(std::uint64_t n);
// n-th prime, 1-indexed: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t n);
mpz_class to_mpz(std::uint64_t v);

inline constexpr std::size_t kDefaultSieveLimitCap = 30'000'000;

/// Divisor sums sigma(n) for 1 <= n <= limit, built from a smallest-prime-factor
/// sieve. Read-only after construction.
class SigmaSieve {
 public:
  std::size_t limit() const noexcept { return table_.size() - 1; }
  std::uint64_t sigma(std::size_t n) const { return table_.at(n); }
  mpz_class sigma_big(std::size_t n) const { return to_mpz(sigma(n)); }

 private:
  friend SigmaSieve build_sieve(std::size_t, std::size_t);
  std::vector<std::uint64_t> table_;  // table_[0] unused
};

// Throws Error{LimitTooLarge} when limit > cap, Error{InvalidSpec} when limit == 0.
SigmaSieve build_sieve(std::size_t limit, std::size_t cap = kDefaultSieveLimitCap);

// Split of 1..N by the sign of sigma(n) - (2n + 4).
struct ThresholdScan {
  std::size_t limit = 0;
  std::size_t below = 0;
  std::size_t above = 0;
  std::vector<std::uint64_t> equal;
};
ThresholdScan scan_threshold(const SigmaSieve& sieve);

/// Number of subgroups of order p^i in Z_p^k (the Gaussian binomial [k, i]_p).
mpz_class gaussian_subgroup_count(unsigned k, std::uint64_t p, unsigned i);

struct OddPartViolation {
  std::uint64_t n;
  mpz_class lhs;  // 11 * sigma(n)
  mpz_class rhs;  // 8n + 4
};

// Checks 11*sigma(n) > 8n + 4 for every odd 1 < n <= limit. n = 1 is skipped:
// it is Z2 x Z2 on its own and is handled by classification.
struct OddPartScan {
  std::size_t limit = 0;
  std::size_t checked = 0;
  std::vector<OddPartViolation> violations;
};
OddPartScan odd_part_inequality_scan(const SigmaSieve& sieve);

/// Lower bound on sigma_1 of a non-cyclic p-group of order p^n whose Frattini
/// quotient has rank k, compared against 2 + 4/p^n.
///
/// k >= 3: bound from the subgroups of orders p^(n-k), p^(n-k+1), p^(n-1), p^n
///   lying over the Frattini subgroup.
/// k == 2: bound (1 + (p+1) p^(n-1) + p^(n-2) + p^n) / p^n; exact value of
///   sigma_1(Z_p x Z_p) when n == 2.
struct Lemma5Bound {
  Rational lower_bound;
  Rational threshold;
  bool exceeds = false;  // lower_bound > threshold
};
Lemma5Bound lemma5_bound_check(std::uint64_t p, unsigned n, unsigned k);

}  // namespace sigmalat::arith

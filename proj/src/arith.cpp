#include "sigmalat/arith.hpp"

#include <string>

#include "sigmalat/error.hpp"

namespace sigmalat::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

mpz_class pow_u(std::uint64_t base, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), to_mpz(base).get_mpz_t(), e);
  return r;
}

}  // namespace

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is exact below 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

mpz_class divisor_sum(std::uint64_t n) {
  mpz_class total = 1;
  for (std::uint64_t p : prime_factors(n)) {
    mpz_class term = 1, power = 1;
    for (std::uint64_t m = n; m % p == 0; m /= p) {
      power *= p;
      term += power;
    }
    total *= term;
  }
  return total;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1) return k;
    if (x == 0) return 0;
    x = mul_mod(x, a, m);
  }
  return 0;
}

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "nth_prime: index must be >= 1");
  std::uint64_t candidate = 1;
  std::size_t found = 0;
  while (found < n) {
    ++candidate;
    if (is_prime(candidate)) ++found;
  }
  return candidate;
}

SigmaSieve build_sieve(std::size_t limit, std::size_t cap) {
  if (limit == 0) throw Error(ErrorKind::InvalidSpec, "sieve limit must be >= 1");
  if (limit > cap)
    throw Error(ErrorKind::LimitTooLarge,
                "sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));

  // spf[n]: smallest prime factor; pk[n]: largest power of spf[n] dividing n.
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || static_cast<std::uint64_t>(p) * i > limit) break;
      spf[p * i] = p;
    }
  }

  SigmaSieve sieve;
  sieve.table_.assign(limit + 1, 0);
  auto& sigma = sieve.table_;
  std::vector<std::uint32_t> pk(limit + 1, 1);
  sigma[1] = 1;
  for (std::size_t n = 2; n <= limit; ++n) {
    const std::uint32_t p = spf[n];
    const std::size_t m = n / p;
    pk[n] = (m % p == 0) ? pk[m] * p : p;
    if (pk[n] == n) {
      sigma[n] = sigma[m] * p + 1;  // 1 + p + ... + p^e
    } else {
      sigma[n] = sigma[pk[n]] * sigma[n / pk[n]];
    }
  }
  return sieve;
}

ThresholdScan scan_threshold(const SigmaSieve& sieve) {
  ThresholdScan scan;
  scan.limit = sieve.limit();
  for (std::size_t n = 1; n <= scan.limit; ++n) {
    const std::uint64_t s = sieve.sigma(n);
    const std::uint64_t bound = 2 * static_cast<std::uint64_t>(n) + 4;
    if (s < bound) {
      ++scan.below;
    } else if (s == bound) {
      scan.equal.push_back(n);
    } else {
      ++scan.above;
    }
  }
  return scan;
}

mpz_class gaussian_subgroup_count(unsigned k, std::uint64_t p, unsigned i) {
  if (i > k) return 0;
  mpz_class result = 1;
  for (unsigned j = 0; j < i; ++j) {
    result *= pow_u(p, k - j) - 1;
    const mpz_class den = pow_u(p, j + 1) - 1;
    // After this step result == [k, j+1]_p, an integer.
    if (!mpz_divisible_p(result.get_mpz_t(), den.get_mpz_t()))
      throw std::logic_error("gaussian_subgroup_count: inexact division");
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), den.get_mpz_t());
  }
  return result;
}

OddPartScan odd_part_inequality_scan(const SigmaSieve& sieve) {
  OddPartScan scan;
  scan.limit = sieve.limit();
  for (std::size_t n = 3; n <= scan.limit; n += 2) {
    ++scan.checked;
    const u128 lhs = static_cast<u128>(11) * sieve.sigma(n);
    const u128 rhs = static_cast<u128>(8) * n + 4;
    if (lhs <= rhs) {
      scan.violations.push_back({n, to_mpz(sieve.sigma(n)) * 11, to_mpz(n) * 8 + 4});
    }
  }
  return scan;
}

Lemma5Bound lemma5_bound_check(std::uint64_t p, unsigned n, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidSpec, "lemma5_bound_check: p must be prime");
  if (k < 2 || n < k) throw Error(ErrorKind::InvalidSpec, "lemma5_bound_check: need 2 <= k <= n");

  Lemma5Bound out;
  const mpz_class pn = pow_u(p, n);
  out.threshold = Rational(2) + Rational(mpz_class(4), pn);

  if (k >= 3) {
    const mpz_class a1 = gaussian_subgroup_count(k, p, 1);
    const mpz_class ak1 = gaussian_subgroup_count(k, p, k - 1);
    const mpz_class pk = pow_u(p, k);
    const mpz_class num = 1 + a1 * p + ak1 * pow_u(p, k - 1) + pk;
    out.lower_bound = Rational(num, pk);
  } else if (n > 2) {
    const mpz_class num = 1 + (to_mpz(p) + 1) * pow_u(p, n - 1) + pow_u(p, n - 2) + pn;
    out.lower_bound = Rational(num, pn);
  } else {
    const mpz_class num = 1 + (to_mpz(p) + 1) * p + pn;
    out.lower_bound = Rational(num, pn);
  }
  out.exceeds = out.lower_bound > out.threshold;
  return out;
}

}  // namespace sigmalat::arith

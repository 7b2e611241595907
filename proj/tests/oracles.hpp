// Brute-force reference computations. They share no code with the library's
// algorithms and are only used to produce or confirm expected values.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace oracle {

inline std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (d * d != n) s += n / d;
  }
  return s;
}

inline std::size_t divisor_count(std::uint64_t n) {
  std::size_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += (n % d == 0);
  return c;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Census of subgroups by testing every subset containing the identity (index 0)
// for closure. A finite nonempty subset closed under the product is a subgroup.
// Only feasible for n <= 16.
inline std::map<std::size_t, std::size_t> subset_census(std::size_t n, std::span<const std::uint32_t> table) {
  std::map<std::size_t, std::size_t> census;
  const std::uint32_t subsets = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const std::uint32_t full = (mask << 1) | 1u;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(full >> a & 1u)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!(full >> b & 1u)) continue;
        if (!(full >> table[a * n + b] & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++census[static_cast<std::size_t>(__builtin_popcount(full))];
  }
  return census;
}

// Size of the permutation group generated by gens, by naive set closure.
inline std::size_t closure_size(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens) {
  std::vector<std::uint32_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> todo{id};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = cur[g[i]];
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace oracle

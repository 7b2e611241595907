#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sigmalat/group.hpp"
#include "sigmalat/rational.hpp"
#include "sigmalat/sigma.hpp"

namespace sigmalat::families {

// 50 * p * ln(p) + 100.
std::uint64_t default_search_cap(std::uint64_t p);

/// Smallest prime q <= search_cap with q = 1 (mod p).
/// Throws Error{SearchCapExceeded}; the cap is never extended silently.
std::uint64_t dirichlet_search(std::uint64_t p, std::uint64_t search_cap);

// 2 + (1 + 1/q) / p.
Rational pq_sigma1_formula(std::uint64_t p, std::uint64_t q);

/// The non-nilpotent group of order p_n * q_n and its subgroup data.
/// When p*q exceeds the order cap the group is not built (`enumerated` false)
/// and only the closed form is filled in.
struct PQWitness {
  std::size_t index = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Rational sigma1_formula;
  bool enumerated = false;
  std::optional<Group> group;
  std::optional<Rational> sigma1_lattice;
  std::map<std::size_t, std::size_t> census;
  std::optional<Verdict> verdict;
  std::optional<bool> nilpotent;
};

/// Builds the n-th witness (n >= 1, p = n-th prime). Throws std::logic_error if
/// an enumerated witness breaks the census, formula or non-nilpotency laws.
PQWitness build_witness(std::size_t n, const Limits& limits = {},
                        std::optional<std::uint64_t> search_cap = std::nullopt);

struct ConvergenceRow {
  std::size_t index;
  std::uint64_t p;
  std::uint64_t q;
  Rational sigma1;
  Rational excess;  // sigma1 - 2
  bool enumerated;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  // Observed only; strict decrease is not a law of the family.
  bool observed_monotone = true;
};

/// First `count` witnesses. Checks excess <= 2/p and sigma1 > 2 for every row,
/// and formula == lattice where enumerated.
ConvergenceReport convergence_report(std::size_t count, const Limits& limits = {},
                                     std::optional<std::uint64_t> search_cap = std::nullopt);

}  // namespace sigmalat::families

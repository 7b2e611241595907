#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sigmalat/error.hpp"
#include "sigmalat/subgroup.hpp"

namespace sigmalat {

// Caps shared by construction and enumeration.
struct Limits {
  std::size_t max_order = 2000;
  std::size_t max_subgroups = 500000;
};

// Full associativity is scanned up to this order; above it, 10*n^2 sampled triples.
inline constexpr std::size_t kFullAssociativityScanMax = 512;

/// A finite group stored as its Cayley table, identity pinned at index 0.
///
/// Immutable after construction and safe to share between threads.
class Group {
 public:
  /// Wraps a table produced by one of the library's constructors. The table is
  /// trusted to be a group table; inverses are derived from it.
  static Group from_trusted_table(std::size_t order, std::vector<Element> table,
                                  std::string label);

  /// Wraps a user-supplied table after full validation (Latin square,
  /// identity at 0, associativity). Throws Error{InvalidTable}.
  static Group from_checked_table(std::size_t order, std::vector<Element> table,
                                  std::string label);

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }
  std::span<const Element> table() const noexcept { return table_; }

  // Least k >= 1 with a^k = 1.
  std::size_t element_order(Element a) const;
  std::vector<std::size_t> element_orders() const;
  std::size_t exponent() const;
  bool is_abelian() const;

  // A small generating set of the whole group, chosen greedily.
  std::vector<Element> generators() const;

 private:
  Group(std::size_t order, std::vector<Element> table, std::string label);

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string label_;
};

/// Result of structural table validation; `ok()` iff every check passed.
struct TableCheck {
  bool latin_square = false;
  bool identity_at_zero = false;
  bool inverses = false;
  bool associative = false;
  std::string detail;

  bool ok() const { return latin_square && identity_at_zero && inverses && associative; }
};

// Associativity is scanned fully up to kFullAssociativityScanMax, sampled above.
TableCheck check_table(std::size_t order, std::span<const Element> table);

// Constructors for the standard families.
Group cyclic(std::size_t n, const Limits& limits = {});
Group elementary_abelian(std::size_t p, std::size_t k, const Limits& limits = {});
Group dihedral(std::size_t n, const Limits& limits = {});
Group symmetric(std::size_t m, const Limits& limits = {});

// Z_q x| Z_p with (x1,y1)(x2,y2) = (x1 + t^y1 x2 mod q, y1 + y2 mod p), index x + q*y.
// t = 0 selects the smallest t >= 2 of multiplicative order p mod q.
Group semidirect_pq(std::size_t p, std::size_t q, std::size_t t = 0,
                    const Limits& limits = {});
std::size_t canonical_pq_twist(std::size_t p, std::size_t q);

// Index of (a, b) is a + |A| * b.
Group direct_product(const Group& a, const Group& b, const Limits& limits = {});
Group direct_product(std::span<const Group> parts, const Limits& limits = {});

// A permutation in one-line form: perm[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// Group generated by `gens` acting on {0..degree-1}. Products compose left to
/// right: (a*b)(i) = b(a(i)). Identity gets index 0; remaining elements are
/// numbered breadth-first, each layer sorted by one-line form.
Group closure_from_generators(std::size_t degree, std::span<const Permutation> gens,
                              const Limits& limits = {}, std::string label = {});

/// Coset group G/N; cosets are numbered by ascending minimal member.
/// Throws Error{NotNormal} if `normal` is not normal in `g`.
Group quotient(const Group& g, const Subgroup& normal);

// The subgroup viewed as a group in its own right, members renumbered ascending.
Group induced_group(const Group& g, const Subgroup& h, std::string label);

}  // namespace sigmalat

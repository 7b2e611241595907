#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sigmalat/bitset.hpp"

namespace sigmalat {

// Index of an element relative to a specific Group; 0 is always the identity.
using Element = std::uint32_t;

/// A subset of a parent group's elements closed under product and inverse.
/// Membership is a bit vector of the parent's order; the order is cached.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(Bitset members)
      : members_(std::move(members)), order_(members_.count()) {}

  const Bitset& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t parent_order() const noexcept { return members_.size(); }
  bool contains(Element a) const noexcept { return members_.test(a); }
  std::vector<Element> elements() const { return members_.to_vector(); }

  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }


 private:
  Bitset members_;
  std::size_t order_ = 0;
};

// Canonical order: by order, then lexicographic on ascending member lists.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.order() != b.order()) return a.order() < b.order();
  return lex_less(a.members(), b.members());
}

}  // namespace sigmalat

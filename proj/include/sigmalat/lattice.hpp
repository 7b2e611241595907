#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sigmalat/group.hpp"
#include "sigmalat/subgroup.hpp"

namespace sigmalat {

/// The complete subgroup lattice of one group, sorted canonically
/// (order, then member list). Immutable after enumeration.
class Lattice {
 public:
  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::map<std::size_t, std::size_t>& census() const noexcept { return census_; }

  const Subgroup& trivial() const { return subgroups_.front(); }
  const Subgroup& whole() const { return subgroups_.back(); }

  // Position of `members` in subgroups(), if it is a subgroup.
  std::optional<std::size_t> find(const Bitset& members) const;
  bool contains(const Bitset& members) const { return find(members).has_value(); }

 private:
  friend Lattice enumerate(const Group&, const Limits&);
  std::size_t group_order_ = 0;
  std::vector<Subgroup> subgroups_;
  std::map<std::size_t, std::size_t> census_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

/// Every subgroup of g exactly once. Cyclic subgroups seed a worklist; each
/// subgroup H is extended by one element x outside it, <H, x>, until no new
/// subgroup appears. Throws Error{LatticeTooLarge} past limits.max_subgroups and
/// Error{OrderCapExceeded} past limits.max_order.
Lattice enumerate(const Group& g, const Limits& limits = {});

// <gens> as a subgroup of g.
Subgroup generate(const Group& g, std::span<const Element> gens);

bool is_normal(const Group& g, const Subgroup& h);
std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);
std::vector<Subgroup> normal_subgroups(const Group& g, const Lattice& lat);

std::vector<Subgroup> maximal_subgroups(const Lattice& lat);
// Intersection of the maximal subgroups; the whole group when there are none.
Subgroup frattini(const Lattice& lat);

// Prime p when |g| = p^a with a >= 1.
std::optional<std::size_t> p_group_prime(const Group& g);

// k with |G/Phi(G)| = p^k. Throws Error{NotAPGroup}.
std::size_t frattini_rank(const Group& g, const Lattice& lat);

/// One normal Sylow subgroup per prime divisor of |g| (ascending by prime), or
/// nullopt when some Sylow subgroup is not normal.
std::optional<std::vector<Subgroup>> sylow_decomposition(const Group& g, const Lattice& lat);

// Every maximal subgroup normal. Throws std::logic_error if the Sylow criterion disagrees.
bool is_nilpotent(const Group& g, const Lattice& lat);

enum class Recognized { None, CyclicN, Z2xZ2, Z3xZ3, S3 };
std::string_view to_string(Recognized r);

struct StructuralProfile {
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_p_group = false;
  std::optional<std::size_t> prime;          // set iff is_p_group
  std::optional<std::size_t> frattini_rank;  // set iff is_p_group
  Recognized recognized_as = Recognized::None;
};

StructuralProfile recognize(const Group& g, const Lattice& lat);

}  // namespace sigmalat

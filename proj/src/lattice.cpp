#include "sigmalat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sigmalat/arith.hpp"

namespace sigmalat {

namespace {

struct Working {
  Bitset members;
  std::vector<Element> elements;
  std::vector<Element> gens;
};

// <H, x> by coset extension: the subgroup is the union of right cosets H*r,
// and the set of cosets is closed under right multiplication by generators.
Working extend(const Group& g, const Working& h, Element x) {
  Working k{h.members, h.elements, h.gens};
  k.gens.push_back(x);
  const std::size_t base = h.elements.size();
  std::vector<Element> reps{0};
  auto add_coset = [&](Element r) {
    for (std::size_t i = 0; i < base; ++i) {
      const Element e = g.mul(h.elements[i], r);
      k.members.set(e);
      k.elements.push_back(e);
    }
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (Element s : k.gens) {
      const Element e = g.mul(reps[i], s);
      if (!k.members.test(e)) add_coset(e);
    }
  return k;
}

Working trivial_working(std::size_t n) {
  Working w{Bitset(n), {0}, {}};
  w.members.set(0);
  return w;
}

bool conjugation_fixes(const Group& g, Element x, const Subgroup& h,
                       std::span<const Element> h_gens) {
  const Element xi = g.inverse(x);
  for (Element s : h_gens)
    if (!h.contains(g.mul(g.mul(x, s), xi))) return false;
  return true;
}

std::vector<Element> subgroup_generators(const Group& g, const Subgroup& h) {
  std::vector<Element> gens;
  Working w = trivial_working(g.order());
  h.members().for_each([&](std::size_t a) {
    const Element x = static_cast<Element>(a);
    if (w.members.test(x)) return;
    w = extend(g, w, x);
    gens.push_back(x);
  });
  return gens;
}

}  // namespace

std::optional<std::size_t> Lattice::find(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lattice enumerate(const Group& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.max_order)
    throw Error(ErrorKind::OrderCapExceeded, "enumerate: order " + std::to_string(n) +
                                                 " exceeds cap " + std::to_string(limits.max_order));

  std::vector<Working> found;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto insert = [&](Working w) {
    if (seen.count(w.members)) return;
    if (found.size() >= limits.max_subgroups)
      throw Error(ErrorKind::LatticeTooLarge,
                  "enumerate: more than " + std::to_string(limits.max_subgroups) + " subgroups");
    seen.emplace(w.members, found.size());
    found.push_back(std::move(w));
  };

  const Working trivial = trivial_working(n);
  insert(trivial);
  for (Element a = 1; a < n; ++a) insert(extend(g, trivial, a));

  // Cyclic subgroups are already in; the trivial subgroup needs no extension pass.
  Bitset covered(n);
  for (std::size_t i = 1; i < found.size(); ++i) {
    covered = found[i].members;
    for (Element x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      Working k = extend(g, found[i], x);
      // <H, hx> = <H, x>, so the whole right coset Hx is done.
      for (std::size_t j = 0; j < found[i].elements.size(); ++j)
        covered.set(g.mul(found[i].elements[j], x));
      insert(std::move(k));
    }
  }

  std::vector<Subgroup> subs;
  subs.reserve(found.size());
  for (auto& w : found) subs.emplace_back(std::move(w.members));
  found.clear();
  std::sort(subs.begin(), subs.end(), canonical_less);

  Lattice lat;
  lat.group_order_ = n;
  lat.subgroups_ = std::move(subs);
  for (std::size_t i = 0; i < lat.subgroups_.size(); ++i) {
    const auto& s = lat.subgroups_[i];
    if (n % s.order() != 0) throw std::logic_error("enumerate: subgroup order does not divide |G|");
    ++lat.census_[s.order()];
    lat.index_.emplace(s.members(), i);
  }
  return lat;
}

Subgroup generate(const Group& g, std::span<const Element> gens) {
  Working w = trivial_working(g.order());
  for (Element x : gens)
    if (!w.members.test(x)) w = extend(g, w, x);
  return Subgroup(std::move(w.members));
}

bool is_normal(const Group& g, const Subgroup& h) {
  if (h.order() == g.order() || h.order() == 1) return true;
  const auto h_gens = subgroup_generators(g, h);
  for (Element x : g.generators())
    if (!conjugation_fixes(g, x, h, h_gens)) return false;
  return true;
}

std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h) {
  const auto members = h.elements();
  std::set<std::vector<Element>> distinct;
  std::vector<Subgroup> out;
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inverse(x);
    Bitset c(g.order());
    for (Element a : members) c.set(g.mul(g.mul(x, a), xi));
    auto key = c.to_vector();
    if (distinct.insert(key).second) out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  const auto h_gens = subgroup_generators(g, h);
  Bitset nm(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (conjugation_fixes(g, x, h, h_gens)) nm.set(x);
  return Subgroup(std::move(nm));
}

std::vector<Subgroup> normal_subgroups(const Group& g, const Lattice& lat) {
  std::vector<Subgroup> out;
  const auto g_gens = g.generators();
  for (const auto& h : lat.subgroups()) {
    const auto h_gens = subgroup_generators(g, h);
    bool normal = true;
    for (Element x : g_gens)
      if (!conjugation_fixes(g, x, h, h_gens)) {
        normal = false;
        break;
      }
    if (normal) out.push_back(h);
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const Lattice& lat) {
  // Walk proper subgroups by descending order. A proper subgroup lies in some
  // maximal one of larger order, so H is maximal iff no maximal found so far
  // contains it.
  std::vector<Subgroup> maximal;
  const auto& subs = lat.subgroups();
  if (subs.size() < 2) return maximal;
  for (std::size_t i = subs.size() - 1; i-- > 0;) {
    const Subgroup& h = subs[i];
    bool covered = false;
    for (const auto& m : maximal) {
      if (m.order() > h.order() && m.order() % h.order() == 0 && h.is_subgroup_of(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(h);
  }
  std::sort(maximal.begin(), maximal.end(), canonical_less);
  return maximal;
}

Subgroup frattini(const Lattice& lat) {
  const auto maximal = maximal_subgroups(lat);
  if (maximal.empty()) return lat.whole();
  Bitset acc = maximal.front().members();
  for (const auto& m : maximal) acc &= m.members();
  return Subgroup(std::move(acc));
}

std::optional<std::size_t> p_group_prime(const Group& g) {
  if (g.order() < 2) return std::nullopt;
  auto primes = arith::prime_factors(g.order());
  if (primes.size() != 1) return std::nullopt;
  return static_cast<std::size_t>(primes.front());
}

std::size_t frattini_rank(const Group& g, const Lattice& lat) {
  const auto p = p_group_prime(g);
  if (!p) throw Error(ErrorKind::NotAPGroup, "frattini_rank: " + g.label() + " is not a p-group");
  const Group q = quotient(g, frattini(lat));
  std::size_t k = 0;
  for (std::size_t m = q.order(); m > 1; m /= *p) ++k;
  return k;
}

std::optional<std::vector<Subgroup>> sylow_decomposition(const Group& g, const Lattice& lat) {
  std::vector<Subgroup> out;
  for (std::uint64_t p : arith::prime_factors(g.order())) {
    std::size_t sylow_order = 1;
    for (std::size_t m = g.order(); m % p == 0; m /= p) sylow_order *= p;
    const Subgroup* unique = nullptr;
    std::size_t count = 0;
    for (const auto& h : lat.subgroups()) {
      if (h.order() != sylow_order) continue;
      ++count;
      unique = &h;
    }
    // Sylow p-subgroups are conjugate, so one of them is normal iff it is unique.
    if (count != 1) return std::nullopt;
    if (!is_normal(g, *unique)) throw std::logic_error("sylow_decomposition: unique Sylow not normal");
    out.push_back(*unique);
  }
  std::size_t product = 1;
  for (const auto& s : out) product *= s.order();
  if (product != g.order()) throw std::logic_error("sylow_decomposition: orders do not multiply to |G|");
  return out;
}

bool is_nilpotent(const Group& g, const Lattice& lat) {
  bool all_normal = true;
  const auto g_gens = g.generators();
  for (const auto& m : maximal_subgroups(lat)) {
    const auto m_gens = subgroup_generators(g, m);
    for (Element x : g_gens)
      if (!conjugation_fixes(g, x, m, m_gens)) {
        all_normal = false;
        break;
      }
    if (!all_normal) break;
  }
  const bool sylow_normal = sylow_decomposition(g, lat).has_value();
  if (all_normal != sylow_normal)
    throw std::logic_error("is_nilpotent: maximal-subgroup and Sylow criteria disagree for " +
                           g.label());
  return all_normal;
}

std::string_view to_string(Recognized r) {
  switch (r) {
    case Recognized::None: return "None";
    case Recognized::CyclicN: return "CyclicN";
    case Recognized::Z2xZ2: return "Z2xZ2";
    case Recognized::Z3xZ3: return "Z3xZ3";
    case Recognized::S3: return "S3";
  }
  return "None";
}

StructuralProfile recognize(const Group& g, const Lattice& lat) {
  StructuralProfile prof;
  const std::size_t n = g.order();
  const std::size_t exponent = g.exponent();
  const auto orders = g.element_orders();
  prof.is_cyclic = std::find(orders.begin(), orders.end(), n) != orders.end();
  prof.is_abelian = g.is_abelian();
  prof.is_nilpotent = is_nilpotent(g, lat);
  if (auto p = p_group_prime(g)) {
    prof.is_p_group = true;
    prof.prime = *p;
    prof.frattini_rank = frattini_rank(g, lat);
    if (!prof.is_cyclic && *prof.frattini_rank < 2)
      throw std::logic_error("recognize: non-cyclic p-group with Frattini rank < 2");
  }
  if (prof.is_cyclic) {
    prof.recognized_as = Recognized::CyclicN;
  } else if (n == 4 && exponent == 2) {
    prof.recognized_as = Recognized::Z2xZ2;
  } else if (n == 9 && exponent == 3) {
    prof.recognized_as = Recognized::Z3xZ3;
  } else if (n == 6 && !prof.is_abelian) {
    prof.recognized_as = Recognized::S3;
  }
  return prof;
}

}  // namespace sigmalat

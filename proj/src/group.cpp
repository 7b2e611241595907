#include "sigmalat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "sigmalat/arith.hpp"

namespace sigmalat {

namespace {

void require_order(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_order)
    throw Error(ErrorKind::OrderCapExceeded, what + ": order " + std::to_string(order) +
                                                 " exceeds cap " + std::to_string(limits.max_order));
}

// Order of a product of factors, saturating instead of overflowing.
std::size_t checked_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > static_cast<std::size_t>(-1) / a) return static_cast<std::size_t>(-1);
  return a * b;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorKind::LimitTooLarge: return "LimitTooLarge";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAPGroup: return "NotAPGroup";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Group::Group(std::size_t order, std::vector<Element> table, std::string label)
    : order_(order), table_(std::move(table)), inverse_(order, 0), label_(std::move(label)) {
  for (Element a = 0; a < order_; ++a) {
    auto r = row(a);
    inverse_[a] = static_cast<Element>(std::find(r.begin(), r.end(), Element{0}) - r.begin());
  }
}

Group Group::from_trusted_table(std::size_t order, std::vector<Element> table, std::string label) {
  return Group(order, std::move(table), std::move(label));
}

Group Group::from_checked_table(std::size_t order, std::vector<Element> table, std::string label) {
  if (order == 0) throw Error(ErrorKind::InvalidTable, "group order must be positive");
  if (table.size() != order * order)
    throw Error(ErrorKind::InvalidTable, "table must have order^2 entries");
  TableCheck check = check_table(order, table);
  if (!check.ok()) throw Error(ErrorKind::InvalidTable, check.detail);
  return Group(order, std::move(table), std::move(label));
}

TableCheck check_table(std::size_t n, std::span<const Element> t) {
  TableCheck c;
  if (t.size() != n * n) {
    c.detail = "table size mismatch";
    return c;
  }
  c.latin_square = true;
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n && c.latin_square; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      Element v = t[a * n + b];
      if (v >= n || seen[v] == stamp) {
        c.latin_square = false;
        c.detail = "row " + std::to_string(a) + " is not a permutation";
        break;
      }
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n && c.latin_square; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      Element v = t[a * n + b];
      if (seen[v] == stamp) {
        c.latin_square = false;
        c.detail = "column " + std::to_string(b) + " is not a permutation";
        break;
      }
      seen[v] = stamp;
    }
  }
  if (!c.latin_square) return c;

  c.identity_at_zero = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) {
      c.identity_at_zero = false;
      c.detail = "element 0 is not a two-sided identity";
      return c;
    }
  }

  // In a Latin square with identity each row has exactly one 0; check it is two-sided.
  c.inverses = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (t[a * n + b] != 0) ++b;
    if (t[b * n + a] != 0) {
      c.inverses = false;
      c.detail = "element " + std::to_string(a) + " has no two-sided inverse";
      return c;
    }
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t d) {
    return t[t[a * n + b] * n + d] == t[a * n + t[b * n + d]];
  };
  c.associative = true;
  if (n <= kFullAssociativityScanMax) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d)
          if (!assoc(a, b, d)) {
            c.associative = false;
            c.detail = "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                       "," + std::to_string(d) + ")";
            return c;
          }
  } else {
    std::mt19937_64 rng(0x5167a1u ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t samples = 10 * n * n;
    for (std::size_t s = 0; s < samples; ++s) {
      std::size_t a = pick(rng), b = pick(rng), d = pick(rng);
      if (!assoc(a, b, d)) {
        c.associative = false;
        c.detail = "associativity fails at sampled (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(d) + ")";
        return c;
      }
    }
  }
  return c;
}

std::size_t Group::element_order(Element a) const {
  std::size_t k = 1;
  Element x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<std::size_t> Group::element_orders() const {
  std::vector<std::size_t> out(order_);
  for (Element a = 0; a < order_; ++a) out[a] = element_order(a);
  return out;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (Element a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool Group::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> Group::generators() const {
  std::vector<Element> gens;
  Bitset in(order_);
  in.set(0);
  for (Element x = 1; x < order_; ++x) {
    if (in.test(x)) continue;
    gens.push_back(x);
    // The right-multiplication orbit of 1 under the generators is the subgroup.
    in = Bitset(order_);
    in.set(0);
    std::vector<Element> members{0};
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element s : gens) {
        const Element y = mul(members[i], s);
        if (!in.test(y)) {
          in.set(y);
          members.push_back(y);
        }
      }
  }
  return gens;
}

Group cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "cyclic: n must be >= 1");
  require_order(n, limits, "cyclic");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return Group::from_trusted_table(n, std::move(t), "cyclic:" + std::to_string(n));
}

Group elementary_abelian(std::size_t p, std::size_t k, const Limits& limits) {
  if (!arith::is_prime(p)) throw Error(ErrorKind::InvalidSpec, "elem: p must be prime");
  if (k == 0) throw Error(ErrorKind::InvalidSpec, "elem: k must be >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n = checked_product(n, p);
    if (n > limits.max_order) break;
  }
  require_order(n, limits, "elem");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[a * n + b] = static_cast<Element>(r);
    }
  return Group::from_trusted_table(n, std::move(t),
                                   "elem:" + std::to_string(p) + "," + std::to_string(k));
}

Group dihedral(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "dihedral: n must be >= 1");
  const std::size_t order = checked_product(2, n);
  require_order(order, limits, "dihedral");
  // r^i s^j has index i + n*j; s r s = r^-1.
  std::vector<Element> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      const std::size_t i = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2) % n;
      const std::size_t j = (j1 + j2) % 2;
      t[a * order + b] = static_cast<Element>(i + n * j);
    }
  return Group::from_trusted_table(order, std::move(t), "dihedral:" + std::to_string(n));
}

Group symmetric(std::size_t m, const Limits& limits) {
  if (m == 0) throw Error(ErrorKind::InvalidSpec, "sym: m must be >= 1");
  std::size_t order = 1;
  for (std::size_t i = 2; i <= m && order <= limits.max_order; ++i) order = checked_product(order, i);
  require_order(order, limits, "sym");
  std::vector<Permutation> gens;
  if (m >= 2) {
    Permutation cycle(m), swap(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      cycle[i] = static_cast<std::uint32_t>((i + 1) % m);
      swap[i] = i;
    }
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  }
  return closure_from_generators(m, gens, limits, "sym:" + std::to_string(m));
}

std::size_t canonical_pq_twist(std::size_t p, std::size_t q) {
  for (std::size_t t = 2; t < q; ++t)
    if (arith::multiplicative_order(t, q) == p) return t;
  throw Error(ErrorKind::InvalidSpec, "pq: no element of order p modulo q");
}

Group semidirect_pq(std::size_t p, std::size_t q, std::size_t t, const Limits& limits) {
  if (!arith::is_prime(p) || !arith::is_prime(q))
    throw Error(ErrorKind::InvalidSpec, "pq: p and q must be prime");
  if ((q - 1) % p != 0) throw Error(ErrorKind::InvalidSpec, "pq: p must divide q-1");
  require_order(checked_product(p, q), limits, "pq");
  if (t == 0) t = canonical_pq_twist(p, q);
  if (arith::multiplicative_order(t, q) != p)
    throw Error(ErrorKind::InvalidSpec, "pq: t must have multiplicative order p modulo q");

  const std::size_t n = p * q;
  std::vector<std::size_t> tpow(p, 1);
  for (std::size_t y = 1; y < p; ++y) tpow[y] = tpow[y - 1] * t % q;
  std::vector<Element> tab(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x1 = a % q, y1 = a / q, x2 = b % q, y2 = b / q;
      const std::size_t x = (x1 + tpow[y1] * x2) % q;
      const std::size_t y = (y1 + y2) % p;
      tab[a * n + b] = static_cast<Element>(x + q * y);
    }
  return Group::from_trusted_table(
      n, std::move(tab), "pq:" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(t));
}

Group direct_product(const Group& a, const Group& b, const Limits& limits) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t n = checked_product(na, nb);
  require_order(n, limits, "product");
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element ax = static_cast<Element>(x % na), bx = static_cast<Element>(x / na);
      const Element ay = static_cast<Element>(y % na), by = static_cast<Element>(y / na);
      t[x * n + y] = static_cast<Element>(a.mul(ax, ay) + na * b.mul(bx, by));
    }
  return Group::from_trusted_table(n, std::move(t), "product:" + a.label() + "+" + b.label());
}

Group direct_product(std::span<const Group> parts, const Limits& limits) {
  if (parts.empty()) return cyclic(1, limits);
  std::size_t total = 1;
  for (const auto& g : parts) total = checked_product(total, g.order());
  require_order(total, limits, "product");
  Group acc = parts.front();
  std::string label = "product:" + parts.front().label();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = direct_product(acc, parts[i], limits);
    label += "+" + parts[i].label();
  }
  return Group::from_trusted_table(acc.order(), std::vector<Element>(acc.table().begin(), acc.table().end()),
                                   label);
}

Group closure_from_generators(std::size_t degree, std::span<const Permutation> gens,
                              const Limits& limits, std::string label) {
  for (const auto& g : gens) {
    bool ok = g.size() == degree;
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; ok && i < degree; ++i) {
      if (g[i] >= degree || hit[g[i]]) ok = false;
      else hit[g[i]] = true;
    }
    if (!ok) throw Error(ErrorKind::NotAPermutation, "generator is not a permutation of 0.." +
                                                         std::to_string(degree == 0 ? 0 : degree - 1));
  }

  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = b[a[i]];
    return r;
  };

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::map<Permutation, Element> index{{identity, 0}};
  std::vector<Permutation> elements{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Permutation c = compose(e, g);
        if (!index.count(c)) {
          index.emplace(c, 0);
          next.push_back(std::move(c));
        }
      }
    std::sort(next.begin(), next.end());
    for (const auto& e : next) {
      index[e] = static_cast<Element>(elements.size());
      elements.push_back(e);
    }
    require_order(elements.size(), limits, "closure");
    frontier = std::move(next);
  }

  const std::size_t n = elements.size();
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elements[a], elements[b]));
  if (label.empty()) label = "perm:" + std::to_string(degree);
  return Group::from_trusted_table(n, std::move(t), std::move(label));
}

Group quotient(const Group& g, const Subgroup& normal) {
  const std::size_t n = g.order();
  const auto members = normal.elements();
  // x N x^-1 = N for generators x of g.
  for (Element x : g.generators())
    for (Element h : members)
      if (!normal.contains(g.mul(g.mul(x, h), g.inverse(x))))
        throw Error(ErrorKind::NotNormal, "quotient: subgroup is not normal");

  std::vector<Element> coset_of(n, static_cast<Element>(n));
  std::vector<Element> reps;
  for (Element a = 0; a < n; ++a) {
    if (coset_of[a] != n) continue;
    const Element id = static_cast<Element>(reps.size());
    reps.push_back(a);
    for (Element h : members) coset_of[g.mul(a, h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
  return Group::from_trusted_table(m, std::move(t),
                                   g.label() + "/N" + std::to_string(normal.order()));
}

Group induced_group(const Group& g, const Subgroup& h, std::string label) {
  const auto members = h.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Element>(i);
  const std::size_t m = members.size();
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = local[g.mul(members[i], members[j])];
  return Group::from_trusted_table(m, std::move(t), std::move(label));
}

}  // namespace sigmalat

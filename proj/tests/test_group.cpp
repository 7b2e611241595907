#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "sigmalat/group.hpp"
#include "sigmalat/group_spec.hpp"
#include "sigmalat/lattice.hpp"

using namespace sigmalat;

namespace {

std::vector<std::size_t> sorted_orders(const Group& g) {
  auto v = g.element_orders();
  std::sort(v.begin(), v.end());
  return v;
}

Group s3_from_perms() {
  std::vector<Permutation> gens{parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)};
  return closure_from_generators(3, gens);
}

}  // namespace

TEST_CASE("cyclic(1) is the trivial group") {
  const Group g = cyclic(1);
  CHECK(g.order() == 1);
  CHECK(g.mul(0, 0) == 0);
  CHECK(g.element_order(0) == 1);
}

TEST_CASE("semidirect pq(2,3) is S3") {
  const Group g = semidirect_pq(2, 3);
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(sorted_orders(g) == std::vector<std::size_t>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("semidirect pq product rule and canonical twist") {
  CHECK(canonical_pq_twist(3, 7) == 2);
  CHECK(canonical_pq_twist(2, 3) == 2);
  CHECK(canonical_pq_twist(7, 29) == 7);  // 7^7 = 1 mod 29, smaller candidates have other orders
  const Group g = semidirect_pq(3, 7);
  // (x1,y1)(x2,y2) = (x1 + 2^y1 x2 mod 7, y1 + y2 mod 3), index x + 7y.
  for (std::size_t a = 0; a < 21; ++a)
    for (std::size_t b = 0; b < 21; ++b) {
      std::size_t x1 = a % 7, y1 = a / 7, x2 = b % 7, y2 = b / 7;
      std::size_t t = 1;
      for (std::size_t i = 0; i < y1; ++i) t = t * 2 % 7;
      CHECK(g.mul(a, b) == (x1 + t * x2) % 7 + 7 * ((y1 + y2) % 3));
    }
}

TEST_CASE("elementary abelian (3,2) has order 9 and exponent 3") {
  const Group g = elementary_abelian(3, 2);
  CHECK(g.order() == 9);
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 3);
  for (Element a = 1; a < 9; ++a) CHECK(g.element_order(a) == 3);
}

TEST_CASE("direct product Z2xZ2 x Z9 is abelian of order 36") {
  const Group g = build(parse_group_spec("product:elem:2,2+cyclic:9"));
  CHECK(g.order() == 36);
  // Direct table inspection.
  bool commutes = true;
  for (Element a = 0; a < 36; ++a)
    for (Element b = 0; b < 36; ++b) commutes = commutes && g.mul(a, b) == g.mul(b, a);
  CHECK(commutes);
  CHECK(g.label() == "product:elem:2,2+cyclic:9");
}

TEST_CASE("direct product element orders are lcm of components") {
  const Group a = semidirect_pq(2, 3), b = dihedral(4);
  const Group p = direct_product(a, b);
  REQUIRE(p.order() == 48);
  for (Element x = 0; x < p.order(); ++x) {
    const Element ax = x % 6, bx = x / 6;
    CHECK(p.element_order(x) == std::lcm(a.element_order(ax), b.element_order(bx)));
  }
}

TEST_CASE("closure from generators") {
  SUBCASE("S3 from a 3-cycle and a transposition") { CHECK(s3_from_perms().order() == 6); }
  SUBCASE("single involution") {
    std::vector<Permutation> gens{parse_cycles("(0 1)(2 3)", 4)};
    CHECK(closure_from_generators(4, gens).order() == 2);
  }
  SUBCASE("dihedral of order 10") {
    std::vector<Permutation> gens{parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(1 4)(2 3)", 5)};
    CHECK(oracle::closure_size(5, gens) == 10);
    const Group g = closure_from_generators(5, gens);
    CHECK(g.order() == 10);
    CHECK_FALSE(g.is_abelian());
  }
  SUBCASE("no generators gives the trivial group") {
    CHECK(closure_from_generators(3, {}).order() == 1);
  }
  SUBCASE("deterministic") {
    std::vector<Permutation> gens{parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)};
    const Group a = closure_from_generators(4, gens), b = closure_from_generators(4, gens);
    CHECK(std::equal(a.table().begin(), a.table().end(), b.table().begin(), b.table().end()));
  }
  SUBCASE("symmetric(4) matches naive closure size") {
    CHECK(symmetric(4).order() == 24);
    CHECK(symmetric(1).order() == 1);
  }
}

TEST_CASE("closure rejects bad permutations and respects the order cap") {
  std::vector<Permutation> bad{{0, 0, 1}};
  CHECK_THROWS_AS(closure_from_generators(3, bad), Error);
  try {
    closure_from_generators(3, bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPermutation);
  }
  Limits small;
  small.max_order = 100;
  try {
    symmetric(5, small);
    FAIL("expected OrderCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}

TEST_CASE("quotients") {
  const Group s3 = semidirect_pq(2, 3);
  const Lattice lat = enumerate(s3);
  SUBCASE("by the trivial subgroup") {
    const Group q = quotient(s3, lat.trivial());
    CHECK(q.order() == 6);
    CHECK(sorted_orders(q) == sorted_orders(s3));
  }
  SUBCASE("by the whole group") { CHECK(quotient(s3, lat.whole()).order() == 1); }
  SUBCASE("by the order-3 subgroup") {
    const Subgroup* c3 = nullptr;
    for (const auto& h : lat.subgroups())
      if (h.order() == 3) c3 = &h;
    REQUIRE(c3);
    const Group q = quotient(s3, *c3);
    CHECK(q.order() == 2);
    CHECK(q.mul(0, 0) == 0);
    CHECK(q.mul(0, 1) == 1);
    CHECK(q.mul(1, 0) == 1);
    CHECK(q.mul(1, 1) == 0);
  }
  SUBCASE("non-normal subgroup is rejected") {
    const Subgroup* c2 = nullptr;
    for (const auto& h : lat.subgroups())
      if (h.order() == 2) c2 = &h;
    REQUIRE(c2);
    try {
      quotient(s3, *c2);
      FAIL("expected NotNormal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotNormal);
    }
  }
  SUBCASE("|G/N| * |N| = |G| for every normal subgroup of D6") {
    const Group d6 = dihedral(6);
    const Lattice l = enumerate(d6);
    for (const auto& n : normal_subgroups(d6, l)) {
      const Group q = quotient(d6, n);
      CHECK(q.order() * n.order() == d6.order());
      CHECK(check_table(q.order(), q.table()).ok());
    }
  }
}

TEST_CASE("element orders") {
  CHECK(cyclic(12).element_order(0) == 1);
  CHECK(cyclic(12).element_order(1) == 12);
  CHECK(cyclic(12).element_order(4) == 3);
  const Group g = dihedral(5);
  for (Element a = 0; a < g.order(); ++a) CHECK(g.order() % g.element_order(a) == 0);
}

TEST_CASE("every constructed group passes the table checks") {
  std::vector<Group> groups{cyclic(1),          cyclic(30),        elementary_abelian(2, 4), elementary_abelian(5, 2),
                            dihedral(1),        dihedral(2),       dihedral(9),              symmetric(4),
                            semidirect_pq(3, 13), semidirect_pq(5, 11), s3_from_perms(),
                            direct_product(cyclic(4), semidirect_pq(3, 7))};
  for (const auto& g : groups) {
    INFO(g.label());
    const TableCheck c = check_table(g.order(), g.table());
    CHECK(c.latin_square);
    CHECK(c.identity_at_zero);
    CHECK(c.inverses);
    CHECK(c.associative);
    for (Element a = 0; a < g.order(); ++a) CHECK(g.mul(a, g.inverse(a)) == 0);
  }
}

TEST_CASE("sampled associativity path above the full-scan limit") {
  const Group g = cyclic(600);
  CHECK(check_table(g.order(), g.table()).ok());
}

TEST_CASE("checked tables reject malformed input") {
  SUBCASE("not a Latin square") {
    std::vector<Element> t{0, 1, 1, 1};
    CHECK_FALSE(check_table(2, t).latin_square);
  }
  SUBCASE("identity not at 0") {
    std::vector<Element> t{1, 0, 0, 1};
    const auto c = check_table(2, t);
    CHECK(c.latin_square);
    CHECK_FALSE(c.identity_at_zero);
  }
  SUBCASE("order-5 loop that is not associative") {
    std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    const auto c = check_table(5, t);
    CHECK(c.latin_square);
    CHECK(c.identity_at_zero);
    CHECK(c.inverses);
    CHECK_FALSE(c.associative);
    try {
      Group::from_checked_table(5, t, "loop");
      FAIL("expected InvalidTable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidTable);
    }
  }
}

TEST_CASE("invalid specs") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind_of([] { semidirect_pq(3, 5); }) == ErrorKind::InvalidSpec);     // 3 does not divide 4
  CHECK(kind_of([] { semidirect_pq(4, 5); }) == ErrorKind::InvalidSpec);     // 4 not prime
  CHECK(kind_of([] { semidirect_pq(3, 7, 6); }) == ErrorKind::InvalidSpec);  // 6 has order 2 mod 7
  CHECK(kind_of([] { elementary_abelian(6, 2); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { cyclic(0); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { cyclic(2001); }) == ErrorKind::OrderCapExceeded);
  CHECK(kind_of([] { symmetric(7); }) == ErrorKind::OrderCapExceeded);
  CHECK(kind_of([] { elementary_abelian(2, 64); }) == ErrorKind::OrderCapExceeded);
  CHECK(kind_of([] { parse_group_spec("cyclic:x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group_spec("elem:2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group_spec("/no/such/file"); }) == ErrorKind::ParseError);
}

TEST_CASE("spec strings round-trip through parse and to_string") {
  for (const char* s : {"cyclic:12", "elem:3,2", "dihedral:4", "sym:4", "pq:3,7", "pq:3,7,4",
                        "product:cyclic:4+cyclic:9", "product:elem:2,2+pq:2,3"}) {
    CHECK(to_string(parse_group_spec(s)) == s);
  }
}

TEST_CASE("raw table and permutation file formats") {
  const Group d4 = dihedral(4);
  std::istringstream in(dump_table(d4));
  const Group back = read_table(in, "d4");
  CHECK(std::equal(back.table().begin(), back.table().end(), d4.table().begin(), d4.table().end()));

  std::istringstream bad("3\n0 1 2\n1 2 0\n2 0 7\n");
  CHECK_THROWS_AS(read_table(bad, "bad"), Error);

  std::istringstream perm("perm 5\n(0 1 2 3 4)\n(1 4)(2 3)\n");
  const auto gens = read_perm_generators(perm);
  CHECK(gens.degree == 5);
  REQUIRE(gens.gens.size() == 2);
  CHECK(gens.gens[1] == Permutation{0, 4, 3, 2, 1});

  const Group from_file = build(parse_group_spec(SIGMALAT_TEST_DATA "/d5.perm"));
  CHECK(from_file.order() == 10);
  try {
    build(parse_group_spec(SIGMALAT_TEST_DATA "/loop5.table"));
    FAIL("expected InvalidTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidTable);
  }
  CHECK_THROWS_AS(parse_cycles("(0 1 5)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 4), Error);
}

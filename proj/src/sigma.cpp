#include "sigmalat/sigma.hpp"

#include <numeric>

#include "sigmalat/arith.hpp"

namespace sigmalat {

Rational sigma1(const Group& g, const Lattice& lat) {
  mpz_class total = 0;
  for (const auto& [order, count] : lat.census()) total += arith::to_mpz(order) * arith::to_mpz(count);
  return Rational(total, arith::to_mpz(g.order()));
}

Rational threshold(std::size_t order) {
  return Rational(2) + Rational(mpz_class(4), arith::to_mpz(order));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::BelowThreshold: return "BelowThreshold";
    case Verdict::AtThreshold: return "AtThreshold";
    case Verdict::AboveThreshold: return "AboveThreshold";
  }
  return "AboveThreshold";
}

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Cyclic: return "Cyclic";
    case Structure::Z2xZ2: return "Z2xZ2";
    case Structure::Z3xZ3: return "Z3xZ3";
    case Structure::S3: return "S3";
    case Structure::Other: return "Other";
  }
  return "Other";
}

Classification classify(const Group& g, const Lattice& lat) {
  return classify(g, lat, recognize(g, lat));
}

Classification classify(const Group& g, const Lattice& lat, const StructuralProfile& profile) {
  Classification c;
  c.sigma1 = sigma1(g, lat);
  c.threshold = threshold(g.order());
  if (c.sigma1 < c.threshold) c.verdict = Verdict::BelowThreshold;
  else if (c.sigma1 == c.threshold) c.verdict = Verdict::AtThreshold;
  else c.verdict = Verdict::AboveThreshold;

  switch (profile.recognized_as) {
    case Recognized::CyclicN: c.structure = Structure::Cyclic; break;
    case Recognized::Z2xZ2: c.structure = Structure::Z2xZ2; break;
    case Recognized::Z3xZ3: c.structure = Structure::Z3xZ3; break;
    case Recognized::S3: c.structure = Structure::S3; break;
    case Recognized::None: c.structure = Structure::Other; break;
  }

  const mpz_class n = arith::to_mpz(g.order());
  const mpz_class bound = 2 * n + 4;
  switch (c.verdict) {
    case Verdict::BelowThreshold:
      c.theorem1_consistent = (c.structure == Structure::Cyclic && arith::divisor_sum(g.order()) < bound) ||
                              c.structure == Structure::Z2xZ2;
      break;
    case Verdict::AtThreshold:
      c.theorem1_consistent = (c.structure == Structure::Cyclic && arith::divisor_sum(g.order()) == bound) ||
                              c.structure == Structure::Z3xZ3 || c.structure == Structure::S3;
      break;
    case Verdict::AboveThreshold:
      c.theorem1_consistent = true;
      break;
  }
  return c;
}

bool check_multiplicativity(std::span<const Group> parts, const Limits& limits) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (std::gcd(parts[i].order(), parts[j].order()) != 1)
        throw Error(ErrorKind::NotCoprime, "check_multiplicativity: orders " +
                                               std::to_string(parts[i].order()) + " and " +
                                               std::to_string(parts[j].order()) + " are not coprime");
  const Group product = direct_product(parts, limits);
  const Rational whole = sigma1(product, enumerate(product, limits));
  Rational factors(1);
  for (const auto& part : parts) factors *= sigma1(part, enumerate(part, limits));
  return whole == factors;
}

bool check_quotient_monotonicity(const Group& g, const Lattice& lat, const Limits& limits) {
  const Rational s = sigma1(g, lat);
  for (const auto& n : normal_subgroups(g, lat)) {
    const Group q = quotient(g, n);
    if (sigma1(q, enumerate(q, limits)) > s) return false;
  }
  return true;
}

}  // namespace sigmalat

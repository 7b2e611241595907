#include "sigmalat/families.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sigmalat/arith.hpp"
#include "sigmalat/lattice.hpp"

namespace sigmalat::families {

std::uint64_t default_search_cap(std::uint64_t p) {
  const double lp = p > 1 ? std::log(static_cast<double>(p)) : 0.0;
  return static_cast<std::uint64_t>(50.0 * static_cast<double>(p) * lp) + 100;
}

std::uint64_t dirichlet_search(std::uint64_t p, std::uint64_t search_cap) {
  if (!arith::is_prime(p)) throw Error(ErrorKind::InvalidSpec, "dirichlet_search: p must be prime");
  for (std::uint64_t q = p + 1; q <= search_cap; q += p)
    if (arith::is_prime(q)) return q;
  throw Error(ErrorKind::SearchCapExceeded, "no prime q = 1 mod " + std::to_string(p) +
                                                " up to search cap " + std::to_string(search_cap));
}

Rational pq_sigma1_formula(std::uint64_t p, std::uint64_t q) {
  // (1 + pq + q + pq) / pq: trivial, q subgroups of order p, one of order q, G.
  const mpz_class pz = arith::to_mpz(p), qz = arith::to_mpz(q);
  return Rational(1 + 2 * pz * qz + qz, pz * qz);
}

PQWitness build_witness(std::size_t n, const Limits& limits, std::optional<std::uint64_t> search_cap) {
  PQWitness w;
  w.index = n;
  w.p = arith::nth_prime(n);
  w.q = dirichlet_search(w.p, search_cap.value_or(default_search_cap(w.p)));
  w.sigma1_formula = pq_sigma1_formula(w.p, w.q);
  if (w.sigma1_formula != Rational(2) + (Rational(1) + Rational::from_u64(1, w.q)) / Rational::from_u64(w.p))
    throw std::logic_error("build_witness: closed forms disagree");

  if (w.p * w.q > limits.max_order) return w;

  Group g = semidirect_pq(w.p, w.q, 0, limits);
  const Lattice lat = enumerate(g, limits);
  w.enumerated = true;
  w.census = lat.census();
  w.sigma1_lattice = sigma1(g, lat);
  w.nilpotent = is_nilpotent(g, lat);
  w.verdict = classify(g, lat).verdict;

  const std::map<std::size_t, std::size_t> expected{
      {1, 1}, {w.p, w.q}, {w.q, 1}, {w.p * w.q, 1}};
  const std::string tag = "witness " + std::to_string(n) + " (p=" + std::to_string(w.p) +
                          ", q=" + std::to_string(w.q) + ")";
  if (w.census != expected) throw std::logic_error(tag + ": census mismatch");
  if (*w.sigma1_lattice != w.sigma1_formula) throw std::logic_error(tag + ": formula != lattice");
  if (*w.nilpotent) throw std::logic_error(tag + ": group is nilpotent");
  w.group = std::move(g);
  return w;
}

ConvergenceReport convergence_report(std::size_t count, const Limits& limits,
                                     std::optional<std::uint64_t> search_cap) {
  if (count == 0) throw Error(ErrorKind::InvalidSpec, "convergence_report: count must be >= 1");
  ConvergenceReport report;
  for (std::size_t i = 1; i <= count; ++i) {
    const PQWitness w = build_witness(i, limits, search_cap);
    ConvergenceRow row{i, w.p, w.q, w.sigma1_formula, w.sigma1_formula - Rational(2), w.enumerated};
    if (!(row.sigma1 > Rational(2)))
      throw std::logic_error("convergence_report: sigma1 not above 2 at row " + std::to_string(i));
    if (row.excess > Rational::from_u64(2, w.p))
      throw std::logic_error("convergence_report: excess above 2/p at row " + std::to_string(i));
    if (!report.rows.empty() && !(row.sigma1 < report.rows.back().sigma1)) report.observed_monotone = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sigmalat::families

#pragma once

#include <span>
#include <string_view>

#include "sigmalat/group.hpp"
#include "sigmalat/lattice.hpp"
#include "sigmalat/rational.hpp"

namespace sigmalat {

// Sum over all subgroups H of |H| / |G|, exact.
Rational sigma1(const Group& g, const Lattice& lat);

// 2 + 4/n.
Rational threshold(std::size_t order);

enum class Verdict { BelowThreshold, AtThreshold, AboveThreshold };
enum class Structure { Cyclic, Z2xZ2, Z3xZ3, S3, Other };
std::string_view to_string(Verdict v);
std::string_view to_string(Structure s);

struct Classification {
  Verdict verdict = Verdict::AboveThreshold;
  Structure structure = Structure::Other;
  bool theorem1_consistent = true;
  Rational sigma1;
  Rational threshold;
};

/// Compares sigma_1 with 2 + 4/n and checks that the (verdict, structure)
/// pair is an allowed one:
///   below: cyclic with sigma(n) < 2n + 4, or Z2 x Z2
///   at:    cyclic with sigma(n) = 2n + 4, or Z3 x Z3, or S3
/// Above-threshold groups are always consistent. Structure is recognized
/// independently of the verdict.
Classification classify(const Group& g, const Lattice& lat);
Classification classify(const Group& g, const Lattice& lat, const StructuralProfile& profile);

// sigma_1 of the direct product equals the product of the parts' sigma_1.
// Throws Error{NotCoprime} or Error{OrderCapExceeded}.
bool check_multiplicativity(std::span<const Group> parts, const Limits& limits = {});

// sigma_1(G) >= sigma_1(G/N) for every normal N.
bool check_quotient_monotonicity(const Group& g, const Lattice& lat, const Limits& limits = {});

}  // namespace sigmalat

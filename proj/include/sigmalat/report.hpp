#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "sigmalat/group.hpp"
#include "sigmalat/lattice.hpp"
#include "sigmalat/sigma.hpp"

namespace sigmalat {

/// Everything the analyzer reports about one group.
struct AnalysisReport {
  std::string label;
  std::size_t order = 0;
  std::size_t subgroup_count = 0;
  std::map<std::size_t, std::size_t> census;
  Rational sigma1;
  Rational threshold;
  Verdict verdict = Verdict::AboveThreshold;
  Structure structure = Structure::Other;
  StructuralProfile profile;
  bool theorem1_consistent = true;
  double elapsed_ms = 0.0;
};

AnalysisReport analyze(const Group& g, const Limits& limits = {});
AnalysisReport analyze(const Group& g, const Lattice& lat);

// Keys are fixed; rationals are {"num": "...", "den": "..."} strings, census keys ascend.
nlohmann::ordered_json to_json(const AnalysisReport& r, bool include_timing = true);
std::string to_text(const AnalysisReport& r, bool include_timing = true);

nlohmann::ordered_json rational_json(const Rational& r);

}  // namespace sigmalat

#include "sigmalat/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace sigmalat {

AnalysisReport analyze(const Group& g, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const Lattice lat = enumerate(g, limits);
  AnalysisReport r = analyze(g, lat);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

AnalysisReport analyze(const Group& g, const Lattice& lat) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.label = g.label();
  r.order = g.order();
  r.subgroup_count = lat.size();
  r.census = lat.census();
  r.profile = recognize(g, lat);
  const Classification c = classify(g, lat, r.profile);
  r.sigma1 = c.sigma1;
  r.threshold = c.threshold;
  r.verdict = c.verdict;
  r.structure = c.structure;
  r.theorem1_consistent = c.theorem1_consistent;

  std::size_t total = 0;
  for (const auto& [order, count] : r.census) total += count;
  if (total != r.subgroup_count) throw std::logic_error("analyze: census does not sum to subgroup count");
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.numerator_str();
  j["den"] = r.denominator_str();
  return j;
}

nlohmann::ordered_json to_json(const AnalysisReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["subgroup_count"] = r.subgroup_count;
  nlohmann::ordered_json census = nlohmann::ordered_json::object();
  for (const auto& [order, count] : r.census) census[std::to_string(order)] = count;
  j["census"] = census;
  j["sigma1"] = rational_json(r.sigma1);
  j["sigma1_decimal"] = r.sigma1.decimal(12);
  j["threshold"] = rational_json(r.threshold);
  j["verdict"] = std::string(to_string(r.verdict));
  j["structure"] = std::string(to_string(r.structure));
  nlohmann::ordered_json flags;
  flags["cyclic"] = r.profile.is_cyclic;
  flags["abelian"] = r.profile.is_abelian;
  flags["nilpotent"] = r.profile.is_nilpotent;
  flags["p_group"] = r.profile.is_p_group;
  flags["prime"] = r.profile.prime ? nlohmann::ordered_json(*r.profile.prime) : nlohmann::ordered_json(nullptr);
  flags["frattini_rank"] =
      r.profile.frattini_rank ? nlohmann::ordered_json(*r.profile.frattini_rank) : nlohmann::ordered_json(nullptr);
  flags["recognized_as"] = std::string(to_string(r.profile.recognized_as));
  j["flags"] = flags;
  j["theorem1_consistent"] = r.theorem1_consistent;
  if (include_timing) j["timing_ms"] = std::llround(r.elapsed_ms);
  return j;
}

std::string to_text(const AnalysisReport& r, bool include_timing) {
  std::ostringstream os;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  os << std::left;
  os << std::setw(20) << "group" << r.label << '\n';
  os << std::setw(20) << "order" << r.order << '\n';
  os << std::setw(20) << "subgroups" << r.subgroup_count << '\n';
  os << std::setw(20) << "census";
  bool first = true;
  for (const auto& [order, count] : r.census) {
    os << (first ? "" : " ") << order << ':' << count;
    first = false;
  }
  os << '\n';
  os << std::setw(20) << "sigma1" << r.sigma1.str() << "  (~" << r.sigma1.decimal(12) << ")\n";
  os << std::setw(20) << "threshold" << r.threshold.str() << '\n';
  os << std::setw(20) << "verdict" << to_string(r.verdict) << '\n';
  os << std::setw(20) << "structure" << to_string(r.structure) << '\n';
  os << std::setw(20) << "cyclic" << yes_no(r.profile.is_cyclic) << '\n';
  os << std::setw(20) << "abelian" << yes_no(r.profile.is_abelian) << '\n';
  os << std::setw(20) << "nilpotent" << yes_no(r.profile.is_nilpotent) << '\n';
  os << std::setw(20) << "p-group";
  if (r.profile.is_p_group)
    os << "yes (p=" << *r.profile.prime << ", frattini rank " << *r.profile.frattini_rank << ")\n";
  else
    os << "no\n";
  os << std::setw(20) << "recognized" << to_string(r.profile.recognized_as) << '\n';
  os << std::setw(20) << "classification" << (r.theorem1_consistent ? "consistent" : "VIOLATED") << '\n';
  if (include_timing) os << std::setw(20) << "time" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace sigmalat

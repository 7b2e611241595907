#include "sigmalat/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "sigmalat/arith.hpp"

namespace sigmalat {

namespace {

using Fingerprint =
    std::tuple<std::size_t, bool, std::vector<std::size_t>, std::map<std::size_t, std::size_t>>;

bool is_prime_power(std::size_t n) { return arith::prime_factors(n).size() == 1; }

void run_checks(EntryResult& r) {
  const AnalysisReport& a = *r.report;
  const bool below = a.verdict == Verdict::BelowThreshold;
  const bool at = a.verdict == Verdict::AtThreshold;
  const auto rec = a.profile.recognized_as;

  r.theorem1 = a.theorem1_consistent;
  if (below) r.nilpotent_rule = a.profile.is_nilpotent;
  if (at) r.nilpotent_rule = a.profile.is_nilpotent || rec == Recognized::S3;
  if (a.profile.is_p_group && !a.profile.is_cyclic) {
    if (below) r.p_group_rule = rec == Recognized::Z2xZ2;
    if (at) r.p_group_rule = rec == Recognized::Z3xZ3;
  }
  if (below && !a.profile.is_cyclic) r.noncyclic_rule = rec == Recognized::Z2xZ2;
  if (at && !a.profile.is_abelian) r.noncyclic_rule = rec == Recognized::S3;
  if (a.sigma1 <= Rational(2)) r.sigma_le_2 = a.profile.is_cyclic;
}

}  // namespace

CorpusEntry entry_from_spec(const GroupSpec& spec) {
  return {to_string(spec), [spec](const Limits& limits) { return build(spec, limits); }};
}

std::vector<CorpusEntry> ambient_subgroup_entries(std::size_t max_degree, const Limits& limits) {
  std::vector<CorpusEntry> out;
  std::set<Fingerprint> seen;
  for (std::size_t m = 1; m <= max_degree; ++m) {
    const Group ambient = symmetric(m, limits);
    const Lattice lat = enumerate(ambient, limits);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto g = std::make_shared<const Group>(induced_group(
          ambient, lat[i], "sym:" + std::to_string(m) + "/sub" + std::to_string(i) + "[" +
                               std::to_string(lat[i].order()) + "]"));
      auto orders = g->element_orders();
      std::sort(orders.begin(), orders.end());
      Fingerprint fp{g->order(), g->is_abelian(), std::move(orders), enumerate(*g, limits).census()};
      if (!seen.insert(std::move(fp)).second) continue;
      out.push_back({g->label(), [g](const Limits&) { return *g; }});
    }
  }
  return out;
}

std::vector<CorpusEntry> build_corpus(const CorpusOptions& o, const Limits& limits) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= o.cyclic_max; ++n) out.push_back(entry_from_spec({spec::Cyclic{n}}));
  for (std::size_t p = 2; p <= o.elementary_max; ++p) {
    if (!arith::is_prime(p)) continue;
    std::size_t pk = p;
    for (std::size_t k = 1; pk <= o.elementary_max; ++k, pk *= p)
      out.push_back(entry_from_spec({spec::ElementaryAbelian{p, k}}));
  }
  for (std::size_t n = 1; n <= o.dihedral_max; ++n) out.push_back(entry_from_spec({spec::Dihedral{n}}));
  for (std::size_t p = 2; p * p < o.pq_max; ++p) {
    if (!arith::is_prime(p)) continue;
    for (std::size_t q = p + 1; p * q <= o.pq_max; q += p)
      if (arith::is_prime(q)) out.push_back(entry_from_spec({spec::SemidirectPQ{p, q, 0}}));
  }
  if (o.symmetric_max > 0) {
    auto ambient = ambient_subgroup_entries(o.symmetric_max, limits);
    out.insert(out.end(), std::make_move_iterator(ambient.begin()), std::make_move_iterator(ambient.end()));
  }
  for (const auto& extra : o.extras) out.push_back(entry_from_spec(parse_group_spec(extra)));
  return out;
}

EntryResult check_entry(const CorpusEntry& entry, const Limits& limits) {
  EntryResult r;
  r.label = entry.label;
  try {
    const Group g = entry.make(limits);
    r.report = analyze(g, limits);
    r.report->label = entry.label;
    run_checks(r);
  } catch (const Error& e) {
    r.error = e.what();
    r.error_kind = e.kind();
  } catch (const std::logic_error& e) {
    r.error = e.what();
    r.internal_failure = true;
  }
  return r;
}

VerifySummary verify_corpus(const std::vector<CorpusEntry>& corpus, const Limits& limits,
                            std::size_t workers, bool p_groups_only) {
  std::vector<EntryResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) results[i] = check_entry(corpus[i], limits);
  };
  workers = std::max<std::size_t>(1, std::min(workers, corpus.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  VerifySummary s;
  for (auto& r : results) {
    if (p_groups_only && r.report && !is_prime_power(r.report->order)) {
      ++s.skipped;
      continue;
    }
    if (r.violated()) ++s.violations;
    else if (r.error) ++s.errors;
    s.entries.push_back(std::move(r));
  }
  return s;
}

VerifySummary verify_theorem1(const std::vector<GroupSpec>& corpus, const Limits& limits, std::size_t workers) {
  std::vector<CorpusEntry> entries;
  for (const auto& spec : corpus) entries.push_back(entry_from_spec(spec));
  return verify_corpus(entries, limits, workers);
}

std::string structure_name(const AnalysisReport& r) {
  switch (r.profile.recognized_as) {
    case Recognized::CyclicN: return "Z" + std::to_string(r.order);
    case Recognized::Z2xZ2: return "Z2xZ2";
    case Recognized::Z3xZ3: return "Z3xZ3";
    case Recognized::S3: return "S3";
    case Recognized::None: break;
  }
  return r.label;
}

namespace {

struct CheckCount {
  const char* name;
  bool EntryResult::*field;
};

constexpr CheckCount kChecks[] = {
    {"theorem1", &EntryResult::theorem1},
    {"extremal_nilpotent", &EntryResult::nilpotent_rule},
    {"extremal_p_groups", &EntryResult::p_group_rule},
    {"extremal_noncyclic", &EntryResult::noncyclic_rule},
    {"sigma1_le_2_cyclic", &EntryResult::sigma_le_2},
};

bool cyclic_hit(const AnalysisReport& r) { return r.profile.recognized_as == Recognized::CyclicN; }

}  // namespace

nlohmann::ordered_json to_json(const VerifySummary& s) {
  nlohmann::ordered_json j;
  std::size_t analyzed = 0;
  for (const auto& e : s.entries) analyzed += e.report ? 1 : 0;
  j["groups"] = s.entries.size();
  j["analyzed"] = analyzed;
  j["skipped"] = s.skipped;
  j["violations"] = s.violations;
  j["errors"] = s.errors;

  nlohmann::ordered_json checks;
  for (const auto& c : kChecks) {
    std::size_t pass = 0, fail = 0;
    for (const auto& e : s.entries) {
      if (!e.report) continue;
      (e.*(c.field) ? pass : fail) += 1;
    }
    checks[c.name] = {{"pass", pass}, {"fail", fail}};
  }
  j["checks"] = checks;

  auto hits = [&](Verdict v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
      if (!e.report || e.report->verdict != v) continue;
      nlohmann::ordered_json h;
      h["label"] = e.label;
      h["structure"] = structure_name(*e.report);
      h["sigma1"] = rational_json(e.report->sigma1);
      if (v == Verdict::AtThreshold && cyclic_hit(*e.report)) h["note"] = "cyclic witness from divisor-sum scan";
      arr.push_back(h);
    }
    return arr;
  };
  j["below_threshold"] = hits(Verdict::BelowThreshold);
  j["at_threshold"] = hits(Verdict::AtThreshold);

  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& e : s.entries) {
    if (!e.violated() && !e.error) continue;
    nlohmann::ordered_json f;
    f["label"] = e.label;
    if (e.error) f["error"] = *e.error;
    if (e.error_kind) f["error_kind"] = std::string(to_string(*e.error_kind));
    if (e.report) f["report"] = to_json(*e.report, false);
    failures.push_back(f);
  }
  j["failures"] = failures;
  return j;
}

std::string to_text(const VerifySummary& s) {
  std::ostringstream os;
  std::size_t analyzed = 0;
  for (const auto& e : s.entries) analyzed += e.report ? 1 : 0;
  os << "groups " << s.entries.size() << ", analyzed " << analyzed << ", skipped " << s.skipped << ", errors "
     << s.errors << ", violations " << s.violations << '\n';
  for (const auto& c : kChecks) {
    std::size_t pass = 0, fail = 0;
    for (const auto& e : s.entries) {
      if (!e.report) continue;
      (e.*(c.field) ? pass : fail) += 1;
    }
    os << "  " << c.name << ": " << pass << " pass, " << fail << " fail\n";
  }
  for (Verdict v : {Verdict::BelowThreshold, Verdict::AtThreshold}) {
    os << (v == Verdict::BelowThreshold ? "below threshold:\n" : "at threshold:\n");
    for (const auto& e : s.entries) {
      if (!e.report || e.report->verdict != v) continue;
      os << "  " << e.label << "  " << structure_name(*e.report) << "  sigma1=" << e.report->sigma1.str();
      if (v == Verdict::AtThreshold && cyclic_hit(*e.report)) os << "  (cyclic witness from divisor-sum scan)";
      os << '\n';
    }
  }
  for (const auto& e : s.entries) {
    if (e.violated()) {
      os << "VIOLATION " << e.label;
      if (e.error) os << ": " << *e.error;
      os << '\n';
      if (e.report) os << to_text(*e.report, false);
    } else if (e.error) {
      os << "ERROR " << e.label << ": " << *e.error << '\n';
    }
  }
  return os.str();
}

}  // namespace sigmalat

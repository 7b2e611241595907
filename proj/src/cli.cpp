#include "sigmalat/cli.hpp"

#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmalat/arith.hpp"
#include "sigmalat/corpus.hpp"
#include "sigmalat/families.hpp"
#include "sigmalat/group_spec.hpp"
#include "sigmalat/report.hpp"

namespace sigmalat::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidSpec:
      return kUsage;
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::LatticeTooLarge:
    case ErrorKind::LimitTooLarge:
    case ErrorKind::SearchCapExceeded:
      return kCapExceeded;
    case ErrorKind::InvalidTable:
    case ErrorKind::NotAPermutation:
      return kInvalidTable;
    case ErrorKind::Io:
      return kUsage;
    default:
      return kInfrastructure;
  }
}

namespace {

struct Common {
  bool json = false;
  Limits limits;
};

void add_limits(CLI::App* sub, Common& c) {
  sub->add_option("--max-order", c.limits.max_order, "Largest group order to build or enumerate")
      ->capture_default_str();
  sub->add_option("--max-subgroups", c.limits.max_subgroups, "Largest subgroup lattice to enumerate")
      ->capture_default_str();
}

int cmd_analyze(const std::string& input, const Common& c, std::ostream& out) {
  const Group g = build(parse_group_spec(input), c.limits);
  const AnalysisReport r = analyze(g, c.limits);
  if (c.json)
    out << to_json(r).dump(2) << '\n';
  else
    out << to_text(r);
  return kOk;
}

int cmd_dump_table(const std::string& input, const Common& c, std::ostream& out) {
  out << dump_table(build(parse_group_spec(input), c.limits));
  return kOk;
}

int cmd_verify(const CorpusOptions& options, std::size_t workers, const Common& c, std::ostream& out,
               std::ostream& err) {
  const bool empty = options.cyclic_max == 0 && options.elementary_max < 2 && options.dihedral_max == 0 &&
                     options.pq_max < 6 && options.symmetric_max == 0 && options.extras.empty();
  if (empty) {
    err << "verify: empty corpus\n";
    return kUsage;
  }
  const auto corpus = build_corpus(options, c.limits);
  const VerifySummary s = verify_corpus(corpus, c.limits, workers, options.p_groups_only);
  for (const auto& e : s.entries)
    if (e.error) err << e.label << ": " << *e.error << '\n';
  if (c.json)
    out << to_json(s).dump(2) << '\n';
  else
    out << to_text(s);
  if (s.violations) return kViolation;
  if (s.errors) return kInfrastructure;
  return kOk;
}

int cmd_sigma_scan(std::size_t limit, const Common& c, std::ostream& out) {
  const auto sieve = arith::build_sieve(limit);
  const auto scan = arith::scan_threshold(sieve);
  if (c.json) {
    nlohmann::ordered_json j;
    j["limit"] = scan.limit;
    j["below"] = scan.below;
    j["equal"] = scan.equal;
    j["above"] = scan.above;
    out << j.dump(2) << '\n';
  } else {
    out << "n <= " << scan.limit << " with sigma(n) = 2n + 4:";
    if (scan.equal.empty()) out << " none";
    for (auto n : scan.equal) out << ' ' << n;
    out << "\nbelow " << scan.below << ", equal " << scan.equal.size() << ", above " << scan.above << '\n';
  }
  return kOk;
}

int cmd_sequence(std::size_t count, std::optional<std::uint64_t> search_cap, const Common& c, std::ostream& out) {
  const auto report = families::convergence_report(count, c.limits, search_cap);
  if (c.json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
      nlohmann::ordered_json j;
      j["n"] = r.index;
      j["p"] = r.p;
      j["q"] = r.q;
      j["sigma1"] = rational_json(r.sigma1);
      j["sigma1_decimal"] = r.sigma1.decimal(12);
      j["excess"] = rational_json(r.excess);
      j["enumerated"] = r.enumerated;
      rows.push_back(j);
    }
    nlohmann::ordered_json j;
    j["rows"] = rows;
    j["observed_monotone"] = report.observed_monotone;
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(6) << "n" << std::setw(8) << "p" << std::setw(10) << "q" << std::setw(22)
        << "sigma1" << std::setw(18) << "decimal" << std::setw(20) << "sigma1-2"
        << "enumerated\n";
    for (const auto& r : report.rows) {
      out << std::setw(6) << r.index << std::setw(8) << r.p << std::setw(10) << r.q << std::setw(22) << r.sigma1.str()
          << std::setw(18) << r.sigma1.decimal(12) << std::setw(20) << r.excess.str()
          << (r.enumerated ? "yes" : "no") << '\n';
    }
    out << "observed strictly decreasing: " << (report.observed_monotone ? "yes" : "no") << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subgroup-order sums over finite group lattices"};
  app.name("sigmalat");
  app.require_subcommand(1);

  Common common;
  std::string input;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  CorpusOptions corpus;
  std::size_t limit = 0;
  std::size_t count = 0;
  std::optional<std::uint64_t> search_cap;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one group");
  analyze_cmd->add_option("input", input, "Group spec (cyclic:12, elem:3,2, dihedral:4, sym:4, pq:3,7, "
                                          "product:cyclic:4+cyclic:9) or a table/permutation file")
      ->required();
  analyze_cmd->add_flag("--json", common.json, "Machine-readable output");
  add_limits(analyze_cmd, common);

  auto* dump_cmd = app.add_subcommand("dump-table", "Print a group's Cayley table in the raw table format");
  dump_cmd->add_option("input", input, "Group spec or file")->required();
  add_limits(dump_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Check the threshold classification over a corpus");
  verify_cmd->add_option("--cyclic", corpus.cyclic_max, "Cyclic groups of order <= N (0 disables)")
      ->capture_default_str();
  verify_cmd->add_option("--elementary", corpus.elementary_max, "Elementary abelian groups of order <= N")
      ->capture_default_str();
  verify_cmd->add_option("--dihedral", corpus.dihedral_max, "Dihedral groups D_n for n <= N")->capture_default_str();
  verify_cmd->add_option("--pq", corpus.pq_max, "Nonabelian pq groups with pq <= N")->capture_default_str();
  verify_cmd->add_option("--symmetric", corpus.symmetric_max, "All subgroups of S_m for m <= M")
      ->capture_default_str();
  verify_cmd->add_option("--extra", corpus.extras, "Additional group spec or file (repeatable)");
  verify_cmd->add_flag("--p-groups-only", corpus.p_groups_only, "Only report groups of prime-power order");
  verify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", common.json, "Machine-readable output");
  add_limits(verify_cmd, common);

  auto* scan_cmd = app.add_subcommand("sigma-scan", "List n <= limit with sigma(n) = 2n + 4");
  scan_cmd->add_option("limit", limit, "Upper bound")->required()->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--json", common.json, "Machine-readable output");

  auto* seq_cmd = app.add_subcommand("sequence", "Non-nilpotent pq groups with sigma1 approaching 2");
  seq_cmd->add_option("count", count, "Number of rows")->required()->check(CLI::PositiveNumber);
  seq_cmd->add_option("--search-cap", search_cap, "Largest q to try for each p");
  seq_cmd->add_flag("--json", common.json, "Machine-readable output");
  add_limits(seq_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string label;
  try {
    if (analyze_cmd->parsed()) {
      label = input;
      return cmd_analyze(input, common, out);
    }
    if (dump_cmd->parsed()) {
      label = input;
      return cmd_dump_table(input, common, out);
    }
    if (verify_cmd->parsed()) {
      label = "verify";
      return cmd_verify(corpus, workers, common, out, err);
    }
    if (scan_cmd->parsed()) {
      label = "sigma-scan";
      return cmd_sigma_scan(limit, common, out);
    }
    if (seq_cmd->parsed()) {
      label = "sequence";
      return cmd_sequence(count, search_cap, common, out);
    }
  } catch (const Error& e) {
    err << label << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << label << ": internal error: " << e.what() << '\n';
    return kInfrastructure;
  }
  return kUsage;
}

}  // namespace sigmalat::cli

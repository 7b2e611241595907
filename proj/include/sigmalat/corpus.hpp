#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmalat/group_spec.hpp"
#include "sigmalat/report.hpp"

namespace sigmalat {

struct CorpusEntry {
  std::string label;
  std::function<Group(const Limits&)> make;
};

struct CorpusOptions {
  std::size_t cyclic_max = 200;       // cyclic:n for 1 <= n <= cyclic_max
  std::size_t elementary_max = 256;   // elem:p,k for p^k <= elementary_max
  std::size_t dihedral_max = 30;      // dihedral:n for 1 <= n <= dihedral_max
  std::size_t pq_max = 500;           // nonabelian pq groups with pq <= pq_max
  std::size_t symmetric_max = 5;      // subgroups of sym:m for m <= symmetric_max
  std::vector<std::string> extras;    // spec strings or file paths
  bool p_groups_only = false;
};

CorpusEntry entry_from_spec(const GroupSpec& spec);

/// Distinct subgroups of sym:1..sym:max_degree as standalone groups, deduplicated
/// by (order, abelian, element-order multiset, subgroup-order census).
std::vector<CorpusEntry> ambient_subgroup_entries(std::size_t max_degree, const Limits& limits = {});

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options, const Limits& limits = {});

/// Per-group outcome of the theorem checks.
struct EntryResult {
  std::string label;
  std::optional<AnalysisReport> report;
  std::optional<std::string> error;  // build/enumeration failure
  std::optional<ErrorKind> error_kind;
  bool internal_failure = false;  // an internal cross-check threw

  // Each is true when the group is consistent with the statement.
  bool theorem1 = true;        // (verdict, structure) allowed
  bool nilpotent_rule = true;  // below => nilpotent; at => nilpotent or S3
  bool p_group_rule = true;    // non-cyclic p-group: below => Z2xZ2, at => Z3xZ3
  bool noncyclic_rule = true;  // non-cyclic below => Z2xZ2; nonabelian at => S3
  bool sigma_le_2 = true;      // sigma1 <= 2 => cyclic

  bool violated() const {
    return internal_failure || !theorem1 || !nilpotent_rule || !p_group_rule || !noncyclic_rule ||
           !sigma_le_2;
  }
};

struct VerifySummary {
  std::vector<EntryResult> entries;  // corpus order, independent of scheduling
  std::size_t violations = 0;
  std::size_t errors = 0;
  std::size_t skipped = 0;  // filtered out by p_groups_only
};

EntryResult check_entry(const CorpusEntry& entry, const Limits& limits);

VerifySummary verify_corpus(const std::vector<CorpusEntry>& corpus, const Limits& limits,
                            std::size_t workers, bool p_groups_only = false);
VerifySummary verify_theorem1(const std::vector<GroupSpec>& corpus, const Limits& limits = {},
                              std::size_t workers = 1);

// "Z12", "Z2xZ2", "Z3xZ3", "S3", or the label for anything else.
std::string structure_name(const AnalysisReport& r);

nlohmann::ordered_json to_json(const VerifySummary& s);
std::string to_text(const VerifySummary& s);

}  // namespace sigmalat

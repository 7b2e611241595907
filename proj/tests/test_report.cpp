#include <doctest.h>

#include "sigmalat/corpus.hpp"
#include "sigmalat/group_spec.hpp"
#include "sigmalat/report.hpp"

using namespace sigmalat;

TEST_CASE("analysis report fields") {
  const AnalysisReport r = analyze(build(parse_group_spec("pq:2,3")));
  CHECK(r.label == "pq:2,3,2");
  CHECK(r.order == 6);
  CHECK(r.subgroup_count == 6);
  CHECK(r.sigma1.str() == "8/3");
  CHECK(r.threshold.str() == "8/3");
  CHECK(r.verdict == Verdict::AtThreshold);
  CHECK(r.structure == Structure::S3);
  CHECK(r.theorem1_consistent);
  CHECK_FALSE(r.profile.is_nilpotent);
}

TEST_CASE("JSON schema") {
  const auto j = to_json(analyze(cyclic(12)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"label", "order", "subgroup_count", "census", "sigma1", "sigma1_decimal",
                                         "threshold", "verdict", "structure", "flags", "theorem1_consistent",
                                         "timing_ms"});
  CHECK(j["sigma1"]["num"] == "7");
  CHECK(j["sigma1"]["den"] == "3");
  CHECK(j["sigma1"]["num"].is_string());
  CHECK(j["sigma1_decimal"] == "2.333333333333");
  CHECK(j["threshold"]["num"] == "7");
  CHECK(j["verdict"] == "AtThreshold");
  CHECK(j["structure"] == "Cyclic");
  CHECK(j["flags"]["cyclic"] == true);
  CHECK(j["flags"]["prime"].is_null());
  CHECK(j["flags"]["recognized_as"] == "CyclicN");

  std::vector<std::string> census_keys;
  std::size_t total = 0;
  for (const auto& [k, v] : j["census"].items()) {
    census_keys.push_back(k);
    total += v.get<std::size_t>();
  }
  CHECK(census_keys == std::vector<std::string>{"1", "2", "3", "4", "6", "12"});
  CHECK(total == j["subgroup_count"].get<std::size_t>());

  CHECK_FALSE(to_json(analyze(cyclic(12)), false).contains("timing_ms"));
}

TEST_CASE("JSON for a p-group") {
  const auto j = to_json(analyze(dihedral(4)), false);
  CHECK(j["flags"]["p_group"] == true);
  CHECK(j["flags"]["prime"] == 2);
  CHECK(j["flags"]["frattini_rank"] == 2);
  CHECK(j["verdict"] == "AboveThreshold");
  CHECK(j["sigma1"]["num"] == "31");
}

TEST_CASE("text report") {
  const std::string t = to_text(analyze(semidirect_pq(2, 3)), false);
  CHECK(t.find("8/3  (~2.666666666667)") != std::string::npos);
  CHECK(t.find("AtThreshold") != std::string::npos);
  CHECK(t.find("consistent") != std::string::npos);
  CHECK(t.find("time") == std::string::npos);
}

TEST_CASE("census sums to subgroup count across groups") {
  for (const char* s : {"sym:4", "elem:2,4", "dihedral:12", "product:cyclic:3+sym:3"}) {
    const AnalysisReport r = analyze(build(parse_group_spec(s)));
    std::size_t total = 0;
    for (const auto& [order, count] : r.census) total += count;
    CHECK(total == r.subgroup_count);
  }
}

TEST_CASE("ambient subgroup entries are distinct isomorphism types") {
  CHECK(ambient_subgroup_entries(3).size() == 4);
  CHECK(ambient_subgroup_entries(4).size() == 9);
  CHECK(ambient_subgroup_entries(5).size() == 16);
}

TEST_CASE("corpus sizes") {
  CorpusOptions o;
  o.cyclic_max = 10;
  o.elementary_max = 8;
  o.dihedral_max = 3;
  o.pq_max = 21;
  o.symmetric_max = 3;
  o.extras = {"product:cyclic:2+cyclic:2"};
  // 10 cyclic, elem 2,1 2,2 2,3 3,1 5,1 7,1, 3 dihedral, pq 2,3 2,5 2,7 3,7, 4 from S3, 1 extra
  const auto corpus = build_corpus(o);
  CHECK(corpus.size() == 10 + 6 + 3 + 4 + 4 + 1);
}

TEST_CASE("verification is deterministic across worker counts") {
  CorpusOptions o;
  o.cyclic_max = 60;
  o.elementary_max = 32;
  o.dihedral_max = 12;
  o.pq_max = 100;
  o.symmetric_max = 4;
  const auto corpus = build_corpus(o);
  const auto one = to_json(verify_corpus(corpus, {}, 1)).dump();
  const auto three = to_json(verify_corpus(corpus, {}, 3)).dump();
  CHECK(one == three);
  const auto s = verify_corpus(corpus, {}, 2);
  CHECK(s.violations == 0);
  CHECK(s.errors == 0);
}

TEST_CASE("p-groups-only filter") {
  CorpusOptions o;
  o.cyclic_max = 12;
  o.elementary_max = 9;
  o.dihedral_max = 4;
  o.pq_max = 6;
  o.symmetric_max = 1;
  const auto s = verify_corpus(build_corpus(o), {}, 1, true);
  for (const auto& e : s.entries)
    if (e.report) CHECK(e.report->profile.is_p_group);
  CHECK(s.skipped > 0);
}

TEST_CASE("errors are recorded, not thrown") {
  Limits tight;
  tight.max_order = 10;
  const auto s = verify_corpus({entry_from_spec(parse_group_spec("cyclic:20"))}, tight, 1);
  CHECK(s.errors == 1);
  REQUIRE(s.entries[0].error_kind);
  CHECK(*s.entries[0].error_kind == ErrorKind::OrderCapExceeded);
  CHECK(to_json(s)["failures"].size() == 1);
}

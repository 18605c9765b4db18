#include <doctest.h>

#include "golomb/verify.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

std::vector<std::string> specs(const std::vector<FiniteModule>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.spec());
  return out;
}

const TheoremCase& find_case(const CampaignReport& r, const std::string& module, const std::string& id) {
  for (const auto& mr : r.modules) {
    if (mr.module != module) continue;
    for (const auto& c : mr.cases) {
      if (c.id == id) return c;
    }
  }
  FAIL("missing case " << module << " " << id);
  throw;
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  for (TheoremId id : kAllTheorems) CHECK(parse_theorem(theorem_name(id)) == id);
  CHECK_FALSE(parse_theorem("NOPE").has_value());
  CHECK(theorem_name(TheoremId::TsepEquiv) == "TSEP_EQUIV");
}

TEST_CASE("isomorphism classes") {
  auto of_order = [](std::size_t n) {
    std::vector<FiniteModule> out;
    for (const auto& m : isomorphism_classes(n))
      if (m.order() == n) out.push_back(m);
    return out;
  };
  CHECK(specs(of_order(8)) == std::vector<std::string>{"8", "2x4", "2x2x2"});
  CHECK(specs(of_order(6)) == std::vector<std::string>{"6"});
  CHECK(specs(isomorphism_classes(2)) == std::vector<std::string>{"2"});
  CHECK(specs(of_order(36)) == std::vector<std::string>{"36", "3x12", "2x18", "6x6"});
  const auto all = isomorphism_classes(64);
  long expected = 0;
  for (std::int64_t n = 2; n <= 64; ++n) expected += oracle::abelian_group_count(n);
  CHECK(static_cast<long>(all.size()) == expected);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
}

TEST_CASE("campaign to order 8") {
  CampaignOptions fcc;
  fcc.theorems = {TheoremId::FiniteCoprimeEquiv};
  const auto r = run_campaign(8, fcc);
  CHECK(r.modules.size() == 10);
  CHECK(r.summary.pass == 10);
  CHECK(r.summary.total() == 10);

  const auto all = run_campaign(8);
  CHECK(all.summary.fail == 0);
  for (const char* m : {"2", "3", "5", "7", "4", "8"})
    CHECK(find_case(all, m, "INDISCRETE_IFF_SIMPLE").verdict == Verdict::Pass);
  for (const char* m : {"2x2", "6", "2x4", "2x2x2"})
    CHECK(find_case(all, m, "INDISCRETE_IFF_SIMPLE").verdict == Verdict::Vacuous);
  CHECK(find_case(all, "6", "CRT_MU").verdict == Verdict::Pass);
  CHECK(find_case(all, "8", "NOT_T1").verdict == Verdict::Pass);
  CHECK(find_case(all, "2", "NOT_T1").verdict == Verdict::Vacuous);
  CHECK(find_case(all, "2x2", "BASIS_FG").verdict == Verdict::Vacuous);
}

TEST_CASE("campaign to order 64: verdict invariants") {
  CampaignOptions opts;
  opts.jobs = 4;
  const auto r = run_campaign(64, opts);
  CHECK(r.summary.fail == 0);
  std::size_t pass = 0, vacuous = 0;
  for (const auto& mr : r.modules) {
    CHECK(mr.cases.size() == kAllTheorems.size());
    for (const auto& c : mr.cases) {
      CHECK((c.verdict == Verdict::Vacuous) == !c.hypotheses_held);
      if (c.id == "TSEP_EQUIV") CHECK(c.verdict == Verdict::Vacuous);
      pass += c.verdict == Verdict::Pass;
      vacuous += c.verdict == Verdict::Vacuous;
    }
  }
  CHECK(r.summary.pass == pass);
  CHECK(r.summary.vacuous == vacuous);
  CHECK(tally(r.modules).total() == r.summary.total());
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  CampaignOptions one;
  CampaignOptions many;
  many.jobs = 8;
  const Json a = report_json(run_campaign(24, one));
  const Json b = report_json(run_campaign(24, many));
  CHECK(a.dump() == b.dump());
  CHECK_FALSE(a.contains("duration_ms"));
  CHECK(report_json(run_campaign(4, one), true).contains("duration_ms"));
  CHECK(a["schema_version"] == 1);
}

TEST_CASE("campaign bounds") {
  CHECK_THROWS_WITH_AS(run_campaign(1), doctest::Contains("InvalidArgument"), Error);
  CHECK_THROWS_WITH_AS(run_campaign(1000), doctest::Contains("SizeCap"), Error);
  CampaignOptions small;
  small.max_order_bound = 10;
  CHECK_THROWS_WITH_AS(run_campaign(12, small), doctest::Contains("SizeCap"), Error);
}

TEST_CASE("converse mining records data, never FAIL, and its counterexamples revalidate") {
  CampaignOptions opts;
  opts.converse_mining = true;
  const auto r = run_campaign(16, opts);
  CHECK(r.summary.fail == 0);
  std::size_t refuted = 0;
  for (const auto& mr : r.modules) {
    const FiniteModule m = parse_module_spec(mr.module);
    for (const auto& c : mr.cases) {
      if (c.hypotheses_held) {
        CHECK_FALSE(c.converse_conclusion.has_value());
        continue;
      }
      REQUIRE(c.converse_conclusion.has_value());
      CHECK(c.verdict == Verdict::Vacuous);
      if (*c.converse_conclusion) continue;
      ++refuted;
      CHECK_MESSAGE(revalidate_counterexample(m, *parse_theorem(c.id), c.evidence), mr.module << " " << c.id);
    }
  }
  CHECK(refuted > 0);

  const auto& basis = find_case(r, "2x2", "BASIS_FG");
  REQUIRE(basis.converse_conclusion.has_value());
  CHECK_FALSE(*basis.converse_conclusion);
  CHECK(basis.evidence["point"] == "(1,1)");
}

TEST_CASE("revalidation rejects doctored evidence") {
  const FiniteModule v = make_module({2, 2});
  ModuleReport mr = evaluate_module(v, std::vector<TheoremId>{TheoremId::BasisFg}, true);
  Json e = mr.cases.front().evidence;
  CHECK(revalidate_counterexample(v, TheoremId::BasisFg, e));
  e["point"] = "(0,0)";
  CHECK_FALSE(revalidate_counterexample(v, TheoremId::BasisFg, e));
  CHECK_FALSE(revalidate_counterexample(v, TheoremId::BasisFg, Json::object()));

  const FiniteModule z8 = make_module({8});
  CHECK_FALSE(revalidate_counterexample(z8, TheoremId::ZeroClosureEqJm, Json{{"closure", Json::array()}}));
  CHECK_FALSE(revalidate_counterexample(z8, TheoremId::NotT1, Json{{"t1", false}, {"point", "(2)"}}));
  CHECK_FALSE(revalidate_counterexample(
      z8, TheoremId::CosetIntersectMu,
      Json{{"n", {"(0)", "(2)", "(4)", "(6)"}}, {"k", {"(0)", "(4)"}}, {"x", "(0)"}, {"y", "(1)"}}));
  CHECK_FALSE(revalidate_counterexample(z8, TheoremId::BasisFg, Json{{"point", "garbage"}}));
}

TEST_CASE("worked example scenarios") {
  const auto r = verify_paper_examples();
  REQUIRE(r.modules.size() == 6);
  auto verdict = [&](const std::string& id) {
    for (const auto& mr : r.modules)
      if (mr.cases.front().id == id) return mr.cases.front().verdict;
    FAIL("missing " << id);
    throw;
  };
  CHECK(verdict("EXAMPLE1_PRIME_NOT_STRONGLY_IRREDUCIBLE") == Verdict::Pass);
  CHECK(verdict("EXAMPLE2_COPRIME_FAILURE") == Verdict::Pass);
  CHECK(verdict("EXAMPLE4_BASIS_FAILURE") == Verdict::Pass);
  CHECK(verdict("Z8_GOLDENS") == Verdict::Pass);
  CHECK(verdict("REMARK_Z8_NOT_TOPOLOGICAL_MODULE") == Verdict::Pass);
  // the printed listing has 15 pairs; the preimage has 16
  CHECK(verdict("REMARK_Z8_PREIMAGE_LISTING") == Verdict::Fail);
  const Json& listing = r.modules.back().cases.front().evidence;
  CHECK(listing["computed"].size() == 16);
  CHECK(listing["listed"].size() == 15);
  CHECK(listing["missing_from_listing"] == Json::array({Json::array({"(5)", "(4)"})}));
  CHECK(listing["not_in_preimage"].empty());
  CHECK(r.summary.fail == 1);
}

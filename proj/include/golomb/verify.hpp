#pragma once

// Theorem-verification campaigns over finite abelian groups.
//
// Each theorem is tested as an implication: hypotheses and conclusion are
// evaluated separately, and a module outside the hypothesis class is VACUOUS,
// never PASS. A FAIL carries a counterexample that revalidate_counterexample()
// re-checks from the JSON alone.

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "golomb/finmod.hpp"
#include "golomb/serialize.hpp"

namespace golomb {

enum class TheoremId {
  FiniteCoprimeEquiv,
  BasisFg,
  BasisMult,
  IndiscreteIffSimple,
  IndiscretePointsEqJ,
  NotT1,
  ClosureEqJacobson,
  ZeroClosureEqJm,
  CrtMu,
  CosetIntersectMu,
  TsepEquiv,
};

inline constexpr std::array kAllTheorems = {
    TheoremId::FiniteCoprimeEquiv, TheoremId::BasisFg,          TheoremId::BasisMult,
    TheoremId::IndiscreteIffSimple, TheoremId::IndiscretePointsEqJ, TheoremId::NotT1,
    TheoremId::ClosureEqJacobson,  TheoremId::ZeroClosureEqJm,  TheoremId::CrtMu,
    TheoremId::CosetIntersectMu,   TheoremId::TsepEquiv,
};

/// Report id, e.g. "FINITE_COPRIME_EQUIV".
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

enum class Verdict { Pass, Fail, Vacuous };
std::string_view verdict_name(Verdict v);

struct TheoremCase {
  std::string id;
  bool hypotheses_held = false;
  Verdict verdict = Verdict::Vacuous;
  /// Counterexample on FAIL (and for a failed converse); empty otherwise.
  Json evidence = Json::object();
  /// Converse mining: whether the conclusion held although the hypotheses did not.
  std::optional<bool> converse_conclusion;
};

struct ModuleReport {
  std::string module;
  Json profile = Json::object();
  std::vector<TheoremCase> cases;
};

struct CampaignSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
  std::size_t total() const { return pass + fail + vacuous; }
};

struct CampaignReport {
  std::string family;
  std::vector<ModuleReport> modules;
  CampaignSummary summary;
  std::chrono::milliseconds duration{0};

  bool any_fail() const { return summary.fail > 0; }
};

struct CampaignOptions {
  /// Empty means every theorem.
  std::vector<TheoremId> theorems;
  unsigned jobs = 1;
  bool converse_mining = false;
  std::size_t max_order_bound = default_max_order();
};

/// One module per isomorphism class of each order 2..max_order, by order then
/// by prime-power partitions in decreasing lexicographic order.
std::vector<FiniteModule> isomorphism_classes(std::size_t max_order);

ModuleReport evaluate_module(const FiniteModule& m, std::span<const TheoremId> theorems,
                             bool converse_mining = false);

/// Errors: SizeCap (max_order above the bound), InvalidArgument (max_order < 2).
CampaignReport run_campaign(std::size_t max_order, const CampaignOptions& options = {});

/// The hard-coded worked examples on Z ⊕ Z and Z8.
CampaignReport verify_paper_examples();

/// Re-checks a recorded counterexample against the originating checker.
bool revalidate_counterexample(const FiniteModule& m, TheoremId id, const Json& evidence);

/// Deterministic for identical inputs; the duration is only written when asked.
Json report_json(const CampaignReport& report, bool include_timing = false);

/// Recomputes the summary counts from the case lists.
CampaignSummary tally(const std::vector<ModuleReport>& modules);

}  // namespace golomb

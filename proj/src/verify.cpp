#include "golomb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "golomb/modpred.hpp"
#include "golomb/topology.hpp"
#include "golomb/zlattice.hpp"

namespace golomb {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, kAllTheorems.size()> kNames = {{
    {TheoremId::FiniteCoprimeEquiv, "FINITE_COPRIME_EQUIV"},
    {TheoremId::BasisFg, "BASIS_FG"},
    {TheoremId::BasisMult, "BASIS_MULT"},
    {TheoremId::IndiscreteIffSimple, "INDISCRETE_IFF_SIMPLE"},
    {TheoremId::IndiscretePointsEqJ, "INDISCRETE_POINTS_EQ_J"},
    {TheoremId::NotT1, "NOT_T1"},
    {TheoremId::ClosureEqJacobson, "CLOSURE_EQ_JACOBSON"},
    {TheoremId::ZeroClosureEqJm, "ZERO_CLOSURE_EQ_JM"},
    {TheoremId::CrtMu, "CRT_MU"},
    {TheoremId::CosetIntersectMu, "COSET_INTERSECT_MU"},
    {TheoremId::TsepEquiv, "TSEP_EQUIV"},
}};

// Points of G(M) are the nonzero elements; local index i is element i + 1.
PointSet drop_zero(const PointSet& s) {
  PointSet out(s.universe() - 1);
  s.for_each([&](Elem x) {
    if (x != 0) out.set(x - 1);
  });
  return out;
}

PointSet without_zero(PointSet s) {
  s.reset(0);
  return s;
}

PointSet single(std::size_t universe, std::size_t x) {
  PointSet s(universe);
  s.set(x);
  return s;
}

class Context {
 public:
  explicit Context(const FiniteModule& m) : m_(m), profile_(predicate_profile(m)) {}

  const FiniteModule& module() const { return m_; }
  const PredicateProfile& profile() const { return profile_; }

  bool h_fg() const { return profile_.meet_irreducible && profile_.all_maximal_strongly_irreducible.holds(); }
  bool h_fcc() const { return profile_.meet_irreducible && profile_.finite_coprime_condition.holds(); }
  bool h_mult() const { return profile_.multiplication.holds() && profile_.meet_irreducible; }
  bool mu() const { return profile_.mu_module.holds(); }
  bool simple() const { return profile_.simple; }
  const PointSet& jacobson_m() const { return profile_.jacobson_radical.members(); }

  const CoprimeBasis& basis() {
    if (!basis_) basis_ = coprime_basis(m_);
    return *basis_;
  }
  const BasisSpace& full() {
    if (!full_) full_ = golomb_space(basis());
    return *full_;
  }
  const BasisSpace& punct() {
    if (!punct_) punct_ = punctured(full());
    return *punct_;
  }

 private:
  FiniteModule m_;
  PredicateProfile profile_;
  std::optional<CoprimeBasis> basis_;
  std::optional<BasisSpace> full_;
  std::optional<BasisSpace> punct_;
};

struct Conclusion {
  bool holds = true;
  Json evidence = Json::object();
};

Conclusion fails(Json evidence) { return {false, std::move(evidence)}; }

Json subs(const FiniteModule& m, const PointSet& s) { return elements_json(m, s); }

Json punct_json(const FiniteModule& m, const PointSet& local) {
  Json out = Json::array();
  local.for_each([&](std::size_t i) { out.push_back(m.format(i + 1)); });
  return out;
}

Json pair_witness_json(const PairWitness& w) { return Json::array({submodule_json(w.first), submodule_json(w.second)}); }

bool hypotheses(TheoremId id, const Context& c) {
  switch (id) {
    case TheoremId::FiniteCoprimeEquiv:
      return true;
    case TheoremId::BasisFg:
      return c.h_fg();
    case TheoremId::BasisMult:
      return c.h_mult();
    case TheoremId::IndiscreteIffSimple:
      return c.h_fg() || c.h_mult();
    case TheoremId::IndiscretePointsEqJ:
    case TheoremId::NotT1:
    case TheoremId::ZeroClosureEqJm:
      return (c.h_fcc() || c.h_mult()) && !c.simple();
    case TheoremId::ClosureEqJacobson:
      return (c.h_fcc() || c.h_mult()) && c.mu() && !c.simple();
    case TheoremId::CrtMu:
    case TheoremId::CosetIntersectMu:
      return c.mu();
    case TheoremId::TsepEquiv:
      return c.profile().multiplication.holds() && c.profile().ann_prime && !c.simple();
  }
  return false;
}

Conclusion finite_coprime_equiv(Context& c) {
  const auto& p = c.profile();
  const bool fcc = p.finite_coprime_condition.holds();
  const bool smax = p.all_maximal_strongly_irreducible.holds();
  if (fcc == smax) return {};
  Json e{{"finite_coprime_condition", fcc}, {"all_maximal_strongly_irreducible", smax}};
  if (!fcc) {
    const auto& w = *p.finite_coprime_condition.counterexample;
    e["witness"] = Json::array({submodule_json(w.n), submodule_json(w.k1), submodule_json(w.k2)});
  } else {
    const auto& w = *p.all_maximal_strongly_irreducible.counterexample;
    e["witness"] = Json{{"maximal", submodule_json(w.maximal)}, {"pair", pair_witness_json(w.pair)}};
  }
  return fails(std::move(e));
}

Conclusion basis_axioms(Context& c) {
  const auto r = check_basis_axioms(c.basis());
  if (r.holds()) return {};
  const auto& w = *r.counterexample;
  Json e{{"point", c.module().format(w.point)}};
  if (!w.first) {
    e["uncovered"] = true;
  } else {
    e["first"] = coset_json(*w.first);
    e["second"] = coset_json(*w.second);
  }
  return fails(std::move(e));
}

Conclusion indiscrete_iff_simple(Context& c) {
  const bool full = is_indiscrete(c.full());
  const bool punct = is_indiscrete(c.punct());
  if (full == c.simple() && punct == c.simple()) return {};
  return fails({{"simple", c.simple()}, {"full_indiscrete", full}, {"punctured_indiscrete", punct}});
}

Conclusion indiscrete_points_eq_j(Context& c) {
  const auto& m = c.module();
  const PointSet full = indiscrete_points(c.full());
  if (!(full == c.jacobson_m())) {
    return fails({{"space", "full"}, {"indiscrete", subs(m, full)}, {"expected", subs(m, c.jacobson_m())}});
  }
  const PointSet punct = indiscrete_points(c.punct());
  const PointSet expected = drop_zero(c.jacobson_m());
  if (!(punct == expected)) {
    return fails({{"space", "punctured"}, {"indiscrete", punct_json(m, punct)}, {"expected", punct_json(m, expected)}});
  }
  return {};
}

Conclusion not_t1(Context& c) {
  const auto& m = c.module();
  if (separation(c.full()).t1) return fails({{"t1", true}});
  for (Elem x = 1; x < m.order(); ++x) {
    if (!closure(c.full(), single(m.order(), x)).test(0)) return fails({{"t1", false}, {"point", m.format(x)}});
  }
  return {};
}

Conclusion closure_eq_jacobson(Context& c) {
  const auto& m = c.module();
  for (const auto& s : m.submodule_sets()) {
    const Submodule n(m, s);
    const PointSet j = jacobson(n, m).members();
    auto evidence = [&](const char* part, std::optional<Elem> x) {
      return Json{{"part", part},
                  {"submodule", subs(m, s)},
                  {"element", x ? Json(m.format(*x)) : Json(nullptr)},
                  {"jacobson", subs(m, j)}};
    };
    if (!(closure(c.full(), s) == j)) return fails(evidence("ii", std::nullopt));
    const PointSet j_punct = drop_zero(j);
    for (Elem x = 0; x < m.order(); ++x) {
      const PointSet coset = translate(m, s, x);
      if (!j.is_subset_of(closure(c.full(), coset))) return fails(evidence("i", x));
      if (s.test(x)) continue;
      if (!j_punct.is_subset_of(closure(c.punct(), drop_zero(coset)))) return fails(evidence("iii", x));
    }
  }
  return {};
}

Conclusion zero_closure_eq_jm(Context& c) {
  const auto& m = c.module();
  const PointSet cl = closure(c.full(), single(m.order(), 0));
  if (cl == c.jacobson_m()) return {};
  return fails({{"closure", subs(m, cl)}, {"jacobson", subs(m, c.jacobson_m())}});
}

// Ordered pairs (N, K) of submodules with N + K = M, by lattice index.
template <typename F>
std::optional<Conclusion> for_comaximal(const FiniteModule& m, F&& f) {
  const auto& lattice = m.submodule_sets();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (!is_comaximal(lattice[i], lattice[j], m.order())) continue;
      if (auto r = f(i, j, Submodule(m, lattice[i]), Submodule(m, lattice[j]))) return r;
    }
  }
  return std::nullopt;
}

// Least member of each coset of s.
std::vector<Elem> coset_reps(const FiniteModule& m, const PointSet& s) {
  std::vector<Elem> reps;
  PointSet seen = m.empty_set();
  for (Elem x = 0; x < m.order(); ++x) {
    if (seen.test(x)) continue;
    reps.push_back(x);
    seen = seen | translate(m, s, x);
  }
  return reps;
}

Conclusion crt_mu(Context& c) {
  const auto& m = c.module();
  const auto& lattice = m.submodule_sets();
  std::unordered_map<PointSet, std::size_t, PointSetHash> position;
  for (std::size_t i = 0; i < lattice.size(); ++i) position.emplace(lattice[i], i);
  std::vector<std::optional<Quotient>> quotients(lattice.size());
  auto quotient_at = [&](std::size_t i) -> const Quotient& {
    if (!quotients[i]) quotients[i] = quotient(m, Submodule(m, lattice[i]));
    return *quotients[i];
  };
  auto r = for_comaximal(m, [&](std::size_t i, std::size_t j, const Submodule& n,
                                const Submodule& k) -> std::optional<Conclusion> {
    auto evidence = [&](const char* aspect) {
      return Json{{"aspect", aspect}, {"n", submodule_json(n)}, {"k", submodule_json(k)}};
    };
    const Submodule meet = intersect(n, k);
    const Quotient& qn = quotient_at(i);
    const Quotient& qk = quotient_at(j);
    const Quotient& qmeet = quotient_at(position.at(meet.members()));
    if (qmeet.module.order() != qn.module.order() * qk.module.order()) return fails(evidence("order"));
    // π : M → M/N × M/K
    const std::size_t width = qk.module.order();
    PointSet kernel = m.empty_set();
    std::vector<bool> hit(qn.module.order() * width, false);
    for (Elem x = 0; x < m.order(); ++x) {
      const std::size_t img = qn.project(x) * width + qk.project(x);
      hit[img] = true;
      if (img == 0) kernel.set(x);
    }
    if (!(kernel == meet.members())) return fails(evidence("kernel"));
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return fails(evidence("image"));
    // solvability depends only on the cosets x + N and y + K
    const auto xs = coset_reps(m, n.members());
    const auto ys = coset_reps(m, k.members());
    for (Elem x : xs) {
      for (Elem y : ys) {
        bool ok = false;
        try {
          const Elem z = crt_solve(x, y, n, k).z;
          ok = n.contains(m.sub(z, x)) && k.contains(m.sub(z, y));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoSolution) throw;
        }
        if (!ok) {
          Json e = evidence("solve");
          e["x"] = m.format(x);
          e["y"] = m.format(y);
          return fails(std::move(e));
        }
      }
    }
    return std::nullopt;
  });
  return r ? *r : Conclusion{};
}

Conclusion coset_intersect_mu(Context& c) {
  const auto& m = c.module();
  auto r = for_comaximal(m, [&](std::size_t, std::size_t, const Submodule& n,
                                const Submodule& k) -> std::optional<Conclusion> {
    const auto ys = coset_reps(m, k.members());
    for (Elem x : coset_reps(m, n.members())) {
      const PointSet cx = translate(m, n.members(), x);
      for (Elem y : ys) {
        if (!cx.intersects(translate(m, k.members(), y))) {
          return fails({{"n", submodule_json(n)}, {"k", submodule_json(k)}, {"x", m.format(x)}, {"y", m.format(y)}});
        }
      }
    }
    return std::nullopt;
  });
  return r ? *r : Conclusion{};
}

std::array<bool, 6> tsep_statements(const FiniteModule& m, const BasisSpace& full, const BasisSpace& punct,
                                     const PointSet& jm) {
  const auto g = separation(punct);
  return {jm.count() == 1,
          g.t2,
          g.t1,
          g.t0,
          separation(full).t0,
          closure(full, single(m.order(), 0)).count() == 1};
}

Conclusion tsep_equiv(Context& c) {
  const auto st = tsep_statements(c.module(), c.full(), c.punct(), c.jacobson_m());
  if (std::all_of(st.begin(), st.end(), [&](bool b) { return b == st[0]; })) return {};
  return fails({{"statements", st}});
}

Conclusion conclusion(TheoremId id, Context& c) {
  switch (id) {
    case TheoremId::FiniteCoprimeEquiv:
      return finite_coprime_equiv(c);
    case TheoremId::BasisFg:
    case TheoremId::BasisMult:
      return basis_axioms(c);
    case TheoremId::IndiscreteIffSimple:
      return indiscrete_iff_simple(c);
    case TheoremId::IndiscretePointsEqJ:
      return indiscrete_points_eq_j(c);
    case TheoremId::NotT1:
      return not_t1(c);
    case TheoremId::ClosureEqJacobson:
      return closure_eq_jacobson(c);
    case TheoremId::ZeroClosureEqJm:
      return zero_closure_eq_jm(c);
    case TheoremId::CrtMu:
      return crt_mu(c);
    case TheoremId::CosetIntersectMu:
      return coset_intersect_mu(c);
    case TheoremId::TsepEquiv:
      return tsep_equiv(c);
  }
  return {};
}

Json profile_summary(const PredicateProfile& p) {
  return Json{{"simple", p.simple},
              {"meet_irreducible", p.meet_irreducible},
              {"multiplication", p.multiplication.holds()},
              {"mu_module", p.mu_module.holds()},
              {"finite_coprime_condition", p.finite_coprime_condition.holds()},
              {"all_maximal_strongly_irreducible", p.all_maximal_strongly_irreducible.holds()},
              {"ann_prime", p.ann_prime}};
}

// Partitions of n with parts <= cap, in decreasing lexicographic order.
void partitions(int n, int cap, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

// ---- revalidation helpers --------------------------------------------------

PointSet set_from(const FiniteModule& m, const Json& j) {
  PointSet s = m.empty_set();
  for (const auto& x : j) s.set(parse_element(m, x.get<std::string>()));
  return s;
}

Submodule submodule_from(const FiniteModule& m, const Json& j) { return submodule_from_members(m, set_from(m, j)); }

// Materialized opens when they fit, the generating family otherwise.
struct Space {
  BasisSpace basis;
  std::optional<FiniteTopology> topology;

  PointSet closure_of(const PointSet& s) const { return topology ? closure(*topology, s) : closure(basis, s); }
  PointSet indiscrete() const { return topology ? indiscrete_points(*topology) : indiscrete_points(basis); }
  SeparationReport sep() const { return topology ? separation(*topology) : separation(basis); }
};

Space make_space(BasisSpace b) {
  Space s{std::move(b), std::nullopt};
  try {
    s.topology = generate_topology(s.basis);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OpenSetCap) throw;
  }
  return s;
}

struct Spaces {
  Space full;
  Space punct;
};

Spaces make_spaces(const FiniteModule& m) {
  const BasisSpace full = golomb_space(coprime_basis(m));
  return {make_space(full), make_space(punctured(full))};
}

bool coprime_coset(const FiniteModule& m, Elem rep, const PointSet& sub) {
  return sub.count() > 1 && is_comaximal(cyclic(m, rep).members(), sub, m.order());
}

bool revalidate_fcc(const FiniteModule& m, const Json& e) {
  const bool fcc = e.at("finite_coprime_condition").get<bool>();
  const bool smax = e.at("all_maximal_strongly_irreducible").get<bool>();
  if (fcc == smax) return false;
  const Json& w = e.at("witness");
  if (!fcc) {
    const Submodule n = submodule_from(m, w.at(0));
    const Submodule k1 = submodule_from(m, w.at(1));
    const Submodule k2 = submodule_from(m, w.at(2));
    const bool refutes = sum(n, k1).is_whole() && sum(n, k2).is_whole() && !sum(n, intersect(k1, k2)).is_whole();
    return refutes && all_maximal_strongly_irreducible(m).holds();
  }
  const Submodule p = submodule_from(m, w.at("maximal"));
  const Submodule k = submodule_from(m, w.at("pair").at(0));
  const Submodule l = submodule_from(m, w.at("pair").at(1));
  const bool refutes = is_maximal(p, m) && intersect(k, l).is_subset_of(p) && !k.is_subset_of(p) && !l.is_subset_of(p);
  return refutes && has_finite_coprime_condition(m).holds();
}

bool revalidate_basis(const FiniteModule& m, const Json& e) {
  const Elem p = parse_element(m, e.at("point").get<std::string>());
  PointSet target = m.all();
  if (!e.contains("uncovered")) {
    for (const char* key : {"first", "second"}) {
      const Json& c = e.at(key);
      const Elem rep = parse_element(m, c.at("rep").get<std::string>());
      const Submodule sub = submodule_from(m, c.at("submodule"));
      if (!coprime_coset(m, rep, sub.members())) return false;
      const PointSet pts = translate(m, sub.members(), rep);
      if (!pts.test(p)) return false;
      target = target & pts;
    }
  }
  // Every basic set containing p is p + S for a nonzero submodule S.
  for (const auto& s : m.submodule_sets()) {
    if (!coprime_coset(m, p, s)) continue;
    if (e.contains("uncovered")) return false;
    if (translate(m, s, p).is_subset_of(target)) return false;
  }
  return true;
}

bool revalidate_closure_part(const FiniteModule& m, const Spaces& sp, const Json& e) {
  const Submodule n = submodule_from(m, e.at("submodule"));
  const PointSet j = jacobson(n, m).members();
  const std::string part = e.at("part").get<std::string>();
  if (part == "ii") return !(sp.full.closure_of(n.members()) == j);
  const Elem x = parse_element(m, e.at("element").get<std::string>());
  const PointSet coset = translate(m, n.members(), x);
  if (part == "i") return !j.is_subset_of(sp.full.closure_of(coset));
  if (part == "iii") return !n.contains(x) && !drop_zero(j).is_subset_of(sp.punct.closure_of(drop_zero(coset)));
  return false;
}

bool revalidate_crt(const FiniteModule& m, const Json& e) {
  const Submodule n = submodule_from(m, e.at("n"));
  const Submodule k = submodule_from(m, e.at("k"));
  if (!sum(n, k).is_whole()) return false;
  const Submodule meet = intersect(n, k);
  const std::string aspect = e.at("aspect").get<std::string>();
  // cosets counted by brute force: |M/S| = |M| / |S|
  const std::size_t mn = m.order() / n.order();
  const std::size_t mk = m.order() / k.order();
  const std::size_t mm = m.order() / meet.order();
  if (aspect == "order") return quotient(m, meet).module.order() != quotient(m, n).module.order() * quotient(m, k).module.order();
  if (aspect == "kernel" || aspect == "image") {
    const Quotient qn = quotient(m, n);
    const Quotient qk = quotient(m, k);
    std::set<std::pair<Elem, Elem>> image;
    PointSet kernel = m.empty_set();
    for (Elem x = 0; x < m.order(); ++x) {
      image.emplace(qn.project(x), qk.project(x));
      if (qn.project(x) == 0 && qk.project(x) == 0) kernel.set(x);
    }
    if (aspect == "kernel") return !(kernel == meet.members());
    return image.size() != mn * mk || mn * mk != mm;
  }
  if (aspect == "solve") {
    const Elem x = parse_element(m, e.at("x").get<std::string>());
    const Elem y = parse_element(m, e.at("y").get<std::string>());
    try {
      const Elem z = crt_solve(x, y, n, k).z;
      return !(n.contains(m.sub(z, x)) && k.contains(m.sub(z, y)));
    } catch (const Error& err) {
      return err.code() == ErrorCode::NoSolution;
    }
  }
  return false;
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& [k, v] : kNames) {
    if (k == id) return v;
  }
  return "UNKNOWN";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& [k, v] : kNames) {
    if (v == name) return k;
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Vacuous:
      return "VACUOUS";
  }
  return "UNKNOWN";
}

std::vector<FiniteModule> isomorphism_classes(std::size_t max_order) {
  std::vector<FiniteModule> out;
  for (std::size_t order = 2; order <= max_order; ++order) {
    // factor into prime powers, primes ascending
    std::vector<std::pair<std::int64_t, int>> pe;
    std::size_t rest = order;
    for (std::size_t p = 2; p * p <= rest; ++p) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e > 0) pe.emplace_back(static_cast<std::int64_t>(p), e);
    }
    if (rest > 1) pe.emplace_back(static_cast<std::int64_t>(rest), 1);

    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& [p, e] : pe) {
      std::vector<int> prefix;
      auto& parts = choices.emplace_back();
      partitions(e, e, prefix, parts);
    }
    std::vector<std::size_t> pick(pe.size(), 0);
    for (;;) {
      std::size_t width = 0;
      for (std::size_t i = 0; i < pe.size(); ++i) width = std::max(width, choices[i][pick[i]].size());
      // the i-th largest invariant factor collects the i-th largest part of every prime
      std::vector<std::int64_t> factors(width, 1);
      for (std::size_t i = 0; i < pe.size(); ++i) {
        const auto& parts = choices[i][pick[i]];
        for (std::size_t j = 0; j < parts.size(); ++j) {
          for (int t = 0; t < parts[j]; ++t) factors[j] = checked::mul(factors[j], pe[i].first);
        }
      }
      std::reverse(factors.begin(), factors.end());
      out.push_back(make_module(std::move(factors), order));

      std::size_t i = pe.size();
      while (i > 0) {
        --i;
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = pe.size() + 1;
          break;
        }
      }
      if (i > pe.size()) break;
    }
  }
  return out;
}

ModuleReport evaluate_module(const FiniteModule& m, std::span<const TheoremId> theorems, bool converse_mining) {
  Context c(m);
  ModuleReport report{m.spec(), profile_summary(c.profile()), {}};
  for (TheoremId id : theorems) {
    TheoremCase tc{std::string(theorem_name(id)), hypotheses(id, c), Verdict::Vacuous, Json::object(), std::nullopt};
    if (tc.hypotheses_held) {
      Conclusion r = conclusion(id, c);
      tc.verdict = r.holds ? Verdict::Pass : Verdict::Fail;
      tc.evidence = std::move(r.evidence);
    } else if (converse_mining) {
      Conclusion r = conclusion(id, c);
      tc.converse_conclusion = r.holds;
      tc.evidence = std::move(r.evidence);
    }
    report.cases.push_back(std::move(tc));
  }
  return report;
}

CampaignSummary tally(const std::vector<ModuleReport>& modules) {
  CampaignSummary s;
  for (const auto& mr : modules) {
    for (const auto& tc : mr.cases) {
      switch (tc.verdict) {
        case Verdict::Pass:
          ++s.pass;
          break;
        case Verdict::Fail:
          ++s.fail;
          break;
        case Verdict::Vacuous:
          ++s.vacuous;
          break;
      }
    }
  }
  return s;
}

CampaignReport run_campaign(std::size_t max_order, const CampaignOptions& options) {
  if (max_order < 2) throw Error(ErrorCode::InvalidArgument, "max_order must be at least 2");
  if (max_order > options.max_order_bound) {
    throw Error(ErrorCode::SizeCap, "max_order " + std::to_string(max_order) + " exceeds the enumeration bound " +
                                        std::to_string(options.max_order_bound));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<TheoremId> theorems = options.theorems;
  if (theorems.empty()) theorems.assign(kAllTheorems.begin(), kAllTheorems.end());

  const auto modules = isomorphism_classes(max_order);
  CampaignReport report;
  report.family = "finite abelian groups of order 2.." + std::to_string(max_order);
  report.modules.resize(modules.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < modules.size(); i = next++) {
      try {
        report.modules[i] = evaluate_module(modules[i], theorems, options.converse_mining);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = modules.size();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.summary = tally(report.modules);
  report.duration =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

CampaignReport verify_paper_examples() {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.family = "worked examples";
  auto scenario = [&](std::string module, std::string id, bool ok, Json evidence) {
    ModuleReport mr{std::move(module), Json::object(), {}};
    mr.cases.push_back({std::move(id), true, ok ? Verdict::Pass : Verdict::Fail, std::move(evidence), std::nullopt});
    report.modules.push_back(std::move(mr));
  };
  auto vec = [](std::int64_t a, std::int64_t b) {
    IntVector v(2);
    v << a, b;
    return v;
  };
  auto lat = [](std::initializer_list<IntVector> gens) { return lat_from_generators(2, gens); };

  {
    const IntegerLattice n = lat({vec(2, 0), vec(0, 2)});
    const IntegerLattice k = lat({vec(1, 0), vec(0, 2)});
    const IntegerLattice l = lat({vec(2, 0), vec(0, 1)});
    Json e{{"n", lattice_json(n)}, {"k", lattice_json(k)}, {"l", lattice_json(l)}, {"prime", lat_is_prime(n)}};
    bool ok = lat_is_prime(n);
    try {
      const auto cert = check_strongly_irreducible_witness_lat(n, k, l);
      e["meet"] = lattice_json(cert.meet);
      e["k_outside"] = vector_json(cert.k_outside);
      e["l_outside"] = vector_json(cert.l_outside);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotARefutation) throw;
      e["error"] = err.what();
      ok = false;
    }
    scenario("Z^2", "EXAMPLE1_PRIME_NOT_STRONGLY_IRREDUCIBLE", ok, std::move(e));
  }
  {
    const IntegerLattice whole = IntegerLattice::whole(2);
    const IntegerLattice n = lat({vec(1, 1)});
    const IntegerLattice k1 = lat({vec(1, 0)});
    const IntegerLattice k2 = lat({vec(0, 1)});
    const IntegerLattice meet_sum = lat_sum(n, lat_intersect(k1, k2));
    const bool ok = lat_sum(n, k1) == whole && lat_sum(n, k2) == whole && meet_sum == n && !(meet_sum == whole);
    scenario("Z^2", "EXAMPLE2_COPRIME_FAILURE", ok,
             {{"n", lattice_json(n)},
              {"k1", lattice_json(k1)},
              {"k2", lattice_json(k2)},
              {"n_plus_k1_meet_k2", lattice_json(meet_sum)}});
  }
  {
    const LatticeCoset a{vec(1, 1), lat({vec(1, 0)})};
    const LatticeCoset b{vec(1, 1), lat({vec(0, 1)})};
    const CosetIntersection r = coset_intersect(a, b);
    const auto* pts = std::get_if<coset_intersection::Points>(&r);
    const bool singleton = pts && pts->points.size() == 1 && pts->points.front() == vec(1, 1);
    // a coprime coset has a nonzero lattice, hence infinitely many points, so none fits in a singleton
    const bool ok = is_coprime_coset_lat(a.rep, a.lat) && is_coprime_coset_lat(b.rep, b.lat) && singleton;
    scenario("Z^2", "EXAMPLE4_BASIS_FAILURE", ok,
             {{"first", lattice_coset_json(a)}, {"second", lattice_coset_json(b)}, {"intersection", intersection_json(r)}});
  }

  const FiniteModule z8 = make_module({8});
  const CoprimeBasis basis = coprime_basis(z8);
  const BasisSpace full = golomb_space(basis);
  auto elems = [&](std::initializer_list<Elem> xs) {
    PointSet s = z8.empty_set();
    for (Elem x : xs) s.set(x);
    return s;
  };
  {
    auto sorted = [](std::vector<PointSet> v) {
      std::sort(v.begin(), v.end(), CanonicalLess{});
      return v;
    };
    const auto golden_basis = sorted({z8.all(), elems({1, 3, 5, 7}), elems({1, 5}), elems({3, 7})});
    const auto golden_full = sorted({z8.empty_set(), z8.all(), elems({1, 3, 5, 7}), elems({1, 5}), elems({3, 7})});
    std::vector<PointSet> golden_punct;
    for (const auto& s : std::vector<PointSet>{z8.empty_set(), without_zero(z8.all()), elems({1, 3, 5, 7}),
                                               elems({1, 5}), elems({3, 7})}) {
      golden_punct.push_back(drop_zero(s));
    }
    golden_punct = sorted(golden_punct);

    const FiniteTopology t_full = generate_topology(basis);
    const FiniteTopology t_punct = generate_topology(punctured(full));
    const PointSet j = jacobson_radical(z8).members();
    const PointSet cl2 = closure(full, elems({2}));
    const PointSet cl0 = closure(full, elems({0}));
    const bool t1 = separation(full).t1;
    const bool ok = sorted(basis.sets()) == golden_basis && sorted(t_full.opens) == golden_full &&
                    sorted(t_punct.opens) == golden_punct && cl2 == elems({0, 2, 4, 6}) && cl0 == j &&
                    j == elems({0, 2, 4, 6}) && !t1;
    Json basis_json = Json::array();
    for (const auto& s : basis.sets()) basis_json.push_back(subs(z8, s));
    scenario("8", "Z8_GOLDENS", ok,
             {{"basis", basis_json},
              {"full", topology_json(z8, t_full)},
              {"punctured", topology_json(z8, t_punct)},
              {"closure_2", subs(z8, cl2)},
              {"closure_0", subs(z8, cl0)},
              {"jacobson", subs(z8, j)},
              {"t1", t1}});
  }

  const PointSet open = elems({1, 5});
  const auto preimage = addition_preimage(z8, open);
  {
    const auto group = is_topological_group(z8, full);
    const auto failure = product_interior_failure(full, preimage);
    Json e{{"topological_group", group.holds()}};
    if (failure) e["uncovered_pair"] = Json::array({z8.format(failure->first), z8.format(failure->second)});
    scenario("8", "REMARK_Z8_NOT_TOPOLOGICAL_MODULE", !group.holds() && failure.has_value(), std::move(e));
  }
  {
    const std::vector<std::pair<Elem, Elem>> listed = {{0, 1}, {1, 0}, {2, 7}, {3, 6}, {4, 5}, {6, 3}, {7, 2}, {0, 5},
                                                       {1, 4}, {2, 3}, {3, 2}, {4, 1}, {5, 0}, {6, 7}, {7, 6}};
    const std::set<std::pair<Elem, Elem>> computed(preimage.begin(), preimage.end());
    const std::set<std::pair<Elem, Elem>> printed(listed.begin(), listed.end());
    auto pairs_json = [&](const auto& xs) {
      Json out = Json::array();
      for (const auto& [a, b] : xs) out.push_back(Json::array({z8.format(a), z8.format(b)}));
      return out;
    };
    std::vector<std::pair<Elem, Elem>> missing;
    std::vector<std::pair<Elem, Elem>> extra;
    std::set_difference(computed.begin(), computed.end(), printed.begin(), printed.end(), std::back_inserter(missing));
    std::set_difference(printed.begin(), printed.end(), computed.begin(), computed.end(), std::back_inserter(extra));
    scenario("8", "REMARK_Z8_PREIMAGE_LISTING", computed == printed,
             {{"computed", pairs_json(computed)},
              {"listed", pairs_json(listed)},
              {"missing_from_listing", pairs_json(missing)},
              {"not_in_preimage", pairs_json(extra)}});
  }

  report.summary = tally(report.modules);
  report.duration =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

bool revalidate_counterexample(const FiniteModule& m, TheoremId id, const Json& e) {
  if (e.empty()) return false;
  try {
    switch (id) {
      case TheoremId::FiniteCoprimeEquiv:
        return revalidate_fcc(m, e);
      case TheoremId::BasisFg:
      case TheoremId::BasisMult:
        return revalidate_basis(m, e);
      case TheoremId::IndiscreteIffSimple: {
        const Spaces sp = make_spaces(m);
        const bool simple = m.submodule_sets().size() == 2;
        const bool full = sp.full.indiscrete().count() == m.order();
        const bool punct = sp.punct.indiscrete().count() == m.order() - 1;
        return full != simple || punct != simple;
      }
      case TheoremId::IndiscretePointsEqJ: {
        const Spaces sp = make_spaces(m);
        const PointSet j = jacobson_radical(m).members();
        if (e.at("space") == "full") return !(sp.full.indiscrete() == j);
        return !(sp.punct.indiscrete() == drop_zero(j));
      }
      case TheoremId::NotT1: {
        const Spaces sp = make_spaces(m);
        if (e.at("t1").get<bool>()) return sp.full.sep().t1;
        const Elem x = parse_element(m, e.at("point").get<std::string>());
        return x != 0 && !sp.full.closure_of(single(m.order(), x)).test(0);
      }
      case TheoremId::ClosureEqJacobson:
        return revalidate_closure_part(m, make_spaces(m), e);
      case TheoremId::ZeroClosureEqJm: {
        const Spaces sp = make_spaces(m);
        return !(sp.full.closure_of(single(m.order(), 0)) == jacobson_radical(m).members());
      }
      case TheoremId::CrtMu:
        return revalidate_crt(m, e);
      case TheoremId::CosetIntersectMu: {
        const Submodule n = submodule_from(m, e.at("n"));
        const Submodule k = submodule_from(m, e.at("k"));
        const Elem x = parse_element(m, e.at("x").get<std::string>());
        const Elem y = parse_element(m, e.at("y").get<std::string>());
        return sum(n, k).is_whole() && !translate(m, n.members(), x).intersects(translate(m, k.members(), y));
      }
      case TheoremId::TsepEquiv: {
        const Spaces sp = make_spaces(m);
        const auto st = tsep_statements(m, sp.full.basis, sp.punct.basis, jacobson_radical(m).members());
        return !std::all_of(st.begin(), st.end(), [&](bool b) { return b == st[0]; });
      }
    }
  } catch (const Error&) {
    return false;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return false;
}

Json report_json(const CampaignReport& report, bool include_timing) {
  Json modules = Json::array();
  for (const auto& mr : report.modules) {
    Json cases = Json::array();
    for (const auto& tc : mr.cases) {
      Json c{{"id", tc.id},
             {"hypotheses_held", tc.hypotheses_held},
             {"verdict", verdict_name(tc.verdict)},
             {"evidence", tc.evidence}};
      if (tc.converse_conclusion) c["converse_conclusion"] = *tc.converse_conclusion;
      cases.push_back(std::move(c));
    }
    modules.push_back(Json{{"module", mr.module}, {"profile", mr.profile}, {"cases", std::move(cases)}});
  }
  Json out{{"schema_version", 1},
           {"family", report.family},
           {"summary",
            {{"pass", report.summary.pass},
             {"fail", report.summary.fail},
             {"vacuous", report.summary.vacuous},
             {"total", report.summary.total()}}},
           {"modules", std::move(modules)}};
  if (include_timing) out["duration_ms"] = report.duration.count();
  return out;
}

}  // namespace golomb

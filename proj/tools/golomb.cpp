// golomb: command-line front end.
//
// Exit codes: 0 ok, 1 validation error, 2 theorem FAIL, 3 resource cap.
// Machine output is one JSON (or DOT) document on stdout; summaries go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "golomb/finmod.hpp"
#include "golomb/modpred.hpp"
#include "golomb/serialize.hpp"
#include "golomb/topology.hpp"
#include "golomb/verify.hpp"
#include "golomb/zlattice.hpp"

using namespace golomb;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kTheoremFail = 2;
constexpr int kResourceCap = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_analyze(const std::string& spec) {
  const FiniteModule m = parse_module_spec(spec);
  const auto p = predicate_profile(m);
  emit(profile_json(p));
  std::cerr << m.spec() << ": order " << m.order() << ", " << m.submodule_sets().size() << " submodules, J(M) = "
            << p.jacobson_radical.format() << '\n';
  return kOk;
}

int cmd_topology(const std::string& spec, const std::string& space, const std::string& format, std::size_t max_opens) {
  const FiniteModule m = parse_module_spec(spec);
  const CoprimeBasis basis = coprime_basis(m);
  if (auto check = check_basis_axioms(basis); !check.holds()) {
    const auto& w = *check.counterexample;
    Json e{{"error", "NotABasis"}, {"module", m.spec()}, {"point", m.format(w.point)}};
    if (w.first) {
      e["first"] = coset_json(*w.first);
      e["second"] = coset_json(*w.second);
    } else {
      e["uncovered"] = true;
    }
    emit(e);
    std::cerr << "coprime cosets of " << m.spec() << " do not form a basis; counterexample at " << m.format(w.point)
              << '\n';
    return kInvalid;
  }
  const BasisSpace full = golomb_space(basis);
  const BasisSpace chosen = space == "full" ? full : punctured(full);
  if (format == "dot") {
    std::cout << specialization_dot(m, chosen);
    return kOk;
  }
  const FiniteTopology t = generate_topology(chosen, max_opens);
  Json out{{"module", m.spec()}, {"space", space}};
  const Json topo = topology_json(m, t);
  out["ground"] = topo["ground"];
  out["opens"] = topo["opens"];
  out["separation"] = separation_json(m, chosen.ground, separation(chosen));
  Json ind = Json::array();
  indiscrete_points(chosen).for_each([&](std::size_t i) { ind.push_back(m.format(chosen.ground[i])); });
  out["indiscrete_points"] = ind;
  emit(out);
  std::cerr << m.spec() << " (" << space << "): " << t.opens.size() << " open sets\n";
  return kOk;
}

int cmd_verify(std::size_t max_order, const std::vector<std::string>& names, unsigned jobs, const std::string& out_path,
               bool converse, bool timing) {
  CampaignOptions options;
  for (const auto& n : names) {
    const auto id = parse_theorem(n);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown theorem id " + n);
    options.theorems.push_back(*id);
  }
  options.jobs = jobs;
  options.converse_mining = converse;
  const CampaignReport report = run_campaign(max_order, options);
  const Json j = report_json(report, timing);
  if (out_path.empty()) {
    emit(j);
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out_path);
    f << j.dump(2) << '\n';
  }
  std::cerr << report.family << ": " << report.modules.size() << " modules, " << report.summary.pass << " PASS, "
            << report.summary.fail << " FAIL, " << report.summary.vacuous << " VACUOUS\n";
  return report.any_fail() ? kTheoremFail : kOk;
}

int cmd_witness_t2(std::int64_t m, std::int64_t n) {
  const T2Witness w = t2_witness_integers(m, n);
  const CosetIntersection r = coset_intersect(w.first, w.second);
  const bool disjoint = std::holds_alternative<coset_intersection::Disjoint>(r);
  emit({{"kind", "t2"},
        {"prime", w.prime},
        {"first", lattice_coset_json(w.first)},
        {"second", lattice_coset_json(w.second)},
        {"disjoint", disjoint}});
  return disjoint ? kOk : kTheoremFail;
}

int cmd_witness_coset(const std::string& a, const std::string& b) {
  const LatticeCoset c1 = parse_lattice_coset(a);
  const LatticeCoset c2 = parse_lattice_coset(b);
  emit({{"kind", "coset"},
        {"first", lattice_coset_json(c1)},
        {"second", lattice_coset_json(c2)},
        {"intersection", intersection_json(coset_intersect(c1, c2))}});
  return kOk;
}

int cmd_witness_strongirr(const std::string& n_text, const std::string& k_text, const std::string& l_text) {
  const IntegerLattice n = parse_lattice(n_text);
  const Eigen::Index rank = n.ambient_rank();
  const IntegerLattice k = parse_lattice(k_text, rank);
  const IntegerLattice l = parse_lattice(l_text, rank);
  const auto cert = check_strongly_irreducible_witness_lat(n, k, l);
  emit({{"kind", "strongirr"},
        {"n", lattice_json(n)},
        {"k", lattice_json(k)},
        {"l", lattice_json(l)},
        {"n_prime", lat_is_prime(n)},
        {"meet", lattice_json(cert.meet)},
        {"k_outside", vector_json(cert.k_outside)},
        {"l_outside", vector_json(cert.l_outside)},
        {"verdict", "PASS"}});
  return kOk;
}

int cmd_examples(bool timing) {
  const CampaignReport report = verify_paper_examples();
  emit(report_json(report, timing));
  for (const auto& mr : report.modules) {
    for (const auto& c : mr.cases) std::cerr << verdict_name(c.verdict) << ' ' << c.id << '\n';
  }
  return report.any_fail() ? kTheoremFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golomb topologies on finite Z-modules"};
  app.require_subcommand(1);

  std::string spec;
  auto* analyze = app.add_subcommand("analyze", "predicate profile of a module");
  analyze->add_option("module", spec, "module literal, e.g. 8 or 2x4")->required();

  std::string space = "full";
  std::string format = "json";
  std::size_t max_opens = default_max_opens();
  auto* topology = app.add_subcommand("topology", "Golomb topology of a module");
  topology->add_option("module", spec, "module literal")->required();
  topology->add_option("--space", space, "full or punctured")->check(CLI::IsMember({"full", "punctured"}));
  topology->add_option("--emit", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  topology->add_option("--max-opens", max_opens, "open-set bound for materialization")->check(CLI::PositiveNumber);

  std::size_t max_order = 16;
  std::vector<std::string> theorems;
  unsigned jobs = 1;
  std::string out_path;
  bool converse = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "theorem campaign over all groups up to an order");
  verify->add_option("--max-order", max_order, "largest group order");
  verify->add_option("--theorems", theorems, "theorem ids (default: all)")->delimiter(',');
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");
  verify->add_flag("--converse", converse, "also evaluate conclusions outside the hypotheses");
  verify->add_flag("--timing", timing, "include duration_ms in the report");

  auto* witness = app.add_subcommand("witness", "print and re-validate a certificate on Z^n");
  witness->require_subcommand(1);
  std::int64_t t2_m = 0;
  std::int64_t t2_n = 0;
  auto* t2 = witness->add_subcommand("t2", "disjoint coprime cosets of Z around m and n");
  t2->add_option("m", t2_m)->required();
  t2->add_option("n", t2_n)->required();
  std::string c1;
  std::string c2;
  auto* coset = witness->add_subcommand("coset", "intersection of two lattice cosets");
  coset->add_option("first", c1, "e.g. \"(1,1)+[(1,0)]\"")->required();
  coset->add_option("second", c2)->required();
  std::string ln;
  std::string lk;
  std::string ll;
  auto* strongirr = witness->add_subcommand("strongirr", "refutation of strong irreducibility: K ∩ L ⊆ N");
  strongirr->add_option("N", ln, "e.g. \"[(2,0),(0,2)]\"")->required();
  strongirr->add_option("K", lk)->required();
  strongirr->add_option("L", ll)->required();

  auto* examples = app.add_subcommand("examples", "hard-coded worked examples on Z^2 and Z8");
  examples->add_flag("--timing", timing, "include duration_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(spec);
    if (*topology) return cmd_topology(spec, space, format, max_opens);
    if (*verify) return cmd_verify(max_order, theorems, jobs, out_path, converse, timing);
    if (*t2) return cmd_witness_t2(t2_m, t2_n);
    if (*coset) return cmd_witness_coset(c1, c2);
    if (*strongirr) return cmd_witness_strongirr(ln, lk, ll);
    if (*examples) return cmd_examples(timing);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_resource_cap() ? kResourceCap : kInvalid;
  }
  return kInvalid;
}

#include "golomb/serialize.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace golomb {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer() {
    skip_space();
    std::int64_t v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  std::vector<std::int64_t> tuple() {
    std::vector<std::int64_t> out;
    expect('(');
    if (peek(')')) fail("empty tuple");
    out.push_back(integer());
    while (peek(',')) {
      ++pos_;
      out.push_back(integer());
    }
    expect(')');
    return out;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

IntVector to_vector(const std::vector<std::int64_t>& xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

IntegerLattice lattice_from(Cursor& c, Eigen::Index ambient_rank) {
  std::vector<IntVector> gens;
  c.expect('[');
  if (!c.peek(']')) {
    gens.push_back(to_vector(c.tuple()));
    while (c.peek(',')) {
      c.expect(',');
      gens.push_back(to_vector(c.tuple()));
    }
  }
  c.expect(']');
  if (gens.empty()) {
    if (ambient_rank <= 0) c.fail("empty generator list needs an explicit ambient rank");
    return IntegerLattice(ambient_rank);
  }
  const Eigen::Index n = ambient_rank > 0 ? ambient_rank : gens.front().size();
  return lat_from_generators(n, gens);
}

}  // namespace

FiniteModule parse_module_spec(std::string_view text, std::size_t max_order) {
  std::vector<std::int64_t> factors;
  std::size_t start = 0;
  for (;;) {
    const std::size_t stop = text.find('x', start);
    const std::string_view piece = text.substr(start, stop == std::string_view::npos ? text.npos : stop - start);
    Cursor c(piece);
    const std::int64_t d = c.integer();
    if (!c.at_end()) c.fail("unexpected trailing characters");
    if (d < 1) c.fail("factors must be positive");
    factors.push_back(d);
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return make_module(normalize_factors(factors), max_order);
}

Elem parse_element(const FiniteModule& m, std::string_view text) {
  Cursor c(text);
  const auto coords = c.tuple();
  if (!c.at_end()) c.fail("unexpected trailing characters");
  return m.index_of(coords);
}

IntVector parse_vector(std::string_view text) {
  Cursor c(text);
  auto v = to_vector(c.tuple());
  if (!c.at_end()) c.fail("unexpected trailing characters");
  return v;
}

IntegerLattice parse_lattice(std::string_view text, Eigen::Index ambient_rank) {
  Cursor c(text);
  auto lat = lattice_from(c, ambient_rank);
  if (!c.at_end()) c.fail("unexpected trailing characters");
  return lat;
}

LatticeCoset parse_lattice_coset(std::string_view text) {
  Cursor c(text);
  IntVector rep = to_vector(c.tuple());
  c.expect('+');
  auto lat = lattice_from(c, rep.size());
  if (!c.at_end()) c.fail("unexpected trailing characters");
  return {std::move(rep), std::move(lat)};
}

Json elements_json(const FiniteModule& m, const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](Elem x) { out.push_back(m.format(x)); });
  return out;
}

Json submodule_json(const Submodule& n) { return elements_json(n.parent(), n.members()); }

Json coset_json(const Coset& c) {
  return Json{{"rep", c.sub.parent().format(c.rep)},
              {"submodule", submodule_json(c.sub)},
              {"points", elements_json(c.sub.parent(), c.points())}};
}

Json vector_json(const IntVector& v) { return format_vector(v); }
Json lattice_json(const IntegerLattice& l) { return l.format(); }
Json lattice_coset_json(const LatticeCoset& c) { return c.format(); }

namespace {

template <typename W, typename F>
Json outcome_json(const Outcome<W>& o, F&& witness) {
  if (o.holds()) return Json{{"holds", true}};
  return Json{{"holds", false}, {"witness", witness(*o.counterexample)}};
}

Json pair_json(const PairWitness& w) { return Json::array({submodule_json(w.first), submodule_json(w.second)}); }

}  // namespace

Json profile_json(const PredicateProfile& p) {
  Json maximal = Json::array();
  for (const auto& s : p.maximal_submodules) maximal.push_back(submodule_json(s));
  return Json{
      {"module", p.module.spec()},
      {"invariant_factors", p.module.invariant_factors()},
      {"order", p.module.order()},
      {"exponent", p.module.exponent()},
      {"simple", p.simple},
      {"meet_irreducible", p.meet_irreducible},
      {"multiplication", p.multiplication.holds()},
      {"multiplication_witness",
       p.multiplication.holds() ? Json(nullptr) : submodule_json(*p.multiplication.counterexample)},
      {"mu_module", p.mu_module.holds()},
      {"mu_module_witness", p.mu_module.holds() ? Json(nullptr) : pair_json(*p.mu_module.counterexample)},
      {"finite_coprime_condition", p.finite_coprime_condition.holds()},
      {"finite_coprime_condition_witness",
       p.finite_coprime_condition.holds()
           ? Json(nullptr)
           : Json::array({submodule_json(p.finite_coprime_condition.counterexample->n),
                          submodule_json(p.finite_coprime_condition.counterexample->k1),
                          submodule_json(p.finite_coprime_condition.counterexample->k2)})},
      {"all_maximal_strongly_irreducible", p.all_maximal_strongly_irreducible.holds()},
      {"all_maximal_strongly_irreducible_witness",
       p.all_maximal_strongly_irreducible.holds()
           ? Json(nullptr)
           : Json{{"maximal", submodule_json(p.all_maximal_strongly_irreducible.counterexample->maximal)},
                  {"pair", pair_json(p.all_maximal_strongly_irreducible.counterexample->pair)}}},
      {"ann_prime", p.ann_prime},
      {"annihilator", p.module.annihilator().generator},
      {"jacobson_radical", submodule_json(p.jacobson_radical)},
      {"maximal_submodules", maximal},
  };
}

Json topology_json(const FiniteModule& m, const FiniteTopology& t) {
  Json ground = Json::array();
  for (auto g : t.ground) ground.push_back(m.format(g));
  Json opens = Json::array();
  for (const auto& o : t.opens) {
    Json set = Json::array();
    o.for_each([&](std::size_t i) { set.push_back(m.format(t.ground[i])); });
    opens.push_back(std::move(set));
  }
  return Json{{"ground", ground}, {"opens", opens}};
}

Json separation_json(const FiniteModule& m, const std::vector<std::size_t>& ground, const SeparationReport& r) {
  auto pair = [&](const std::optional<PointPair>& p) {
    return p ? Json::array({m.format(ground[p->first]), m.format(ground[p->second])}) : Json(nullptr);
  };
  return Json{{"t0", r.t0},
              {"t1", r.t1},
              {"t2", r.t2},
              {"t0_failure", pair(r.t0_failure)},
              {"t1_failure", pair(r.t1_failure)},
              {"t2_failure", pair(r.t2_failure)}};
}

Json intersection_json(const CosetIntersection& r) {
  namespace ci = coset_intersection;
  if (std::holds_alternative<ci::Disjoint>(r)) return Json{{"kind", "Disjoint"}};
  if (const auto* w = std::get_if<ci::Witness>(&r)) {
    return Json{{"kind", "Coset"}, {"witness", vector_json(w->point)}, {"lattice", lattice_json(w->common)}};
  }
  Json pts = Json::array();
  for (const auto& p : std::get<ci::Points>(r).points) pts.push_back(vector_json(p));
  return Json{{"kind", "SingletonSet"}, {"points", pts}};
}

std::string specialization_dot(const FiniteModule& m, const BasisSpace& t) {
  const auto u = minimal_neighborhoods(t);
  const PointSet indiscrete = indiscrete_points(t);
  std::ostringstream out;
  out << "digraph specialization {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < t.ground.size(); ++i) {
    out << "  n" << i << " [label=\"" << m.format(t.ground[i]) << "\"";
    if (indiscrete.test(i)) out << ", style=filled, fillcolor=\"#f4a261\"";
    out << "];\n";
  }
  // x ∈ cl({y}) iff y ∈ U(x)
  for (std::size_t x = 0; x < t.ground.size(); ++x) {
    u[x].for_each([&](std::size_t y) {
      if (y != x) out << "  n" << x << " -> n" << y << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace golomb

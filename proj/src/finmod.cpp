#include "golomb/finmod.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

namespace golomb {

namespace {

// Submodule lattices beyond this size are refused rather than enumerated.
constexpr std::size_t kMaxLatticeSize = std::size_t{1} << 17;
// Addition is tabulated for modules up to this order.
constexpr std::size_t kMaxAddTable = 1024;

std::size_t env_or(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

}  // namespace

std::size_t default_max_order() { return env_or("GOLOMB_MAX_ORDER", 256); }

struct FiniteModule::Impl {
  std::vector<std::int64_t> factors;
  std::size_t order = 1;
  std::int64_t exponent = 1;
  std::vector<std::size_t> weights;    // mixed radix, first coordinate most significant
  std::vector<std::int64_t> coords;    // order × rank
  std::vector<std::uint16_t> add_table;
  std::vector<Elem> negation;

  mutable std::once_flag lattice_once;
  mutable std::vector<PointSet> lattice;

  explicit Impl(std::vector<std::int64_t> f) : factors(std::move(f)) {
    const std::size_t k = factors.size();
    for (auto d : factors) order *= static_cast<std::size_t>(d);
    if (k > 0) exponent = factors.back();
    weights.assign(k, 1);
    for (std::size_t i = k; i-- > 1;) weights[i - 1] = weights[i] * static_cast<std::size_t>(factors[i]);
    coords.resize(order * k);
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t rest = x;
      for (std::size_t i = 0; i < k; ++i) {
        coords[x * k + i] = static_cast<std::int64_t>(rest / weights[i]);
        rest %= weights[i];
      }
    }
    negation.resize(order);
    for (std::size_t x = 0; x < order; ++x) negation[x] = add_slow(x, 0, true);
    if (order <= kMaxAddTable) {
      add_table.resize(order * order);
      for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
          add_table[a * order + b] = static_cast<std::uint16_t>(add_slow(a, b, false));
    }
  }

  Elem add_slow(Elem a, Elem b, bool negate_a) const {
    const std::size_t k = factors.size();
    Elem out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t c = negate_a ? -coords[a * k + i] : coords[a * k + i] + coords[b * k + i];
      c = mod_floor(c, factors[i]);
      out += static_cast<std::size_t>(c) * weights[i];
    }
    return out;
  }

  Elem add(Elem a, Elem b) const {
    if (!add_table.empty()) return add_table[a * order + b];
    return add_slow(a, b, false);
  }
};

FiniteModule FiniteModule::trivial() {
  static const auto impl = std::make_shared<const Impl>(std::vector<std::int64_t>{});
  return FiniteModule(impl);
}

FiniteModule make_module(std::vector<std::int64_t> factors, std::size_t max_order) {
  if (factors.empty()) throw Error(ErrorCode::EmptyFactorList, "the zero module is excluded");
  std::size_t order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw Error(ErrorCode::NonDividingChain, "invariant factor " + std::to_string(factors[i]) + " < 2");
    }
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw Error(ErrorCode::NonDividingChain, std::to_string(factors[i - 1]) + " does not divide " +
                                                   std::to_string(factors[i]));
    }
    const auto d = static_cast<std::size_t>(factors[i]);
    if (order > max_order / d) {
      throw Error(ErrorCode::SizeCap, "module order exceeds enumeration bound " + std::to_string(max_order));
    }
    order *= d;
  }
  return FiniteModule(std::make_shared<const FiniteModule::Impl>(std::move(factors)));
}

std::vector<std::int64_t> normalize_factors(std::span<const std::int64_t> factors) {
  const auto k = static_cast<Eigen::Index>(factors.size());
  IntMatrix diag = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) diag(i, i) = factors[static_cast<std::size_t>(i)];
  std::vector<std::int64_t> out;
  const auto invariants = snf(diag);
  if (static_cast<Eigen::Index>(invariants.size()) != k) {
    throw Error(ErrorCode::InvalidArgument, "factor 0 describes an infinite module");
  }
  for (auto d : invariants)
    if (d > 1) out.push_back(d);
  return out;
}

const std::vector<std::int64_t>& FiniteModule::invariant_factors() const { return impl_->factors; }
std::size_t FiniteModule::order() const { return impl_->order; }
std::int64_t FiniteModule::exponent() const { return impl_->exponent; }

Coords FiniteModule::coords(Elem x) const {
  const std::size_t k = rank();
  return Coords(impl_->coords.begin() + static_cast<std::ptrdiff_t>(x * k),
                impl_->coords.begin() + static_cast<std::ptrdiff_t>((x + 1) * k));
}

Elem FiniteModule::index_of(std::span<const std::int64_t> c) const {
  if (c.size() != rank()) {
    throw Error(ErrorCode::RankMismatch, "element has " + std::to_string(c.size()) + " coordinates, module rank is " +
                                             std::to_string(rank()));
  }
  Elem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += static_cast<std::size_t>(mod_floor(c[i], impl_->factors[i])) * impl_->weights[i];
  }
  return out;
}

Elem FiniteModule::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem FiniteModule::neg(Elem a) const { return impl_->negation[a]; }

Elem FiniteModule::scale(std::int64_t k, Elem a) const {
  k = mod_floor(k, exponent());
  // double-and-add
  Elem acc = 0, base = a;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::int64_t FiniteModule::element_order(Elem a) const {
  std::int64_t n = 1;
  for (Elem t = a; t != 0; t = add(t, a)) ++n;
  return n;
}

std::vector<Elem> FiniteModule::standard_generators() const {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(impl_->weights[i]);
  return gens;
}

std::string FiniteModule::format(Elem x) const {
  std::string s = "(";
  const auto c = coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string FiniteModule::spec() const {
  if (is_trivial()) return "1";
  std::string s;
  for (auto d : invariant_factors()) {
    if (!s.empty()) s += 'x';
    s += std::to_string(d);
  }
  return s;
}

PointSet translate(const FiniteModule& m, const PointSet& s, Elem x) {
  PointSet out = m.empty_set();
  s.for_each([&](std::size_t p) { out.set(m.add(p, x)); });
  return out;
}

namespace {

// H + <x>, the union of the cosets H + jx up to the first multiple back in H.
PointSet join_cyclic(const FiniteModule& m, const PointSet& h, Elem x) {
  PointSet out = h;
  for (Elem t = x; !h.test(t); t = m.add(t, x)) out |= translate(m, h, t);
  return out;
}

}  // namespace

const std::vector<PointSet>& FiniteModule::submodule_sets() const {
  std::call_once(impl_->lattice_once, [this] {
    const std::size_t n = order();
    std::vector<PointSet> found;
    std::unordered_set<PointSet, PointSetHash> seen;
    PointSet zero(n);
    zero.set(0);
    found.push_back(zero);
    seen.insert(zero);
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (Elem x = 1; x < n; ++x) {
        if (found[i].test(x)) continue;
        PointSet j = join_cyclic(*this, found[i], x);
        if (seen.insert(j).second) {
          if (found.size() >= kMaxLatticeSize) {
            throw Error(ErrorCode::SizeCap, "submodule lattice of " + spec() + " exceeds " +
                                                std::to_string(kMaxLatticeSize) + " members");
          }
          found.push_back(std::move(j));
        }
      }
    }
    std::sort(found.begin(), found.end(), CanonicalLess{});
    impl_->lattice = std::move(found);
  });
  return impl_->lattice;
}

std::vector<Elem> Submodule::generators() const {
  std::vector<Elem> gens;
  PointSet span = parent_.empty_set();
  span.set(0);
  members_.for_each([&](Elem x) {
    if (span.test(x)) return;
    gens.push_back(x);
    span = join_cyclic(parent_, span, x);
  });
  return gens;
}

std::string Submodule::format() const {
  std::string s = "{";
  bool first = true;
  members_.for_each([&](Elem x) {
    if (!first) s += ',';
    first = false;
    s += parent_.format(x);
  });
  return s + "}";
}

Submodule zero_submodule(const FiniteModule& m) {
  PointSet s = m.empty_set();
  s.set(0);
  return {m, std::move(s)};
}

Submodule whole_module(const FiniteModule& m) { return {m, m.all()}; }

Submodule generated(const FiniteModule& m, std::span<const Elem> gens) {
  PointSet span = m.empty_set();
  span.set(0);
  for (Elem g : gens) span = join_cyclic(m, span, g);
  return {m, std::move(span)};
}

Submodule submodule_from_members(const FiniteModule& m, const PointSet& members) {
  if (members.universe() != m.order() || !members.test(0)) {
    throw Error(ErrorCode::InvalidArgument, "member set does not contain 0");
  }
  bool closed = true;
  members.for_each([&](Elem a) {
    if (!closed) return;
    members.for_each([&](Elem b) {
      if (closed && !members.test(m.add(a, b))) closed = false;
    });
  });
  if (!closed) throw Error(ErrorCode::InvalidArgument, "member set is not closed under addition");
  return {m, members};
}

std::vector<Submodule> enumerate_submodules(const FiniteModule& m) {
  std::vector<Submodule> out;
  for (const auto& s : m.submodule_sets()) out.emplace_back(m, s);
  return out;
}

namespace {

void require_same_parent(const Submodule& n, const Submodule& k) {
  if (!(n.parent() == k.parent())) {
    throw Error(ErrorCode::ParentMismatch, "submodules of " + n.parent().spec() + " and " + k.parent().spec());
  }
}

}  // namespace

Submodule sum(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  PointSet span = n.members();
  for (Elem g : k.generators()) span = join_cyclic(n.parent(), span, g);
  return {n.parent(), std::move(span)};
}

Submodule intersect(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  return {n.parent(), n.members() & k.members()};
}

Submodule cyclic(const FiniteModule& m, Elem x) {
  const Elem gens[] = {x};
  return generated(m, gens);
}

bool is_comaximal(const PointSet& n, const PointSet& k, std::size_t order) {
  return n.count() * k.count() == order * PointSet::count_and(n, k);
}

bool is_comaximal(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  return is_comaximal(n.members(), k.members(), n.parent().order());
}

IdealOfZ residual(const FiniteModule& m, const PointSet& n) {
  const auto gens = m.standard_generators();
  for (std::int64_t e = 1; e < m.exponent(); ++e) {
    if (m.exponent() % e != 0) continue;
    if (std::all_of(gens.begin(), gens.end(), [&](Elem g) { return n.test(m.scale(e, g)); })) return {e};
  }
  return {m.exponent()};
}

IdealOfZ residual(const Submodule& n, const FiniteModule& m) {
  if (!(n.parent() == m)) throw Error(ErrorCode::ParentMismatch, "submodule is not in " + m.spec());
  return residual(m, n.members());
}

Submodule ideal_times_module(const IdealOfZ& ideal, const FiniteModule& m) {
  std::vector<Elem> gens;
  for (Elem g : m.standard_generators()) gens.push_back(m.scale(ideal.generator, g));
  return generated(m, gens);
}

Coset make_coset(Elem x, const Submodule& n) {
  const PointSet pts = translate(n.parent(), n.members(), x);
  return {pts.first(), n};
}

std::string Coset::format() const { return sub.parent().format(rep) + "+" + sub.format(); }

Quotient quotient(const FiniteModule& m, const Submodule& n) {
  if (!(n.parent() == m)) throw Error(ErrorCode::ParentMismatch, "submodule is not in " + m.spec());
  const auto k = static_cast<Eigen::Index>(m.rank());
  const auto gens = n.generators();
  IntMatrix relations = IntMatrix::Zero(k, k + static_cast<Eigen::Index>(gens.size()));
  for (Eigen::Index i = 0; i < k; ++i) relations(i, i) = m.invariant_factors()[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto c = m.coords(gens[j]);
    for (Eigen::Index i = 0; i < k; ++i) relations(i, k + static_cast<Eigen::Index>(j)) = c[static_cast<std::size_t>(i)];
  }
  const auto smith = smith_decomposition(relations);

  std::vector<std::int64_t> factors;
  std::vector<Eigen::Index> kept_rows;
  for (std::size_t t = 0; t < smith.invariants.size(); ++t) {
    if (smith.invariants[t] > 1) {
      factors.push_back(smith.invariants[t]);
      kept_rows.push_back(static_cast<Eigen::Index>(t));
    }
  }
  FiniteModule q = factors.empty() ? FiniteModule::trivial() : make_module(factors, m.order());

  std::vector<Elem> projection(m.order());
  Coords image(factors.size());
  for (Elem x = 0; x < m.order(); ++x) {
    const auto c = m.coords(x);
    for (std::size_t t = 0; t < kept_rows.size(); ++t) {
      std::int64_t acc = 0;
      for (Eigen::Index i = 0; i < k; ++i) {
        acc = checked::add(acc, checked::mul(smith.left(kept_rows[t], i), c[static_cast<std::size_t>(i)]));
      }
      image[t] = mod_floor(acc, factors[t]);
    }
    projection[x] = q.is_trivial() ? 0 : q.index_of(image);
  }
  return {std::move(q), std::move(projection)};
}

CrtSolution crt_solve(Elem x, Elem y, const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  const FiniteModule& m = n.parent();
  if (!is_comaximal(n, k)) throw Error(ErrorCode::NotCoprime, "N + K != M");

  const auto solves = [&](Elem z) { return n.contains(m.sub(z, x)) && k.contains(m.sub(z, y)); };

  const IdealOfZ res_n = residual(n, m);
  const IdealOfZ res_k = residual(k, m);
  const auto bez = extended_gcd(res_k.generator, res_n.generator);
  if (bez.gcd == 1) {
    const std::int64_t a = checked::mul(bez.x, res_k.generator);  // in (K:M)
    const std::int64_t b = checked::mul(bez.y, res_n.generator);  // in (N:M)
    const Elem z = m.add(m.scale(a, x), m.scale(b, y));
    if (solves(z)) return {z, CrtPath::Residual};
  }
  for (Elem z = 0; z < m.order(); ++z) {
    if (solves(z)) return {z, CrtPath::Exhaustive};
  }
  throw Error(ErrorCode::NoSolution, "(x+N) and (y+K) are disjoint");
}

}  // namespace golomb

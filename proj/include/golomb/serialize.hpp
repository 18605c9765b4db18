#pragma once

// Text formats: module literals ("2x4"), element tuples ("(1,0)"), lattice
// generator lists ("[(2,0),(0,2)]"), lattice cosets ("(1,1)+[(1,0)]"), and
// the JSON / DOT emitters.

#include <string>
#include <string_view>

#include <json.hpp>

#include "golomb/finmod.hpp"
#include "golomb/modpred.hpp"
#include "golomb/topology.hpp"
#include "golomb/zlattice.hpp"

namespace golomb {

using Json = nlohmann::ordered_json;

/// Decimal factors joined by 'x', normalized to an invariant-factor chain.
/// Errors: ParseError, EmptyFactorList (e.g. "1"), SizeCap.
FiniteModule parse_module_spec(std::string_view text, std::size_t max_order = default_max_order());
/// "(a1,...,ak)"; coordinates are reduced modulo the factors. Errors: ParseError, RankMismatch.
Elem parse_element(const FiniteModule& m, std::string_view text);
IntVector parse_vector(std::string_view text);
/// "[(2,0),(0,2)]"; `ambient_rank` is required when the list is empty. Errors: ParseError, RankMismatch.
IntegerLattice parse_lattice(std::string_view text, Eigen::Index ambient_rank = 0);
/// "(1,1)+[(1,0)]"
LatticeCoset parse_lattice_coset(std::string_view text);

Json elements_json(const FiniteModule& m, const PointSet& s);
Json submodule_json(const Submodule& n);
Json coset_json(const Coset& c);
Json vector_json(const IntVector& v);
Json lattice_json(const IntegerLattice& l);
Json lattice_coset_json(const LatticeCoset& c);

/// Flat object; key names are listed in README.
Json profile_json(const PredicateProfile& p);

/// {ground: [...], opens: [[...], ...]} with points rendered through `m`.
Json topology_json(const FiniteModule& m, const FiniteTopology& t);
Json separation_json(const FiniteModule& m, const std::vector<std::size_t>& ground, const SeparationReport& r);
Json intersection_json(const CosetIntersection& r);

/// Specialization preorder: edge x -> y iff x ∈ closure({y}), x ≠ y; indiscrete points filled.
std::string specialization_dot(const FiniteModule& m, const BasisSpace& t);

}  // namespace golomb

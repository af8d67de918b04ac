#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ultrarel/bits.hpp"
#include "ultrarel/filters.hpp"
#include "ultrarel/rel.hpp"
#include "ultrarel/topology.hpp"

namespace ultrarel {

// ---------------------------------------------------------------------------
// The seven formulas relating R to a pair of (ultra)filters u, v. With "S in
// u" read as filter membership (gen(u) ⊆ S):
//
//   c0    some {x} in u and {y} in v with R(x, y)
//   ci    for all S in v: {x : exists y in S, R(x, y)} in u          (R*)
//   cii   for all S in u: {y : exists x in S, R(x, y)} in v
//   ciii  exists S in v: {x : for all y in S, R(x, y)} in u
//   civ   exists S in u: {y : for all x in S, R(x, y)} in v
//   cv    {x : {y : R(x, y)} in v} in u                              (R~)
//   cvi   {y : {x : R(x, y)} in u} in v
//
// On ultrafilters the implications are
//   c0 -> ciii = civ -> cv -> ci = cii   and   ciii -> cvi -> ci.
// At principal arguments all seven collapse to R(x, y).
// ---------------------------------------------------------------------------

enum class Condition { c0, ci, cii, ciii, civ, cv, cvi };

inline constexpr std::array<Condition, 7> kAllConditions = {Condition::c0,  Condition::ci, Condition::cii,
                                                           Condition::ciii, Condition::civ, Condition::cv,
                                                           Condition::cvi};

std::string_view to_string(Condition c);
Condition condition_from_string(std::string_view s);

/// Literal evaluation of one formula; quantifiers range over all members of
/// the filters.
bool condition(const Rel& r, const FilterGen& u, const FilterGen& v, Condition which);

/// R* restricted to principal ultrafilters (condition ci at (x̂, ŷ)).
Rel star_ultra(const Rel& r);
/// R~ restricted to principal ultrafilters (condition cv at (x̂, ŷ)).
Rel tilde_ultra(const Rel& r);

/// A relation on the filter space εX of an n-point carrier. Filters are
/// indexed as in all_filters (index = generator - 1), so the principal
/// filters sit at indices 2^x - 1.
class FilterRel {
 public:
  explicit FilterRel(std::size_t n);  // empty
  FilterRel(std::size_t n, std::vector<Mask> rows);

  static FilterRel universal(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t index_count() const noexcept { return rows_.size(); }

  bool contains(std::size_t i, std::size_t j) const { return has(rows_.at(i), j); }
  bool contains(const FilterGen& c, const FilterGen& d) const { return contains(c.index(), d.index()); }
  Mask row(std::size_t i) const { return rows_.at(i); }
  const std::vector<Mask>& rows() const noexcept { return rows_; }

  /// The restriction to principal filters, as a relation on the carrier.
  Rel principal_block() const;
  /// Sorted (i, j) index pairs.
  std::vector<Pair> pairs() const;

  friend bool operator==(const FilterRel&, const FilterRel&) = default;

 private:
  std::size_t n_;
  std::vector<Mask> rows_;
};

FilterRel complement(const FilterRel& a);
FilterRel union_of(const FilterRel& a, const FilterRel& b);
FilterRel intersection(const FilterRel& a, const FilterRel& b);
FilterRel inverse(const FilterRel& a);
/// Same convention as for Rel: (C, E) iff some D has s(C, D) and r(D, E).
FilterRel compose(const FilterRel& r, const FilterRel& s);
bool is_subrelation(const FilterRel& a, const FilterRel& b);

/// Filter extension: R*(C, D) iff for every A in C, D ∪ {RA} is centered.
/// Evaluated in closed form as gen(D) ∩ R(gen(C)) ≠ ∅.
FilterRel star_filter(const Rel& r);
/// The same relation evaluated literally: every A ⊇ gen(C), the family of
/// all members of D plus RA, checked for the finite intersection property.
FilterRel star_filter_literal(const Rel& r);

/// The tilde formula evaluated with filter membership:
/// (C, D) iff {x : R(x) ⊇ gen(D)} ⊇ gen(C). This is an artifact-defined
/// operator; on principal filters it is R~.
FilterRel tilde_filter(const Rel& r);

/// A finite family has the finite intersection property.
bool is_centered(std::span<const Mask> family);

/// For all A ∈ c and B ∈ d: R ∩ (A x B) ≠ ∅.
bool rectangle_check(const Rel& r, const FilterGen& c, const FilterGen& d);

/// Exists x ∈ ultra_set(c), y ∈ ultra_set(d) with R(x, y): the filter
/// extension expressed through ultrafilters extending c and d.
bool filter_reduction_check(const Rel& r, const FilterGen& c, const FilterGen& d);

/// (filter generated by pr1(w), filter generated by pr2(w)) for a nonempty
/// subset w of the n x n pair carrier.
std::pair<FilterGen, FilterGen> filter_projections(Mask w_gen, std::size_t n);

/// Exists a filter w on X x X with R ∈ w whose projections are (c, d).
bool projection_witness_exists(const Rel& r, const FilterGen& c, const FilterGen& d);

/// A map from a space into the nonempty closed sets of another space.
class MultiMap {
 public:
  MultiMap(Topology domain, Topology codomain, std::vector<Mask> values);

  const Topology& domain() const noexcept { return domain_; }
  const Topology& codomain() const noexcept { return codomain_; }
  const std::vector<Mask>& values() const noexcept { return values_; }
  Mask value(std::size_t x) const { return values_.at(x); }

 private:
  Topology domain_;
  Topology codomain_;
  std::vector<Mask> values_;
};

/// R^∙: x ↦ cl_t(R(x)) from the discrete carrier into P_cl(t).
/// Throws PreconditionError if some row of r is empty.
MultiMap r_bullet(const Rel& r, const Topology& t);

/// {(x, y) : y ∈ F(x)} as a subset of the pair carrier of domain x codomain.
Mask graph_cells(const MultiMap& f);

/// ⋂_{A ∈ c} cl(R A) with the discrete closure.
Mask star_as_map(const Rel& r, const FilterGen& c);

enum class Semicontinuity { lower, upper, vietoris };
std::string_view to_string(Semicontinuity s);

/// lower: {x : F(x) ∩ O ≠ ∅} open for every open O.
/// upper: {x : F(x) ⊆ O} open for every open O.
/// vietoris: the point map into the full Vietoris topology is continuous.
/// `hyper` may supply a prebuilt hyperspace of the codomain.
bool semicontinuity(const MultiMap& f, Semicontinuity which, const HyperSpace* hyper = nullptr);
/// lower: {x : F(x) ⊆ C} closed, upper: {x : F(x) ∩ C ≠ ∅} closed, for every
/// closed C. vietoris: preimages of closed sets of the full Vietoris topology
/// are closed.
bool semicontinuity_closed_form(const MultiMap& f, Semicontinuity which, const HyperSpace* hyper = nullptr);
/// Continuity of the point map x ↦ F(x) into the given Vietoris topology.
bool vietoris_continuous(const MultiMap& f, const HyperSpace& codomain, Flavor which);

/// Filter generated by h[gen(c)] on an m-point carrier.
FilterGen pushforward(const FilterGen& c, std::span<const std::size_t> h, std::size_t m);

/// For a homomorphism h of (X, r) into (Y, s): the filter pushforward maps
/// star_filter(r) into star_filter(s) and tilde_filter(r) into tilde_filter(s).
/// Throws PreconditionError if h is not a homomorphism.
bool hom_preservation_check(std::span<const std::size_t> h, const Rel& r, const Rel& s);

}  // namespace ultrarel

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ultrarel/bits.hpp"
#include "ultrarel/rel.hpp"
#include "ultrarel/topology.hpp"

namespace ultrarel {

/// A filter over a finite carrier. Over a finite set every filter is
/// {S : gen ⊆ S} for a unique nonempty generator, and that is all we store.
/// Principal ultrafilters are exactly the singleton generators.
class FilterGen {
 public:
  FilterGen(std::size_t n, Mask gen);

  static FilterGen principal(std::size_t n, std::size_t x) { return FilterGen(n, bit(x)); }
  /// Filters are numbered 0 .. 2^n - 2 by generator value: index = gen - 1.
  static FilterGen from_index(std::size_t n, std::size_t index) { return FilterGen(n, Mask{index} + 1); }

  std::size_t size() const noexcept { return carrier_.size(); }
  Mask gen() const noexcept { return gen_; }
  std::size_t index() const noexcept { return static_cast<std::size_t>(gen_ - 1); }
  bool is_principal() const noexcept { return count(gen_) == 1; }

  /// S is a member iff gen ⊆ S.
  bool contains(Mask s) const noexcept { return is_subset(gen_, s); }

  /// Every member of `this` is a member of `other` (filter inclusion).
  bool included_in(const FilterGen& other) const noexcept { return is_subset(other.gen_, gen_); }

  friend bool operator==(const FilterGen&, const FilterGen&) = default;

 private:
  Carrier carrier_;
  Mask gen_;
};

/// 2^n - 1
std::size_t filter_count(std::size_t n);

/// One filter per nonempty subset, ascending by generator.
std::vector<FilterGen> all_filters(std::size_t n);

/// The points whose principal ultrafilter extends the filter; equals gen.
Mask ultra_set(const FilterGen& f);

/// ⋂ {x̂ : x in points}: the filter of sets containing every point of `points`.
FilterGen meet_of_principals(std::size_t n, Mask points);

/// The two filters together are centered: gen(a) ∩ gen(b) ≠ ∅.
bool compatible(const FilterGen& a, const FilterGen& b);

/// "gen{0,2}"
std::string to_text(const FilterGen& f);
/// Parses "gen{...}" on an n-point carrier.
FilterGen filter_from_text(std::string_view text, std::size_t n);

/// A set of filters over one carrier, as a mask over filter indices.
using FilterSet = Mask;

enum class Flavor { lower, upper, full };
std::string_view to_string(Flavor f);
Flavor flavor_from_string(std::string_view s);

enum class Hat { minus, plus };

/// The nonempty closed sets of a finite space, with the lower, upper and full
/// Vietoris topologies on them. Points are listed ascending by mask value.
class HyperSpace {
 public:
  explicit HyperSpace(Topology base);

  const Topology& base() const noexcept { return base_; }
  const std::vector<Mask>& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  Mask all() const noexcept { return full_mask(points_.size()); }
  std::optional<std::size_t> index_of(Mask closed_set) const;

  /// Lower: generated by {O^+ : O open}. Upper: by {O^- : O open}. Full: both.
  const Topology& topology(Flavor f) const;

 private:
  Topology base_;
  std::vector<Mask> points_;
  Topology lower_;
  Topology upper_;
  Topology full_;
};

/// A^- = {B : B ⊆ A} (minus) or A^+ = {B : B ∩ A ≠ ∅} (plus), as point indices.
Mask hatted_set(const HyperSpace& h, Mask a, Hat which);

/// <F> = {B : B ⊆ ⋃F and B meets every O in F}. Every member must be open.
Mask vietoris_basic(const HyperSpace& h, std::span<const Mask> family);
/// <F> computed as (⋃F)^- ∩ ⋂_{O∈F} O^+.
Mask vietoris_basic_by_hats(const HyperSpace& h, std::span<const Mask> family);

/// Closure from the explicit formulas:
///   lower: ⋂ {⋃_{C∈F} C^- : F finite ⊆ P_cl, S ⊆ ⋃_{C∈F} C^-}
///   upper: ⋂ {C^+ : C closed, S ⊆ C^+}, where C = ∅ (∅^+ = ∅) settles S = ∅
///   full:  lower ∩ upper
Mask vietoris_closure_formula(const HyperSpace& h, Mask s, Flavor which);
/// Closure in the materialised topology.
Mask vietoris_closure_generic(const HyperSpace& h, Mask s, Flavor which);
/// Both routes; throws InvariantError if they disagree.
Mask vietoris_closure(const HyperSpace& h, Mask s, Flavor which);

/// Vietoris closure of a set of filters over n points, evaluated by the
/// filter-side description: lower quantifies over every finite family F of
/// filters ("each member of S extends some C in F implies D extends some C in
/// F"), upper over every filter C ("each member of S is compatible with C
/// implies D is"; the empty S has empty closure), full is the conjunction. n <= 4.
FilterSet filter_vietoris_closure(std::size_t n, FilterSet s, Flavor which);
/// The same closure transported from the hyperspace of the discrete n-point
/// space along D ↦ ultra_set(D).
FilterSet filter_vietoris_closure_transport(std::size_t n, FilterSet s, Flavor which);

}  // namespace ultrarel

#pragma once

#include <vector>

#include "ultrarel/extensions.hpp"
#include "ultrarel/filters.hpp"
#include "ultrarel/harness.hpp"
#include "ultrarel/rel.hpp"
#include "ultrarel/topology.hpp"

namespace ultrarel::detail {

// Memoised per thread; the suites evaluate the same relation many times.
const FilterRel& star_of(const Rel& r);
const FilterRel& tilde_of(const Rel& r);
const FilterRel& star_literal_of(const Rel& r);
const Rel& star_ultra_of(const Rel& r);
const Rel& tilde_ultra_of(const Rel& r);
const HyperSpace& hyperspace_of(const Topology& t);

/// (i, j) of r ∘ s: some k with s(i, k) and r(k, j).
bool compose_entry(const FilterRel& r, const FilterRel& s, std::size_t i, std::size_t j);

bool is_total(const Rel& r);
bool is_functional(const Rel& r);

}  // namespace ultrarel::detail

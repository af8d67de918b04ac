#pragma once

#include <string>
#include <string_view>

#include "ultrarel/extensions.hpp"
#include "ultrarel/filters.hpp"
#include "ultrarel/rel.hpp"
#include "ultrarel/report.hpp"
#include "ultrarel/topology.hpp"

namespace ultrarel {

/// Parses JSON text. Syntax errors become ParseError with "source:line:col".
Json parse_json_text(std::string_view text, std::string_view source = "<input>");
/// Reads a whole file and parses it.
Json read_json_file(const std::string& path);

/// Two-space indented text with a trailing newline; arrays of scalars stay on
/// one line. Stable for equal values.
std::string dump(const Json& j);

/// A subset as a sorted array of elements.
Json set_to_json(Mask m);
/// Elements must lie below n and appear once.
Mask set_from_json(const Json& j, std::size_t n, const std::string& where);

/// {"n": n, "pairs": [[x, y], ...]} with pairs sorted.
Json rel_to_json(const Rel& r);
/// Rejects out-of-range elements and duplicate pairs. Errors name the field,
/// e.g. "pairs[2][1]".
Rel rel_from_json(const Json& j);

/// {"n": n, "opens": [[...], ...]}: every open set, sorted by mask value.
Json topology_to_json(const Topology& t);

struct ParsedTopology {
  Topology topology;
  /// The listed sets were not already a topology and had to be closed up.
  bool closed_up = false;
};
/// Accepts any generating family under "opens".
ParsedTopology topology_from_json(const Json& j);

/// The cells of a product-space relation as sorted [[x, y], ...].
Json cells_to_json(const ProductSpace& space, Mask cells);
Mask cells_from_json(const ProductSpace& space, const Json& j, const std::string& where = "rel");

/// "gen{0,2}"
Json filter_to_json(const FilterGen& f);
FilterGen filter_from_json(const Json& j, std::size_t n, const std::string& where = "filter");

/// {"n": n, "index": ["gen{0}", ...], "pairs": [[i, j], ...], "matrix": [[0|1, ...], ...]}.
/// "index" and "matrix" are optional on input but checked when present.
Json filter_rel_to_json(const FilterRel& r);
FilterRel filter_rel_from_json(const Json& j);

/// The chosen Vietoris topology in the Topology format (over point indices)
/// plus "points": the closed sets of the base, and "base".
Json hyperspace_to_json(const HyperSpace& h, Flavor which);

}  // namespace ultrarel

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultrarel/extensions.hpp"
#include "ultrarel/filters.hpp"
#include "ultrarel/rel.hpp"
#include "ultrarel/report.hpp"
#include "ultrarel/topology.hpp"

namespace ultrarel {

/// Which inputs a law takes, and so which fields its witnesses carry.
enum class InstanceKind {
  carrier,         // n
  rel,             // rel
  rel_pair,        // rel, rel2
  rel_filter,      // rel, C
  rel_cd,          // rel, C, D
  rel_pair_cd,     // rel, rel2, C, D
  rel_topology,    // rel, topology
  hom,             // rel (on X), rel2 (on Y), h
  space_pair,      // left, right
  product,         // left, right, rel (pairs of the product carrier)
  product_pair,    // left, right, rel, rel2
  base,            // base
  base_subset,     // base, set (subset of the base carrier)
  base_subsets,    // base, set, set2
  hyper_set,       // base, set (indices of hyperspace points)
  hyper_family,    // base, family (open sets)
  multimap,        // domain, codomain, values
  carrier_set,     // n, set
  carrier_sets,    // n, set, set2
  carrier_filter,  // n, C
  filter_set,      // n, filters
};

/// One input tuple for a law. Only the fields named by the law's kind are used.
struct Instance {
  std::size_t n = 0;
  std::optional<Rel> r, s;
  std::optional<FilterGen> c, d;
  /// Product factors, multimap domain/codomain (left/right), or a single base (left).
  std::optional<Topology> left, right;
  /// Product relation cells, or point / carrier / filter-index subsets.
  Mask cells = 0, cells2 = 0;
  /// Open families, or multimap values.
  std::vector<Mask> family;
  std::vector<std::size_t> h;
};

Json instance_to_json(InstanceKind kind, const Instance& in);
Instance instance_from_json(InstanceKind kind, const Json& j);

/// A named statement evaluated on single instances. The same evaluator runs
/// in the suites and when a witness is replayed.
struct Law {
  std::string name;
  std::string level;
  InstanceKind kind;
  std::function<bool(const Instance&)> holds;
};

const std::vector<Law>& law_registry();
/// Throws UsageError when (name, level) is not registered.
const Law& find_law(std::string_view name, std::string_view level);

/// Witness object: the instance fields plus "law", "level" and "holds".
Json make_witness(const Law& law, const Instance& in, bool holds);

struct SuiteReport {
  std::string suite;
  std::size_t n_max = 0;
  std::vector<LawResult> laws;
  /// Suite-specific tables (implication matrix, distributivity table, ...).
  Json tables = Json::object();
  /// What was enumerated: sizes, sample counts, seeds.
  Json scope = Json::object();
};

/// violated > witnessed-strict > finding > verified.
Verdict overall(const SuiteReport& r);
Verdict overall(const std::vector<LawResult>& laws);
Json to_json(const SuiteReport& r);

/// 0 verified or finding, 1 witnessed-strict, 2 violated.
int exit_code(Verdict v);

const std::vector<std::string>& suite_names();
bool topology_quantified(std::string_view suite);
/// 3 for relation-only suites, 2 for topology-quantified ones.
std::size_t default_n_max(std::string_view suite);
/// ULTRAREL_MAX_N if set (clamped to 6), otherwise 4.
std::size_t max_n_cap();

/// Throws UsageError for an unknown suite and SizeError past the caps.
SuiteReport run_suite(std::string_view name, std::optional<std::size_t> n_max = std::nullopt);

struct SearchOptions {
  std::size_t n_max = 2;
  bool all = false;
  std::size_t topo_limit = SIZE_MAX;
  /// Witnesses kept in the report (all are counted).
  std::size_t keep = 256;
};

const std::vector<std::string>& property_names();
/// Throws UsageError for an unknown property.
SearchReport search(std::string_view property, const SearchOptions& options);
/// Strictness properties: witnessed-strict if a witness was found, violated
/// otherwise. Exploratory properties: finding or verified.
Verdict search_verdict(std::string_view property, const SearchReport& report);
Json search_to_json(std::string_view property, const SearchReport& report);

struct ReplayResult {
  std::string law;
  std::string level;
  bool recorded = false;
  bool holds = false;
  bool reproduced() const { return holds == recorded; }
};

/// Accepts a single witness object or any report; every object inside a
/// "witnesses" array is replayed. Malformed witnesses raise ParseError.
std::vector<ReplayResult> replay(const Json& doc);
Json to_json(const ReplayResult& r);

}  // namespace ultrarel

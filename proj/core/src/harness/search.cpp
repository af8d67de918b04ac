#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "ultrarel/error.hpp"
#include "ultrarel/harness.hpp"

namespace ultrarel {

namespace {

struct Property {
  const char* name;
  /// A witness is expected; finding none is a violation.
  bool strict;
  InstanceKind kind;
  std::vector<std::pair<const char*, const char*>> laws;
};

const std::vector<Property>& properties() {
  static const std::vector<Property> props = {
      {"star-complement-strict", true, InstanceKind::rel_cd, {{"(-R)* ⊆ -R*", "filter"}}},
      {"star-intersection-strict", true, InstanceKind::rel_pair_cd, {{"R* ∩ S* ⊆ (R ∩ S)*", "filter"}}},
      {"tilde-compose-strict", true, InstanceKind::rel_pair_cd, {{"(R ∘ S)~ ⊆ R~ ∘ S~", "filter"}}},
      {"star-compose-filter", false, InstanceKind::rel_pair_cd, {{"(R ∘ S)* = R* ∘ S*", "filter"}}},
      {"tilde-inverse-filter", false, InstanceKind::rel_cd, {{"(R^-1)~ = (R~)^-1", "filter"}}},
      {"tilde-complement-filter", false, InstanceKind::rel_cd, {{"(-R)~ = -R~", "filter"}}},
      {"tilde-union-filter", false, InstanceKind::rel_pair_cd, {{"(R ∪ S)~ = R~ ∪ S~", "filter"}}},
      {"thm25-filter-divergence",
       false,
       InstanceKind::rel_cd,
       {{"R*(C, D) -> some w ∋ R projects to (C, D)", "filter"},
        {"some w ∋ R projects to (C, D) -> R*(C, D)", "filter"}}},
      {"lclrcl-nonidempotent",
       false,
       InstanceKind::product,
       {{"lcl(rcl(lcl R)) = rcl(lcl R) and rcl(lcl(rcl R)) = lcl(rcl R)", "product-space"}}},
      {"lclrcl-meet", false, InstanceKind::space_pair, {{"τ_lcl ∩ τ_rcl = τ", "product-space"}}},
  };
  return props;
}

const Property& find_property(std::string_view name) {
  for (const Property& p : properties()) {
    if (p.name == name) return p;
  }
  throw UsageError("unknown property '" + std::string(name) + "'");
}

bool topological(InstanceKind k) { return k == InstanceKind::product || k == InstanceKind::space_pair; }

/// Visits instances in canonical order until `visit` returns true.
template <class Visit>
bool enumerate(InstanceKind kind, const SearchOptions& opt, Visit&& visit) {
  if (topological(kind)) {
    std::vector<Topology> tops;
    for (std::size_t n = 1; n <= opt.n_max; ++n) {
      std::vector<Topology> all = enumerate_topologies(n);
      if (all.size() > opt.topo_limit) all.resize(opt.topo_limit, all.front());
      for (Topology& t : all) tops.push_back(std::move(t));
    }
    for (const Topology& a : tops) {
      for (const Topology& b : tops) {
        Instance in;
        in.left = a;
        in.right = b;
        if (kind == InstanceKind::space_pair) {
          if (visit(in)) return true;
          continue;
        }
        bool stop = false;
        for_each_subset(ProductSpace(a, b).all(), [&](Mask r) {
          if (stop) return;
          in.cells = r;
          stop = visit(in);
        });
        if (stop) return true;
      }
    }
    return false;
  }
  const bool pair = kind == InstanceKind::rel_pair_cd;
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    const std::size_t total = std::size_t{1} << (n * n);
    const std::vector<FilterGen> fs = all_filters(n);
    Instance in;
    in.n = n;
    for (std::size_t r = 0; r < total; ++r) {
      in.r = Rel(n, r);
      for (std::size_t s = 0; s < (pair ? total : 1); ++s) {
        if (pair) in.s = Rel(n, s);
        for (const FilterGen& c : fs) {
          in.c = c;
          for (const FilterGen& d : fs) {
            in.d = d;
            if (visit(in)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Property& p : properties()) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

SearchReport search(std::string_view property, const SearchOptions& options) {
  const Property& prop = find_property(property);
  const bool overridden = std::getenv("ULTRAREL_MAX_N") != nullptr;
  const std::size_t cap = topological(prop.kind) && !overridden ? 3 : max_n_cap();
  if (options.n_max == 0) throw UsageError("--max-n must be at least 1");
  if (options.n_max > cap) {
    throw SizeError("property " + std::string(property) + " accepts n ≤ " + std::to_string(cap) +
                    " (set ULTRAREL_MAX_N to raise the cap, at most 6)");
  }
  if (options.topo_limit == 0) throw UsageError("--topo-limit must be at least 1");

  std::vector<const Law*> laws;
  for (const auto& [name, level] : prop.laws) laws.push_back(&find_law(name, level));

  SearchReport rep;
  rep.property = prop.name;
  const bool stopped = enumerate(prop.kind, options, [&](const Instance& in) {
    ++rep.searched;
    bool found = false;
    for (const Law* law : laws) {
      if (law->holds(in)) continue;
      found = true;
      ++rep.witness_count;
      if (rep.witnesses.size() < options.keep) rep.witnesses.push_back(make_witness(*law, in, false));
    }
    return found && !options.all;
  });
  rep.exhausted = !stopped;
  Json names = Json::array();
  for (const Law* law : laws) names.push_back({{"law", law->name}, {"level", law->level}});
  rep.detail["n_max"] = options.n_max;
  if (options.topo_limit != SIZE_MAX) rep.detail["topo_limit"] = options.topo_limit;
  rep.detail["stop_at_first"] = !options.all;
  rep.detail["kept"] = rep.witnesses.size();
  rep.detail["laws"] = names;
  return rep;
}

Verdict search_verdict(std::string_view property, const SearchReport& report) {
  if (find_property(property).strict) {
    return report.witness_count > 0 ? Verdict::witnessed_strict : Verdict::violated;
  }
  return report.witness_count > 0 ? Verdict::finding : Verdict::verified;
}

Json search_to_json(std::string_view property, const SearchReport& report) {
  Json j = to_json(report);
  Json out;
  out["property"] = j["property"];
  out["kind"] = find_property(property).strict ? "strictness" : "exploratory";
  out["verdict"] = to_string(search_verdict(property, report));
  out["searched"] = j["searched"];
  out["witnesses"] = j["witnesses"];
  return out;
}

}  // namespace ultrarel

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "internal.hpp"
#include "sweep.hpp"
#include "ultrarel/error.hpp"
#include "ultrarel/harness.hpp"
#include "ultrarel/io.hpp"
#include "ultrarel/sections.hpp"

namespace ultrarel {

namespace {

using detail::Checker;
using detail::Expect;
using detail::sweep;

constexpr std::uint64_t kSampleSeed = 20240601;
constexpr std::size_t kSamples = 10000;

Instance rel_instance(const Rel& r) {
  Instance in;
  in.n = r.size();
  in.r = r;
  return in;
}

std::size_t relation_count(std::size_t n) { return std::size_t{1} << (n * n); }

std::vector<Topology> topologies_upto(std::size_t n_max) {
  std::vector<Topology> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (Topology& t : enumerate_topologies(n)) out.push_back(std::move(t));
  }
  return out;
}

/// Names and levels checked in a phase, with one expectation each.
struct Spec {
  const char* name;
  const char* level;
  Expect expect;
};

std::vector<std::size_t> declare_all(Checker& ck, std::initializer_list<Spec> specs) {
  std::vector<std::size_t> ids;
  for (const Spec& s : specs) ids.push_back(ck.declare(s.name, s.level, s.expect));
  return ids;
}

/// For each relation on n points, every pair (C, D) of filters (or only the
/// principal ones).
void rel_cd_phase(Checker& ck, std::size_t n, bool principal_only, const std::vector<std::size_t>& ids) {
  std::vector<FilterGen> fs;
  if (principal_only) {
    for (std::size_t x = 0; x < n; ++x) fs.push_back(FilterGen::principal(n, x));
  } else {
    fs = all_filters(n);
  }
  sweep(ck, relation_count(n), [&](Checker& local, std::size_t bits) {
    Instance in = rel_instance(Rel(n, bits));
    for (const FilterGen& c : fs) {
      in.c = c;
      for (const FilterGen& d : fs) {
        in.d = d;
        for (std::size_t id : ids) local.check(id, in);
      }
    }
  });
}

void rel_phase(Checker& ck, std::size_t n, const std::vector<std::size_t>& ids) {
  sweep(ck, relation_count(n), [&](Checker& local, std::size_t bits) {
    const Instance in = rel_instance(Rel(n, bits));
    for (std::size_t id : ids) local.check(id, in);
  });
}

void rel_pair_phase(Checker& ck, std::size_t n, const std::vector<std::size_t>& ids) {
  const std::size_t total = relation_count(n);
  sweep(ck, total, [&](Checker& local, std::size_t r) {
    Instance in = rel_instance(Rel(n, r));
    for (std::size_t s = 0; s < total; ++s) {
      in.s = Rel(n, s);
      for (std::size_t id : ids) local.check(id, in);
    }
  });
}

void rel_pair_cd_phase(Checker& ck, std::size_t n, const std::vector<std::size_t>& ids) {
  const std::size_t total = relation_count(n);
  const std::vector<FilterGen> fs = all_filters(n);
  sweep(ck, total, [&](Checker& local, std::size_t r) {
    Instance in = rel_instance(Rel(n, r));
    for (std::size_t s = 0; s < total; ++s) {
      in.s = Rel(n, s);
      for (const FilterGen& c : fs) {
        in.c = c;
        for (const FilterGen& d : fs) {
          in.d = d;
          for (std::size_t id : ids) local.check(id, in);
        }
      }
    }
  });
}

/// Every topology pair on 1..n_max points, every relation (and pair of
/// relations, when `pair_ids` is nonempty) in the product.
void product_phase(Checker& ck, std::size_t n_max, bool square_only, const std::vector<std::size_t>& ids,
                   const std::vector<std::size_t>& pair_ids, const std::vector<std::size_t>& space_ids = {}) {
  const std::vector<Topology> tops = topologies_upto(n_max);
  std::vector<std::pair<std::size_t, std::size_t>> combos;
  for (std::size_t a = 0; a < tops.size(); ++a) {
    for (std::size_t b = 0; b < tops.size(); ++b) {
      if (!square_only || tops[a].size() == tops[b].size()) combos.emplace_back(a, b);
    }
  }
  sweep(ck, combos.size(), [&](Checker& local, std::size_t k) {
    Instance in;
    in.left = tops[combos[k].first];
    in.right = tops[combos[k].second];
    for (std::size_t id : space_ids) local.check(id, in);
    const Mask all = ProductSpace(*in.left, *in.right).all();
    for_each_subset(all, [&](Mask r) {
      in.cells = r;
      for (std::size_t id : ids) local.check(id, in);
      if (pair_ids.empty()) return;
      for_each_subset(all, [&](Mask s) {
        in.cells2 = s;
        for (std::size_t id : pair_ids) local.check(id, in);
      });
    });
  });
}

/// Seeded draws of (topology, topology, relation, relation) on 3-point factors.
struct Draw {
  std::size_t left, right;
  Mask cells, cells2;
};

std::vector<Draw> draws(std::size_t topology_count, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Draw> out(count);
  for (Draw& d : out) {
    d.left = rng() % topology_count;
    d.right = rng() % topology_count;
    d.cells = rng() & full_mask(9);
    d.cells2 = rng() & full_mask(9);
  }
  return out;
}

void sampled_phase(Checker& ck, bool square, const std::vector<std::size_t>& ids,
                   const std::vector<std::size_t>& pair_ids, std::uint64_t seed, Json& scope) {
  const std::vector<Topology> tops = enumerate_topologies(3);
  const std::vector<Draw> ds = draws(tops.size(), kSamples, seed);
  sweep(ck, ds.size(), [&](Checker& local, std::size_t k) {
    Instance in;
    in.left = tops[ds[k].left];
    in.right = square ? tops[ds[k].left] : tops[ds[k].right];
    in.cells = ds[k].cells;
    in.cells2 = ds[k].cells2;
    for (std::size_t id : ids) local.check(id, in);
    for (std::size_t id : pair_ids) local.check(id, in);
  });
  scope["sampled"] = {{"factor_size", 3}, {"draws", kSamples}, {"seed", seed}, {"generator", "mt19937_64"}};
}

std::string range(std::size_t lo, std::size_t hi) {
  return lo == hi ? "n = " + std::to_string(lo) : "n = " + std::to_string(lo) + ".." + std::to_string(hi);
}

// ---------------------------------------------------------------------------

void suite_lemma21(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3);
  Checker ck;
  std::vector<std::size_t> collapse = declare_all(ck, {{"R* = R", "principal", Expect::hold},
                                                       {"R~ = R", "principal", Expect::hold}});
  std::vector<std::size_t> atoms;
  for (Condition c : kAllConditions) {
    atoms.push_back(ck.declare(std::string(to_string(c)) + "(x̂, ŷ) = R(x, y)", "principal", Expect::hold));
  }
  std::vector<std::size_t> principal, filter;
  std::vector<std::pair<Condition, Condition>> edges;
  for (Condition a : kAllConditions) {
    for (Condition b : kAllConditions) {
      if (a == b) continue;
      const std::string name = std::string(to_string(a)) + " -> " + std::string(to_string(b));
      principal.push_back(ck.declare(name, "principal", Expect::hold));
      edges.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : edges) {
    filter.push_back(ck.declare(std::string(to_string(a)) + " -> " + std::string(to_string(b)), "filter",
                                Expect::find, "filter level; the implications are stated for ultrafilters"));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    rel_phase(ck, n, collapse);
    rel_cd_phase(ck, n, true, atoms);
  }
  for (std::size_t n = 1; n <= M; ++n) {
    rel_cd_phase(ck, n, true, principal);
    rel_cd_phase(ck, n, false, filter);
  }
  rep.laws = ck.results();

  // The implication matrix at filter level: 1 where a -> b held everywhere.
  Json names = Json::array();
  for (Condition c : kAllConditions) names.push_back(to_string(c));
  Json matrix = Json::array();
  std::size_t k = 0;
  for (Condition a : kAllConditions) {
    Json row = Json::array();
    for (Condition b : kAllConditions) {
      if (a == b) {
        row.push_back(1);
        continue;
      }
      row.push_back(rep.laws[filter[k++]].failures == 0 ? 1 : 0);
    }
    matrix.push_back(row);
  }
  static constexpr std::pair<Condition, Condition> kDiagram[] = {
      {Condition::c0, Condition::ciii},  {Condition::ciii, Condition::civ}, {Condition::civ, Condition::ciii},
      {Condition::civ, Condition::cv},   {Condition::civ, Condition::cvi}, {Condition::cvi, Condition::ci},
      {Condition::cv, Condition::ci},    {Condition::ci, Condition::cii},  {Condition::cii, Condition::ci}};
  Json diagram = Json::array();
  for (const auto& [a, b] : kDiagram) {
    const auto it = std::find(edges.begin(), edges.end(), std::pair{a, b});
    const std::size_t at = static_cast<std::size_t>(it - edges.begin());
    const LawResult& law = rep.laws[filter[at]];
    diagram.push_back({{"edge", law.law},
                       {"principal", to_string(rep.laws[principal[at]].verdict)},
                       {"filter", law.failures == 0 ? "holds" : "fails"}});
  }
  rep.tables["filter_implications"] = {{"conditions", names}, {"matrix", matrix}, {"scope", range(1, M)}};
  rep.tables["diagram_edges"] = diagram;
  rep.scope["collapse"] = range(1, N) + ", every relation";
  rep.scope["implications"] = range(1, M) + ", every relation and filter pair";
}

// ---------------------------------------------------------------------------

void suite_thm22(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3);
  Checker ck;
  const auto carrier = declare_all(ck, {{"R* = R for R = ∅, U_X, =_X", "principal", Expect::hold},
                                        {"R~ = R for R = ∅, U_X, =_X", "principal", Expect::hold},
                                        {"∅* = ∅", "filter", Expect::hold},
                                        {"∅~ = ∅", "filter", Expect::hold},
                                        {"(U_X)* = U_εX", "filter", Expect::hold},
                                        {"(U_X)~ = U_εX", "filter", Expect::hold},
                                        {"(=_X)*(C, D) iff gen C meets gen D", "filter", Expect::hold},
                                        {"(=_X)~(C, D) iff C = D is principal", "filter", Expect::hold}});
  const auto principal = declare_all(ck, {{"R ⊆ -((-R)*)", "principal", Expect::hold},
                                          {"-((-R)*) ⊆ R~", "principal", Expect::hold},
                                          {"R~ ⊆ R*", "principal", Expect::hold},
                                          {"-((-R)*) ⊆ (R^-1~)^-1", "principal", Expect::hold},
                                          {"(R^-1~)^-1 ⊆ R*", "principal", Expect::hold},
                                          {"R* = ((R^-1)*)^-1", "principal", Expect::hold},
                                          {"R~ = -((-R)~)", "principal", Expect::hold}});
  const auto filter = declare_all(ck, {{"-((-R)*) ⊆ R~", "filter", Expect::find},
                                       {"R~ ⊆ R*", "filter", Expect::find},
                                       {"-((-R)*) ⊆ (R^-1~)^-1", "filter", Expect::find},
                                       {"(R^-1~)^-1 ⊆ R*", "filter", Expect::find},
                                       {"R* = ((R^-1)*)^-1", "filter", Expect::find},
                                       {"R~ = -((-R)~)", "filter", Expect::find}});
  for (std::size_t n = 1; n <= N; ++n) {
    Instance in;
    in.n = n;
    for (std::size_t id : carrier) ck.check(id, in);
    rel_phase(ck, n, principal);
  }
  for (std::size_t n = 1; n <= M; ++n) rel_phase(ck, n, filter);
  rep.laws = ck.results();

  // Finite rows of the extension table, evaluated on two points.
  const std::size_t n = std::min<std::size_t>(N, 2);
  Json rows = Json::array();
  const std::pair<const char*, Rel> named[] = {
      {"∅", Rel(n)}, {"U_X", Rel::universal(n)}, {"=_X", Rel::identity(n)}};
  for (const auto& [label, r] : named) {
    rows.push_back({{"R", label},
                    {"n", n},
                    {"star_ultra", rel_to_json(star_ultra(r))["pairs"]},
                    {"tilde_ultra", rel_to_json(tilde_ultra(r))["pairs"]},
                    {"star_filter", filter_rel_to_json(star_filter(r))["pairs"]},
                    {"tilde_filter", filter_rel_to_json(tilde_filter(r))["pairs"]}});
  }
  Json index = Json::array();
  for (const FilterGen& f : all_filters(n)) index.push_back(to_text(f));
  rep.tables["extension_rows"] = {{"filter_index", index}, {"rows", rows}};
  rep.scope["carrier_rows"] = range(1, N);
  rep.scope["diagram_principal"] = range(1, N) + ", every relation";
  rep.scope["diagram_filter"] = range(1, M) + ", every relation";
}

// ---------------------------------------------------------------------------

struct Cell {
  const char* op;
  int value;
  const char* law;
  const char* level;
  const char* note;
};

void suite_thm23_table(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3);
  Checker ck;
  const auto p1 = declare_all(ck, {{"(-R)~ = -R~", "principal", Expect::hold},
                                   {"(R^-1)~ = (R~)^-1", "principal", Expect::hold},
                                   {"(R^-1)* = (R*)^-1", "principal", Expect::hold},
                                   {"(R^+)* = (R*)^+", "principal", Expect::hold},
                                   {"(R^=)* = (R*)^=", "principal", Expect::hold}});
  const auto p2 = declare_all(ck, {{"(R ∩ S)~ = R~ ∩ S~", "principal", Expect::hold},
                                   {"(R ∪ S)~ = R~ ∪ S~", "principal", Expect::hold},
                                   {"(R ∘ S)~ = R~ ∘ S~", "principal", Expect::hold},
                                   {"(R ∪ S)* = R* ∪ S*", "principal", Expect::hold},
                                   {"(R ∘ S)* = R* ∘ S*", "principal", Expect::hold}});
  const auto f1 = declare_all(ck, {{"-R* ⊆ (-R)*", "filter", Expect::hold},
                                   {"(-R)* ⊆ -R*", "filter", Expect::fail},
                                   {"(R^-1)* = (R*)^-1", "filter", Expect::hold},
                                   {"(⋃ atoms of R)* = ⋃ atom*", "filter", Expect::hold},
                                   {"(-R)~ = -R~", "filter", Expect::find},
                                   {"(R^-1)~ = (R~)^-1", "filter", Expect::find}});
  const auto f2 = declare_all(ck, {{"(R ∩ S)* ⊆ R* ∩ S*", "filter", Expect::hold},
                                   {"R* ∩ S* ⊆ (R ∩ S)*", "filter", Expect::fail},
                                   {"(R ∪ S)* = R* ∪ S*", "filter", Expect::hold},
                                   {"(R ∩ S)~ = R~ ∩ S~", "filter", Expect::hold},
                                   {"R~ ∘ S~ ⊆ (R ∘ S)~", "filter", Expect::hold},
                                   {"(R ∘ S)~ ⊆ R~ ∘ S~", "filter", Expect::fail},
                                   {"(R ∘ S)* = R* ∘ S*", "filter", Expect::find},
                                   {"(R ∪ S)~ = R~ ∪ S~", "filter", Expect::find}});
  for (std::size_t n = 1; n <= N; ++n) rel_phase(ck, n, p1);
  for (std::size_t n = 1; n <= M; ++n) {
    rel_pair_phase(ck, n, p2);
    rel_cd_phase(ck, n, false, f1);
    rel_pair_cd_phase(ck, n, f2);
  }
  rep.laws = ck.results();

  auto result_of = [&](const char* law, const char* level) -> const LawResult& {
    for (const LawResult& r : rep.laws) {
      if (r.law == law && r.level == level) return r;
    }
    throw InvariantError(std::string("table cell refers to an unchecked law: ") + law);
  };
  static constexpr Cell kTilde[] = {
      {"-", 1, "(-R)~ = -R~", "principal", "fails for the artifact-defined filter operator; see the filter-level law"},
      {"∩", 1, "(R ∩ S)~ = R~ ∩ S~", "filter", ""},
      {"∪", 1, "(R ∪ S)~ = R~ ∪ S~", "principal", "fails for the artifact-defined filter operator; see the filter-level law"},
      {"∘", 0, "(R ∘ S)~ ⊆ R~ ∘ S~", "filter", ""},
      {"^-1", 0, "(R^-1)~ = (R~)^-1", "filter", "infinite-only (strictness needs non-principal ultrafilters)"}};
  static constexpr Cell kStar[] = {
      {"-", 0, "(-R)* ⊆ -R*", "filter", ""},
      {"∩", 0, "R* ∩ S* ⊆ (R ∩ S)*", "filter", ""},
      {"∪", 1, "(R ∪ S)* = R* ∪ S*", "filter", ""},
      {"∘", 1, "(R ∘ S)* = R* ∘ S*", "principal",
       "asserted at the principal level only; the filter-level analogue is the star-compose-filter search"},
      {"^-1", 1, "(R^-1)* = (R*)^-1", "filter", ""}};
  auto row = [&](const char* ext, const Cell (&cells)[5]) {
    Json out = Json::array();
    for (const Cell& c : cells) {
      const LawResult& r = result_of(c.law, c.level);
      std::string verdict(to_string(r.verdict));
      if (c.value == 0 && r.witnesses.empty()) verdict = "infinite-only";
      Json cell = {{"op", c.op}, {"value", c.value}, {"verdict", verdict}, {"law", c.law}, {"level", c.level}};
      if (!r.witnesses.empty() && c.value == 0) cell["witness"] = r.witnesses.front();
      if (*c.note != '\0') cell["note"] = c.note;
      out.push_back(cell);
    }
    return Json{{"extension", ext}, {"cells", out}};
  };
  rep.tables["distributivity"] = {{"columns", {"-", "∩", "∪", "∘", "^-1"}},
                                  {"rows", {row("tilde", kTilde), row("star", kStar)}}};
  rep.scope["single_relation_principal"] = range(1, N);
  rep.scope["pairs_and_filters"] = range(1, M) + ", every relation pair and filter pair";
}

// ---------------------------------------------------------------------------

void suite_lemma24(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3);
  Checker ck;
  const auto principal = declare_all(ck, {{"R meets every A × B at (x̂, ŷ) iff R(x, y)", "principal", Expect::hold}});
  const auto filter =
      declare_all(ck, {{"R*(C, D): closed form = literal quantifier form", "filter", Expect::hold},
                       {"R*(C, D) iff R meets every A × B", "filter", Expect::hold},
                       {"R*(C, D) iff R(x, y) for some x̂ ⊇ C, ŷ ⊇ D", "filter", Expect::hold}});
  for (std::size_t n = 1; n <= N; ++n) rel_cd_phase(ck, n, true, principal);
  for (std::size_t n = 1; n <= M; ++n) rel_cd_phase(ck, n, false, filter);
  rep.laws = ck.results();
  rep.scope["principal"] = range(1, N);
  rep.scope["filter"] = range(1, M) + ", every relation and filter pair";
}

void suite_thm25(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3);
  Checker ck;
  const auto principal =
      declare_all(ck, {{"R*(x̂, ŷ) iff a principal w ∋ R projects to (x̂, ŷ)", "principal", Expect::hold}});
  const auto filter = declare_all(
      ck, {{"projection witness: largest candidate = search over all w ∋ R", "filter", Expect::hold},
           {"R*(C, D) -> some w ∋ R projects to (C, D)", "filter", Expect::find},
           {"some w ∋ R projects to (C, D) -> R*(C, D)", "filter", Expect::find}});
  for (std::size_t n = 1; n <= N; ++n) rel_cd_phase(ck, n, true, principal);
  for (std::size_t n = 1; n <= M; ++n) rel_cd_phase(ck, n, false, filter);
  rep.laws = ck.results();
  rep.scope["principal"] = range(1, N);
  rep.scope["filter"] = range(1, M);
}

// ---------------------------------------------------------------------------

void suite_lemma32(SuiteReport& rep) {
  const std::size_t E = std::min<std::size_t>(rep.n_max, 2);
  Checker ck;
  const auto single = declare_all(ck, {{"lcl(∅) = ∅", "product-space", Expect::hold},
                                       {"rcl(∅) = ∅", "product-space", Expect::hold},
                                       {"R ⊆ lcl R", "product-space", Expect::hold},
                                       {"R ⊆ rcl R", "product-space", Expect::hold},
                                       {"lcl(lcl R) = lcl R", "product-space", Expect::hold},
                                       {"rcl(rcl R) = rcl R", "product-space", Expect::hold},
                                       {"(lcl R^{-1})^{-1} = rcl R", "product-space", Expect::hold},
                                       {"(rcl R^{-1})^{-1} = lcl R", "product-space", Expect::hold}});
  const auto pair = declare_all(ck, {{"lcl R ∪ lcl S = lcl(R ∪ S)", "product-space", Expect::hold},
                                     {"rcl R ∪ rcl S = rcl(R ∪ S)", "product-space", Expect::hold}});
  const auto space = declare_all(ck, {{"τ_lcl refines τ", "product-space", Expect::hold},
                                      {"closed sets of τ_lcl = fixed points of lcl", "product-space", Expect::hold},
                                      {"τ_rcl refines τ", "product-space", Expect::hold},
                                      {"closed sets of τ_rcl = fixed points of rcl", "product-space", Expect::hold},
                                      {"τ_lcl ∩ τ_rcl = τ", "product-space", Expect::find}});
  product_phase(ck, E, false, single, pair, space);
  rep.scope["exhaustive"] = "every pair of topologies on " + range(1, E) + " points, every relation and pair";
  if (rep.n_max >= 2) sampled_phase(ck, false, single, pair, kSampleSeed, rep.scope);
  rep.laws = ck.results();
}

void suite_corollary(SuiteReport& rep) {
  const std::size_t N = rep.n_max, E = std::min<std::size_t>(N, 2);
  Checker ck;
  const auto single = declare_all(ck, {{"rcl(lcl R) = (lcl((lcl R)^{-1}))^{-1}", "product-space", Expect::hold},
                                       {"rcl(lcl R) = rcl((rcl R^{-1})^{-1})", "product-space", Expect::hold},
                                       {"lcl(rcl R) = (rcl((rcl R)^{-1}))^{-1}", "product-space", Expect::hold},
                                       {"lcl(rcl R) = lcl((lcl R^{-1})^{-1})", "product-space", Expect::hold}});
  const std::size_t discrete = ck.declare("rcl(lcl R) = R on discrete products", "product-space", Expect::hold);
  const std::size_t bullet = ck.declare("graph of R^∙ = lcl R in discrete × t", "product-space", Expect::hold);
  product_phase(ck, E, false, single, {});
  if (N >= 2) sampled_phase(ck, false, single, {}, kSampleSeed + 1, rep.scope);
  for (std::size_t n1 = 1; n1 <= N; ++n1) {
    for (std::size_t n2 = 1; n2 <= N && n1 * n2 <= 9; ++n2) {
      Instance in;
      in.left = Topology::discrete(n1);
      in.right = Topology::discrete(n2);
      for_each_subset(full_mask(n1 * n2), [&](Mask r) {
        in.cells = r;
        ck.check(discrete, in);
      });
    }
  }
  for (std::size_t n = 1; n <= N; ++n) {
    const std::vector<Topology> tops = enumerate_topologies(n);
    sweep(ck, relation_count(n), [&](Checker& local, std::size_t bits) {
      const Rel r(n, bits);
      if (!detail::is_total(r)) return;
      Instance in = rel_instance(r);
      for (const Topology& t : tops) {
        in.right = t;
        local.check(bullet, in);
      }
    });
  }
  rep.laws = ck.results();
  rep.scope["exhaustive"] = "every pair of topologies on " + range(1, E) + " points, every relation";
  rep.scope["bullet"] = range(1, N) + ", every total relation and topology";
}

void suite_generalized(SuiteReport& rep) {
  const std::size_t E = std::min<std::size_t>(rep.n_max, 2);
  Checker ck;
  const auto single = declare_all(ck, {{"cl(R^-1) = (cl R)^-1", "product-space", Expect::hold}});
  const auto pair = declare_all(ck, {{"cl(R ∪ S) = cl R ∪ cl S", "product-space", Expect::hold},
                                     {"cl(R ∩ S) ⊆ cl R ∩ cl S", "product-space", Expect::hold},
                                     {"cl R ∩ cl S ⊆ cl(R ∩ S)", "product-space", Expect::find}});
  const auto compose = declare_all(ck, {{"cl(R ∘ S) ⊆ cl R ∘ cl S", "product-space", Expect::hold},
                                        {"cl R ∘ cl S ⊆ cl(R ∘ S)", "product-space", Expect::find}});
  const std::size_t discrete = ck.declare("cl(R ∘ S) = cl R ∘ cl S on discrete spaces", "product-space", Expect::hold);
  product_phase(ck, E, false, single, pair);
  product_phase(ck, E, true, {}, compose);
  rep.scope["exhaustive"] = "every product of topologies on " + range(1, E) + " points, every pair of relations";
  if (rep.n_max >= 2) {
    sampled_phase(ck, false, single, pair, kSampleSeed + 2, rep.scope);
    Json square_scope;
    sampled_phase(ck, true, {}, compose, kSampleSeed + 3, square_scope);
    rep.scope["sampled_square"] = square_scope["sampled"];
  }
  const std::size_t D = std::min<std::size_t>(rep.n_max, 3);
  for (std::size_t n = 1; n <= D; ++n) {
    Instance in;
    in.left = Topology::discrete(n);
    in.right = Topology::discrete(n);
    const Mask all = full_mask(n * n);
    sweep(ck, std::size_t{all} + 1, [&](Checker& local, std::size_t r) {
      Instance local_in = in;
      local_in.cells = r;
      for_each_subset(all, [&](Mask s) {
        local_in.cells2 = s;
        local.check(discrete, local_in);
      });
    });
  }
  rep.scope["discrete"] = range(1, D) + ", every pair of relations";
  rep.laws = ck.results();
}

// ---------------------------------------------------------------------------

void suite_vietoris(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3);
  Checker ck;
  const auto hyper = declare_all(ck, {{"cl_τ⁻ S by formula = closure in τ⁻", "hyperspace", Expect::hold},
                                      {"cl_τ⁺ S by formula = closure in τ⁺", "hyperspace", Expect::hold},
                                      {"cl_τ S by formula = closure in τ", "hyperspace", Expect::hold},
                                      {"cl_τ S = cl_τ⁻ S ∩ cl_τ⁺ S", "hyperspace", Expect::hold},
                                      {"cl_τ S ⊆ cl_τ⁻ S ∩ cl_τ⁺ S", "hyperspace", Expect::hold}});
  const std::size_t dual = ck.declare("A⁻ = P_cl ∖ (X ∖ A)⁺", "hyperspace", Expect::hold);
  const std::size_t plus = ck.declare("C⁺ ∪ D⁺ = (C ∪ D)⁺ with C ∪ D closed", "hyperspace", Expect::hold);
  const std::size_t basic = ck.declare("<F> = (⋃F)⁻ ∩ ⋂ O⁺", "hyperspace", Expect::hold);
  const std::size_t dense = ck.declare("finite sets are dense in P_cl", "hyperspace", Expect::hold);
  const auto transport =
      declare_all(ck, {{"lower filter closure = transported hyperspace closure", "filter", Expect::hold},
                       {"upper filter closure = transported hyperspace closure", "filter", Expect::hold},
                       {"full filter closure = transported hyperspace closure", "filter", Expect::hold},
                       {"transported full closure ⊆ filter-side full closure", "filter", Expect::hold}});
  const std::size_t anti1 = ck.declare("ultra_set(⋂ {x̂ : x ∈ A}) = A", "discrete", Expect::hold);
  const std::size_t anti2 = ck.declare("A ⊆ B iff ⋂ B̂ ⊆ ⋂ Â", "discrete", Expect::hold);
  const std::size_t anti3 = ck.declare("⋂ {x̂ : x ∈ ultra_set(C)} = C", "discrete", Expect::hold);

  const std::vector<Topology> bases = topologies_upto(M);
  sweep(ck, bases.size(), [&](Checker& local, std::size_t k) {
    Instance in;
    in.left = bases[k];
    in.n = bases[k].size();
    const HyperSpace& h = detail::hyperspace_of(bases[k]);
    local.check(dense, in);
    for_each_subset(h.all(), [&](Mask s) {
      in.cells = s;
      for (std::size_t id : hyper) local.check(id, in);
    });
    for_each_subset(bases[k].all(), [&](Mask a) {
      in.cells = a;
      local.check(dual, in);
    });
    const std::vector<Mask> closed = bases[k].closed_sets();
    for (Mask c : closed) {
      for (Mask d : closed) {
        in.cells = c;
        in.cells2 = d;
        local.check(plus, in);
      }
    }
    std::vector<Mask> opens = bases[k].opens();
    opens.erase(opens.begin());  // the empty set
    for_each_subset(full_mask(opens.size()), [&](Mask pick) {
      if (pick == 0) return;
      in.family.clear();
      for_each_bit(pick, [&](std::size_t i) { in.family.push_back(opens[i]); });
      local.check(basic, in);
    });
  });
  for (std::size_t n = 1; n <= M; ++n) {
    Instance in;
    in.n = n;
    for_each_subset(full_mask(filter_count(n)), [&](Mask s) {
      in.cells = s;
      for (std::size_t id : transport) ck.check(id, in);
    });
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    Instance in;
    in.n = n;
    for_each_subset(full_mask(n), [&](Mask a) {
      if (a == 0) return;
      in.cells = a;
      ck.check(anti1, in);
      for_each_subset(full_mask(n), [&](Mask b) {
        if (b == 0) return;
        in.cells2 = b;
        ck.check(anti2, in);
      });
    });
    for (const FilterGen& c : all_filters(n)) {
      in.c = c;
      ck.check(anti3, in);
    }
  }
  rep.laws = ck.results();
  rep.scope["bases"] = "every topology on " + range(1, M) + " points, every set of hyperspace points";
  rep.scope["filter_sets"] = range(1, M) + ", every set of filters";
  rep.scope["anti_isomorphism"] = range(1, 4) + ", every nonempty subset and filter";
}

// ---------------------------------------------------------------------------

void suite_filter_extension(SuiteReport& rep) {
  const std::size_t N = rep.n_max, M = std::min<std::size_t>(N, 3), H = std::min<std::size_t>(N, 2);
  Checker ck;
  const auto blocks = declare_all(ck, {{"principal block of R* = R", "filter", Expect::hold},
                                       {"principal block of R~ = R", "filter", Expect::hold}});
  const auto functional = declare_all(ck, {{"F~ = F* for functional F", "principal", Expect::hold},
                                           {"F~ = F* for functional F", "filter", Expect::find}});
  const std::size_t slice = ck.declare("R*(C) = {y : R*(C, ŷ)}", "filter", Expect::hold);
  const auto hom = declare_all(ck, {{"h̄ maps R* into S* and R~ into S~", "filter", Expect::hold},
                                    {"h̄(x̂) = h(x)^", "filter", Expect::hold}});
  std::uint64_t homomorphisms = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    rel_phase(ck, n, blocks);
    sweep(ck, relation_count(n), [&](Checker& local, std::size_t bits) {
      const Rel r(n, bits);
      if (!detail::is_functional(r)) return;
      for (std::size_t id : functional) local.check(id, rel_instance(r));
    });
  }
  for (std::size_t n = 1; n <= M; ++n) {
    const std::vector<FilterGen> fs = all_filters(n);
    sweep(ck, relation_count(n), [&](Checker& local, std::size_t bits) {
      Instance in = rel_instance(Rel(n, bits));
      for (const FilterGen& c : fs) {
        in.c = c;
        local.check(slice, in);
      }
    });
  }
  for (std::size_t n = 1; n <= H; ++n) {
    for (std::size_t m = 1; m <= H; ++m) {
      std::size_t maps = 1;
      for (std::size_t i = 0; i < n; ++i) maps *= m;
      for (std::size_t code = 0; code < maps; ++code) {
        std::vector<std::size_t> h(n);
        for (std::size_t i = 0, c = code; i < n; ++i, c /= m) h[i] = c % m;
        for (std::size_t rb = 0; rb < relation_count(n); ++rb) {
          for (std::size_t sb = 0; sb < relation_count(m); ++sb) {
            const Rel r(n, rb), s(m, sb);
            if (!is_homomorphism(h, r, s)) continue;
            ++homomorphisms;
            Instance in = rel_instance(r);
            in.s = s;
            in.h = h;
            for (std::size_t id : hom) ck.check(id, in);
          }
        }
      }
    }
  }
  rep.laws = ck.results();
  rep.scope["blocks"] = range(1, N) + ", every relation";
  rep.scope["slices"] = range(1, M) + ", every relation and filter";
  rep.scope["homomorphisms"] = {{"carriers", range(1, H)}, {"count", homomorphisms}};
}

// ---------------------------------------------------------------------------

void suite_continuity(SuiteReport& rep) {
  const std::size_t N = rep.n_max;
  Checker ck;
  const auto maps =
      declare_all(ck, {{"Vietoris continuous iff lower and upper semicontinuous", "multimap", Expect::hold},
                       {"lower: open-set form = closed-set form", "multimap", Expect::hold},
                       {"upper: open-set form = closed-set form", "multimap", Expect::hold},
                       {"vietoris: open-set form = closed-set form", "multimap", Expect::hold},
                       {"lower semicontinuous iff continuous into τ⁻", "multimap", Expect::hold},
                       {"upper semicontinuous iff continuous into τ⁺", "multimap", Expect::hold}});
  const auto star = declare_all(ck, {{"C ↦ R*(C) is continuous from (εX, τ) to (P X, τ)", "discrete", Expect::hold},
                                     {"C ↦ R*(C) is continuous from (εX, τ⁻) to (P X, τ⁻)", "discrete", Expect::hold},
                                     {"C ↦ R*(C) is continuous from (εX, τ⁺) to (P X, τ⁺)", "discrete", Expect::hold}});
  const std::vector<Topology> tops = topologies_upto(N);
  std::vector<std::pair<std::size_t, std::size_t>> combos;
  for (std::size_t a = 0; a < tops.size(); ++a) {
    for (std::size_t b = 0; b < tops.size(); ++b) combos.emplace_back(a, b);
  }
  std::uint64_t multimaps = 0;
  for (const auto& [a, b] : combos) {
    std::uint64_t k = 1;
    const std::size_t values = tops[b].closed_sets().size() - 1;
    for (std::size_t i = 0; i < tops[a].size(); ++i) k *= values;
    multimaps += k;
  }
  sweep(ck, combos.size(), [&](Checker& local, std::size_t k) {
    Instance in;
    in.left = tops[combos[k].first];
    in.right = tops[combos[k].second];
    std::vector<Mask> closed = in.right->closed_sets();
    closed.erase(closed.begin());
    const std::size_t n = in.left->size();
    std::vector<std::size_t> digits(n, 0);
    in.family.assign(n, closed.front());
    while (true) {
      for (std::size_t id : maps) local.check(id, in);
      std::size_t i = 0;
      while (i < n && ++digits[i] == closed.size()) {
        digits[i] = 0;
        in.family[i] = closed[0];
        ++i;
      }
      if (i == n) break;
      in.family[i] = closed[digits[i]];
    }
  });
  for (std::size_t n = 1; n <= N; ++n) rel_phase(ck, n, star);
  rep.laws = ck.results();
  rep.scope["multimaps"] = {{"spaces", "every topology on " + range(1, N) + " points, as domain and codomain"},
                            {"assignments", "exhaustive"},
                            {"count", multimaps}};
  rep.scope["star_map"] = range(1, N) + ", every relation";
}

struct SuiteDef {
  const char* name;
  bool topology;
  void (*run)(SuiteReport&);
};

constexpr SuiteDef kSuites[] = {
    {"lemma21", false, suite_lemma21},
    {"thm22", false, suite_thm22},
    {"thm23-table", false, suite_thm23_table},
    {"lemma24", false, suite_lemma24},
    {"thm25", false, suite_thm25},
    {"lemma32", true, suite_lemma32},
    {"corollary-lcl", true, suite_corollary},
    {"generalized-thm23", true, suite_generalized},
    {"vietoris", true, suite_vietoris},
    {"filter-extension", false, suite_filter_extension},
    {"continuity", true, suite_continuity},
};

const SuiteDef& find_suite(std::string_view name) {
  for (const SuiteDef& s : kSuites) {
    if (s.name == name) return s;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool topology_quantified(std::string_view suite) { return find_suite(suite).topology; }

std::size_t default_n_max(std::string_view suite) { return topology_quantified(suite) ? 2 : 3; }

std::size_t max_n_cap() {
  if (const char* env = std::getenv("ULTRAREL_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, 6);
  }
  return 4;
}

SuiteReport run_suite(std::string_view name, std::optional<std::size_t> n_max) {
  const SuiteDef& def = find_suite(name);
  const std::size_t n = n_max.value_or(default_n_max(name));
  const bool overridden = std::getenv("ULTRAREL_MAX_N") != nullptr;
  const std::size_t cap = def.topology && !overridden ? 3 : max_n_cap();
  if (n == 0) throw UsageError("--max-n must be at least 1");
  if (n > cap) {
    throw SizeError("suite " + std::string(name) + " accepts n ≤ " + std::to_string(cap) +
                    " (set ULTRAREL_MAX_N to raise the cap, at most 6)");
  }
  SuiteReport rep;
  rep.suite = def.name;
  rep.n_max = n;
  def.run(rep);
  return rep;
}

Verdict overall(const std::vector<LawResult>& laws) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::verified: return 0;
      case Verdict::finding: return 1;
      case Verdict::witnessed_strict: return 2;
      case Verdict::violated: return 3;
    }
    return 3;
  };
  Verdict out = Verdict::verified;
  for (const LawResult& r : laws) {
    if (rank(r.verdict) > rank(out)) out = r.verdict;
  }
  return out;
}

Verdict overall(const SuiteReport& r) { return overall(r.laws); }

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["verdict"] = to_string(overall(r));
  Json counts = Json::object();
  for (Verdict v : {Verdict::verified, Verdict::witnessed_strict, Verdict::finding, Verdict::violated}) {
    counts[std::string(to_string(v))] =
        std::count_if(r.laws.begin(), r.laws.end(), [v](const LawResult& l) { return l.verdict == v; });
  }
  j["summary"] = counts;
  j["scope"] = r.scope;
  Json laws = Json::array();
  for (const LawResult& l : r.laws) laws.push_back(to_json(l));
  j["laws"] = laws;
  if (!r.tables.empty()) j["tables"] = r.tables;
  return j;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::verified:
    case Verdict::finding: return 0;
    case Verdict::witnessed_strict: return 1;
    case Verdict::violated: return 2;
  }
  return 2;
}

}  // namespace ultrarel

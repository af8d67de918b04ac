// Command-line front end: extensions, closures, hyperspaces, suites, searches
// and witness replay. JSON goes to stdout, a one-line summary to stderr.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ultrarel/error.hpp"
#include "ultrarel/extensions.hpp"
#include "ultrarel/harness.hpp"
#include "ultrarel/io.hpp"
#include "ultrarel/sections.hpp"

namespace {

using namespace ultrarel;

constexpr int kUsage = 64;
constexpr int kData = 65;
constexpr int kSoftware = 70;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit(Json j, bool timing, Clock::time_point start) {
  if (timing) j["timing"] = {{"seconds", seconds_since(start)}};
  std::cout << dump(j);
}

Topology load_topology(const std::string& path) {
  ParsedTopology t = [&] {
    try {
      return topology_from_json(read_json_file(path));
    } catch (const ParseError& e) {
      if (e.where().rfind(path, 0) == 0) throw;
      throw ParseError(path + ": " + e.where(), e.what());
    }
  }();
  if (t.closed_up) std::cerr << "note: " << path << ": the listed sets were closed up to a topology\n";
  return std::move(t.topology);
}

Rel load_rel(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return rel_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), e.what());
  }
}

std::string plural(std::size_t k, const char* word) {
  const std::string w(word);
  const bool sibilant = w.back() == 's';
  return std::to_string(k) + " " + w + (k == 1 ? "" : sibilant ? "es" : "s");
}

struct Options {
  std::string kind, rel, topology, op, which, suite, property, witness;
  std::optional<std::size_t> max_n;
  std::size_t topo_limit = SIZE_MAX, keep = 256;
  bool all = false, timing = false;
};

int cmd_extend(const Options& o) {
  const Rel r = load_rel(o.rel);
  if (o.kind == "star-ultra") {
    std::cout << dump(rel_to_json(star_ultra(r)));
  } else if (o.kind == "tilde-ultra") {
    std::cout << dump(rel_to_json(tilde_ultra(r)));
  } else if (o.kind == "star-filter") {
    std::cout << dump(filter_rel_to_json(star_filter(r)));
  } else {
    std::cout << dump(filter_rel_to_json(tilde_filter(r)));
  }
  std::cerr << "extend " << o.kind << ": n = " << r.size() << "\n";
  return 0;
}

int cmd_closure(const Options& o) {
  const Topology t = load_topology(o.topology);
  const Rel r = load_rel(o.rel);
  if (r.size() != t.size()) {
    throw ParseError(o.rel, "relation has n = " + std::to_string(r.size()) + " but the topology has n = " +
                                std::to_string(t.size()));
  }
  const ProductSpace space(t, t);
  Mask out = 0;
  if (o.op == "lcl") {
    out = lcl(space, r.bits());
  } else if (o.op == "rcl") {
    out = rcl(space, r.bits());
  } else if (o.op == "cl") {
    out = space.closure(r.bits());
  } else {
    out = space.interior(r.bits());
  }
  Json j = rel_to_json(Rel(r.size(), out));
  j["op"] = o.op;
  std::cout << dump(j);
  std::cerr << o.op << ": " << plural(count(r.bits()), "pair") << " in, " << plural(count(out), "pair") << " out\n";
  return 0;
}

int cmd_hyper(const Options& o) {
  const HyperSpace h(load_topology(o.topology));
  const Flavor f = flavor_from_string(o.which);
  std::cout << dump(hyperspace_to_json(h, f));
  std::cerr << "hyperspace (" << o.which << "): " << plural(h.point_count(), "point") << "\n";
  return 0;
}

int cmd_check(const Options& o) {
  const auto start = Clock::now();
  const SuiteReport rep = run_suite(o.suite, o.max_n);
  const Verdict v = overall(rep);
  emit(to_json(rep), o.timing, start);
  std::size_t witnesses = 0;
  for (const LawResult& l : rep.laws) witnesses += l.witnesses.size();
  std::fprintf(stderr, "check %s (n_max %zu): %s, %s, %s kept, %.2f s\n", rep.suite.c_str(), rep.n_max,
               std::string(to_string(v)).c_str(), plural(rep.laws.size(), "law").c_str(),
               plural(witnesses, "witness").c_str(), seconds_since(start));
  return exit_code(v);
}

int cmd_search(const Options& o) {
  const auto start = Clock::now();
  SearchOptions so;
  so.n_max = o.max_n.value_or(2);
  so.all = o.all;
  so.topo_limit = o.topo_limit;
  so.keep = o.keep;
  const SearchReport rep = search(o.property, so);
  const Verdict v = search_verdict(o.property, rep);
  emit(search_to_json(o.property, rep), o.timing, start);
  std::fprintf(stderr, "search %s (n_max %zu): %s, %llu searched, %llu witnesses%s, %.2f s\n", o.property.c_str(),
               so.n_max, std::string(to_string(v)).c_str(), static_cast<unsigned long long>(rep.searched),
               static_cast<unsigned long long>(rep.witness_count), rep.exhausted ? ", exhausted" : "",
               seconds_since(start));
  return exit_code(v);
}

int cmd_replay(const Options& o) {
  const std::vector<ReplayResult> results = replay(read_json_file(o.witness));
  std::size_t reproduced = 0;
  Json list = Json::array();
  for (const ReplayResult& r : results) {
    reproduced += r.reproduced() ? 1 : 0;
    list.push_back(to_json(r));
  }
  Json j;
  j["witness_file"] = o.witness;
  j["replayed"] = results.size();
  j["reproduced"] = reproduced;
  j["results"] = list;
  std::cout << dump(j);
  std::cerr << "replay: " << reproduced << " of " << plural(results.size(), "witness") << " reproduced\n";
  return reproduced == results.size() ? 0 : 2;
}

int cmd_list() {
  Json j;
  Json suites = Json::array();
  for (const std::string& s : suite_names()) suites.push_back({{"suite", s}, {"default_n_max", default_n_max(s)}});
  j["suites"] = suites;
  j["properties"] = property_names();
  std::cout << dump(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for ultrafilter and filter extensions of relations"};
  app.require_subcommand(1);
  Options o;

  auto* extend = app.add_subcommand("extend", "Star or tilde extension of a relation");
  extend->add_option("--kind", o.kind, "Extension")
      ->required()
      ->check(CLI::IsMember({"star-ultra", "tilde-ultra", "star-filter", "tilde-filter"}));
  extend->add_option("--rel", o.rel, "Relation file")->required();

  auto* closure = app.add_subcommand("closure", "lcl, rcl, closure or interior in the product t x t");
  closure->add_option("--topology", o.topology, "Topology file")->required();
  closure->add_option("--op", o.op, "Operator")->required()->check(CLI::IsMember({"lcl", "rcl", "cl", "int"}));
  closure->add_option("--rel", o.rel, "Relation file")->required();

  auto* hyper = app.add_subcommand("hyper", "Vietoris hyperspace of a finite space");
  hyper->add_option("--topology", o.topology, "Topology file")->required();
  hyper->add_option("--which", o.which, "Vietoris flavour")
      ->required()
      ->check(CLI::IsMember({"lower", "upper", "full"}));

  auto* check = app.add_subcommand("check", "Run a law suite");
  check->add_option("--suite", o.suite, "Suite name")->required();
  check->add_option("--max-n", o.max_n, "Largest carrier");
  check->add_flag("--timing", o.timing, "Append wall time to the report");

  auto* search_cmd = app.add_subcommand("search", "Counterexample search");
  search_cmd->add_option("--property", o.property, "Property name")->required();
  search_cmd->add_option("--max-n", o.max_n, "Largest carrier (default 2)");
  search_cmd->add_flag("--all", o.all, "Continue past the first witness");
  search_cmd->add_option("--topo-limit", o.topo_limit, "Topologies per carrier size");
  search_cmd->add_option("--keep", o.keep, "Witnesses kept in the report");
  search_cmd->add_flag("--timing", o.timing, "Append wall time to the report");

  auto* replay_cmd = app.add_subcommand("replay", "Re-evaluate every witness in a report or witness file");
  replay_cmd->add_option("--witness", o.witness, "Report or witness file")->required();

  auto* list = app.add_subcommand("list", "Suites and search properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*extend) return cmd_extend(o);
    if (*closure) return cmd_closure(o);
    if (*hyper) return cmd_hyper(o);
    if (*check) return cmd_check(o);
    if (*search_cmd) return cmd_search(o);
    if (*replay_cmd) return cmd_replay(o);
    if (*list) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kSoftware;
  }
  return kUsage;
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <string>

#include "ultrarel/error.hpp"
#include "ultrarel/harness.hpp"
#include "ultrarel/io.hpp"

namespace {

using namespace ultrarel;

struct ScopedEnv {
  std::string name;
  ScopedEnv(std::string n, const char* value) : name(std::move(n)) { ::setenv(name.c_str(), value, 1); }
  ~ScopedEnv() { ::unsetenv(name.c_str()); }
};

TEST(Registry, NamesAreUnique) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const Law& l : law_registry()) EXPECT_TRUE(seen.insert({l.name, l.level}).second) << l.name;
  EXPECT_THROW(find_law("no such law", "filter"), UsageError);
}

TEST(Verdicts, PrecedenceAndExitCodes) {
  auto law = [](Verdict v) {
    LawResult r;
    r.verdict = v;
    return r;
  };
  EXPECT_EQ(overall(std::vector<LawResult>{law(Verdict::verified), law(Verdict::finding)}), Verdict::finding);
  EXPECT_EQ(overall(std::vector<LawResult>{law(Verdict::finding), law(Verdict::witnessed_strict)}),
            Verdict::witnessed_strict);
  EXPECT_EQ(overall(std::vector<LawResult>{law(Verdict::witnessed_strict), law(Verdict::violated)}),
            Verdict::violated);
  EXPECT_EQ(exit_code(Verdict::verified), 0);
  EXPECT_EQ(exit_code(Verdict::finding), 0);
  EXPECT_EQ(exit_code(Verdict::witnessed_strict), 1);
  EXPECT_EQ(exit_code(Verdict::violated), 2);
  for (Verdict v : {Verdict::verified, Verdict::witnessed_strict, Verdict::finding, Verdict::violated})
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
}

TEST(Suites, UnknownAndOversized) {
  EXPECT_THROW(run_suite("nope"), UsageError);
  EXPECT_THROW(run_suite("lemma24", 5), SizeError);
  EXPECT_THROW(run_suite("lemma32", 4), SizeError);
  EXPECT_THROW(search("nope", {}), UsageError);
}

TEST(Suites, DeterministicAcrossThreadCounts) {
  std::string one, three;
  {
    ScopedEnv env("ULTRAREL_THREADS", "1");
    one = dump(to_json(run_suite("lemma24", 2)));
  }
  {
    ScopedEnv env("ULTRAREL_THREADS", "3");
    three = dump(to_json(run_suite("lemma24", 2)));
  }
  EXPECT_EQ(one, three);
}

TEST(Search, StrictWitnessReplays) {
  SearchOptions o;
  o.n_max = 2;
  const SearchReport rep = search("star-complement-strict", o);
  ASSERT_EQ(search_verdict("star-complement-strict", rep), Verdict::witnessed_strict);
  ASSERT_EQ(rep.witnesses.size(), 1U);
  EXPECT_FALSE(rep.exhausted);
  const std::vector<ReplayResult> r = replay(rep.witnesses.front());
  ASSERT_EQ(r.size(), 1U);
  EXPECT_TRUE(r[0].reproduced());
  EXPECT_FALSE(r[0].holds);
}

TEST(Search, ExhaustedWhenNothingFound) {
  SearchOptions o;
  o.n_max = 2;
  const SearchReport rep = search("lclrcl-meet", o);
  EXPECT_TRUE(rep.exhausted);
  EXPECT_EQ(rep.witness_count, 0U);
  EXPECT_EQ(search_verdict("lclrcl-meet", rep), Verdict::verified);
}

TEST(Replay, TamperedWitnessDoesNotReproduce) {
  SearchOptions o;
  o.n_max = 2;
  Json w = search("star-complement-strict", o).witnesses.front();
  w["holds"] = true;
  EXPECT_FALSE(replay(w).front().reproduced());
  w["C"] = "gen{7}";
  EXPECT_THROW(replay(w), ParseError);
  Json report = {{"laws", Json::array({{{"witnesses", Json::array({{{"law", 3}}})}}})}};
  EXPECT_THROW(replay(report), ParseError);
}

TEST(Replay, PinnedCompositionWitness) {
  // R is =_X and S is X x X on two points.
  const Json w = {{"law", "(R ∘ S)~ ⊆ R~ ∘ S~"},
                  {"level", "filter"},
                  {"holds", false},
                  {"rel", {{"n", 2}, {"pairs", {{0, 0}, {1, 1}}}}},
                  {"rel2", {{"n", 2}, {"pairs", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}}},
                  {"C", "gen{0}"},
                  {"D", "gen{0,1}"}};
  const std::vector<ReplayResult> r = replay(w);
  ASSERT_EQ(r.size(), 1U);
  EXPECT_TRUE(r[0].reproduced());
}

TEST(Instances, JsonRoundTripForEveryLawKind) {
  std::set<InstanceKind> kinds;
  for (const Law& l : law_registry()) kinds.insert(l.kind);
  Instance in;
  in.n = 2;
  in.r = Rel::identity(2);
  in.s = Rel::universal(2);
  in.c = FilterGen(2, 1);
  in.d = FilterGen(2, 3);
  in.left = Topology::sierpinski();
  in.right = Topology::discrete(2);
  in.cells = 0b01;
  in.cells2 = 0b10;
  in.h = {1, 0};
  for (InstanceKind k : kinds) {
    Instance probe = in;
    if (k == InstanceKind::hyper_set || k == InstanceKind::base_subset || k == InstanceKind::base_subsets ||
        k == InstanceKind::hyper_family) {
      probe.family = {0, 1, 3};
      probe.cells = 1;
      probe.cells2 = 2;
    }
    if (k == InstanceKind::multimap) probe.family = {2, 3};
    const Json j = instance_to_json(k, probe);
    EXPECT_EQ(instance_to_json(k, instance_from_json(k, j)), j);
  }
}

}  // namespace

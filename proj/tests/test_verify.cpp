#include <gtest/gtest.h>

#include "hyperfect/verify.hpp"

using namespace hyperfect;

namespace {

VerifyResult run(const std::string& id, int n, int jobs = 2) {
  VerifyOptions o;
  o.n_bound = n;
  o.jobs = jobs;
  return verify(id, o);
}

}  // namespace

TEST(Verify, RegistryHasEveryId) {
  const std::vector<std::string> expected{"tetra", "smallerclique", "friendlycliques", "berge-equiv", "hw-implies-cw", "gasp",
                                          "perfectR", "cocycleprop", "doublyperfect", "perfectcocycle", "turan", "chi-bound",
                                          "hd", "fig1-arrows", "fig2-search", "s41-counterexample"};
  EXPECT_EQ(verify_ids(), expected);
  EXPECT_THROW(verify("nope"), UnknownTheorem);
  EXPECT_THROW(default_n_bound("nope"), UnknownTheorem);
}

TEST(Verify, SpecExamplesPass) {
  for (auto [id, n] : std::vector<std::pair<std::string, int>>{{"berge-equiv", 5}, {"perfectcocycle", 6}, {"gasp", 7}}) {
    const auto r = run(id, n);
    EXPECT_TRUE(r.passed) << id << "\n" << to_text(r);
    EXPECT_GT(r.instances, 0u);
  }
}

TEST(Verify, SmallBoundsPass) {
  for (const auto& id : {"tetra", "smallerclique", "friendlycliques", "hw-implies-cw", "perfectR", "doublyperfect", "chi-bound", "hd", "fig1-arrows"}) {
    const auto r = run(id, 5);
    EXPECT_TRUE(r.passed) << id << "\n" << to_text(r);
  }
}

TEST(Verify, CorpusShape) {
  const auto threes = uniform_corpus(3, 5);
  // 2 + 16 + 1024 labeled instances on 3, 4 and 5 vertices.
  EXPECT_EQ(threes.size(), 1042u);
  EXPECT_EQ(uniform_corpus(3, 6).size(), 1042u + 2136u);
  EXPECT_EQ(uniform_corpus(3, 9).size(), uniform_corpus(3, 6).size());
  EXPECT_EQ(graph_corpus(4).size(), 1u + 2u + 4u + 11u);
}

TEST(Verify, StableAcrossWorkerCounts) {
  for (const auto& id : {"fig1-arrows", "cocycleprop", "turan"}) {
    const auto a = to_json(run(id, 5, 1));
    const auto b = to_json(run(id, 5, 4));
    EXPECT_EQ(a, b) << id;
  }
}

TEST(Verify, TuranReportsTheFiveVertexTightCycle) {
  const auto r = run("turan", 5);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.violations, 1u);
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0]["n"], 5);
  EXPECT_EQ(r.counterexamples[0]["max_edges"], 5);
  EXPECT_EQ(r.counterexamples[0]["tripartite"], 4);
}

TEST(Verify, SwitchingOnGrotzschDoesNotConclude) {
  const auto r = run("s41-counterexample", 11);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.details["h_vertices"], 11);
  const auto big = run("s41-counterexample", 23);
  EXPECT_TRUE(big.passed) << to_text(big);
}

TEST(Verify, InstanceJson) {
  const auto j = instance_json(KHypergraph::complete(3, 4));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["edges"].size(), 4u);
  EXPECT_EQ(j["edges"][0], nlohmann::json({0, 1, 2}));
}

#include "hhnum/verify.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "oracles.hpp"

namespace hhnum {
namespace {

TEST(EnumerationTest, ClassCountsAgreeWithBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_connected_graphs(n).size()),
              oracle::brute_connected_class_count(n))
        << n;
  }
}

TEST(EnumerationTest, KnownCounts) {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_connected_graphs(n).size()), expected[n - 1]);
  }
  EXPECT_THROW(enumerate_connected_graphs(8), PreconditionError);
}

TEST(EnumerationTest, ConnectedPairwiseNonIsomorphicAndCanonical) {
  for (int n = 1; n <= 6; ++n) {
    auto classes = enumerate_connected_graphs(n);
    std::set<std::uint64_t> keys;
    for (const Graph& g : classes) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_EQ(canonical_form(g), g);
      keys.insert(canonical_key(g));
    }
    EXPECT_EQ(keys.size(), classes.size());
  }
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 9);
    Graph g = random_connected_graph(n, rng);
    Graph moved = g.relabeled(rng.permutation(n));
    EXPECT_EQ(canonical_key(g), canonical_key(moved));
    EXPECT_EQ(canonical_form(g), canonical_form(moved));
    EXPECT_TRUE(oracle::brute_isomorphic(g, canonical_form(g)));
  }
}

TEST(CanonicalFormTest, SeparatesNonIsomorphic) {
  EXPECT_NE(canonical_key(make_path(4)), canonical_key(make_star(4)));
  EXPECT_NE(canonical_key(make_cycle(6)),
            canonical_key(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(DirectIsomorphismTest, AgreesWithOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(1, 7);
    Graph a = random_connected_graph(n, rng);
    Graph b = rng.uniform(0, 1) ? a.relabeled(rng.permutation(n))
                                : random_connected_graph(n, rng);
    ASSERT_EQ(isomorphic_by_permutation(a, b), oracle::brute_isomorphic(a, b));
  }
}

TEST(ClosedFormTest, Values) {
  EXPECT_EQ(closed_form_upper_hamiltonian(4), 8);
  EXPECT_EQ(closed_form_upper_hamiltonian(5), 12);
  EXPECT_EQ(closed_form_upper_traceable(4), 7);
  EXPECT_EQ(closed_form_upper_traceable(5), 11);
  EXPECT_EQ(closed_form_upper_traceable(2), 1);
}

TEST(ClosedFormTest, VerifiedUpToSeven) {
  auto r = verify_closed_forms(7);
  EXPECT_TRUE(r.passed()) << render_report_text(r);
  EXPECT_EQ(r.instances_checked, 6 + 5);
  EXPECT_THROW(verify_closed_forms(10), PreconditionError);
}

TEST(UpperBoundTest, CanonicalSmallOrders) {
  for (int n = 2; n <= 5; ++n) {
    auto r = verify_upper_bound(n, HFamily::kCanonical);
    EXPECT_TRUE(r.passed()) << render_report_text(r);
  }
  auto r5 = verify_upper_bound(5, HFamily::kCanonical);
  EXPECT_EQ(r5.instances_checked, 21 * 2);
}

TEST(UpperBoundTest, AllConnectedFourAndRange) {
  auto r = verify_upper_bound(4, HFamily::kConnectedAll);
  EXPECT_TRUE(r.passed()) << render_report_text(r);
  EXPECT_EQ(r.instances_checked, 6 * 6);
  EXPECT_THROW(verify_upper_bound(7, HFamily::kConnectedAll), PreconditionError);
  EXPECT_THROW(verify_upper_bound(1, HFamily::kCanonical), PreconditionError);
}

TEST(UpperBoundTest, JobsDoNotChangeReport) {
  auto one = verify_upper_bound(5, HFamily::kConnectedAll, {.jobs = 1});
  auto many = verify_upper_bound(5, HFamily::kConnectedAll, {.jobs = 4, .chunk = 7});
  EXPECT_EQ(nlohmann::json(one).dump(), nlohmann::json(many).dump());
}

TEST(UpperBoundTest, ResumeSkipsRecordedPairs) {
  auto dir = std::filesystem::temp_directory_path() / "hhnum_verify_resume";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto file = dir / "progress.txt";

  auto first = verify_upper_bound(4, HFamily::kCanonical, {.progress_file = file, .chunk = 3});
  EXPECT_TRUE(first.passed());
  auto recorded = load_progress(file);
  EXPECT_EQ(static_cast<long long>(recorded.size()), first.instances_checked);
  EXPECT_TRUE(recorded.count(pair_key(canonical_form(make_path(4)), make_cycle(4))));

  // a second run finds nothing to do and appends nothing
  auto size_before = std::filesystem::file_size(file);
  auto second = verify_upper_bound(4, HFamily::kCanonical, {.progress_file = file});
  EXPECT_EQ(second.instances_checked, first.instances_checked);
  EXPECT_TRUE(second.passed());
  EXPECT_EQ(std::filesystem::file_size(file), size_before);
  std::filesystem::remove_all(dir);
}

TEST(StructureChecksTest, SpanningTreesAndArticulation) {
  auto st = verify_spanning_tree_characterization(6);
  EXPECT_TRUE(st.passed()) << render_report_text(st);
  EXPECT_EQ(st.instances_checked, 1 + 2 + 6 + 21 + 112);
  auto na = verify_non_articulation(6);
  EXPECT_TRUE(na.passed()) << render_report_text(na);
  EXPECT_EQ(na.instances_checked, st.instances_checked);
}

TEST(IsoCharacterizationTest, SmallOrders) {
  auto r = verify_isomorphism_characterization(5);
  EXPECT_TRUE(r.passed()) << render_report_text(r);
  EXPECT_GT(r.instances_checked, 0);
}

TEST(SolverAgreementTest, ClosedFormAndRandom) {
  auto inst = closed_form_instances(6);
  EXPECT_EQ(inst.size(), 5u + 4u);
  auto r = verify_solver_agreement(inst, "closed-form");
  EXPECT_TRUE(r.passed()) << render_report_text(r);
  EXPECT_EQ(r.instances_checked, 2 * 9);
  auto rand = verify_solver_agreement(random_instances(20, 6, 7), "random");
  EXPECT_TRUE(rand.passed()) << render_report_text(rand);
}

TEST(RandomSuitesTest, SurgeryAndPathify) {
  auto s = verify_surgery_lemmas({.samples = 60, .seed = 3});
  EXPECT_TRUE(s.passed()) << render_report_text(s);
  EXPECT_GT(s.instances_checked, 60);
  auto p = verify_pathify_soundness({.samples = 120, .seed = 3, .exhaustive_max = 7});
  EXPECT_TRUE(p.passed()) << render_report_text(p);
  EXPECT_EQ(p.instances_checked, 120);
}

TEST(ReportTest, TextAndJson) {
  VerificationReport r{"demo", "none", 2, {Failure{{"Bw"}, "too big"}}};
  EXPECT_EQ(render_report_text(r),
            "claim demo\nfamily none\ninstances_checked 2\nfailures 1\n"
            "  failure Bw : too big\npassed false\n");
  nlohmann::json j = r;
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failures"][0]["graphs"][0], "Bw");
}

}  // namespace
}  // namespace hhnum

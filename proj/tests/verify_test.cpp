#include <gtest/gtest.h>

#include "secdom/canonical.hpp"
#include "secdom/verify.hpp"

namespace secdom {
namespace {

using verify::RunOptions;
using verify::TheoremId;
using verify::Verdict;

TEST(TheoremIds, RoundTrip) {
    for (auto id : verify::kTheorems) EXPECT_EQ(verify::parse_theorem_id(verify::to_string(id)), id);
    EXPECT_EQ(verify::parse_theorem_id("GAP+"), TheoremId::GapPositive);
    EXPECT_FALSE(verify::parse_theorem_id("T18"));
    EXPECT_EQ(verify::kTheorems.size(), 19u);
}

TEST(Ranges, DefaultsAndCaps) {
    EXPECT_EQ(verify::resolve_range(TheoremId::T2, {}), std::make_pair(1L, 14L));
    RunOptions over;
    over.hi = 30;
    EXPECT_THROW(verify::resolve_range(TheoremId::T2, over), std::invalid_argument);
    over.override_caps = true;
    EXPECT_EQ(verify::resolve_range(TheoremId::T2, over).second, 30L);
    RunOptions low;
    low.lo = 1;
    EXPECT_THROW(verify::resolve_range(TheoremId::T7, low), std::invalid_argument);
}

std::vector<verify::TheoremReport> run(TheoremId id, long lo, long hi) {
    RunOptions o;
    o.lo = lo;
    o.hi = hi;
    return verify::run_theorem(id, o);
}

TEST(RunTheorem, PathsAndCycles) {
    const auto reports = run(TheoremId::T2, 1, 10);
    EXPECT_EQ(reports.size(), 10u + 8u);
    EXPECT_EQ(reports.front().instance, "P_1");
    // The only disagreement is the triangle.
    ASSERT_EQ(verify::count_failures(reports), 1u);
    for (const auto& r : reports)
        if (r.verdict == Verdict::fail) {
            EXPECT_EQ(r.instance, "C_3");
            EXPECT_EQ(r.computed, "1");
        }
}

TEST(RunTheorem, SmallTheoremsPass) {
    for (auto id : {TheoremId::T1, TheoremId::C6, TheoremId::T7, TheoremId::T8, TheoremId::P9, TheoremId::P10,
                    TheoremId::L12, TheoremId::P14, TheoremId::C15, TheoremId::P16}) {
        const auto lim = verify::limits(id);
        const auto reports = run(id, lim.lo, std::min(lim.hi, 5L));
        EXPECT_EQ(verify::count_failures(reports), 0u) << verify::to_string(id);
    }
}

TEST(RunTheorem, HypothesisFilter) {
    // Only graphs with a dominating vertex are reported.
    for (const auto& r : run(TheoremId::T7, 2, 4)) EXPECT_TRUE(has_dominating_vertex(from_graph6(r.instance.substr(3))));
    EXPECT_EQ(run(TheoremId::T7, 4, 4).size(), 4u);
}

TEST(RunTheorem, BipartiteMycielskianDisagreesAtFourCycle) {
    const auto reports = run(TheoremId::T20, 2, 6);
    std::size_t fails = 0;
    for (const auto& r : reports) {
        if (r.verdict != Verdict::fail) continue;
        ++fails;
        EXPECT_EQ(r.instance, "K_{2,2}");
        EXPECT_EQ(r.computed, "3");
        ASSERT_TRUE(r.counterexample);
        auto again = verify::replay(r);
        ASSERT_TRUE(again);
        EXPECT_EQ(again->verdict, Verdict::fail);
    }
    EXPECT_EQ(fails, 1u);
    EXPECT_EQ(verify::count_failures(run(TheoremId::T19, 2, 10)), 0u);
}

TEST(RunTheorem, PathMinimalSetsWithThreeConsecutive) {
    const auto reports = run(TheoremId::P13, 6, 9);
    ASSERT_EQ(reports.size(), 4u);
    EXPECT_EQ(reports[0].verdict, Verdict::pass);
    EXPECT_EQ(reports[1].verdict, Verdict::pass);
    ASSERT_EQ(reports[2].verdict, Verdict::fail);
    ASSERT_TRUE(reports[2].counterexample && reports[2].counterexample->set);
    const auto s = *reports[2].counterexample->set;
    const auto p8 = make_path(8);
    EXPECT_TRUE(is_secure(p8, s));
    EXPECT_TRUE(s_isolates(p8, s).empty());
    for (Vertex v : s) EXPECT_FALSE(is_secure(p8, s.without(v)));
    EXPECT_EQ(verify::replay(reports[2])->verdict, Verdict::fail);
}

TEST(RunTheorem, ConstructionsPass) {
    EXPECT_EQ(verify::count_failures(run(TheoremId::GapNonnegative, 0, 5)), 0u);
    EXPECT_EQ(verify::count_failures(run(TheoremId::T22, 2, 4)), 0u);
    const auto gap = run(TheoremId::GapPositive, 1, 6);
    ASSERT_EQ(gap.size(), 6u);
    EXPECT_EQ(verify::count_failures(gap), 0u);
    EXPECT_NE(gap[3].note.find("formula oracle substituted"), std::string::npos);
}

TEST(RunTheorem, DeterministicAcrossThreads) {
    RunOptions a, b;
    a.hi = b.hi = 5;
    b.threads = 4;
    const auto x = verify::run_theorem(TheoremId::P16, a);
    const auto y = verify::run_theorem(TheoremId::P16, b);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_EQ(x[i].instance, y[i].instance);
        EXPECT_EQ(x[i].computed, y[i].computed);
    }
}

TEST(Survey, Examples) {
    const auto rows = verify::survey_conjectures({make_star(3), make_complete(4)});
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(rows[3].id, TheoremId::FW4);
    EXPECT_EQ(rows[3].note, "member");
    EXPECT_EQ(rows[6].id, TheoremId::FW3);
    EXPECT_EQ(rows[6].note, "witness 2k+1");
    const auto skipped = verify::survey_conjectures({make_path(15)});
    for (const auto& r : skipped) EXPECT_EQ(r.verdict, Verdict::skipped);
}

TEST(Survey, ConnectedGraphsUpToSix) {
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto& g : enumerate_graphs(n, true)) graphs.push_back(g);
    const auto rows = verify::survey_conjectures(graphs);
    EXPECT_EQ(rows.size(), 4 * graphs.size());
    for (const auto& r : rows)
        if (r.verdict == Verdict::fail) { EXPECT_TRUE(r.counterexample); }
}

}  // namespace
}  // namespace secdom

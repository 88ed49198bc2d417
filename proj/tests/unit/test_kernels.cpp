#include <gtest/gtest.h>

#include <cstring>

#include "helpers.hpp"
#include "restab/kernels.hpp"
#include "restab/tables.hpp"

using namespace restab;

namespace {

std::vector<Theta> prior_draws(int n) {
    Rng rng = Rng::stream(31, 0);
    std::vector<Theta> out;
    for (int i = 0; i < n; ++i) out.push_back(sample_prior(PriorSpec{}, rng));
    out.push_back(restab::testing::realistic_theta());
    return out;
}

}  // namespace

TEST(DrawRss, ParallelMatchesSerialBitForBit) {
    SynthConfig cfg;
    cfg.n_matches = 120;
    const auto corpus = summarize_all(generate(cfg)).accepted;
    std::vector<SplitPanel> panels;
    for (int u : {1, 10, 20, 30, 45}) panels.push_back(build_panel(corpus, u));
    const auto draws = prior_draws(300);
    const auto a = kernels::serial::draw_rss(draws, panels);
    const auto b = kernels::parallel::draw_rss(draws, panels);
    ASSERT_EQ(a.size(), draws.size() * panels.size());
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)), 0);
}

TEST(DrawRss, EmptyInputs) {
    EXPECT_TRUE(kernels::serial::draw_rss({}, {}).empty());
    EXPECT_TRUE(kernels::parallel::draw_rss({}, {}).empty());
}

TEST(ThetaPercentRow, AgreesWithBayesTable) {
    const Theta t = restab::testing::realistic_theta();
    const ResourceTable table = bayes_table(t);
    for (int u : {1, 17, 50}) {
        const auto row = theta_percent_row(t, u);
        for (int w = 0; w < kWicketStates; ++w) EXPECT_EQ(row[static_cast<std::size_t>(w)], *table.at(u, w));
    }
}

TEST(BuildPanel, SkipsAllOutInnings) {
    InningsSummary s;
    s.match_id = "x";
    s.total_runs = 100;
    for (int i = 0; i < kOvers; ++i) s.checkpoints[static_cast<std::size_t>(i)] = {kOvers - 1 - i, 10, 0};
    EXPECT_EQ(build_panel({s}, 5).size(), 0u);
}

TEST(CompensatedSum, RecoversSmallTerms) {
    CompensatedSum s;
    s.add(1e16);
    for (int i = 0; i < 1000; ++i) s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), 1000.0);
}

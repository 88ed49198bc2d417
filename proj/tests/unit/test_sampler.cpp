#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/distributions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <sstream>

#include "helpers.hpp"
#include "restab/error.hpp"
#include "restab/sampler.hpp"
#include "restab/synth.hpp"

using namespace restab;

namespace {

template <typename Cdf>
double ks_statistic(std::vector<double> xs, Cdf&& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Median and its standard error from medians of consecutive batches.
struct MedianSe {
    double median;
    double se;
};

MedianSe batch_median(const std::vector<double>& xs, int batches = 25) {
    const std::size_t len = xs.size() / static_cast<std::size_t>(batches);
    std::vector<double> meds;
    for (int b = 0; b < batches; ++b) {
        const auto first = xs.begin() + static_cast<std::ptrdiff_t>(len * static_cast<std::size_t>(b));
        meds.push_back(median(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(len))));
    }
    const double m = std::accumulate(meds.begin(), meds.end(), 0.0) / batches;
    double ss = 0.0;
    for (double x : meds) ss += (x - m) * (x - m);
    return {median(xs), std::sqrt(ss / (batches - 1) / batches)};
}

std::vector<double> coordinate(const PosteriorSamples& s, int slot) {
    std::vector<double> out;
    for (const auto& t : s.draws) {
        const auto w = static_cast<std::size_t>(slot % kWicketStates);
        out.push_back(slot < kWicketStates ? t.a[w] : slot < 2 * kWicketStates ? t.b[w] : t.sigma2);
    }
    return out;
}

CellGrid synth_grid(int matches, std::uint64_t seed) {
    SynthConfig cfg;
    cfg.n_matches = matches;
    cfg.seed = seed;
    return aggregate(summarize_all(generate(cfg)).accepted);
}

Imputations exact_imputations(const Theta& t, const CellGrid& g) {
    Imputations imp;
    for (const auto& k : g.missing_cells()) imp[k] = mean(k.u, k.w, t);
    return imp;
}

}  // namespace

TEST(ConditionalSupport, InteriorAndBoundaryCoordinates) {
    const PriorSpec spec;
    const Theta t = restab::testing::realistic_theta();
    const Interval a5 = conditional_support({Coordinate::Kind::A, 5}, t, spec);
    EXPECT_DOUBLE_EQ(a5.lo, std::max(t.a[6], t.a[6] * t.b[6] / t.b[5]));
    EXPECT_DOUBLE_EQ(a5.hi, std::min(t.a[4], t.a[4] * t.b[4] / t.b[5]));

    const Interval a0 = conditional_support({Coordinate::Kind::A, 0}, t, spec);
    EXPECT_DOUBLE_EQ(a0.hi, spec.A0);
    const Interval b0 = conditional_support({Coordinate::Kind::B, 0}, t, spec);
    EXPECT_DOUBLE_EQ(b0.hi, spec.B0);
    const Interval a9 = conditional_support({Coordinate::Kind::A, 9}, t, spec);
    EXPECT_EQ(a9.lo, 0.0);
    const Interval b9 = conditional_support({Coordinate::Kind::B, 9}, t, spec);
    EXPECT_EQ(b9.lo, 0.0);
    EXPECT_DOUBLE_EQ(b9.hi, t.a[8] * t.b[8] / t.a[9]);
}

TEST(ConditionalSupport, EmptyIntervalIsSliceCollapse) {
    Theta t = restab::testing::realistic_theta();
    t.a[6] = t.a[4] + 1.0;  // corrupted: a_5 would need to sit above a_4 and below a_6
    try {
        conditional_support({Coordinate::Kind::A, 5}, t, PriorSpec{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SliceCollapse);
    }
}

TEST(SliceUpdate, StaysInsideNeighbours) {
    const PriorSpec spec;
    const CellGrid grid = synth_grid(30, 4);
    Theta t = restab::testing::realistic_theta();
    t.sigma2 = 50.0;
    Rng rng = Rng::stream(1, 0);
    for (int i = 0; i < 10000; ++i) {
        t = slice_update_param({Coordinate::Kind::A, 5}, t, grid, spec, SliceSettings{}, rng).theta;
        ASSERT_GT(t.a[5], t.a[6]);
        ASSERT_LT(t.a[5], t.a[4]);
        ASSERT_TRUE(in_support(t, spec));
    }
}

TEST(SliceUpdate, FlatLikelihoodReproducesPriorConditional) {
    // No observed cells: the target is the prior alone. Given its
    // neighbours, a_5 has density proportional to 1/a_5 on its support.
    const PriorSpec spec;
    const CellGrid empty;
    Theta t = restab::testing::realistic_theta();
    const Interval iv = conditional_support({Coordinate::Kind::A, 5}, t, spec);
    Rng rng = Rng::stream(2, 0);
    std::vector<double> xs;
    for (int i = 0; i < 10000 * 5; ++i) {
        t = slice_update_param({Coordinate::Kind::A, 5}, t, empty, spec, SliceSettings{}, rng).theta;
        if (i % 5 == 4) xs.push_back(t.a[5]);
    }
    const double d = ks_statistic(xs, [&](double x) { return std::log(x / iv.lo) / std::log(iv.hi / iv.lo); });
    EXPECT_LT(d, 0.02);

    // Same check against direct draws from that conditional.
    std::vector<double> direct;
    Rng rng2 = Rng::stream(3, 0);
    for (int i = 0; i < 10000; ++i) direct.push_back(iv.lo * std::pow(iv.hi / iv.lo, rng2.uniform()));
    std::sort(direct.begin(), direct.end());
    const double d2 = ks_statistic(xs, [&](double x) {
        return static_cast<double>(std::upper_bound(direct.begin(), direct.end(), x) - direct.begin()) /
               static_cast<double>(direct.size());
    });
    EXPECT_LT(d2, 0.03);
}

TEST(SliceUpdate, SingleCellPosteriorMatchesQuadrature) {
    const PriorSpec spec;
    CellGrid grid;
    grid.at(50, 0).n = 947;
    grid.at(50, 0).rbar = 260.0;
    Theta t = restab::testing::realistic_theta();
    t.sigma2 = 400.0;
    const double frac = -std::expm1(-50.0 * t.b[0]);

    // a_0 conditional: a_0^-2 from the prior chain times the Gaussian cell term.
    const Interval iv = conditional_support({Coordinate::Kind::A, 0}, t, spec);
    auto log_density = [&](double a) {
        const double r = 260.0 - a * frac;
        return -2.0 * std::log(a) - 0.5 * 947.0 * r * r / t.sigma2;
    };
    const double centre = 260.0 / frac;
    const double lo = std::max(iv.lo, centre - 20.0);
    const double hi = std::min(iv.hi, centre + 20.0);
    const int n = 200000;
    std::vector<double> cdf(n + 1, 0.0);
    const double h = (hi - lo) / n;
    const double peak = log_density(centre);
    for (int i = 1; i <= n; ++i) {
        const double x0 = lo + (i - 1) * h;
        const double x1 = lo + i * h;
        const double xm = 0.5 * (x0 + x1);
        cdf[static_cast<std::size_t>(i)] =
            cdf[static_cast<std::size_t>(i - 1)] +
            h / 6.0 *
                (std::exp(log_density(x0) - peak) + 4 * std::exp(log_density(xm) - peak) +
                 std::exp(log_density(x1) - peak));
    }
    const auto mid = std::lower_bound(cdf.begin(), cdf.end(), 0.5 * cdf.back()) - cdf.begin();
    const double quad_median = lo + static_cast<double>(mid) * h;

    Rng rng = Rng::stream(4, 0);
    std::vector<double> xs;
    for (int i = 0; i < 10000; ++i) {
        t = slice_update_param({Coordinate::Kind::A, 0}, t, grid, spec, SliceSettings{}, rng).theta;
        xs.push_back(t.a[0]);
    }
    EXPECT_NEAR(median(xs) / quad_median, 1.0, 0.002);
    EXPECT_GT(*std::min_element(xs.begin(), xs.end()), iv.lo);
}

TEST(GibbsSigma2, ZeroResidualsLeaveTheRateAtItsPrior) {
    const Theta t = restab::testing::realistic_theta();
    CellGrid grid;
    grid.at(30, 1).n = 5;
    grid.at(30, 1).rbar = mean(30, 1, t);
    const GammaParams g = sigma2_conditional(t, grid, exact_imputations(t, grid), 0.1, 0.1);
    EXPECT_EQ(g.rate, 0.1);
    EXPECT_DOUBLE_EQ(g.shape, 250.1);
}

TEST(GibbsSigma2, DrawsMatchTheGammaConditional) {
    Theta t = restab::testing::realistic_theta();
    CellGrid grid;
    Rng fill = Rng::stream(8, 0);
    for (int u = 1; u <= kOvers; u += 2) {
        grid.at(u, 2).n = 3;
        grid.at(u, 2).rbar = mean(u, 2, t) + fill.normal(0, 4);
    }
    Imputations imp;
    for (const auto& k : grid.missing_cells()) imp[k] = mean(k.u, k.w, t) + fill.normal(0, 6);
    const GammaParams g = sigma2_conditional(t, grid, imp, 0.1, 0.1);

    Rng rng = Rng::stream(9, 0);
    std::vector<double> precisions;
    for (int i = 0; i < 10000; ++i) precisions.push_back(1.0 / gibbs_sigma2(t, grid, imp, 0.1, 0.1, rng));
    const double m = std::accumulate(precisions.begin(), precisions.end(), 0.0) / 10000.0;
    EXPECT_NEAR(m / (g.shape / g.rate), 1.0, 0.02);

    const boost::math::gamma_distribution<double> dist(g.shape, 1.0 / g.rate);
    EXPECT_LT(ks_statistic(precisions, [&](double x) { return boost::math::cdf(dist, x); }), 0.02);
}

TEST(ImputeMissing, KeysAreExactlyTheMissingCells) {
    const CellGrid grid = synth_grid(20, 5);
    Rng rng = Rng::stream(1, 1);
    const Imputations imp = impute_missing(restab::testing::realistic_theta(), grid, rng);
    const auto missing = grid.missing_cells();
    ASSERT_EQ(imp.size(), missing.size());
    for (const auto& k : missing) EXPECT_TRUE(imp.count(k));
}

TEST(ImputeMissing, ZeroVarianceGivesTheMean) {
    Theta t = restab::testing::realistic_theta();
    t.sigma2 = 0.0;
    CellGrid grid;
    Rng rng = Rng::stream(1, 2);
    for (const auto& [k, v] : impute_missing(t, grid, rng)) EXPECT_EQ(v, mean(k.u, k.w, t));
}

TEST(ImputeMissing, VarianceMatchesSigma2) {
    Theta t = restab::testing::realistic_theta();
    t.sigma2 = 30.0;
    CellGrid grid;
    for (int i = 0; i < kCells; ++i) {
        if (i == cell_index(20, 4)) continue;
        grid.at(cell_u(i), cell_w(i)).n = 1;
        grid.at(cell_u(i), cell_w(i)).rbar = 1.0;
    }
    Rng rng = Rng::stream(1, 3);
    std::vector<double> xs;
    for (int i = 0; i < 10000; ++i) xs.push_back(impute_missing(t, grid, rng).at({20, 4}));
    const double m = std::accumulate(xs.begin(), xs.end(), 0.0) / 10000.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    EXPECT_NEAR(ss / 9999.0 / 30.0, 1.0, 0.05);
}

TEST(RunChain, KeepZeroGivesNoDraws) {
    McmcConfig cfg;
    cfg.burn_in = 10;
    cfg.keep = 0;
    const PosteriorSamples s = run_chain(synth_grid(20, 1), PriorSpec{}, cfg);
    EXPECT_EQ(s.size(), 0u);
    EXPECT_THROW(posterior_median_theta(s), Error);
}

TEST(RunChain, SameSeedIsBitIdenticalAndDrawsAreValid) {
    McmcConfig cfg;
    cfg.burn_in = 200;
    cfg.keep = 300;
    cfg.thin = 2;
    cfg.seed = 77;
    const CellGrid grid = synth_grid(40, 2);
    const PosteriorSamples a = run_chain(grid, PriorSpec{}, cfg);
    const PosteriorSamples b = run_chain(grid, PriorSpec{}, cfg);
    ASSERT_EQ(a.size(), 300u);
    EXPECT_EQ(a.iter.front(), 202);
    EXPECT_EQ(a.iter.back(), 800);
    std::stringstream sa;
    std::stringstream sb;
    write_posterior_csv(sa, a);
    write_posterior_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());

    const auto missing = grid.missing_cells();
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_TRUE(in_support(a.draws[i], PriorSpec{}));
        ASSERT_TRUE(check_mono_conditions(a.draws[i]).ok());
        ASSERT_EQ(a.imputed[i].size(), missing.size());
    }
    EXPECT_EQ(a.missing, missing);
    for (auto n : a.evaluations) EXPECT_GT(n, 0);
}

TEST(RunChain, DifferentSeedsDiffer) {
    McmcConfig cfg;
    cfg.burn_in = 10;
    cfg.keep = 5;
    const CellGrid grid = synth_grid(20, 2);
    const auto a = run_chain(grid, PriorSpec{}, cfg);
    cfg.seed = 2;
    const auto b = run_chain(grid, PriorSpec{}, cfg);
    EXPECT_NE(a.draws.back().a[0], b.draws.back().a[0]);
}

TEST(RunChain, RejectsInitOutsideSupport) {
    McmcConfig cfg;
    cfg.burn_in = 1;
    cfg.keep = 1;
    Theta bad = restab::testing::realistic_theta();
    bad.a[3] = bad.a[2] + 1;
    EXPECT_THROW(run_chain(synth_grid(10, 1), PriorSpec{}, cfg, 0, bad), Error);
}

TEST(RunChains, MergeInChainOrderAndMatchSingleChains) {
    McmcConfig cfg;
    cfg.burn_in = 50;
    cfg.keep = 40;
    cfg.n_chains = 3;
    cfg.seed = 5;
    const CellGrid grid = synth_grid(30, 3);
    const PosteriorSamples all = run_chains(grid, PriorSpec{}, cfg);
    ASSERT_EQ(all.size(), 120u);
    for (int c = 0; c < 3; ++c) {
        const PosteriorSamples one = run_chain(grid, PriorSpec{}, cfg, c);
        for (std::size_t i = 0; i < one.size(); ++i) {
            const std::size_t k = static_cast<std::size_t>(c) * 40 + i;
            EXPECT_EQ(all.chain[k], c);
            EXPECT_EQ(all.draws[k].a, one.draws[i].a);
            EXPECT_EQ(all.draws[k].b, one.draws[i].b);
            EXPECT_EQ(all.draws[k].sigma2, one.draws[i].sigma2);
        }
    }
}

TEST(RunChain, StartingPointDoesNotMoveTheMedians) {
    const CellGrid grid = synth_grid(150, 6);
    McmcConfig cfg;
    cfg.burn_in = 2000;
    cfg.keep = 10000;
    cfg.seed = 21;
    const PosteriorSamples from_prior = run_chain(grid, PriorSpec{}, cfg);

    McmcConfig other = cfg;
    other.seed = 22;
    const Theta warm = run_chain(grid, PriorSpec{}, other).draws.back();
    other.burn_in = 0;
    const PosteriorSamples from_warm = run_chain(grid, PriorSpec{}, other, 0, warm);

    for (int slot = 0; slot <= 2 * kWicketStates; ++slot) {
        const MedianSe p = batch_median(coordinate(from_prior, slot));
        const MedianSe q = batch_median(coordinate(from_warm, slot));
        const double se = std::sqrt(p.se * p.se + q.se * q.se);
        EXPECT_LT(std::abs(p.median - q.median), 3.0 * se + 1e-12) << "slot " << slot;
    }
}

TEST(RunChain, AsymptotesScaleWithTheRuns) {
    const CellGrid base = synth_grid(150, 7);
    CellGrid scaled = base;
    const double c = 2.0;
    for (int i = 0; i < kCells; ++i) {
        Cell& cell = scaled.at(cell_u(i), cell_w(i));
        if (cell.rbar) cell.rbar = *cell.rbar * c;
    }
    McmcConfig cfg;
    cfg.burn_in = 2000;
    cfg.keep = 8000;
    const PosteriorSamples p = run_chain(base, PriorSpec{}, cfg);
    const PosteriorSamples q = run_chain(scaled, PriorSpec{}, cfg);
    for (int w = 0; w < kWicketStates; ++w) {
        const MedianSe a1 = batch_median(coordinate(p, w));
        const MedianSe a2 = batch_median(coordinate(q, w));
        const MedianSe b1 = batch_median(coordinate(p, kWicketStates + w));
        const MedianSe b2 = batch_median(coordinate(q, kWicketStates + w));
        EXPECT_LT(std::abs(a2.median - c * a1.median), 3.0 * std::hypot(a2.se, c * a1.se)) << "a" << w;
        EXPECT_LT(std::abs(b2.median - b1.median), 3.0 * std::hypot(b2.se, b1.se)) << "b" << w;
    }
}

TEST(PosteriorMedian, SingleDrawIsReturnedUnchanged) {
    PosteriorSamples s;
    s.draws.push_back(restab::testing::realistic_theta());
    const MedianEstimate m = posterior_median_theta(s);
    EXPECT_FALSE(m.repaired);
    EXPECT_EQ(m.theta.a, s.draws[0].a);
    EXPECT_EQ(m.theta.b, s.draws[0].b);
    EXPECT_EQ(m.theta.sigma2, s.draws[0].sigma2);
}

TEST(PosteriorMedian, OddCountTakesTheMiddle) {
    PosteriorSamples s;
    for (double a0 : {1100.0, 900.0, 1000.0}) {
        Theta t = restab::testing::realistic_theta();
        t.a[0] = a0;
        s.draws.push_back(t);
    }
    EXPECT_EQ(posterior_median_theta(s).theta.a[0], 1000.0);
}

TEST(PosteriorMedian, CoordinateMediansCanNeedRepair) {
    Theta t1 = restab::testing::realistic_theta();
    Theta t2 = t1;
    t1.a[0] = 1000;
    t1.b[0] = 0.010;
    t1.a[1] = 999;
    t1.b[1] = 0.010;
    t2.a[0] = 1000;
    t2.b[0] = 0.001;
    t2.a[1] = 1;
    t2.b[1] = 0.9;
    for (Theta* t : {&t1, &t2}) {
        for (std::size_t w = 2; w < kWicketStates; ++w) {
            t->a[w] = t->a[1] * std::pow(0.5, static_cast<double>(w - 1));
            t->b[w] = 0.5 * t->a[w - 1] * t->b[w - 1] / t->a[w];
        }
        ASSERT_TRUE(in_support(*t, PriorSpec{}));
        ASSERT_TRUE(check_mono_conditions(*t).ok());
    }
    PosteriorSamples s;
    s.draws = {t1, t2};

    Theta raw;
    for (std::size_t w = 0; w < kWicketStates; ++w) {
        raw.a[w] = 0.5 * (t1.a[w] + t2.a[w]);
        raw.b[w] = 0.5 * (t1.b[w] + t2.b[w]);
    }
    raw.sigma2 = 1.0;
    ASSERT_FALSE(check_mono_conditions(raw).ok());

    const MedianEstimate m = posterior_median_theta(s);
    EXPECT_TRUE(m.repaired);
    EXPECT_TRUE(in_support(m.theta, PriorSpec{}));
    EXPECT_TRUE(check_mono_conditions(m.theta).ok());
    EXPECT_EQ(m.theta.a[0], raw.a[0]);
    EXPECT_EQ(m.theta.b[0], raw.b[0]);
}

TEST(RepairToSupport, LeavesValidThetaAlone) {
    Theta t = restab::testing::realistic_theta();
    const Theta before = t;
    EXPECT_FALSE(repair_to_support(t));
    EXPECT_EQ(t.a, before.a);
    EXPECT_EQ(t.b, before.b);
}

TEST(PosteriorCsv, RoundTripsExactly) {
    McmcConfig cfg;
    cfg.burn_in = 5;
    cfg.keep = 7;
    cfg.n_chains = 2;
    const PosteriorSamples s = run_chains(synth_grid(20, 9), PriorSpec{}, cfg);
    std::stringstream ss;
    write_posterior_csv(ss, s);
    const std::string text = ss.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "chain,iter,param,value");
    const PosteriorSamples r = read_posterior_csv(ss);
    ASSERT_EQ(r.size(), s.size());
    EXPECT_EQ(r.missing, s.missing);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(r.chain[i], s.chain[i]);
        EXPECT_EQ(r.iter[i], s.iter[i]);
        EXPECT_EQ(r.draws[i].a, s.draws[i].a);
        EXPECT_EQ(r.draws[i].b, s.draws[i].b);
        EXPECT_EQ(r.draws[i].sigma2, s.draws[i].sigma2);
        EXPECT_EQ(r.imputed[i], s.imputed[i]);
    }
}

TEST(ConfigEcho, ListsDefaults) {
    std::ostringstream os;
    write_config_echo(os, McmcConfig{}, PriorSpec{});
    const std::string text = os.str();
    EXPECT_NE(text.find("burn_in=20000\n"), std::string::npos);
    EXPECT_NE(text.find("keep=30000\n"), std::string::npos);
    EXPECT_NE(text.find("slice_width_b=0.05\n"), std::string::npos);
    EXPECT_NE(text.find("prior=ab\n"), std::string::npos);
}

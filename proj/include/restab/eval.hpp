#pragma once

// Split-point score prediction and residual-sum-of-squares comparisons
// between a fitted table and a reference table.
//
// Exports (all plot-ready CSV):
//   predictions_u{U}.csv  match_id,w,runs_so_far,actual,predicted
//   rss_curve.csv         u,rss_bayes,rss_dl,ratio   (ratio nan when rss_dl = 0)
//   ratio_samples.csv     split_u,draw,ratio

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/dls.hpp"
#include "restab/kernels.hpp"
#include "restab/sampler.hpp"
#include "restab/tables.hpp"

namespace restab {

struct Prediction {
    double value = 0.0;
    bool degenerate = false;  // resources at the split were >= 100%
};

Prediction predict_final(const ResourceTable& table, double runs_so_far, MatchState state);

struct PredictionRecord {
    std::string match_id;
    int u = 0;
    int w = 0;
    int runs_so_far = 0;
    int actual_final = 0;
    double predicted_final = 0.0;
    bool degenerate = false;
};

std::vector<PredictionRecord> predictions_at(const std::vector<InningsSummary>& corpus, const ResourceTable& table,
                                             int u);

struct SplitRss {
    int u = 0;
    double rss = 0.0;
    std::array<double, kWicketStates> rss_by_w{};
    std::array<int, kWicketStates> count_by_w{};
};

SplitRss rss_at_split(const std::vector<InningsSummary>& corpus, const ResourceTable& table, int u);

struct RssPoint {
    int u = 0;
    double rss_bayes = 0.0;
    double rss_dl = 0.0;
    double ratio = 0.0;  // sqrt(rss_bayes) / sqrt(rss_dl); NaN when rss_dl == 0
};

using RssCurve = std::vector<RssPoint>;

RssCurve ratio_curve(const std::vector<InningsSummary>& corpus, const ResourceTable& bayes,
                     const ResourceTable& reference, const std::vector<int>& splits);

struct RatioSample {
    int split_u = 0;
    std::size_t draw = 0;
    double ratio = 0.0;
};

// One ratio per (split, retained draw), ordered by split then draw.
std::vector<RatioSample> posterior_ratio_density(const PosteriorSamples& samples,
                                                 const std::vector<InningsSummary>& corpus,
                                                 const ResourceTable& reference, const std::vector<int>& splits,
                                                 Exec exec = Exec::Parallel);

double rss_ratio(double rss_bayes, double rss_reference);

void write_predictions_csv(std::ostream& out, const std::vector<PredictionRecord>& records);
void write_rss_curve_csv(std::ostream& out, const RssCurve& curve);
void write_ratio_samples_csv(std::ostream& out, const std::vector<RatioSample>& samples);

}  // namespace restab

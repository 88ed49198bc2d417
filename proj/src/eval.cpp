#include "restab/eval.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "restab/csv.hpp"
#include "restab/error.hpp"

namespace restab {

namespace {

void check_split(int u) {
    if (u < 1 || u >= kOvers) throw Error(ErrorKind::DomainError, "split u must be in 1..49");
}

std::array<double, kWicketStates> table_row(const ResourceTable& table, int u) {
    std::array<double, kWicketStates> row{};
    for (int w = 0; w < kWicketStates; ++w) row[static_cast<std::size_t>(w)] = table.percent(u, w);
    return row;
}

}  // namespace

Prediction predict_final(const ResourceTable& table, double runs_so_far, MatchState state) {
    Prediction p;
    p.value = project_final(runs_so_far, resources(table, state), p.degenerate);
    return p;
}

std::vector<PredictionRecord> predictions_at(const std::vector<InningsSummary>& corpus, const ResourceTable& table,
                                             int u) {
    check_split(u);
    std::vector<PredictionRecord> out;
    for (const auto& s : corpus) {
        const Checkpoint& cp = s.at(u);
        if (cp.w_at_u >= kWicketStates) continue;
        PredictionRecord r;
        r.match_id = s.match_id;
        r.u = u;
        r.w = cp.w_at_u;
        r.runs_so_far = s.total_runs - cp.runs_to_come;
        r.actual_final = s.total_runs;
        const auto p = predict_final(table, r.runs_so_far, {u, r.w});
        r.predicted_final = p.value;
        r.degenerate = p.degenerate;
        out.push_back(std::move(r));
    }
    return out;
}

SplitRss rss_at_split(const std::vector<InningsSummary>& corpus, const ResourceTable& table, int u) {
    check_split(u);
    if (corpus.empty()) throw Error(ErrorKind::EmptyCorpus, "no innings to evaluate");
    const auto panel = build_panel(corpus, u);
    const auto r = panel_rss(panel, table_row(table, u));
    SplitRss out;
    out.u = u;
    out.rss = r.total;
    out.rss_by_w = r.by_w;
    out.count_by_w = r.count_by_w;
    return out;
}

double rss_ratio(double rss_bayes, double rss_reference) {
    if (!(rss_reference > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::sqrt(rss_bayes) / std::sqrt(rss_reference);
}

RssCurve ratio_curve(const std::vector<InningsSummary>& corpus, const ResourceTable& bayes,
                     const ResourceTable& reference, const std::vector<int>& splits) {
    RssCurve curve;
    curve.reserve(splits.size());
    for (int u : splits) {
        RssPoint p;
        p.u = u;
        p.rss_bayes = rss_at_split(corpus, bayes, u).rss;
        p.rss_dl = rss_at_split(corpus, reference, u).rss;
        p.ratio = rss_ratio(p.rss_bayes, p.rss_dl);
        curve.push_back(p);
    }
    return curve;
}

std::vector<RatioSample> posterior_ratio_density(const PosteriorSamples& samples,
                                                 const std::vector<InningsSummary>& corpus,
                                                 const ResourceTable& reference, const std::vector<int>& splits,
                                                 Exec exec) {
    if (samples.draws.empty()) throw Error(ErrorKind::EmptySamples, "no posterior draws");
    if (corpus.empty()) throw Error(ErrorKind::EmptyCorpus, "no innings to evaluate");

    std::vector<SplitPanel> panels;
    std::vector<double> reference_rss;
    for (int u : splits) {
        check_split(u);
        panels.push_back(build_panel(corpus, u));
        reference_rss.push_back(panel_rss(panels.back(), table_row(reference, u)).total);
    }

    const std::span<const Theta> draws(samples.draws);
    const auto rss = exec == Exec::Serial ? kernels::serial::draw_rss(draws, panels)
                                          : kernels::parallel::draw_rss(draws, panels);

    std::vector<RatioSample> out;
    out.reserve(rss.size());
    for (std::size_t p = 0; p < panels.size(); ++p) {
        for (std::size_t d = 0; d < draws.size(); ++d) {
            out.push_back({panels[p].u, d, rss_ratio(rss[d * panels.size() + p], reference_rss[p])});
        }
    }
    return out;
}

void write_predictions_csv(std::ostream& out, const std::vector<PredictionRecord>& records) {
    out << "match_id,w,runs_so_far,actual,predicted\n";
    for (const auto& r : records) {
        out << r.match_id << ',' << r.w << ',' << r.runs_so_far << ',' << r.actual_final << ','
            << csv::format_exact(r.predicted_final) << '\n';
    }
}

void write_rss_curve_csv(std::ostream& out, const RssCurve& curve) {
    out << "u,rss_bayes,rss_dl,ratio\n";
    for (const auto& p : curve) {
        out << p.u << ',' << csv::format_exact(p.rss_bayes) << ',' << csv::format_exact(p.rss_dl) << ','
            << csv::format_exact(p.ratio) << '\n';
    }
}

void write_ratio_samples_csv(std::ostream& out, const std::vector<RatioSample>& samples) {
    out << "split_u,draw,ratio\n";
    for (const auto& s : samples) out << s.split_u << ',' << s.draw << ',' << csv::format_exact(s.ratio) << '\n';
}

}  // namespace restab

#include "restab/kernels.hpp"

#ifdef RESTAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace restab {

SplitPanel build_panel(const std::vector<InningsSummary>& corpus, int u) {
    SplitPanel p;
    p.u = u;
    for (const auto& s : corpus) {
        const Checkpoint& cp = s.at(u);
        if (cp.w_at_u >= kWicketStates) continue;
        p.match_id.push_back(s.match_id);
        p.w.push_back(cp.w_at_u);
        p.runs_so_far.push_back(static_cast<double>(s.total_runs - cp.runs_to_come));
        p.actual.push_back(static_cast<double>(s.total_runs));
    }
    return p;
}

PanelRss panel_rss(const SplitPanel& panel, const std::array<double, kWicketStates>& percent) {
    std::array<CompensatedSum, kWicketStates> sums{};
    PanelRss out;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        const auto w = static_cast<std::size_t>(panel.w[i]);
        bool degenerate = false;
        const double r = panel.actual[i] - project_final(panel.runs_so_far[i], percent[w], degenerate);
        sums[w].add(r * r);
        ++out.count_by_w[w];
    }
    CompensatedSum total;
    for (std::size_t w = 0; w < kWicketStates; ++w) {
        out.by_w[w] = sums[w].value();
        total.add(out.by_w[w]);
    }
    out.total = total.value();
    return out;
}

std::array<double, kWicketStates> theta_percent_row(const Theta& theta, int u) {
    std::array<double, kWicketStates> row{};
    const double full = mean(kOvers, 0, theta);
    for (int w = 0; w < kWicketStates; ++w) {
        row[static_cast<std::size_t>(w)] =
            (u == kOvers && w == 0) ? 100.0 : (u == 0 ? 0.0 : 100.0 * (mean(u, w, theta) / full));
    }
    return row;
}

namespace {

void draw_row(const Theta& theta, std::span<const SplitPanel> panels, double* out) {
    for (std::size_t p = 0; p < panels.size(); ++p) {
        out[p] = panel_rss(panels[p], theta_percent_row(theta, panels[p].u)).total;
    }
}

}  // namespace

namespace kernels::serial {

std::vector<double> draw_rss(std::span<const Theta> draws, std::span<const SplitPanel> panels) {
    std::vector<double> out(draws.size() * panels.size());
    for (std::size_t d = 0; d < draws.size(); ++d) draw_row(draws[d], panels, out.data() + d * panels.size());
    return out;
}

}  // namespace kernels::serial

namespace kernels::parallel {

std::vector<double> draw_rss(std::span<const Theta> draws, std::span<const SplitPanel> panels) {
    std::vector<double> out(draws.size() * panels.size());
    const auto n = static_cast<std::ptrdiff_t>(draws.size());
#ifdef RESTAB_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t d = 0; d < n; ++d) {
        const auto k = static_cast<std::size_t>(d);
        draw_row(draws[k], panels, out.data() + k * panels.size());
    }
    return out;
}

}  // namespace kernels::parallel

}  // namespace restab

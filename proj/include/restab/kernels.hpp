#pragma once

// Batch kernels behind the evaluation module. Each kernel has a serial
// reference and an OpenMP version; both run the same per-item arithmetic in
// the same order, so their outputs are bitwise identical and the serial one
// serves as the test oracle.

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/model.hpp"

namespace restab {

enum class Exec { Serial, Parallel };

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Innings state at one split point, in structure-of-arrays form. Innings
// already all out at the split are left out.
struct SplitPanel {
    int u = 0;
    std::vector<std::string> match_id;
    std::vector<int> w;
    std::vector<double> runs_so_far;
    std::vector<double> actual;

    std::size_t size() const { return w.size(); }
};

SplitPanel build_panel(const std::vector<InningsSummary>& corpus, int u);

// Final-score projection from the fraction of resources left.
inline double project_final(double runs_so_far, double percent_left, bool& degenerate) {
    degenerate = percent_left >= 100.0;
    if (degenerate) return runs_so_far;
    return runs_so_far / (1.0 - percent_left / 100.0);
}

// Squared residuals of one split accumulated per wicket column, then summed
// over columns in ascending w.
struct PanelRss {
    std::array<double, kWicketStates> by_w{};
    std::array<int, kWicketStates> count_by_w{};
    double total = 0.0;
};

// percent[w] is the resource percentage at (panel.u, w).
PanelRss panel_rss(const SplitPanel& panel, const std::array<double, kWicketStates>& percent);

// Percentages 100 mean(u, w) / mean(50, 0) at one u, as in bayes_table.
std::array<double, kWicketStates> theta_percent_row(const Theta& theta, int u);

// RSS for every (draw, panel) pair, row-major by draw.
namespace kernels::serial {
std::vector<double> draw_rss(std::span<const Theta> draws, std::span<const SplitPanel> panels);
}
namespace kernels::parallel {
std::vector<double> draw_rss(std::span<const Theta> draws, std::span<const SplitPanel> panels);
}

}  // namespace restab

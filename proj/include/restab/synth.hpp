#pragma once

// Synthetic ball-by-ball corpora drawn from a known Theta.
//
// Each over starts in state (u, w). Wickets fall ball by ball with
// probability base + slope * (over - 1) / 49. The over's expected runs are
// mean(u, w) - mean(u - 1, w'), with w' the wickets after the over, so the
// runs still to come from any state telescope to mean(u, w) plus the summed
// per-over noise, whatever the later wicket path. Per-over runs are normal
// with sd noise_sd, truncated at zero, with the location shifted so that the
// truncated draw keeps the intended mean. They are rounded on the running
// total so the integer score never drifts more than half a run from the
// real-valued one. An innings that loses its tenth wicket stops there.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/kernels.hpp"
#include "restab/model.hpp"

namespace restab {

// Calibrated so that 100 mean(u, w) / mean(50, 0) follows the published
// Bayesian table's column shapes, with mean(50, 0) close to 270 runs.
Theta default_theta_star();

struct WicketHazard {
    double base = 0.02;    // per-ball probability in the first over
    double slope = 0.01;   // added linearly by the 50th over
};

struct SynthConfig {
    Theta theta_star = default_theta_star();
    int n_matches = 500;
    std::uint64_t seed = 1;
    WicketHazard hazard;
    double noise_sd = 0.5;  // runs per over
};

bool valid(const SynthConfig& config);

std::vector<MatchEvents> generate(const SynthConfig& config, Exec exec = Exec::Parallel);

void write_synth_csv(std::ostream& out, const SynthConfig& config, Exec exec = Exec::Parallel);

}  // namespace restab

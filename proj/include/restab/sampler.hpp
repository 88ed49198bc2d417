#pragma once

// MCMC over Theta: slice-sampling updates for every a_w and b_w on their
// constrained conditional supports, posterior-predictive imputation of the
// missing cells and a conjugate Gibbs draw of sigma2.
//
// One sweep, in fixed order:
//   1. slice updates a_0..a_9, then b_0..b_9, each targeting the prior times
//      the observed-cell likelihood (missing cells integrated out), then for
//      each w a slice update of log b_w that moves a_w with it so mean(50, w)
//      stays put, then one slice update each of a common scale factor on
//      all a_w and on all b_w;
//   2. impute every missing cell from N(mean(u, w), sigma2);
//   3. draw 1/sigma2 ~ Gamma(gamma_a + 250, gamma_b + SSE/2) over all 500
//      cells, observed ones weighted by n and imputed ones by 1.
// Step 1 never reads the imputed values, and they are refreshed before
// step 3 reads them, so the sweep leaves the joint posterior invariant while
// avoiding the slow data-augmentation coupling between theta and the
// imputations.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/model.hpp"
#include "restab/rng.hpp"

namespace restab {

inline constexpr int kThetaCoordinates = 2 * kWicketStates;

struct McmcConfig {
    std::int64_t burn_in = 20000;
    std::int64_t keep = 30000;
    std::int64_t thin = 1;
    std::uint64_t seed = 1;
    int n_chains = 1;
    double slice_width_a = 10.0;
    double slice_width_b = 0.05;
    int slice_max_steps = 30;  // step-out budget per slice update
};

// Which coordinate of Theta a slice update moves.
struct Coordinate {
    enum class Kind { A, B } kind = Kind::A;
    int w = 0;

    int slot() const { return (kind == Kind::A ? 0 : kWicketStates) + w; }
    std::string name() const;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Open interval of values the coordinate may take with everything else fixed.
// Throws SliceCollapse when it is empty.
Interval conditional_support(Coordinate c, const Theta& theta, const PriorSpec& spec);

struct SliceSettings {
    double width_a = 10.0;
    double width_b = 0.05;
    int max_steps = 30;
};

// Log target of the slice updates: prior (without sigma2) plus the
// observed-cell likelihood at the current sigma2.
double log_conditional_target(const Theta& theta, const CellGrid& grid, const PriorSpec& spec);

struct SliceResult {
    Theta theta;
    int evaluations = 0;
};

SliceResult slice_update_param(Coordinate c, const Theta& theta, const CellGrid& grid, const PriorSpec& spec,
                               const SliceSettings& settings, Rng& rng);

struct GammaParams {
    double shape = 0.0;
    double rate = 0.0;
};

// Full conditional of 1/sigma2 given theta and the completed grid.
GammaParams sigma2_conditional(const Theta& theta, const CellGrid& grid, const Imputations& imputed,
                               double gamma_a, double gamma_b);

double gibbs_sigma2(const Theta& theta, const CellGrid& grid, const Imputations& imputed, double gamma_a,
                    double gamma_b, Rng& rng);

Imputations impute_missing(const Theta& theta, const CellGrid& grid, Rng& rng);

struct PosteriorSamples {
    McmcConfig config;
    PriorSpec prior;
    std::vector<CellKey> missing;  // order of the imputed values in each draw
    std::vector<int> chain;
    std::vector<std::int64_t> iter;  // sweep number, 1-based
    std::vector<Theta> draws;
    std::vector<std::vector<double>> imputed;
    std::array<std::int64_t, kThetaCoordinates> evaluations{};  // log-target calls per coordinate

    std::size_t size() const { return draws.size(); }
};

// Runs a single chain on stream `chain_id`. `init` replaces the prior draw
// used as the starting point.
PosteriorSamples run_chain(const CellGrid& grid, const PriorSpec& spec, const McmcConfig& config,
                           int chain_id = 0, std::optional<Theta> init = std::nullopt);

// Runs config.n_chains chains (concurrently when OpenMP is available) and
// concatenates them in chain-id order.
PosteriorSamples run_chains(const CellGrid& grid, const PriorSpec& spec, const McmcConfig& config);

struct MedianEstimate {
    Theta theta;
    bool repaired = false;
};

MedianEstimate posterior_median_theta(const PosteriorSamples& samples);

// Clamp coordinate-wise medians back inside the support (w = 0..8 sweep).
bool repair_to_support(Theta& theta);

// Posterior CSV: chain,iter,param,value with params a0..a9, b0..b9, sigma2,
// imp_<u>_<w>.
void write_posterior_csv(std::ostream& out, const PosteriorSamples& samples);
PosteriorSamples read_posterior_csv(std::istream& in);

// key=value echo of the chain configuration and prior.
void write_config_echo(std::ostream& out, const McmcConfig& config, const PriorSpec& spec);

}  // namespace restab

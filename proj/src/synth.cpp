#include "restab/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "restab/error.hpp"
#include "restab/rng.hpp"

#ifdef RESTAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace restab {

namespace {

std::string match_name(int index, int n_matches) {
    const int width = std::max(4, static_cast<int>(std::to_string(n_matches).size()));
    std::string digits = std::to_string(index + 1);
    return "m" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

// Location m of N(m, sd^2) whose zero-truncated mean, sd phi(m/sd) + m Phi(m/sd),
// equals `target`. Newton on an increasing convex function from the right.
double truncated_location(double target, double sd) {
    if (sd <= 0.0 || target <= 0.0) return target;
    double m = target;
    for (int i = 0; i < 100; ++i) {
        const double z = m / sd;
        const double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
        const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.14159265358979323846);
        const double g = sd * pdf + m * cdf - target;
        if (std::abs(g) <= 1e-12 * target || cdf <= 0.0) break;
        m -= g / cdf;
    }
    return m;
}

MatchEvents simulate_match(const SynthConfig& cfg, int index) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(index));
    const Theta& th = cfg.theta_star;

    MatchEvents m;
    m.match_id = match_name(index, cfg.n_matches);
    m.events.reserve(kOvers * kBallsPerOver);

    double real_total = 0.0;
    long long int_total = 0;
    int wickets = 0;
    for (int over = 1; over <= kOvers; ++over) {
        const int u = kOvers + 1 - over;
        const double p = std::clamp(cfg.hazard.base + cfg.hazard.slope * (over - 1) / (kOvers - 1.0), 0.0, 1.0);

        std::array<bool, kBallsPerOver> fell{};
        int balls = kBallsPerOver;
        int after = wickets;
        for (int b = 0; b < kBallsPerOver; ++b) {
            if (rng.bernoulli(p)) {
                fell[static_cast<std::size_t>(b)] = true;
                if (++after == 10) {
                    balls = b + 1;
                    break;
                }
            }
        }

        const double still_to_come = after >= kWicketStates ? 0.0 : mean(u - 1, after, th);
        const double expected = mean(u, wickets, th) - still_to_come;
        const double runs =
            std::max(0.0, truncated_location(expected, cfg.noise_sd) + cfg.noise_sd * rng.normal());
        real_total += runs;
        const long long over_runs = std::llround(real_total) - int_total;
        int_total += over_runs;

        const long long per_ball = over_runs / balls;
        for (int b = 0; b < balls; ++b) {
            BallEvent ev;
            ev.over = over;
            ev.ball = b + 1;
            ev.runs = static_cast<int>(b + 1 == balls ? over_runs - per_ball * (balls - 1) : per_ball);
            ev.wicket_fell = fell[static_cast<std::size_t>(b)];
            m.events.push_back(ev);
        }
        wickets = after;
        if (wickets >= 10) break;
    }
    return m;
}

}  // namespace

Theta default_theta_star() {
    Theta t;
    t.a = {355.0, 318.0, 275.0, 248.0, 222.0, 198.0, 186.0, 165.0, 130.0, 99.5};
    t.b = {0.0286, 0.0318, 0.0364, 0.0385, 0.0426, 0.0460, 0.0464, 0.0505, 0.0582, 0.0677};
    t.sigma2 = 400.0;
    return t;
}

bool valid(const SynthConfig& c) {
    PriorSpec loose;
    loose.A0 = std::numeric_limits<double>::infinity();
    loose.B0 = std::numeric_limits<double>::infinity();
    return c.n_matches >= 0 && in_support(c.theta_star, loose) && c.noise_sd >= 0.0 && c.hazard.base >= 0.0 &&
           c.hazard.base <= 1.0 && c.hazard.base + c.hazard.slope >= 0.0 && c.hazard.base + c.hazard.slope <= 1.0;
}

std::vector<MatchEvents> generate(const SynthConfig& config, Exec exec) {
    if (!valid(config)) throw Error(ErrorKind::DomainError, "invalid synthetic corpus configuration");
    std::vector<MatchEvents> out(static_cast<std::size_t>(config.n_matches));
    if (exec == Exec::Serial) {
        for (int i = 0; i < config.n_matches; ++i) out[static_cast<std::size_t>(i)] = simulate_match(config, i);
        return out;
    }
#ifdef RESTAB_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < config.n_matches; ++i) out[static_cast<std::size_t>(i)] = simulate_match(config, i);
    return out;
}

void write_synth_csv(std::ostream& out, const SynthConfig& config, Exec exec) {
    write_corpus_csv(out, generate(config, exec));
}

}  // namespace restab

#include "restab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string>

#include "restab/csv.hpp"
#include "restab/error.hpp"

#ifdef RESTAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace restab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSigma2Floor = 1e-12;
constexpr double kRepairFactor = 1.0 - 1e-9;
constexpr int kMaxShrinks = 2000;
constexpr int kMaxInitDraws = 100;
constexpr double kShapeWidth = 0.5;

struct ObservedPoint {
    double u;
    double weight;
    double y;
};

// Observed cells of the grid grouped by wicket column.
struct Columns {
    std::array<std::vector<ObservedPoint>, kWicketStates> points;

    explicit Columns(const CellGrid& grid) {
        for (int i = 0; i < kCells; ++i) {
            const Cell& c = grid.at_index(i);
            if (c.rbar) {
                points[static_cast<std::size_t>(cell_w(i))].push_back(
                    {static_cast<double>(cell_u(i)), static_cast<double>(c.n), *c.rbar});
            }
        }
    }

    double log_lik(int w, double a, double b, double sigma2) const {
        double sse = 0.0;
        for (const auto& p : points[static_cast<std::size_t>(w)]) {
            const double r = p.y - decay_mean(a, b, p.u);
            sse += p.weight * r * r;
        }
        return -0.5 * sse / sigma2;
    }
};

double& coordinate_ref(Theta& t, Coordinate c) {
    const auto w = static_cast<std::size_t>(c.w);
    return c.kind == Coordinate::Kind::A ? t.a[w] : t.b[w];
}

// Slice-sampling transition on one coordinate with step-out (budget split at
// random between the two ends) and shrinkage, restricted to `support`.
template <typename LogDensity>
double slice_step(double x0, Interval support, double width, int max_steps, LogDensity&& f, Rng& rng,
                  int& evaluations) {
    auto eval = [&](double x) {
        ++evaluations;
        return f(x);
    };
    const double f0 = eval(x0);
    if (!std::isfinite(f0)) throw Error(ErrorKind::SliceCollapse, "current point has zero density");
    const double level = f0 + std::log(rng.uniform());

    double left = x0 - width * rng.uniform();
    double right = left + width;
    left = std::max(left, support.lo);
    right = std::min(right, support.hi);

    int j = static_cast<int>(std::floor(max_steps * rng.uniform()));
    int k = max_steps - 1 - j;
    while (j > 0 && left > support.lo && eval(left) > level) {
        left = std::max(left - width, support.lo);
        --j;
    }
    while (k > 0 && right < support.hi && eval(right) > level) {
        right = std::min(right + width, support.hi);
        --k;
    }

    for (int i = 0; i < kMaxShrinks; ++i) {
        const double x1 = left + (right - left) * rng.uniform();
        if (x1 > support.lo && x1 < support.hi && eval(x1) > level) return x1;
        if (x1 < x0) {
            left = x1;
        } else {
            right = x1;
        }
    }
    throw Error(ErrorKind::SliceCollapse, "shrinkage did not terminate");
}

double completed_sse(const Theta& theta, const CellGrid& grid, const std::array<double, kCells>& values) {
    double sse = 0.0;
    for (int i = 0; i < kCells; ++i) {
        const Cell& c = grid.at_index(i);
        const auto w = static_cast<std::size_t>(cell_w(i));
        const double r = values[static_cast<std::size_t>(i)] - decay_mean(theta.a[w], theta.b[w], cell_u(i));
        sse += c.model_weight() * r * r;
    }
    return sse;
}

double draw_sigma2(double shape, double rate, Rng& rng) {
    const double precision = rng.gamma(shape, rate);
    const double s2 = 1.0 / precision;
    if (!(s2 >= kSigma2Floor)) return kSigma2Floor;
    return std::min(s2, 1e300);
}

class Chain {
public:
    Chain(const CellGrid& grid, const PriorSpec& spec, const McmcConfig& config, int chain_id)
        : grid_(grid),
          spec_(spec),
          config_(config),
          columns_(grid),
          missing_(grid.missing_cells()),
          rng_(Rng::stream(config.seed, static_cast<std::uint64_t>(chain_id))),
          chain_id_(chain_id) {
        for (int i = 0; i < kCells; ++i) {
            const Cell& c = grid.at_index(i);
            values_[static_cast<std::size_t>(i)] = c.rbar.value_or(0.0);
        }
    }

    PosteriorSamples run(std::optional<Theta> init) {
        theta_ = init ? *init : initial_draw();
        if (!in_support(theta_, spec_))
            throw Error(ErrorKind::SliceCollapse, "initial theta lies outside the prior support");
        theta_.sigma2 = std::max(theta_.sigma2, kSigma2Floor);

        PosteriorSamples out;
        out.config = config_;
        out.prior = spec_;
        out.missing = missing_;
        out.draws.reserve(static_cast<std::size_t>(config_.keep));
        out.imputed.reserve(static_cast<std::size_t>(config_.keep));

        const std::int64_t total = config_.burn_in + config_.keep * config_.thin;
        for (std::int64_t it = 1; it <= total; ++it) {
            sweep();
            const std::int64_t after = it - config_.burn_in;
            if (after > 0 && after % config_.thin == 0) {
                out.chain.push_back(chain_id_);
                out.iter.push_back(it);
                out.draws.push_back(theta_);
                std::vector<double> imp;
                imp.reserve(missing_.size());
                for (const auto& key : missing_)
                    imp.push_back(values_[static_cast<std::size_t>(cell_index(key.u, key.w))]);
                out.imputed.push_back(std::move(imp));
            }
        }
        out.evaluations = evaluations_;
        return out;
    }

private:
    Theta initial_draw() {
        for (int attempt = 0; attempt < kMaxInitDraws; ++attempt) {
            Theta t = sample_prior(spec_, rng_);
            double ll = 0.0;
            for (int w = 0; w < kWicketStates; ++w)
                ll += columns_.log_lik(w, t.a[static_cast<std::size_t>(w)], t.b[static_cast<std::size_t>(w)],
                                       std::max(t.sigma2, kSigma2Floor));
            if (std::isfinite(ll)) return t;
        }
        throw Error(ErrorKind::SliceCollapse, "no prior draw with a finite likelihood in 100 attempts");
    }

    void update(Coordinate c) {
        const Interval support = conditional_support(c, theta_, spec_);
        const double width = c.kind == Coordinate::Kind::A ? config_.slice_width_a : config_.slice_width_b;
        Theta probe = theta_;
        double& slot = coordinate_ref(probe, c);
        const auto w = static_cast<std::size_t>(c.w);
        auto f = [&](double x) {
            slot = x;
            const double lp = log_prior_coefficients(probe, spec_);
            if (lp == kNegInf) return kNegInf;
            return lp + columns_.log_lik(c.w, probe.a[w], probe.b[w], probe.sigma2);
        };
        int evals = 0;
        const double x = slice_step(coordinate_ref(theta_, c), support, width, config_.slice_max_steps, f, rng_,
                                    evals);
        coordinate_ref(theta_, c) = x;
        evaluations_[static_cast<std::size_t>(c.slot())] += evals;
    }

    // Moves log b_w while holding mean(50, w) fixed, so a_w and b_w travel
    // together along the ridge where the column's full-innings mean is
    // unchanged. Target includes the Jacobian of (m, log b) -> (a, b).
    void shape_update(int w) {
        const auto k = static_cast<std::size_t>(w);
        const double m = decay_mean(theta_.a[k], theta_.b[k], kOvers);
        Theta probe = theta_;
        auto f = [&](double z) {
            const double b = std::exp(z);
            const double frac = -std::expm1(-b * kOvers);
            if (!(b > 0.0) || !std::isfinite(b) || !(frac > 0.0)) return kNegInf;
            probe.b[k] = b;
            probe.a[k] = m / frac;
            const double lp = log_prior_coefficients(probe, spec_);
            if (lp == kNegInf) return kNegInf;
            return lp + columns_.log_lik(w, probe.a[k], b, probe.sigma2) - std::log(frac) + z;
        };
        const Interval support{-std::numeric_limits<double>::infinity(), std::log(1e300)};
        int evals = 0;
        const double z = slice_step(std::log(theta_.b[k]), support, kShapeWidth, config_.slice_max_steps, f,
                                    rng_, evals);
        const double b = std::exp(z);
        theta_.b[k] = b;
        theta_.a[k] = m / -std::expm1(-b * kOvers);
        evaluations_[static_cast<std::size_t>(kWicketStates + w)] += evals;
    }

    // Multiplies every a_w (or every b_w) by a common factor. Both orderings
    // are invariant under the scaling, so the move only meets the caps at
    // w = 0. Target in log factor includes the Jacobian factor^10.
    void scale_update(Coordinate::Kind kind) {
        const bool on_a = kind == Coordinate::Kind::A;
        const auto base = on_a ? theta_.a : theta_.b;
        Theta probe = theta_;
        auto f = [&](double z) {
            const double k = std::exp(z);
            auto& target = on_a ? probe.a : probe.b;
            for (std::size_t w = 0; w < kWicketStates; ++w) target[w] = base[w] * k;
            const double lp = log_prior_coefficients(probe, spec_);
            if (lp == kNegInf) return kNegInf;
            double ll = 0.0;
            for (int w = 0; w < kWicketStates; ++w) {
                const auto i = static_cast<std::size_t>(w);
                ll += columns_.log_lik(w, probe.a[i], probe.b[i], probe.sigma2);
            }
            return lp + ll + kWicketStates * z;
        };
        const Interval support{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        int evals = 0;
        const double k = std::exp(slice_step(0.0, support, kShapeWidth, config_.slice_max_steps, f, rng_, evals));
        auto& target = on_a ? theta_.a : theta_.b;
        for (std::size_t w = 0; w < kWicketStates; ++w) target[w] = base[w] * k;
    }

    void sweep() {
        for (int w = 0; w < kWicketStates; ++w) update({Coordinate::Kind::A, w});
        for (int w = 0; w < kWicketStates; ++w) update({Coordinate::Kind::B, w});
        for (int w = 0; w < kWicketStates; ++w) shape_update(w);
        scale_update(Coordinate::Kind::A);
        scale_update(Coordinate::Kind::B);

        const double sd = std::sqrt(theta_.sigma2);
        for (const auto& key : missing_) {
            const auto w = static_cast<std::size_t>(key.w);
            values_[static_cast<std::size_t>(cell_index(key.u, key.w))] =
                rng_.normal(decay_mean(theta_.a[w], theta_.b[w], key.u), sd);
        }

        const double sse = completed_sse(theta_, grid_, values_);
        theta_.sigma2 = draw_sigma2(spec_.gamma_a + 0.5 * kCells, spec_.gamma_b + 0.5 * sse, rng_);
    }

    const CellGrid& grid_;
    PriorSpec spec_;
    McmcConfig config_;
    Columns columns_;
    std::vector<CellKey> missing_;
    Rng rng_;
    int chain_id_;
    Theta theta_;
    std::array<double, kCells> values_{};
    std::array<std::int64_t, kThetaCoordinates> evaluations_{};
};

double median_of(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (n % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

}  // namespace

std::string Coordinate::name() const { return (kind == Kind::A ? "a" : "b") + std::to_string(w); }

Interval conditional_support(Coordinate c, const Theta& t, const PriorSpec& spec) {
    const auto w = static_cast<std::size_t>(c.w);
    const bool first = c.w == 0;
    const bool last = c.w == kWicketStates - 1;
    Interval iv{0.0, std::numeric_limits<double>::infinity()};

    if (c.kind == Coordinate::Kind::A) {
        iv.hi = first ? spec.A0 : t.a[w - 1];
        if (!first) iv.hi = std::min(iv.hi, t.a[w - 1] * t.b[w - 1] / t.b[w]);
        if (first && spec.parametrization == Parametrization::AC) iv.hi = std::min(iv.hi, spec.C0 / t.b[0]);
        if (!last) iv.lo = std::max(t.a[w + 1], t.a[w + 1] * t.b[w + 1] / t.b[w]);
    } else {
        if (first) {
            iv.hi = spec.parametrization == Parametrization::AB ? spec.B0 : spec.C0 / t.a[0];
        } else {
            iv.hi = t.a[w - 1] * t.b[w - 1] / t.a[w];
        }
        if (!last) iv.lo = t.a[w + 1] * t.b[w + 1] / t.a[w];
    }
    if (!(iv.lo < iv.hi)) {
        throw Error(ErrorKind::SliceCollapse, "empty conditional support for " + c.name());
    }
    return iv;
}

double log_conditional_target(const Theta& theta, const CellGrid& grid, const PriorSpec& spec) {
    const double lp = log_prior_coefficients(theta, spec);
    if (lp == kNegInf) return kNegInf;
    const Columns cols(grid);
    double ll = 0.0;
    for (int w = 0; w < kWicketStates; ++w) {
        const auto k = static_cast<std::size_t>(w);
        ll += cols.log_lik(w, theta.a[k], theta.b[k], theta.sigma2);
    }
    return lp + ll;
}

SliceResult slice_update_param(Coordinate c, const Theta& theta, const CellGrid& grid, const PriorSpec& spec,
                               const SliceSettings& settings, Rng& rng) {
    if (!in_support(theta, spec)) throw Error(ErrorKind::SliceCollapse, "theta lies outside the prior support");
    const Interval support = conditional_support(c, theta, spec);
    const Columns cols(grid);
    Theta probe = theta;
    double& slot = coordinate_ref(probe, c);
    const auto w = static_cast<std::size_t>(c.w);
    auto f = [&](double x) {
        slot = x;
        const double lp = log_prior_coefficients(probe, spec);
        if (lp == kNegInf) return kNegInf;
        return lp + cols.log_lik(c.w, probe.a[w], probe.b[w], probe.sigma2);
    };
    SliceResult out{theta, 0};
    const double width = c.kind == Coordinate::Kind::A ? settings.width_a : settings.width_b;
    coordinate_ref(out.theta, c) =
        slice_step(coordinate_ref(out.theta, c), support, width, settings.max_steps, f, rng, out.evaluations);
    return out;
}

GammaParams sigma2_conditional(const Theta& theta, const CellGrid& grid, const Imputations& imputed,
                               double gamma_a, double gamma_b) {
    std::array<double, kCells> values{};
    for (int i = 0; i < kCells; ++i) {
        const Cell& c = grid.at_index(i);
        if (c.rbar) {
            values[static_cast<std::size_t>(i)] = *c.rbar;
            continue;
        }
        const auto it = imputed.find({cell_u(i), cell_w(i)});
        if (it == imputed.end())
            throw Error(ErrorKind::MissingImputation, "no imputed value for cell (" + std::to_string(cell_u(i)) +
                                                          "," + std::to_string(cell_w(i)) + ")");
        values[static_cast<std::size_t>(i)] = it->second;
    }
    return {gamma_a + 0.5 * kCells, gamma_b + 0.5 * completed_sse(theta, grid, values)};
}

double gibbs_sigma2(const Theta& theta, const CellGrid& grid, const Imputations& imputed, double gamma_a,
                    double gamma_b, Rng& rng) {
    const auto g = sigma2_conditional(theta, grid, imputed, gamma_a, gamma_b);
    return draw_sigma2(g.shape, g.rate, rng);
}

Imputations impute_missing(const Theta& theta, const CellGrid& grid, Rng& rng) {
    Imputations out;
    const double sd = std::sqrt(theta.sigma2);
    for (const auto& key : grid.missing_cells()) {
        const double m = mean(key.u, key.w, theta);
        out.emplace(key, sd > 0.0 ? rng.normal(m, sd) : m);
    }
    return out;
}

PosteriorSamples run_chain(const CellGrid& grid, const PriorSpec& spec, const McmcConfig& config, int chain_id,
                           std::optional<Theta> init) {
    if (config.thin < 1 || config.keep < 0 || config.burn_in < 0)
        throw Error(ErrorKind::DomainError, "burn_in and keep must be non-negative, thin positive");
    Chain chain(grid, spec, config, chain_id);
    return chain.run(std::move(init));
}

PosteriorSamples run_chains(const CellGrid& grid, const PriorSpec& spec, const McmcConfig& config) {
    if (config.n_chains < 1) throw Error(ErrorKind::DomainError, "n_chains must be positive");
    std::vector<PosteriorSamples> parts(static_cast<std::size_t>(config.n_chains));
    std::vector<std::string> failures(parts.size());
    std::vector<ErrorKind> failure_kinds(parts.size(), ErrorKind::SliceCollapse);

#ifdef RESTAB_HAVE_OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (int c = 0; c < config.n_chains; ++c) {
        const auto k = static_cast<std::size_t>(c);
        try {
            parts[k] = run_chain(grid, spec, config, c);
        } catch (const Error& e) {
            failures[k] = e.what();
            failure_kinds[k] = e.kind();
        }
    }
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (!failures[k].empty()) throw Error(failure_kinds[k], "chain " + std::to_string(k) + ": " + failures[k]);

    PosteriorSamples merged = std::move(parts.front());
    for (std::size_t k = 1; k < parts.size(); ++k) {
        auto& p = parts[k];
        merged.chain.insert(merged.chain.end(), p.chain.begin(), p.chain.end());
        merged.iter.insert(merged.iter.end(), p.iter.begin(), p.iter.end());
        merged.draws.insert(merged.draws.end(), p.draws.begin(), p.draws.end());
        merged.imputed.insert(merged.imputed.end(), std::make_move_iterator(p.imputed.begin()),
                              std::make_move_iterator(p.imputed.end()));
        for (std::size_t i = 0; i < merged.evaluations.size(); ++i) merged.evaluations[i] += p.evaluations[i];
    }
    return merged;
}

bool repair_to_support(Theta& t) {
    bool repaired = false;
    for (std::size_t w = 0; w + 1 < kWicketStates; ++w) {
        const double a_cap = t.a[w] * kRepairFactor;
        if (!(t.a[w + 1] < t.a[w])) {
            t.a[w + 1] = std::min(t.a[w + 1], a_cap);
            repaired = true;
        }
        const double bound = t.a[w] * t.b[w] / t.a[w + 1];
        if (!(t.b[w + 1] < bound)) {
            t.b[w + 1] = std::min(t.b[w + 1], bound * kRepairFactor);
            repaired = true;
        }
    }
    return repaired;
}

MedianEstimate posterior_median_theta(const PosteriorSamples& samples) {
    if (samples.draws.empty()) throw Error(ErrorKind::EmptySamples, "no posterior draws to summarize");
    MedianEstimate est;
    std::vector<double> buf(samples.draws.size());
    auto coordinate_median = [&](auto&& get) {
        for (std::size_t i = 0; i < samples.draws.size(); ++i) buf[i] = get(samples.draws[i]);
        return median_of(buf);
    };
    for (std::size_t w = 0; w < kWicketStates; ++w) {
        est.theta.a[w] = coordinate_median([w](const Theta& t) { return t.a[w]; });
        est.theta.b[w] = coordinate_median([w](const Theta& t) { return t.b[w]; });
    }
    est.theta.sigma2 = coordinate_median([](const Theta& t) { return t.sigma2; });
    est.repaired = repair_to_support(est.theta);
    return est;
}

void write_posterior_csv(std::ostream& out, const PosteriorSamples& s) {
    std::vector<std::string> imp_names;
    imp_names.reserve(s.missing.size());
    for (const auto& k : s.missing) imp_names.push_back("imp_" + std::to_string(k.u) + "_" + std::to_string(k.w));

    out << "chain,iter,param,value\n";
    std::string prefix;
    for (std::size_t d = 0; d < s.draws.size(); ++d) {
        prefix = std::to_string(s.chain[d]) + ',' + std::to_string(s.iter[d]) + ',';
        const Theta& t = s.draws[d];
        for (std::size_t w = 0; w < kWicketStates; ++w)
            out << prefix << 'a' << w << ',' << csv::format_exact(t.a[w]) << '\n';
        for (std::size_t w = 0; w < kWicketStates; ++w)
            out << prefix << 'b' << w << ',' << csv::format_exact(t.b[w]) << '\n';
        out << prefix << "sigma2," << csv::format_exact(t.sigma2) << '\n';
        for (std::size_t i = 0; i < imp_names.size(); ++i)
            out << prefix << imp_names[i] << ',' << csv::format_exact(s.imputed[d][i]) << '\n';
    }
}

PosteriorSamples read_posterior_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || csv::chomp(line) != "chain,iter,param,value")
        throw Error(ErrorKind::MalformedRow, "posterior: expected header 'chain,iter,param,value'");

    PosteriorSamples s;
    std::map<CellKey, std::size_t> imp_slot;
    bool first_draw_done = false;
    std::pair<long long, long long> current{-1, -1};
    std::array<bool, kThetaCoordinates + 1> seen{};
    std::size_t lineno = 1;

    auto finish = [&] {
        if (s.draws.empty()) return;
        for (bool b : seen)
            if (!b) throw Error(ErrorKind::MalformedRow, "posterior: draw without all of a0..a9, b0..b9, sigma2");
        if (s.imputed.back().size() != s.missing.size())
            throw Error(ErrorKind::MalformedRow, "posterior: draws disagree on the imputed cell set");
    };

    while (std::getline(in, line)) {
        ++lineno;
        const auto text = csv::chomp(line);
        if (text.empty()) continue;
        const auto f = csv::split(text);
        const auto chain = f.size() == 4 ? csv::parse_int(f[0]) : std::nullopt;
        const auto iter = f.size() == 4 ? csv::parse_int(f[1]) : std::nullopt;
        const auto value = f.size() == 4 ? csv::parse_double(f[3]) : std::nullopt;
        if (!chain || !iter || !value)
            throw Error(ErrorKind::MalformedRow, "posterior line " + std::to_string(lineno) + ": bad row");

        if (std::pair(*chain, *iter) != current) {
            finish();
            if (!s.draws.empty()) first_draw_done = true;
            current = {*chain, *iter};
            s.chain.push_back(static_cast<int>(*chain));
            s.iter.push_back(*iter);
            s.draws.emplace_back();
            s.imputed.emplace_back(s.missing.size(), 0.0);
            seen.fill(false);
        }
        Theta& t = s.draws.back();
        const std::string_view p = f[2];
        if (p == "sigma2") {
            t.sigma2 = *value;
            seen[kThetaCoordinates] = true;
        } else if ((p[0] == 'a' || p[0] == 'b') && p.size() == 2 && p[1] >= '0' && p[1] <= '9') {
            const auto w = static_cast<std::size_t>(p[1] - '0');
            (p[0] == 'a' ? t.a : t.b)[w] = *value;
            seen[(p[0] == 'a' ? 0 : kWicketStates) + w] = true;
        } else if (p.substr(0, 4) == "imp_") {
            const auto parts = csv::split(p.substr(4), '_');
            const auto u = parts.size() == 2 ? csv::parse_int(parts[0]) : std::nullopt;
            const auto w = parts.size() == 2 ? csv::parse_int(parts[1]) : std::nullopt;
            if (!u || !w) throw Error(ErrorKind::MalformedRow, "posterior: bad imputed name " + std::string(p));
            const CellKey key{static_cast<int>(*u), static_cast<int>(*w)};
            auto it = imp_slot.find(key);
            if (it == imp_slot.end()) {
                if (first_draw_done)
                    throw Error(ErrorKind::MalformedRow, "posterior: imputed cell set changes between draws");
                it = imp_slot.emplace(key, s.missing.size()).first;
                s.missing.push_back(key);
                s.imputed.back().push_back(0.0);
            }
            s.imputed.back()[it->second] = *value;
        } else {
            throw Error(ErrorKind::MalformedRow, "posterior: unknown parameter " + std::string(p));
        }
    }
    finish();
    return s;
}

void write_config_echo(std::ostream& out, const McmcConfig& c, const PriorSpec& p) {
    out << "burn_in=" << c.burn_in << '\n'
        << "keep=" << c.keep << '\n'
        << "thin=" << c.thin << '\n'
        << "seed=" << c.seed << '\n'
        << "chains=" << c.n_chains << '\n'
        << "slice_width_a=" << csv::format_exact(c.slice_width_a) << '\n'
        << "slice_width_b=" << csv::format_exact(c.slice_width_b) << '\n'
        << "slice_max_steps=" << c.slice_max_steps << '\n'
        << "prior=" << to_string(p.parametrization) << '\n'
        << "A0=" << csv::format_exact(p.A0) << '\n'
        << "B0=" << csv::format_exact(p.B0) << '\n'
        << "C0=" << csv::format_exact(p.C0) << '\n'
        << "gamma_a=" << csv::format_exact(p.gamma_a) << '\n'
        << "gamma_b=" << csv::format_exact(p.gamma_b) << '\n';
}

}  // namespace restab

#include "restab/model.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "restab/csv.hpp"
#include "restab/error.hpp"

namespace restab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

double clamp_sigma2(double s2) {
    if (!(s2 >= 1e-12)) return 1e-12;
    if (!std::isfinite(s2) || s2 > 1e300) return 1e300;
    return s2;
}

double log_inv_gamma(double x, double shape, double rate) {
    return shape * std::log(rate) - std::lgamma(shape) - (shape + 1.0) * std::log(x) - rate / x;
}

}  // namespace

const char* to_string(Parametrization p) { return p == Parametrization::AB ? "ab" : "ac"; }

std::optional<Parametrization> parse_parametrization(const std::string& text) {
    if (text == "ab" || text == "AB") return Parametrization::AB;
    if (text == "ac" || text == "AC") return Parametrization::AC;
    return std::nullopt;
}

double decay_mean(double a, double b, double u) { return -a * std::expm1(-b * u); }

double mean(int u, int w, const Theta& theta) {
    if (u < 0 || u > kOvers) throw Error(ErrorKind::DomainError, "overs remaining must be in 0..50");
    if (w < 0 || w >= kWicketStates) throw Error(ErrorKind::DomainError, "wickets lost must be in 0..9");
    const auto k = static_cast<std::size_t>(w);
    return decay_mean(theta.a[k], theta.b[k], u);
}

bool in_support(const Theta& t, const PriorSpec& spec) {
    if (!positive_finite(t.sigma2)) return false;
    for (int w = 0; w < kWicketStates; ++w) {
        const auto k = static_cast<std::size_t>(w);
        if (!positive_finite(t.a[k]) || !positive_finite(t.b[k])) return false;
    }
    if (!(t.a[0] < spec.A0)) return false;
    if (spec.parametrization == Parametrization::AB) {
        if (!(t.b[0] < spec.B0)) return false;
    } else if (!(t.a[0] * t.b[0] < spec.C0)) {
        return false;
    }
    for (std::size_t w = 0; w + 1 < kWicketStates; ++w) {
        if (!(t.a[w + 1] < t.a[w])) return false;
        if (!(t.a[w + 1] * t.b[w + 1] < t.a[w] * t.b[w])) return false;
    }
    return true;
}

Theta sample_prior(const PriorSpec& spec, Rng& rng) {
    Theta t;
    t.a[0] = rng.uniform(0.0, spec.A0);
    for (std::size_t w = 1; w < kWicketStates; ++w) t.a[w] = rng.uniform(0.0, t.a[w - 1]);

    if (spec.parametrization == Parametrization::AB) {
        t.b[0] = rng.uniform(0.0, spec.B0);
        for (std::size_t w = 1; w < kWicketStates; ++w)
            t.b[w] = rng.uniform(0.0, t.a[w - 1] * t.b[w - 1] / t.a[w]);
    } else {
        double c = rng.uniform(0.0, spec.C0);
        t.b[0] = c / t.a[0];
        for (std::size_t w = 1; w < kWicketStates; ++w) {
            c = rng.uniform(0.0, c);
            t.b[w] = c / t.a[w];
        }
    }
    t.sigma2 = clamp_sigma2(1.0 / rng.gamma(spec.gamma_a, spec.gamma_b));
    return t;
}

double log_prior_coefficients(const Theta& t, const PriorSpec& spec) {
    for (int w = 0; w < kWicketStates; ++w) {
        const auto k = static_cast<std::size_t>(w);
        if (!positive_finite(t.a[k]) || !positive_finite(t.b[k])) return kNegInf;
    }
    if (!(t.a[0] < spec.A0)) return kNegInf;
    double lp = -std::log(spec.A0);

    if (spec.parametrization == Parametrization::AB) {
        if (!(t.b[0] < spec.B0)) return kNegInf;
        lp -= std::log(spec.B0);
        for (std::size_t w = 0; w + 1 < kWicketStates; ++w) {
            if (!(t.a[w + 1] < t.a[w])) return kNegInf;
            const double bound = t.a[w] * t.b[w] / t.a[w + 1];
            if (!(t.b[w + 1] < bound)) return kNegInf;
            lp -= std::log(t.a[w]) + std::log(bound);
        }
        return lp;
    }

    const double c0 = t.a[0] * t.b[0];
    if (!(c0 < spec.C0)) return kNegInf;
    lp -= std::log(spec.C0);
    for (std::size_t w = 0; w + 1 < kWicketStates; ++w) {
        if (!(t.a[w + 1] < t.a[w])) return kNegInf;
        const double c = t.a[w] * t.b[w];
        if (!(t.a[w + 1] * t.b[w + 1] < c)) return kNegInf;
        lp -= std::log(t.a[w]) + std::log(c);
    }
    // Jacobian of (a, c) -> (a, b).
    for (double a : t.a) lp += std::log(a);
    return lp;
}

double log_prior(const Theta& theta, const PriorSpec& spec) {
    if (!positive_finite(theta.sigma2)) return kNegInf;
    const double lp = log_prior_coefficients(theta, spec);
    if (lp == kNegInf) return kNegInf;
    return lp + log_inv_gamma(theta.sigma2, spec.gamma_a, spec.gamma_b);
}

double log_likelihood(const Theta& theta, const CellGrid& grid, const Imputations& imputed) {
    double ll = 0.0;
    for (int i = 0; i < kCells; ++i) {
        const Cell& c = grid.at_index(i);
        const int u = cell_u(i);
        const int w = cell_w(i);
        double y = 0.0;
        if (c.rbar) {
            y = *c.rbar;
        } else {
            const auto it = imputed.find({u, w});
            if (it == imputed.end())
                throw Error(ErrorKind::MissingImputation,
                            "no imputed value for cell (" + std::to_string(u) + "," + std::to_string(w) + ")");
            y = it->second;
        }
        const double var = theta.sigma2 / c.model_weight();
        const double r = y - mean(u, w, theta);
        ll += -0.5 * (kLog2Pi + std::log(var)) - 0.5 * r * r / var;
    }
    return ll;
}

MonoReport check_mono_conditions(const Theta& t) {
    MonoReport report;
    auto flag = [&](MonoViolation v) {
        if (!report.first) report.first = v;
        ++report.violations;
    };

    for (int w = 0; w < kWicketStates; ++w) {
        const auto k = static_cast<std::size_t>(w);
        const double a = t.a[k];
        const double b = t.b[k];
        for (int u = 1; u < kOvers; ++u) {
            // mean(u+1) - mean(u) = a e^{-b u} (1 - e^{-b})
            const double log_inc = std::log(a) - b * u + std::log(-std::expm1(-b));
            if (!(std::isfinite(log_inc)) || !(a > 0.0) || !(b > 0.0)) {
                flag({MonoAxis::Overs, u + 1, w, u, w});
            }
        }
    }
    for (int u = 1; u <= kOvers; ++u) {
        for (std::size_t w = 0; w + 1 < kWicketStates; ++w) {
            const double hi = decay_mean(t.a[w], t.b[w], u);
            const double lo = decay_mean(t.a[w + 1], t.b[w + 1], u);
            if (!(hi > lo)) {
                flag({MonoAxis::Wickets, u, static_cast<int>(w), u, static_cast<int>(w) + 1});
            }
        }
    }
    return report;
}

void write_theta_csv(std::ostream& out, const Theta& theta) {
    out << "w,a,b\n";
    for (std::size_t w = 0; w < kWicketStates; ++w) {
        out << w << ',' << csv::format_exact(theta.a[w]) << ',' << csv::format_exact(theta.b[w]) << '\n';
    }
    out << "sigma2," << csv::format_exact(theta.sigma2) << '\n';
}

Theta read_theta_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || csv::chomp(line) != "w,a,b")
        throw Error(ErrorKind::MalformedRow, "theta: expected header 'w,a,b'");
    Theta t;
    std::array<bool, kWicketStates> seen{};
    bool have_sigma2 = false;
    while (std::getline(in, line)) {
        const auto text = csv::chomp(line);
        if (text.empty()) continue;
        const auto f = csv::split(text);
        if (f.size() == 2 && f[0] == "sigma2") {
            const auto v = csv::parse_double(f[1]);
            if (!v) throw Error(ErrorKind::MalformedRow, "theta: bad sigma2");
            t.sigma2 = *v;
            have_sigma2 = true;
            continue;
        }
        if (f.size() != 3) throw Error(ErrorKind::MalformedRow, "theta: expected 'w,a,b' rows");
        const auto w = csv::parse_int(f[0]);
        const auto a = csv::parse_double(f[1]);
        const auto b = csv::parse_double(f[2]);
        if (!w || *w < 0 || *w >= kWicketStates || !a || !b)
            throw Error(ErrorKind::MalformedRow, "theta: bad row '" + std::string(text) + "'");
        const auto k = static_cast<std::size_t>(*w);
        t.a[k] = *a;
        t.b[k] = *b;
        seen[k] = true;
    }
    for (bool s : seen)
        if (!s) throw Error(ErrorKind::MalformedRow, "theta: all ten wicket rows are required");
    if (!have_sigma2) throw Error(ErrorKind::MalformedRow, "theta: missing sigma2 record");
    return t;
}

}  // namespace restab

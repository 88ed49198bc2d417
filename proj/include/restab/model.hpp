#pragma once

// Exponential-decay mean surface, the monotonicity-preserving prior and the
// weighted normal likelihood over the 500-cell grid.
//
//   mean(u, w) = a_w (1 - exp(-b_w u))
//   a_0 ~ U(0, A0),  b_0 ~ U(0, B0)
//   a_{w+1} | a_w          ~ U(0, a_w)
//   b_{w+1} | a_w, b_w, .. ~ U(0, a_w b_w / a_{w+1})
//   1 / sigma2             ~ Gamma(shape gamma_a, rate gamma_b)
//
// The AC parametrization draws c_w = a_w b_w instead:
//   c_0 ~ U(0, C0),  c_{w+1} | c_w ~ U(0, c_w),  b_w = c_w / a_w
// and its density over (a, b) carries the Jacobian prod_w a_w.

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/rng.hpp"

namespace restab {

struct Theta {
    std::array<double, kWicketStates> a{};
    std::array<double, kWicketStates> b{};
    double sigma2 = 1.0;

    bool operator==(const Theta&) const = default;
};

enum class Parametrization { AB, AC };

struct PriorSpec {
    double A0 = 2000.0;
    double B0 = 100.0;
    double C0 = 2000.0;
    double gamma_a = 0.1;  // Gamma shape for 1 / sigma2
    double gamma_b = 0.1;  // Gamma rate for 1 / sigma2
    Parametrization parametrization = Parametrization::AB;
};

const char* to_string(Parametrization p);
std::optional<Parametrization> parse_parametrization(const std::string& text);

// Closed-form mean; u may be fractional. No range checks.
double decay_mean(double a, double b, double u);

// mean(u, w, theta) for u in 0..50, w in 0..9; DomainError otherwise.
double mean(int u, int w, const Theta& theta);

// Strict support membership of theta under the prior (ordering, products,
// the A0/B0 or A0/C0 box, sigma2 > 0).
bool in_support(const Theta& theta, const PriorSpec& spec);

Theta sample_prior(const PriorSpec& spec, Rng& rng);

// Sum of the log conditional prior densities plus the inverse-gamma log
// density of sigma2. -infinity outside the support.
double log_prior(const Theta& theta, const PriorSpec& spec);

// Prior log density without the sigma2 term: the part the slice updates see.
double log_prior_coefficients(const Theta& theta, const PriorSpec& spec);

using Imputations = std::map<CellKey, double>;

// Sum over all 500 cells of log N(y | mean, sigma2 / weight), where y is rbar
// with weight n for observed cells and the supplied imputed value with
// weight 1 for missing cells. Throws MissingImputation if one is absent.
double log_likelihood(const Theta& theta, const CellGrid& grid, const Imputations& imputed);

enum class MonoAxis { Overs, Wickets };

struct MonoViolation {
    MonoAxis axis;
    int u = 0;  // first cell of the offending pair
    int w = 0;
    int u2 = 0;  // second cell, which should be strictly smaller
    int w2 = 0;
};

struct MonoReport {
    std::optional<MonoViolation> first;
    int violations = 0;

    bool ok() const { return violations == 0; }
};

// Checks, over u in 1..50 and w in 0..9, that the mean is strictly increasing
// in u and strictly decreasing in w. The u-direction increment is evaluated
// in log form, log a + (-b u) + log(1 - e^{-b}), so it stays exact where
// 1 - e^{-b u} has already rounded to 1.
MonoReport check_mono_conditions(const Theta& theta);

// Theta CSV: header `w,a,b`, ten rows, then a `sigma2,<value>` record.
void write_theta_csv(std::ostream& out, const Theta& theta);
Theta read_theta_csv(std::istream& in);

}  // namespace restab

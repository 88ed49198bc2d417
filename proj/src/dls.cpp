#include "restab/dls.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "restab/error.hpp"

namespace restab {

namespace {

// Arithmetic such as 200 + 245 * 10 / 100 can land a hair under an integer
// that the exact value reaches; absorb that before flooring.
constexpr double kFloorSlack = 1e-9;

}  // namespace

double resources(const ResourceTable& table, MatchState state) {
    if (state.overs_remaining < 0 || state.overs_remaining > kOvers)
        throw Error(ErrorKind::DomainError, "overs remaining must be in 0..50");
    if (state.wickets_lost < 0 || state.wickets_lost >= kWicketStates)
        throw Error(ErrorKind::DomainError, "wickets lost must be in 0..9");
    return table.percent(state.overs_remaining, state.wickets_lost);
}

TargetResult target(const TargetInput& in) {
    if (in.score < 0) throw Error(ErrorKind::DomainError, "score must be non-negative");
    if (!(in.p1 > 0.0 && in.p1 <= 100.0) || !(in.p2 > 0.0 && in.p2 <= 100.0))
        throw Error(ErrorKind::DomainError, "resource percentages must lie in (0, 100]");

    const auto s = static_cast<double>(in.score);
    TargetResult r;
    if (in.p1 > in.p2) {
        r.par = s * in.p2 / in.p1;
    } else if (in.p1 == in.p2) {
        r.par = s;
    } else {
        if (!(in.g50 > 0.0)) throw Error(ErrorKind::DomainError, "G50 must be positive when P2 exceeds P1");
        r.par = s + in.g50 * (in.p2 - in.p1) / 100.0;
    }
    r.target = static_cast<long long>(std::floor(r.par + kFloorSlack * std::max(1.0, r.par))) + 1;
    return r;
}

}  // namespace restab

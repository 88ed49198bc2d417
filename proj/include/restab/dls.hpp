#pragma once

// Resource lookups for match states and the interrupted-match target reset.

#include "restab/tables.hpp"

namespace restab {

struct MatchState {
    int overs_remaining = 50;  // 0..50; 0 means the innings is over
    int wickets_lost = 0;      // 0..9
};

struct TargetInput {
    long long score = 0;  // team 1 score S
    double p1 = 100.0;    // team 1 resources, percent
    double p2 = 100.0;    // team 2 resources, percent
    double g50 = 0.0;     // mean full-innings score; only read when p2 > p1
};

struct TargetResult {
    double par = 0.0;
    long long target = 0;  // floor(par) + 1
};

double resources(const ResourceTable& table, MatchState state);

// par = S P2/P1         if P1 > P2
//     = S               if P1 = P2
//     = S + G50 (P2-P1)/100  if P1 < P2
// and the target is floor(par) + 1.
TargetResult target(const TargetInput& input);

}  // namespace restab

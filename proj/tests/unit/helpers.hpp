#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/model.hpp"
#include "restab/synth.hpp"

namespace restab::testing {

// Full 300-ball innings. Over k scores runs[k-1] (all on its last ball) and
// loses wickets[k-1] wickets on its first balls.
inline MatchEvents innings(const std::string& id, const std::array<int, kOvers>& runs,
                           const std::array<int, kOvers>& wickets = {}) {
    MatchEvents m{id, {}};
    for (int over = 1; over <= kOvers; ++over) {
        for (int ball = 1; ball <= kBallsPerOver; ++ball) {
            BallEvent ev;
            ev.over = over;
            ev.ball = ball;
            ev.runs = ball == kBallsPerOver ? runs[static_cast<std::size_t>(over - 1)] : 0;
            ev.wicket_fell = ball <= wickets[static_cast<std::size_t>(over - 1)];
            m.events.push_back(ev);
        }
    }
    return m;
}

inline std::array<int, kOvers> constant_runs(int per_over) {
    std::array<int, kOvers> r{};
    r.fill(per_over);
    return r;
}

inline InningsSummary summary_of(const MatchEvents& m) { return std::get<InningsSummary>(summarize_innings(m)); }

inline std::string corpus_text(const std::vector<MatchEvents>& matches) {
    std::ostringstream os;
    write_corpus_csv(os, matches);
    return os.str();
}

// A valid theta near realistic fitted surfaces.
inline Theta realistic_theta() { return default_theta_star(); }

}  // namespace restab::testing

#include "restab/corpus.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "restab/csv.hpp"
#include "restab/error.hpp"

namespace restab {

namespace {

constexpr std::string_view kCorpusHeader = "match_id,over,ball,runs,wicket_fell";
constexpr std::string_view kGridHeader = "u,w,n,rbar";

void check_cell(int u, int w) {
    if (u < 1 || u > kOvers || w < 0 || w >= kWicketStates) {
        throw Error(ErrorKind::DomainError,
                    "cell (" + std::to_string(u) + "," + std::to_string(w) + ") outside the 50x10 grid");
    }
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

BallEvent parse_row(const std::vector<std::string_view>& f, std::size_t line) {
    const auto over = csv::parse_int(f[1]);
    const auto ball = csv::parse_int(f[2]);
    const auto runs = csv::parse_int(f[3]);
    if (!over || *over < 1 || *over > kOvers)
        throw Error(ErrorKind::MalformedRow, at_line(line) + "over must be an integer in 1..50");
    if (!ball || *ball < 1 || *ball > kBallsPerOver)
        throw Error(ErrorKind::MalformedRow, at_line(line) + "ball must be an integer in 1..6");
    if (!runs || *runs < 0)
        throw Error(ErrorKind::MalformedRow, at_line(line) + "runs must be a non-negative integer");
    BallEvent ev;
    ev.over = static_cast<int>(*over);
    ev.ball = static_cast<int>(*ball);
    ev.runs = static_cast<int>(*runs);
    if (f[4] == "true") {
        ev.wicket_fell = true;
    } else if (f[4] == "false") {
        ev.wicket_fell = false;
    } else {
        throw Error(ErrorKind::MalformedRow, at_line(line) + "wicket_fell must be true or false");
    }
    return ev;
}

}  // namespace

const char* to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::ShortInnings: return "fewer than 300 legal deliveries (not a complete 50-over innings)";
        case RejectReason::AllOut: return "all out before the 50th over completed";
    }
    return "unknown";
}

const Checkpoint& InningsSummary::at(int u) const {
    if (u < 0 || u >= kOvers) throw Error(ErrorKind::DomainError, "checkpoint u must be in 0..49");
    return checkpoints[static_cast<std::size_t>(kOvers - 1 - u)];
}

const Cell& CellGrid::at(int u, int w) const {
    check_cell(u, w);
    return cells_[static_cast<std::size_t>(cell_index(u, w))];
}

Cell& CellGrid::at(int u, int w) {
    check_cell(u, w);
    return cells_[static_cast<std::size_t>(cell_index(u, w))];
}

double CellGrid::g50() const {
    const auto& c = at(kOvers, 0);
    if (!c.rbar) throw Error(ErrorKind::EmptyCorpus, "cell (50,0) is not observed");
    return *c.rbar;
}

std::vector<CellKey> CellGrid::missing_cells() const {
    std::vector<CellKey> out;
    for (int i = 0; i < kCells; ++i) {
        if (!cells_[static_cast<std::size_t>(i)].observed()) out.push_back({cell_u(i), cell_w(i)});
    }
    return out;
}

int CellGrid::observed_count() const {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.observed(); }));
}

ParsedCorpus parse_corpus(std::istream& in, ParseOptions options) {
    ParsedCorpus out;
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw Error(ErrorKind::MalformedRow, "line 1: missing header");
    ++lineno;
    if (csv::chomp(line) != kCorpusHeader) {
        throw Error(ErrorKind::MalformedRow,
                    "line 1: expected header '" + std::string(kCorpusHeader) + "'");
    }

    std::map<std::string, std::vector<BallEvent>> by_match;
    while (std::getline(in, line)) {
        ++lineno;
        const auto text = csv::chomp(line);
        if (text.empty()) continue;
        const auto fields = csv::split(text);
        try {
            if (fields.size() != 5)
                throw Error(ErrorKind::MalformedRow, at_line(lineno) + "expected 5 fields, got " +
                                                         std::to_string(fields.size()));
            if (fields[0].empty()) throw Error(ErrorKind::MalformedRow, at_line(lineno) + "empty match_id");
            const BallEvent ev = parse_row(fields, lineno);
            auto& events = by_match[std::string(fields[0])];
            if (!events.empty()) {
                const auto& prev = events.back();
                if (std::pair(ev.over, ev.ball) <= std::pair(prev.over, prev.ball)) {
                    throw Error(ErrorKind::OrderViolation,
                                at_line(lineno) + "match " + std::string(fields[0]) + " delivery " +
                                    std::to_string(ev.over) + "." + std::to_string(ev.ball) +
                                    " does not follow " + std::to_string(prev.over) + "." +
                                    std::to_string(prev.ball));
                }
            }
            events.push_back(ev);
        } catch (const Error& e) {
            if (options.strict || e.kind() != ErrorKind::MalformedRow) throw;
            out.problems.push_back({lineno, e.what()});
        }
    }

    out.matches.reserve(by_match.size());
    for (auto& [id, events] : by_match) out.matches.push_back({id, std::move(events)});
    return out;
}

SummaryResult summarize_innings(const MatchEvents& match) {
    std::array<int, kOvers> over_runs{};
    std::array<int, kOvers> over_wickets{};
    int wickets = 0;
    int all_out_over = 0;
    const BallEvent* prev = nullptr;

    for (const auto& ev : match.events) {
        if (prev && std::pair(ev.over, ev.ball) <= std::pair(prev->over, prev->ball)) {
            throw Error(ErrorKind::OrderViolation, "match " + match.match_id + " events are not sorted");
        }
        prev = &ev;
        over_runs[static_cast<std::size_t>(ev.over - 1)] += ev.runs;
        if (ev.wicket_fell) {
            ++over_wickets[static_cast<std::size_t>(ev.over - 1)];
            if (++wickets == 10 && all_out_over == 0) all_out_over = ev.over;
        }
    }

    // The 10th wicket is tolerated only on the innings' final delivery.
    const auto full = static_cast<std::size_t>(kOvers * kBallsPerOver);
    if (all_out_over != 0) {
        const auto& last = match.events.back();
        const bool on_final_ball = last.over == kOvers && last.ball == kBallsPerOver && last.wicket_fell &&
                                   wickets == 10 && match.events.size() == full;
        if (!on_final_ball) return Rejected{match.match_id, RejectReason::AllOut};
    }
    // Sorted, in range and 300 events: every delivery of every over is present.
    if (match.events.size() < full) {
        return Rejected{match.match_id, RejectReason::ShortInnings};
    }

    InningsSummary s;
    s.match_id = match.match_id;
    for (int r : over_runs) s.total_runs += r;

    int so_far = 0;
    int w = 0;
    for (int k = 1; k <= kOvers; ++k) {
        so_far += over_runs[static_cast<std::size_t>(k - 1)];
        w += over_wickets[static_cast<std::size_t>(k - 1)];
        auto& cp = s.checkpoints[static_cast<std::size_t>(k - 1)];
        cp.u = kOvers - k;
        cp.w_at_u = w;
        cp.runs_to_come = s.total_runs - so_far;
    }
    return s;
}

IngestResult summarize_all(const std::vector<MatchEvents>& matches) {
    IngestResult out;
    for (const auto& m : matches) {
        auto r = summarize_innings(m);
        if (auto* s = std::get_if<InningsSummary>(&r)) {
            out.accepted.push_back(std::move(*s));
        } else {
            out.rejected.push_back(std::get<Rejected>(r));
        }
    }
    return out;
}

CellGrid aggregate(const std::vector<InningsSummary>& innings) {
    if (innings.empty()) throw Error(ErrorKind::EmptyCorpus, "no complete 50-over innings to aggregate");

    // Sum in ascending match_id order. Runs are integers, so 64-bit integer
    // sums are exact and the means are identical on every platform.
    std::vector<const InningsSummary*> order;
    order.reserve(innings.size());
    for (const auto& s : innings) order.push_back(&s);
    std::sort(order.begin(), order.end(),
              [](const InningsSummary* a, const InningsSummary* b) { return a->match_id < b->match_id; });

    std::array<std::int64_t, kCells> sums{};
    std::array<int, kCells> counts{};
    for (const auto* s : order) {
        const auto top = static_cast<std::size_t>(cell_index(kOvers, 0));
        sums[top] += s->total_runs;
        ++counts[top];
        for (const auto& cp : s->checkpoints) {
            if (cp.u < 1 || cp.w_at_u >= kWicketStates) continue;
            const auto i = static_cast<std::size_t>(cell_index(cp.u, cp.w_at_u));
            sums[i] += cp.runs_to_come;
            ++counts[i];
        }
    }

    CellGrid grid;
    for (int i = 0; i < kCells; ++i) {
        const auto k = static_cast<std::size_t>(i);
        Cell& c = grid.at(cell_u(i), cell_w(i));
        c.n = counts[k];
        if (counts[k] > 0) c.rbar = static_cast<double>(sums[k]) / counts[k];
    }
    return grid;
}

void write_grid_csv(std::ostream& out, const CellGrid& grid) {
    out << kGridHeader << '\n';
    for (int i = 0; i < kCells; ++i) {
        const Cell& c = grid.at_index(i);
        out << cell_u(i) << ',' << cell_w(i) << ',' << c.n << ',';
        if (c.rbar) out << csv::format_exact(*c.rbar);
        out << '\n';
    }
}

CellGrid read_grid_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || csv::chomp(line) != kGridHeader)
        throw Error(ErrorKind::MalformedRow, "line 1: expected header '" + std::string(kGridHeader) + "'");

    CellGrid grid;
    std::array<bool, kCells> seen{};
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto text = csv::chomp(line);
        if (text.empty()) continue;
        const auto f = csv::split(text);
        if (f.size() != 4) throw Error(ErrorKind::MalformedRow, at_line(lineno) + "expected 4 fields");
        const auto u = csv::parse_int(f[0]);
        const auto w = csv::parse_int(f[1]);
        const auto n = csv::parse_int(f[2]);
        if (!u || !w || !n || *u < 1 || *u > kOvers || *w < 0 || *w >= kWicketStates || *n < 0)
            throw Error(ErrorKind::MalformedRow, at_line(lineno) + "bad u, w or n");
        const auto idx = static_cast<std::size_t>(cell_index(static_cast<int>(*u), static_cast<int>(*w)));
        if (seen[idx]) throw Error(ErrorKind::MalformedRow, at_line(lineno) + "duplicate cell");
        seen[idx] = true;
        Cell& c = grid.at(static_cast<int>(*u), static_cast<int>(*w));
        c.n = static_cast<int>(*n);
        if (!f[3].empty()) {
            const auto r = csv::parse_double(f[3]);
            if (!r || *r < 0.0) throw Error(ErrorKind::MalformedRow, at_line(lineno) + "bad rbar");
            if (c.n == 0) throw Error(ErrorKind::MalformedRow, at_line(lineno) + "observed cell with n = 0");
            c.rbar = *r;
        } else if (c.n != 0) {
            throw Error(ErrorKind::MalformedRow, at_line(lineno) + "missing cell with n > 0");
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw Error(ErrorKind::MalformedRow, "grid must list all 500 cells");
    return grid;
}

void write_corpus_csv(std::ostream& out, const std::vector<MatchEvents>& matches) {
    out << kCorpusHeader << '\n';
    for (const auto& m : matches) {
        for (const auto& ev : m.events) {
            out << m.match_id << ',' << ev.over << ',' << ev.ball << ',' << ev.runs << ','
                << (ev.wicket_fell ? "true" : "false") << '\n';
        }
    }
}

}  // namespace restab

#pragma once

// Ball-by-ball first-innings ingestion and the 50 x 10 cell grid.
//
// Input CSV (exact header):  match_id,over,ball,runs,wicket_fell
//   - legal deliveries only; extras are folded into the delivery's runs
//   - wicket_fell is the literal `true` or `false`
// Grid CSV:                  u,w,n,rbar
//   - rows ordered u = 50..1, then w = 0..9; rbar empty for a missing cell

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace restab {

inline constexpr int kOvers = 50;
inline constexpr int kBallsPerOver = 6;
inline constexpr int kWicketStates = 10;  // w = 0..9 enter the model
inline constexpr int kCells = kOvers * kWicketStates;

struct BallEvent {
    int over = 0;  // 1..50
    int ball = 0;  // 1..6
    int runs = 0;
    bool wicket_fell = false;

    bool operator==(const BallEvent&) const = default;
};

struct MatchEvents {
    std::string match_id;
    std::vector<BallEvent> events;  // strictly increasing (over, ball)
};

struct Checkpoint {
    int u = 0;             // overs remaining after the completed over
    int w_at_u = 0;        // cumulative wickets, 0..10
    int runs_to_come = 0;  // total_runs minus runs so far
};

struct InningsSummary {
    std::string match_id;
    int total_runs = 0;
    std::array<Checkpoint, kOvers> checkpoints{};  // u = 49 down to 0

    const Checkpoint& at(int u) const;
};

enum class RejectReason { ShortInnings, AllOut };

struct Rejected {
    std::string match_id;
    RejectReason reason;
};

using SummaryResult = std::variant<InningsSummary, Rejected>;

// Position of cell (u, w) in grid order: u descending, then w ascending.
constexpr int cell_index(int u, int w) { return (kOvers - u) * kWicketStates + w; }
constexpr int cell_u(int index) { return kOvers - index / kWicketStates; }
constexpr int cell_w(int index) { return index % kWicketStates; }

struct CellKey {
    int u = 0;
    int w = 0;
    auto operator<=>(const CellKey&) const = default;
};

struct Cell {
    int n = 0;                    // observed count; 0 when missing
    std::optional<double> rbar;   // empty means MISSING

    bool observed() const { return rbar.has_value(); }
    // Weight seen by the likelihood: n for observed cells, 1 for missing ones.
    double model_weight() const { return observed() ? static_cast<double>(n) : 1.0; }
};

class CellGrid {
public:
    CellGrid() = default;

    const Cell& at(int u, int w) const;
    Cell& at(int u, int w);
    const Cell& at_index(int index) const { return cells_[static_cast<std::size_t>(index)]; }

    const std::array<Cell, kCells>& cells() const { return cells_; }

    // Mean first-innings total; equals rbar(50, 0).
    double g50() const;

    std::vector<CellKey> missing_cells() const;
    int observed_count() const;

private:
    std::array<Cell, kCells> cells_{};
};

struct ParseOptions {
    // Raise on the first malformed row (default). When false, malformed rows
    // are collected and skipped.
    bool strict = true;
};

struct RowProblem {
    std::size_t line = 0;
    std::string message;
};

struct ParsedCorpus {
    std::vector<MatchEvents> matches;  // ascending match_id
    std::vector<RowProblem> problems;
};

ParsedCorpus parse_corpus(std::istream& in, ParseOptions options = {});

SummaryResult summarize_innings(const MatchEvents& match);

CellGrid aggregate(const std::vector<InningsSummary>& innings);

struct IngestResult {
    std::vector<InningsSummary> accepted;
    std::vector<Rejected> rejected;
};

// Summarize every match and split accepted from rejected innings.
IngestResult summarize_all(const std::vector<MatchEvents>& matches);

void write_grid_csv(std::ostream& out, const CellGrid& grid);
CellGrid read_grid_csv(std::istream& in);

void write_corpus_csv(std::ostream& out, const std::vector<MatchEvents>& matches);

const char* to_string(RejectReason reason);

}  // namespace restab

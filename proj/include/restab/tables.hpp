#pragma once

// 50 x 10 resource-percentage tables: Bayesian (from a Theta), empirical
// (from a CellGrid) and the embedded 2013 Standard Edition D/L table.
//
// Table CSV: header `u,w0,...,w9`, 50 rows u = 50..1, fixed two decimals,
// empty field for a missing entry.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "restab/corpus.hpp"
#include "restab/model.hpp"

namespace restab {

enum class TableSource { Bayes, Empirical, DL2013 };

const char* to_string(TableSource s);
std::optional<TableSource> parse_table_source(const std::string& text);

inline constexpr const char* kDlTableVersion = "D/L 2013 Standard Edition (50-over, 500 cells)";

class ResourceTable {
public:
    ResourceTable() = default;
    explicit ResourceTable(TableSource source) : source_(source) {}

    TableSource source() const { return source_; }

    // Percentage at (u, w) for u in 1..50, w in 0..9; nullopt when missing.
    std::optional<double> at(int u, int w) const;
    void set(int u, int w, std::optional<double> value);

    // Lookup that treats u = 0 as zero resources and throws DomainError for
    // a missing entry.
    double percent(int u, int w) const;

    bool complete() const;

private:
    TableSource source_ = TableSource::Bayes;
    std::array<std::optional<double>, kCells> p_{};
};

struct TableViolation {
    MonoAxis axis;
    int u = 0;  // cell expected to hold the larger value
    int w = 0;
    int u2 = 0;  // neighbouring cell expected to hold the smaller value
    int w2 = 0;
    double larger = 0.0;
    double smaller = 0.0;
    bool equal = false;  // tie rather than increase
};

using MonoList = std::vector<TableViolation>;

// p(u, w) = 100 mean(u, w) / mean(50, 0), full precision.
ResourceTable bayes_table(const Theta& theta);

ResourceTable dl_reference();

// Compares every adjacent pair along both axes (missing entries skipped).
// Non-strict mode flags increases only; strict mode also flags ties.
MonoList check_monotone(const ResourceTable& table, bool strict);

std::string describe(const TableViolation& v);

void write_table_csv(std::ostream& out, const ResourceTable& table);
ResourceTable read_table_csv(std::istream& in, TableSource source);

}  // namespace restab

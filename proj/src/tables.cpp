#include "restab/tables.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "restab/csv.hpp"
#include "restab/error.hpp"

namespace restab {

namespace detail {
extern const int kDl2013Hundredths[kOvers][kWicketStates];
}

namespace {

void check_cell(int u, int w) {
    if (u < 1 || u > kOvers || w < 0 || w >= kWicketStates)
        throw Error(ErrorKind::DomainError,
                    "table cell (" + std::to_string(u) + "," + std::to_string(w) + ") outside 50x10");
}

}  // namespace

const char* to_string(TableSource s) {
    switch (s) {
        case TableSource::Bayes: return "bayes";
        case TableSource::Empirical: return "empirical";
        case TableSource::DL2013: return "dl2013";
    }
    return "unknown";
}

std::optional<TableSource> parse_table_source(const std::string& text) {
    if (text == "bayes") return TableSource::Bayes;
    if (text == "empirical") return TableSource::Empirical;
    if (text == "dl2013") return TableSource::DL2013;
    return std::nullopt;
}

std::optional<double> ResourceTable::at(int u, int w) const {
    check_cell(u, w);
    return p_[static_cast<std::size_t>(cell_index(u, w))];
}

void ResourceTable::set(int u, int w, std::optional<double> value) {
    check_cell(u, w);
    p_[static_cast<std::size_t>(cell_index(u, w))] = value;
}

double ResourceTable::percent(int u, int w) const {
    if (u == 0 && w >= 0 && w < kWicketStates) return 0.0;
    const auto v = at(u, w);
    if (!v)
        throw Error(ErrorKind::DomainError,
                    "table has no entry at (" + std::to_string(u) + "," + std::to_string(w) + ")");
    return *v;
}

bool ResourceTable::complete() const {
    for (const auto& v : p_)
        if (!v) return false;
    return true;
}

ResourceTable bayes_table(const Theta& theta) {
    ResourceTable t(TableSource::Bayes);
    const double full = mean(kOvers, 0, theta);
    for (int i = 0; i < kCells; ++i) {
        const int u = cell_u(i);
        const int w = cell_w(i);
        t.set(u, w, u == kOvers && w == 0 ? 100.0 : 100.0 * (mean(u, w, theta) / full));
    }
    return t;
}

ResourceTable dl_reference() {
    ResourceTable t(TableSource::DL2013);
    for (int row = 0; row < kOvers; ++row)
        for (int w = 0; w < kWicketStates; ++w)
            t.set(kOvers - row, w, detail::kDl2013Hundredths[row][w] / 100.0);
    return t;
}

MonoList check_monotone(const ResourceTable& table, bool strict) {
    MonoList out;
    auto compare = [&](MonoAxis axis, int u, int w, int u2, int w2) {
        const auto hi = table.at(u, w);
        const auto lo = table.at(u2, w2);
        if (!hi || !lo) return;
        if (*lo > *hi || (strict && *lo == *hi)) out.push_back({axis, u, w, u2, w2, *hi, *lo, *lo == *hi});
    };
    for (int u = kOvers; u >= 1; --u) {
        for (int w = 0; w < kWicketStates; ++w) {
            if (u > 1) compare(MonoAxis::Overs, u, w, u - 1, w);
            if (w + 1 < kWicketStates) compare(MonoAxis::Wickets, u, w, u, w + 1);
        }
    }
    return out;
}

std::string describe(const TableViolation& v) {
    std::ostringstream os;
    os << (v.axis == MonoAxis::Overs ? "overs" : "wickets") << ": (" << v.u << "," << v.w << ")="
       << csv::format_fixed(v.larger, 2) << (v.equal ? " == " : " < ") << "(" << v.u2 << "," << v.w2
       << ")=" << csv::format_fixed(v.smaller, 2);
    return os.str();
}

void write_table_csv(std::ostream& out, const ResourceTable& table) {
    out << 'u';
    for (int w = 0; w < kWicketStates; ++w) out << ",w" << w;
    out << '\n';
    for (int u = kOvers; u >= 1; --u) {
        out << u;
        for (int w = 0; w < kWicketStates; ++w) {
            out << ',';
            if (const auto v = table.at(u, w)) out << csv::format_fixed(*v, 2);
        }
        out << '\n';
    }
}

ResourceTable read_table_csv(std::istream& in, TableSource source) {
    std::string line;
    if (!std::getline(in, line) || csv::chomp(line) != "u,w0,w1,w2,w3,w4,w5,w6,w7,w8,w9")
        throw Error(ErrorKind::MalformedRow, "table: expected header 'u,w0,...,w9'");
    ResourceTable t(source);
    std::array<bool, kOvers + 1> seen{};
    while (std::getline(in, line)) {
        const auto text = csv::chomp(line);
        if (text.empty()) continue;
        const auto f = csv::split(text);
        const auto u = f.size() == 11 ? csv::parse_int(f[0]) : std::nullopt;
        if (!u || *u < 1 || *u > kOvers || seen[static_cast<std::size_t>(*u)])
            throw Error(ErrorKind::MalformedRow, "table: bad row '" + std::string(text) + "'");
        seen[static_cast<std::size_t>(*u)] = true;
        for (int w = 0; w < kWicketStates; ++w) {
            const auto cell = f[static_cast<std::size_t>(w + 1)];
            if (cell.empty()) continue;
            const auto v = csv::parse_double(cell);
            if (!v) throw Error(ErrorKind::MalformedRow, "table: bad value '" + std::string(cell) + "'");
            t.set(static_cast<int>(*u), w, *v);
        }
    }
    for (int u = 1; u <= kOvers; ++u)
        if (!seen[static_cast<std::size_t>(u)]) throw Error(ErrorKind::MalformedRow, "table: must have rows 1..50");
    return t;
}

}  // namespace restab

#include "restab/nonparam.hpp"

#include "restab/error.hpp"

namespace restab {

EmpiricalTable empirical_table(const CellGrid& grid) {
    const Cell& top = grid.at(kOvers, 0);
    if (!top.rbar || !(*top.rbar > 0.0))
        throw Error(ErrorKind::EmptyCorpus, "cell (50,0) must be observed with a positive mean");

    EmpiricalTable out;
    out.denom = *top.rbar;
    for (int i = 0; i < kCells; ++i) {
        const Cell& c = grid.at_index(i);
        if (!c.rbar) continue;
        const int u = cell_u(i);
        const int w = cell_w(i);
        out.table.set(u, w, u == kOvers && w == 0 ? 100.0 : 100.0 * *c.rbar / out.denom);
    }
    return out;
}

}  // namespace restab

#pragma once

// Empirical resource table: observed cell means divided by the mean
// full-innings score. Missing cells stay missing.

#include "restab/corpus.hpp"
#include "restab/tables.hpp"

namespace restab {

struct EmpiricalTable {
    ResourceTable table{TableSource::Empirical};
    double denom = 0.0;  // mean R(50, 0)
};

EmpiricalTable empirical_table(const CellGrid& grid);

}  // namespace restab

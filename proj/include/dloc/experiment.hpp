#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dloc/annihilator.hpp"

namespace dloc {

struct ExperimentCell {
    int p = 0, q = 0;
    bool ok = false;
    std::string error;           // set when ok == false
    int kappa = 0;
    int curve_multiplicity = 0;
    std::vector<Multiplicity> m_trace;
    std::vector<double> per_d_ms;
    double total_ms = 0;
};

struct ExperimentTable {
    std::vector<ExperimentCell> rows;
};

// One Reiffen cell per p in [p_min, p_max], q = q_for_p(p). Cells are
// independent pure computations and fan out over an OpenMP worker pool;
// jobs <= 1 runs serially with identical results. Per-cell failures are
// recorded in the row instead of aborting the table.
ExperimentTable run_experiment(int p_min, int p_max, const std::function<int(int)>& q_for_p,
                               int jobs = 1, const KappaConfig& config = {});

} // namespace dloc

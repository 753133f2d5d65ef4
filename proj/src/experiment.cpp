#include "dloc/experiment.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dloc {

namespace {

ExperimentCell run_cell(int p, int q, const KappaConfig& config) {
    ExperimentCell cell;
    cell.p = p;
    cell.q = q;
    try {
        KappaResult r = kappa_and_annihilator(reiffen(p, q), config);
        cell.ok = true;
        cell.kappa = r.kappa;
        cell.curve_multiplicity = r.curve_multiplicity;
        for (const auto& rep : r.trace) {
            cell.m_trace.push_back(rep.m);
            cell.per_d_ms.push_back(rep.wall_ms);
        }
        cell.total_ms = r.total_ms;
    } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
    }
    return cell;
}

} // namespace

ExperimentTable run_experiment(int p_min, int p_max, const std::function<int(int)>& q_for_p, int jobs,
                               const KappaConfig& config) {
    if (p_min < 4) throw std::invalid_argument("run_experiment: requires p >= 4");
    if (p_max < p_min) throw std::invalid_argument("run_experiment: empty p range");
    const int count = p_max - p_min + 1;
    ExperimentTable table;
    table.rows.resize(static_cast<size_t>(count));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i)
            table.rows[static_cast<size_t>(i)] = run_cell(p_min + i, q_for_p(p_min + i), config);
        return table;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (int i = 0; i < count; ++i)
        table.rows[static_cast<size_t>(i)] = run_cell(p_min + i, q_for_p(p_min + i), config);
    return table;
}

} // namespace dloc

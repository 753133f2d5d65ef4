#include "dloc/report.hpp"

#include <algorithm>
#include <array>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

namespace dloc {

namespace {

nlohmann::json multiplicity_json(const Multiplicity& m) {
    if (m.is_finite()) return m.value;
    return to_string(m);
}

std::string m_trace_csv(const std::vector<Multiplicity>& ms) {
    std::string out;
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ",";
        out += to_string(ms[i]);
    }
    return out;
}

} // namespace

std::string kappa_report_text(const Poly& f, int a, const KappaResult& result) {
    std::ostringstream os;
    os << "f = " << to_string(f) << "\n";
    os << "a = " << a << "\n";
    os << "curve multiplicity m = " << result.curve_multiplicity << "\n";
    os << "genericity point = (" << to_string(result.point_a) << ", " << to_string(result.point_b)
       << ")\n";
    if (result.smooth_curve) os << "smooth curve: annihilator generated in order 1\n";
    for (const auto& rep : result.trace)
        os << "d=" << rep.d << ": m^(d) = " << to_string(rep.m) << "\n";
    os << "kappa = " << result.kappa << "\n";
    os << "Ann(f^" << a << ") generators:\n";
    for (const auto& g : result.annihilator.generators()) os << "  " << to_string(g) << "\n";
    return os.str();
}

nlohmann::json kappa_report_json(const Poly& f, int a, const KappaResult& result) {
    nlohmann::json j;
    j["f"] = to_string(f);
    j["a"] = a;
    j["kappa"] = result.kappa;
    j["curve_multiplicity"] = result.curve_multiplicity;
    j["genericity_point"] = {to_fraction_string(result.point_a), to_fraction_string(result.point_b)};
    j["smooth"] = result.smooth_curve;
    nlohmann::json trace = nlohmann::json::array();
    nlohmann::json per_d = nlohmann::json::array();
    for (const auto& rep : result.trace) {
        nlohmann::json r;
        r["d"] = rep.d;
        r["m"] = multiplicity_json(rep.m);
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : rep.generators) gens.push_back(to_string(g));
        r["generators"] = std::move(gens);
        trace.push_back(std::move(r));
        per_d.push_back(rep.wall_ms);
    }
    j["trace"] = std::move(trace);
    nlohmann::json ann = nlohmann::json::array();
    for (const auto& g : result.annihilator.generators()) ann.push_back(to_string(g));
    j["annihilator"] = std::move(ann);
    j["timings_ms"] = {{"total", result.total_ms}, {"per_d", std::move(per_d)}};
    return j;
}

std::string kappa_timings_text(const KappaResult& result) {
    std::ostringstream os;
    for (const auto& rep : result.trace)
        os << "[timing] d=" << rep.d << ": " << rep.wall_ms << " ms\n";
    os << "[timing] total: " << result.total_ms << " ms\n";
    return os.str();
}

std::string experiment_report_text(const ExperimentTable& table) {
    // aligned columns: p q kappa m^(d)
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"p", "q", "kappa", "m^(d)"});
    for (const auto& cell : table.rows) {
        if (cell.ok)
            rows.push_back({std::to_string(cell.p), std::to_string(cell.q), std::to_string(cell.kappa),
                            m_trace_csv(cell.m_trace)});
        else
            rows.push_back({std::to_string(cell.p), std::to_string(cell.q), "-", "error: " + cell.error});
    }
    std::array<size_t, 4> width{};
    for (const auto& r : rows)
        for (size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        for (size_t c = 0; c < 4; ++c) {
            os << r[c];
            if (c + 1 < 4) os << std::string(width[c] - r[c].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json experiment_report_json(const ExperimentTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& cell : table.rows) {
        nlohmann::json r;
        r["p"] = cell.p;
        r["q"] = cell.q;
        r["ok"] = cell.ok;
        if (cell.ok) {
            r["kappa"] = cell.kappa;
            r["curve_multiplicity"] = cell.curve_multiplicity;
            nlohmann::json ms = nlohmann::json::array();
            for (const auto& m : cell.m_trace) ms.push_back(multiplicity_json(m));
            r["m_trace"] = std::move(ms);
            r["timings_ms"] = {{"total", cell.total_ms}, {"per_d", cell.per_d_ms}};
        } else {
            r["error"] = cell.error;
        }
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"rows", std::move(rows)}};
}

std::string experiment_timings_text(const ExperimentTable& table) {
    std::ostringstream os;
    for (const auto& cell : table.rows) {
        os << "[timing] p=" << cell.p << " q=" << cell.q << ":";
        if (cell.ok)
            os << " total " << cell.total_ms << " ms\n";
        else
            os << " failed\n";
    }
    return os.str();
}

} // namespace dloc

// dloc: annihilators of f^a and D-module presentations of localizations
// for plane curves, through truncated annihilators.
//
// Results go to stdout, logs and timings to stderr. Exit codes:
//   0 success, 2 constant input, 3 non-squarefree input, 4 curve misses the
//   origin, 5 singular points away from the origin, 6 order cap exceeded,
//   7 no generic plane found, 1 other errors.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "dloc/annihilator.hpp"
#include "dloc/experiment.hpp"
#include "dloc/parse.hpp"
#include "dloc/report.hpp"

namespace {

constexpr int kExitCapExceeded = 6;
constexpr int kExitNoGenericPoint = 7;

struct CommonFlags {
    std::string poly_text;
    int exponent = -1;
    int order = 1;
    std::string point_text;
    int max_d = 50;
    bool json = false;
    int jobs = 1;
};

dloc::Poly parse_curve(const std::string& text) {
    return dloc::parse_poly(text, dloc::ring_xy());
}

// ann/char-ideal accept one-variable input too (e.g. f = x with a = 3);
// the operator ring is spanned by the variables that actually occur
dloc::Poly parse_curve_restricted(const std::string& text) {
    dloc::Poly f = parse_curve(text);
    std::vector<bool> used(2, false);
    for (const auto& t : f.terms())
        for (int i = 0; i < 2; ++i)
            if (t.mono[i] != 0) used[static_cast<size_t>(i)] = true;
    if (used[0] && used[1]) return f;
    std::vector<std::string> names;
    for (int i = 0; i < 2; ++i)
        if (used[static_cast<size_t>(i)]) names.push_back(f.ring()->var(i));
    if (names.empty()) return f; // constant: let validation report it
    return dloc::map_to_ring(f, dloc::make_ring(names));
}

std::pair<dloc::Rational, dloc::Rational> parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--point expects \"a,b\"");
    return {dloc::rational_from_string(text.substr(0, comma)),
            dloc::rational_from_string(text.substr(comma + 1))};
}

int exit_code_for(const dloc::CurveError& e) { return static_cast<int>(e.code); }

int run_kappa(const CommonFlags& flags) {
    dloc::Poly f = parse_curve(flags.poly_text);
    dloc::KappaConfig config;
    config.max_d = flags.max_d;
    if (!flags.point_text.empty()) config.point = parse_point(flags.point_text);
    dloc::KappaResult result = dloc::kappa_and_annihilator(f, config);
    if (flags.json)
        std::cout << dloc::kappa_report_json(f, -1, result).dump(2) << "\n";
    else
        std::cout << dloc::kappa_report_text(f, -1, result);
    std::cerr << dloc::kappa_timings_text(result);
    return 0;
}

int run_ann(const CommonFlags& flags) {
    dloc::Poly f = parse_curve_restricted(flags.poly_text);
    dloc::WeylIdeal A = dloc::truncated_annihilator(f, flags.exponent, flags.order);
    if (flags.json) {
        nlohmann::json j;
        j["f"] = dloc::to_string(f);
        j["a"] = flags.exponent;
        j["d"] = flags.order;
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : A.generators()) gens.push_back(dloc::to_string(g));
        j["generators"] = std::move(gens);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : A.generators()) std::cout << dloc::to_string(g) << "\n";
    }
    return 0;
}

int run_char_ideal(const CommonFlags& flags) {
    dloc::Poly f = parse_curve_restricted(flags.poly_text);
    dloc::Ideal C = dloc::char_ideal(dloc::truncated_annihilator(f, flags.exponent, flags.order));
    if (flags.json) {
        nlohmann::json j;
        j["f"] = dloc::to_string(f);
        j["a"] = flags.exponent;
        j["d"] = flags.order;
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : C.generators()) gens.push_back(dloc::to_string(g));
        j["generators"] = std::move(gens);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : C.generators()) std::cout << dloc::to_string(g) << "\n";
    }
    return 0;
}

int run_genericity(const CommonFlags& flags) {
    dloc::Poly f = parse_curve(flags.poly_text);
    auto [a, b] = parse_point(flags.point_text.empty() ? "0,1" : flags.point_text);
    bool generic = dloc::check_genericity(f, a, b);
    if (flags.json) {
        nlohmann::json j;
        j["f"] = dloc::to_string(f);
        j["point"] = {dloc::to_fraction_string(a), dloc::to_fraction_string(b)};
        j["generic"] = generic;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "generic: " << (generic ? "true" : "false") << "\n";
    }
    return 0;
}

int run_reiffen(int p, int q, bool json) {
    if (q == 0) q = p + 1;
    dloc::Poly f = dloc::reiffen(p, q);
    if (json) {
        nlohmann::json j;
        j["p"] = p;
        j["q"] = q;
        j["f"] = dloc::to_string(f);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << dloc::to_string(f) << "\n";
    }
    return 0;
}

int run_experiment(int p_min, int p_max, int q_fixed, int q_offset, const CommonFlags& flags) {
    auto q_for_p = [=](int p) { return q_fixed > 0 ? q_fixed : p + q_offset; };
    dloc::KappaConfig config;
    config.max_d = flags.max_d;
    if (!flags.point_text.empty()) config.point = parse_point(flags.point_text);
    dloc::ExperimentTable table = dloc::run_experiment(p_min, p_max, q_for_p, flags.jobs, config);
    if (flags.json)
        std::cout << dloc::experiment_report_json(table).dump(2) << "\n";
    else
        std::cout << dloc::experiment_report_text(table);
    std::cerr << dloc::experiment_timings_text(table);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"annihilator order and Ann(f^-1) for plane curves singular only at the origin"};
    app.require_subcommand(1);

    CommonFlags flags;
    int p_min = 4, p_max = 4, q_fixed = 0, q_offset = 1;
    int reiffen_p = 4, reiffen_q = 0;

    auto add_common = [&flags](CLI::App* cmd, bool needs_poly) {
        auto* opt = cmd->add_option("-f,--poly", flags.poly_text, "curve polynomial in x,y");
        if (needs_poly) opt->required();
        cmd->add_option("-a,--exponent", flags.exponent, "exponent a of f^a (default -1)");
        cmd->add_option("--max-d", flags.max_d, "order cap for the iteration");
        cmd->add_flag("--json", flags.json, "JSON output");
        cmd->add_option("--jobs", flags.jobs, "worker threads for experiments");
        cmd->add_option("--point", flags.point_text, "genericity point a,b (skips the ladder)");
    };

    auto* kappa = app.add_subcommand("kappa", "compute kappa(f^-1) and Ann(f^-1)");
    add_common(kappa, true);

    auto* ann = app.add_subcommand("ann", "generators of the truncated annihilator Ann^(d)(f^a)");
    add_common(ann, true);
    ann->add_option("-d,--order", flags.order, "truncation order d")->required();

    auto* chr = app.add_subcommand("char-ideal", "characteristic ideal of Ann^(d)(f^a)");
    add_common(chr, true);
    chr->add_option("-d,--order", flags.order, "truncation order d")->required();

    auto* gen = app.add_subcommand("genericity", "check genericity of the plane (xi,eta)=(a,b)");
    add_common(gen, true);

    auto* rei = app.add_subcommand("reiffen", "print the Reiffen curve x^p+y^q+x*y^(q-1)");
    rei->add_option("-p", reiffen_p, "p >= 4")->required();
    rei->add_option("-q", reiffen_q, "q >= p+1 (default p+1)");
    rei->add_flag("--json", flags.json, "JSON output");

    auto* exp = app.add_subcommand("experiment", "kappa and m^(d) table over a Reiffen family");
    add_common(exp, false);
    exp->add_option("--pmin", p_min, "smallest p")->required();
    exp->add_option("--pmax", p_max, "largest p");
    exp->add_option("--q", q_fixed, "fixed q for every row");
    exp->add_option("--q-offset", q_offset, "q = p + offset (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(kappa)) return run_kappa(flags);
        if (app.got_subcommand(ann)) return run_ann(flags);
        if (app.got_subcommand(chr)) return run_char_ideal(flags);
        if (app.got_subcommand(gen)) return run_genericity(flags);
        if (app.got_subcommand(rei)) return run_reiffen(reiffen_p, reiffen_q, flags.json);
        if (app.got_subcommand(exp)) {
            if (p_max < p_min) p_max = p_min;
            return run_experiment(p_min, p_max, q_fixed, q_offset, flags);
        }
    } catch (const dloc::CurveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.witness.empty()) std::cerr << "witness: " << e.witness << "\n";
        return exit_code_for(e);
    } catch (const dloc::OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const dloc::NoGenericityPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoGenericPoint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dloc/report.hpp"
#include "test_util.hpp"

using namespace dloc;
using dloc::testutil::p;

TEST_CASE("kappa text report is stable byte for byte") {
    KappaResult r = kappa_and_annihilator(p("x^2-y^3"));
    std::string text = kappa_report_text(p("x^2-y^3"), -1, r);
    std::string again = kappa_report_text(p("x^2-y^3"), -1, kappa_and_annihilator(p("x^2-y^3")));
    CHECK(text == again);
    CHECK(text.find("f = -y^3+x^2\n") == 0);
    CHECK(text.find("curve multiplicity m = 2\n") != std::string::npos);
    CHECK(text.find("genericity point = (0, 1)\n") != std::string::npos);
    CHECK(text.find("d=1: m^(d) = 1\n") != std::string::npos);
    CHECK(text.find("kappa = 1\n") != std::string::npos);
    CHECK(text.find("3*x*dx+2*y*dy+6") != std::string::npos);
    CHECK(text.find("timing") == std::string::npos); // timings live on stderr
}

TEST_CASE("kappa json follows the frozen schema") {
    Poly f = p("x^2-y^3");
    KappaResult r = kappa_and_annihilator(f);
    nlohmann::json j = kappa_report_json(f, -1, r);

    CHECK(j.at("f").is_string());
    CHECK(j.at("a").is_number_integer());
    CHECK(j.at("a").get<int>() == -1);
    CHECK(j.at("kappa").get<int>() == 1);
    CHECK(j.at("curve_multiplicity").get<int>() == 2);

    auto point = j.at("genericity_point");
    REQUIRE(point.is_array());
    REQUIRE(point.size() == 2);
    CHECK(point[0].get<std::string>() == "0/1"); // rationals as "p/q"
    CHECK(point[1].get<std::string>() == "1/1");

    auto trace = j.at("trace");
    REQUIRE(trace.is_array());
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].at("d").get<int>() == 1);
    CHECK(trace[0].at("m").get<int>() == 1);
    CHECK(trace[0].at("generators").is_array());

    CHECK(j.at("annihilator").is_array());
    CHECK(j.at("annihilator").size() == r.annihilator.generators().size());
    CHECK(j.at("timings_ms").is_object());

    // identical modulo timings on a rerun
    nlohmann::json j2 = kappa_report_json(f, -1, kappa_and_annihilator(f));
    j.erase("timings_ms");
    j2.erase("timings_ms");
    CHECK(j == j2);
}

TEST_CASE("multiplicity serialization inside reports") {
    CHECK(to_string(Multiplicity::finite(4)) == "4");
    CHECK(to_string(Multiplicity::infinite()) == "infinite");
    CHECK(to_string(Multiplicity::undefined()) == "undefined");
}

TEST_CASE("experiment table renders and parallel equals serial") {
    auto q_rule = [](int pp) { return pp + 1; };
    ExperimentTable serial = run_experiment(4, 5, q_rule, 1);
    ExperimentTable parallel = run_experiment(4, 5, q_rule, 2);

    REQUIRE(serial.rows.size() == 2);
    CHECK(serial.rows[0].kappa == 2);
    CHECK(serial.rows[1].kappa == 2);

    // identical content once timings are ignored
    auto strip = [](nlohmann::json j) {
        for (auto& row : j.at("rows")) row.erase("timings_ms");
        return j;
    };
    CHECK(strip(experiment_report_json(serial)) == strip(experiment_report_json(parallel)));
    CHECK(experiment_report_text(serial) == experiment_report_text(parallel));

    std::string text = experiment_report_text(serial);
    CHECK(text.find("kappa") != std::string::npos);
    CHECK(text.find("4,3") != std::string::npos);
}

TEST_CASE("experiment rows record failures without aborting") {
    // q < p+1 makes reiffen throw inside the cell
    ExperimentTable t = run_experiment(4, 4, [](int) { return 2; }, 1);
    REQUIRE(t.rows.size() == 1);
    CHECK_FALSE(t.rows[0].ok);
    CHECK(!t.rows[0].error.empty());
    CHECK_THROWS_AS(run_experiment(3, 4, [](int pp) { return pp + 1; }, 1), std::invalid_argument);
}

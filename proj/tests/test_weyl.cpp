#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dloc/groebner.hpp"
#include "test_util.hpp"

using namespace dloc;
using dloc::testutil::p;
using dloc::testutil::random_weyl;

namespace {

WeylElement w(const char* text) { return parse_weyl(text, ring_xy()); }
WeylElement w1(const char* text) { return parse_weyl(text, dloc::testutil::ring_x()); }

} // namespace

TEST_CASE("weyl multiplication encodes the canonical commutator") {
    Ring r = ring_xy();
    WeylElement x = WeylElement::coordinate(r, 0);
    WeylElement y = WeylElement::coordinate(r, 1);
    WeylElement dx = WeylElement::derivation(r, 0);

    CHECK(dx * x == w("x*dx+1"));
    CHECK(dx * y == w("y*dx"));
    CHECK(dx * dx * x == w("x*dx^2+2*dx"));
    CHECK(x * dx == w("x*dx")); // already normal form
    // [dx, x] = 1, other generator pairs commute
    CHECK(dx * x - x * dx == WeylElement::constant(r, Rational(1)));
    CHECK(dx * y - y * dx == WeylElement::zero(r));
}

TEST_CASE("operator order and principal symbol") {
    CHECK(operator_order(w("3*x*dx+2*y*dy+6")) == 1);
    CHECK(operator_order(w("dx^4")) == 4);
    CHECK(operator_order(w("x^5")) == 0);
    CHECK_THROWS_AS(operator_order(WeylElement::zero(ring_xy())), std::domain_error);

    Ring sring = symbol_ring_for(ring_xy());
    CHECK(w("3*x*dx+2*y*dy+6").principal_symbol(sring) == parse_poly("3*x*xi+2*y*eta", sring));
    CHECK(w("x*dx+1").principal_symbol(sring) == parse_poly("x*xi", sring));
    CHECK(WeylElement::zero(ring_xy()).principal_symbol(sring).is_zero());
}

TEST_CASE("operator text round trip") {
    for (const char* text : {"3*x*dx+2*y*dy+6", "x^2*y*dx^3", "dx^4", "-dx+1/2", "y^3*dy-x^2*dy+3*y^2"}) {
        WeylElement q = w(text);
        CHECK(to_string(q) == text);
        CHECK(parse_weyl(to_string(q), ring_xy()) == q);
    }
    CHECK_THROWS_AS(w("dx*x"), ParseError); // input must be in normal form
    CHECK_THROWS_AS(w("(dx+1)*x"), ParseError);
}

TEST_CASE("twisted power action") {
    Ring r = ring_xy();
    Poly f = p("x^2-y^3");
    TwistedPower fm1{f, p("1"), -1};

    TwistedPower t = apply_to_twisted_power(w("dx"), fm1);
    CHECK(t.numerator == p("-2*x"));
    CHECK(t.exponent == -2);

    t = apply_to_twisted_power(w("3*x*dx+2*y*dy+6"), fm1);
    CHECK(t.numerator.is_zero());
    CHECK(t.exponent == -2);

    Ring rx = dloc::testutil::ring_x();
    Poly fx = parse_poly("x", rx);
    TwistedPower x3{fx, parse_poly("1", rx), 3};
    t = apply_to_twisted_power(w1("x*dx-3"), x3);
    CHECK(t.numerator.is_zero());
    CHECK(t.exponent == 2);
}

TEST_CASE("weyl associativity, commutators, symbol multiplicativity") {
    std::mt19937 rng(555);
    Ring r = ring_xy();
    Ring sring = symbol_ring_for(r);
    int assoc_done = 0, symbol_done = 0;
    while (assoc_done < 500) {
        WeylElement a = random_weyl(r, rng, 2, 3);
        WeylElement b = random_weyl(r, rng, 2, 3);
        WeylElement c = random_weyl(r, rng, 2, 3);
        CHECK((a * b) * c == a * (b * c));
        ++assoc_done;
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(a.principal_symbol(sring) * b.principal_symbol(sring) ==
                  (a * b).principal_symbol(sring));
            CHECK(operator_order(a * b) == operator_order(a) + operator_order(b));
            ++symbol_done;
        }
    }
    CHECK(symbol_done >= 200);
}

TEST_CASE("action is compatible with composition") {
    std::mt19937 rng(808);
    Ring r = ring_xy();
    int done = 0;
    while (done < 60) {
        WeylElement a = random_weyl(r, rng, 2, 2);
        WeylElement b = random_weyl(r, rng, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        Poly f = dloc::testutil::random_poly(r, rng, 3, 3);
        if (f.is_zero() || f.is_constant()) continue;
        std::uniform_int_distribution<int> kd(-3, 3);
        TwistedPower t{f, dloc::testutil::random_poly(r, rng, 2, 2), kd(rng)};
        TwistedPower lhs = apply_to_twisted_power(a * b, t);
        TwistedPower rhs = apply_to_twisted_power(a, apply_to_twisted_power(b, t));
        CHECK(lhs.exponent == rhs.exponent);
        CHECK(lhs.numerator == rhs.numerator);
        ++done;
    }
}

TEST_CASE("left groebner bases") {
    Ring r = ring_xy();
    WeylIdeal I(r, {w("x*dx+1"), w("dy")});
    auto gb = weyl_groebner(I);
    CHECK(gb.size() == 2);
    CHECK(gb[0] == w("x*dx+1"));
    CHECK(gb[1] == w("dy"));

    WeylIdeal J(r, {w("dx"), w("x*dx+1")});
    gb = weyl_groebner(J);
    CHECK(gb.size() == 1);
    CHECK(gb[0] == WeylElement::constant(r, Rational(1)));

    WeylIdeal K(dloc::testutil::ring_x(), {w1("x*dx-3")});
    gb = weyl_groebner(K);
    CHECK(gb.size() == 1);
    CHECK(gb[0] == w1("x*dx-3"));
}

TEST_CASE("left GB invariants: generators and left multiples reduce to zero") {
    std::mt19937 rng(4711);
    Ring r = ring_xy();
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<WeylElement> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(random_weyl(r, rng, 2, 3));
        WeylIdeal I(r, gens);
        auto gb = weyl_groebner(I);
        for (const auto& g : I.generators()) CHECK(weyl_normal_form(g, gb).is_zero());
        // monomial left multiples of GB elements stay in the ideal
        for (const auto& g : gb) {
            for (int i = 0; i < 6; ++i) {
                WeylElement mono = WeylElement::from_terms(
                    r, {{dloc::testutil::random_expvec(4, rng, 2), Rational(1)}});
                if (mono.is_zero()) continue;
                CHECK(weyl_normal_form(mono * g, gb).is_zero());
            }
        }
    }
}

TEST_CASE("weyl membership and ideal equality") {
    Ring rx = dloc::testutil::ring_x();
    WeylIdeal big(rx, {w1("x*dx-3"), w1("dx^4")});
    WeylIdeal small(rx, {w1("x*dx-3")});
    CHECK(weyl_member(w1("dx^4"), big));
    CHECK_FALSE(weyl_member(w1("dx^4"), small));
    CHECK(weyl_ideal_equal(WeylIdeal(ring_xy(), {w("x*dx+1")}),
                           WeylIdeal(ring_xy(), {w("2*x*dx+2")})));
    CHECK_FALSE(weyl_ideal_equal(big, small));
}

TEST_CASE("characteristic ideals") {
    Ring r = ring_xy();
    Ring sring = symbol_ring_for(r);
    Ideal C = char_ideal(WeylIdeal(r, {w("x*dx+1"), w("dy")}));
    CHECK(ideal_equal(C, Ideal(sring, {parse_poly("x*xi", sring), parse_poly("eta", sring)})));

    Ring rx = dloc::testutil::ring_x();
    Ideal C2 = char_ideal(WeylIdeal(rx, {w1("x*dx-3")}));
    Ring s1 = symbol_ring_for(rx);
    CHECK(ideal_equal(C2, Ideal(s1, {parse_poly("x*xi", s1)})));

    Ideal C3 = char_ideal(WeylIdeal(r, {WeylElement::constant(r, Rational(1))}));
    CHECK(ideal_equal(C3, Ideal(sring, {parse_poly("1", sring)})));
}

TEST_CASE("doubled and symbol rings") {
    CHECK(doubled_ring_for(ring_xy())->vars() == std::vector<std::string>{"x", "y", "dx", "dy"});
    CHECK(symbol_ring_for(ring_xy())->vars() == std::vector<std::string>{"x", "y", "xi", "eta"});
    CHECK(symbol_ring_for(dloc::testutil::ring_x())->vars() == std::vector<std::string>{"x", "xi"});
}

#pragma once

#include <mutex>
#include <span>
#include <vector>

#include "dloc/ideal.hpp"
#include "dloc/poly.hpp"

namespace dloc {

// Element of the Weyl algebra over n variables, kept in normal form
// sum q_{ab} x^a d^b. Terms live on a doubled exponent vector (first n
// entries commutative, last n derivation exponents) and are stored strictly
// descending under the operator order: total derivation order first,
// grevlex over all 2n exponents as tiebreak.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(Ring base) : base_(std::move(base)) {}

    static WeylElement zero(Ring base) { return WeylElement(std::move(base)); }
    static WeylElement constant(Ring base, Rational c);
    static WeylElement coordinate(const Ring& base, int i); // x_i
    static WeylElement derivation(const Ring& base, int i); // d_i
    // sorts, combines and drops zeros; monos are doubled exponent vectors
    static WeylElement from_terms(Ring base, std::vector<Term> terms);

    const Ring& base_ring() const { return base_; }
    int nvars() const { return base_->arity(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WeylElement operator+(const WeylElement& q) const;
    WeylElement operator-(const WeylElement& q) const;
    WeylElement operator-() const;
    WeylElement operator*(const WeylElement& q) const; // noncommutative product
    WeylElement scaled(const Rational& c) const;

    bool operator==(const WeylElement& q) const;

    // max total derivation order over terms; throws on zero
    int order() const;

    // top-order part as a commutative polynomial in (x..., xi...)
    Poly principal_symbol(const Ring& symbol_ring) const;

private:
    Ring base_;
    std::vector<Term> terms_;
};

WeylElement weyl_multiply(const WeylElement& p, const WeylElement& q);
int operator_order(const WeylElement& q);

// commutative shadow order used for normal forms, leads and left GBs
const MonomialOrder& weyl_order(int nvars);

// ring (x..., dx...) used by the operator parser/printer
Ring doubled_ring_for(const Ring& base);
// ring (x..., xi...) of principal symbols; n=1 -> xi, n=2 -> xi,eta
Ring symbol_ring_for(const Ring& base);

// "x^2*y*dx^3" style, terms descending; round-trips bit-exactly
std::string to_string(const WeylElement& q);
WeylElement parse_weyl(std::string_view text, const Ring& base);

// g * f^k for a fixed context polynomial f
struct TwistedPower {
    Poly f;
    Poly numerator;
    long long exponent = 0;
};

// Exact action; the result is recombined over the common power
// f^(exponent - order(Q)), and Q annihilates t iff the numerator is zero.
TwistedPower apply_to_twisted_power(const WeylElement& Q, const TwistedPower& t);

// Left ideal in the Weyl algebra; the reduced left Groebner basis under the
// fixed operator order is memoized.
class WeylIdeal {
public:
    WeylIdeal() = default;
    explicit WeylIdeal(Ring base) : base_(std::move(base)), cache_(std::make_shared<Cache>()) {}
    WeylIdeal(Ring base, std::vector<WeylElement> generators);

    const Ring& base_ring() const { return base_; }
    const std::vector<WeylElement>& generators() const { return gens_; }

    const std::vector<WeylElement>& left_groebner() const;

private:
    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const std::vector<WeylElement>> gb;
    };
    Ring base_;
    std::vector<WeylElement> gens_;
    std::shared_ptr<Cache> cache_;
};

std::vector<WeylElement> weyl_groebner(const WeylIdeal& I);
WeylElement weyl_normal_form(const WeylElement& p, std::span<const WeylElement> gb);
bool weyl_member(const WeylElement& p, const WeylIdeal& I);
bool weyl_ideal_equal(const WeylIdeal& I, const WeylIdeal& J);

// commutative ideal of principal symbols of the left GB, in symbol_ring_for
Ideal char_ideal(const WeylIdeal& I);

} // namespace dloc

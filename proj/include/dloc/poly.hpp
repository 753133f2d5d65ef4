#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dloc/monomial.hpp"
#include "dloc/rational.hpp"
#include "dloc/ring.hpp"

namespace dloc {

struct Term {
    ExpVec mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly descending
// in grevlex with no zero coefficients; the zero polynomial has no terms.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly zero(Ring ring) { return Poly(std::move(ring)); }
    static Poly constant(Ring ring, Rational c);
    static Poly variable(const Ring& ring, int index, int32_t power = 1);
    static Poly monomial(const Ring& ring, ExpVec m, Rational c);
    // normalizes arbitrary (mono, coeff) pairs: sorts, combines, drops zeros
    static Poly from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    int arity() const { return ring_->arity(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_zero()); }
    size_t term_count() const { return terms_.size(); }

    // grevlex-leading term (storage order)
    const Term& leading_term() const;
    // leading term under an arbitrary order (linear scan)
    const Term& leading_term(const MonomialOrder& order) const;

    Rational coefficient(const ExpVec& m) const;
    Rational constant_term() const { return coefficient(ExpVec(arity())); }

    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator-() const;
    Poly operator*(const Poly& q) const;
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned n) const;
    // *this * c*x^m, preserves term order with no re-sort
    Poly monomial_multiple(const Rational& c, const ExpVec& m) const;

    bool operator==(const Poly& q) const;

    Poly partial_derivative(int var_index) const;

    struct DegreeInfo {
        int32_t total = 0;
        int32_t min_total = 0;
    };
    DegreeInfo degree_info() const; // throws on zero polynomial

    // substitute rationals for a subset of variables; result lives in the
    // ring of the remaining variables (in their original order)
    Poly substitute(const std::map<int, Rational>& assignment) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // divide every coefficient by the rational content and make the grevlex
    // leading coefficient positive; result has coprime integer coefficients
    Poly primitive_part() const;
    Poly monic(const MonomialOrder& order) const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(PolyOp op, const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_power(const Poly& a, unsigned n);

// canonical text form: descending grevlex, explicit '*' and '^',
// "a/b" coefficients; e.g. "x^2-y^3", "3*x*y+1/2"
std::string to_string(const Poly& p);

// lift/restrict along an injective variable-name map between rings
Poly map_to_ring(const Poly& p, const Ring& target);

} // namespace dloc

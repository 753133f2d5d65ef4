#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dloc/ideal.hpp"

namespace dloc {

// ---- Groebner bases and normal forms -------------------------------------

std::vector<Poly> groebner_basis(std::span<const Poly> generators, const MonomialOrder& order);
inline std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
    return ideal.groebner(order);
}

// full remainder of the division algorithm; no term of the result is
// divisible by a leading monomial of gb
Poly normal_form(const Poly& p, std::span<const Poly> gb, const MonomialOrder& order);

// normal_form over a batch, optionally OpenMP-parallel; jobs<=1 is the
// serial reference path and both paths produce identical results
std::vector<Poly> normal_form_batch(std::span<const Poly> polys, std::span<const Poly> gb,
                                    const MonomialOrder& order, int jobs = 1);

// (quotient, remainder) against a single divisor
std::pair<Poly, Poly> divide(const Poly& p, const Poly& divisor, const MonomialOrder& order);

// exact division; throws std::domain_error when the remainder is nonzero
Poly divide_exact(const Poly& p, const Poly& divisor);

// ---- Free-module vectors and syzygies ------------------------------------

// element of R^N, all components over one ring
struct ModuleVector {
    Ring ring;
    std::vector<Poly> components;

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const ModuleVector& o) const { return components == o.components; }
};

// Generators of {c in R^N : sum c_i v_i = 0}. Computed from a
// position-over-term Groebner basis of {(v_i, e_i)} in R^(1+N) with the
// leading slot greatest; returned vectors are primitive with deterministic
// order, and each satisfies the syzygy identity exactly.
// `seed` vectors, if given, must already be syzygies of v; they are added as
// known kernel elements to speed the computation up.
std::vector<ModuleVector> syzygies(std::span<const Poly> v,
                                   std::span<const ModuleVector> seed = {});

// membership of v in the submodule of R^N generated by gens
bool module_contains(std::span<const ModuleVector> gens, const ModuleVector& v);

// ---- Ideal operations -----------------------------------------------------

// I : g = {h : h*g in I}; g must be nonzero
Ideal ideal_quotient(const Ideal& I, const Poly& g);

struct SaturationResult {
    Ideal ideal;
    int exponent = 0; // smallest k with I : g^k stable
};

// I : g^infinity by iterated quotient until the reduced basis stabilizes
SaturationResult saturate_by_poly(const Ideal& I, const Poly& g);

// I : <gens>^infinity = intersection of the single-generator saturations
Ideal saturate_by_ideal(const Ideal& I, std::span<const Poly> gens);

// intersection via a fresh elimination variable
Ideal intersect(const Ideal& I, const Ideal& J);

// I ∩ Q[vars outside front_vars]; result lives in the smaller ring
Ideal eliminate(const Ideal& I, const std::vector<int>& front_vars);

bool ideal_member(const Poly& p, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);

// Krull dimension of V(I): -1 for the unit ideal, arity for the zero ideal
int krull_dimension(const Ideal& I);

// dim_Q R/I as a vector space; nullopt means infinite
std::optional<long long> quotient_vector_space_dim(const Ideal& I);

// gcd via <a> ∩ <b> = <lcm> and a*b = gcd*lcm; results are primitive
Poly poly_lcm(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);

// true iff gcd(f, f_x1, ..., f_xn) is constant; f nonzero and nonconstant
bool is_squarefree(const Poly& f);

} // namespace dloc

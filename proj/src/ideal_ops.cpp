#include <algorithm>
#include <stdexcept>

#include "dloc/groebner.hpp"

namespace dloc {

namespace {

const MonomialOrder& grevlex() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

// ring with one fresh variable prepended, for the elimination trick
std::pair<Ring, std::string> extend_with_fresh_var(const Ring& ring) {
    std::string name = "t";
    int suffix = 0;
    while (ring->index_of(name)) name = "t" + std::to_string(suffix++);
    std::vector<std::string> names{name};
    for (const auto& v : ring->vars()) names.push_back(v);
    return {make_ring(names), name};
}

} // namespace

Ideal ideal_quotient(const Ideal& I, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("ideal_quotient: zero divisor");
    Ideal gi(I.ring(), {g});
    Ideal meet = intersect(I, gi);
    std::vector<Poly> quotients;
    quotients.reserve(meet.generators().size());
    for (const auto& h : meet.generators()) quotients.push_back(divide_exact(h, g));
    return Ideal(I.ring(), std::move(quotients));
}

SaturationResult saturate_by_poly(const Ideal& I, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("saturate_by_poly: zero divisor");
    Ideal prev = I;
    for (int k = 0;; ++k) {
        Ideal next = ideal_quotient(prev, g);
        if (ideal_equal(next, prev)) return {prev, k};
        prev = std::move(next);
    }
}

Ideal saturate_by_ideal(const Ideal& I, std::span<const Poly> gens) {
    std::vector<const Poly*> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(&g);
    if (nonzero.empty()) throw std::invalid_argument("saturate_by_ideal: no nonzero generators");
    Ideal acc = saturate_by_poly(I, *nonzero[0]).ideal;
    for (size_t i = 1; i < nonzero.size(); ++i) acc = intersect(acc, saturate_by_poly(I, *nonzero[i]).ideal);
    return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "intersect");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring());
    auto [ext, tname] = extend_with_fresh_var(I.ring());
    Poly t = Poly::variable(ext, 0);
    Poly one_minus_t = Poly::constant(ext, Rational(1)) - t;
    std::vector<Poly> gens;
    for (const auto& f : I.generators()) gens.push_back(t * map_to_ring(f, ext));
    for (const auto& f : J.generators()) gens.push_back(one_minus_t * map_to_ring(f, ext));
    Ideal mixed(ext, std::move(gens));
    Ideal elim = eliminate(mixed, {0});
    // elim lives in the original variables; remap to I's ring object
    std::vector<Poly> out;
    for (const auto& f : elim.generators()) out.push_back(map_to_ring(f, I.ring()));
    return Ideal(I.ring(), std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& front_vars) {
    for (int v : front_vars)
        if (v < 0 || v >= I.ring()->arity()) throw std::out_of_range("eliminate: bad variable index");
    MonomialOrder order = MonomialOrder::block_front(I.ring()->arity(), front_vars);
    const auto& gb = I.groebner(order);
    std::vector<bool> is_front(static_cast<size_t>(I.ring()->arity()), false);
    for (int v : front_vars) is_front[static_cast<size_t>(v)] = true;
    std::vector<std::string> kept;
    for (int i = 0; i < I.ring()->arity(); ++i)
        if (!is_front[static_cast<size_t>(i)]) kept.push_back(I.ring()->var(i));
    Ring target = make_ring(kept);
    std::vector<Poly> out;
    for (const auto& f : gb) {
        bool touches_front = false;
        for (const auto& t : f.terms())
            for (int v : front_vars)
                if (t.mono[v] != 0) touches_front = true;
        if (!touches_front) out.push_back(map_to_ring(f, target));
    }
    return Ideal(target, std::move(out));
}

bool ideal_member(const Poly& p, const Ideal& I) {
    require_same_ring(p.ring(), I.ring(), "ideal_member");
    const auto& gb = I.groebner(grevlex());
    return normal_form(p, gb, grevlex()).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_equal");
    return I.groebner(grevlex()) == J.groebner(grevlex()); // reduced bases are unique
}

int krull_dimension(const Ideal& I) {
    const auto& gb = I.groebner(grevlex());
    const int n = I.ring()->arity();
    std::vector<ExpVec> lms;
    for (const auto& g : gb) {
        if (g.leading_term(grevlex()).mono.is_zero()) return -1; // unit ideal
        lms.push_back(g.leading_term(grevlex()).mono);
    }
    int best = -1;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (const auto& m : lms) {
            bool supported = true;
            for (int i = 0; i < n; ++i)
                if (m[i] > 0 && !(s & (1u << i))) supported = false;
            if (supported) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

std::optional<long long> quotient_vector_space_dim(const Ideal& I) {
    const auto& gb = I.groebner(grevlex());
    const int n = I.ring()->arity();
    std::vector<ExpVec> lms;
    for (const auto& g : gb) {
        if (g.leading_term(grevlex()).mono.is_zero()) return 0; // unit ideal
        lms.push_back(g.leading_term(grevlex()).mono);
    }
    if (lms.empty()) return n == 0 ? std::optional<long long>(1) : std::nullopt;

    // finite iff every variable has a pure power among the leading monomials
    std::vector<int64_t> bound(static_cast<size_t>(n), -1);
    for (const auto& m : lms) {
        int support_var = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            if (support_var != -1) pure = false;
            support_var = i;
        }
        if (pure && support_var >= 0) {
            auto& b = bound[static_cast<size_t>(support_var)];
            b = (b < 0) ? m[support_var] : std::min(b, static_cast<int64_t>(m[support_var]));
        }
    }
    long long box = 1;
    for (int i = 0; i < n; ++i) {
        if (bound[static_cast<size_t>(i)] < 0) return std::nullopt;
        box *= bound[static_cast<size_t>(i)];
        if (box > 50'000'000) throw std::runtime_error("quotient_vector_space_dim: staircase too large");
    }

    long long count = 0;
    ExpVec point(n);
    // walk the bounding box, counting monomials outside the initial ideal
    for (long long idx = 0; idx < box; ++idx) {
        long long rem = idx;
        for (int i = 0; i < n; ++i) {
            point[i] = static_cast<int32_t>(rem % bound[static_cast<size_t>(i)]);
            rem /= bound[static_cast<size_t>(i)];
        }
        bool standard = true;
        for (const auto& m : lms)
            if (m.divides(point)) {
                standard = false;
                break;
            }
        if (standard) ++count;
    }
    return count;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("poly_lcm: zero input");
    Ideal meet = intersect(Ideal(a.ring(), {a}), Ideal(b.ring(), {b}));
    if (meet.generators().size() != 1)
        throw std::logic_error("poly_lcm: intersection of principal ideals is principal");
    return meet.generators()[0].primitive_part();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("poly_gcd: zero input");
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.ring(), Rational(1));
    return divide_exact(a * b, poly_lcm(a, b)).primitive_part();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero() || f.is_constant()) throw std::domain_error("is_squarefree: constant or zero input");
    Poly g = f;
    for (int i = 0; i < f.arity() && !g.is_constant(); ++i) {
        Poly d = f.partial_derivative(i);
        if (d.is_zero()) continue; // variable absent from f
        g = poly_gcd(g, d);
    }
    return g.is_constant();
}

} // namespace dloc

#include "dloc/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dloc {

namespace {

// ---- flattened free-module vectors ----------------------------------------
//
// A module term is (position, monomial, coefficient). Vectors are kept
// strictly descending under position-over-term: lower position is greater
// (slot 0 is the designated leading slot), ties broken by the base order.

struct STerm {
    int32_t pos;
    ExpVec mono;
    Rational coeff;
    bool operator==(const STerm& o) const { return pos == o.pos && mono == o.mono && coeff == o.coeff; }
};

using SVec = std::vector<STerm>;

struct ModOrder {
    const MonomialOrder* base;

    // +1 if a > b
    int compare(int32_t apos, const ExpVec& amono, int32_t bpos, const ExpVec& bmono) const {
        if (apos != bpos) return apos < bpos ? 1 : -1;
        return base->compare(amono, bmono);
    }
    int compare(const STerm& a, const STerm& b) const { return compare(a.pos, a.mono, b.pos, b.mono); }
};

// r = v[from..] - c * x^shift * g   (positions are untouched by the shift)
SVec merge_axpy(const SVec& v, size_t from, const Rational& c, const ExpVec& shift, const SVec& g,
                const ModOrder& ord) {
    SVec r;
    r.reserve(v.size() - from + g.size());
    size_t i = from, j = 0;
    while (i < v.size() && j < g.size()) {
        ExpVec gm = g[j].mono + shift;
        int cmp = ord.compare(v[i].pos, v[i].mono, g[j].pos, gm);
        if (cmp > 0) {
            r.push_back(v[i++]);
        } else if (cmp < 0) {
            r.push_back({g[j].pos, gm, -c * g[j].coeff});
            ++j;
        } else {
            Rational s = v[i].coeff - c * g[j].coeff;
            if (s != 0) r.push_back({v[i].pos, v[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < v.size(); ++i) r.push_back(v[i]);
    for (; j < g.size(); ++j) r.push_back({g[j].pos, g[j].mono + shift, -c * g[j].coeff});
    return r;
}

void primitivize(SVec& v) {
    if (v.empty()) return;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (v.front().coeff < 0) scale = -scale;
    if (scale == 1) return;
    for (auto& t : v) t.coeff *= scale;
}

void make_monic(SVec& v) {
    if (v.empty() || v.front().coeff == 1) return;
    Rational inv = 1 / v.front().coeff;
    for (auto& t : v) t.coeff *= inv;
}

// divide out the integer content (no sign flip); returns the factor applied
Rational strip_content(SVec& v) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (factor == 1) return factor;
    for (auto& t : v) t.coeff *= factor;
    return factor;
}

// deterministic reducer choice: among dividing leads take the sparsest
const SVec* find_reducer(const STerm& t, const std::vector<SVec>& basis) {
    const SVec* best = nullptr;
    for (const auto& g : basis) {
        if (g.empty()) continue;
        if (g.front().pos == t.pos && g.front().mono.divides(t.mono)) {
            if (!best || g.size() < best->size()) best = &g;
        }
    }
    return best;
}

// One division step: v <- v - (c/lc)*x^shift*g. Coefficients stay at their
// true rational size (denominators divide products of the reducers' leading
// coefficients); content is stripped periodically so shared denominators do
// not pile up, with the factor tracked for callers needing exact values.
void pseudo_step(SVec& v, size_t from, const SVec& g, const ModOrder& ord, Rational& scale,
                 int& steps) {
    Rational b = v[from].coeff / g.front().coeff;
    ExpVec shift = v[from].mono - g.front().mono;
    v = merge_axpy(v, from, b, shift, g, ord);
    if (++steps % 8 == 0 && !v.empty()) scale *= strip_content(v);
}

// full normal form (exact): no term of the result is divisible by any lead
SVec nf(SVec v, const std::vector<SVec>& basis, const ModOrder& ord) {
    SVec out;
    size_t head = 0;
    Rational scale(1);
    int steps = 0;
    while (head < v.size()) {
        const SVec* red = find_reducer(v[head], basis);
        if (!red) {
            out.push_back(v[head]);
            ++head;
            continue;
        }
        // already-final terms must stay consistent with the tail
        Rational before = scale;
        pseudo_step(v, head, *red, ord, scale, steps);
        if (scale != before) {
            Rational f = scale / before;
            for (auto& t : out) t.coeff *= f;
        }
        head = 0;
    }
    if (scale != 1) {
        Rational inv = 1 / scale;
        for (auto& t : out) t.coeff *= inv;
    }
    return out;
}

// reduce only while the leading term is divisible; tails are left alone and
// the result is exact only up to a positive rational factor (fine for the
// Buchberger loop, which re-normalizes anyway)
SVec top_nf(SVec v, const std::vector<SVec>& basis, const ModOrder& ord) {
    Rational scale(1);
    int steps = 0;
    while (!v.empty()) {
        const SVec* red = find_reducer(v.front(), basis);
        if (!red) break;
        pseudo_step(v, 0, *red, ord, scale, steps);
    }
    return v;
}

struct Pair {
    int i, j;
    int32_t pos;
    ExpVec lcm;
};

uint64_t pair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) | static_cast<uint32_t>(j);
}

struct BuchbergerOptions {
    bool product_criterion = true; // only sound on rank-1 input
    // Process only pairs whose leads sit in the designated slot 0. The tail
    // results of those reductions already generate every syzygy (Schreyer);
    // pairs between pure-tail elements merely polish the tail part of the
    // basis and are the dominant cost on syzygy runs.
    bool slot0_pairs_only = false;
};

// Buchberger with normal selection (smallest lcm first) and the chain
// criterion; pairs exist only between elements whose leads share a position.
std::vector<SVec> buchberger(std::vector<SVec> gens, const ModOrder& ord, const BuchbergerOptions& opt) {
    std::vector<SVec> G;
    for (auto& g : gens) {
        if (g.empty()) continue;
        primitivize(g);
        G.push_back(std::move(g));
    }

    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        int c = ord.compare(a.pos, a.lcm, b.pos, b.lcm);
        if (c != 0) return c < 0; // smaller lcm first
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::unordered_set<uint64_t> queued;

    auto push_pairs_for = [&](int m) {
        if (opt.slot0_pairs_only && G[static_cast<size_t>(m)].front().pos != 0) return;
        for (int k = 0; k < m; ++k) {
            if (G[static_cast<size_t>(k)].front().pos != G[static_cast<size_t>(m)].front().pos) continue;
            Pair p{k, m, G[static_cast<size_t>(k)].front().pos,
                   ExpVec::lcm(G[static_cast<size_t>(k)].front().mono, G[static_cast<size_t>(m)].front().mono)};
            queue.insert(p);
            queued.insert(pair_key(k, m));
        }
    };
    for (int m = 0; m < static_cast<int>(G.size()); ++m) push_pairs_for(m);

    auto in_queue = [&](int a, int b) { return queued.count(pair_key(a, b)) != 0; };

    const bool stats = std::getenv("DLOC_GB_STATS") != nullptr;
    long processed = 0, reductions = 0;

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        queued.erase(pair_key(p.i, p.j));
        if (stats && ++processed % 200 == 0) {
            size_t bits = 0, terms = 0;
            for (const auto& g : G) {
                terms += g.size();
                for (const auto& t : g)
                    bits = std::max(bits, mpz_sizeinbase(t.coeff.get_num().get_mpz_t(), 2));
            }
            std::cerr << "[gb] pairs=" << processed << " basis=" << G.size() << " queue=" << queue.size()
                      << " nonzero-reductions=" << reductions << " terms=" << terms
                      << " maxbits=" << bits << "\n";
        }

        const SVec& f = G[static_cast<size_t>(p.i)];
        const SVec& g = G[static_cast<size_t>(p.j)];

        if (opt.product_criterion && p.pos == 0 && f.front().mono.coprime_with(g.front().mono)) continue;

        // chain criterion: lm(k) | lcm(i,j) with both other pairs already handled
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            const SVec& h = G[static_cast<size_t>(k)];
            if (h.front().pos != p.pos || !h.front().mono.divides(p.lcm)) continue;
            if (!in_queue(p.i, k) && !in_queue(p.j, k)) skip = true;
        }
        if (skip) continue;

        // cross-scaled S-vector, integer-friendly
        SVec s;
        {
            ExpVec si = p.lcm - f.front().mono;
            ExpVec sj = p.lcm - g.front().mono;
            SVec a;
            a.reserve(f.size());
            for (const auto& t : f) a.push_back({t.pos, t.mono + si, t.coeff * g.front().coeff});
            s = merge_axpy(a, 0, f.front().coeff, sj, g, ord);
        }
        s = top_nf(std::move(s), G, ord);
        if (s.empty()) continue;
        primitivize(s);
        ++reductions;
        G.push_back(std::move(s));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }
    return G;
}

enum class Normalization { Monic, Primitive };

// minimize + tail-reduce + normalize + sort descending by leading term
std::vector<SVec> reduce_basis(std::vector<SVec> G, const ModOrder& ord, Normalization norm) {
    // minimal generators: drop elements whose lead is divisible by another's
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const STerm& li = G[i].front();
            const STerm& lj = G[j].front();
            if (li.pos == lj.pos && lj.mono.divides(li.mono)) {
                if (li.mono == lj.mono && j > i) continue; // equal leads: keep the earlier
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<SVec> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(G[i]));

    // tail reduction against the other elements
    std::vector<SVec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SVec> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        SVec r = nf(minimal[i], others, ord);
        if (!r.empty()) reduced.push_back(std::move(r));
    }
    for (auto& g : reduced) {
        if (norm == Normalization::Monic)
            make_monic(g);
        else
            primitivize(g);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&ord](const SVec& a, const SVec& b) { return ord.compare(a.front(), b.front()) > 0; });
    return reduced;
}

// ---- conversions -----------------------------------------------------------

SVec poly_to_svec(const Poly& p, int32_t pos, const ModOrder& ord) {
    SVec v;
    v.reserve(p.terms().size());
    for (const auto& t : p.terms()) v.push_back({pos, t.mono, t.coeff});
    std::sort(v.begin(), v.end(), [&ord](const STerm& a, const STerm& b) { return ord.compare(a, b) > 0; });
    return v;
}

Poly svec_to_poly(const SVec& v, const Ring& ring) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back({t.mono, t.coeff});
    return Poly::from_terms(ring, std::move(terms));
}

std::vector<Poly> svec_to_components(const SVec& v, const Ring& ring, int rank) {
    std::vector<std::vector<Term>> parts(static_cast<size_t>(rank));
    for (const auto& t : v) parts[static_cast<size_t>(t.pos)].push_back({t.mono, t.coeff});
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(rank));
    for (auto& part : parts) out.push_back(Poly::from_terms(ring, std::move(part)));
    return out;
}

SVec module_vector_to_svec(const ModuleVector& v, const ModOrder& ord, int pos_offset) {
    SVec s;
    for (size_t c = 0; c < v.components.size(); ++c)
        for (const auto& t : v.components[c].terms())
            s.push_back({static_cast<int32_t>(c) + pos_offset, t.mono, t.coeff});
    std::sort(s.begin(), s.end(), [&ord](const STerm& a, const STerm& b) { return ord.compare(a, b) > 0; });
    return s;
}

} // namespace

// ---- public polynomial-level API -------------------------------------------

std::vector<Poly> groebner_basis(std::span<const Poly> generators, const MonomialOrder& order) {
    Ring ring;
    for (const auto& g : generators)
        if (!g.is_zero()) {
            ring = g.ring();
            break;
        }
    if (!ring) return {};
    ModOrder ord{&order};
    std::vector<SVec> gens;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(ring, g.ring(), "groebner_basis");
        gens.push_back(poly_to_svec(g, 0, ord));
    }
    auto G = buchberger(std::move(gens), ord, BuchbergerOptions{.product_criterion = true});
    G = reduce_basis(std::move(G), ord, Normalization::Monic);
    std::vector<Poly> out;
    out.reserve(G.size());
    for (const auto& g : G) out.push_back(svec_to_poly(g, ring));
    return out;
}

Poly normal_form(const Poly& p, std::span<const Poly> gb, const MonomialOrder& order) {
    ModOrder ord{&order};
    std::vector<SVec> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        basis.push_back(poly_to_svec(g, 0, ord));
    }
    return svec_to_poly(nf(poly_to_svec(p, 0, ord), basis, ord), p.ring());
}

std::vector<Poly> normal_form_batch(std::span<const Poly> polys, std::span<const Poly> gb,
                                    const MonomialOrder& order, int jobs) {
    std::vector<Poly> out(polys.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < polys.size(); ++i) out[i] = normal_form(polys[i], gb, order);
        return out;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < static_cast<long long>(polys.size()); ++i)
        out[static_cast<size_t>(i)] = normal_form(polys[static_cast<size_t>(i)], gb, order);
    return out;
}

std::pair<Poly, Poly> divide(const Poly& p, const Poly& divisor, const MonomialOrder& order) {
    if (divisor.is_zero()) throw std::domain_error("divide: zero divisor");
    ModOrder ord{&order};
    SVec d = poly_to_svec(divisor, 0, ord);
    SVec v = poly_to_svec(p, 0, ord);
    std::vector<Term> quotient;
    SVec rem;
    size_t head = 0;
    while (head < v.size()) {
        const STerm& t = v[head];
        if (d.front().mono.divides(t.mono)) {
            Rational c = t.coeff / d.front().coeff;
            ExpVec shift = t.mono - d.front().mono;
            quotient.push_back({shift, c});
            v = merge_axpy(v, head, c, shift, d, ord);
            head = 0;
        } else {
            rem.push_back(t);
            ++head;
        }
    }
    return {Poly::from_terms(p.ring(), std::move(quotient)), svec_to_poly(rem, p.ring())};
}

Poly divide_exact(const Poly& p, const Poly& divisor) {
    auto [q, r] = divide(p, divisor, MonomialOrder::grevlex());
    if (!r.is_zero()) throw std::domain_error("divide_exact: division is not exact");
    return q;
}

// ---- syzygies ---------------------------------------------------------------

std::vector<ModuleVector> syzygies(std::span<const Poly> v, std::span<const ModuleVector> seed) {
    if (v.empty()) throw std::invalid_argument("syzygies: empty input");
    Ring ring = v[0].ring();
    for (const auto& p : v) require_same_ring(ring, p.ring(), "syzygies");
    const int n = static_cast<int>(v.size());
    const MonomialOrder base = MonomialOrder::grevlex();
    ModOrder ord{&base};

    // generators (v_i, e_i) of the graph submodule of R^(1+n)
    std::vector<SVec> gens;
    gens.reserve(v.size() + seed.size());
    for (int i = 0; i < n; ++i) {
        SVec g = poly_to_svec(v[static_cast<size_t>(i)], 0, ord);
        g.push_back({i + 1, ExpVec(ring->arity()), Rational(1)});
        gens.push_back(std::move(g));
    }
    for (const auto& s : seed) {
        if (static_cast<int>(s.components.size()) != n)
            throw std::invalid_argument("syzygies: seed vector of wrong rank");
        Poly check = Poly::zero(ring);
        for (int i = 0; i < n; ++i) check = check + s.components[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
        if (!check.is_zero()) throw std::invalid_argument("syzygies: seed vector is not a syzygy");
        if (s.is_zero()) continue;
        gens.push_back(module_vector_to_svec(s, ord, 1));
    }

    auto G = buchberger(std::move(gens), ord,
                        BuchbergerOptions{.product_criterion = false, .slot0_pairs_only = true});

    // elements with no leading-slot terms are the syzygies
    std::vector<SVec> tail_only;
    for (auto& g : G) {
        bool pure_tail = true;
        for (const auto& t : g)
            if (t.pos == 0) {
                pure_tail = false;
                break;
            }
        if (pure_tail) tail_only.push_back(std::move(g));
    }
    for (auto& g : tail_only) primitivize(g);

    // Inter-reduce: raw certificates carry enormous multiples of one another,
    // and the consumers of these generators pay for every extra bit. An
    // element that reduces to zero against the rest is dropped (the reduction
    // is its membership certificate), everything else shrinks in place.
    for (int pass = 0; pass < 4; ++pass) {
        bool changed = false;
        for (size_t i = 0; i < tail_only.size();) {
            std::vector<SVec> others;
            others.reserve(tail_only.size() - 1);
            for (size_t j = 0; j < tail_only.size(); ++j)
                if (j != i) others.push_back(tail_only[j]);
            SVec r = nf(tail_only[i], others, ord);
            if (r.empty()) {
                tail_only.erase(tail_only.begin() + static_cast<long>(i));
                changed = true;
                continue;
            }
            primitivize(r);
            if (!(r == tail_only[i])) changed = true;
            tail_only[i] = std::move(r);
            ++i;
        }
        if (!changed) break;
    }
    std::sort(tail_only.begin(), tail_only.end(),
              [&ord](const SVec& a, const SVec& b) { return ord.compare(a.front(), b.front()) > 0; });

    std::vector<ModuleVector> out;
    out.reserve(tail_only.size());
    for (auto& g : tail_only) {
        for (auto& t : g) t.pos -= 1;
        out.push_back(ModuleVector{ring, svec_to_components(g, ring, n)});
    }
    return out;
}

bool module_contains(std::span<const ModuleVector> gens, const ModuleVector& v) {
    if (gens.empty()) return v.is_zero();
    const MonomialOrder base = MonomialOrder::grevlex();
    ModOrder ord{&base};
    std::vector<SVec> basis;
    for (const auto& g : gens) {
        SVec s = module_vector_to_svec(g, ord, 0);
        if (!s.empty()) basis.push_back(std::move(s));
    }
    auto G = buchberger(std::move(basis), ord, BuchbergerOptions{.product_criterion = false});
    return nf(module_vector_to_svec(v, ord, 0), G, ord).empty();
}

} // namespace dloc

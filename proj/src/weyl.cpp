#include "dloc/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <unordered_set>

#include "dloc/parse.hpp"

namespace dloc {

namespace {

int derivation_degree(const ExpVec& m, int n) {
    int d = 0;
    for (int i = n; i < 2 * n; ++i) d += m[i];
    return d;
}

// coefficient of x^{b+d-k} in the normal form of d^b * x^c (one variable):
// binom(b,k) * binom(c,k) * k!
mpz_class straightening_coeff(int32_t b, int32_t c, int32_t k) {
    mpz_class r, t;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
    mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(k));
    r *= t;
    mpz_fac_ui(t.get_mpz_t(), static_cast<unsigned long>(k));
    r *= t;
    return r;
}

// expand (x^a d^b) * (x^c d^e) into `out` (monos are 2n-exponent vectors)
void append_term_product(std::vector<Term>& out, const ExpVec& lhs, const Rational& lc, const ExpVec& rhs,
                         const Rational& rc, int n) {
    ExpVec kmax(2 * n);
    for (int i = 0; i < n; ++i) kmax[i] = std::min(lhs[n + i], rhs[i]);
    ExpVec k(2 * n);
    Rational coeff_base = lc * rc;
    for (;;) {
        mpz_class c(1);
        for (int i = 0; i < n; ++i)
            if (k[i] > 0) c *= straightening_coeff(lhs[n + i], rhs[i], k[i]);
        ExpVec mono(2 * n);
        for (int i = 0; i < n; ++i) {
            mono[i] = lhs[i] + rhs[i] - k[i];
            mono[n + i] = lhs[n + i] + rhs[n + i] - k[i];
        }
        out.push_back({mono, coeff_base * Rational(c)});
        // odometer over 0 <= k <= kmax
        int i = 0;
        while (i < n) {
            if (k[i] < kmax[i]) {
                ++k[i];
                break;
            }
            k[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
}

} // namespace

const MonomialOrder& weyl_order(int nvars) {
    static std::map<int, MonomialOrder> orders;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = orders.find(nvars);
    if (it == orders.end()) {
        std::vector<int> w(static_cast<size_t>(2 * nvars), 0);
        for (int i = nvars; i < 2 * nvars; ++i) w[static_cast<size_t>(i)] = 1;
        it = orders.emplace(nvars, MonomialOrder::weighted_grevlex(std::move(w))).first;
    }
    return it->second;
}

WeylElement WeylElement::constant(Ring base, Rational c) {
    WeylElement q(std::move(base));
    if (c != 0) q.terms_.push_back({ExpVec(2 * q.nvars()), std::move(c)});
    return q;
}

WeylElement WeylElement::coordinate(const Ring& base, int i) {
    if (i < 0 || i >= base->arity()) throw std::out_of_range("WeylElement::coordinate");
    WeylElement q(base);
    q.terms_.push_back({ExpVec::unit(2 * base->arity(), i), Rational(1)});
    return q;
}

WeylElement WeylElement::derivation(const Ring& base, int i) {
    if (i < 0 || i >= base->arity()) throw std::out_of_range("WeylElement::derivation");
    WeylElement q(base);
    q.terms_.push_back({ExpVec::unit(2 * base->arity(), base->arity() + i), Rational(1)});
    return q;
}

WeylElement WeylElement::from_terms(Ring base, std::vector<Term> terms) {
    WeylElement q(std::move(base));
    const MonomialOrder& ord = weyl_order(q.nvars());
    std::sort(terms.begin(), terms.end(),
              [&ord](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!q.terms_.empty() && q.terms_.back().mono == t.mono) {
            q.terms_.back().coeff += t.coeff;
            if (q.terms_.back().coeff == 0) q.terms_.pop_back();
        } else {
            q.terms_.push_back(std::move(t));
        }
    }
    return q;
}

WeylElement WeylElement::operator+(const WeylElement& q) const {
    require_same_ring(base_, q.base_, "weyl add");
    std::vector<Term> all = terms_;
    all.insert(all.end(), q.terms_.begin(), q.terms_.end());
    return from_terms(base_, std::move(all));
}

WeylElement WeylElement::operator-() const {
    WeylElement r(base_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& q) const { return *this + (-q); }

WeylElement WeylElement::scaled(const Rational& c) const {
    if (c == 0) return WeylElement(base_);
    WeylElement r(base_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& q) const {
    require_same_ring(base_, q.base_, "weyl mul");
    const int n = nvars();
    std::vector<Term> out;
    out.reserve(terms_.size() * q.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : q.terms_) append_term_product(out, a.mono, a.coeff, b.mono, b.coeff, n);
    return from_terms(base_, std::move(out));
}

bool WeylElement::operator==(const WeylElement& q) const {
    if (!same_ring(base_, q.base_) || terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == q.terms_[i].mono) || terms_[i].coeff != q.terms_[i].coeff) return false;
    return true;
}

int WeylElement::order() const {
    if (terms_.empty()) throw std::domain_error("order of zero operator");
    // storage is sorted derivation-order-first
    return derivation_degree(terms_.front().mono, nvars());
}

Poly WeylElement::principal_symbol(const Ring& symbol_ring) const {
    if (terms_.empty()) return Poly::zero(symbol_ring);
    const int top = order();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (derivation_degree(t.mono, nvars()) != top) break; // sorted by order
        out.push_back(t);
    }
    return Poly::from_terms(symbol_ring, std::move(out));
}

WeylElement weyl_multiply(const WeylElement& p, const WeylElement& q) { return p * q; }
int operator_order(const WeylElement& q) { return q.order(); }

Ring doubled_ring_for(const Ring& base) {
    std::vector<std::string> names = base->vars();
    for (const auto& v : base->vars()) names.push_back("d" + v);
    return make_ring(std::move(names));
}

Ring symbol_ring_for(const Ring& base) {
    std::vector<std::string> names = base->vars();
    const int n = base->arity();
    if (n == 1) {
        names.push_back("xi");
    } else if (n == 2) {
        names.push_back("xi");
        names.push_back("eta");
    } else {
        for (int i = 1; i <= n; ++i) names.push_back("xi" + std::to_string(i));
    }
    return make_ring(std::move(names));
}

std::string to_string(const WeylElement& q) {
    if (q.is_zero()) return "0";
    Ring doubled = doubled_ring_for(q.base_ring());
    std::string out;
    bool first = true;
    for (const auto& t : q.terms()) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? '-' : '+';
        }
        if (t.mono.is_zero()) {
            out += to_string(c);
            continue;
        }
        bool printed = false;
        if (c != 1) {
            out += to_string(c);
            printed = true;
        }
        for (int i = 0; i < 2 * q.nvars(); ++i) {
            int32_t e = t.mono[i];
            if (e == 0) continue;
            if (printed) out += '*';
            out += doubled->var(i);
            if (e > 1) out += "^" + std::to_string(e);
            printed = true;
        }
    }
    return out;
}

WeylElement parse_weyl(std::string_view text, const Ring& base) {
    Ring doubled = doubled_ring_for(base);
    Poly p = parse_poly_ordered(text, doubled, base->arity());
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    return WeylElement::from_terms(base, std::move(terms));
}

TwistedPower apply_to_twisted_power(const WeylElement& Q, const TwistedPower& t) {
    require_same_ring(Q.base_ring(), t.f.ring(), "apply_to_twisted_power");
    require_same_ring(t.f.ring(), t.numerator.ring(), "apply_to_twisted_power");
    if (Q.is_zero()) return {t.f, Poly::zero(t.f.ring()), t.exponent};
    const int n = Q.nvars();
    const int ord = Q.order();

    std::vector<Poly> df;
    df.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) df.push_back(t.f.partial_derivative(i));
    std::vector<Poly> fpow{Poly::constant(t.f.ring(), Rational(1))};
    for (int e = 1; e <= ord; ++e) fpow.push_back(fpow.back() * t.f);

    Poly sum = Poly::zero(t.f.ring());
    for (const auto& term : Q.terms()) {
        Poly g = t.numerator;
        long long k = t.exponent;
        int ddeg = 0;
        for (int i = 0; i < n; ++i) {
            for (int32_t step = 0; step < term.mono[n + i]; ++step) {
                g = g.partial_derivative(i) * t.f + g.scaled(Rational(static_cast<long>(k))) * df[static_cast<size_t>(i)];
                --k;
                ++ddeg;
            }
        }
        // multiply by the x-part and the coefficient, lift to the common power
        ExpVec xpart(t.f.arity());
        for (int i = 0; i < n; ++i) xpart[i] = term.mono[i];
        g = g.monomial_multiple(term.coeff, xpart);
        if (ord > ddeg) g = g * fpow[static_cast<size_t>(ord - ddeg)];
        sum = sum + g;
    }
    return {t.f, sum, t.exponent - ord};
}

// ---- left Groebner engine ---------------------------------------------------

namespace {

using WVec = std::vector<Term>; // operator terms, descending under weyl_order

struct WeylCtx {
    Ring base;
    int n;
    const MonomialOrder* ord;
};

WVec sorted_terms(const WeylElement& q, const WeylCtx& ctx) {
    (void)ctx;
    return q.terms(); // WeylElement storage order is already the GB order
}

WeylElement to_element(const WVec& v, const WeylCtx& ctx) {
    return WeylElement::from_terms(ctx.base, std::vector<Term>(v.begin(), v.end()));
}

void primitivize(WVec& v) {
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

WVec normalize(std::vector<Term> terms, const WeylCtx& ctx) {
    std::sort(terms.begin(), terms.end(),
              [&ctx](const Term& a, const Term& b) { return ctx.ord->greater(a.mono, b.mono); });
    WVec out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

// v - c * (x^q) * g where q is a doubled monomial (left multiplication)
WVec axpy_left(const WVec& v, size_t from, const Rational& c, const ExpVec& q, const WVec& g,
               const WeylCtx& ctx) {
    std::vector<Term> raw(v.begin() + static_cast<long>(from), v.end());
    for (const auto& t : g) append_term_product(raw, q, -c, t.mono, t.coeff, ctx.n);
    return normalize(std::move(raw), ctx);
}

Rational strip_content(WVec& v) {
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

const WVec* find_reducer(const Term& t, const std::vector<WVec>& basis) {
    const WVec* best = nullptr;
    for (const auto& g : basis) {
        if (g.empty()) continue;
        if (g.front().mono.divides(t.mono)) {
            if (!best || g.size() < best->size()) best = &g;
        }
    }
    return best;
}

// one division step against a reducer, with periodic content stripping
void pseudo_step(WVec& v, size_t from, const WVec& g, const WeylCtx& ctx, Rational& scale,
                 int& steps) {
    Rational b = v[from].coeff / g.front().coeff;
    ExpVec q = v[from].mono - g.front().mono;
    v = axpy_left(v, from, b, q, g, ctx);
    if (++steps % 8 == 0 && !v.empty()) scale *= strip_content(v);
}

// full left normal form, exact
WVec weyl_nf(WVec v, const std::vector<WVec>& basis, const WeylCtx& ctx) {
    WVec out;
    size_t head = 0;
    Rational scale(1);
    int steps = 0;
    while (head < v.size()) {
        const WVec* red = find_reducer(v[head], basis);
        if (!red) {
            out.push_back(v[head]);
            ++head;
            continue;
        }
        Rational before = scale;
        pseudo_step(v, head, *red, ctx, scale, steps);
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

// head-only reduction, exact up to a positive factor
WVec weyl_top_nf(WVec v, const std::vector<WVec>& basis, const WeylCtx& ctx) {
    Rational scale(1);
    int steps = 0;
    while (!v.empty()) {
        const WVec* red = find_reducer(v.front(), basis);
        if (!red) break;
        pseudo_step(v, 0, *red, ctx, scale, steps);
    }
    return v;
}

struct WPair {
    int i, j;
    ExpVec lcm;
};

uint64_t wpair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) | static_cast<uint32_t>(j);
}

// left Buchberger; the coprime-lead skip is unsound here and stays off,
// the chain criterion is kept. Inputs are inter-reduced first: syzygy-built
// generator sets arrive with a lot of redundancy, and pairing the redundant
// giants is far more expensive than normalizing them away.
std::vector<WVec> weyl_buchberger(std::vector<WVec> gens, const WeylCtx& ctx) {
    std::vector<WVec> G;
    for (auto& g : gens) {
        if (g.empty()) continue;
        primitivize(g);
        WVec r = weyl_nf(std::move(g), G, ctx);
        if (r.empty()) continue;
        primitivize(r);
        G.push_back(std::move(r));
    }
    auto pair_less = [&ctx](const WPair& a, const WPair& b) {
        int c = ctx.ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<WPair, decltype(pair_less)> queue(pair_less);
    std::unordered_set<uint64_t> queued;
    auto push_pairs_for = [&](int m) {
        for (int k = 0; k < m; ++k) {
            queue.insert(WPair{k, m,
                               ExpVec::lcm(G[static_cast<size_t>(k)].front().mono,
                                           G[static_cast<size_t>(m)].front().mono)});
            queued.insert(wpair_key(k, m));
        }
    };
    for (int m = 0; m < static_cast<int>(G.size()); ++m) push_pairs_for(m);

    const bool stats = std::getenv("DLOC_GB_STATS") != nullptr;
    long processed = 0, additions = 0;

    while (!queue.empty()) {
        WPair p = *queue.begin();
        queue.erase(queue.begin());
        queued.erase(wpair_key(p.i, p.j));
        if (stats && ++processed % 50 == 0) {
            size_t bits = 0, terms = 0;
            for (const auto& g : G) {
                terms += g.size();
                for (const auto& t : g)
                    bits = std::max(bits, mpz_sizeinbase(t.coeff.get_num().get_mpz_t(), 2));
            }
            std::cerr << "[wgb] pairs=" << processed << " basis=" << G.size()
                      << " queue=" << queue.size() << " additions=" << additions
                      << " terms=" << terms << " maxbits=" << bits << "\n";
        }

        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!G[static_cast<size_t>(k)].front().mono.divides(p.lcm)) continue;
            if (!queued.count(wpair_key(p.i, k)) && !queued.count(wpair_key(p.j, k))) skip = true;
        }
        if (skip) continue;

        const WVec& f = G[static_cast<size_t>(p.i)];
        const WVec& g = G[static_cast<size_t>(p.j)];
        ExpVec qf = p.lcm - f.front().mono;
        ExpVec qg = p.lcm - g.front().mono;
        std::vector<Term> raw;
        for (const auto& t : f) append_term_product(raw, qf, g.front().coeff, t.mono, t.coeff, ctx.n);
        for (const auto& t : g) append_term_product(raw, qg, -f.front().coeff, t.mono, t.coeff, ctx.n);
        WVec s = weyl_top_nf(normalize(std::move(raw), ctx), G, ctx);
        if (s.empty()) continue;
        primitivize(s);
        ++additions;
        G.push_back(std::move(s));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }
    return G;
}

std::vector<WVec> weyl_reduce_basis(std::vector<WVec> G, const WeylCtx& ctx) {
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (G[j].front().mono.divides(G[i].front().mono)) {
                if (G[i].front().mono == G[j].front().mono && j > i) continue;
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<WVec> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(G[i]));
    std::vector<WVec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WVec> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        WVec r = weyl_nf(minimal[i], others, ctx);
        if (!r.empty()) reduced.push_back(std::move(r));
    }
    for (auto& g : reduced) {
        Rational inv = 1 / g.front().coeff;
        for (auto& t : g) t.coeff *= inv;
    }
    std::sort(reduced.begin(), reduced.end(),
              [&ctx](const WVec& a, const WVec& b) { return ctx.ord->greater(a.front().mono, b.front().mono); });
    return reduced;
}

} // namespace

WeylIdeal::WeylIdeal(Ring base, std::vector<WeylElement> generators)
    : base_(std::move(base)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(base_, g.base_ring(), "WeylIdeal");
        gens_.push_back(std::move(g));
    }
}

const std::vector<WeylElement>& WeylIdeal::left_groebner() const {
    if (!cache_) throw std::logic_error("WeylIdeal: default-constructed");
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->gb) return *cache_->gb;
    }
    WeylCtx ctx{base_, base_->arity(), &weyl_order(base_->arity())};
    std::vector<WVec> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(sorted_terms(g, ctx));
    auto G = weyl_reduce_basis(weyl_buchberger(std::move(gens), ctx), ctx);
    auto out = std::make_shared<std::vector<WeylElement>>();
    out->reserve(G.size());
    for (const auto& g : G) out->push_back(to_element(g, ctx));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->gb) cache_->gb = std::move(out);
    return *cache_->gb;
}

std::vector<WeylElement> weyl_groebner(const WeylIdeal& I) { return I.left_groebner(); }

WeylElement weyl_normal_form(const WeylElement& p, std::span<const WeylElement> gb) {
    if (p.is_zero()) return p;
    WeylCtx ctx{p.base_ring(), p.nvars(), &weyl_order(p.nvars())};
    std::vector<WVec> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb)
        if (!g.is_zero()) basis.push_back(sorted_terms(g, ctx));
    return to_element(weyl_nf(sorted_terms(p, ctx), basis, ctx), ctx);
}

bool weyl_member(const WeylElement& p, const WeylIdeal& I) {
    require_same_ring(p.base_ring(), I.base_ring(), "weyl_member");
    return weyl_normal_form(p, I.left_groebner()).is_zero();
}

bool weyl_ideal_equal(const WeylIdeal& I, const WeylIdeal& J) {
    require_same_ring(I.base_ring(), J.base_ring(), "weyl_ideal_equal");
    for (const auto& g : I.generators())
        if (!weyl_member(g, J)) return false;
    for (const auto& g : J.generators())
        if (!weyl_member(g, I)) return false;
    return true;
}

Ideal char_ideal(const WeylIdeal& I) {
    Ring sring = symbol_ring_for(I.base_ring());
    std::vector<Poly> symbols;
    for (const auto& g : I.left_groebner()) symbols.push_back(g.principal_symbol(sring));
    return Ideal(sring, std::move(symbols));
}

} // namespace dloc

#include "dloc/annihilator.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

namespace dloc {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// multi-indices |alpha| <= d: total degree ascending, lexicographically
// descending within a degree ((1,0) before (0,1))
std::vector<ExpVec> multi_indices(int n, int d) {
    std::vector<ExpVec> out;
    std::vector<int32_t> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            ExpVec m(n);
            for (int i = 0; i < n; ++i) m[i] = cur[static_cast<size_t>(i)];
            out.push_back(m);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    for (int deg = 0; deg <= d; ++deg) rec(rec, 0, deg);
    return out;
}

Rational origin_value(const Poly& p) { return p.constant_term(); }

} // namespace

std::string to_string(const Multiplicity& m) {
    switch (m.kind) {
    case Multiplicity::Kind::Finite: return std::to_string(m.value);
    case Multiplicity::Kind::Infinite: return "infinite";
    case Multiplicity::Kind::Undefined: return "undefined";
    }
    return "?";
}

std::vector<std::pair<ExpVec, Poly>> derivative_numerators(const Poly& f, int a, int d) {
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("derivative_numerators: constant f");
    if (d < 0) throw std::invalid_argument("derivative_numerators: negative order");
    const int n = f.arity();
    const Ring& ring = f.ring();

    std::vector<Poly> df;
    for (int i = 0; i < n; ++i) df.push_back(f.partial_derivative(i));
    std::vector<Poly> fpow{Poly::constant(ring, Rational(1))};
    for (int e = 1; e <= d; ++e) fpow.push_back(fpow.back() * f);

    // g_alpha with d^alpha f^a = g_alpha f^(a-|alpha|), built one step at a time
    auto indices = multi_indices(n, d);
    std::map<std::vector<int32_t>, Poly> g_of;
    auto key_of = [n](const ExpVec& m) {
        std::vector<int32_t> k(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) k[static_cast<size_t>(i)] = m[i];
        return k;
    };
    std::vector<std::pair<ExpVec, Poly>> out;
    out.reserve(indices.size());
    for (const auto& alpha : indices) {
        Poly g = Poly::zero(ring);
        if (alpha.is_zero()) {
            g = Poly::constant(ring, Rational(1));
        } else {
            int i = 0;
            while (alpha[i] == 0) ++i;
            ExpVec prev = alpha;
            prev[i] = alpha[i] - 1;
            const Poly& gp = g_of.at(key_of(prev));
            long long k = a - prev.total_degree();
            g = gp.partial_derivative(i) * f + gp.scaled(Rational(static_cast<long>(k))) * df[static_cast<size_t>(i)];
        }
        g_of.emplace(key_of(alpha), g);
        out.push_back({alpha, g * fpow[static_cast<size_t>(d - alpha.total_degree())]});
    }
    return out;
}

WeylIdeal truncated_annihilator(const Poly& f, int a, int d, std::span<const ModuleVector> seed,
                                std::vector<ModuleVector>* out_syzygies) {
    auto nums = derivative_numerators(f, a, d);
    std::vector<Poly> v;
    v.reserve(nums.size());
    for (const auto& [alpha, num] : nums) v.push_back(num);

    std::vector<ModuleVector> syz = syzygies(std::span<const Poly>(v), seed);
    if (out_syzygies) *out_syzygies = syz;

    const int n = f.arity();
    std::vector<WeylElement> gens;
    gens.reserve(syz.size());
    for (const auto& c : syz) {
        std::vector<Term> terms;
        for (size_t slot = 0; slot < c.components.size(); ++slot) {
            const ExpVec& alpha = nums[slot].first;
            for (const auto& t : c.components[slot].terms()) {
                ExpVec mono(2 * n);
                for (int i = 0; i < n; ++i) {
                    mono[i] = t.mono[i];
                    mono[n + i] = alpha[i];
                }
                terms.push_back({mono, t.coeff});
            }
        }
        WeylElement op = WeylElement::from_terms(f.ring(), std::move(terms));
        if (op.terms().front().coeff < 0) op = -op; // positive leading coefficient
        TwistedPower acted = apply_to_twisted_power(op, {f, Poly::constant(f.ring(), Rational(1)), a});
        if (!acted.numerator.is_zero())
            throw std::logic_error("truncated_annihilator: generator fails to annihilate f^a");
        gens.push_back(std::move(op));
    }
    return WeylIdeal(f.ring(), std::move(gens));
}

int curve_multiplicity(const Poly& f) {
    if (f.is_zero()) throw CurveError(CurveErrorCode::ConstantPoly, "zero polynomial");
    if (origin_value(f) != 0)
        throw CurveError(CurveErrorCode::MissingOrigin, "curve does not pass through the origin");
    return f.degree_info().min_total;
}

bool check_genericity(const Poly& f, const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("check_genericity: zero direction");
    if (f.arity() != 2) throw std::invalid_argument("check_genericity: expected a plane curve");
    Poly fx = f.partial_derivative(0), fy = f.partial_derivative(1);
    std::vector<Poly> grad{fx, fy};
    auto syz = syzygies(std::span<const Poly>(grad));

    Ring sring = symbol_ring_for(f.ring()); // (x,y,xi,eta)
    Poly xi = Poly::variable(sring, 2), eta = Poly::variable(sring, 3);
    std::vector<Poly> gens;
    for (const auto& uv : syz)
        gens.push_back(map_to_ring(uv.components[0], sring) * xi + map_to_ring(uv.components[1], sring) * eta);
    gens.push_back(map_to_ring(f, sring));
    Ideal I(sring, std::move(gens));
    std::vector<Poly> xy{Poly::variable(sring, 0), Poly::variable(sring, 1)};
    Ideal J = saturate_by_ideal(I, xy);

    std::vector<Rational> point{Rational(0), Rational(0), a, b};
    for (const auto& g : J.generators())
        if (g.evaluate(point) != 0) return true; // point lies outside V(J)
    return false;
}

Multiplicity local_multiplicity_at_origin(const Ideal& J) {
    if (J.ring()->arity() != 2) throw std::invalid_argument("local_multiplicity_at_origin: expected 2 variables");
    bool origin_in_variety = true;
    for (const auto& g : J.generators())
        if (origin_value(g) != 0) origin_in_variety = false;
    if (!origin_in_variety) return Multiplicity::finite(0);

    std::vector<Poly> xy{Poly::variable(J.ring(), 0), Poly::variable(J.ring(), 1)};
    Ideal S = saturate_by_ideal(J, xy);

    const Poly* witness = nullptr;
    for (const auto& s : S.generators())
        if (origin_value(s) != 0) {
            witness = &s;
            break;
        }
    if (!witness) return Multiplicity::undefined();

    Ideal origin_component = saturate_by_poly(J, *witness).ideal;
    auto dim = quotient_vector_space_dim(origin_component);
    return dim ? Multiplicity::finite(*dim) : Multiplicity::infinite();
}

Multiplicity m_d(const Poly& f, int a, int d, const Rational& pa, const Rational& pb) {
    WeylIdeal A = truncated_annihilator(f, a, d);
    Ideal C = char_ideal(A);
    Ring xy = ring_xy();
    std::vector<Poly> subbed;
    for (const auto& g : C.generators())
        subbed.push_back(map_to_ring(g.substitute({{2, pa}, {3, pb}}), xy));
    return local_multiplicity_at_origin(Ideal(xy, std::move(subbed)));
}

CurveInput validate_curve(const Poly& f) {
    if (f.arity() != 2) throw std::invalid_argument("validate_curve: expected 2 variables");
    if (f.is_zero() || f.is_constant())
        throw CurveError(CurveErrorCode::ConstantPoly, "constant polynomial does not define a curve");
    if (!is_squarefree(f))
        throw CurveError(CurveErrorCode::NotSquarefree, "polynomial is not squarefree (curve must be reduced)");
    if (origin_value(f) != 0)
        throw CurveError(CurveErrorCode::MissingOrigin, "curve does not pass through the origin");

    Poly fx = f.partial_derivative(0), fy = f.partial_derivative(1);
    Ideal singular(f.ring(), {f, fx, fy});
    std::vector<Poly> xy{Poly::variable(f.ring(), 0), Poly::variable(f.ring(), 1)};
    Ideal away = saturate_by_ideal(singular, xy);
    bool away_empty = false;
    for (const auto& g : away.generators())
        if (g.is_constant()) away_empty = true;
    if (!away_empty) {
        std::string witness;
        for (const auto& g : away.generators()) {
            if (!witness.empty()) witness += ", ";
            witness += to_string(g);
        }
        throw CurveError(CurveErrorCode::OffOriginSingularity,
                         "curve has singular points away from the origin", witness);
    }

    CurveInput in{f, -1, origin_value(fx) == 0 && origin_value(fy) == 0};
    return in;
}

Poly reiffen(int p, int q) {
    if (p < 4 || q < p + 1) throw std::invalid_argument("reiffen: requires p >= 4 and q >= p+1");
    Ring ring = ring_xy();
    Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
    return x.pow(static_cast<unsigned>(p)) + y.pow(static_cast<unsigned>(q)) +
           x * y.pow(static_cast<unsigned>(q - 1));
}

const std::vector<std::pair<Rational, Rational>>& genericity_ladder() {
    static const std::vector<std::pair<Rational, Rational>> ladder = {
        {Rational(0), Rational(1)}, {Rational(1), Rational(0)},  {Rational(1), Rational(1)},
        {Rational(1), Rational(-1)}, {Rational(2), Rational(1)}, {Rational(1), Rational(2)},
        {Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}, {Rational(3), Rational(1)},
        {Rational(1), Rational(3)}, {Rational(3), Rational(-1)}, {Rational(-1), Rational(3)},
    };
    return ladder;
}

namespace {

// first ladder point from `start` that passes the genericity check
size_t next_generic_point(const Poly& f, size_t start) {
    const auto& ladder = genericity_ladder();
    for (size_t i = start; i < ladder.size(); ++i)
        if (check_genericity(f, ladder[i].first, ladder[i].second)) return i;
    throw NoGenericityPoint("no generic plane found in the candidate ladder for f = " + to_string(f));
}

Multiplicity multiplicity_from_char(const std::vector<Poly>& char_gens, const Rational& pa,
                                    const Rational& pb) {
    Ring xy = ring_xy();
    std::vector<Poly> subbed;
    for (const auto& g : char_gens)
        subbed.push_back(map_to_ring(g.substitute({{2, pa}, {3, pb}}), xy));
    return local_multiplicity_at_origin(Ideal(xy, std::move(subbed)));
}

} // namespace

KappaResult kappa_and_annihilator(const Poly& f, const KappaConfig& config) {
    auto t_start = std::chrono::steady_clock::now();
    CurveInput in = validate_curve(f);
    const int m = curve_multiplicity(f);

    Rational pa, pb;
    size_t ladder_pos = 0;
    bool from_ladder = !config.point.has_value();
    if (config.point) {
        pa = config.point->first;
        pb = config.point->second;
        if (!check_genericity(f, pa, pb))
            throw NoGenericityPoint("supplied point (" + to_string(pa) + "," + to_string(pb) +
                                    ") fails the genericity check");
    } else {
        ladder_pos = next_generic_point(f, 0);
        pa = genericity_ladder()[ladder_pos].first;
        pb = genericity_ladder()[ladder_pos].second;
    }

    KappaResult result;
    result.curve_multiplicity = m;
    result.point_a = pa;
    result.point_b = pb;

    if (!in.origin_singular) {
        // globally smooth curve: the annihilator is already generated in
        // order 1; report d=1 and flag the fast path
        auto t0 = std::chrono::steady_clock::now();
        WeylIdeal A = truncated_annihilator(f, in.a, 1);
        Ideal C = char_ideal(A);
        TruncationReport rep;
        rep.d = 1;
        rep.generators = A.generators();
        rep.char_generators = C.generators();
        rep.m = multiplicity_from_char(C.generators(), pa, pb);
        rep.point_a = pa;
        rep.point_b = pb;
        rep.wall_ms = ms_since(t0);
        result.kappa = 1;
        result.annihilator = A;
        result.smooth_curve = true;
        result.trace.push_back(std::move(rep));
        result.total_ms = ms_since(t_start);
        return result;
    }

    int undefined_streak = 0;
    std::vector<ModuleVector> prev_syzygies;
    for (int d = 1; d <= config.max_d; ++d) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<ModuleVector> syz;
        std::span<const ModuleVector> seed;
        std::vector<ModuleVector> lifted;
        if (config.reuse_syzygies && d > 1) {
            // syzygies at order d-1 lift: the slot enumeration is a prefix of
            // this order's, with zero coefficients on the new slots
            size_t rank = multi_indices(2, d).size();
            for (const auto& s : prev_syzygies) {
                ModuleVector v{f.ring(), s.components};
                while (v.components.size() < rank) v.components.push_back(Poly::zero(f.ring()));
                lifted.push_back(std::move(v));
            }
            seed = lifted;
        }
        WeylIdeal A = truncated_annihilator(f, in.a, d, seed, &syz);
        prev_syzygies = std::move(syz);

        Ideal C = char_ideal(A);
        Multiplicity mult = multiplicity_from_char(C.generators(), pa, pb);

        TruncationReport rep;
        rep.d = d;
        rep.generators = A.generators();
        rep.char_generators = C.generators();
        rep.m = mult;
        rep.point_a = pa;
        rep.point_b = pb;

        if (mult.kind == Multiplicity::Kind::Undefined) {
            ++undefined_streak;
            if (undefined_streak >= 3 && from_ladder) {
                // persistent undefined multiplicities: try the next plane
                ladder_pos = next_generic_point(f, ladder_pos + 1);
                pa = genericity_ladder()[ladder_pos].first;
                pb = genericity_ladder()[ladder_pos].second;
                result.point_a = pa;
                result.point_b = pb;
                mult = multiplicity_from_char(C.generators(), pa, pb);
                rep.m = mult;
                rep.point_a = pa;
                rep.point_b = pb;
                undefined_streak = mult.kind == Multiplicity::Kind::Undefined ? 1 : 0;
            }
        } else {
            undefined_streak = 0;
        }

        rep.wall_ms = ms_since(t0);
        result.trace.push_back(std::move(rep));

        if (mult == Multiplicity::finite(m - 1)) {
            result.kappa = d;
            result.annihilator = A;
            result.total_ms = ms_since(t_start);
            return result;
        }
    }
    throw OrderCapExceeded(config.max_d);
}

} // namespace dloc

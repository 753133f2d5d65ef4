#include "dloc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dloc {

namespace {
const MonomialOrder& storage_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}
} // namespace

Poly Poly::constant(Ring ring, Rational c) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_.push_back({ExpVec(p.arity()), std::move(c)});
    return p;
}

Poly Poly::variable(const Ring& ring, int index, int32_t power) {
    if (index < 0 || index >= ring->arity()) throw std::out_of_range("Poly::variable: index out of range");
    Poly p(ring);
    if (power < 0) throw std::invalid_argument("Poly::variable: negative power");
    p.terms_.push_back({ExpVec::unit(ring->arity(), index, power), Rational(1)});
    return p;
}

Poly Poly::monomial(const Ring& ring, ExpVec m, Rational c) {
    Poly p(ring);
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
}

Poly Poly::from_terms(Ring ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return storage_order().greater(a.mono, b.mono);
    });
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Rational Poly::coefficient(const ExpVec& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

Poly Poly::operator+(const Poly& q) const {
    require_same_ring(ring_, q.ring_, "poly add");
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        int c = storage_order().compare(terms_[i].mono, q.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + q.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Poly Poly::operator-(const Poly& q) const { return *this + (-q); }

Poly Poly::operator*(const Poly& q) const {
    require_same_ring(ring_, q.ring_, "poly mul");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * q.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : q.terms_) prod.push_back({a.mono + b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = constant(ring_, Rational(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

Poly Poly::monomial_multiple(const Rational& c, const ExpVec& m) const {
    if (c == 0) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono + m, t.coeff * c});
    return r;
}

bool Poly::operator==(const Poly& q) const {
    if (!same_ring(ring_, q.ring_) || terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == q.terms_[i].mono) || terms_[i].coeff != q.terms_[i].coeff) return false;
    return true;
}

Poly Poly::partial_derivative(int var_index) const {
    if (var_index < 0 || var_index >= arity()) throw std::out_of_range("partial_derivative: index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        int32_t e = t.mono[var_index];
        if (e == 0) continue;
        ExpVec m = t.mono;
        m[var_index] = e - 1;
        out.push_back({m, t.coeff * e});
    }
    return from_terms(ring_, std::move(out));
}

Poly::DegreeInfo Poly::degree_info() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    DegreeInfo info;
    info.total = terms_.front().mono.total_degree();
    info.min_total = info.total;
    for (const auto& t : terms_) {
        int32_t d = t.mono.total_degree();
        info.total = std::max(info.total, d);
        info.min_total = std::min(info.min_total, d);
    }
    return info;
}

Poly Poly::substitute(const std::map<int, Rational>& assignment) const {
    for (const auto& [i, v] : assignment) {
        (void)v;
        if (i < 0 || i >= arity()) throw std::out_of_range("substitute: index out of range");
    }
    std::vector<std::string> kept_names;
    std::vector<int> kept_index;
    for (int i = 0; i < arity(); ++i) {
        if (!assignment.count(i)) {
            kept_names.push_back(ring_->var(i));
            kept_index.push_back(i);
        }
    }
    Ring target = make_ring(kept_names);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        for (const auto& [i, v] : assignment) {
            for (int32_t k = 0; k < t.mono[i]; ++k) c *= v;
        }
        if (c == 0) continue;
        ExpVec m(static_cast<int>(kept_index.size()));
        for (size_t k = 0; k < kept_index.size(); ++k) m[static_cast<int>(k)] = t.mono[kept_index[k]];
        out.push_back({m, std::move(c)});
    }
    return from_terms(target, std::move(out));
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity()) throw std::invalid_argument("evaluate: wrong point size");
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        for (int i = 0; i < arity(); ++i)
            for (int32_t k = 0; k < t.mono[i]; ++k) c *= point[static_cast<size_t>(i)];
        sum += c;
    }
    return sum;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().coeff < 0) scale = -scale;
    return scaled(scale);
}

Poly Poly::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return scaled(1 / leading_term(order).coeff);
}

Poly poly_arith(PolyOp op, const Poly& a, const Poly& b) {
    switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    }
    throw std::logic_error("poly_arith: bad op");
}

Poly poly_scale(const Poly& a, const Rational& c) { return a.scaled(c); }
Poly poly_power(const Poly& a, unsigned n) { return a.pow(n); }

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? '-' : '+';
        }
        bool has_vars = !t.mono.is_zero();
        if (!has_vars) {
            out += to_string(c);
            continue;
        }
        bool printed = false;
        if (c != 1) {
            out += to_string(c);
            printed = true;
        }
        for (int i = 0; i < p.arity(); ++i) {
            int32_t e = t.mono[i];
            if (e == 0) continue;
            if (printed) out += '*';
            out += p.ring()->var(i);
            if (e > 1) out += "^" + std::to_string(e);
            printed = true;
        }
    }
    return out;
}

Poly map_to_ring(const Poly& p, const Ring& target) {
    // variables that do not occur in p may be absent from the target
    std::vector<int> image(static_cast<size_t>(p.arity()), -1);
    for (int i = 0; i < p.arity(); ++i)
        if (auto idx = target->index_of(p.ring()->var(i))) image[static_cast<size_t>(i)] = *idx;
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        ExpVec m(target->arity());
        for (int i = 0; i < p.arity(); ++i) {
            if (t.mono[i] == 0) continue;
            if (image[static_cast<size_t>(i)] < 0)
                throw std::invalid_argument("map_to_ring: variable " + p.ring()->var(i) +
                                            " missing in target");
            m[image[static_cast<size_t>(i)]] = t.mono[i];
        }
        out.push_back({m, t.coeff});
    }
    return Poly::from_terms(target, std::move(out));
}

} // namespace dloc

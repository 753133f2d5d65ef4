#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dloc {

// Exponent vector with a small fixed capacity; every ring in this project has
// at most six variables (x,y,xi,eta plus a fresh elimination variable).
class ExpVec {
public:
    static constexpr int kMaxVars = 8;

    ExpVec() = default;
    explicit ExpVec(int arity) : n_(static_cast<int8_t>(arity)) {
        if (arity < 0 || arity > kMaxVars) throw std::invalid_argument("ExpVec: bad arity");
    }
    static ExpVec unit(int arity, int i, int32_t power = 1) {
        ExpVec v(arity);
        v[i] = power;
        return v;
    }

    int arity() const { return n_; }
    int32_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int32_t& operator[](int i) { return e_[static_cast<size_t>(i)]; }

    int32_t total_degree() const {
        int32_t d = 0;
        for (int i = 0; i < n_; ++i) d += e_[static_cast<size_t>(i)];
        return d;
    }

    bool is_zero() const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] != 0) return false;
        return true;
    }

    bool divides(const ExpVec& m) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] > m.e_[static_cast<size_t>(i)]) return false;
        return true;
    }

    bool coprime_with(const ExpVec& m) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] > 0 && m.e_[static_cast<size_t>(i)] > 0) return false;
        return true;
    }

    ExpVec operator+(const ExpVec& m) const {
        ExpVec r(n_);
        for (int i = 0; i < n_; ++i) r.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)] + m.e_[static_cast<size_t>(i)];
        return r;
    }

    // componentwise difference; caller guarantees m.divides(*this)
    ExpVec operator-(const ExpVec& m) const {
        ExpVec r(n_);
        for (int i = 0; i < n_; ++i) r.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)] - m.e_[static_cast<size_t>(i)];
        return r;
    }

    static ExpVec lcm(const ExpVec& a, const ExpVec& b) {
        ExpVec r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            r.e_[static_cast<size_t>(i)] = a.e_[static_cast<size_t>(i)] > b.e_[static_cast<size_t>(i)]
                                               ? a.e_[static_cast<size_t>(i)]
                                               : b.e_[static_cast<size_t>(i)];
        return r;
    }

    bool operator==(const ExpVec& m) const {
        if (n_ != m.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] != m.e_[static_cast<size_t>(i)]) return false;
        return true;
    }

private:
    std::array<int32_t, kMaxVars> e_{};
    int8_t n_ = 0;
};

// Total multiplicative well-orders on monomials. Block orders put a chosen
// subset of variables in front (eliminating them), grevlex inside each block.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, WeightedGrevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
    static MonomialOrder weighted_grevlex(std::vector<int> weights);
    static MonomialOrder block(std::vector<uint8_t> front_mask);
    static MonomialOrder block_front(int arity, const std::vector<int>& front_vars);

    Kind kind() const { return kind_; }

    // +1 if a > b, 0 if equal, -1 if a < b
    int compare(const ExpVec& a, const ExpVec& b) const;
    bool greater(const ExpVec& a, const ExpVec& b) const { return compare(a, b) > 0; }

    // stable identifier, used as a Groebner-cache key
    std::string key() const;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<int> weights_;
    std::vector<uint8_t> mask_;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// spec'd three-way comparison entry point
Cmp compare(const MonomialOrder& order, const ExpVec& a, const ExpVec& b);

} // namespace dloc

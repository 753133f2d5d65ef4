#include "dloc/monomial.hpp"

namespace dloc {

namespace {

// grevlex: higher total degree wins; on ties the *last* differing exponent
// decides, smaller exponent winning.
int grevlex_cmp(const ExpVec& a, const ExpVec& b) {
    int32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.arity() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int grevlex_cmp_masked(const ExpVec& a, const ExpVec& b, const std::vector<uint8_t>& mask, uint8_t want) {
    int32_t da = 0, db = 0;
    for (int i = 0; i < a.arity(); ++i)
        if (mask[static_cast<size_t>(i)] == want) {
            da += a[i];
            db += b[i];
        }
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.arity() - 1; i >= 0; --i) {
        if (mask[static_cast<size_t>(i)] != want) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<int> weights) {
    for (int w : weights)
        if (w < 0) throw std::invalid_argument("weighted_grevlex: negative weight");
    MonomialOrder o(Kind::WeightedGrevLex);
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<uint8_t> front_mask) {
    MonomialOrder o(Kind::Block);
    o.mask_ = std::move(front_mask);
    return o;
}

MonomialOrder MonomialOrder::block_front(int arity, const std::vector<int>& front_vars) {
    std::vector<uint8_t> mask(static_cast<size_t>(arity), 0);
    for (int v : front_vars) mask.at(static_cast<size_t>(v)) = 1;
    return block(std::move(mask));
}

int MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
    if (a.arity() != b.arity()) throw std::invalid_argument("compare: arity mismatch");
    switch (kind_) {
    case Kind::Lex:
        for (int i = 0; i < a.arity(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    case Kind::GrevLex:
        return grevlex_cmp(a, b);
    case Kind::WeightedGrevLex: {
        if (static_cast<int>(weights_.size()) != a.arity())
            throw std::invalid_argument("weighted order arity mismatch");
        long wa = 0, wb = 0;
        for (int i = 0; i < a.arity(); ++i) {
            wa += static_cast<long>(weights_[static_cast<size_t>(i)]) * a[i];
            wb += static_cast<long>(weights_[static_cast<size_t>(i)]) * b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        return grevlex_cmp(a, b);
    }
    case Kind::Block: {
        if (static_cast<int>(mask_.size()) != a.arity())
            throw std::invalid_argument("block order arity mismatch");
        if (int c = grevlex_cmp_masked(a, b, mask_, 1)) return c;
        return grevlex_cmp_masked(a, b, mask_, 0);
    }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GrevLex: return "grevlex";
    case Kind::WeightedGrevLex: {
        std::string k = "wgrevlex:";
        for (int w : weights_) k += std::to_string(w) + ",";
        return k;
    }
    case Kind::Block: {
        std::string k = "block:";
        for (uint8_t m : mask_) k += m ? '1' : '0';
        return k;
    }
    }
    return "?";
}

Cmp compare(const MonomialOrder& order, const ExpVec& a, const ExpVec& b) {
    int c = order.compare(a, b);
    return c < 0 ? Cmp::LT : (c > 0 ? Cmp::GT : Cmp::EQ);
}

} // namespace dloc

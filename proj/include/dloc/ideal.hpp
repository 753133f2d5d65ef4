#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "dloc/poly.hpp"

namespace dloc {

// Ideal of a polynomial ring, given by generators. Zero generators are
// dropped on construction. Reduced Groebner bases are memoized per order;
// the cache is shared across copies, guarded by a mutex, written once per key.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
    Ideal(Ring ring, std::vector<Poly> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // reduced Groebner basis w.r.t. order (memoized)
    const std::vector<Poly>& groebner(const MonomialOrder& order) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const std::vector<Poly>>> by_order;
    };
    Ring ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

} // namespace dloc

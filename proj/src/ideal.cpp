#include "dloc/ideal.hpp"

#include "dloc/groebner.hpp"

namespace dloc {

Ideal::Ideal(Ring ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(ring_, g.ring(), "Ideal");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& order) const {
    if (!cache_) throw std::logic_error("Ideal: default-constructed");
    const std::string key = order.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->by_order.find(key);
        if (it != cache_->by_order.end()) return *it->second;
    }
    auto gb = std::make_shared<const std::vector<Poly>>(groebner_basis(std::span<const Poly>(gens_), order));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->by_order.emplace(key, std::move(gb));
    return *it->second;
}

} // namespace dloc

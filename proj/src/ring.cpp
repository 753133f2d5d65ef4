#include "dloc/ring.hpp"

#include <unordered_set>

namespace dloc {

RingSpec::RingSpec(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("RingSpec: empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("RingSpec: duplicate variable " + n);
    }
}

std::optional<int> RingSpec::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

Ring make_ring(std::vector<std::string> names) {
    return std::make_shared<const RingSpec>(std::move(names));
}

} // namespace dloc

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dloc {

// Ordered list of distinct variable names. Rings compare by value, so two
// independently constructed rings with the same names are interchangeable.
class RingSpec {
public:
    explicit RingSpec(std::vector<std::string> names);

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& var(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& vars() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const RingSpec& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::vector<std::string> names);

inline Ring ring_xy() { return make_ring({"x", "y"}); }

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!same_ring(a, b)) throw std::invalid_argument(std::string(where) + ": ring mismatch");
}

} // namespace dloc

#include "onto2cdm/cardinality.hpp"

#include <algorithm>

namespace onto2cdm {

std::optional<Cardinality> intersect(const Cardinality& a, const Cardinality& b) noexcept {
    Cardinality out;
    out.min = std::max(a.min, b.min);
    if (a.max && b.max) {
        out.max = std::min(*a.max, *b.max);
    } else if (a.max) {
        out.max = a.max;
    } else {
        out.max = b.max;
    }
    if (!out.valid()) {
        return std::nullopt;
    }
    return out;
}

std::string render(const Cardinality& c) {
    if (!c.max) {
        return std::to_string(c.min) + "..*";
    }
    if (*c.max == c.min) {
        return std::to_string(c.min);
    }
    return std::to_string(c.min) + ".." + std::to_string(*c.max);
}

}  // namespace onto2cdm

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace onto2cdm {

/// A (min, max) multiplicity interval; an empty `max` means unbounded.
struct Cardinality {
    std::uint32_t min = 0;
    std::optional<std::uint32_t> max;

    static constexpr Cardinality any() noexcept { return {0, std::nullopt}; }
    static constexpr Cardinality at_most_one() noexcept { return {0, 1u}; }
    static constexpr Cardinality at_least_one() noexcept { return {1, std::nullopt}; }
    static constexpr Cardinality exactly(std::uint32_t n) noexcept { return {n, n}; }

    bool unbounded() const noexcept { return !max.has_value(); }
    bool valid() const noexcept { return !max || min <= *max; }

    friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

/// Tightest bounds satisfying both intervals, or nullopt when they are
/// disjoint. Commutative and associative.
std::optional<Cardinality> intersect(const Cardinality& a, const Cardinality& b) noexcept;

/// Class-diagram notation: "0..*", "1", "2..5".
std::string render(const Cardinality& c);

}  // namespace onto2cdm

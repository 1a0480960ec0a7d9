#pragma once

#include <compare>
#include <string>
#include <tuple>

namespace superfrieze {

enum class Parity { Even = 0, Odd = 1 };

/// A named ring generator. Index -1 means "no index" (bare name like "x").
/// The total order (parity, name, index) fixes the canonical monomial form:
/// odd factors are always stored sorted by it, with Koszul signs tracked.
struct GeneratorId {
    std::string name;
    int index = -1;
    Parity parity = Parity::Even;

    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
    friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
        return std::tie(a.parity, a.name, a.index) <=> std::tie(b.parity, b.name, b.index);
    }

    /// "a1", "x", ... — name followed by the index when present.
    std::string label() const {
        return index < 0 ? name : name + std::to_string(index);
    }
};

inline GeneratorId even_gen(std::string name, int index = -1) {
    return GeneratorId{std::move(name), index, Parity::Even};
}

inline GeneratorId odd_gen(std::string name, int index = -1) {
    return GeneratorId{std::move(name), index, Parity::Odd};
}

} // namespace superfrieze

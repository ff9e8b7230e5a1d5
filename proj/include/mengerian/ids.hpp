#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>

namespace mengerian {

/// Dense, stable index into a graph's vertex or edge table.
template <class Tag>
struct Id {
    std::uint32_t value = 0;

    constexpr Id() = default;
    constexpr explicit Id(std::uint32_t v) : value(v) {}
    constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
    constexpr explicit Id(int v) : value(static_cast<std::uint32_t>(v)) {}

    constexpr std::size_t index() const { return value; }

    friend constexpr auto operator<=>(Id, Id) = default;
    friend std::ostream& operator<<(std::ostream& os, Id id) { return os << id.value; }
};

struct VertexTag {};
struct EdgeTag {};

using VertexId = Id<VertexTag>;
using EdgeId = Id<EdgeTag>;

/// Time step assigned to an edge. Valid labels are >= 1.
using Label = std::uint32_t;

}  // namespace mengerian

template <class Tag>
struct std::hash<mengerian::Id<Tag>> {
    std::size_t operator()(mengerian::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

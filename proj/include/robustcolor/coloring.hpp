#ifndef ROBUSTCOLOR_COLORING_HPP
#define ROBUSTCOLOR_COLORING_HPP

#include "robustcolor/graph.hpp"
#include "robustcolor/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace robustcolor {

// Per-vertex color assignment. Colors are fixed-arity integer tuples stored
// flat so products of colorings compose by concatenation; every tuple in one
// coloring has the same arity.
struct Coloring {
    std::uint32_t arity = 1;
    std::vector<std::int32_t> flat;

    Coloring() = default;
    Coloring(std::uint32_t vertex_count, std::uint32_t tuple_arity, std::int32_t fill)
        : arity(tuple_arity)
        , flat(std::size_t(vertex_count) * tuple_arity, fill)
    {
    }

    static Coloring constant(std::uint32_t vertex_count, std::int32_t value = 1)
    {
        return Coloring(vertex_count, 1, value);
    }

    std::uint32_t size() const
    {
        return arity == 0 ? 0 : static_cast<std::uint32_t>(flat.size() / arity);
    }

    std::span<const std::int32_t> tuple(VertexId v) const
    {
        return {flat.data() + std::size_t(v) * arity, arity};
    }

    std::span<std::int32_t> tuple(VertexId v)
    {
        return {flat.data() + std::size_t(v) * arity, arity};
    }

    bool same_color(VertexId a, VertexId b) const
    {
        const std::int32_t* pa = flat.data() + std::size_t(a) * arity;
        const std::int32_t* pb = flat.data() + std::size_t(b) * arity;
        for (std::uint32_t i = 0; i < arity; ++i)
            if (pa[i] != pb[i])
                return false;
        return true;
    }

    bool operator==(const Coloring&) const = default;
};

// True iff no edge of g is monochromatic under c.
bool is_proper(const Coloring& c, const GroundTruthGraph& g);

// Concatenates tuples vertex-wise; proper on the union whenever each part is
// proper on its own graph.
Coloring product_coloring(std::span<const Coloring> parts);
Coloring product_coloring(const Coloring& a, const Coloring& b);

// First-fit coloring in the given vertex order with integer colors in
// [1, max_degree+1]. Deterministic given the order.
Coloring greedy_color(const GroundTruthGraph& g, std::span<const VertexId> order);
Coloring greedy_color_ascending(const GroundTruthGraph& g);

std::size_t count_colors(const Coloring& c);

} // namespace robustcolor

#endif

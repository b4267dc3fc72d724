#include "robustcolor/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace robustcolor {

bool is_proper(const Coloring& c, const GroundTruthGraph& g)
{
    if (c.size() != g.n())
        throw LengthMismatch("coloring has " + std::to_string(c.size())
            + " vertices, graph has " + std::to_string(g.n()));
    for (VertexId v = 0; v < g.n(); ++v) {
        bool bad = false;
        g.for_each_neighbor(v, [&](VertexId w) {
            if (v < w && c.same_color(v, w))
                bad = true;
        });
        if (bad)
            return false;
    }
    return true;
}

Coloring product_coloring(std::span<const Coloring> parts)
{
    if (parts.empty())
        return Coloring();
    std::uint32_t n = parts.front().size();
    std::uint32_t arity = 0;
    for (const Coloring& p : parts) {
        if (p.size() != n)
            throw LengthMismatch("product of colorings with different lengths");
        arity += p.arity;
    }
    Coloring out(n, arity, 0);
    for (VertexId v = 0; v < n; ++v) {
        std::int32_t* dst = out.flat.data() + std::size_t(v) * arity;
        for (const Coloring& p : parts) {
            auto t = p.tuple(v);
            dst = std::copy(t.begin(), t.end(), dst);
        }
    }
    return out;
}

Coloring product_coloring(const Coloring& a, const Coloring& b)
{
    const Coloring parts[2] = {a, b};
    return product_coloring(std::span<const Coloring>(parts, 2));
}

Coloring greedy_color(const GroundTruthGraph& g, std::span<const VertexId> order)
{
    Coloring out(g.n(), 1, 0); // 0 = not yet colored
    std::vector<std::uint8_t> used(std::size_t(g.max_degree()) + 2, 0);
    std::vector<std::int32_t> taken;
    for (VertexId v : order) {
        taken.clear();
        g.for_each_neighbor(v, [&](VertexId w) {
            std::int32_t cw = out.flat[w];
            if (cw != 0)
                taken.push_back(cw);
        });
        for (std::int32_t c : taken)
            if (static_cast<std::size_t>(c) < used.size())
                used[c] = 1;
        std::int32_t pick = 1;
        while (static_cast<std::size_t>(pick) < used.size() && used[pick])
            ++pick;
        out.flat[v] = pick;
        for (std::int32_t c : taken)
            if (static_cast<std::size_t>(c) < used.size())
                used[c] = 0;
    }
    return out;
}

Coloring greedy_color_ascending(const GroundTruthGraph& g)
{
    std::vector<VertexId> order(g.n());
    std::iota(order.begin(), order.end(), 0u);
    return greedy_color(g, order);
}

std::size_t count_colors(const Coloring& c)
{
    std::uint32_t n = c.size();
    if (n == 0)
        return 0;
    std::vector<VertexId> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    auto cmp = [&](VertexId a, VertexId b) {
        auto ta = c.tuple(a);
        auto tb = c.tuple(b);
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    };
    std::sort(idx.begin(), idx.end(), cmp);
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (!c.same_color(idx[i - 1], idx[i]))
            ++distinct;
    return distinct;
}

} // namespace robustcolor

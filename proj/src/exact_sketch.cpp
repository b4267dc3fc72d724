#include "robustcolor/exact_sketch.hpp"

namespace robustcolor {

ExactBufferSketch::ExactBufferSketch(const StreamConfig& cfg, std::uint64_t)
    : graph_(cfg.n)
{
}

void ExactBufferSketch::process(const EdgeToken& t)
{
    // Window semantics: a delete whose insert precedes this sketch's window
    // removes nothing.
    graph_.apply_lenient(t);
}

Coloring ExactBufferSketch::query()
{
    return greedy_color_ascending(graph_);
}

std::size_t ExactBufferSketch::space_proxy() const
{
    return graph_.edge_count() + graph_.n() + 2;
}

void ExactBufferSketch::serialize(std::vector<std::uint8_t>& out) const
{
    put_u32(out, graph_.n());
    auto es = graph_.edges();
    put_u64(out, es.size());
    for (auto [u, v] : es) {
        put_u32(out, u);
        put_u32(out, v);
    }
}

} // namespace robustcolor

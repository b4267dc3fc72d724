#include "robustcolor/graph.hpp"

#include <algorithm>
#include <string>

namespace robustcolor {

GroundTruthGraph::GroundTruthGraph(std::uint32_t n)
    : n_(n)
    , words_((std::size_t(n) + 63) / 64)
    , bits_(std::size_t(n) * words_, 0)
    , degree_(n, 0)
    , degree_histogram_(std::size_t(n) + 1, 0)
{
    degree_histogram_[0] = n;
}

void GroundTruthGraph::set_edge(VertexId a, VertexId b)
{
    bits_[row(a) + (b >> 6)] |= 1ULL << (b & 63);
    bits_[row(b) + (a >> 6)] |= 1ULL << (a & 63);
}

void GroundTruthGraph::clear_edge(VertexId a, VertexId b)
{
    bits_[row(a) + (b >> 6)] &= ~(1ULL << (b & 63));
    bits_[row(b) + (a >> 6)] &= ~(1ULL << (a & 63));
}

void GroundTruthGraph::bump_degree(VertexId v, int delta)
{
    --degree_histogram_[degree_[v]];
    degree_[v] = static_cast<std::uint32_t>(int(degree_[v]) + delta);
    ++degree_histogram_[degree_[v]];
    if (delta > 0) {
        max_degree_ = std::max(max_degree_, degree_[v]);
    } else {
        while (max_degree_ > 0 && degree_histogram_[max_degree_] == 0)
            --max_degree_;
    }
}

void GroundTruthGraph::apply(const EdgeToken& t)
{
    if (t.u >= n_ || t.v >= n_)
        throw StrictTurnstileViolation("vertex id out of range: "
            + std::to_string(t.u) + "," + std::to_string(t.v));
    bool present = has_edge(t.u, t.v);
    if (t.op == EdgeOp::Insert) {
        if (present)
            throw StrictTurnstileViolation("duplicate insert of edge {"
                + std::to_string(t.u) + "," + std::to_string(t.v) + "}");
        set_edge(t.u, t.v);
        bump_degree(t.u, +1);
        bump_degree(t.v, +1);
        ++edge_count_;
    } else {
        if (!present)
            throw StrictTurnstileViolation("delete of absent edge {"
                + std::to_string(t.u) + "," + std::to_string(t.v) + "}");
        clear_edge(t.u, t.v);
        bump_degree(t.u, -1);
        bump_degree(t.v, -1);
        --edge_count_;
    }
}

bool GroundTruthGraph::apply_lenient(const EdgeToken& t)
{
    if (t.u >= n_ || t.v >= n_)
        return false;
    bool present = has_edge(t.u, t.v);
    if (t.op == EdgeOp::Insert ? present : !present)
        return false;
    apply(t);
    return true;
}

void GroundTruthGraph::clear()
{
    std::fill(bits_.begin(), bits_.end(), 0);
    std::fill(degree_.begin(), degree_.end(), 0);
    std::fill(degree_histogram_.begin(), degree_histogram_.end(), 0);
    degree_histogram_[0] = n_;
    max_degree_ = 0;
    edge_count_ = 0;
}

std::vector<std::pair<VertexId, VertexId>> GroundTruthGraph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < n_; ++v) {
        for_each_neighbor(v, [&](VertexId w) {
            if (v < w)
                out.emplace_back(v, w);
        });
    }
    return out;
}

} // namespace robustcolor

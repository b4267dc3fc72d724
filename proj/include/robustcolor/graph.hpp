#ifndef ROBUSTCOLOR_GRAPH_HPP
#define ROBUSTCOLOR_GRAPH_HPP

#include "robustcolor/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace robustcolor {

// Ground-truth simple graph over [n] backed by an adjacency bit-matrix.
// apply() enforces the strict-turnstile promises; apply_lenient() implements
// the window semantics sketches need inside the switching algorithm (a delete
// of an absent edge is a no-op).
class GroundTruthGraph {
public:
    explicit GroundTruthGraph(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint32_t degree(VertexId v) const { return degree_[v]; }
    std::uint32_t max_degree() const { return max_degree_; }

    bool has_edge(VertexId a, VertexId b) const
    {
        return (bits_[row(a) + (b >> 6)] >> (b & 63)) & 1ULL;
    }

    // Throws StrictTurnstileViolation on a duplicate insert or absent delete.
    void apply(const EdgeToken& t);

    // Returns false (and changes nothing) where apply() would throw.
    bool apply_lenient(const EdgeToken& t);

    void clear();

    template <typename F>
    void for_each_neighbor(VertexId v, F&& f) const
    {
        const std::uint64_t* r = bits_.data() + row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bitsw = r[w];
            while (bitsw) {
                unsigned bit = static_cast<unsigned>(__builtin_ctzll(bitsw));
                f(static_cast<VertexId>((w << 6) + bit));
                bitsw &= bitsw - 1;
            }
        }
    }

    // Sorted (u < v) edge list.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    std::size_t row(VertexId v) const { return std::size_t(v) * words_; }
    void set_edge(VertexId a, VertexId b);
    void clear_edge(VertexId a, VertexId b);
    void bump_degree(VertexId v, int delta);

    std::uint32_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint32_t> degree_histogram_;
    std::uint32_t max_degree_ = 0;
    std::uint64_t edge_count_ = 0;
};

} // namespace robustcolor

#endif

#ifndef ROBUSTCOLOR_CUBIC_COLORER_HPP
#define ROBUSTCOLOR_CUBIC_COLORER_HPP

#include "robustcolor/prf.hpp"
#include "robustcolor/sketch.hpp"
#include "robustcolor/types.hpp"

#include <cstdint>
#include <vector>

namespace robustcolor {

// Adversarially robust 3*Delta^3 colorer for insert-only streams with degree
// bound L. Every vertex color has the form (d, p): d is the vertex's degree
// at its last recoloring and p comes from its level-d list of 4*ceil(log2 n)
// colors drawn from [2*d^2]. An inserted edge is kept in the stored adjacency
// A iff the endpoint lists intersect at some level in [max degree, L]; the
// endpoint with the larger post-increment degree (ties to the smaller id) is
// then recolored with the first list color no stored neighbor holds.
class CubicColorer final : public SketchInterface {
public:
    CubicColorer(const StreamConfig& cfg, std::uint64_t seed);

    void process(const EdgeToken& t) override;
    Coloring query() override;
    std::size_t space_proxy() const override;
    void serialize(std::vector<std::uint8_t>& out) const override;
    bool insert_only() const override { return true; }

    std::uint32_t list_length() const { return list_length_; }
    std::uint64_t stored_edge_count() const { return stored_edges_; }
    std::uint32_t stored_degree(VertexId v) const
    {
        return static_cast<std::uint32_t>(stored_adj_[v].size());
    }
    std::uint32_t max_stored_degree() const;
    std::uint32_t degree(VertexId v) const { return degree_[v]; }
    std::uint32_t max_degree() const { return max_degree_; }

    // Slot s of vertex v's level-d list, in [1, 2*d^2]. Auditable from the PRF.
    std::int32_t list_entry(VertexId v, std::uint32_t level, std::uint32_t slot) const;

private:
    const std::vector<std::int32_t>& sorted_list(VertexId v, std::uint32_t level) const;
    bool lists_intersect(VertexId a, VertexId b, std::uint32_t level) const;

    std::uint32_t n_;
    std::uint32_t degree_bound_;
    std::uint32_t list_length_;
    Prf prf_;
    std::uint64_t seed_;

    std::vector<std::uint32_t> degree_;
    std::uint32_t max_degree_ = 0;
    Coloring colors_;                              // arity 2, default (0,0)
    std::vector<std::vector<VertexId>> stored_adj_; // the list A
    std::uint64_t stored_edges_ = 0;

    mutable std::vector<std::vector<std::int32_t>> sorted_cache_; // (v, level) -> sorted unique list
};

} // namespace robustcolor

#endif

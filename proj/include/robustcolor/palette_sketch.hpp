#ifndef ROBUSTCOLOR_PALETTE_SKETCH_HPP
#define ROBUSTCOLOR_PALETTE_SKETCH_HPP

#include "robustcolor/prf.hpp"
#include "robustcolor/sketch.hpp"
#include "robustcolor/types.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace robustcolor {

// Degree-leveled palette-sparsification sketch for oblivious streams, used as
// the blackbox inside the switching algorithms. Level j in [0, ceil(log2 L)]
// carries the palette [2^(j+1)]; each vertex holds a PRF-derived list of
// list_constant * ceil(log2 n) colors per level. An inserted edge is stored
// iff the endpoint lists intersect at some level between the current degree
// level and the top; a query list-colors the stored conflict graph at the
// level of the current max degree and emits colors (level, palette entry).
class PaletteSketch final : public SketchInterface {
public:
    PaletteSketch(const StreamConfig& cfg, std::uint64_t seed, std::uint32_t list_constant = 4);

    void process(const EdgeToken& t) override;
    Coloring query() override;
    std::size_t space_proxy() const override;
    void serialize(std::vector<std::uint8_t>& out) const override;

    std::uint64_t stored_edge_count() const { return stored_count_; }
    std::uint32_t list_length() const { return list_length_; }
    std::uint32_t level_count() const { return top_level_ + 1; }

    // Slot s of vertex v's level-j list, in [1, 2^(j+1)]. Exposed so tests can
    // audit the storage rule against the PRF.
    std::int32_t list_entry(VertexId v, std::uint32_t level, std::uint32_t slot) const;

private:
    bool lists_intersect(VertexId a, VertexId b, std::uint32_t level) const;
    std::uint64_t mask_of(VertexId v, std::uint32_t level) const;
    const std::vector<std::int32_t>& sorted_list(VertexId v, std::uint32_t level) const;
    std::vector<std::int32_t> deduped_list(VertexId v, std::uint32_t level) const;
    std::uint32_t current_max_degree() const;

    std::uint32_t n_;
    std::uint32_t degree_bound_;
    std::uint32_t top_level_;   // ceil(log2 L)
    std::uint32_t list_length_; // list_constant * ceil(log2 n)
    Prf prf_;
    std::uint64_t seed_;

    std::vector<std::uint32_t> degree_; // clamped at 0 under window-relative deletes
    std::vector<std::uint32_t> degree_histogram_;
    std::uint32_t max_degree_ = 0;

    std::unordered_map<std::uint64_t, std::uint32_t> stored_; // edge key -> live copies
    std::uint64_t stored_count_ = 0;

    // Lazily built per-(vertex, level) views of the PRF lists.
    mutable std::vector<std::uint64_t> mask_cache_;
    mutable std::vector<std::uint8_t> mask_ready_;
    mutable std::vector<std::vector<std::int32_t>> sorted_cache_;

    std::uint64_t query_counter_ = 0;
};

} // namespace robustcolor

#endif

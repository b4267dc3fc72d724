#ifndef ROBUSTCOLOR_EXACT_SKETCH_HPP
#define ROBUSTCOLOR_EXACT_SKETCH_HPP

#include "robustcolor/graph.hpp"
#include "robustcolor/sketch.hpp"
#include "robustcolor/types.hpp"

namespace robustcolor {

// Correctness-oracle baseline: buffers every live edge of its window and
// answers queries with a deterministic greedy coloring, so it is always
// proper and uses at most max_degree+1 colors.
class ExactBufferSketch final : public SketchInterface {
public:
    ExactBufferSketch(const StreamConfig& cfg, std::uint64_t seed);

    void process(const EdgeToken& t) override;
    Coloring query() override;
    std::size_t space_proxy() const override;
    void serialize(std::vector<std::uint8_t>& out) const override;

    const GroundTruthGraph& graph() const { return graph_; }

private:
    GroundTruthGraph graph_;
};

} // namespace robustcolor

#endif

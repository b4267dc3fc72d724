#ifndef ROBUSTCOLOR_SKETCH_HPP
#define ROBUSTCOLOR_SKETCH_HPP

#include "robustcolor/coloring.hpp"
#include "robustcolor/types.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace robustcolor {

// Contract every streaming colorer in this toolkit implements. process() must
// never depend on prior query outputs (obliviousness is the harness's job to
// exploit, not the sketch's to enforce). space_proxy() counts stored edges
// plus stored machine words of auxiliary state, excluding the PRF seed.
class SketchInterface {
public:
    virtual ~SketchInterface() = default;

    virtual void process(const EdgeToken& t) = 0;
    virtual Coloring query() = 0;
    virtual std::size_t space_proxy() const = 0;

    // Canonical state encoding; its byte length is the communication cost in
    // the subset-avoidance reduction.
    virtual void serialize(std::vector<std::uint8_t>& out) const = 0;

    virtual bool insert_only() const { return false; }
};

enum class SketchKind { Exact, Palette };

std::unique_ptr<SketchInterface> make_sketch(SketchKind kind, const StreamConfig& cfg,
    std::uint64_t seed);

inline const char* to_string(SketchKind k)
{
    return k == SketchKind::Exact ? "exact" : "palette";
}

// Little-endian byte helpers shared by the serializers.
inline void put_u64(std::vector<std::uint8_t>& out, std::uint64_t x)
{
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x)
{
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

inline void put_i32(std::vector<std::uint8_t>& out, std::int32_t x)
{
    put_u32(out, static_cast<std::uint32_t>(x));
}

} // namespace robustcolor

#endif

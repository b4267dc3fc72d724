#include "robustcolor/palette_sketch.hpp"

#include "robustcolor/list_coloring.hpp"

#include <algorithm>

namespace robustcolor {

namespace {
    constexpr std::uint64_t kListTag = 0x706c74ULL; // palette-list domain tag
}

PaletteSketch::PaletteSketch(const StreamConfig& cfg, std::uint64_t seed,
    std::uint32_t list_constant)
    : n_(cfg.n)
    , degree_bound_(cfg.degree_bound)
    , top_level_(ceil_log2(cfg.degree_bound))
    , list_length_(std::max<std::uint32_t>(1, list_constant * ceil_log2(cfg.n)))
    , prf_(seed)
    , seed_(seed)
    , degree_(cfg.n, 0)
    , degree_histogram_(std::size_t(cfg.n) + 1, 0)
    , mask_cache_(std::size_t(cfg.n) * (top_level_ + 1), 0)
    , mask_ready_(std::size_t(cfg.n) * (top_level_ + 1), 0)
    , sorted_cache_(std::size_t(cfg.n) * (top_level_ + 1))
{
    degree_histogram_[0] = n_;
}

std::int32_t PaletteSketch::list_entry(VertexId v, std::uint32_t level,
    std::uint32_t slot) const
{
    std::uint32_t palette = 2u << level; // 2^(level+1)
    return static_cast<std::int32_t>(
        prf_.uniform(kListTag + v, level, slot, palette) + 1);
}

std::uint64_t PaletteSketch::mask_of(VertexId v, std::uint32_t level) const
{
    std::size_t idx = std::size_t(v) * (top_level_ + 1) + level;
    if (!mask_ready_[idx]) {
        std::uint64_t m = 0;
        for (std::uint32_t s = 0; s < list_length_; ++s)
            m |= 1ULL << ((list_entry(v, level, s) - 1) & 63);
        mask_cache_[idx] = m;
        mask_ready_[idx] = 1;
    }
    return mask_cache_[idx];
}

const std::vector<std::int32_t>& PaletteSketch::sorted_list(VertexId v,
    std::uint32_t level) const
{
    std::size_t idx = std::size_t(v) * (top_level_ + 1) + level;
    auto& entry = sorted_cache_[idx];
    if (entry.empty()) {
        entry.reserve(list_length_);
        for (std::uint32_t s = 0; s < list_length_; ++s)
            entry.push_back(list_entry(v, level, s));
        std::sort(entry.begin(), entry.end());
        entry.erase(std::unique(entry.begin(), entry.end()), entry.end());
    }
    return entry;
}

std::vector<std::int32_t> PaletteSketch::deduped_list(VertexId v, std::uint32_t level) const
{
    // Keeps first-occurrence slot order so "first list entry" means slot 0.
    std::vector<std::int32_t> out;
    out.reserve(list_length_);
    for (std::uint32_t s = 0; s < list_length_; ++s) {
        std::int32_t c = list_entry(v, level, s);
        if (std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    }
    return out;
}

bool PaletteSketch::lists_intersect(VertexId a, VertexId b, std::uint32_t level) const
{
    if ((2u << level) <= 64)
        return (mask_of(a, level) & mask_of(b, level)) != 0;
    const auto& la = sorted_list(a, level);
    const auto& lb = sorted_list(b, level);
    std::size_t i = 0, j = 0;
    while (i < la.size() && j < lb.size()) {
        if (la[i] == lb[j])
            return true;
        if (la[i] < lb[j])
            ++i;
        else
            ++j;
    }
    return false;
}

void PaletteSketch::process(const EdgeToken& t)
{
    auto bump = [&](VertexId v, int delta) {
        if (delta < 0 && degree_[v] == 0)
            return; // window-relative delete; nothing tracked for v
        --degree_histogram_[degree_[v]];
        degree_[v] = static_cast<std::uint32_t>(int(degree_[v]) + delta);
        ++degree_histogram_[degree_[v]];
        if (delta > 0)
            max_degree_ = std::max(max_degree_, degree_[v]);
        else
            while (max_degree_ > 0 && degree_histogram_[max_degree_] == 0)
                --max_degree_;
    };

    if (t.op == EdgeOp::Insert) {
        bump(t.u, +1);
        bump(t.v, +1);
        std::uint32_t level = ceil_log2(std::max(degree_[t.u], degree_[t.v]));
        for (std::uint32_t j = level; j <= top_level_; ++j) {
            if (lists_intersect(t.u, t.v, j)) {
                ++stored_[t.key()];
                ++stored_count_;
                break;
            }
        }
    } else {
        bump(t.u, -1);
        bump(t.v, -1);
        auto it = stored_.find(t.key());
        if (it != stored_.end()) {
            if (--it->second == 0)
                stored_.erase(it);
            --stored_count_;
        }
    }
}

std::uint32_t PaletteSketch::current_max_degree() const
{
    return max_degree_;
}

Coloring PaletteSketch::query()
{
    std::uint32_t level = ceil_log2(std::max<std::uint32_t>(current_max_degree(), 1));
    if (level > top_level_)
        level = top_level_; // only reachable if the degree promise was broken

    ListColoringInstance inst;
    inst.adjacency.resize(n_);
    inst.lists.resize(n_);
    for (VertexId v = 0; v < n_; ++v)
        inst.lists[v] = deduped_list(v, level);

    std::vector<std::uint64_t> keys;
    keys.reserve(stored_.size());
    for (const auto& [key, count] : stored_)
        if (count > 0)
            keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t key : keys) {
        auto u = static_cast<VertexId>(key >> 32);
        auto v = static_cast<VertexId>(key & 0xffffffffu);
        inst.adjacency[u].push_back(v);
        inst.adjacency[v].push_back(u);
    }

    auto rng = make_engine(prf_.word(0x71757279ULL, query_counter_++));
    std::vector<std::int32_t> chosen = solve_list_coloring(inst, rng);

    Coloring out(n_, 2, 0);
    for (VertexId v = 0; v < n_; ++v) {
        out.tuple(v)[0] = static_cast<std::int32_t>(level);
        out.tuple(v)[1] = chosen[v];
    }
    return out;
}

std::size_t PaletteSketch::space_proxy() const
{
    return stored_count_ + n_ + 2;
}

void PaletteSketch::serialize(std::vector<std::uint8_t>& out) const
{
    put_u32(out, n_);
    put_u32(out, degree_bound_);
    for (VertexId v = 0; v < n_; ++v)
        put_u32(out, degree_[v]);
    std::vector<std::uint64_t> keys;
    keys.reserve(stored_.size());
    for (const auto& [key, count] : stored_)
        for (std::uint32_t c = 0; c < count; ++c)
            keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    put_u64(out, keys.size());
    for (std::uint64_t key : keys)
        put_u64(out, key);
}

} // namespace robustcolor

#ifndef ROBUSTCOLOR_TYPES_HPP
#define ROBUSTCOLOR_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace robustcolor {

using VertexId = std::uint32_t;

enum class EdgeOp : std::uint8_t { Insert, Delete };

struct SelfLoopError : std::runtime_error {
    SelfLoopError(VertexId v)
        : std::runtime_error("self-loop at vertex " + std::to_string(v))
    {
    }
};

struct StrictTurnstileViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RecolorFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ListColoringFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SketchesExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoveringNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RecoveryShortfall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AdversaryFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what)
        , line(line_no)
    {
    }
};

// One turnstile update. Endpoints are normalized to u < v on construction.
struct EdgeToken {
    EdgeOp op;
    VertexId u;
    VertexId v;

    EdgeToken(EdgeOp o, VertexId a, VertexId b)
        : op(o)
        , u(a < b ? a : b)
        , v(a < b ? b : a)
    {
        if (a == b)
            throw SelfLoopError(a);
    }

    static EdgeToken insert(VertexId a, VertexId b) { return {EdgeOp::Insert, a, b}; }
    static EdgeToken erase(VertexId a, VertexId b) { return {EdgeOp::Delete, a, b}; }

    std::uint64_t key() const { return (std::uint64_t(u) << 32) | v; }

    bool operator==(const EdgeToken&) const = default;
};

inline std::uint64_t edge_key(VertexId a, VertexId b)
{
    if (a > b)
        std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
}

// Global stream parameters shared by algorithms, adversaries and the runner.
struct StreamConfig {
    std::uint32_t n = 0;            // vertex count
    std::uint64_t m = 0;            // max stream length
    std::uint32_t degree_bound = 0; // promised bound L on the max degree
    std::uint32_t k = 2;            // color/space tradeoff exponent
    double delta = 0.01;            // target error
    std::uint64_t seed = 0;

    void validate() const
    {
        if (n < 2)
            throw ConfigError("n must be at least 2");
        if (degree_bound == 0 || degree_bound > n - 1)
            throw ConfigError("L must satisfy 0 < L <= n-1");
        if (k < 1)
            throw ConfigError("k must be >= 1");
        if (!(delta > 0.0) || !(delta < 1.0))
            throw ConfigError("delta must lie in (0,1)");
        if (m == 0)
            throw ConfigError("m must be positive");
    }
};

inline std::uint32_t ceil_log2(std::uint64_t x)
{
    std::uint32_t r = 0;
    std::uint64_t p = 1;
    while (p < x) {
        p <<= 1;
        ++r;
    }
    return r;
}

} // namespace robustcolor

#endif

#ifndef ROBUSTCOLOR_STREAM_IO_HPP
#define ROBUSTCOLOR_STREAM_IO_HPP

#include "robustcolor/coloring.hpp"
#include "robustcolor/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace robustcolor {

// Stream text format, one token per line:
//   i <u> <v>
//   d <u> <v>
// with 0-based decimal vertex ids; '#' starts a comment line.
struct ParsedStream {
    std::vector<EdgeToken> tokens;
    std::vector<std::size_t> lines; // 1-based source line per token
};

ParsedStream parse_stream(std::istream& in);
ParsedStream parse_stream_file(const std::string& path);
void write_stream(std::ostream& out, const std::vector<EdgeToken>& tokens);

// Colorings serialize one line per vertex: "<v> (<c1>,<c2>,...)".
void write_coloring(std::ostream& out, const Coloring& c);
std::string format_tuple(std::span<const std::int32_t> tuple);

// Replays the parsed stream against an initially empty n-vertex graph and
// reports the first strict-turnstile (or degree-bound, when L > 0) violation
// with its source line.
struct StreamCheck {
    bool ok = true;
    std::size_t line = 0;
    std::string message;
};
StreamCheck check_stream(const ParsedStream& stream, std::uint32_t n,
    std::uint32_t degree_bound = 0);

} // namespace robustcolor

#endif

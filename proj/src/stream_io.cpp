#include "robustcolor/stream_io.hpp"

#include "robustcolor/graph.hpp"

#include <fstream>
#include <sstream>

namespace robustcolor {

ParsedStream parse_stream(std::istream& in)
{
    ParsedStream out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line.substr(start));
        std::string op;
        long long a = -1, b = -1;
        ls >> op >> a >> b;
        if (ls.fail() || (op != "i" && op != "d"))
            throw ParseError(line_no, "expected 'i <u> <v>' or 'd <u> <v>', got '" + line + "'");
        std::string rest;
        if (ls >> rest && !rest.empty() && rest[0] != '#')
            throw ParseError(line_no, "trailing garbage '" + rest + "'");
        if (a < 0 || b < 0)
            throw ParseError(line_no, "vertex ids must be non-negative");
        if (a == b)
            throw ParseError(line_no, "self-loop " + std::to_string(a));
        out.tokens.emplace_back(op == "i" ? EdgeOp::Insert : EdgeOp::Delete,
            static_cast<VertexId>(a), static_cast<VertexId>(b));
        out.lines.push_back(line_no);
    }
    return out;
}

ParsedStream parse_stream_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open stream file: " + path);
    return parse_stream(in);
}

void write_stream(std::ostream& out, const std::vector<EdgeToken>& tokens)
{
    for (const EdgeToken& t : tokens)
        out << (t.op == EdgeOp::Insert ? 'i' : 'd') << ' ' << t.u << ' ' << t.v << '\n';
}

std::string format_tuple(std::span<const std::int32_t> tuple)
{
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(tuple[i]);
    }
    s += ')';
    return s;
}

void write_coloring(std::ostream& out, const Coloring& c)
{
    for (VertexId v = 0; v < c.size(); ++v)
        out << v << ' ' << format_tuple(c.tuple(v)) << '\n';
}

StreamCheck check_stream(const ParsedStream& stream, std::uint32_t n,
    std::uint32_t degree_bound)
{
    GroundTruthGraph g(n);
    for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
        const EdgeToken& t = stream.tokens[i];
        StreamCheck bad;
        bad.ok = false;
        bad.line = stream.lines[i];
        if (t.u >= n || t.v >= n) {
            bad.message = "vertex id out of range [0," + std::to_string(n) + ")";
            return bad;
        }
        try {
            g.apply(t);
        } catch (const StrictTurnstileViolation& e) {
            bad.message = e.what();
            return bad;
        }
        if (degree_bound > 0 && g.max_degree() > degree_bound) {
            bad.message = "degree bound L=" + std::to_string(degree_bound) + " exceeded";
            return bad;
        }
    }
    return {};
}

} // namespace robustcolor

#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

namespace detail {

struct Line {
    int number = 0;  // 1-based position in the input
    std::string_view text;
};

inline bool is_blank_or_comment(std::string_view s) {
    std::size_t i = s.find_first_not_of(" \t\r");
    return i == std::string_view::npos || s[i] == '#';
}

/// Significant lines only: '#' comments and blank lines are skipped.
inline std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++number;
        if (!is_blank_or_comment(line)) out.push_back({number, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

inline std::vector<int> parse_ints(const Line& line, int expected, const char* what) {
    std::vector<int> values;
    std::string_view s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        if (i >= s.size()) break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc{} ||
            (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
            throw ParseError("line " + std::to_string(line.number) + ": malformed " + what + " '" +
                             std::string(s) + "'");
        values.push_back(value);
        i = static_cast<std::size_t>(ptr - s.data());
    }
    if (static_cast<int>(values.size()) != expected)
        throw ParseError("line " + std::to_string(line.number) + ": expected " +
                         std::to_string(expected) + " integers in " + what + " '" + std::string(s) +
                         "'");
    return values;
}

}  // namespace detail

/// Parse the graph text format: optional '#' comment lines, a header
/// "n m", then exactly m edge lines "u v" with 0 <= u,v < n, u != v,
/// no duplicates.
inline Graph parse_graph(std::string_view text) {
    auto lines = detail::significant_lines(text);
    if (lines.empty()) throw ParseError("line 1: missing header 'n m'");

    auto header = detail::parse_ints(lines[0], 2, "header");
    const int n = header[0];
    const long long m = header[1];
    if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lines[0].number) + ": negative header value");
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw ParseError("unexpected end of input: header promises " + std::to_string(m) +
                         " edge lines, found " + std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError("line " + std::to_string(lines[static_cast<std::size_t>(m) + 1].number) +
                         ": trailing content after " + std::to_string(m) + " edge lines");

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n), false));
    for (long long i = 0; i < m; ++i) {
        const auto& line = lines[static_cast<std::size_t>(i) + 1];
        auto uv = detail::parse_ints(line, 2, "edge line");
        int u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(line.number) + ": vertex id out of range 0.." +
                             std::to_string(n - 1) + " in edge '" + std::string(line.text) + "'");
        if (u == v)
            throw ParseError("line " + std::to_string(line.number) + ": self-loop '" +
                             std::string(line.text) + "'");
        if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
            throw ParseError("line " + std::to_string(line.number) + ": duplicate edge '" +
                             std::string(line.text) + "'");
        seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

/// Serialize in the same format; edges sorted, one per line, trailing newline.
inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot open output file '" + path + "'");
    out << format_graph(g);
}

}  // namespace wlkit

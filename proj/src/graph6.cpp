#include "gwalk/graph.hpp"

#include <string>

namespace gwalk {

namespace {

// graph6 sizes: one byte for n <= 62, "126 b b b" for n <= 258047,
// "126 126 b*6" above that. Bytes carry value+63.
size_t decode_size(std::string_view text, long& n) {
    if (text.empty()) throw ParseError("graph6: empty input");
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == ':' || c0 == ';' || c0 == '&')
        throw ParseError("graph6: sparse6/digraph6 headers are not supported");
    auto byte = [&](size_t i) -> long {
        if (i >= text.size()) throw ParseError("graph6: truncated size field");
        long v = static_cast<unsigned char>(text[i]) - 63;
        if (v < 0 || v > 63) throw ParseError("graph6: byte out of range in size field");
        return v;
    };
    if (c0 != 126) {
        n = byte(0);
        return 1;
    }
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
        n = 0;
        for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        return 8;
    }
    n = 0;
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | byte(i);
    return 4;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    // Optional format header emitted by some tools.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    long n = 0;
    size_t pos = decode_size(text, n);
    if (n < 1) throw ParseError("graph6: vertex count must be at least 1");
    if (n > 100000) throw ParseError("graph6: graph too large");

    long bits_needed = n * (n - 1) / 2;
    long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < bytes_needed)
        throw ParseError("graph6: truncated bit stream");
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > bytes_needed)
        throw ParseError("graph6: trailing bytes after bit stream");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (long b = 0; b < bytes_needed; ++b) {
        long v = static_cast<unsigned char>(text[pos + b]) - 63;
        if (v < 0 || v > 63) throw ParseError("graph6: byte out of range in bit stream");
        for (int s = 5; s >= 0 && bit < bits_needed; --s, ++bit) {
            if ((v >> s) & 1) {
                // Column-major upper triangle: bit index runs over
                // (0,1), (0,2), (1,2), (0,3), ...
                long rem = bit, col = 1;
                while (rem >= col) {
                    rem -= col;
                    ++col;
                }
                edges.emplace_back(static_cast<int>(rem), static_cast<int>(col));
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges, "graph6:\"" + std::string(text) + "\"");
}

std::string to_graph6(const Graph& g) {
    long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::domain_error("to_graph6: graph too large");
    }
    long bits = n * (n - 1) / 2;
    long bytes = (bits + 5) / 6;
    std::string stream(bytes, 0);
    long bit = 0;
    for (long col = 1; col < n; ++col)
        for (long row = 0; row < col; ++row, ++bit)
            if (g.adjacent(static_cast<int>(row), static_cast<int>(col)))
                stream[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : stream) c = static_cast<char>(c + 63);
    out += stream;
    return out;
}

} // namespace gwalk

#include "alphadist/graph_io.hpp"

#include <cctype>
#include <sstream>

#include "alphadist/errors.hpp"

namespace alphadist {

namespace {

constexpr int k_bias = 63;
constexpr int k_max_n = 258047; // largest n expressible in the 18-bit header

int decode_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size())
        throw parse_error("graph6 line truncated", pos);
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw parse_error("graph6 byte out of range 63..126", pos);
    return c - k_bias;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw parse_error("empty graph6 line", 0);

    std::size_t pos = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw parse_error("graph6 order >= 258048 not supported", 1);
        n = 0;
        for (pos = 1; pos <= 3; ++pos)
            n = (n << 6) | decode_byte(line, pos);
        if (n < 63)
            throw parse_error("non-canonical long-form graph6 header", 1);
    } else {
        n = decode_byte(line, 0);
        pos = 1;
        if (n < 1)
            throw parse_error("graph6 order must be >= 1", 0);
    }
    if (n > k_max_n)
        throw parse_error("graph6 order out of range", 1);

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != pos + nbytes)
        throw parse_error("graph6 body length mismatch: expected " +
                              std::to_string(nbytes) + " adjacency bytes",
                          line.size() < pos + nbytes ? line.size() : pos + nbytes);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t byte_pos = pos + static_cast<std::size_t>(bit / 6);
            const int value = decode_byte(line, byte_pos);
            if ((value >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    if (nbits % 6 != 0) {
        const int last = decode_byte(line, line.size() - 1);
        const int pad_mask = (1 << (6 - nbits % 6)) - 1;
        if (last & pad_mask)
            throw parse_error("nonzero padding bits in graph6 body", line.size() - 1);
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > k_max_n)
        throw std::invalid_argument("graph too large for the supported graph6 headers");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(k_bias + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(k_bias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(k_bias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(k_bias + (n & 63)));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(k_bias + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(k_bias + (chunk << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    const auto next_int = [&]() -> long long {
        skip_ws();
        if (pos >= text.size())
            throw parse_error("unexpected end of edge list", pos);
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        const std::string token(text.substr(start, pos - start));
        try {
            std::size_t used = 0;
            const long long value = std::stoll(token, &used);
            if (used != token.size() || value < 0)
                throw std::invalid_argument(token);
            return value;
        } catch (const std::exception&) {
            throw parse_error("expected a nonnegative integer, got \"" + token + "\"", start);
        }
    };

    const std::size_t n_pos = pos;
    const long long n = next_int();
    if (n < 1 || n > k_max_n)
        throw parse_error("vertex count out of range", n_pos);
    Graph g(static_cast<int>(n));
    for (;;) {
        skip_ws();
        if (pos >= text.size())
            break;
        const std::size_t at = pos;
        const long long u = next_int();
        const long long v = next_int();
        if (u >= n || v >= n)
            throw parse_error("vertex index out of range", at);
        if (u == v)
            throw parse_error("self-loop rejected", at);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

TextFormat detect_format(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c))
            continue;
        return c >= 63 ? TextFormat::graph6 : TextFormat::edge_list;
    }
    throw parse_error("empty input", 0);
}

std::vector<Graph> parse_graph_text(std::string_view text, TextFormat format) {
    std::vector<Graph> graphs;
    if (format == TextFormat::edge_list) {
        graphs.push_back(parse_edge_list(text));
        return graphs;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.remove_suffix(1);
        if (!line.empty())
            graphs.push_back(parse_graph6(line));
        if (end == text.size())
            break;
        start = end + 1;
    }
    if (graphs.empty())
        throw parse_error("no graph6 lines in input", 0);
    return graphs;
}

std::vector<Graph> parse_graph_text(std::string_view text) {
    return parse_graph_text(text, detect_format(text));
}

} // namespace alphadist

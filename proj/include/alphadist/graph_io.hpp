#ifndef ALPHADIST_GRAPH_IO_HPP
#define ALPHADIST_GRAPH_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "alphadist/graph.hpp"

namespace alphadist {

// graph6 codec, bit-exact per the format specification:
//   header: byte 63+n for n <= 62, or '~' followed by three bytes carrying an
//   18-bit n (63 <= n <= 258047), each 6-bit group +63;
//   body: ceil(n(n-1)/2 / 6) bytes, upper-triangle adjacency bits in
//   column-major order x(0,1), x(0,2), x(1,2), x(0,3), ..., big-endian within
//   each 6-bit group, +63 per byte, padding bits zero.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge-list text: first token is n, then one "u v" pair per line.
// Rejects self-loops, out-of-range indices, and non-integer tokens.
Graph parse_edge_list(std::string_view text);

enum class TextFormat { graph6, edge_list };

// graph6 lines start with a byte >= 63 ('?'..'~'); edge lists start with a
// decimal digit. Throws parse_error on empty input.
TextFormat detect_format(std::string_view text);

// Parses a whole input: one graph per line for graph6, a single graph for
// edge-list text. `format_hint < 0` means auto-detect.
std::vector<Graph> parse_graph_text(std::string_view text, TextFormat format);
std::vector<Graph> parse_graph_text(std::string_view text);

} // namespace alphadist

#endif

#ifndef ROOTLINE_GRAPH_IO_HPP
#define ROOTLINE_GRAPH_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rootline/graph.hpp"

namespace rootline {

/// Malformed input. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

std::string emit_graph6(const SimpleGraph& g);
/// Parses one graph6 string; a leading ">>graph6<<" header is accepted.
SimpleGraph parse_graph6(std::string_view text, int line = 1);
/// One graph per line; blank lines and lines starting with '#' are skipped.
std::vector<SimpleGraph> parse_graph6_stream(std::istream& in);

/// Edge list: one "u v" or "u v k" per line, '#' starts a comment. A line
/// holding a single integer fixes the vertex count (needed for isolated
/// vertices); otherwise it is one more than the largest label.
MultiGraph parse_edgelist(std::string_view text);
/// Rejects multiplicities above one.
SimpleGraph parse_simple_edgelist(std::string_view text);
std::string emit_edgelist(const SimpleGraph& g);
std::string emit_edgelist(const MultiGraph& g);

std::string emit_dot(const SimpleGraph& g, const std::string& name = "G");
std::string emit_dot(const MultiGraph& g, const std::string& name = "G");

}  // namespace rootline

#endif  // ROOTLINE_GRAPH_IO_HPP

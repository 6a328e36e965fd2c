#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sqroot/graph.hpp"
#include "sqroot/reduction.hpp"
#include "sqroot/tree_decomposition.hpp"

namespace sqroot {

/// Malformed input, with 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Instance files:
///
///   c free text
///   p sqroot <n> <m>
///   e <u> <v>        exactly m of these, 1-based, no duplicates
///   r <u> <v>        forced root edge (must also be an e line)
///   b <u> <v>        forbidden root edge (must also be an e line)
///
/// Label lines may come before or after the e line they refer to.
LabeledInstance parse_instance(std::string_view text);
LabeledInstance read_instance_file(const std::string& path);

/// Header, then sorted e lines, then sorted r and b lines.
std::string format_instance(const LabeledInstance& inst);
std::string format_graph(const Graph& g);

/// Trace files:
///
///   t sqroot-trace <n> <events>
///   s <u> <v> <non-twin|flipped|default> <x> <y> <private> <forced> <forbidden>
///
/// x and y are comma-separated 1-based vertex lists; the last three fields
/// are comma-separated edges written u-v. An empty list is written "-".
std::string format_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text);

/// Tree decomposition in the PACE .td layout (1-based bags and vertices).
std::string format_decomposition(const TreeDecomposition& td, std::size_t vertex_count);

/// Graphviz undirected graph; labeled edges are drawn bold (forced) or dashed
/// (forbidden).
std::string format_dot(const LabeledInstance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace sqroot

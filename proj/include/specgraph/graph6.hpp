#ifndef SPECGRAPH_GRAPH6_HPP
#define SPECGRAPH_GRAPH6_HPP

#include <stdexcept>
#include <string>

#include "specgraph/graph.hpp"

namespace specgraph {

// Malformed graph6 input; `offset` is the byte position of the defect.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

// Header-less graph6, one graph per line (standard format: n encoded as
// 63+n for n <= 62, '~'-prefixed otherwise; upper-triangle bits
// column-major, 6-bit chunks offset by 63).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

}  // namespace specgraph

#endif

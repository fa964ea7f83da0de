#ifndef GASKET_GASKET_GRAPH_HPP
#define GASKET_GASKET_GRAPH_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gasket/laurent_polynomial.hpp"

namespace gasket {

// Level-n Sierpinski gasket graph. Built by joining three copies of the
// previous level at their exterior corners.
//
// Vertex indexing is deterministic and stable across runs:
//   0,1,2  exterior corners of the level-n graph,
//   3,4,5  the three junction vertices shared between sub-copies
//          (3 = copies 0&1, 4 = copies 0&2, 5 = copies 1&2),
//   then the non-corner vertices of copy 0, copy 1, copy 2, each block in
//   the sub-copy's own order.
struct GasketGraph {
    unsigned level = 0;
    std::uint32_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // a < b
    std::array<std::uint32_t, 3> corners{0, 1, 2};
};

// Guard against accidental explosion; enumeration only ever needs n <= 2.
inline constexpr unsigned kMaxGasketLevel = 6;
inline constexpr std::uint32_t kMaxEnumerationVertices = 25;

GasketGraph build_gasket(unsigned n, unsigned max_level = kMaxGasketLevel);

// Total Gibbs weight over all 2^V spin configurations, as an exact Laurent
// polynomial in y = e^(J/T): sum over configurations of y^(edge spin sum).
LaurentPolynomial enumerate_partition_function(const GasketGraph& g);

// Gibbs-weight sum over configurations with the three exterior corners
// pinned to the given signs (+1/-1 entries).
LaurentPolynomial enumerate_with_corners(const GasketGraph& g, int s0, int s1, int s2);

// (U, V): corner signs (+,+,+) and (+,+,-) respectively. The full partition
// function satisfies Z = 2U + 6V by the spin-flip and reflection symmetries.
std::pair<LaurentPolynomial, LaurentPolynomial> enumerate_boundary_sums(const GasketGraph& g);

}  // namespace gasket

#endif

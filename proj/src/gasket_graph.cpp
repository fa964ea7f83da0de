#include "gasket/gasket_graph.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "gasket/errors.hpp"

namespace gasket {

GasketGraph build_gasket(unsigned n, unsigned max_level) {
    if (n > max_level)
        throw guard_error("build_gasket: level " + std::to_string(n) +
                          " exceeds guard " + std::to_string(max_level));
    if (n == 0) {
        GasketGraph g;
        g.level = 0;
        g.vertex_count = 3;
        g.edges = {{0, 1}, {0, 2}, {1, 2}};
        return g;
    }
    const GasketGraph sub = build_gasket(n - 1, max_level);
    GasketGraph g;
    g.level = n;
    // Corner images per copy: copy t occupies big-triangle slot t, its other
    // two corners land on the junctions adjacent to that slot.
    const std::uint32_t corner_map[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    std::uint32_t next = 6;
    for (unsigned t = 0; t < 3; ++t) {
        std::vector<std::uint32_t> remap(sub.vertex_count);
        for (std::uint32_t v = 0; v < sub.vertex_count; ++v) {
            remap[v] = v < 3 ? corner_map[t][v] : next++;
        }
        for (const auto& [a, b] : sub.edges) {
            const std::uint32_t ea = remap[a];
            const std::uint32_t eb = remap[b];
            g.edges.emplace_back(std::min(ea, eb), std::max(ea, eb));
        }
    }
    g.vertex_count = next;
    return g;
}

namespace {

// Shared Gray-code sweep: enumerates all configurations of the `free_` list
// of vertices with the rest pinned, maintaining the edge spin sum
// incrementally (one flip per step touches only the flipped vertex's edges).
LaurentPolynomial enumerate_impl(const GasketGraph& g,
                                 const std::vector<std::uint32_t>& free_vertices,
                                 std::vector<int> spin) {
    const long edge_count = static_cast<long>(g.edges.size());
    std::vector<std::vector<std::uint32_t>> adj(g.vertex_count);
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    long sum = 0;
    for (const auto& [a, b] : g.edges) sum += spin[a] * spin[b];

    // counts[sum + E] = number of configurations with that edge spin sum
    std::vector<std::int64_t> counts(2 * g.edges.size() + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << free_vertices.size();
    for (std::uint64_t s = 0;;) {
        ++counts[static_cast<std::size_t>(sum + edge_count)];
        if (++s == total) break;
        const std::uint32_t v = free_vertices[std::countr_zero(s)];
        long local = 0;
        for (std::uint32_t w : adj[v]) local += spin[w];
        sum -= 2 * spin[v] * local;
        spin[v] = -spin[v];
    }

    std::vector<BigInt> coeffs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) coeffs[k] = counts[k];
    return LaurentPolynomial(IntPolynomial(std::move(coeffs)), -edge_count);
}

void check_size(const GasketGraph& g) {
    if (g.vertex_count > kMaxEnumerationVertices)
        throw guard_error("enumeration: " + std::to_string(g.vertex_count) +
                          " vertices exceed guard " +
                          std::to_string(kMaxEnumerationVertices));
}

}  // namespace

LaurentPolynomial enumerate_partition_function(const GasketGraph& g) {
    check_size(g);
    std::vector<std::uint32_t> free_vertices(g.vertex_count);
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) free_vertices[v] = v;
    return enumerate_impl(g, free_vertices, std::vector<int>(g.vertex_count, 1));
}

LaurentPolynomial enumerate_with_corners(const GasketGraph& g, int s0, int s1, int s2) {
    check_size(g);
    std::vector<int> spin(g.vertex_count, 1);
    spin[g.corners[0]] = s0;
    spin[g.corners[1]] = s1;
    spin[g.corners[2]] = s2;
    std::vector<std::uint32_t> free_vertices;
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
        if (v != g.corners[0] && v != g.corners[1] && v != g.corners[2])
            free_vertices.push_back(v);
    }
    return enumerate_impl(g, free_vertices, std::move(spin));
}

std::pair<LaurentPolynomial, LaurentPolynomial> enumerate_boundary_sums(const GasketGraph& g) {
    return {enumerate_with_corners(g, 1, 1, 1), enumerate_with_corners(g, 1, 1, -1)};
}

}  // namespace gasket

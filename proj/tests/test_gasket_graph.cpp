#include <doctest.h>

#include <vector>

#include "gasket/errors.hpp"
#include "gasket/gasket_graph.hpp"
#include "gasket/recursion.hpp"

using gasket::BigInt;
using gasket::build_gasket;
using gasket::GasketGraph;
using gasket::LaurentPolynomial;

namespace {

std::vector<unsigned> degrees(const GasketGraph& g) {
    std::vector<unsigned> deg(g.vertex_count, 0);
    for (const auto& [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

}  // namespace

TEST_CASE("vertex and edge counts match the closed forms") {
    const std::vector<std::uint32_t> expect_v = {3, 6, 15, 42, 123};
    for (unsigned n = 0; n <= 4; ++n) {
        const GasketGraph g = build_gasket(n);
        CHECK(g.vertex_count == expect_v[n]);                         // (3^(n+1)+3)/2
        CHECK(g.edges.size() == static_cast<std::size_t>(2) * expect_v[n] - 3);  // 3^(n+1)
    }
}

TEST_CASE("edge count is 3^(n+1)") {
    std::size_t expect = 3;
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(build_gasket(n).edges.size() == expect);
        expect *= 3;
    }
}

TEST_CASE("corner degrees are 2, interior degrees are 4") {
    for (unsigned n = 0; n <= 4; ++n) {
        const GasketGraph g = build_gasket(n);
        const auto deg = degrees(g);
        for (unsigned c = 0; c < 3; ++c) CHECK(deg[g.corners[c]] == 2);
        for (std::uint32_t v = 3; v < g.vertex_count; ++v) CHECK(deg[v] == 4);
    }
}

TEST_CASE("level guard") {
    CHECK_THROWS_AS(build_gasket(7), gasket::guard_error);
    CHECK_THROWS_AS(gasket::enumerate_partition_function(build_gasket(3)),
                    gasket::guard_error);
}

TEST_CASE("triangle partition function") {
    const LaurentPolynomial z0 = gasket::enumerate_partition_function(build_gasket(0));
    CHECK(z0.coeff(3) == 2);
    CHECK(z0.coeff(-1) == 6);
    CHECK(z0.min_power() == -1);
    CHECK(z0.max_power() == 3);
}

TEST_CASE("level-1 boundary sums match the recursion seed values") {
    const auto [u, v] = gasket::enumerate_boundary_sums(build_gasket(1));
    // U_1 = y^9 + 3y + 4y^-3, V_1 = y^5 + 4y + 3y^-3
    CHECK(u.coeff(9) == 1);
    CHECK(u.coeff(1) == 3);
    CHECK(u.coeff(-3) == 4);
    CHECK(v.coeff(5) == 1);
    CHECK(v.coeff(1) == 4);
    CHECK(v.coeff(-3) == 3);
    CHECK(BigInt(2) * u + BigInt(6) * v ==
          gasket::enumerate_partition_function(build_gasket(1)));
}

TEST_CASE("weights at y = 1 count configurations") {
    for (unsigned n = 0; n <= 2; ++n) {
        const GasketGraph g = build_gasket(n);
        const LaurentPolynomial z = gasket::enumerate_partition_function(g);
        CHECK(z.eval(gasket::Rational(1)) == gasket::pow2(g.vertex_count));
    }
}

TEST_CASE("global spin flip makes every coefficient even") {
    for (unsigned n = 0; n <= 2; ++n) {
        const LaurentPolynomial z = gasket::enumerate_partition_function(build_gasket(n));
        for (long p = z.min_power(); p <= z.max_power(); ++p) {
            CHECK(z.coeff(p) % 2 == 0);
        }
    }
}

TEST_CASE("the three mixed corner patterns agree by reflection symmetry") {
    for (unsigned n = 0; n <= 2; ++n) {
        const GasketGraph g = build_gasket(n);
        const LaurentPolynomial a = gasket::enumerate_with_corners(g, 1, 1, -1);
        const LaurentPolynomial b = gasket::enumerate_with_corners(g, 1, -1, 1);
        const LaurentPolynomial c = gasket::enumerate_with_corners(g, -1, 1, 1);
        CHECK(a == b);
        CHECK(b == c);
        // and the all-minus pattern mirrors all-plus
        CHECK(gasket::enumerate_with_corners(g, -1, -1, -1) ==
              gasket::enumerate_with_corners(g, 1, 1, 1));
    }
}

TEST_CASE("enumeration equals the algebraic recursion through level 2") {
    for (unsigned n = 0; n <= 2; ++n) {
        CHECK(gasket::enumerate_partition_function(build_gasket(n)) ==
              gasket::compute_Z(n));
    }
}

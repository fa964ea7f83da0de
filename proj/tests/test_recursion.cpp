#include <doctest.h>

#include <random>

#include "gasket/errors.hpp"
#include "gasket/recursion.hpp"

using gasket::BigInt;
using gasket::compute_M;
using gasket::compute_T;
using gasket::compute_UV;
using gasket::compute_Z;
using gasket::IntPolynomial;
using gasket::LaurentPolynomial;
using gasket::Rational;
using gasket::UVPair;

TEST_CASE("one boundary-pair step from the seed") {
    const UVPair p1 = gasket::uv_step(gasket::uv_initial());
    CHECK(p1.level == 1);
    CHECK(p1.U == LaurentPolynomial(IntPolynomial{4, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 1}, -3));
    CHECK(p1.V == LaurentPolynomial(IntPolynomial{3, 0, 0, 0, 4, 0, 0, 0, 1}, -3));
    // at y = 1 the step sends (1, 1) to (8, 8)
    CHECK(p1.U.eval(Rational(1)) == 8);
    CHECK(p1.V.eval(Rational(1)) == 8);
}

TEST_CASE("level-2 boundary pair, frozen") {
    const UVPair p2 = compute_UV(2);
    const std::vector<std::pair<long, long>> u2 = {{-9, 280}, {-5, 945}, {-1, 1272},
                                                   {3, 940},  {7, 456},  {11, 150},
                                                   {15, 40},  {19, 12},  {27, 1}};
    const std::vector<std::pair<long, long>> v2 = {{-9, 273}, {-5, 952}, {-1, 1292},
                                                   {3, 920},  {7, 438},  {11, 168},
                                                   {15, 44},  {19, 8},   {23, 1}};
    for (const auto& [pow, c] : u2) CHECK(p2.U.coeff(pow) == c);
    for (const auto& [pow, c] : v2) CHECK(p2.V.coeff(pow) == c);
    CHECK(p2.U.coeff(23) == 0);
}

TEST_CASE("partition functions match the frozen expansions") {
    const LaurentPolynomial z0 = compute_Z(0);
    CHECK(z0 == BigInt(2) * LaurentPolynomial::monomial(1, 3) +
                    BigInt(6) * LaurentPolynomial::monomial(1, -1));

    // 2(y^8+2y^4+13)(y^4+1)/y^3 expanded
    const LaurentPolynomial z1 = compute_Z(1);
    CHECK(z1.coeff(9) == 2);
    CHECK(z1.coeff(5) == 6);
    CHECK(z1.coeff(1) == 30);
    CHECK(z1.coeff(-3) == 26);
    CHECK(z1.power_span() == 12);

    const LaurentPolynomial z2 = compute_Z(2);
    const std::vector<long> z2_coeffs = {2198, 0, 0, 0, 7602, 0, 0, 0, 10296, 0, 0, 0,
                                         7400, 0, 0, 0, 3540, 0, 0, 0, 1308, 0, 0, 0,
                                         344,  0, 0, 0, 72,   0, 0, 0, 6,    0, 0, 0, 2};
    CHECK(z2.min_power() == -9);
    for (std::size_t k = 0; k < z2_coeffs.size(); ++k) {
        CHECK(z2.coeff(-9 + static_cast<long>(k)) == z2_coeffs[k]);
    }
}

TEST_CASE("power span of Z_n is 4*3^n") {
    long expect = 4;
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(compute_Z(n).power_span() == expect);
        expect *= 3;
    }
}

TEST_CASE("all partition-function coefficients are positive") {
    for (unsigned n = 0; n <= 4; ++n) {
        const LaurentPolynomial z = compute_Z(n);
        for (long p = z.min_power(); p <= z.max_power(); p += 4) {
            CHECK(z.coeff(p) > 0);
        }
    }
}

TEST_CASE("numerator polynomials M_n") {
    CHECK(compute_M(0).M == IntPolynomial{3, 1});
    CHECK(compute_M(1).M == IntPolynomial{13, 15, 3, 1});
    CHECK(compute_M(2).M ==
          IntPolynomial{1099, 3801, 5148, 3700, 1770, 654, 172, 36, 3, 1});

    // M_1(2x+1) = 8(x^3+3x^2+6x+4)
    const IntPolynomial shifted = compute_M(1).M.compose(IntPolynomial{1, 2});
    CHECK(shifted == BigInt(8) * IntPolynomial{4, 6, 3, 1});
}

TEST_CASE("recursion identity reproduces each level") {
    IntPolynomial prev = compute_M(0).M;
    for (unsigned n = 1; n <= 4; ++n) {
        const IntPolynomial cur = compute_M(n).M;
        CHECK(gasket::verify_mn_recursion(prev, cur, n));
        prev = cur;
    }
}

TEST_CASE("T_n by recursion and frozen values") {
    CHECK(compute_T(0).T == IntPolynomial{1, 1});
    CHECK(compute_T(1).T == IntPolynomial{2, 3, 3, 1});  // (z+2)(z^2+z+1)
    CHECK(compute_T(2).T == IntPolynomial{16, 48, 96, 148, 171, 144, 87, 36, 9, 1});
}

TEST_CASE("T_n factor list multiplies back exactly") {
    for (unsigned n = 0; n <= 4; ++n) {
        const auto rec = compute_T(n);  // compute_T already cross-checks
        CHECK(rec.factors.size() == static_cast<std::size_t>(n) + 1);
        IntPolynomial product(BigInt(1));
        BigInt total_degree = 0;
        for (const auto& [base, mult] : rec.factors) {
            product = product * base.pow(mult);
            total_degree += BigInt(base.degree()) * BigInt(mult);
        }
        CHECK(product == rec.T);
        CHECK(total_degree == gasket::pow3(n));
        CHECK(rec.T.leading_coeff() == 1);
    }
}

TEST_CASE("conjugacy identity at small levels") {
    for (unsigned n = 0; n <= 3; ++n) {
        const auto rep = gasket::verify_conjugacy_identity(n);
        CHECK(rep.ok);
    }
    // and it reports the first differing power when broken
    auto m = compute_M(1);
    m.M = m.M + IntPolynomial{0, 0, 0, 1};
    const auto rep = gasket::verify_conjugacy_identity(m, compute_T(1));
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_mismatch_power == 3);
}

TEST_CASE("ratio of the tilde pair composes with the renormalization map") {
    // U~_n/V~_n = (U~_(n-1)/V~_(n-1)) o f at exact rational points.
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> num(1, 40);
    std::uniform_int_distribution<long> den(1, 9);
    for (unsigned n = 1; n <= 4; ++n) {
        const UVPair prev = compute_UV(n - 1);
        const UVPair cur = compute_UV(n);
        const IntPolynomial pu = gasket::substitute_quartic(prev.U, n - 1);
        const IntPolynomial pv = gasket::substitute_quartic(prev.V, n - 1);
        const IntPolynomial cu = gasket::substitute_quartic(cur.U, n);
        const IntPolynomial cv = gasket::substitute_quartic(cur.V, n);
        for (int i = 0; i < 20; ++i) {
            const Rational x = gasket::make_rational(num(rng), den(rng));
            const Rational fx((x * x - x + 4) / (x + 3));
            CHECK(Rational(cu.eval(x) * pv.eval(fx)) == Rational(cv.eval(x) * pu.eval(fx)));
        }
    }
}

TEST_CASE("level guard and memory warning") {
    gasket::EngineLimits limits;
    limits.max_level = 3;
    CHECK_THROWS_AS(compute_Z(4, limits), gasket::guard_error);
    CHECK_NOTHROW(compute_Z(3, limits));
}

TEST_CASE("quartic substitution rejects foreign powers") {
    // A Laurent series with an odd power cannot be written in y^4.
    const LaurentPolynomial bad(IntPolynomial{1, 1}, 0);
    CHECK_THROWS_AS(gasket::substitute_quartic(bad, 0), gasket::numeric_error);
}

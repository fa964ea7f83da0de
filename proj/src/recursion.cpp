#include "gasket/recursion.hpp"

#include <iostream>
#include <string>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

void check_level(unsigned n, const EngineLimits& limits, const char* who) {
    if (n > limits.max_level)
        throw guard_error(std::string(who) + ": level " + std::to_string(n) +
                          " exceeds guard " + std::to_string(limits.max_level));
    if (n > limits.warn_level)
        std::cerr << who << ": level " << n
                  << " builds polynomials of degree 3^n with very large coefficients;"
                     " expect heavy memory use\n";
}

unsigned long pow3_ul(unsigned n) {
    unsigned long p = 1;
    for (unsigned i = 0; i < n; ++i) p *= 3UL;
    return p;
}

}  // namespace

UVPair uv_initial() {
    return {LaurentPolynomial::monomial(1, 3), LaurentPolynomial::monomial(1, -1), 0};
}

UVPair uv_step(const UVPair& pair) {
    const LaurentPolynomial& u = pair.U;
    const LaurentPolynomial& v = pair.V;
    const LaurentPolynomial u2 = u * u;
    const LaurentPolynomial v2 = v * v;
    const LaurentPolynomial uv2 = u * v2;
    const LaurentPolynomial v3 = v * v2;
    UVPair next;
    next.U = u2 * u + BigInt(3) * uv2 + BigInt(4) * v3;
    next.V = u2 * v + BigInt(4) * uv2 + BigInt(3) * v3;
    next.level = pair.level + 1;
    return next;
}

UVPair compute_UV(unsigned n, const EngineLimits& limits) {
    check_level(n, limits, "compute_UV");
    UVPair p = uv_initial();
    for (unsigned k = 0; k < n; ++k) p = uv_step(p);
    return p;
}

LaurentPolynomial compute_Z(unsigned n, const EngineLimits& limits) {
    const UVPair p = compute_UV(n, limits);
    return BigInt(2) * p.U + BigInt(6) * p.V;
}

IntPolynomial substitute_quartic(const LaurentPolynomial& p, unsigned level) {
    return p.shifted(static_cast<long>(pow3_ul(level))).compress_power(4);
}

MnRecord compute_M(unsigned n, const EngineLimits& limits) {
    const UVPair p = compute_UV(n, limits);
    const IntPolynomial u_tilde = substitute_quartic(p.U, n);
    const IntPolynomial v_tilde = substitute_quartic(p.V, n);
    return {n, u_tilde + BigInt(3) * v_tilde};
}

IntPolynomial g_iterate(unsigned j) {
    const IntPolynomial g{0, 1, 1};  // z^2 + z
    IntPolynomial acc{0, 1};         // identity
    for (unsigned k = 0; k < j; ++k) acc = acc.compose(g);
    return acc;
}

TnRecord compute_T(unsigned n, const EngineLimits& limits) {
    check_level(n, limits, "compute_T");
    const IntPolynomial g{0, 1, 1};
    TnRecord rec;
    rec.level = n;
    rec.T = IntPolynomial{1, 1};  // z + 1
    for (unsigned k = 1; k <= n; ++k) {
        rec.T = IntPolynomial{2, 1}.pow(pow3_ul(k - 1)) * rec.T.compose(g);
    }
    rec.factors.emplace_back(g_iterate(n) + IntPolynomial(BigInt(1)), 1UL);
    for (unsigned j = 0; j < n; ++j) {
        rec.factors.emplace_back(g_iterate(j) + IntPolynomial(BigInt(2)),
                                 pow3_ul(n - j - 1));
    }
    IntPolynomial product(BigInt(1));
    for (const auto& [base, mult] : rec.factors) product = product * base.pow(mult);
    if (!(product == rec.T))
        throw numeric_error("compute_T: factored product disagrees with recursion at level " +
                            std::to_string(n));
    return rec;
}

bool verify_mn_recursion(const IntPolynomial& m_prev, const IntPolynomial& m_cur,
                         unsigned n) {
    if (n == 0) return false;
    const IntPolynomial num{4, -1, 1};  // x^2 - x + 4
    const IntPolynomial den{3, 1};      // x + 3
    const IntPolynomial rhs =
        m_prev.compose_rational_cleared(num, den) * IntPolynomial{1, 1}.pow(pow3_ul(n - 1));
    return rhs == m_cur;
}

ConjugacyReport verify_conjugacy_identity(const MnRecord& m, const TnRecord& t) {
    const unsigned n = m.level;
    const unsigned long deg = pow3_ul(n);
    const IntPolynomial lhs = pow_ui(4, deg) * m.M;
    // (x-1)^(3^n) * T_n(4/(x-1)) via denominator-cleared composition.
    const IntPolynomial cleared =
        t.T.compose_rational_cleared(IntPolynomial(BigInt(4)), IntPolynomial{-1, 1});
    const IntPolynomial rhs = pow2((3 * deg + 1) / 2) * cleared;

    ConjugacyReport rep;
    rep.level = n;
    rep.ok = lhs == rhs;
    if (!rep.ok) {
        const IntPolynomial diff = lhs - rhs;
        for (long k = 0; k <= diff.degree(); ++k) {
            if (diff.coeff(static_cast<std::size_t>(k)) != 0) {
                rep.first_mismatch_power = k;
                break;
            }
        }
        rep.detail = "first differing coefficient at power " +
                     std::to_string(rep.first_mismatch_power);
    }
    return rep;
}

ConjugacyReport verify_conjugacy_identity(unsigned n, const EngineLimits& limits) {
    return verify_conjugacy_identity(compute_M(n, limits), compute_T(n, limits));
}

}  // namespace gasket

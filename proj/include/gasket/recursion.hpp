#ifndef GASKET_RECURSION_HPP
#define GASKET_RECURSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "gasket/laurent_polynomial.hpp"

namespace gasket {

struct EngineLimits {
    // Exact polynomial levels: degree 3^n coefficients of thousands of
    // digits. Anything past the default gets a memory warning on stderr.
    unsigned max_level = 8;
    unsigned warn_level = 8;
};

// Boundary-condition pair of a gasket level: U has equal corner spins,
// V a flipped one. y^(3^level)*U and y^(3^level)*V are polynomials in y^4.
struct UVPair {
    LaurentPolynomial U;
    LaurentPolynomial V;
    unsigned level = 0;
};

struct MnRecord {
    unsigned level = 0;
    IntPolynomial M;  // in x = y^4; monic, degree 3^level
};

struct TnRecord {
    unsigned level = 0;
    IntPolynomial T;  // in z; monic, degree 3^level
    // [(g^n + 1, 1)] followed by [(g^j + 2, 3^(n-j-1)) for j = 0..n-1];
    // the product with multiplicities equals T exactly.
    std::vector<std::pair<IntPolynomial, unsigned long>> factors;
};

// Level 0: (y^3, 1/y).
UVPair uv_initial();
// One renormalization step:
//   U' = U^3 + 3UV^2 + 4V^3,  V' = U^2 V + 4UV^2 + 3V^3.
UVPair uv_step(const UVPair& pair);
UVPair compute_UV(unsigned n, const EngineLimits& limits = {});

// Z_n = 2U_n + 6V_n; positive coefficients, power span 4*3^n.
LaurentPolynomial compute_Z(unsigned n, const EngineLimits& limits = {});

// y^(3^level) * P with y^4 -> x; all shifted powers must be multiples of 4.
IntPolynomial substitute_quartic(const LaurentPolynomial& p, unsigned level);

// M_n = U~_n + 3V~_n, built on the polynomial-only path through
// substitute_quartic. The rational recursion
//   M_n(x) = [(x+3)^(3^(n-1)) M_(n-1)((x^2-x+4)/(x+3))] * (x+1)^(3^(n-1))
// is a verification, not the construction.
MnRecord compute_M(unsigned n, const EngineLimits& limits = {});

// T_0 = z + 1, T_n = (z+2)^(3^(n-1)) * T_(n-1)(z^2+z). The factored form is
// built alongside and checked to multiply back to T exactly.
TnRecord compute_T(unsigned n, const EngineLimits& limits = {});

// g^j as an exact polynomial, g(z) = z^2 + z.
IntPolynomial g_iterate(unsigned j);

// Exact check of the recursion identity quoted above for compute_M.
bool verify_mn_recursion(const IntPolynomial& m_prev, const IntPolynomial& m_cur,
                         unsigned n);

struct ConjugacyReport {
    bool ok = false;
    unsigned level = 0;
    long first_mismatch_power = -1;
    std::string detail;
};

// Exact polynomial identity tying the two families together:
//   4^(3^n) * M_n(x) = 2^((3^(n+1)+1)/2) * (x-1)^(3^n) * T_n(4/(x-1)),
// with the right side cleared of denominators.
ConjugacyReport verify_conjugacy_identity(const MnRecord& m, const TnRecord& t);
ConjugacyReport verify_conjugacy_identity(unsigned n, const EngineLimits& limits = {});

}  // namespace gasket

#endif

#ifndef GASKET_RESIDUALS_HPP
#define GASKET_RESIDUALS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "gasket/int_polynomial.hpp"
#include "gasket/zero_cloud.hpp"

namespace gasket {

struct ResidualReport {
    // Worst value of |P(p)| / (|P'(p)| * (1 + |p|)) over the cloud; exact
    // zeros contribute 0 (a point whose residual and derivative both vanish
    // exactly is a perfect root, whatever its multiplicity).
    double worst_relative = 0.0;
    std::size_t worst_index = 0;
    std::size_t checked = 0;
};

// Evaluates the exact polynomial and its derivative at every cloud point
// with GMP floating arithmetic. Precision is sized from coefficient bit
// length, degree, and the largest multiplicity so that roundoff stays far
// below the residual scale even at roots of multiplicity 3^(n-1), where P
// and P' are both astronomically small.
ResidualReport check_residuals(const IntPolynomial& poly, const ZeroCloud& cloud);

}  // namespace gasket

#endif

#ifndef GASKET_PRESSURE_HPP
#define GASKET_PRESSURE_HPP

#include <complex>
#include <span>
#include <vector>

namespace gasket {

// Finite-level pressure p_n(y) = log|Z_n(y)| / (4*3^n), evaluated by a
// normalized log-space recursion instead of exact polynomial arithmetic:
// with r_0 = y^4 and L_0 = log|V_0(y)| = -log|y|,
//   L_j = 3 L_(j-1) + log|r_(j-1)^2 + 4 r_(j-1) + 3|,   r_j = f(r_(j-1)),
//   p_n = (log 2 + L_n + log|r_n + 3|) / (4*3^n),
// using V_n = V_(n-1)^3 (r^2+4r+3) and Z_n = 2 V_n (r_n + 3). O(n) per
// sample where direct evaluation is infeasible past degree 4*3^8.
struct PressureSample {
    std::complex<double> y;
    unsigned level = 0;
    double p_value = 0.0;
    std::complex<double> ratio_orbit_end;  // r_n = (U_n/V_n)(y)
};

inline constexpr unsigned kMaxPressureLevel = 10000;

// y must be nonzero; for complex y the ratio orbit is guarded against the
// pole of f at -3 (cannot happen for y on the positive real axis).
PressureSample pressure_eval(std::complex<double> y, unsigned n);

struct PressureRow {
    double y = 0.0;
    unsigned level = 0;
    double p = 0.0;
    double asymptote = 0.0;   // (3/4) log y
    double difference = 0.0;  // p - asymptote
};

std::vector<PressureRow> pressure_curve(std::span<const double> y_grid, unsigned n);

// Log-kernel potential of the truncated limiting root measure:
//   m_J(x) = sum_(j<J) 3^-(j+1) sum_(w in f^-j(-1)) log|x - w|.
// The finite-plane part of the limit has total mass exactly 1, so
// m(x) ~ log x for large x; the bookkeeping atom at infinity contributes no
// kernel term. Streams the preimage tree depth first; nothing is stored.
struct PotentialResult {
    double value = 0.0;
    double min_atom_distance = 0.0;
    bool near_atom = false;  // within near_tol of some atom of the sum
    std::complex<double> nearest_atom;
};

inline constexpr unsigned kMaxPotentialDepth = 28;
inline constexpr unsigned kDefaultPotentialDepth = 25;

PotentialResult potential_m(std::complex<double> x,
                            unsigned depth_J = kDefaultPotentialDepth,
                            double near_tol = 1e-9);

}  // namespace gasket

#endif

#include "gasket/pressure.hpp"

#include <cmath>
#include <string>

#include "gasket/dynamics.hpp"
#include "gasket/errors.hpp"

namespace gasket {

PressureSample pressure_eval(std::complex<double> y, unsigned n) {
    if (y == 0.0) throw std::domain_error("pressure_eval: y must be nonzero");
    if (n > kMaxPressureLevel)
        throw guard_error("pressure_eval: level " + std::to_string(n) + " exceeds guard " +
                          std::to_string(kMaxPressureLevel));
    std::complex<double> r = apply_q(y);
    double scale = 1.0;  // running 1/3^j applied incrementally to keep L bounded
    // Work with L_j / 3^j instead of L_j so the recursion stays O(1)-sized:
    // L_n / 3^n = -log|y| + sum_j log|r_j^2+4r_j+3| / 3^(j+1).
    double l_scaled = -std::log(std::abs(y));
    for (unsigned j = 0; j < n; ++j) {
        // r^2+4r+3 = (r+1)(r+3): -3 is the pole of f, -1 a zero of Z_n.
        // Impossible for y on the positive real axis (the orbit is trapped
        // in [1, inf)); complex y can land there.
        if (std::abs(r + 3.0) < 1e-13 || std::abs(r + 1.0) < 1e-13)
            throw numeric_error("pressure_eval: singular ratio orbit at level " +
                                std::to_string(j));
        scale /= 3.0;
        l_scaled += scale * std::log(std::abs(r * r + 4.0 * r + 3.0));
        r = apply_f(r);
    }
    PressureSample s;
    s.y = y;
    s.level = n;
    s.ratio_orbit_end = r;
    s.p_value = (scale * (std::log(2.0) + std::log(std::abs(r + 3.0))) + l_scaled) / 4.0;
    return s;
}

std::vector<PressureRow> pressure_curve(std::span<const double> y_grid, unsigned n) {
    std::vector<PressureRow> rows;
    rows.reserve(y_grid.size());
    for (double y : y_grid) {
        const PressureSample s = pressure_eval({y, 0.0}, n);
        PressureRow row;
        row.y = y;
        row.level = n;
        row.p = s.p_value;
        row.asymptote = 0.75 * std::log(y);
        row.difference = row.p - row.asymptote;
        rows.push_back(row);
    }
    return rows;
}

namespace {

// Depth-first walk of the preimage tree of -1 under f, accumulating the
// per-level kernel sums without materializing 2^J points.
void potential_walk(const std::complex<double>& x, const std::complex<double>& w,
                    unsigned depth, unsigned max_depth, std::vector<double>& level_sums,
                    double& min_dist, std::complex<double>& nearest) {
    const double d = std::abs(x - w);
    if (d < min_dist) {
        min_dist = d;
        nearest = w;
    }
    level_sums[depth] += std::log(d);
    if (depth + 1 >= max_depth + 1 || depth + 1 >= level_sums.size()) return;
    for (const auto& child : preimages_f(w)) {
        potential_walk(x, child, depth + 1, max_depth, level_sums, min_dist, nearest);
    }
}

}  // namespace

PotentialResult potential_m(std::complex<double> x, unsigned depth_J, double near_tol) {
    if (depth_J == 0 || depth_J > kMaxPotentialDepth)
        throw guard_error("potential_m: truncation depth " + std::to_string(depth_J) +
                          " outside (0, " + std::to_string(kMaxPotentialDepth) + "]");
    std::vector<double> level_sums(depth_J, 0.0);
    PotentialResult out;
    out.min_atom_distance = std::numeric_limits<double>::infinity();
    potential_walk(x, {-1.0, 0.0}, 0, depth_J - 1, level_sums, out.min_atom_distance,
                   out.nearest_atom);
    double scale = 1.0;
    for (unsigned j = 0; j < depth_J; ++j) {
        scale /= 3.0;
        out.value += scale * level_sums[j];
    }
    out.near_atom = out.min_atom_distance < near_tol;
    return out;
}

}  // namespace gasket

#ifndef GASKET_DYNAMICS_HPP
#define GASKET_DYNAMICS_HPP

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasket/errors.hpp"

namespace gasket {

// Numerical dynamics of the renormalization map f(x) = (x^2-x+4)/(x+3), its
// polynomial conjugate g(z) = z^2+z under phi(x) = 4/(x-1), the quartic
// cover q(y) = y^4, and the inverse branch h of f defined off the slit
// [-15, 1] which is asymptotic to translation by 4.
//
// Everything is templated on the real scalar; double is the default, long
// double is available for deeper backward orbits.

struct BranchConfig {
    unsigned precision = 53;      // mantissa bits; 53 -> double, <= LDBL -> long double
    double h_domain_floor = 10.0; // boundary of the right half plane H0, >= 10
    unsigned max_iterations = 1000;
    unsigned backward_depth_guard = 20;

    void validate() const {
        if (h_domain_floor < 10.0)
            throw std::invalid_argument("BranchConfig: h_domain_floor must be >= 10");
    }
};

// A point of the Riemann sphere: infinity carried as an explicit flag so the
// sphere conventions of f, phi, h stay exact case analysis.
template <std::floating_point Real>
struct SpherePoint {
    std::complex<Real> value{};
    bool at_infinity = false;

    static SpherePoint infinity() { return {{}, true}; }
    static SpherePoint finite(std::complex<Real> v) { return {v, false}; }
};

namespace detail {
template <std::floating_point Real>
bool on_real_segment(const std::complex<Real>& x, Real lo, Real hi) {
    return x.imag() == Real(0) && x.real() >= lo && x.real() <= hi;
}
}  // namespace detail

template <std::floating_point Real>
std::complex<Real> apply_f(const std::complex<Real>& x) {
    if (x == std::complex<Real>(Real(-3)))
        throw std::domain_error("f: pole at -3 (use the sphere overload)");
    return (x * x - x + Real(4)) / (x + Real(3));
}

template <std::floating_point Real>
std::complex<Real> apply_g(const std::complex<Real>& z) {
    return z * z + z;
}

template <std::floating_point Real>
std::complex<Real> apply_phi(const std::complex<Real>& x) {
    if (x == std::complex<Real>(Real(1)))
        throw std::domain_error("phi: pole at 1 (use the sphere overload)");
    return Real(4) / (x - Real(1));
}

template <std::floating_point Real>
std::complex<Real> apply_phi_inv(const std::complex<Real>& z) {
    if (z == std::complex<Real>())
        throw std::domain_error("phi_inv: pole at 0 (use the sphere overload)");
    return (z + Real(4)) / z;
}

template <std::floating_point Real>
std::complex<Real> apply_q(const std::complex<Real>& y) {
    const std::complex<Real> y2 = y * y;
    return y2 * y2;
}

template <std::floating_point Real>
SpherePoint<Real> apply_f(const SpherePoint<Real>& x) {
    if (x.at_infinity) return SpherePoint<Real>::infinity();
    if (x.value == std::complex<Real>(Real(-3))) return SpherePoint<Real>::infinity();
    return SpherePoint<Real>::finite(apply_f(x.value));
}

template <std::floating_point Real>
SpherePoint<Real> apply_phi(const SpherePoint<Real>& x) {
    if (x.at_infinity) return SpherePoint<Real>::finite({});
    if (x.value == std::complex<Real>(Real(1))) return SpherePoint<Real>::infinity();
    return SpherePoint<Real>::finite(apply_phi(x.value));
}

template <std::floating_point Real>
SpherePoint<Real> apply_phi_inv(const SpherePoint<Real>& z) {
    if (z.at_infinity) return SpherePoint<Real>::finite(std::complex<Real>(Real(1)));
    if (z.value == std::complex<Real>()) return SpherePoint<Real>::infinity();
    return SpherePoint<Real>::finite(apply_phi_inv(z.value));
}

// Square-root branch with cut (-inf, 0]: s(w)^2 = w and Re(s) > 0.
template <std::floating_point Real>
std::complex<Real> principal_sqrt(const std::complex<Real>& w) {
    if (detail::on_real_segment(w, -std::numeric_limits<Real>::infinity(), Real(0)))
        throw std::domain_error("principal_sqrt: argument on the cut (-inf, 0]");
    return std::sqrt(w);
}

// a(x) = 1 - 64/(x+7)^2. Maps the complement of [-15,1] off the sqrt cut.
template <std::floating_point Real>
std::complex<Real> apply_a(const std::complex<Real>& x) {
    if (x == std::complex<Real>(Real(-7)))
        throw std::domain_error("a: pole at -7");
    const std::complex<Real> d = x + Real(7);
    return Real(1) - Real(64) / (d * d);
}

// Inverse branch of f on the complement of the slit [-15, 1]:
//   h(x) = (x + 1 + (x+7) * s(a(x))) / 2,   f(h(x)) = x,  h(x) ~ x + 4.
template <std::floating_point Real>
std::complex<Real> apply_h(const std::complex<Real>& x) {
    if (detail::on_real_segment(x, Real(-15), Real(1)))
        throw std::domain_error("h: argument on the slit [-15, 1]");
    return (x + Real(1) + (x + Real(7)) * principal_sqrt(apply_a(x))) / Real(2);
}

template <std::floating_point Real>
SpherePoint<Real> apply_h(const SpherePoint<Real>& x) {
    if (x.at_infinity) return SpherePoint<Real>::infinity();
    return SpherePoint<Real>::finite(apply_h(x.value));
}

namespace detail {
template <std::floating_point Real>
void require_in_h0(const std::complex<Real>& x, const BranchConfig& cfg, const char* who) {
    cfg.validate();
    if (!(x.real() > Real(cfg.h_domain_floor)))
        throw std::domain_error(std::string(who) + ": Re(x) <= " +
                                std::to_string(cfg.h_domain_floor) +
                                " is outside the iteration domain");
}
}  // namespace detail

// Orbit [x, h(x), ..., h^n(x)]; every element stays in the half plane and
// the real part grows by more than 3 per step.
template <std::floating_point Real>
std::vector<std::complex<Real>> iterate_h(const std::complex<Real>& x, unsigned n,
                                          const BranchConfig& cfg = {}) {
    detail::require_in_h0(x, cfg, "iterate_h");
    std::vector<std::complex<Real>> orbit;
    orbit.reserve(n + 1);
    orbit.push_back(x);
    for (unsigned k = 0; k < n; ++k) orbit.push_back(apply_h(orbit.back()));
    return orbit;
}

// n-th Fatou-coordinate approximant F_n(x) = h^n(x) - 4n + 4 log(x + 4n);
// converges to the solution of F(h(x)) = F(x) + 4 and maps reals to reals.
template <std::floating_point Real>
std::complex<Real> fatou_F(const std::complex<Real>& x, unsigned n,
                           const BranchConfig& cfg = {}) {
    detail::require_in_h0(x, cfg, "fatou_F");
    std::complex<Real> v = x;
    for (unsigned k = 0; k < n; ++k) v = apply_h(v);
    return v - Real(4) * Real(n) + Real(4) * std::log(x + Real(4) * Real(n));
}

// The approximant at the configured iteration budget. The defect of the
// functional equation decays like 4|h(x)-x-4| / (Re x + 4n), so the budget
// bounds the attainable accuracy directly.
template <std::floating_point Real>
std::complex<Real> fatou_F(const std::complex<Real>& x, const BranchConfig& cfg) {
    return fatou_F(x, cfg.max_iterations, cfg);
}

namespace detail {
// Numerically stable quadratic roots of x^2 + b x + c, sorted by (re, im).
template <std::floating_point Real>
std::array<std::complex<Real>, 2> quadratic_roots(const std::complex<Real>& b,
                                                  const std::complex<Real>& c) {
    using C = std::complex<Real>;
    const C disc = b * b - Real(4) * c;
    if (b.imag() == Real(0) && c.imag() == Real(0) && disc.imag() == Real(0) &&
        disc.real() < Real(0)) {
        // Conjugate pair off a real parent: build both roots from one sqrt so
        // their real parts tie exactly and the (re, im) order is stable.
        const Real re = -b.real() / Real(2);
        const Real im = std::sqrt(-disc.real()) / Real(2);
        return {C(re, -im), C(re, im)};
    }
    const C root = std::sqrt(disc);
    // Pick the sign that avoids cancellation in b + sign*root.
    const C q = (std::real(std::conj(b) * root) >= Real(0)) ? Real(-0.5) * (b + root)
                                                            : Real(-0.5) * (b - root);
    C r1, r2;
    if (q == C()) {
        r1 = r2 = C();  // double root at 0 (only when b = c = 0)
    } else {
        r1 = q;
        r2 = c / q;
    }
    if (std::make_pair(r1.real(), r1.imag()) > std::make_pair(r2.real(), r2.imag()))
        std::swap(r1, r2);
    return {r1, r2};
}
}  // namespace detail

// Solutions of f(x) = w: roots of x^2 - (1+w)x + (4-3w); double roots are
// returned twice; ordering is by real part, then imaginary part.
template <std::floating_point Real>
std::array<std::complex<Real>, 2> preimages_f(const std::complex<Real>& w) {
    return detail::quadratic_roots<Real>(-(Real(1) + w), Real(4) - Real(3) * w);
}

// Solutions of g(z) = w: roots of z^2 + z - w.
template <std::floating_point Real>
std::array<std::complex<Real>, 2> preimages_g(const std::complex<Real>& w) {
    return detail::quadratic_roots<Real>(std::complex<Real>(Real(1)), -w);
}

enum class InverseMap { f_map, g_map };

template <std::floating_point Real>
struct OrbitNode {
    std::complex<Real> value;
    unsigned depth = 0;
    // Branch word: bit k is the child choice made at depth k+1 (0 = smaller
    // root in (re, im) order). Together with (seed, depth) this is the
    // provenance key used for exact measure bookkeeping.
    std::uint64_t path = 0;
};

// Complete preimage tree of `seed`: level j holds the 2^j solutions of
// map^j(x) = seed counted with multiplicity, each polished by one Newton
// step on its defining quadratic.
template <std::floating_point Real>
std::vector<std::vector<OrbitNode<Real>>> backward_orbit(const std::complex<Real>& seed,
                                                         unsigned depth, InverseMap map,
                                                         const BranchConfig& cfg = {}) {
    cfg.validate();
    if (depth > cfg.backward_depth_guard)
        throw guard_error("backward_orbit: depth " + std::to_string(depth) +
                          " exceeds guard " + std::to_string(cfg.backward_depth_guard));
    using C = std::complex<Real>;
    std::vector<std::vector<OrbitNode<Real>>> levels;
    levels.reserve(depth + 1);
    levels.push_back({OrbitNode<Real>{seed, 0, 0}});
    for (unsigned j = 1; j <= depth; ++j) {
        std::vector<OrbitNode<Real>> next;
        next.reserve(levels.back().size() * 2);
        for (const OrbitNode<Real>& parent : levels.back()) {
            const C w = parent.value;
            const C b = (map == InverseMap::f_map) ? -(Real(1) + w) : C(Real(1));
            const C c = (map == InverseMap::f_map) ? Real(4) - Real(3) * w : -w;
            auto roots = detail::quadratic_roots<Real>(b, c);
            for (unsigned branch = 0; branch < 2; ++branch) {
                C r = roots[branch];
                // One Newton step absorbs error accumulated along the path.
                const C deriv = Real(2) * r + b;
                if (std::abs(deriv) > Real(1e-30)) r -= (r * r + b * r + c) / deriv;
                next.push_back(OrbitNode<Real>{
                    r, j, parent.path | (std::uint64_t{branch} << (j - 1))});
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

// Flattened (point, depth) view of the preimage tree.
template <std::floating_point Real>
std::vector<std::pair<std::complex<Real>, unsigned>> backward_orbit_flat(
    const std::complex<Real>& seed, unsigned depth, InverseMap map,
    const BranchConfig& cfg = {}) {
    std::vector<std::pair<std::complex<Real>, unsigned>> out;
    for (const auto& level : backward_orbit(seed, depth, map, cfg)) {
        for (const auto& node : level) out.emplace_back(node.value, node.depth);
    }
    return out;
}

// The four solutions of y^4 = w, ordered by quarter-turn index applied to
// the principal fourth root.
template <std::floating_point Real>
std::array<std::complex<Real>, 4> quartic_roots(const std::complex<Real>& w) {
    using C = std::complex<Real>;
    const Real r = std::pow(std::abs(w), Real(0.25));
    const Real theta = std::arg(w) / Real(4);
    const C base = std::polar(r, theta);
    const C rot(Real(0), Real(1));
    std::array<C, 4> out;
    out[0] = base;
    for (int k = 1; k < 4; ++k) out[k] = out[k - 1] * rot;
    return out;
}

}  // namespace gasket

#endif

#include "gasket/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gasket {

namespace {

struct MpComplex {
    mpf_class re, im;
    MpComplex(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
};

// acc = acc * z + c, in place.
void horner_step(MpComplex& acc, const MpComplex& z, const BigInt& c,
                 mpf_class& t1, mpf_class& t2) {
    t1 = acc.re * z.re - acc.im * z.im;
    t2 = acc.re * z.im + acc.im * z.re;
    acc.re = t1 + c;
    acc.im = t2;
}

mpf_class abs2(const MpComplex& v) { return v.re * v.re + v.im * v.im; }

bool exactly_integer(double x) {
    return std::isfinite(x) && x == std::nearbyint(x) && std::abs(x) < 1e15;
}

}  // namespace

ResidualReport check_residuals(const IntPolynomial& poly, const ZeroCloud& cloud) {
    ResidualReport report;
    if (poly.is_zero() || cloud.points.empty()) return report;

    const IntPolynomial deriv = poly.derivative();
    const long degree = poly.degree();

    std::size_t coeff_bits = 0;
    for (const BigInt& c : poly.coeffs())
        coeff_bits = std::max(coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    double max_abs = 0.0;
    std::int64_t max_mult = 1;
    for (const auto& p : cloud.points) {
        max_abs = std::max(max_abs, std::abs(p.value));
        max_mult = std::max(max_mult, p.multiplicity);
    }
    // Roundoff must stay below c * delta^multiplicity with delta the orbit's
    // double-precision root error (~2^-45 or better).
    const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(
        coeff_bits + static_cast<std::size_t>(degree) *
                         static_cast<std::size_t>(std::ceil(std::log2(2.0 + max_abs))) +
        static_cast<std::size_t>(max_mult) * 64 + 128);

    mpf_class t1(0, prec), t2(0, prec);
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const auto& p = cloud.points[i];
        double rel = 0.0;
        if (exactly_integer(p.value.real()) && p.value.imag() == 0.0) {
            // Exact integer point: evaluate in integer arithmetic.
            const BigInt x(p.value.real());
            const BigInt pv = poly.eval(x);
            if (pv != 0) {
                const BigInt dv = deriv.eval(x);
                if (dv == 0) {
                    rel = std::numeric_limits<double>::infinity();
                } else {
                    rel = std::exp(log_abs(pv) - log_abs(dv)) / (1.0 + std::abs(p.value.real()));
                }
            }
        } else {
            MpComplex z(prec), val(prec), dval(prec);
            z.re = p.value.real();
            z.im = p.value.imag();
            for (long k = degree; k >= 0; --k)
                horner_step(val, z, poly.coeff(static_cast<std::size_t>(k)), t1, t2);
            for (long k = degree - 1; k >= 0; --k)
                horner_step(dval, z, deriv.coeff(static_cast<std::size_t>(k)), t1, t2);
            const mpf_class num = abs2(val);
            mpf_class den = abs2(dval);
            if (den == 0) {
                rel = num == 0 ? 0.0 : std::numeric_limits<double>::infinity();
            } else {
                const double scale = 1.0 + std::abs(p.value);
                mpf_class ratio = num / den;
                long e2 = 0;
                const double mant = mpf_get_d_2exp(&e2, ratio.get_mpf_t());
                // sqrt of |P|^2/|P'|^2, carried in log2 to dodge range limits
                const double log2_rel =
                    0.5 * (std::log2(std::max(mant, 1e-300)) + static_cast<double>(e2)) -
                    std::log2(scale);
                rel = std::exp2(std::max(log2_rel, -1000.0));
            }
        }
        ++report.checked;
        if (rel > report.worst_relative) {
            report.worst_relative = rel;
            report.worst_index = i;
        }
    }
    return report;
}

}  // namespace gasket

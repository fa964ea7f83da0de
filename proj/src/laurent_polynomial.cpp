#include "gasket/laurent_polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "gasket/errors.hpp"

namespace gasket {

namespace {
const BigInt kZero = 0;

// Strips leading zero coefficients from below, adjusting the base power.
LaurentPolynomial renormalized(const IntPolynomial& body, long min_power) {
    if (body.is_zero()) return {};
    std::size_t low = 0;
    while (body.coeff(low) == 0) ++low;
    if (low == 0) return LaurentPolynomial(body, min_power);
    std::vector<BigInt> c(body.coeffs().begin() + static_cast<long>(low),
                          body.coeffs().end());
    return LaurentPolynomial(IntPolynomial(std::move(c)), min_power + static_cast<long>(low));
}
}  // namespace

LaurentPolynomial::LaurentPolynomial(IntPolynomial body, long min_power)
    : body_(std::move(body)), min_power_(body_.is_zero() ? 0 : min_power) {
    if (!body_.is_zero() && body_.coeff(0) == 0) {
        *this = renormalized(body_, min_power);
    }
}

LaurentPolynomial LaurentPolynomial::monomial(BigInt coefficient, long power) {
    return LaurentPolynomial(IntPolynomial(std::move(coefficient)), power);
}

const BigInt& LaurentPolynomial::coeff(long power) const {
    if (is_zero() || power < min_power_) return kZero;
    return body_.coeff(static_cast<std::size_t>(power - min_power_));
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long base = std::min(a.min_power_, b.min_power_);
    const IntPolynomial sa = IntPolynomial::monomial(1, a.min_power_ - base) * a.body_;
    const IntPolynomial sb = IntPolynomial::monomial(1, b.min_power_ - base) * b.body_;
    return LaurentPolynomial(sa + sb, base);
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + BigInt(-1) * b;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    // Delegates to IntPolynomial multiplication; base powers add.
    return LaurentPolynomial(a.body_ * b.body_, a.min_power_ + b.min_power_);
}

LaurentPolynomial operator*(const BigInt& c, const LaurentPolynomial& a) {
    return LaurentPolynomial(c * a.body_, a.min_power_);
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long e) const {
    return LaurentPolynomial(body_.pow(e), min_power_ * static_cast<long>(e));
}

LaurentPolynomial LaurentPolynomial::shifted(long dp) const {
    if (is_zero()) return {};
    return LaurentPolynomial(body_, min_power_ + dp);
}

Rational LaurentPolynomial::eval(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if (x == 0 && min_power_ < 0)
        throw std::domain_error("Laurent evaluation at 0 with negative powers");
    Rational v = body_.eval(x);
    if (min_power_ != 0) {
        Rational p;
        const unsigned long e = static_cast<unsigned long>(
            min_power_ < 0 ? -min_power_ : min_power_);
        mpz_pow_ui(mpq_numref(p.get_mpq_t()), x.get_num().get_mpz_t(), e);
        mpz_pow_ui(mpq_denref(p.get_mpq_t()), x.get_den().get_mpz_t(), e);
        p.canonicalize();
        v = min_power_ < 0 ? Rational(v / p) : Rational(v * p);
    }
    v.canonicalize();
    return v;
}

std::complex<double> LaurentPolynomial::eval(const std::complex<double>& x) const {
    if (is_zero()) return 0.0;
    if (x == 0.0 && min_power_ < 0)
        throw std::domain_error("Laurent evaluation at 0 with negative powers");
    std::complex<double> v = body_.eval(x);
    return v * std::pow(x, static_cast<double>(min_power_));
}

IntPolynomial LaurentPolynomial::compress_power(long step) const {
    if (step <= 0) throw std::invalid_argument("compress_power: step must be positive");
    if (is_zero()) return {};
    if (min_power_ < 0)
        throw numeric_error("compress_power: negative power present");
    std::vector<BigInt> out((static_cast<std::size_t>(max_power()) / step) + 1);
    for (long p = min_power_; p <= max_power(); ++p) {
        const BigInt& c = coeff(p);
        if (c == 0) continue;
        if (p % step != 0)
            throw numeric_error("compress_power: stored power " + std::to_string(p) +
                                " not divisible by " + std::to_string(step));
        out[static_cast<std::size_t>(p / step)] = c;
    }
    return IntPolynomial(std::move(out));
}

}  // namespace gasket

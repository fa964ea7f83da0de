#ifndef GASKET_INT_POLYNOMIAL_HPP
#define GASKET_INT_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "gasket/bigint.hpp"

namespace gasket {

// Dense univariate polynomial over arbitrary-precision integers.
// Coefficients are stored lowest power first; the leading stored coefficient
// is nonzero unless the polynomial is identically zero (empty storage).
// Values are immutable in spirit: every operation returns a fresh polynomial.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(BigInt constant);
    explicit IntPolynomial(std::vector<BigInt> coeffs_low_first);
    IntPolynomial(std::initializer_list<long> coeffs_low_first);

    static IntPolynomial monomial(BigInt coefficient, std::size_t power);
    // The affine polynomial a*x + b.
    static IntPolynomial linear(BigInt a, BigInt b);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& coeff(std::size_t k) const;
    const BigInt& leading_coeff() const;
    std::span<const BigInt> coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

    IntPolynomial pow(unsigned long e) const;

    // p.compose(q) = p(q(x)), expanded by Horner accumulation.
    IntPolynomial compose(const IntPolynomial& inner) const;

    // den(x)^deg(p) * p(num(x)/den(x)) as an exact polynomial (homogenized
    // composition with a rational map). For a constant p the result is p.
    IntPolynomial compose_rational_cleared(const IntPolynomial& num,
                                           const IntPolynomial& den) const;

    IntPolynomial derivative() const;

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

  private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace gasket

#endif

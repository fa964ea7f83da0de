#ifndef GASKET_LAURENT_POLYNOMIAL_HPP
#define GASKET_LAURENT_POLYNOMIAL_HPP

#include "gasket/int_polynomial.hpp"

namespace gasket {

// Integer-coefficient polynomial in y and 1/y, stored as an IntPolynomial
// body plus the power of the lowest stored coefficient. Both extreme stored
// coefficients are nonzero unless the value is identically zero.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(IntPolynomial body, long min_power);
    static LaurentPolynomial monomial(BigInt coefficient, long power);

    bool is_zero() const { return body_.is_zero(); }
    long min_power() const { return min_power_; }
    long max_power() const { return min_power_ + body_.degree(); }
    // Top minus bottom stored power; 0 for a monomial or the zero value.
    long power_span() const { return is_zero() ? 0 : body_.degree(); }
    const BigInt& coeff(long power) const;
    const IntPolynomial& body() const { return body_; }

    bool operator==(const LaurentPolynomial&) const = default;

    friend LaurentPolynomial operator+(const LaurentPolynomial&, const LaurentPolynomial&);
    friend LaurentPolynomial operator-(const LaurentPolynomial&, const LaurentPolynomial&);
    friend LaurentPolynomial operator*(const LaurentPolynomial&, const LaurentPolynomial&);
    friend LaurentPolynomial operator*(const BigInt& c, const LaurentPolynomial&);

    LaurentPolynomial pow(unsigned long e) const;
    // Multiplication by y^dp.
    LaurentPolynomial shifted(long dp) const;

    // Exact evaluation; x must be nonzero when negative powers are present.
    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // Substitutes y^step -> x. Every stored power must be nonnegative and
    // divisible by step; a violation throws numeric_error, since for the
    // partition-function family it would falsify the y^4-structure claim.
    IntPolynomial compress_power(long step) const;

  private:
    IntPolynomial body_;
    long min_power_ = 0;
};

}  // namespace gasket

#endif

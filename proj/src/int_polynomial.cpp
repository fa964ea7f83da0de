#include "gasket/int_polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace gasket {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs_low_first)
    : coeffs_(std::move(coeffs_low_first)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs_low_first) {
    coeffs_.reserve(coeffs_low_first.size());
    for (long c : coeffs_low_first) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t power) {
    if (coefficient == 0) return {};
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(BigInt a, BigInt b) {
    std::vector<BigInt> c(2);
    c[0] = std::move(b);
    c[1] = std::move(a);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const BigInt& IntPolynomial::leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) + q.coeff(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) - q.coeff(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    BigInt tmp;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            // mpz_addmul keeps the inner loop free of temporaries.
            mpz_addmul(out[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(),
                       q.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
    if (c == 0) return {};
    IntPolynomial out(p);
    for (auto& a : out.coeffs_) a *= c;
    return out;
}

IntPolynomial IntPolynomial::pow(unsigned long e) const {
    IntPolynomial result(BigInt(1));
    IntPolynomial base(*this);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    IntPolynomial acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * inner + IntPolynomial(coeffs_[k]);
    }
    return acc;
}

IntPolynomial IntPolynomial::compose_rational_cleared(const IntPolynomial& num,
                                                      const IntPolynomial& den) const {
    if (is_zero()) return {};
    const std::size_t d = coeffs_.size() - 1;
    // sum_k c_k num^k den^(d-k), accumulated Horner style in num with one
    // extra den factor per step.
    IntPolynomial acc(coeffs_[d]);
    IntPolynomial den_pow(BigInt(1));
    for (std::size_t k = d; k-- > 0;) {
        den_pow = den_pow * den;
        acc = acc * num + coeffs_[k] * den_pow;
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = BigInt(k) * coeffs_[k];
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * x + Rational(coeffs_[k]);
    }
    acc.canonicalize();
    return acc;
}

std::complex<double> IntPolynomial::eval(const std::complex<double>& x) const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].get_d();
    return acc;
}

}  // namespace gasket

#pragma once

#include "exprimes/arith.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace exprimes {

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<long> coeffs);
    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    Rational operator[](std::size_t i) const;
    const Rational& leading() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rational& c, const QPoly& a);
    QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
    QPoly& operator-=(const QPoly& b) { return *this = *this - b; }
    QPoly& operator*=(const QPoly& b) { return *this = *this * b; }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Quotient and remainder; throws on division by zero.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    QPoly operator%(const QPoly& divisor) const { return divmod(divisor).second; }
    QPoly operator/(const QPoly& divisor) const { return divmod(divisor).first; }

    Rational eval(const Rational& x) const;
    std::complex<long double> eval(std::complex<long double> x) const;
    QPoly derivative() const;
    QPoly monic() const;
    /// Least common denominator of the coefficients.
    Integer denominator_lcm() const;
    bool is_integral() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

/// Res(f, g) via the subresultant PRS over Z. Both inputs must be nonzero.
Rational resultant(const QPoly& f, const QPoly& g);

/// n-th cyclotomic polynomial, by exact division of x^n - 1.
const QPoly& cyclotomic_polynomial(unsigned n);

/// All complex roots of a squarefree polynomial, by Aberth iteration.
std::vector<std::complex<long double>> complex_roots(const QPoly& f);

}  // namespace exprimes

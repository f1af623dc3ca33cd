#pragma once

#include "exprimes/arith.hpp"
#include "exprimes/bigfloat.hpp"
#include "exprimes/polynomial.hpp"

#include <complex>
#include <string>
#include <vector>

namespace exprimes {

/**
 * Exact element of Q(zeta_n), stored as coordinates in the power basis
 * 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial.
 *
 * Binary operations on elements with different indices embed both operands
 * into Q(zeta_lcm). Equality is checked after such an embedding, so z_3 and
 * z_6^2 compare equal even though their coordinate vectors differ.
 */
class CycloElement {
public:
    /// Zero in Q = Q(zeta_1).
    CycloElement();
    CycloElement(unsigned n, const Rational& value);
    /// Reduces an arbitrary polynomial in z modulo Phi_n.
    CycloElement(unsigned n, const QPoly& poly);

    static CycloElement rational(const Rational& value) { return CycloElement(1, value); }
    /// zeta_n^k.
    static CycloElement zeta(unsigned n, long k = 1);
    /// Sum of c_e zeta_n^e where c_e = by_exponent[e]; len(by_exponent) <= n.
    static CycloElement from_exponent_sums(unsigned n, const std::vector<Rational>& by_exponent);

    unsigned index() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    QPoly as_poly() const { return QPoly(coeffs_); }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws DomainError if the element is irrational.
    Rational rational_value() const;

    /// Same element, rewritten in Q(zeta_m); requires index() | m.
    CycloElement embed(unsigned m) const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator/(const CycloElement& a, const CycloElement& b);
    CycloElement& operator+=(const CycloElement& b) { return *this = *this + b; }
    CycloElement& operator-=(const CycloElement& b) { return *this = *this - b; }
    CycloElement& operator*=(const CycloElement& b) { return *this = *this * b; }
    CycloElement scale(const Rational& c) const;
    CycloElement inverse() const;
    CycloElement pow(long e) const;
    friend bool operator==(const CycloElement& a, const CycloElement& b);

    /// The automorphism zeta -> zeta^j, gcd(j, n) = 1.
    CycloElement galois(long j) const;
    CycloElement complex_conjugate() const { return galois(-1); }

    /// Product of all Galois conjugates, Res(Phi_n, coefficient polynomial).
    Rational norm() const;
    Rational trace() const;

    /// Value at zeta_n = e^(2 pi i / n).
    BigComplex embed_numeric(mpfr_prec_t bits) const;
    std::complex<double> to_complex() const;

    /// "c0+c1*z+c2*z^2" with z = zeta_n; rationals print as "p/q".
    std::string to_string(const std::string& var = "z") const;

private:
    unsigned n_ = 1;
    std::vector<Rational> coeffs_;
};

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);
Rational cyclo_norm(const CycloElement& a);

/// Numeric embedding with at least the requested binary precision (>= 53).
BigComplex embed_numeric(const CycloElement& a, mpfr_prec_t precision);

}  // namespace exprimes

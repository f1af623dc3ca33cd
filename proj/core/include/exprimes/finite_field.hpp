#pragma once

#include "exprimes/arith.hpp"
#include "exprimes/polynomial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exprimes {

/// Polynomial over F_ell, lowest degree first, no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

void trim(FpPoly& a);
long degree(const FpPoly& a);
FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t ell);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t ell);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t ell);
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, std::uint64_t ell);
FpPoly mod(const FpPoly& a, const FpPoly& b, std::uint64_t ell);
FpPoly monic(const FpPoly& a, std::uint64_t ell);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t ell);
FpPoly derivative(const FpPoly& a, std::uint64_t ell);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m, std::uint64_t ell);
bool is_irreducible(const FpPoly& f, std::uint64_t ell);

/// Reduction of a rational polynomial; throws DomainError if ell divides a denominator.
FpPoly reduce(const QPoly& f, std::uint64_t ell);
std::uint64_t reduce(const Rational& q, std::uint64_t ell);

struct Factor {
    FpPoly poly;  ///< monic irreducible
    unsigned multiplicity = 1;
};

/// Complete factorization into monic irreducibles, sorted by (degree, coefficients).
std::vector<Factor> factor(const FpPoly& f, std::uint64_t ell);

std::string to_string(const FpPoly& a, const std::string& var = "x");

}  // namespace fp

/// Element of F_{ell^d}: coordinates in 1, t, ..., t^(d-1).
using FqElem = std::vector<std::uint64_t>;

/**
 * F_{ell^d} = F_ell[t]/(m(t)). The default modulus is the least monic
 * irreducible of degree d in lexicographic order of (c_0, ..., c_{d-1}), so
 * the same (ell, d) always yields the same presentation.
 */
class FiniteField {
public:
    FiniteField(std::uint64_t ell, unsigned degree);
    FiniteField(std::uint64_t ell, FpPoly modulus);

    std::uint64_t characteristic() const { return ell_; }
    unsigned degree() const { return degree_; }
    const FpPoly& modulus() const { return modulus_; }
    Integer order() const;

    FqElem zero() const { return FqElem(degree_, 0); }
    FqElem one() const;
    FqElem from_int(std::int64_t v) const;
    FqElem from_poly(const FpPoly& p) const;
    /// The class of t.
    FqElem generator() const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(const FqElem& a, const Integer& e) const;
    FqElem inv(const FqElem& a) const;
    FqElem frobenius(const FqElem& a) const;
    bool is_zero(const FqElem& a) const;

    /// Horner evaluation of a polynomial with F_ell coefficients.
    FqElem eval(const FpPoly& p, const FqElem& x) const;
    /// Evaluation of sum c_i x^i with c_i given over F_ell.
    FqElem eval_coords(const std::vector<std::uint64_t>& coeffs, const FqElem& x) const;

    /// "3+2*t^2" style.
    std::string to_string(const FqElem& a) const;

private:
    std::uint64_t ell_;
    unsigned degree_;
    FpPoly modulus_;
};

/// All roots of p in the field, sorted lexicographically by coordinates.
std::vector<FqElem> roots_in_field(const FiniteField& F, const FpPoly& p);
/// Same via exhaustive search; only for fields with at most 10^6 elements.
std::vector<FqElem> roots_by_search(const FiniteField& F, const FpPoly& p);

/// x^((q-1)/2) in {0, 1}; odd characteristic only.
bool is_square_in_field(const FiniteField& F, const FqElem& x);

/// Whether X^2 + bX + c has no root in F (any characteristic).
bool quadratic_is_irreducible(const FiniteField& F, const FqElem& b, const FqElem& c);

/// Absolute trace to F_p.
std::uint64_t absolute_trace(const FiniteField& F, const FqElem& x);

}  // namespace exprimes

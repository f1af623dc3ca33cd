#pragma once

#include "exprimes/characters.hpp"

#include <optional>

namespace exprimes {

/// B_m with B_1 = -1/2.
Rational bernoulli_classical(unsigned m);

/// B_m(x) = sum_j C(m, j) B_j x^(m-j).
Rational bernoulli_polynomial(unsigned m, const Rational& x);

/**
 * B_{k,chi} = m^(k-1) sum_{a=1}^{m} chi(a) B_k(a/m), m the modulus of chi,
 * as an element of Q(zeta_ord). For the trivial character mod 1 this
 * returns the classical B_k (so B_{1,1} = -1/2).
 */
CycloElement bernoulli_generalized(unsigned k, const DirichletCharacter& chi);

/**
 * Factored numerator of |N(B_{k,eps}/2k)|, the norm taken from Q(zeta_ord eps).
 * std::nullopt means B_{k,eps} = 0, i.e. the clause is vacuous.
 */
std::optional<FactoredInteger> bernoulli_norm_numerator(unsigned k, const DirichletCharacter& eps);

/// Hurwitz zeta(s, x) for integer s >= 2 and 0 < x <= 1, by Euler-Maclaurin.
BigFloat hurwitz_zeta(unsigned s, const Rational& x, mpfr_prec_t bits);

/// L(k, chi) for even chi and even k >= 2 (chi may be imprimitive).
BigComplex lvalue_numeric(unsigned k, const DirichletCharacter& chi, mpfr_prec_t bits);

/// -W(chi) C_k / f^k * B_{k,chi^-1} / 2k with C_k = (2 pi i)^k / (k-1)!; chi primitive, even, k even.
BigComplex lvalue_from_bernoulli(unsigned k, const DirichletCharacter& chi, mpfr_prec_t bits);

}  // namespace exprimes

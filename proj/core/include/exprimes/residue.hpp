#pragma once

#include "exprimes/cyclotomic.hpp"
#include "exprimes/finite_field.hpp"
#include "exprimes/fixture.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace exprimes {

/// A coefficient has a denominator divisible by ell; use norm-divisibility mode.
class DenominatorObstruction : public DomainError {
public:
    using DomainError::DomainError;
};

/**
 * A ring map Z[alpha] (and Z[zeta_n] if zeta_order > 1) -> F_{ell^d},
 * standing for a prime above ell in K or in K(zeta_n).
 */
struct ResiduePoint {
    std::uint64_t ell = 0;
    std::shared_ptr<const FiniteField> field;
    FqElem alpha;
    FpPoly alpha_factor;  ///< irreducible factor of f mod ell that alpha kills
    unsigned zeta_order = 1;
    std::optional<FqElem> zeta;
    FpPoly zeta_factor;  ///< irreducible factor of Phi_n mod ell

    /// "(ell, g(alpha))" with g the factor of f.
    std::string ideal() const;
    /// "(ell, h(z))" with h the factor of Phi_n, or "" without zeta.
    std::string zeta_ideal() const;

    /// Image of sum c_i alpha^i; DenominatorObstruction if ell divides a denominator.
    FqElem reduce(const std::vector<Rational>& coords) const;
    FqElem reduce(const QPoly& poly) const { return reduce(poly.coeffs()); }
    /// Image of x in Q(zeta_m); needs m | zeta_order, or m = 2m' with m' odd dividing it.
    FqElem reduce(const CycloElement& x) const;
};

/**
 * All residue points of (f, Phi_n) over ell, one per Frobenius orbit, each
 * represented by its lexicographically least (alpha, zeta). n = 1 gives
 * points of K alone.
 */
std::vector<ResiduePoint> find_residue_points(const QPoly& f, unsigned n, std::uint64_t ell);
std::vector<ResiduePoint> find_residue_points(const NewformFixture& fx, unsigned n, std::uint64_t ell);

/**
 * Product of P(alpha_i) - Q(zeta_j) over all roots alpha_i of f and all
 * primitive n-th roots zeta_j, i.e. Res_x(f, Res_z(Phi_n, P(x) - Q(z))).
 */
Rational compositum_norm(const QPoly& P, const QPoly& Q, const QPoly& f, unsigned n);

}  // namespace exprimes

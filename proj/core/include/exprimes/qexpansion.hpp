#pragma once

#include "exprimes/characters.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exprimes {

/// Reading or producing a coefficient past the known truncation.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Coefficients a_0..a_T of a q-series with exact cyclotomic coefficients.
class QExpansion {
public:
    QExpansion(unsigned weight, std::uint64_t level, std::vector<CycloElement> coeffs);

    unsigned weight() const { return weight_; }
    std::uint64_t level() const { return level_; }
    /// Largest index with a known coefficient.
    std::uint64_t truncation() const { return coeffs_.size() - 1; }
    const CycloElement& operator[](std::uint64_t n) const;
    const std::vector<CycloElement>& coeffs() const { return coeffs_; }

    QExpansion truncate(std::uint64_t T) const;
    friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
    QExpansion scale(const CycloElement& c) const;

private:
    unsigned weight_;
    std::uint64_t level_;
    std::vector<CycloElement> coeffs_;
};

/// q-series over F_ell, coefficients in [0, ell).
class ModQExpansion {
public:
    ModQExpansion(std::uint64_t ell, unsigned weight, std::uint64_t level, std::vector<std::uint64_t> coeffs);

    std::uint64_t ell() const { return ell_; }
    unsigned weight() const { return weight_; }
    std::uint64_t level() const { return level_; }
    std::uint64_t truncation() const { return coeffs_.size() - 1; }
    std::uint64_t operator[](std::uint64_t n) const;
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

private:
    std::uint64_t ell_;
    unsigned weight_;
    std::uint64_t level_;
    std::vector<std::uint64_t> coeffs_;
};

/// sigma_{k-1}^nu(n) = sum_{m | n} nu(n/m) nu^-1(m) m^(k-1), in Q(zeta_ord nu).
CycloElement sigma_nu(unsigned k, const DirichletCharacter& nu, std::uint64_t n);

/**
 * E = -theta(c) B_k/2k + sum sigma_{k-1}^nu(n) q^n, level c^2, for nu primitive mod c.
 * Throws for (k, c) = (2, 1).
 */
QExpansion eisenstein_E(unsigned k, const DirichletCharacter& nu, std::uint64_t truncation);

/// E_2(tau) - u E_2(u tau).
QExpansion eisenstein_E2u(std::uint64_t u, std::uint64_t truncation);

/// Coefficient n of the output is coefficient pn of the input. The default
/// keeps everything the input determines.
QExpansion apply_Up(const QExpansion& f, std::uint64_t p);
QExpansion apply_Up(const QExpansion& f, std::uint64_t p, std::uint64_t desired_truncation);
QExpansion apply_Vm(const QExpansion& f, std::uint64_t m);
/// a_n -> a_n psi(n); level lcm(level, f^2) with f the conductor of psi.
QExpansion twist(const QExpansion& f, const DirichletCharacter& psi);
/// a_n -> a_{rn} + r^(k-1) a_{n/r}, for primes r not dividing the level.
QExpansion hecke_T(const QExpansion& f, std::uint64_t r);
/// f - beta V_p f.
QExpansion stabilize(const QExpansion& f, std::uint64_t p, const CycloElement& beta);

/// a_n -> n a_n.
ModQExpansion theta_operator(const ModQExpansion& f);

/// Reduction of a q-series with rational coefficients mod ell.
ModQExpansion reduce_mod(const QExpansion& f, std::uint64_t ell);

/**
 * E' = prod_i (a_{p_i} U_{p_i} - p_i) applied to E_2 mod ell.
 * A prime with sign -1 must satisfy p = -1 (mod ell); ell | 6N is rejected.
 */
ModQExpansion eprime_weight2_steinberg(const std::vector<std::pair<std::uint64_t, int>>& signs, std::uint64_t ell,
                                       std::uint64_t truncation);

/**
 * E' = E + sum_j (-1)^j sum_{i_1<..<i_j} P nu^-1(P) E(P tau), P = p_{i_1}...p_{i_j},
 * with P replaced by P^(k-1) in weight k. U_{p_j} acts on it by nu(p_j).
 */
QExpansion eprime_twisted(const DirichletCharacter& nu, const std::vector<std::uint64_t>& steinberg_primes,
                          std::uint64_t truncation, unsigned k = 2);

/// Constant term of E at the cusp u/v of Gamma0(c^2); zero unless v = c.
CycloElement constant_term_E(const DirichletCharacter& nu, unsigned k, std::uint64_t u, std::uint64_t v);

/// Constant term at 1/c of the weight-2 E': Upsilon(1/c) * prod (1 - 1/p_i).
CycloElement constant_term_Eprime(const DirichletCharacter& nu, const std::vector<std::uint64_t>& steinberg_primes);

/**
 * (1/2) sum_l sum_{j coprime to c} nu(-j^2/u) sum'_{|m| <= M, m = (j + lc)/u mod c^2} m^-k,
 * which tends to nu(-u) L(k, nu^2) as M grows.
 */
std::complex<long double> lattice_sum_oracle(const DirichletCharacter& nu, unsigned k, std::uint64_t M_max,
                                             std::uint64_t u = 1);

}  // namespace exprimes

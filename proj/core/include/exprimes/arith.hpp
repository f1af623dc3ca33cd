#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace exprimes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/**
 * An integer together with its complete factorization.
 *
 * The sign lives on value(); factors() describes |value|, strictly increasing
 * in prime. A factor above the deterministic Miller-Rabin range is only a
 * probable prime, and probable() reports that.
 */
class FactoredInteger {
public:
    FactoredInteger() : value_(1) {}
    FactoredInteger(Integer value, std::vector<PrimePower> factors, bool probable = false);

    const Integer& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    bool probable() const { return probable_; }
    int sign() const { return sgn(value_); }

    std::vector<Integer> primes() const;
    /// Re-multiplies the factors; true iff the product equals |value|.
    bool verify() const;
    /// "2^4*3*5*61", "1" for units, "-" prefix for negatives.
    std::string to_string() const;

private:
    Integer value_;
    std::vector<PrimePower> factors_;
    bool probable_ = false;
};

/// Bases 2..41 are a proof of primality below this bound.
const Integer& deterministic_primality_limit();

bool is_probable_prime(const Integer& n, int extra_rounds = 20);
/// True iff n is prime; above deterministic_primality_limit() the answer is probabilistic.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// Factorizes |n| by trial division to 10^6 then Pollard rho (Brent).
FactoredInteger factorize(const Integer& n);
FactoredInteger factorize(long n);

/// lcm(p^k - 1, p^(k-2) - 1) for even k >= 4.
Integer lcm_pow_minus_one(const Integer& p, unsigned k);

/// Sorted, de-duplicated union of the prime supports.
std::vector<Integer> prime_divisor_union(std::span<const FactoredInteger> sets);

// Small-integer helpers used throughout.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Prime factorization of a machine integer, as (p, e) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
unsigned valuation(std::uint64_t n, std::uint64_t p);
bool is_squarefree(std::uint64_t n);
/// Largest c with c^2 | n.
std::uint64_t square_part_root(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

Integer ipow(const Integer& base, unsigned long exp);
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace exprimes

#pragma once

#include "exprimes/cyclotomic.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace exprimes {

/**
 * Structure of (Z/mZ)^*: one cyclic generator per odd prime power (its
 * smallest primitive root), -1 for 4 | m, and 5 for 8 | m. Primes are taken
 * in increasing order, and for the prime 2 the generator -1 comes before 5.
 */
class CharacterGroup {
public:
    static std::shared_ptr<const CharacterGroup> get(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    std::size_t rank() const { return orders_.size(); }
    const std::vector<std::uint64_t>& generator_orders() const { return orders_; }
    /// Generators as residues mod m (CRT-lifted, 1 on the other components).
    const std::vector<std::uint64_t>& generators() const { return generators_; }
    /// Prime power of each generator's component.
    const std::vector<std::uint64_t>& component_moduli() const { return component_moduli_; }
    std::uint64_t size() const { return size_; }

    /// Discrete logs of a mod m, or false when gcd(a, m) > 1.
    bool log(std::uint64_t a, std::vector<std::uint64_t>& out) const;

private:
    explicit CharacterGroup(std::uint64_t modulus);

    std::uint64_t modulus_;
    std::uint64_t size_ = 1;
    std::vector<std::uint64_t> orders_;
    std::vector<std::uint64_t> generators_;
    std::vector<std::uint64_t> component_moduli_;
    // One entry per residue; logs_[a * rank + i], or kNoLog when not a unit.
    std::vector<std::uint32_t> logs_;
};

enum class CharacterFilter { All, Primitive, EvenPrimitive };

/**
 * A Dirichlet character mod m, stored as exponents x_i with chi(g_i) = exp(2 pi i x_i / ord(g_i)).
 *
 * Externally a character is addressed as (modulus, index): the index reads the
 * exponent tuple as a mixed-radix number with the first generator most
 * significant, so index 0 is the trivial character.
 */
class DirichletCharacter {
public:
    /// Trivial character mod 1.
    DirichletCharacter();
    DirichletCharacter(std::uint64_t modulus, std::vector<std::uint64_t> exponents);
    static DirichletCharacter trivial(std::uint64_t modulus);
    static DirichletCharacter from_index(std::uint64_t modulus, std::uint64_t index);

    std::uint64_t modulus() const { return group_->modulus(); }
    std::uint64_t index() const;
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    const CharacterGroup& group() const { return *group_; }

    std::uint64_t order() const { return order_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_even() const { return even_; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_trivial() const { return order_ == 1; }

    /// chi(a) = zeta_order^t; returns -1 when gcd(a, m) > 1.
    long value_exponent(long a) const;
    /// chi(a) in Q(zeta_order); zero when gcd(a, m) > 1.
    CycloElement value(long a) const;
    std::vector<CycloElement> generator_images() const;

    DirichletCharacter primitive_associate() const;
    /// The character mod a multiple of m induced by this one.
    DirichletCharacter lift(std::uint64_t new_modulus) const;
    DirichletCharacter inverse() const;
    DirichletCharacter pow(long e) const;
    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

    /// "chi_9[2]" style label.
    std::string label() const;

private:
    void finish();

    std::shared_ptr<const CharacterGroup> group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t order_ = 1;
    std::uint64_t conductor_ = 1;
    bool even_ = true;
};

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t modulus, CharacterFilter filter);

/// epsilon = (primitive associate of nu^2)^(-1).
DirichletCharacter square_inverse_eps(const DirichletCharacter& nu);

/// W(psi) = sum_{a=1}^{f} psi(a) zeta_f^a in Q(zeta_lcm(f, ord psi)); psi must be primitive.
CycloElement gauss_sum_exact(const DirichletCharacter& psi);

}  // namespace exprimes

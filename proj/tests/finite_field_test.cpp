#include "exprimes/finite_field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace exprimes;

namespace {

FpPoly random_poly(std::mt19937_64& rng, unsigned deg, std::uint64_t ell) {
    FpPoly f(deg + 1);
    for (auto& c : f) c = rng() % ell;
    f[deg] = 1;
    return f;
}

// Number of roots in F_ell by evaluation.
unsigned count_roots(const FpPoly& f, std::uint64_t ell) {
    unsigned n = 0;
    for (std::uint64_t x = 0; x < ell; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = (mulmod_u64(v, x, ell) + f[i]) % ell;
        n += v == 0;
    }
    return n;
}

// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
bool irreducible_by_search(const FpPoly& f, std::uint64_t ell) {
    const long d = fp::degree(f);
    for (long e = 1; e <= d / 2; ++e) {
        std::uint64_t total = 1;
        for (long i = 0; i < e; ++i) total *= ell;
        for (std::uint64_t code = 0; code < total; ++code) {
            FpPoly g(e + 1);
            std::uint64_t c = code;
            for (long i = 0; i < e; ++i) g[i] = c % ell, c /= ell;
            g[e] = 1;
            if (fp::mod(f, g, ell).empty()) return false;
        }
    }
    return d >= 1;
}

}  // namespace

TEST(FiniteField, FactorProductAndIrreducibility) {
    std::mt19937_64 rng(17);
    for (std::uint64_t ell : {2u, 3u, 5u, 7u, 13u, 43u, 1171u}) {
        for (int i = 0; i < 40; ++i) {
            const FpPoly f = random_poly(rng, 1 + rng() % 9, ell);
            const auto fac = fp::factor(f, ell);
            FpPoly prod{1};
            for (const auto& g : fac) {
                EXPECT_TRUE(fp::is_irreducible(g.poly, ell));
                EXPECT_EQ(g.poly.back(), 1u);
                for (unsigned m = 0; m < g.multiplicity; ++m) prod = fp::mul(prod, g.poly, ell);
            }
            EXPECT_EQ(prod, f) << fp::to_string(f);
            unsigned linear = 0;
            for (const auto& g : fac)
                if (fp::degree(g.poly) == 1) ++linear;
            if (ell < 100) {
                unsigned distinct_roots = count_roots(f, ell);
                EXPECT_EQ(linear, distinct_roots);
            }
        }
    }
}

TEST(FiniteField, IrreducibilityMatchesSearch) {
    std::mt19937_64 rng(23);
    for (std::uint64_t ell : {2u, 3u, 5u}) {
        for (int i = 0; i < 80; ++i) {
            const FpPoly f = random_poly(rng, 1 + rng() % 6, ell);
            EXPECT_EQ(fp::is_irreducible(f, ell), irreducible_by_search(f, ell)) << fp::to_string(f) << " mod " << ell;
        }
    }
}

TEST(FiniteField, Level81FieldPolyMod5) {
    // x^4 + 3x^3 - 84x^2 - 72x + 792 = (x + 4)(x^3 + 4x^2 + 3) mod 5
    const QPoly f({792, -72, -84, 3, 1});
    const auto fac = fp::factor(fp::reduce(f, 5), 5);
    ASSERT_EQ(fac.size(), 2u);
    EXPECT_EQ(fp::to_string(fac[0].poly), "x + 4");
    EXPECT_EQ(fp::to_string(fac[1].poly), "x^3 + 4*x^2 + 3");
}

TEST(FiniteField, RepeatedFactors) {
    const std::uint64_t ell = 3;
    FpPoly g{1, 1};           // x + 1
    FpPoly h{2, 0, 1};        // x^2 + 2 = (x+1)(x+2)
    FpPoly f = fp::mul(fp::mul(g, g, ell), fp::mul(h, fp::mul(g, g, ell), ell), ell);
    f = fp::mul(f, fp::mul(g, g, ell), ell);  // (x+1)^7 (x+2), with a cube inside
    const auto fac = fp::factor(f, ell);
    FpPoly prod{1};
    for (const auto& x : fac)
        for (unsigned m = 0; m < x.multiplicity; ++m) prod = fp::mul(prod, x.poly, ell);
    EXPECT_EQ(prod, f);
    ASSERT_EQ(fac.size(), 2u);
    EXPECT_EQ(fac[0].multiplicity, 7u);
}

TEST(FiniteField, FieldArithmetic) {
    for (auto [ell, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 4}, {3, 3}, {5, 3}, {43, 2}, {7, 6}}) {
        const FiniteField F(ell, d);
        EXPECT_TRUE(fp::is_irreducible(F.modulus(), ell));
        std::mt19937_64 rng(ell * 100 + d);
        const Integer q = F.order();
        for (int i = 0; i < 50; ++i) {
            FqElem a(d), b(d);
            for (auto& x : a) x = rng() % ell;
            for (auto& x : b) x = rng() % ell;
            EXPECT_EQ(F.pow(a, q), a);
            EXPECT_EQ(F.mul(F.add(a, b), F.sub(a, b)), F.sub(F.mul(a, a), F.mul(b, b)));
            if (!F.is_zero(a)) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
            EXPECT_EQ(F.frobenius(F.mul(a, b)), F.mul(F.frobenius(a), F.frobenius(b)));
            EXPECT_EQ(F.frobenius(a), F.pow(a, Integer(std::to_string(ell))));
        }
    }
    EXPECT_EQ(FiniteField(5, 3).modulus(), FiniteField(5, 3).modulus());
}

TEST(FiniteField, RootsAgreeWithSearch) {
    std::mt19937_64 rng(3);
    for (auto [ell, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 3}, {7, 2}, {11, 2}}) {
        const FiniteField F(ell, d);
        for (int i = 0; i < 30; ++i) {
            const FpPoly f = random_poly(rng, 1 + rng() % 6, ell);
            EXPECT_EQ(roots_in_field(F, f), roots_by_search(F, f)) << fp::to_string(f);
        }
    }
}

TEST(FiniteField, QuadraticIrreducibility) {
    for (auto [ell, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {5, 3}, {7, 2}}) {
        const FiniteField F(ell, d);
        std::mt19937_64 rng(ell + d);
        for (int i = 0; i < 60; ++i) {
            FqElem b(d), c(d);
            for (auto& x : b) x = rng() % ell;
            for (auto& x : c) x = rng() % ell;
            bool has_root = false;
            std::vector<std::uint64_t> digits(d, 0);
            for (;;) {
                const FqElem x(digits.begin(), digits.end());
                if (F.is_zero(F.add(F.add(F.mul(x, x), F.mul(b, x)), c))) {
                    has_root = true;
                    break;
                }
                unsigned j = 0;
                while (j < d && ++digits[j] == ell) digits[j++] = 0;
                if (j == d) break;
            }
            EXPECT_EQ(quadratic_is_irreducible(F, b, c), !has_root);
        }
    }
}

TEST(FiniteField, ReductionAndErrors) {
    EXPECT_EQ(fp::reduce(Rational(-9, 4), 5), 4u);  // -9 = 1 and 1/4 = 4 mod 5
    EXPECT_THROW(fp::reduce(Rational(1, 2), 2), DomainError);
    EXPECT_THROW(FiniteField(4, 2), DomainError);
    const FiniteField F(3, 2);
    EXPECT_THROW(is_square_in_field(FiniteField(2, 2), FqElem{1, 0}), DomainError);
    EXPECT_TRUE(is_square_in_field(F, F.one()));
    EXPECT_EQ(absolute_trace(F, F.one()), 2u);
}

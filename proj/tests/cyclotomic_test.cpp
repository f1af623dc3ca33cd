#include "exprimes/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace exprimes;

namespace {

CycloElement random_element(std::mt19937_64& rng, unsigned n, int span = 9) {
    std::vector<Rational> c(euler_phi(n));
    std::uniform_int_distribution<int> d(-span, span), den(1, 4);
    for (auto& x : c) {
        x = Rational(d(rng), den(rng));
        x.canonicalize();
    }
    return CycloElement(n, QPoly(c));
}

// prod over primitive n-th roots, evaluated in long double.
std::complex<long double> numeric_norm(const CycloElement& a) {
    const unsigned n = a.index();
    std::complex<long double> prod = 1;
    for (unsigned j = 1; j <= n; ++j) {
        if (gcd_u64(j, n) != 1) continue;
        const long double t = 2 * std::acos(-1.0L) * j / n;
        prod *= a.as_poly().eval(std::complex<long double>(std::cos(t), std::sin(t)));
    }
    return prod;
}

}  // namespace

TEST(Cyclotomic, NormIsMultiplicative) {
    std::mt19937_64 rng(2024);
    const unsigned idx[] = {1, 3, 4, 5, 6, 7, 8, 9, 12, 15};
    for (int i = 0; i < 1000; ++i) {
        const unsigned n = idx[i % 10];
        const CycloElement a = random_element(rng, n), b = random_element(rng, n);
        ASSERT_EQ((a * b).norm(), a.norm() * b.norm()) << a.to_string() << " * " << b.to_string();
    }
}

TEST(Cyclotomic, NormMatchesProductOfEmbeddings) {
    std::mt19937_64 rng(5);
    for (unsigned n : {3u, 5u, 7u, 8u, 9u, 12u}) {
        for (int i = 0; i < 20; ++i) {
            const CycloElement a = random_element(rng, n, 5);
            const auto z = numeric_norm(a);
            const double exact = a.norm().get_d();
            EXPECT_NEAR(static_cast<double>(z.real()), exact, 1e-9 * std::max(1.0, std::abs(exact)));
            EXPECT_NEAR(static_cast<double>(z.imag()), 0.0, 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST(Cyclotomic, FieldAxioms) {
    std::mt19937_64 rng(9);
    for (unsigned n : {3u, 4u, 7u, 12u}) {
        for (int i = 0; i < 30; ++i) {
            const CycloElement a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloElement::rational(1));
            EXPECT_EQ(a.galois(-1).galois(-1), a);
            long j = 2;
            while (gcd_u64(j, n) != 1) ++j;
            EXPECT_EQ((a * b).galois(j), a.galois(j) * b.galois(j));
            EXPECT_EQ((a + b).norm(), (a + b).galois(j).norm());
        }
    }
}

TEST(Cyclotomic, RootsOfUnity) {
    const CycloElement z3 = CycloElement::zeta(3);
    EXPECT_EQ(z3 * z3 + z3 + CycloElement::rational(1), CycloElement());
    EXPECT_EQ(z3.pow(3), CycloElement::rational(1));
    EXPECT_EQ(CycloElement::zeta(6, 2), z3);
    EXPECT_EQ(CycloElement::zeta(6, 3), CycloElement::rational(-1));
    EXPECT_EQ(CycloElement::zeta(4).pow(2), CycloElement::rational(-1));
    EXPECT_EQ(z3.embed(12), CycloElement::zeta(12, 4));
    EXPECT_EQ(z3.norm(), 1);
    EXPECT_EQ((CycloElement::rational(1) - z3).norm(), 3);
    EXPECT_EQ(z3.trace(), -1);
    EXPECT_EQ(CycloElement::zeta(8).trace(), 0);
}

TEST(Cyclotomic, MixedIndicesEmbedIntoLcm) {
    const CycloElement s = CycloElement::zeta(3) + CycloElement::zeta(4);
    EXPECT_EQ(s.index(), 12u);
    const auto c = s.to_complex();
    EXPECT_NEAR(c.real(), -0.5, 1e-12);
    EXPECT_NEAR(c.imag(), std::sqrt(3.0) / 2 + 1, 1e-12);
}

TEST(Cyclotomic, NormOfBernoulliQuotientMod9) {
    // (751 z + 1172) / 3 in Q(zeta_3) has norm 352471/3 = 7 * 43 * 1171 / 3.
    const CycloElement b = CycloElement(3, QPoly({1172, 751})).scale(Rational(1, 3));
    EXPECT_EQ(b.norm(), Rational(352471, 3));
    EXPECT_EQ(352471, 7 * 43 * 1171);
    EXPECT_EQ(b.to_string(), "1172/3+751/3*z");
}

TEST(Cyclotomic, NumericEmbeddingPrecision) {
    const CycloElement a = CycloElement(7, QPoly({1, -2, 0, 5}));
    const BigComplex hi = a.embed_numeric(200);
    const auto lo = a.to_complex();
    EXPECT_NEAR(hi.re.to_double(), lo.real(), 1e-14);
    EXPECT_NEAR(hi.im.to_double(), lo.imag(), 1e-14);
}

TEST(Cyclotomic, ToStringFormat) {
    EXPECT_EQ(CycloElement(3, QPoly({-32, -31})).to_string(), "-32-31*z");
    EXPECT_EQ(CycloElement(5, QPoly({0, 0, 1})).to_string(), "z^2");
    EXPECT_EQ(CycloElement().to_string(), "0");
}

#include "exprimes/residue.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace exprimes;

namespace {

const QPoly kF81({792, -72, -84, 3, 1});
const QPoly kF11({-2, -2, 1});

// prod_{i,j} (P(alpha_i) - Q(zeta_j)) in long double, for comparison with the exact resultant.
long double numeric_compositum_norm(const QPoly& P, const QPoly& Q, const QPoly& f, unsigned n) {
    std::complex<long double> prod = 1;
    for (const auto& a : complex_roots(f)) {
        for (unsigned j = 1; j <= std::max(n, 1u); ++j) {
            if (gcd_u64(j, std::max(n, 1u)) != 1) continue;
            const long double t = 2 * std::acos(-1.0L) * j / std::max(n, 1u);
            prod *= P.eval(a) - Q.eval(std::complex<long double>(std::cos(t), std::sin(t)));
        }
    }
    return prod.real();
}

}  // namespace

TEST(Residue, PointsAboveFive) {
    const auto pts = find_residue_points(kF81, 1, 5);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0].ideal(), "(5, a + 4)");
    EXPECT_EQ(pts[1].ideal(), "(5, a^3 + 4*a^2 + 3)");
    EXPECT_EQ(pts[1].field->degree(), 3u);
}

TEST(Residue, PointsWithZeta) {
    // Over 43: f mod 43 and Phi_3 mod 43 (43 = 1 mod 3) split; one orbit per pair of roots.
    const auto pts = find_residue_points(kF81, 3, 43);
    std::size_t deg1 = 0;
    for (const auto& p : pts) {
        EXPECT_TRUE(p.zeta.has_value());
        const FiniteField& F = *p.field;
        EXPECT_TRUE(F.is_zero(F.eval(fp::reduce(kF81, 43), p.alpha)));
        const FqElem z = *p.zeta;
        EXPECT_TRUE(F.is_zero(F.add(F.add(F.mul(z, z), z), F.one())));
        if (F.degree() == 1) ++deg1;
    }
    EXPECT_GT(deg1, 0u);
    // Orbit count: sum over factor pairs of gcd(d1, d2).
    const auto ff = fp::factor(fp::reduce(kF81, 43), 43);
    const auto fz = fp::factor(fp::reduce(cyclotomic_polynomial(3), 43), 43);
    std::size_t want = 0;
    for (const auto& a : ff)
        for (const auto& b : fz) want += gcd_u64(fp::degree(a.poly), fp::degree(b.poly));
    EXPECT_EQ(pts.size(), want);
}

TEST(Residue, ReduceRespectsRingStructure) {
    for (std::uint64_t ell : {5u, 7u, 13u}) {
        for (const auto& p : find_residue_points(kF11, 3, ell)) {
            const FiniteField& F = *p.field;
            const CycloElement x(3, QPoly({2, 5})), y(3, QPoly({-1, 7}));
            EXPECT_EQ(p.reduce(x * y), F.mul(p.reduce(x), p.reduce(y)));
            EXPECT_EQ(p.reduce(x + y), F.add(p.reduce(x), p.reduce(y)));
            EXPECT_EQ(p.reduce(CycloElement::zeta(6)), F.neg(F.mul(p.reduce(CycloElement::zeta(3)), p.reduce(CycloElement::zeta(3)))));
            EXPECT_EQ(p.reduce(CycloElement::rational(-1)), F.neg(F.one()));
            EXPECT_EQ(p.reduce(CycloElement::zeta(2)), F.neg(F.one()));
            EXPECT_THROW(p.reduce(CycloElement::zeta(5)), DomainError);
            EXPECT_THROW(p.reduce(std::vector<Rational>{Rational(1, static_cast<long>(ell))}), DenominatorObstruction);
        }
    }
}

TEST(Residue, CompositumNormMatchesNumeric) {
    const QPoly P({-6, 1}), Q({0, -1});  // alpha + zeta - 6
    const Rational n = compositum_norm(P, Q, kF81, 3);
    EXPECT_EQ(n.get_den(), 1);
    EXPECT_NEAR(static_cast<double>(numeric_compositum_norm(P, Q, kF81, 3)), n.get_d(), 1e-6 * std::abs(n.get_d()));
    EXPECT_EQ(n.get_num() % 43, 0);
    for (unsigned m : {1u, 4u, 5u}) {
        const QPoly P2({1, 2, 0, -1}), Q2({3, 0, 1});
        const Rational n2 = compositum_norm(P2, Q2, kF11, m);
        EXPECT_NEAR(static_cast<double>(numeric_compositum_norm(P2, Q2, kF11, m)), n2.get_d(), 1e-6 * std::max(1.0, std::abs(n2.get_d())));
    }
}

TEST(Residue, ElevenFourAIdeals) {
    auto ideals = [](std::uint64_t ell) {
        std::vector<std::string> out;
        for (const auto& p : find_residue_points(kF11, 1, ell)) out.push_back(p.ideal());
        return out;
    };
    EXPECT_EQ(ideals(2), std::vector<std::string>{"(2, a)"});
    EXPECT_EQ(ideals(3), std::vector<std::string>{"(3, a + 2)"});
    EXPECT_EQ(ideals(5), std::vector<std::string>{"(5, a^2 + 3*a + 3)"});
    // 2a - 3 and 2a - 1 mod 11 are a - 7 and a - 6.
    EXPECT_EQ(ideals(11), (std::vector<std::string>{"(11, a + 4)", "(11, a + 5)"}));
    // a + 7 and a - 9.
    EXPECT_EQ(ideals(61), (std::vector<std::string>{"(61, a + 7)", "(61, a + 52)"}));
}

#include "exprimes/bounds.hpp"
#include "exprimes/verifier.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace exprimes;
using testing_support::fixture;

namespace {

const DirichletCharacter& nu9() {
    static const DirichletCharacter nu = DirichletCharacter::from_index(9, 2);
    return nu;
}

VerifyOptions with_nu(const DirichletCharacter& nu) {
    VerifyOptions opt;
    opt.nu = nu;
    return opt;
}

const ScanPoint* point_with(const ScanResult& s, const std::string& ideal) {
    for (const auto& p : s.points)
        if (p.point.ideal() == ideal) return &p;
    return nullptr;
}

}  // namespace

TEST(Verifier, Level81CertifiedPrimes) {
    for (std::uint64_t ell : {7u, 43u, 1171u}) {
        const auto r = verify_reducible(fixture("81-6c.json"), ell, with_nu(nu9()));
        EXPECT_EQ(r.verdict, Verdict::Certified) << ell << ": " << r.reason;
        EXPECT_GE(r.checked_up_to, r.sturm);
        EXPECT_EQ(r.sturm, 54u);
        ASSERT_TRUE(r.witness.has_value());
    }
}

TEST(Verifier, Level81WitnessAt43) {
    // alpha-bar + zeta-bar = 6 in the residue field.
    const auto r = verify_reducible(fixture("81-6c.json"), 43, with_nu(nu9()));
    ASSERT_TRUE(r.witness.has_value());
    const ResiduePoint& w = *r.witness;
    ASSERT_TRUE(w.zeta.has_value());
    const FiniteField& F = *w.field;
    EXPECT_EQ(F.add(w.alpha, *w.zeta), F.from_int(6));
    EXPECT_EQ(F.degree(), 1u);
}

TEST(Verifier, Level81NormModeAtTwoAndThree) {
    for (std::uint64_t ell : {2u, 3u}) {
        VerifyOptions opt;
        opt.mode = VerifyMode::Norm;
        const auto r = verify_reducible(fixture("81-6c.json"), ell, opt);
        EXPECT_EQ(r.verdict, Verdict::NormCertified) << ell << ": " << r.reason;
        EXPECT_EQ(r.mode, VerifyMode::Norm);
        ASSERT_FALSE(r.norm_witnesses.empty());
        for (const auto& w : r.norm_witnesses) {
            if (w.n % ell == 0) continue;
            EXPECT_TRUE(w.zero || w.valuation >= 1) << "ell=" << ell << " n=" << w.n;
            if (!w.zero) EXPECT_EQ(w.norm % Integer(static_cast<unsigned long>(ell)), 0);
        }
    }
    // Auto mode falls back to norms at 2, where a_5 has denominator 4.
    const auto r2 = verify_reducible(fixture("81-6c.json"), 2);
    EXPECT_EQ(r2.mode, VerifyMode::Norm);
    EXPECT_EQ(r2.verdict, Verdict::NormCertified);
    VerifyOptions residue;
    residue.mode = VerifyMode::Residue;
    EXPECT_EQ(verify_reducible(fixture("81-6c.json"), 2, residue).verdict, Verdict::Inconclusive);
}

TEST(Verifier, Level81ScanAtFive) {
    const auto s = frobenius_scan(fixture("81-6c.json"), 5, 100);
    ASSERT_EQ(s.points.size(), 2u);
    for (const auto& p : s.points) {
        ASSERT_TRUE(p.witness.has_value()) << p.point.ideal();
        EXPECT_EQ(*p.witness, 2u);
    }
    EXPECT_NE(point_with(s, "(5, a + 4)"), nullptr);
    EXPECT_NE(point_with(s, "(5, a^3 + 4*a^2 + 3)"), nullptr);
    const auto r = verify_reducible(fixture("81-6c.json"), 5);
    EXPECT_EQ(r.verdict, Verdict::Refuted);
    ASSERT_TRUE(r.scan.has_value());
}

TEST(Verifier, Level81PrintedCoefficientsOnly) {
    const auto& printed = fixture("81-6c-printed.json");
    for (std::uint64_t ell : {7u, 43u, 1171u}) {
        const auto r = verify_reducible(printed, ell, with_nu(nu9()));
        EXPECT_EQ(r.verdict, Verdict::Inconclusive) << ell;
        EXPECT_EQ(r.checked_up_to, 5u);
        EXPECT_NE(r.reason.find("insufficient coefficients"), std::string::npos) << r.reason;
        ASSERT_FALSE(r.candidates.empty());
        bool window_ok = false;
        for (const auto& c : r.candidates) window_ok |= !c.first_mismatch && c.agrees_to == 5;
        EXPECT_TRUE(window_ok) << ell;
    }
    VerifyOptions opt;
    opt.mode = VerifyMode::Norm;
    EXPECT_EQ(verify_reducible(printed, 2, opt).verdict, Verdict::Inconclusive);
    const auto s = frobenius_scan(printed, 5, 100);
    ASSERT_EQ(s.points.size(), 2u);
    for (const auto& p : s.points) {
        EXPECT_EQ(p.witness, std::optional<std::uint64_t>(2));
        EXPECT_TRUE(p.partial);
    }
}

TEST(Verifier, Level11ScanTable) {
    const auto& fx = fixture("11-4a.json");
    struct Row {
        std::uint64_t ell;
        std::string ideal;
        std::optional<std::uint64_t> witness;
    };
    const std::vector<Row> rows{
        {2, "(2, a)", 3},
        {3, "(3, a + 2)", 2},
        {5, "(5, a^2 + 3*a + 3)", 2},
        {11, "(11, a + 4)", 2},            // 2 alpha - 3
        {11, "(11, a + 5)", std::nullopt},  // 2 alpha - 1
        {61, "(61, a + 52)", std::nullopt},  // alpha - 9
        {61, "(61, a + 7)", 2},             // alpha + 7
    };
    for (const auto& row : rows) {
        const auto s = frobenius_scan(fx, row.ell, 100);
        const ScanPoint* p = point_with(s, row.ideal);
        ASSERT_NE(p, nullptr) << row.ideal;
        EXPECT_EQ(p->witness, row.witness) << row.ideal;
    }
}

TEST(Verifier, Level11CertifiedAt61) {
    const auto r = verify_reducible(fixture("11-4a.json"), 61);
    EXPECT_EQ(r.verdict, Verdict::Certified) << r.reason;
    EXPECT_EQ(r.sturm, 4u);
    EXPECT_EQ(r.checked_up_to, 5u);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->ideal(), "(61, a + 52)");
    // a_n = sigma_3(n) at alpha = 9 for n <= 5
    const FiniteField& F = *r.witness->field;
    const long sigma3[] = {0, 1, 9, 28, 73, 126};
    for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_EQ(r.witness->reduce(fixture("11-4a.json").coefficient(n)), F.from_int(sigma3[n]));
    const auto full = verify_reducible(fixture("11-4a-full.json"), 61);
    EXPECT_EQ(full.verdict, Verdict::Certified);
    EXPECT_EQ(verify_reducible(fixture("11-4a-full.json"), 7).verdict, Verdict::Refuted);
}

TEST(Verifier, Weight2SquarefreePath) {
    const auto r = verify(fixture("11a1.json"), 5);
    EXPECT_EQ(r.verdict, Verdict::Certified) << r.reason;
    const auto r7 = verify(fixture("11a1.json"), 7);
    EXPECT_EQ(r7.verdict, Verdict::Refuted);
    EXPECT_EQ(r7.refuted_at, std::optional<std::uint64_t>(0));
    const auto minus = verify(fixture("37a1.json"), 5);
    EXPECT_EQ(minus.verdict, Verdict::Refuted);
    EXPECT_THROW(verify(fixture("11a1.json"), 3), DomainError);
    EXPECT_THROW(verify(fixture("11a1.json"), 11), DomainError);
}

TEST(Verifier, SteinbergConsistency) {
    const auto a = steinberg_consistency(fixture("11a1.json"));
    EXPECT_TRUE(a.ok);
    EXPECT_EQ(a.signs.at(11), 1);
    const auto b = steinberg_consistency(fixture("11-4a-full.json"));
    EXPECT_EQ(b.signs.at(11), -1);
    EXPECT_TRUE(steinberg_consistency(fixture("81-6c.json")).signs.empty());
}

TEST(Verifier, EisensteinCandidatesMatchLevel) {
    const auto cands = eisenstein_candidates(4, 11, DirichletCharacter(), 30);
    ASSERT_EQ(cands.size(), 2u);
    for (const auto& [desc, E] : cands) {
        EXPECT_EQ(E.level(), 11u);
        EXPECT_FALSE(desc.empty());
    }
}

TEST(Verifier, InvalidCharacterRejected) {
    // nu must be primitive with c^2 | N.
    EXPECT_THROW(verify_reducible(fixture("81-6c.json"), 7, with_nu(DirichletCharacter::from_index(9, 3))), DomainError);
    EXPECT_THROW(verify_reducible(fixture("81-6c.json"), 7, with_nu(DirichletCharacter::from_index(5, 1))), DomainError);
}

// Every prime certified reducible on the shipped fixtures is a bound-engine candidate.
TEST(Verifier, CertifiedPrimesAreCandidates) {
    struct Case {
        const char* file;
        std::vector<std::uint64_t> ells;
    };
    std::vector<std::uint64_t> small;
    for (auto p : primes_up_to(80)) small.push_back(p);
    small.push_back(1171);
    const std::vector<Case> cases{{"81-6c.json", small}, {"11-4a-full.json", small}, {"11-4a.json", small}, {"11a1.json", small}};
    int certified = 0;
    for (const auto& c : cases) {
        const auto& fx = fixture(c.file);
        const auto cand = reducible_candidates(fx.weight, fx.level);
        for (auto ell : c.ells) {
            VerificationResult r;
            try {
                r = verify(fx, ell);
            } catch (const DomainError&) {
                continue;  // weight 2 rejects ell | 6N
            }
            if (r.verdict == Verdict::Certified || r.verdict == Verdict::NormCertified) {
                ++certified;
                EXPECT_TRUE(cand.contains(Integer(static_cast<unsigned long>(ell)))) << c.file << " ell=" << ell;
            }
        }
    }
    EXPECT_GE(certified, 8);
}

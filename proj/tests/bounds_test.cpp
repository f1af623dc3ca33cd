#include "exprimes/bounds.hpp"
#include "exprimes/dimensions.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace exprimes;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Square-free N, k > 2: l | N, l <= k+1, or l | gcd_p lcm(p^k - 1, p^(k-2) - 1).
std::vector<Integer> squarefree_oracle(unsigned k, std::uint64_t N) {
    Integer g = 0;
    for (auto [p, e] : factor_u64(N)) {
        Integer a = ipow(Integer(static_cast<unsigned long>(p)), k) - 1;
        Integer b = ipow(Integer(static_cast<unsigned long>(p)), k - 2) - 1, l;
        mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.get_mpz_t());
    }
    std::vector<Integer> out;
    for (std::uint64_t l = 2; l <= 100000; ++l) {
        if (!is_prime_u64(l)) continue;
        if (N % l == 0 || l <= k + 1 || g % Integer(static_cast<unsigned long>(l)) == 0) out.emplace_back(static_cast<unsigned long>(l));
    }
    return out;
}

}  // namespace

TEST(Bounds, Level11Weight4) {
    const auto t0 = std::chrono::steady_clock::now();
    const CandidateSet s = reducible_candidates(4, 11);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);
    EXPECT_EQ(s.primes(), ints({2, 3, 5, 11, 61}));
}

TEST(Bounds, Level81Weight6) {
    const auto t0 = std::chrono::steady_clock::now();
    const CandidateSet s = reducible_candidates(6, 81);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
    EXPECT_EQ(s.primes(), ints({2, 3, 5, 7, 43, 1171}));
}

TEST(Bounds, OtherLevels) {
    EXPECT_EQ(reducible_candidates(2, 11).primes(), ints({2, 3, 5, 11}));
    const auto level1 = reducible_candidates(12, 1).primes();
    EXPECT_EQ(level1, ints({2, 3, 5, 7, 11, 13, 691}));
    // 2^5 exactly divides 1888: only 3 beyond l | N and l <= k+1.
    EXPECT_EQ(reducible_candidates(2, 1888).primes(), ints({2, 3, 59}));
}

TEST(Bounds, SquarefreeMatchesDirectComputation) {
    for (unsigned k : {4u, 6u, 8u}) {
        for (std::uint64_t N : {2u, 6u, 11u, 15u, 23u, 35u, 77u}) {
            std::vector<Integer> got;
            for (const auto& p : reducible_candidates(k, N).primes())
                if (p <= 100000) got.push_back(p);
            EXPECT_EQ(got, squarefree_oracle(k, N)) << "k=" << k << " N=" << N;
        }
    }
}

TEST(Bounds, StructuralClausesAlwaysPresent) {
    for (unsigned k : {2u, 4u, 6u}) {
        for (std::uint64_t N : {1u, 4u, 9u, 12u, 25u, 32u, 49u, 50u, 72u, 81u, 98u, 121u}) {
            const CandidateSet s = reducible_candidates(k, N);
            for (const auto& item : s.items()) {
                EXPECT_TRUE(is_prime(item.prime));
                EXPECT_FALSE(item.clauses.empty());
            }
            for (auto [p, e] : factor_u64(N)) EXPECT_TRUE(s.contains(Integer(static_cast<unsigned long>(p)))) << N;
            for (auto p : primes_up_to(k + 1)) EXPECT_TRUE(s.contains(Integer(static_cast<unsigned long>(p)))) << N;
        }
    }
}

TEST(Bounds, Weight2Signs) {
    const auto minus = reducible_weight2_signs({{37, -1}});
    EXPECT_TRUE(minus.impossible);
    EXPECT_TRUE(minus.candidates.items().empty());
    const auto plus = reducible_weight2_signs({{11, 1}});
    EXPECT_EQ(plus.divisor_of, 10);
    EXPECT_EQ(plus.candidates.primes(), ints({5}));
    const auto mixed = reducible_weight2_signs({{11, 1}, {19, -1}, {29, -1}});
    EXPECT_EQ(mixed.divisor_of, 10);
    EXPECT_EQ(mixed.candidates.primes(), ints({5}));
    EXPECT_THROW(reducible_weight2_signs({{11, 1}, {11, 1}}), DomainError);
    EXPECT_THROW(reducible_weight2_signs({}), DomainError);
}

TEST(Bounds, DihedralLevel1888) {
    const auto t0 = std::chrono::steady_clock::now();
    const DihedralResult r = dihedral_candidates(2, 1888, 5);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);
    EXPECT_FALSE(r.explicit_list);
    EXPECT_EQ(r.exponent, 5u);
    const double want = 3476092007703911714679.0;
    EXPECT_NEAR(r.bound_real.to_double() / want, 1.0, 1e-6);
    EXPECT_NEAR(r.bound.get_d() / want, 1.0, 1e-6);

    // Same quantity in long double: (2 sqrt(q))^5 with q = 24k/5 N^2 (1 + log log N).
    const long double N = 1888, q = 24.0L * 2 / 5 * N * N * (1 + std::log(std::log(N)));
    const long double direct = std::pow(2 * std::sqrt(q), 5.0L);
    EXPECT_NEAR(static_cast<double>(direct / want), 1.0, 1e-6);
    EXPECT_GE(r.bound_real.to_long_double(), direct * (1 - 1e-15L));
}

TEST(Bounds, DistinguishingIndex) {
    const auto d = dihedral_distinguishing_index(2, 1888);
    // (8/3) N^2 (3/2)(60/59) and 4 N^2 (3/2)(60/59)
    EXPECT_EQ(d.murty_bound, Rational(8, 3) * 1888 * 1888 * Rational(3, 2) * Rational(60, 59));
    EXPECT_EQ(d.coarse_bound, Rational(4) * 1888 * 1888 * Rational(3, 2) * Rational(60, 59));
    EXPECT_THROW(dihedral_distinguishing_index(2, 1), DomainError);
}

TEST(Bounds, DihedralExplicitListForSquarefreeLevel) {
    const DihedralResult r = dihedral_candidates(4, 11);
    EXPECT_TRUE(r.explicit_list);
    EXPECT_EQ(r.primes.primes(), ints({2, 3, 7, 11}));
    const DihedralResult r81 = dihedral_candidates(6, 81);
    EXPECT_EQ(r81.exponent_source, "dim_new");
    EXPECT_EQ(r81.exponent, 18u);
}

TEST(Bounds, ExceptionalImageAndFundamentalOrders) {
    EXPECT_EQ(exceptional_image_candidates(4, 11).primes(), ints({2, 3, 5, 7, 11, 13}));
    const auto o = fundamental_orders(43, 6);
    EXPECT_EQ(o.n, 42u);
    EXPECT_EQ(o.m, 44u);
    EXPECT_EQ(fundamental_orders(7, 4).n, 2u);
    EXPECT_THROW(fundamental_orders(5, 6), DomainError);
}

TEST(Bounds, ReportAssumptions) {
    const auto r = candidate_report(6, 81);
    ASSERT_FALSE(r.assumptions.empty());
    BoundOptions opt;
    opt.non_cm = true;
    opt.degree = 4;
    const auto r2 = candidate_report(6, 81, opt);
    EXPECT_EQ(r2.dihedral.exponent, 4u);
    EXPECT_EQ(r2.reducible.primes(), r.reducible.primes());
}

TEST(Bounds, SerialAndParallelAgree) {
    BoundOptions serial;
    serial.parallel = false;
    for (auto [k, N] : std::vector<std::pair<unsigned, std::uint64_t>>{{6, 81}, {4, 100}, {2, 225}, {8, 49}}) {
        const auto a = reducible_candidates(k, N, serial);
        const auto b = reducible_candidates(k, N);
        ASSERT_EQ(a.items().size(), b.items().size());
        for (std::size_t i = 0; i < a.items().size(); ++i) {
            EXPECT_EQ(a.items()[i].prime, b.items()[i].prime);
            EXPECT_EQ(a.items()[i].clauses, b.items()[i].clauses);
        }
    }
}

TEST(Bounds, FactorCacheRoundTripAndCorruption) {
    const auto dir = std::filesystem::temp_directory_path() / "exprimes_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        FactorCache cache(dir);
        BoundOptions opt;
        opt.cache = &cache;
        reducible_candidates(6, 81, opt);
        EXPECT_GT(cache.size(), 0u);
    }
    std::ifstream in(dir / "factors.txt");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    ASSERT_FALSE(text.empty());
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) EXPECT_NE(line.find('='), std::string::npos) << line;
    {
        std::ofstream out(dir / "factors.txt", std::ios::app);
        out << "100=2^2,5^3\n";  // wrong product
        out << "garbage\n";
        out << "15=3^1,5^1\n";
    }
    FactorCache again(dir);
    EXPECT_EQ(again.warnings().size(), 2u);
    EXPECT_EQ(again.factor(100).to_string(), "2^2*5^2");
    EXPECT_EQ(again.factor(15).to_string(), "3*5");
    std::filesystem::remove_all(dir);
}

TEST(Bounds, FactorLineFormat) {
    EXPECT_EQ(format_factor_line(factorize(14640)), "2^4,3^1,5^1,61^1");
    EXPECT_EQ(format_factor_line(factorize(1)), "1");
}

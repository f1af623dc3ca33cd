#include "exprimes/dimensions.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace exprimes {

namespace {

// Kronecker symbol (-d/p) for d in {1, 3} and an odd prime p, or p = 2.
int legendre_neg(std::uint64_t d, std::uint64_t p) {
    if (p == 2) return d == 1 ? 0 : -1;
    if (d == 3 && p == 3) return 0;
    if (d == 1) return p % 4 == 1 ? 1 : -1;
    return p % 3 == 1 ? 1 : -1;
}

}  // namespace

Rational LevelInvariants::genus_formula() const {
    Rational g = Rational(1) + Rational(static_cast<long>(index), 12) - Rational(static_cast<long>(nu2), 4) -
                 Rational(static_cast<long>(nu3), 3) - Rational(static_cast<long>(nu_inf), 2);
    g.canonicalize();
    return g;
}

LevelInvariants level_invariants(std::uint64_t N) {
    if (N == 0) throw DomainError("level must be positive");
    LevelInvariants inv;
    inv.level = N;
    const auto fac = factor_u64(N);
    std::uint64_t index = N;
    for (const auto& [p, e] : fac) index = index / p * (p + 1);
    inv.index = index;

    if (N % 4 == 0) {
        inv.nu2 = 0;
    } else {
        std::uint64_t v = 1;
        for (const auto& [p, e] : fac) v *= static_cast<std::uint64_t>(1 + legendre_neg(1, p));
        inv.nu2 = v;
    }
    if (N % 9 == 0) {
        inv.nu3 = 0;
    } else {
        std::uint64_t v = 1;
        for (const auto& [p, e] : fac) v *= static_cast<std::uint64_t>(1 + legendre_neg(3, p));
        inv.nu3 = v;
    }
    std::uint64_t cusps = 0;
    for (auto d : divisors(N)) cusps += euler_phi(gcd_u64(d, N / d));
    inv.nu_inf = cusps;

    const Rational g = inv.genus_formula();
    if (g.get_den() != 1) throw DomainError("genus formula did not produce an integer");
    inv.genus = g.get_num().get_si();
    return inv;
}

std::int64_t dim_cusp_forms(unsigned k, std::uint64_t N) {
    if (k % 2 != 0 || k == 0) throw DomainError("dim_cusp_forms: weight must be even and positive");
    const LevelInvariants inv = level_invariants(N);
    if (k == 2) return inv.genus;
    const auto kk = static_cast<std::int64_t>(k);
    return (kk - 1) * (inv.genus - 1) + (kk / 2 - 1) * static_cast<std::int64_t>(inv.nu_inf) +
           (kk / 4) * static_cast<std::int64_t>(inv.nu2) + (kk / 3) * static_cast<std::int64_t>(inv.nu3);
}

std::int64_t dim_new(unsigned k, std::uint64_t N) {
    static std::shared_mutex mu;
    static std::map<std::pair<unsigned, std::uint64_t>, std::int64_t> cache;
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find({k, N}); it != cache.end()) return it->second;
    }
    std::int64_t total = 0;
    for (auto M : divisors(N)) {
        std::int64_t beta = 1;
        for (const auto& [p, e] : factor_u64(N / M)) {
            if (e == 1)
                beta *= -2;
            else if (e == 2)
                beta *= 1;
            else
                beta = 0;
        }
        if (beta != 0) total += beta * dim_cusp_forms(k, M);
    }
    std::unique_lock lock(mu);
    cache[{k, N}] = total;
    return total;
}

std::uint64_t sturm_bound(unsigned k, std::uint64_t N) {
    const std::uint64_t num = static_cast<std::uint64_t>(k) * level_invariants(N).index;
    return (num + 11) / 12;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> cusps_gamma0(std::uint64_t N) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (auto v : divisors(N)) {
        const std::uint64_t g = gcd_u64(v, N / v);
        for (std::uint64_t r = 0; r < g; ++r) {
            if (gcd_u64(r, g) != 1) continue;
            std::uint64_t u = r == 0 ? g : r;
            while (gcd_u64(u, v) != 1) u += g;
            out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace exprimes

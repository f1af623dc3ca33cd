#pragma once

#include "exprimes/arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace exprimes {

struct LevelInvariants {
    std::uint64_t level = 1;
    std::uint64_t index = 1;   ///< [SL2(Z) : Gamma0(N)]
    std::uint64_t nu2 = 0;
    std::uint64_t nu3 = 0;
    std::uint64_t nu_inf = 0;
    std::int64_t genus = 0;

    /// 1 + index/12 - nu2/4 - nu3/3 - nu_inf/2, as an exact rational.
    Rational genus_formula() const;
};

LevelInvariants level_invariants(std::uint64_t N);

/// dim S_k(Gamma0(N)), k even >= 2.
std::int64_t dim_cusp_forms(unsigned k, std::uint64_t N);

/// Dimension of the new subspace, by Moebius-type inversion over divisors.
std::int64_t dim_new(unsigned k, std::uint64_t N);

/// ceil(k * index / 12).
std::uint64_t sturm_bound(unsigned k, std::uint64_t N);

/// Cusp representatives u/v of Gamma0(N): v | N, u mod gcd(v, N/v), gcd(u, v) = 1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> cusps_gamma0(std::uint64_t N);

}  // namespace exprimes

#pragma once

#include "exprimes/arith.hpp"
#include "exprimes/bigfloat.hpp"
#include "exprimes/factor_cache.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exprimes {

/// A prime with every clause that produced it, in the order found.
struct CandidatePrime {
    Integer prime;
    std::vector<std::string> clauses;
};

/// Sorted, deduplicated accumulation of (prime, clause) pairs.
class CandidateSet {
public:
    void add(const Integer& prime, const std::string& clause);
    void add_divisors(const FactoredInteger& n, const std::string& clause);
    void merge(const CandidateSet& other);
    bool contains(const Integer& prime) const;
    std::vector<Integer> primes() const;
    const std::vector<CandidatePrime>& items() const { return items_; }

private:
    std::vector<CandidatePrime> items_;
};

struct DistinguishingIndex {
    Rational murty_bound;   ///< (4k/3) N^2 prod_{p | 2N} (1 + 1/p)
    Rational coarse_bound;  ///< 2k N^2 prod_{p | N} (1 + 1/p)
    BigFloat rosser_bound;  ///< 4.8 k N^2 (1 + log log N), rounded up
};

struct DihedralResult {
    bool explicit_list = false;
    CandidateSet primes;
    Integer bound;
    unsigned exponent = 0;
    std::string exponent_source;  ///< "degree" or "dim_new"
    BigFloat bound_real{256};
    std::optional<DistinguishingIndex> index;
};

struct CandidateReport {
    unsigned k = 0;
    std::uint64_t N = 0;
    CandidateSet reducible;
    DihedralResult dihedral;
    CandidateSet exceptional_image;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
};

/// Options shared by the bound functions.
struct BoundOptions {
    std::optional<unsigned> degree;
    bool non_cm = false;
    FactorCache* cache = nullptr;
    bool parallel = true;
};

CandidateSet reducible_candidates(unsigned k, std::uint64_t N, const BoundOptions& opt = {},
                                  std::vector<std::string>* notes = nullptr);

struct Weight2SignReport {
    bool impossible = false;
    Integer divisor_of;      ///< ell must divide this (0 when impossible)
    CandidateSet constrained;  ///< prime divisors of divisor_of
    CandidateSet candidates;   ///< after removing ell | 6N
    std::vector<std::string> clauses;
};

Weight2SignReport reducible_weight2_signs(const std::vector<std::pair<std::uint64_t, int>>& signs);

DihedralResult dihedral_candidates(unsigned k, std::uint64_t N, std::optional<unsigned> degree = std::nullopt);
CandidateSet exceptional_image_candidates(unsigned k, std::uint64_t N);

struct FundamentalOrders {
    std::uint64_t n;  ///< (ell - 1) / gcd(ell - 1, k - 1)
    std::uint64_t m;  ///< (ell + 1) / gcd(ell + 1, k - 1)
};
FundamentalOrders fundamental_orders(std::uint64_t ell, unsigned k);

DistinguishingIndex dihedral_distinguishing_index(unsigned k, std::uint64_t N, mpfr_prec_t bits = 256);

CandidateReport candidate_report(unsigned k, std::uint64_t N, const BoundOptions& opt = {});

}  // namespace exprimes

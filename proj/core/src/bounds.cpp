#include "exprimes/bounds.hpp"

#include "exprimes/bernoulli.hpp"
#include "exprimes/characters.hpp"
#include "exprimes/dimensions.hpp"

#include <algorithm>
#include <future>

namespace exprimes {

void CandidateSet::add(const Integer& prime, const std::string& clause) {
    auto it = std::lower_bound(items_.begin(), items_.end(), prime,
                               [](const CandidatePrime& c, const Integer& p) { return c.prime < p; });
    if (it == items_.end() || it->prime != prime) it = items_.insert(it, CandidatePrime{prime, {}});
    if (std::find(it->clauses.begin(), it->clauses.end(), clause) == it->clauses.end()) it->clauses.push_back(clause);
}

void CandidateSet::add_divisors(const FactoredInteger& n, const std::string& clause) {
    for (const auto& pp : n.factors()) add(pp.prime, clause);
}

void CandidateSet::merge(const CandidateSet& other) {
    for (const auto& item : other.items_)
        for (const auto& c : item.clauses) add(item.prime, c);
}

bool CandidateSet::contains(const Integer& prime) const {
    return std::binary_search(items_.begin(), items_.end(), CandidatePrime{prime, {}},
                              [](const CandidatePrime& a, const CandidatePrime& b) { return a.prime < b.prime; });
}

std::vector<Integer> CandidateSet::primes() const {
    std::vector<Integer> out;
    for (const auto& item : items_) out.push_back(item.prime);
    return out;
}

namespace {

FactoredInteger factor_with(const BoundOptions& opt, const Integer& n) {
    return opt.cache ? opt.cache->factor(n) : factorize(n);
}

Integer integral_norm(const CycloElement& x) {
    const Rational r = x.norm();
    if (r.get_den() != 1) throw DomainError("norm of an algebraic integer is not integral");
    return abs(r.get_num());
}

std::string u(std::uint64_t v) { return std::to_string(v); }

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// Clauses coming from one primitive nu mod c in the square-part analysis.
CandidateSet nu_clauses(unsigned k, const DirichletCharacter& nu, const std::vector<std::uint64_t>& steinberg,
                        const BoundOptions& opt, std::vector<std::string>& notes) {
    CandidateSet out;
    const std::uint64_t c = nu.modulus();
    const DirichletCharacter eps = square_inverse_eps(nu);
    const DirichletCharacter eps_inv = eps.inverse();
    const std::string tag = "nu = " + nu.label() + ", eps = " + eps.label();
    for (const auto& [p, e] : factor_u64(c)) {
        const CycloElement x =
            CycloElement::rational(Rational(ipow(big(p), k))) - eps_inv.value(static_cast<long>(p));
        out.add_divisors(factor_with(opt, integral_norm(x)),
                         "l | N(p^" + std::to_string(k) + " - eps^-1(p)), p = " + u(p) + ", " + tag);
    }
    for (auto p : steinberg) {
        const CycloElement x = CycloElement::rational(Rational(ipow(big(p), 2))) - nu.pow(2).value(static_cast<long>(p));
        out.add_divisors(factor_with(opt, integral_norm(x)), "l | N(p_i^2 - nu^2(p_i)), p_i = " + u(p) + ", " + tag);
    }
    const auto num = bernoulli_norm_numerator(k, eps);
    if (num) {
        out.add_divisors(*num, "l | numerator N(B_{" + std::to_string(k) + ",eps}/" + std::to_string(2 * k) + "), " + tag);
    } else {
        notes.push_back("B_{" + std::to_string(k) + ",eps} = 0 for " + tag + "; clause vacuous");
    }
    return out;
}

CandidateSet over_primitive_nu(unsigned k, std::uint64_t c, const std::vector<std::uint64_t>& steinberg,
                               const BoundOptions& opt, std::vector<std::string>& notes) {
    const auto chars = enumerate_characters(c, CharacterFilter::Primitive);
    std::vector<CandidateSet> parts(chars.size());
    std::vector<std::vector<std::string>> part_notes(chars.size());
    if (opt.parallel && chars.size() > 1) {
        std::vector<std::future<void>> jobs;
        for (std::size_t i = 0; i < chars.size(); ++i)
            jobs.push_back(std::async(std::launch::async,
                                      [&, i] { parts[i] = nu_clauses(k, chars[i], steinberg, opt, part_notes[i]); }));
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t i = 0; i < chars.size(); ++i) parts[i] = nu_clauses(k, chars[i], steinberg, opt, part_notes[i]);
    }
    CandidateSet out;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        out.merge(parts[i]);
        notes.insert(notes.end(), part_notes[i].begin(), part_notes[i].end());
    }
    return out;
}

}  // namespace

CandidateSet reducible_candidates(unsigned k, std::uint64_t N, const BoundOptions& opt, std::vector<std::string>* notes_out) {
    if (k < 2 || k % 2 != 0) throw DomainError("reducible_candidates: weight must be even and >= 2");
    if (N == 0) throw DomainError("reducible_candidates: level must be positive");
    std::vector<std::string> notes;
    CandidateSet out;
    const auto fac = factor_u64(N);
    for (const auto& [p, e] : fac) out.add(big(p), "l | N");
    for (auto p : primes_up_to(k + 1)) out.add(big(p), "l <= k+1");

    const std::uint64_t c = square_part_root(N);
    const std::uint64_t sqfree = N / (c * c);
    const unsigned v2 = valuation(N, 2);
    const std::string ks = std::to_string(k);

    if (sqfree == 1) {
        // N = c^2 (N = 1 included, which gives the classical B_k/2k).
        for (const auto& [p, e] : fac)
            if (e == 2)
                out.add_divisors(factor_with(opt, big(p) * big(p) - 1), "p = +-1 mod l, p = " + u(p) + ", v_p(N) = 2");
        out.merge(over_primitive_nu(k, c, {}, opt, notes));
    } else if (c == 1) {
        if (k > 2) {
            Integer g = 0;
            for (const auto& [p, e] : fac) g = gcd(g, lcm_pow_minus_one(big(p), k));
            out.add_divisors(factor_with(opt, g), "l | gcd_i lcm(p_i^" + ks + "-1, p_i^" + std::to_string(k - 2) +
                                                      "-1) = " + to_string(g));
        } else {
            Integer L = 1;
            for (const auto& [p, e] : fac) L = lcm(L, big(p) * big(p) - 1);
            out.add_divisors(factor_with(opt, L), "l | lcm_i(p_i^2-1) = " + to_string(L));
        }
    } else if (v2 == 2 || (v2 >= 3 && v2 % 2 == 1)) {
        out.add(3, "l = 3, v_2(N) = " + std::to_string(v2));
    } else {
        std::vector<std::uint64_t> steinberg, odd_high;
        for (const auto& [p, e] : fac) {
            if (e == 1) steinberg.push_back(p);
            if (e >= 3 && e % 2 == 1) odd_high.push_back(p);
        }
        const bool last_case = k == 2 && odd_high.empty() && (c % 2 == 1 || c % 4 == 0);
        if (last_case) {
            for (const auto& [p, e] : fac)
                if (e == 2)
                    out.add_divisors(factor_with(opt, big(p) * big(p) - 1),
                                     "p = +-1 mod l, p = " + u(p) + ", v_p(N) = 2");
            for (auto p : steinberg) out.add_divisors(factor_with(opt, big(p) - 1), "l | p_i - 1, p_i = " + u(p));
            out.merge(over_primitive_nu(2, c, steinberg, opt, notes));
        } else if (k == 2) {
            // Every p with odd v_p(N) >= 3 must satisfy p = +-1 mod l.
            Integer g = 0;
            for (auto p : odd_high) g = gcd(g, big(p) * big(p) - 1);
            std::string ps;
            for (auto p : odd_high) ps += (ps.empty() ? "" : ",") + u(p);
            out.add_divisors(factor_with(opt, g), "p = +-1 mod l for all p with odd v_p(N) >= 3 (p in {" + ps + "})");
        } else {
            for (auto p : odd_high)
                out.add_divisors(factor_with(opt, big(p) * big(p) - 1),
                                 "p = +-1 mod l, p = " + u(p) + ", v_p(N) = " + std::to_string(valuation(N, p)));
            for (const auto& eta : enumerate_characters(c, CharacterFilter::All)) {
                if (!eta.is_even()) continue;
                for (auto p : steinberg) {
                    const CycloElement val = eta.value(static_cast<long>(p));
                    for (unsigned e : {k, k - 2}) {
                        const CycloElement x = CycloElement::rational(Rational(ipow(big(p), e))) - val;
                        out.add_divisors(factor_with(opt, integral_norm(x)),
                                         "l | N(p^" + std::to_string(e) + " - eta(p)), p = " + u(p) +
                                             ", eta = " + eta.label());
                    }
                }
            }
        }
    }
    if (notes_out) notes_out->insert(notes_out->end(), notes.begin(), notes.end());
    return out;
}

Weight2SignReport reducible_weight2_signs(const std::vector<std::pair<std::uint64_t, int>>& signs) {
    std::uint64_t N = 1;
    for (const auto& [p, s] : signs) {
        if (!is_prime_u64(p)) throw DomainError("reducible_weight2_signs: " + u(p) + " is not prime");
        if (N % p == 0) throw DomainError("reducible_weight2_signs: level is not square-free");
        if (s != 1 && s != -1) throw DomainError("reducible_weight2_signs: signs must be +1 or -1");
        N *= p;
    }
    if (signs.empty()) throw DomainError("reducible_weight2_signs: no primes given");
    Weight2SignReport r;
    const bool all_minus = std::all_of(signs.begin(), signs.end(), [](const auto& ps) { return ps.second == -1; });
    const bool all_plus = std::all_of(signs.begin(), signs.end(), [](const auto& ps) { return ps.second == 1; });
    if (all_minus) {
        r.impossible = true;
        r.divisor_of = 0;
        r.clauses.push_back("all signs -1: impossible for l not dividing 6N");
        return r;
    }
    std::string clause;
    if (all_plus) {
        Integer prod = 1;
        for (const auto& [p, s] : signs) prod *= big(p) - 1;
        r.divisor_of = prod;
        clause = "l | prod(p_i - 1) = " + to_string(prod);
    } else {
        Integer g = 0;
        for (const auto& [p, s] : signs)
            if (s == -1) {
                g = gcd(g, big(p) + 1);
                r.clauses.push_back("a_p = -1 forces p = -1 mod l, p = " + u(p));
            }
        r.divisor_of = g;
        clause = "l | gcd(p_i + 1 : a_p_i = -1) = " + to_string(g);
    }
    r.clauses.push_back(clause);
    r.constrained.add_divisors(factorize(r.divisor_of), clause);
    for (const auto& item : r.constrained.items())
        if ((big(6) * big(N)) % item.prime != 0)
            for (const auto& c : item.clauses) r.candidates.add(item.prime, c);
    return r;
}

DistinguishingIndex dihedral_distinguishing_index(unsigned k, std::uint64_t N, mpfr_prec_t bits) {
    if (N < 2) throw DomainError("dihedral_distinguishing_index: N must be at least 2");
    const Rational N2 = Rational(big(N) * big(N));
    Rational prod2N = 1, prodN = 1;
    for (const auto& [p, e] : factor_u64(2 * N)) prod2N *= Rational(big(p) + 1, big(p));
    for (const auto& [p, e] : factor_u64(N)) prodN *= Rational(big(p) + 1, big(p));
    DistinguishingIndex out{Rational(4 * static_cast<long>(k), 3) * N2 * prod2N, Rational(2 * static_cast<long>(k)) * N2 * prodN,
                            BigFloat(bits)};
    out.murty_bound.canonicalize();
    out.coarse_bound.canonicalize();
    const BigFloat lognN = BigFloat(big(N), bits, MPFR_RNDU).log(MPFR_RNDU);
    const BigFloat one(Integer(1), bits);
    const BigFloat loglog = lognN.log(MPFR_RNDU);
    const BigFloat factor = one.add(loglog, MPFR_RNDU);
    const BigFloat lead(Rational(24 * static_cast<long>(k), 5) * N2, bits, MPFR_RNDU);
    out.rosser_bound = lead.mul(factor, MPFR_RNDU);
    return out;
}

DihedralResult dihedral_candidates(unsigned k, std::uint64_t N, std::optional<unsigned> degree) {
    if (k < 2 || k % 2 != 0) throw DomainError("dihedral_candidates: weight must be even and >= 2");
    if (N == 0) throw DomainError("dihedral_candidates: level must be positive");
    DihedralResult r;
    if (is_squarefree(N)) {
        r.explicit_list = true;
        for (const auto& [p, e] : factor_u64(N)) r.primes.add(big(p), "l | N");
        for (auto p : primes_up_to(k)) r.primes.add(big(p), "l <= k");
        if (is_prime_u64(2 * k - 1)) r.primes.add(big(2 * k - 1), "l = 2k-1");
        return r;
    }
    if (degree) {
        r.exponent = *degree;
        r.exponent_source = "degree";
    } else {
        const auto d = dim_new(k, N);
        r.exponent = static_cast<unsigned>(std::max<std::int64_t>(d, 0));
        r.exponent_source = "dim_new";
    }
    const mpfr_prec_t bits = 256 + 8 * static_cast<mpfr_prec_t>(r.exponent) * static_cast<mpfr_prec_t>(k);
    r.index = dihedral_distinguishing_index(k, N, bits);
    const BigFloat& q = r.index->rosser_bound;
    BigFloat base = q.sqrt(MPFR_RNDU).pow(k - 1, MPFR_RNDU);
    base = base.mul(BigFloat(Integer(2), bits), MPFR_RNDU);
    r.bound_real = base.pow(r.exponent, MPFR_RNDU);
    // ell is an integer, so the floor of an upper bound is still one.
    r.bound = r.bound_real.floor();
    return r;
}

CandidateSet exceptional_image_candidates(unsigned k, std::uint64_t N) {
    if (N == 0) throw DomainError("exceptional_image_candidates: level must be positive");
    CandidateSet out;
    for (const auto& [p, e] : factor_u64(N)) out.add(big(p), "l | N");
    if (4 * k >= 3)
        for (auto p : primes_up_to(4 * k - 3)) out.add(big(p), "l <= 4k-3");
    return out;
}

FundamentalOrders fundamental_orders(std::uint64_t ell, unsigned k) {
    if (ell <= k) throw DomainError("fundamental_orders: need ell > k");
    return {(ell - 1) / gcd_u64(ell - 1, k - 1), (ell + 1) / gcd_u64(ell + 1, k - 1)};
}

CandidateReport candidate_report(unsigned k, std::uint64_t N, const BoundOptions& opt) {
    CandidateReport r;
    r.k = k;
    r.N = N;
    r.reducible = reducible_candidates(k, N, opt, &r.notes);
    r.dihedral = dihedral_candidates(k, N, opt.degree);
    r.exceptional_image = exceptional_image_candidates(k, N);
    if (!opt.non_cm) r.assumptions.push_back("dihedral bound assumes f is non-CM (pass --non-cm to assert it)");
    else r.assumptions.push_back("f asserted non-CM");
    if (!r.dihedral.explicit_list && r.dihedral.exponent_source == "dim_new")
        r.assumptions.push_back("dihedral exponent defaults to dim_new(k, N) as an upper bound for [K:Q]");
    return r;
}

}  // namespace exprimes

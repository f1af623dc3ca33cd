#include "exprimes/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace exprimes {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = primes_up_to(kTrialLimit);
    return primes;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& base) {
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Brent's variant of Pollard rho. Returns a non-trivial factor of composite n.
Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::mt19937_64 rng(0x5eed'1234ULL ^ mpz_get_ui(n.get_mpz_t()));
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(rng()));
    for (;;) {
        Integer y = gen.get_z_range(n - 1) + 1;
        const Integer c = gen.get_z_range(n - 1) + 1;
        const unsigned long m = 128;
        Integer g = 1, q = 1, x, ys;
        unsigned long r = 1;
        auto step = [&](Integer& v) { v = (v * v + c) % n; };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    step(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out, bool& probable) {
    if (n == 1) return;
    if (is_prime(n)) {
        if (n >= deterministic_primality_limit()) probable = true;
        ++out[n];
        return;
    }
    // Perfect powers stall rho on some seeds; peel them first.
    for (unsigned long e = 2; mpz_sizeinbase(n.get_mpz_t(), 2) / e >= 20; ++e) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
            std::map<Integer, unsigned> inner;
            factor_into(root, inner, probable);
            for (const auto& [p, k] : inner) out[p] += static_cast<unsigned>(k * e);
            return;
        }
    }
    const Integer d = pollard_brent(n);
    factor_into(d, out, probable);
    factor_into(n / d, out, probable);
}

}  // namespace

FactoredInteger::FactoredInteger(Integer value, std::vector<PrimePower> factors, bool probable)
    : value_(std::move(value)), factors_(std::move(factors)), probable_(probable) {}

std::vector<Integer> FactoredInteger::primes() const {
    std::vector<Integer> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
}

bool FactoredInteger::verify() const {
    Integer prod = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0 && factors_[i - 1].prime >= factors_[i].prime) return false;
        if (factors_[i].exponent == 0) return false;
        prod *= ipow(factors_[i].prime, factors_[i].exponent);
    }
    return prod == abs(value_);
}

std::string FactoredInteger::to_string() const {
    std::ostringstream os;
    if (value_ < 0) os << '-';
    if (factors_.empty()) {
        os << (value_ == 0 ? "0" : "1");
        return os.str();
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << '*';
        os << factors_[i].prime.get_str();
        if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
    }
    return os.str();
}

const Integer& deterministic_primality_limit() {
    static const Integer limit("3317044064679887385961981");
    return limit;
}

bool is_probable_prime(const Integer& n, int extra_rounds) {
    if (n < 2) return false;
    static constexpr unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned p : kSmall) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned p : kSmall)
        if (!miller_rabin_round(n, d, s, Integer(p))) return false;
    if (n < deterministic_primality_limit()) return true;

    gmp_randclass gen(gmp_randinit_default);
    gen.seed(0xC0FFEEUL);
    for (int i = 0; i < extra_rounds; ++i) {
        const Integer base = gen.get_z_range(n - 3) + 2;
        if (!miller_rabin_round(n, d, s, base)) return false;
    }
    return true;
}

bool is_prime(const Integer& n) { return is_probable_prime(n, 20); }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FactoredInteger factorize(const Integer& n) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    for (std::uint64_t p : trial_primes()) {
        if (Integer(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        found[Integer(p)] = e;
    }
    bool probable = false;
    factor_into(m, found, probable);
    std::vector<PrimePower> factors;
    factors.reserve(found.size());
    for (auto& [p, e] : found) factors.push_back({p, e});
    return FactoredInteger(n, std::move(factors), probable);
}

FactoredInteger factorize(long n) { return factorize(Integer(n)); }

Integer lcm_pow_minus_one(const Integer& p, unsigned k) {
    if (k < 4 || k % 2 != 0) throw DomainError("lcm_pow_minus_one: weight must be even and >= 4");
    if (!is_prime(p)) throw DomainError("lcm_pow_minus_one: p must be prime");
    Integer a = ipow(p, k) - 1;
    Integer b = ipow(p, k - 2) - 1;
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::vector<Integer> prime_divisor_union(std::span<const FactoredInteger> sets) {
    std::vector<Integer> out;
    for (const auto& s : sets)
        for (const auto& f : s.factors()) out.push_back(f.prime);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (n <= 1) return out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factor_u64(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t out = n;
    for (auto [p, e] : factor_u64(n)) out = out / p * (p - 1);
    return out;
}

int moebius(std::uint64_t n) {
    int out = 1;
    for (auto [p, e] : factor_u64(n)) {
        if (e > 1) return 0;
        out = -out;
    }
    return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw DomainError("valuation of zero");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_squarefree(std::uint64_t n) { return moebius(n) != 0; }

std::uint64_t square_part_root(std::uint64_t n) {
    std::uint64_t c = 1;
    for (auto [p, e] : factor_u64(n))
        for (unsigned i = 0; i < e / 2; ++i) c *= p;
    return c;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / gcd_u64(a, b) * b; }

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        const __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DomainError("invmod: not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw DomainError("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace exprimes

#include "exprimes/qexpansion.hpp"

#include "exprimes/bernoulli.hpp"

#include <cmath>
#include <numbers>

namespace exprimes {

namespace {

std::uint64_t mod_ell(const Rational& q, std::uint64_t ell) {
    const Integer L(static_cast<unsigned long>(ell));
    Integer num = q.get_num() % L;
    if (num < 0) num += L;
    Integer den = q.get_den() % L;
    if (den == 0) throw DomainError("coefficient denominator divisible by " + std::to_string(ell));
    const std::uint64_t inv = invmod_u64(den.get_ui(), ell);
    return mulmod_u64(num.get_ui(), inv, ell);
}

CycloElement integer_element(const Integer& n) { return CycloElement::rational(Rational(n)); }

}  // namespace

QExpansion::QExpansion(unsigned weight, std::uint64_t level, std::vector<CycloElement> coeffs)
    : weight_(weight), level_(level), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("q-expansion needs at least a constant term");
}

const CycloElement& QExpansion::operator[](std::uint64_t n) const {
    if (n >= coeffs_.size())
        throw TruncationError("coefficient " + std::to_string(n) + " beyond truncation " + std::to_string(truncation()));
    return coeffs_[n];
}

QExpansion QExpansion::truncate(std::uint64_t T) const {
    if (T > truncation()) throw TruncationError("cannot extend a q-expansion by truncation");
    return QExpansion(weight_, level_, std::vector<CycloElement>(coeffs_.begin(), coeffs_.begin() + T + 1));
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    const std::uint64_t T = std::min(a.truncation(), b.truncation());
    std::vector<CycloElement> out(T + 1);
    for (std::uint64_t n = 0; n <= T; ++n) out[n] = a.coeffs_[n] + b.coeffs_[n];
    return QExpansion(a.weight_, lcm_u64(a.level_, b.level_), std::move(out));
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) { return a + b.scale(CycloElement::rational(-1)); }

QExpansion QExpansion::scale(const CycloElement& c) const {
    std::vector<CycloElement> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return QExpansion(weight_, level_, std::move(out));
}

ModQExpansion::ModQExpansion(std::uint64_t ell, unsigned weight, std::uint64_t level, std::vector<std::uint64_t> coeffs)
    : ell_(ell), weight_(weight), level_(level), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("q-expansion needs at least a constant term");
}

std::uint64_t ModQExpansion::operator[](std::uint64_t n) const {
    if (n >= coeffs_.size())
        throw TruncationError("coefficient " + std::to_string(n) + " beyond truncation " + std::to_string(truncation()));
    return coeffs_[n];
}

CycloElement sigma_nu(unsigned k, const DirichletCharacter& nu, std::uint64_t n) {
    const auto ord = static_cast<unsigned>(nu.order());
    std::vector<Rational> by_exp(ord, Rational(0));
    for (auto m : divisors(n)) {
        const long t1 = nu.value_exponent(static_cast<long>(n / m));
        const long t2 = nu.value_exponent(static_cast<long>(m));
        if (t1 < 0 || t2 < 0) continue;
        const long e = ((t1 - t2) % static_cast<long>(ord) + ord) % ord;
        by_exp[static_cast<std::size_t>(e)] += Rational(ipow(Integer(static_cast<unsigned long>(m)), k - 1));
    }
    return CycloElement::from_exponent_sums(ord, by_exp);
}

QExpansion eisenstein_E(unsigned k, const DirichletCharacter& nu, std::uint64_t truncation) {
    if (k < 2 || k % 2 != 0) throw DomainError("eisenstein_E: weight must be even and at least 2");
    if (!nu.is_primitive()) throw DomainError("eisenstein_E: character must be primitive");
    const std::uint64_t c = nu.modulus();
    if (k == 2 && c == 1) throw DomainError("eisenstein_E: (k, c) = (2, 1) is excluded");
    std::vector<CycloElement> a(truncation + 1);
    a[0] = c == 1 ? CycloElement::rational(-bernoulli_classical(k) / Rational(2 * k)) : CycloElement();
    for (std::uint64_t n = 1; n <= truncation; ++n) a[n] = sigma_nu(k, nu, n);
    return QExpansion(k, c * c, std::move(a));
}

QExpansion eisenstein_E2u(std::uint64_t u, std::uint64_t truncation) {
    if (u <= 1) throw DomainError("eisenstein_E2u: u must be at least 2");
    std::vector<Integer> s(truncation + 1, Integer(0));
    for (std::uint64_t m = 1; m <= truncation; ++m) {
        if (m % u == 0) continue;
        for (std::uint64_t n = m; n <= truncation; n += m) s[n] += static_cast<unsigned long>(m);
    }
    std::vector<CycloElement> a(truncation + 1);
    Rational c0(Integer(static_cast<unsigned long>(u - 1)), Integer(24));
    c0.canonicalize();
    a[0] = CycloElement::rational(c0);
    for (std::uint64_t n = 1; n <= truncation; ++n) a[n] = integer_element(s[n]);
    return QExpansion(2, u, std::move(a));
}

QExpansion apply_Up(const QExpansion& f, std::uint64_t p) { return apply_Up(f, p, f.truncation() / p); }

QExpansion apply_Up(const QExpansion& f, std::uint64_t p, std::uint64_t desired_truncation) {
    if (p == 0) throw DomainError("apply_Up: p must be positive");
    if (f.truncation() < p * desired_truncation)
        throw TruncationError("U_" + std::to_string(p) + " to index " + std::to_string(desired_truncation) +
                              " needs coefficients up to " + std::to_string(p * desired_truncation));
    std::vector<CycloElement> a(desired_truncation + 1);
    for (std::uint64_t n = 0; n <= desired_truncation; ++n) a[n] = f[p * n];
    return QExpansion(f.weight(), lcm_u64(f.level(), p), std::move(a));
}

QExpansion apply_Vm(const QExpansion& f, std::uint64_t m) {
    if (m == 0) throw DomainError("apply_Vm: m must be positive");
    const std::uint64_t T = f.truncation() * m;
    std::vector<CycloElement> a(T + 1);
    for (std::uint64_t n = 0; n <= f.truncation(); ++n) a[n * m] = f[n];
    return QExpansion(f.weight(), f.level() * m, std::move(a));
}

QExpansion twist(const QExpansion& f, const DirichletCharacter& psi) {
    std::vector<CycloElement> a(f.truncation() + 1);
    for (std::uint64_t n = 0; n <= f.truncation(); ++n) {
        const long t = psi.value_exponent(static_cast<long>(n));
        a[n] = t < 0 ? CycloElement() : f[n] * psi.value(static_cast<long>(n));
    }
    const std::uint64_t cond = psi.conductor();
    return QExpansion(f.weight(), lcm_u64(f.level(), cond * cond), std::move(a));
}

QExpansion hecke_T(const QExpansion& f, std::uint64_t r) {
    if (!is_prime_u64(r)) throw DomainError("hecke_T: r must be prime");
    if (f.level() % r == 0) throw DomainError("hecke_T: r divides the level");
    const std::uint64_t T = f.truncation() / r;
    const Rational rk(ipow(Integer(static_cast<unsigned long>(r)), f.weight() - 1));
    std::vector<CycloElement> a(T + 1);
    for (std::uint64_t n = 0; n <= T; ++n) {
        a[n] = f[r * n];
        if (n % r == 0) a[n] += f[n / r].scale(rk);
    }
    return QExpansion(f.weight(), f.level(), std::move(a));
}

QExpansion stabilize(const QExpansion& f, std::uint64_t p, const CycloElement& beta) {
    std::vector<CycloElement> a(f.coeffs());
    for (std::uint64_t n = 0; n <= f.truncation(); n += p) a[n] -= beta * f[n / p];
    return QExpansion(f.weight(), f.level() * p, std::move(a));
}

ModQExpansion theta_operator(const ModQExpansion& f) {
    std::vector<std::uint64_t> a(f.coeffs().size());
    for (std::uint64_t n = 0; n < a.size(); ++n) a[n] = mulmod_u64(n % f.ell(), f[n], f.ell());
    return ModQExpansion(f.ell(), f.weight() + f.ell() + 1, f.level(), std::move(a));
}

ModQExpansion reduce_mod(const QExpansion& f, std::uint64_t ell) {
    std::vector<std::uint64_t> a(f.truncation() + 1);
    for (std::uint64_t n = 0; n <= f.truncation(); ++n) a[n] = mod_ell(f[n].rational_value(), ell);
    return ModQExpansion(ell, f.weight(), f.level(), std::move(a));
}

ModQExpansion eprime_weight2_steinberg(const std::vector<std::pair<std::uint64_t, int>>& signs, std::uint64_t ell,
                                       std::uint64_t truncation) {
    if (!is_prime_u64(ell)) throw DomainError("eprime_weight2_steinberg: ell must be prime");
    std::uint64_t N = 1;
    for (const auto& [p, s] : signs) {
        if (!is_prime_u64(p)) throw DomainError("eprime_weight2_steinberg: " + std::to_string(p) + " is not prime");
        if (N % p == 0) throw DomainError("eprime_weight2_steinberg: repeated prime " + std::to_string(p));
        if (s != 1 && s != -1) throw DomainError("eprime_weight2_steinberg: signs must be +1 or -1");
        N *= p;
    }
    if ((6 * N) % ell == 0) throw DomainError("eprime_weight2_steinberg: ell divides 6N");
    for (const auto& [p, s] : signs)
        if (s == -1 && (p + 1) % ell != 0)
            throw DomainError("eprime_weight2_steinberg: sign -1 at " + std::to_string(p) + " needs p = -1 mod ell");

    // prod_p (a_p U_p - p) expands over subsets S: coefficient n picks up
    // prod_{p in S} a_p * prod_{p not in S} (-p) * E2[n * prod_{p in S} p].
    const auto e2 = [&](std::uint64_t m) -> std::uint64_t {
        if (m == 0) return (ell - invmod_u64(24 % ell, ell)) % ell;
        std::uint64_t s = 1;
        for (auto [q, e] : factor_u64(m)) {
            std::uint64_t term = 1, pw = 1;
            for (unsigned i = 0; i < e; ++i) {
                pw = mulmod_u64(pw, q % ell, ell);
                term = (term + pw) % ell;
            }
            s = mulmod_u64(s, term, ell);
        }
        return s;
    };
    const std::size_t t = signs.size();
    std::vector<std::uint64_t> cur(truncation + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        std::uint64_t P = 1, w = 1;
        for (std::size_t i = 0; i < t; ++i) {
            const auto [p, s] = signs[i];
            if (mask >> i & 1) {
                P *= p;
                w = mulmod_u64(w, s == 1 ? 1 : ell - 1, ell);
            } else {
                w = mulmod_u64(w, (ell - p % ell) % ell, ell);
            }
        }
        for (std::uint64_t n = 0; n <= truncation; ++n) cur[n] = (cur[n] + mulmod_u64(w, e2(n * P), ell)) % ell;
    }
    return ModQExpansion(ell, 2, N, std::move(cur));
}

QExpansion eprime_twisted(const DirichletCharacter& nu, const std::vector<std::uint64_t>& steinberg_primes,
                          std::uint64_t truncation, unsigned k) {
    const std::uint64_t c = nu.modulus();
    for (auto p : steinberg_primes) {
        if (!is_prime_u64(p)) throw DomainError("eprime_twisted: " + std::to_string(p) + " is not prime");
        if (c % p == 0) throw DomainError("eprime_twisted: Steinberg prime divides the conductor");
    }
    const QExpansion E = eisenstein_E(k, nu, truncation);
    const DirichletCharacter inv = nu.inverse();
    QExpansion out = E;
    const std::size_t t = steinberg_primes.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
        std::uint64_t P = 1;
        int parity = 1;
        for (std::size_t i = 0; i < t; ++i)
            if (mask >> i & 1) {
                P *= steinberg_primes[i];
                parity = -parity;
            }
        const CycloElement coef =
            inv.value(static_cast<long>(P)).scale(Rational(ipow(Integer(static_cast<unsigned long>(P)), k - 1)) * parity);
        std::vector<CycloElement> a(truncation + 1);
        for (std::uint64_t n = 0; n <= truncation; n += P) a[n] = E[n / P] * coef;
        out = out + QExpansion(k, c * c * P, std::move(a));
    }
    return out;
}

CycloElement constant_term_E(const DirichletCharacter& nu, unsigned k, std::uint64_t u, std::uint64_t v) {
    const std::uint64_t c = nu.modulus();
    if (!nu.is_primitive()) throw DomainError("constant_term_E: character must be primitive");
    if (v == 0 || (c * c) % v != 0) throw DomainError("constant_term_E: v must divide c^2");
    if (gcd_u64(u, v) != 1) throw DomainError("constant_term_E: gcd(u, v) must be 1");
    if (c == 1) return CycloElement::rational(-bernoulli_classical(k) / Rational(2 * k));
    if (v != c) return CycloElement();

    const DirichletCharacter sq = nu.pow(2).primitive_associate();
    const std::uint64_t c0 = sq.modulus();
    const Rational ratio = ipow(Integer(static_cast<unsigned long>(c / c0)), k);
    CycloElement out = nu.value(-static_cast<long>(u)).scale(-ratio);
    out = out * gauss_sum_exact(sq) / gauss_sum_exact(nu);
    out = out * bernoulli_generalized(k, sq.inverse()).scale(Rational(1, 2 * k));
    for (const auto& [p, e] : factor_u64(c)) {
        const Rational pk(1, ipow(Integer(static_cast<unsigned long>(p)), k));
        out = out * (CycloElement::rational(1) - sq.value(static_cast<long>(p)).scale(pk));
    }
    return out;
}

CycloElement constant_term_Eprime(const DirichletCharacter& nu, const std::vector<std::uint64_t>& steinberg_primes) {
    if (nu.modulus() <= 1) throw DomainError("constant_term_Eprime: needs c > 1");
    CycloElement out = constant_term_E(nu, 2, 1, nu.modulus());
    Rational prod = 1;
    for (auto p : steinberg_primes) prod *= Rational(Integer(static_cast<unsigned long>(p - 1)), Integer(static_cast<unsigned long>(p)));
    prod.canonicalize();
    return out.scale(prod);
}

std::complex<long double> lattice_sum_oracle(const DirichletCharacter& nu, unsigned k, std::uint64_t M_max,
                                             std::uint64_t u) {
    if (k < 4 || k % 2 != 0) throw DomainError("lattice_sum_oracle: k must be even and at least 4");
    const std::uint64_t c = nu.modulus();
    const std::uint64_t c2 = c * c;
    if (gcd_u64(u % c2, c2) != 1 && c > 1) throw DomainError("lattice_sum_oracle: u must be coprime to c");

    // Per residue class mod c^2, sum m^-k over nonzero |m| <= M, smallest terms first.
    std::vector<long double> cls(c2, 0.0L);
    for (std::uint64_t m = M_max; m >= 1; --m) {
        const long double t = 1.0L / std::pow(static_cast<long double>(m), static_cast<long double>(k));
        cls[m % c2] += t;
        cls[(c2 - m % c2) % c2] += t;  // k even: (-m)^-k = m^-k
    }
    const std::uint64_t uinv_c2 = c2 == 1 ? 0 : invmod_u64(u % c2, c2);
    const std::uint64_t uinv_c = c == 1 ? 0 : invmod_u64(u % c, c);
    const auto ord = static_cast<long double>(nu.order());
    std::complex<long double> total = 0;
    for (std::uint64_t l = 0; l < c; ++l) {
        for (std::uint64_t j = 0; j < c; ++j) {
            if (gcd_u64(j, c) != 1) continue;
            const std::uint64_t r = c == 1 ? 0 : (c - mulmod_u64(mulmod_u64(j, j, c), uinv_c, c)) % c;
            const long t = nu.value_exponent(static_cast<long>(r));
            if (t < 0) continue;
            const std::uint64_t cls_idx = c2 == 1 ? 0 : mulmod_u64((j + l * c) % c2, uinv_c2, c2);
            const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(t) / ord;
            total += std::polar(1.0L, angle) * cls[cls_idx];
        }
    }
    return total / 2.0L;
}

}  // namespace exprimes

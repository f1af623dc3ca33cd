#include "exprimes/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>

namespace exprimes {

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

Rational bernoulli_classical(unsigned m) {
    static std::shared_mutex mu;
    static std::vector<Rational> table{Rational(1)};
    {
        std::shared_lock lock(mu);
        if (m < table.size()) return table[m];
    }
    std::unique_lock lock(mu);
    while (table.size() <= m) {
        const auto n = static_cast<unsigned>(table.size());
        if (n >= 3 && n % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        Rational acc = 0;
        for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * table[j];
        Rational b = -acc / Rational(n + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table[m];
}

Rational bernoulli_polynomial(unsigned m, const Rational& x) {
    Rational acc = 0;
    Rational xpow = 1;
    for (unsigned j = m + 1; j-- > 0;) {
        acc += Rational(binomial(m, j)) * bernoulli_classical(j) * xpow;
        xpow *= x;
    }
    acc.canonicalize();
    return acc;
}

CycloElement bernoulli_generalized(unsigned k, const DirichletCharacter& chi) {
    const std::uint64_t m = chi.modulus();
    if (m == 1) return CycloElement::rational(bernoulli_classical(k));
    const auto ord = static_cast<unsigned>(chi.order());
    std::vector<Rational> by_exp(ord, Rational(0));
    for (std::uint64_t a = 1; a <= m; ++a) {
        const long t = chi.value_exponent(static_cast<long>(a));
        if (t < 0) continue;
        Rational x(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(m)));
        x.canonicalize();
        by_exp[static_cast<std::size_t>(t)] += bernoulli_polynomial(k, x);
    }
    const Rational scale(ipow(Integer(static_cast<unsigned long>(m)), k - 1));
    return CycloElement::from_exponent_sums(ord, by_exp).scale(scale);
}

std::optional<FactoredInteger> bernoulli_norm_numerator(unsigned k, const DirichletCharacter& eps) {
    const CycloElement b = bernoulli_generalized(k, eps).scale(Rational(1, 2 * k));
    if (b.is_zero()) return std::nullopt;
    Rational n = b.norm();
    return factorize(Integer(abs(n.get_num())));
}

BigFloat hurwitz_zeta(unsigned s, const Rational& x, mpfr_prec_t bits) {
    if (s < 2) throw DomainError("hurwitz_zeta: s must be at least 2");
    if (x <= 0 || x > 1) throw DomainError("hurwitz_zeta: x must lie in (0, 1]");
    const mpfr_prec_t work = bits + 32;
    const unsigned J = static_cast<unsigned>(work / 3) + 10;
    const unsigned N = J + s + 20;
    const BigFloat xf(x, work);
    BigFloat sum(work);
    for (unsigned n = N; n-- > 0;) {
        BigFloat t = BigFloat(Integer(n), work) + xf;
        sum = sum + BigFloat(1.0, work) / t.pow(s);
    }
    const BigFloat y = BigFloat(Integer(N), work) + xf;
    const BigFloat ys = y.pow(s);
    sum = sum + y / (ys * BigFloat(Integer(s - 1), work));
    sum = sum + BigFloat(0.5, work) / ys;
    // sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * y^(-s-2j+1)
    BigFloat rising(Integer(s), work);   // (s)_{2j-1}
    BigFloat fact(2.0, work);            // (2j)!
    BigFloat ypow = ys * y;              // y^(s+2j-1)
    const BigFloat y2 = y * y;
    for (unsigned j = 1; j <= J; ++j) {
        const BigFloat b(bernoulli_classical(2 * j), work);
        sum = sum + b * rising / (fact * ypow);
        rising = rising * BigFloat(Integer(s + 2 * j - 1), work) * BigFloat(Integer(s + 2 * j), work);
        fact = fact * BigFloat(Integer(2 * j + 1), work) * BigFloat(Integer(2 * j + 2), work);
        ypow = ypow * y2;
    }
    return sum;
}

BigComplex lvalue_numeric(unsigned k, const DirichletCharacter& chi, mpfr_prec_t bits) {
    if (k < 2 || k % 2 != 0) throw DomainError("lvalue_numeric: k must be even and at least 2");
    if (!chi.is_even()) throw DomainError("lvalue_numeric: character must be even");
    const mpfr_prec_t work = bits + 32;
    const std::uint64_t m = chi.modulus();
    BigComplex acc(work);
    for (std::uint64_t a = 1; a <= m; ++a) {
        const long t = chi.value_exponent(static_cast<long>(a));
        if (t < 0) continue;
        Rational x(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(m)));
        x.canonicalize();
        const BigFloat z = hurwitz_zeta(k, x, work);
        acc = acc + root_of_unity(t, static_cast<long>(chi.order()), work).scale(z);
    }
    const BigFloat mk = BigFloat(Integer(static_cast<unsigned long>(m)), work).pow(k);
    return {acc.re / mk, acc.im / mk};
}

BigComplex lvalue_from_bernoulli(unsigned k, const DirichletCharacter& chi, mpfr_prec_t bits) {
    if (!chi.is_primitive()) throw DomainError("lvalue_from_bernoulli: character must be primitive");
    if (k % 2 != 0 || !chi.is_even()) throw DomainError("lvalue_from_bernoulli: needs even k and even character");
    const mpfr_prec_t work = bits + 32;
    // C_k = (2 pi i)^k / (k-1)! = (-1)^(k/2) (2 pi)^k / (k-1)! for even k.
    BigFloat ck = (BigFloat::pi(work) * BigFloat(2.0, work)).pow(k);
    Integer fk;
    mpz_fac_ui(fk.get_mpz_t(), k - 1);
    ck = ck / BigFloat(fk, work);
    if ((k / 2) % 2 == 1) ck = -ck;
    const BigFloat fpow = BigFloat(Integer(static_cast<unsigned long>(chi.modulus())), work).pow(k);
    const BigComplex w = gauss_sum_exact(chi).embed_numeric(work);
    const BigComplex b = bernoulli_generalized(k, chi.inverse()).embed_numeric(work);
    const BigFloat scale = -(ck / (fpow * BigFloat(Integer(2 * k), work)));
    return (w * b).scale(scale);
}

}  // namespace exprimes

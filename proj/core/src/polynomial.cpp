#include "exprimes/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace exprimes {

namespace {

using ZVec = std::vector<Integer>;

void trim_z(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

long deg_z(const ZVec& v) { return static_cast<long>(v.size()) - 1; }

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
ZVec pseudo_rem(ZVec a, const ZVec& b) {
    const long db = deg_z(b);
    const Integer& lb = b.back();
    long da = deg_z(a);
    long steps = da - db + 1;
    while (da >= db && !a.empty()) {
        const Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[i + da - db] -= la * b[i];
        trim_z(a);
        da = deg_z(a);
        --steps;
    }
    if (steps > 0) {
        const Integer scale = ipow(lb, static_cast<unsigned long>(steps));
        for (auto& c : a) c *= scale;
    }
    return a;
}

// Subresultant PRS (Collins/Brown) for integer polynomials with deg f >= deg g >= 0.
Integer subresultant(ZVec a, ZVec b) {
    Integer sign = 1;
    if (deg_z(a) < deg_z(b)) {
        if ((deg_z(a) % 2) && (deg_z(b) % 2)) sign = -1;
        std::swap(a, b);
    }
    if (deg_z(b) == 0) return sign * ipow(b[0], static_cast<unsigned long>(deg_z(a)));

    Integer g = 1, h = 1;
    for (;;) {
        const long delta = deg_z(a) - deg_z(b);
        if ((deg_z(a) % 2) && (deg_z(b) % 2)) sign = -sign;
        ZVec r = pseudo_rem(a, b);
        if (r.empty()) return 0;
        const Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            const Integer num = ipow(g, static_cast<unsigned long>(delta));
            const Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (deg_z(b) == 0) {
            const long d = deg_z(a);
            // Res = lc(b)^deg(a) / h^(deg(a)-1) scaled appropriately.
            const Integer num = ipow(b[0], static_cast<unsigned long>(d));
            const Integer den = ipow(h, static_cast<unsigned long>(d - 1));
            Integer out;
            mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return sign * out;
        }
    }
}

// Writes f = (num/den) * z with z primitive-free integer vector; returns den/num scale.
ZVec to_integer(const QPoly& f, Integer& den) {
    den = f.denominator_lcm();
    ZVec out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Rational scaled = c * den;
        out.push_back(scaled.get_num());
    }
    return out;
}

}  // namespace

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& QPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(v));
}

QPoly operator*(const Rational& c, const QPoly& a) {
    QPoly out = a;
    for (auto& x : out.coeffs_) x *= c;
    out.trim();
    return out;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < divisor.degree()) return {QPoly{}, *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
    const Rational inv_lead = 1 / divisor.leading();
    const std::size_t dd = divisor.coeffs_.size() - 1;
    for (std::size_t i = quo.size(); i-- > 0;) {
        const Rational q = rem[i + dd] * inv_lead;
        quo[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * divisor.coeffs_[j];
    }
    rem.resize(dd);
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::complex<long double> QPoly::eval(std::complex<long double> x) const {
    std::complex<long double> acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + static_cast<long double>(coeffs_[i].get_d());
    return acc;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    return (1 / leading()) * *this;
}

Integer QPoly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

bool QPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a % m;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        QPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.degree() != 0) throw DomainError("inverse_mod: not invertible");
    return ((1 / r0.leading()) * t0) % m;
}

Rational resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    Integer df, dg;
    ZVec zf = to_integer(f, df);
    ZVec zg = to_integer(g, dg);
    const Integer r = subresultant(zf, zg);
    // Res(f, g) = Res(zf/df, zg/dg) = Res(zf, zg) / (df^deg g * dg^deg f).
    Rational out(r);
    Rational scale(ipow(df, static_cast<unsigned long>(g.degree())) * ipow(dg, static_cast<unsigned long>(f.degree())));
    out /= scale;
    out.canonicalize();
    return out;
}

const QPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic polynomial of index 0");
    static std::mutex mu;
    static std::map<unsigned, QPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    QPoly p = QPoly::monomial(1, n) - QPoly::constant(1);
    for (std::uint64_t d : divisors(n)) {
        if (d == n) continue;
        p = p / cyclotomic_polynomial(static_cast<unsigned>(d));
    }
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

std::vector<std::complex<long double>> complex_roots(const QPoly& f) {
    using C = std::complex<long double>;
    const long n = f.degree();
    if (n < 1) return {};
    const QPoly monic = f.monic();
    const QPoly df = monic.derivative();
    long double radius = 0;
    for (long i = 0; i < n; ++i) radius = std::max(radius, std::abs(static_cast<long double>(monic[i].get_d())));
    radius = 1 + radius;
    std::vector<C> z(n);
    for (long i = 0; i < n; ++i) {
        const long double angle = 2 * std::numbers::pi_v<long double> * (i + 0.25L) / n;
        z[i] = std::polar(radius * 0.5L + 0.1L, angle);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double max_step = 0;
        for (long i = 0; i < n; ++i) {
            const C p = monic.eval(z[i]);
            const C dp = df.eval(z[i]);
            const C ratio = p / dp;
            C sum = 0;
            for (long j = 0; j < n; ++j)
                if (j != i) sum += 1.0L / (z[i] - z[j]);
            const C w = ratio / (1.0L - ratio * sum);
            z[i] -= w;
            max_step = std::max(max_step, std::abs(w) / std::max(1.0L, std::abs(z[i])));
        }
        if (max_step < 1e-17L) break;
    }
    return z;
}

}  // namespace exprimes

#include "exprimes/finite_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace exprimes {

namespace fp {

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const FpPoly& a) { return static_cast<long>(a.size()) - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t ell) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % ell;
    trim(out);
    return out;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t ell) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + ell - b[i]) % ell;
    trim(out);
    return out;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t ell) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod_u64(a[i], b[j], ell)) % ell;
    }
    trim(out);
    return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, std::uint64_t ell) {
    if (b.empty()) throw DomainError("polynomial division by zero mod " + std::to_string(ell));
    if (a.size() < b.size()) return {FpPoly{}, a};
    FpPoly rem = a;
    FpPoly quo(a.size() - b.size() + 1, 0);
    const std::uint64_t inv = invmod_u64(b.back(), ell);
    const std::size_t db = b.size() - 1;
    for (std::size_t i = quo.size(); i-- > 0;) {
        const std::uint64_t q = mulmod_u64(rem[i + db], inv, ell);
        quo[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] = (rem[i + j] + ell - mulmod_u64(q, b[j], ell)) % ell;
    }
    rem.resize(db);
    trim(rem);
    trim(quo);
    return {quo, rem};
}

FpPoly mod(const FpPoly& a, const FpPoly& b, std::uint64_t ell) { return divmod(a, b, ell).second; }

FpPoly monic(const FpPoly& a, std::uint64_t ell) {
    if (a.empty()) return a;
    const std::uint64_t inv = invmod_u64(a.back(), ell);
    FpPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod_u64(a[i], inv, ell);
    return out;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t ell) {
    while (!b.empty()) {
        FpPoly r = mod(a, b, ell);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, ell);
}

FpPoly derivative(const FpPoly& a, std::uint64_t ell) {
    if (a.size() <= 1) return {};
    FpPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mulmod_u64(a[i], i % ell, ell);
    trim(out);
    return out;
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m, std::uint64_t ell) {
    FpPoly result{1};
    result = mod(result, m, ell);
    const FpPoly b = mod(base, m, ell);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        result = mod(mul(result, result, ell), m, ell);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mod(mul(result, b, ell), m, ell);
    }
    return result;
}

bool is_irreducible(const FpPoly& f, std::uint64_t ell) {
    const long d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const FpPoly x{0, 1};
    const Integer L(static_cast<unsigned long>(ell));
    // x^(ell^d) = x mod f, and gcd(x^(ell^(d/q)) - x, f) = 1 for prime q | d.
    if (powmod(x, ipow(L, static_cast<unsigned long>(d)), f, ell) != mod(x, f, ell)) return false;
    for (const auto& [q, e] : factor_u64(static_cast<std::uint64_t>(d))) {
        const FpPoly h = sub(powmod(x, ipow(L, static_cast<unsigned long>(d / static_cast<long>(q))), f, ell), x, ell);
        if (degree(gcd(f, h, ell)) != 0) return false;
    }
    return true;
}

std::uint64_t reduce(const Rational& q, std::uint64_t ell) {
    const Integer L(static_cast<unsigned long>(ell));
    Integer den = q.get_den() % L;
    if (den == 0) throw DomainError("denominator obstruction: " + ::exprimes::to_string(q) + " has a denominator divisible by " +
                                    std::to_string(ell));
    Integer num = q.get_num() % L;
    if (num < 0) num += L;
    return mulmod_u64(num.get_ui(), invmod_u64(den.get_ui(), ell), ell);
}

FpPoly reduce(const QPoly& f, std::uint64_t ell) {
    FpPoly out;
    for (const auto& c : f.coeffs()) out.push_back(reduce(c, ell));
    trim(out);
    return out;
}

namespace {

FpPoly pth_root(const FpPoly& f, std::uint64_t ell) {
    FpPoly out;
    for (std::size_t i = 0; i < f.size(); i += ell) out.push_back(f[i]);
    trim(out);
    return out;
}

void squarefree(const FpPoly& f, unsigned mult, std::uint64_t ell, std::vector<std::pair<FpPoly, unsigned>>& out) {
    if (degree(f) < 1) return;
    const FpPoly df = derivative(f, ell);
    if (df.empty()) {
        squarefree(pth_root(f, ell), mult * static_cast<unsigned>(ell), ell, out);
        return;
    }
    FpPoly c = gcd(f, df, ell);
    FpPoly w = divmod(f, c, ell).first;
    unsigned i = 1;
    while (degree(w) > 0) {
        const FpPoly y = gcd(w, c, ell);
        const FpPoly z = divmod(w, y, ell).first;
        if (degree(z) > 0) out.emplace_back(monic(z, ell), i * mult);
        ++i;
        w = y;
        c = divmod(c, y, ell).first;
    }
    if (degree(c) > 0) squarefree(pth_root(c, ell), mult * static_cast<unsigned>(ell), ell, out);
}

void equal_degree(const FpPoly& g, long d, std::uint64_t ell, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (degree(g) == d) {
        out.push_back(g);
        return;
    }
    const long n = degree(g);
    std::uniform_int_distribution<std::uint64_t> coin(0, ell - 1);
    const Integer L(static_cast<unsigned long>(ell));
    for (;;) {
        FpPoly a(static_cast<std::size_t>(n));
        for (auto& x : a) x = coin(rng);
        trim(a);
        if (degree(a) < 1) continue;
        FpPoly b;
        if (ell == 2) {
            FpPoly t = a;
            b = a;
            for (long i = 1; i < d; ++i) {
                t = mod(mul(t, t, ell), g, ell);
                b = add(b, t, ell);
            }
        } else {
            const Integer e = (ipow(L, static_cast<unsigned long>(d)) - 1) / 2;
            b = sub(powmod(a, e, g, ell), FpPoly{1}, ell);
        }
        const FpPoly h = gcd(g, b, ell);
        if (degree(h) > 0 && degree(h) < n) {
            equal_degree(h, d, ell, rng, out);
            equal_degree(divmod(g, h, ell).first, d, ell, rng, out);
            return;
        }
    }
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<Factor> factor(const FpPoly& f_in, std::uint64_t ell) {
    FpPoly f = f_in;
    trim(f);
    if (f.empty()) throw DomainError("factor: zero polynomial");
    f = monic(f, ell);
    std::vector<std::pair<FpPoly, unsigned>> sqf;
    squarefree(f, 1, ell, sqf);
    std::mt19937_64 rng(0x5eed + ell);
    std::vector<Factor> out;
    const FpPoly x{0, 1};
    const Integer L(static_cast<unsigned long>(ell));
    for (auto& [g0, mult] : sqf) {
        FpPoly g = g0;
        FpPoly h = mod(x, g, ell);
        for (long i = 1; degree(g) >= 2 * i; ++i) {
            h = powmod(h, L, g, ell);
            const FpPoly part = gcd(g, sub(h, x, ell), ell);
            if (degree(part) > 0) {
                std::vector<FpPoly> pieces;
                equal_degree(part, i, ell, rng, pieces);
                for (auto& p : pieces) out.push_back({monic(p, ell), mult});
                g = divmod(g, part, ell).first;
                h = mod(h, g, ell);
            }
        }
        if (degree(g) > 0) out.push_back({monic(g, ell), mult});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

std::string to_string(const FpPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a[i] != 1) {
            os << a[i];
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

}  // namespace fp

namespace {

FpPoly least_irreducible(std::uint64_t ell, unsigned d) {
    FpPoly f(d + 1, 0);
    f[d] = 1;
    for (;;) {
        if (fp::is_irreducible(f, ell)) return f;
        std::size_t i = 0;
        while (i < d) {
            if (++f[i] < ell) break;
            f[i++] = 0;
        }
        if (i == d) throw DomainError("no irreducible polynomial found");
    }
}

}  // namespace

FiniteField::FiniteField(std::uint64_t ell, unsigned degree) : ell_(ell), degree_(degree) {
    if (!is_prime_u64(ell)) throw DomainError("finite field characteristic must be prime");
    if (ell >= (std::uint64_t{1} << 31)) throw DomainError("finite field characteristic too large");
    if (degree == 0) throw DomainError("finite field degree must be positive");
    modulus_ = least_irreducible(ell, degree);
}

FiniteField::FiniteField(std::uint64_t ell, FpPoly modulus) : ell_(ell), modulus_(std::move(modulus)) {
    if (!is_prime_u64(ell)) throw DomainError("finite field characteristic must be prime");
    fp::trim(modulus_);
    modulus_ = fp::monic(modulus_, ell);
    if (!fp::is_irreducible(modulus_, ell)) throw DomainError("finite field modulus is reducible");
    degree_ = static_cast<unsigned>(fp::degree(modulus_));
}

Integer FiniteField::order() const { return ipow(Integer(static_cast<unsigned long>(ell_)), degree_); }

FqElem FiniteField::one() const { return from_int(1); }

FqElem FiniteField::from_int(std::int64_t v) const {
    FqElem out = zero();
    const auto l = static_cast<std::int64_t>(ell_);
    out[0] = static_cast<std::uint64_t>(((v % l) + l) % l);
    return out;
}

FqElem FiniteField::from_poly(const FpPoly& p) const {
    FpPoly r = fp::mod(p, modulus_, ell_);
    r.resize(degree_, 0);
    return r;
}

FqElem FiniteField::generator() const { return from_poly(FpPoly{0, 1}); }

FqElem FiniteField::add(const FqElem& a, const FqElem& b) const {
    FqElem out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = (a[i] + b[i]) % ell_;
    return out;
}

FqElem FiniteField::sub(const FqElem& a, const FqElem& b) const {
    FqElem out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = (a[i] + ell_ - b[i]) % ell_;
    return out;
}

FqElem FiniteField::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FiniteField::mul(const FqElem& a, const FqElem& b) const {
    FpPoly pa(a), pb(b);
    fp::trim(pa);
    fp::trim(pb);
    return from_poly(fp::mul(pa, pb, ell_));
}

FqElem FiniteField::pow(const FqElem& a, const Integer& e) const {
    if (e < 0) return pow(inv(a), -e);
    FqElem result = one();
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        result = mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mul(result, a);
    }
    return result;
}

FqElem FiniteField::inv(const FqElem& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero in finite field");
    return pow(a, order() - 2);
}

FqElem FiniteField::frobenius(const FqElem& a) const { return pow(a, Integer(static_cast<unsigned long>(ell_))); }

bool FiniteField::is_zero(const FqElem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

FqElem FiniteField::eval(const FpPoly& p, const FqElem& x) const {
    FqElem acc = zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = add(mul(acc, x), from_int(static_cast<std::int64_t>(p[i])));
    return acc;
}

FqElem FiniteField::eval_coords(const std::vector<std::uint64_t>& coeffs, const FqElem& x) const {
    return eval(coeffs, x);
}

std::string FiniteField::to_string(const FqElem& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || a[i] != 1) {
            os << a[i];
            if (i > 0) os << '*';
        }
        if (i >= 1) os << 't';
        if (i >= 2) os << '^' << i;
    }
    return first ? "0" : os.str();
}

namespace {

// Polynomials over F_q, lowest degree first.
using QP = std::vector<FqElem>;

void qtrim(const FiniteField& F, QP& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

QP qsub(const FiniteField& F, const QP& a, const QP& b) {
    QP out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.sub(out[i], b[i]);
    qtrim(F, out);
    return out;
}

QP qadd(const FiniteField& F, const QP& a, const QP& b) {
    QP out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
    qtrim(F, out);
    return out;
}

QP qmul(const FiniteField& F, const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP out(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    qtrim(F, out);
    return out;
}

std::pair<QP, QP> qdivmod(const FiniteField& F, const QP& a, const QP& b) {
    if (a.size() < b.size()) return {QP{}, a};
    QP rem = a;
    QP quo(a.size() - b.size() + 1, F.zero());
    const FqElem inv = F.inv(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t i = quo.size(); i-- > 0;) {
        const FqElem q = F.mul(rem[i + db], inv);
        quo[i] = q;
        if (F.is_zero(q)) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] = F.sub(rem[i + j], F.mul(q, b[j]));
    }
    rem.resize(db);
    qtrim(F, rem);
    qtrim(F, quo);
    return {quo, rem};
}

QP qmonic(const FiniteField& F, const QP& a) {
    if (a.empty()) return a;
    const FqElem inv = F.inv(a.back());
    QP out;
    for (const auto& c : a) out.push_back(F.mul(c, inv));
    return out;
}

QP qgcd(const FiniteField& F, QP a, QP b) {
    while (!b.empty()) {
        QP r = qdivmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(F, a);
}

QP qpowmod(const FiniteField& F, const QP& base, const Integer& e, const QP& m) {
    QP result = qdivmod(F, QP{F.one()}, m).second;
    const QP b = qdivmod(F, base, m).second;
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        result = qdivmod(F, qmul(F, result, result), m).second;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = qdivmod(F, qmul(F, result, b), m).second;
    }
    return result;
}

void split_linear(const FiniteField& F, const QP& g, std::mt19937_64& rng, std::vector<FqElem>& roots) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        roots.push_back(F.neg(F.mul(g[0], F.inv(g[1]))));
        return;
    }
    std::uniform_int_distribution<std::uint64_t> coin(0, F.characteristic() - 1);
    const Integer q = F.order();
    for (;;) {
        FqElem delta(F.degree());
        for (auto& c : delta) c = coin(rng);
        QP w;
        if (F.characteristic() == 2) {
            // Tr(delta x) = sum_i (delta x)^(2^i), i < [F:F_2]
            QP t = qdivmod(F, QP{F.zero(), delta}, g).second;
            w = t;
            for (unsigned i = 1; i < F.degree(); ++i) {
                t = qdivmod(F, qmul(F, t, t), g).second;
                w = qadd(F, w, t);
            }
        } else {
            w = qpowmod(F, QP{delta, F.one()}, (q - 1) / 2, g);
            w = qsub(F, w, QP{F.one()});
        }
        const QP h = qgcd(F, g, w);
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear(F, h, rng, roots);
            split_linear(F, qdivmod(F, g, h).first, rng, roots);
            return;
        }
    }
}

}  // namespace

std::vector<FqElem> roots_in_field(const FiniteField& F, const FpPoly& p_in) {
    FpPoly p = p_in;
    fp::trim(p);
    if (fp::degree(p) < 1) return {};
    QP g;
    for (auto c : p) g.push_back(F.from_int(static_cast<std::int64_t>(c)));
    g = qmonic(F, g);
    // x^q - x collects the distinct linear factors.
    const QP xq = qpowmod(F, QP{F.zero(), F.one()}, F.order(), g);
    const QP lin = qgcd(F, g, qsub(F, xq, QP{F.zero(), F.one()}));
    std::vector<FqElem> roots;
    std::mt19937_64 rng(0xf1e1d + F.characteristic() * 131 + F.degree());
    split_linear(F, lin, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<FqElem> roots_by_search(const FiniteField& F, const FpPoly& p) {
    if (F.order() > 1000000) throw DomainError("roots_by_search: field too large");
    std::vector<FqElem> roots;
    FqElem x = F.zero();
    const std::uint64_t q = F.order().get_ui();
    for (std::uint64_t i = 0; i < q; ++i) {
        std::uint64_t v = i;
        for (unsigned j = 0; j < F.degree(); ++j) {
            x[j] = v % F.characteristic();
            v /= F.characteristic();
        }
        if (F.is_zero(F.eval(p, x))) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_square_in_field(const FiniteField& F, const FqElem& x) {
    if (F.characteristic() == 2) throw DomainError("is_square_in_field: characteristic 2");
    if (F.is_zero(x)) return true;
    return F.pow(x, (F.order() - 1) / 2) == F.one();
}

std::uint64_t absolute_trace(const FiniteField& F, const FqElem& x) {
    FqElem acc = F.zero();
    FqElem t = x;
    for (unsigned i = 0; i < F.degree(); ++i) {
        acc = F.add(acc, t);
        t = F.frobenius(t);
    }
    return acc[0];
}

bool quadratic_is_irreducible(const FiniteField& F, const FqElem& b, const FqElem& c) {
    if (F.characteristic() != 2) {
        const FqElem disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), c));
        return !is_square_in_field(F, disc);
    }
    if (F.is_zero(b)) return false;
    // X = bY turns it into Y^2 + Y + c/b^2, irreducible iff the trace is 1.
    return absolute_trace(F, F.mul(c, F.inv(F.mul(b, b)))) == 1;
}

}  // namespace exprimes

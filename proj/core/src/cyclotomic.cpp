#include "exprimes/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace exprimes {

namespace {

std::vector<Rational> reduce(unsigned n, const QPoly& poly) {
    const QPoly& phi = cyclotomic_polynomial(n);
    const std::size_t d = static_cast<std::size_t>(phi.degree());
    QPoly r = poly.degree() >= static_cast<long>(d) ? poly % phi : poly;
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) out[i] = r.coeffs()[i];
    return out;
}

unsigned lcm_index(unsigned a, unsigned b) { return static_cast<unsigned>(lcm_u64(a, b)); }

long mod_pos(long a, long n) {
    a %= n;
    return a < 0 ? a + n : a;
}

}  // namespace

CycloElement::CycloElement() : n_(1), coeffs_(1, Rational(0)) {}

CycloElement::CycloElement(unsigned n, const Rational& value) : n_(n) {
    if (n == 0) throw DomainError("cyclotomic index must be positive");
    coeffs_.assign(static_cast<std::size_t>(cyclotomic_polynomial(n).degree()), Rational(0));
    coeffs_[0] = value;
}

CycloElement::CycloElement(unsigned n, const QPoly& poly) : n_(n) {
    if (n == 0) throw DomainError("cyclotomic index must be positive");
    coeffs_ = reduce(n, poly);
}

CycloElement CycloElement::zeta(unsigned n, long k) {
    if (n == 0) throw DomainError("cyclotomic index must be positive");
    return CycloElement(n, QPoly::monomial(1, static_cast<std::size_t>(mod_pos(k, n))));
}

CycloElement CycloElement::from_exponent_sums(unsigned n, const std::vector<Rational>& by_exponent) {
    if (by_exponent.size() > n) throw DomainError("from_exponent_sums: too many exponents");
    return CycloElement(n, QPoly(by_exponent));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycloElement::rational_value() const {
    if (!is_rational()) throw DomainError("element is not rational: " + to_string());
    return coeffs_[0];
}

CycloElement CycloElement::embed(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw DomainError("embed: index does not divide target");
    const std::size_t step = m / n_;
    std::vector<Rational> v(step * (coeffs_.size() - 1) + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
    return CycloElement(m, QPoly(std::move(v)));
}

CycloElement CycloElement::operator-() const {
    CycloElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    if (a.n_ != b.n_) {
        const unsigned m = lcm_index(a.n_, b.n_);
        return a.embed(m) + b.embed(m);
    }
    CycloElement out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    if (a.n_ != b.n_) {
        const unsigned m = lcm_index(a.n_, b.n_);
        return a.embed(m) * b.embed(m);
    }
    if (a.is_rational()) return b.scale(a.coeffs_[0]);
    if (b.is_rational()) return a.scale(b.coeffs_[0]);
    return CycloElement(a.n_, a.as_poly() * b.as_poly());
}

CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }

CycloElement CycloElement::scale(const Rational& c) const {
    CycloElement out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in cyclotomic field");
    if (is_rational()) return CycloElement(n_, Rational(1 / coeffs_[0]));
    return CycloElement(n_, inverse_mod(as_poly(), cyclotomic_polynomial(n_)));
}

CycloElement CycloElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElement result(n_, Rational(1));
    CycloElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    if (a.n_ == b.n_) return a.coeffs_ == b.coeffs_;
    const unsigned m = lcm_index(a.n_, b.n_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

CycloElement CycloElement::galois(long j) const {
    if (std::gcd(mod_pos(j, n_), static_cast<long>(n_)) != 1 && n_ > 1)
        throw DomainError("galois: exponent not coprime to the index");
    if (is_rational()) return *this;
    const long jj = mod_pos(j, n_);
    std::vector<Rational> v(n_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(i * jj) % n_] += coeffs_[i];
    return CycloElement(n_, QPoly(std::move(v)));
}

Rational CycloElement::norm() const {
    if (is_zero()) return 0;
    if (is_rational()) {
        Rational out = 1;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out *= coeffs_[0];
        return out;
    }
    return resultant(cyclotomic_polynomial(n_), as_poly());
}

Rational CycloElement::trace() const {
    CycloElement sum(n_, Rational(0));
    for (unsigned j = 1; j <= n_; ++j)
        if (std::gcd(j, n_) == 1) sum += galois(j);
    return sum.rational_value();
}

BigComplex CycloElement::embed_numeric(mpfr_prec_t bits) const {
    const mpfr_prec_t work = std::max<mpfr_prec_t>(bits, 53) + 32;
    const BigComplex z = root_of_unity(1, n_, work);
    BigComplex acc(work);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + BigFloat(coeffs_[i], work);
    }
    return acc;
}

std::complex<double> CycloElement::to_complex() const { return embed_numeric(64).to_complex(); }

std::string CycloElement::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg)
            os << '-';
        else if (!first)
            os << '+';
        const Rational mag = abs(c);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) { return a * b; }

Rational cyclo_norm(const CycloElement& a) { return a.norm(); }

BigComplex embed_numeric(const CycloElement& a, mpfr_prec_t precision) {
    if (precision < 53) throw DomainError("embed_numeric: precision below 53 bits");
    return a.embed_numeric(precision);
}

}  // namespace exprimes

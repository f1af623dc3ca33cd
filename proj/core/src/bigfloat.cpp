#include "exprimes/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace exprimes {

namespace {

mpfr_prec_t join(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double x, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& x, mpfr_prec_t bits, mpfr_rnd_t rnd) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, x.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const Rational& x, mpfr_prec_t bits, mpfr_rnd_t rnd) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, x.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t bits, mpfr_rnd_t rnd) {
    BigFloat out(bits);
    mpfr_const_pi(out.value_, rnd);
    return out;
}

BigFloat BigFloat::add(const BigFloat& b, mpfr_rnd_t rnd) const {
    BigFloat out(join(*this, b));
    mpfr_add(out.value_, value_, b.value_, rnd);
    return out;
}

BigFloat BigFloat::sub(const BigFloat& b, mpfr_rnd_t rnd) const {
    BigFloat out(join(*this, b));
    mpfr_sub(out.value_, value_, b.value_, rnd);
    return out;
}

BigFloat BigFloat::mul(const BigFloat& b, mpfr_rnd_t rnd) const {
    BigFloat out(join(*this, b));
    mpfr_mul(out.value_, value_, b.value_, rnd);
    return out;
}

BigFloat BigFloat::div(const BigFloat& b, mpfr_rnd_t rnd) const {
    BigFloat out(join(*this, b));
    mpfr_div(out.value_, value_, b.value_, rnd);
    return out;
}

BigFloat BigFloat::log(mpfr_rnd_t rnd) const {
    BigFloat out(precision());
    mpfr_log(out.value_, value_, rnd);
    return out;
}

BigFloat BigFloat::sqrt(mpfr_rnd_t rnd) const {
    BigFloat out(precision());
    mpfr_sqrt(out.value_, value_, rnd);
    return out;
}

BigFloat BigFloat::pow(unsigned long e, mpfr_rnd_t rnd) const {
    BigFloat out(precision());
    mpfr_pow_ui(out.value_, value_, e, rnd);
    return out;
}

BigFloat BigFloat::pow(const BigFloat& e, mpfr_rnd_t rnd) const {
    BigFloat out(join(*this, e));
    mpfr_pow(out.value_, value_, e.value_, rnd);
    return out;
}

BigFloat BigFloat::sin() const {
    BigFloat out(precision());
    mpfr_sin(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos() const {
    BigFloat out(precision());
    mpfr_cos(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

Integer BigFloat::floor() const {
    Integer out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
    return out;
}

Integer BigFloat::ceil() const {
    Integer out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDU);
    return out;
}

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return buf.data();
}

BigComplex root_of_unity(long k, long n, mpfr_prec_t bits) {
    if (n <= 0) throw DomainError("root_of_unity: n must be positive");
    k %= n;
    if (k < 0) k += n;
    const mpfr_prec_t work = bits + 16;
    Rational frac(Integer(2 * k), Integer(n));
    frac.canonicalize();
    BigFloat angle = BigFloat::pi(work) * BigFloat(frac, work);
    return {angle.cos(), angle.sin()};
}

}  // namespace exprimes

#pragma once

#include "exprimes/arith.hpp"

#include <mpfr.h>

#include <complex>
#include <string>

namespace exprimes {

/// Owning MPFR value. Every result takes the larger precision of its operands.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(double x, mpfr_prec_t bits);
    BigFloat(const Integer& x, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(const Rational& x, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    static BigFloat pi(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

    BigFloat add(const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat sub(const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat mul(const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat div(const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat log(mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat sqrt(mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat pow(unsigned long e, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat pow(const BigFloat& e, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat sin() const;
    BigFloat cos() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return a.add(b); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a.sub(b); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return a.mul(b); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return a.div(b); }
    BigFloat operator-() const;
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
    Integer floor() const;
    Integer ceil() const;
    std::string to_string(int digits = 30) const;

private:
    mpfr_t value_;
};

/// Complex number with BigFloat parts, enough for evaluating cyclotomic embeddings.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex scale(const BigFloat& s) const { return {re * s, im * s}; }
    BigFloat norm() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// e^(2 pi i k / n) at the given precision.
BigComplex root_of_unity(long k, long n, mpfr_prec_t bits);

}  // namespace exprimes

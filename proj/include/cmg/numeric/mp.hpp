#ifndef CMG_NUMERIC_MP_HPP
#define CMG_NUMERIC_MP_HPP

#include <mpfr.h>

#include <string>

#include "cmg/exact/rational.hpp"

namespace cmg::num
{

// Multiprecision real with its own precision in bits. Binary operations round
// to the larger precision of the operands; nothing reads an ambient default.
class Real
{
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(long v, mpfr_prec_t prec);
    Real(double v, mpfr_prec_t prec);
    Real(const Rational &q, mpfr_prec_t prec);
    Real(const std::string &decimal, mpfr_prec_t prec);
    Real(const Real &o);
    Real(Real &&o) noexcept;
    Real &operator=(const Real &o);
    Real &operator=(Real &&o) noexcept;
    ~Real();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    static Real pi(mpfr_prec_t prec);
    static Real zero(mpfr_prec_t prec) { return Real(0L, prec); }
    static Real one(mpfr_prec_t prec) { return Real(1L, prec); }
    // 2^e
    static Real pow2(long e, mpfr_prec_t prec);

    Real operator-() const;
    Real &operator+=(const Real &o);
    Real &operator-=(const Real &o);
    Real &operator*=(const Real &o);
    Real &operator/=(const Real &o);
    friend Real operator+(Real a, const Real &b) { return a += b; }
    friend Real operator-(Real a, const Real &b) { return a -= b; }
    friend Real operator*(Real a, const Real &b) { return a *= b; }
    friend Real operator/(Real a, const Real &b) { return a /= b; }
    Real &operator*=(long k);
    Real &operator/=(long k);
    friend Real operator*(Real a, long k) { return a *= k; }
    friend Real operator*(long k, Real a) { return a *= k; }
    friend Real operator/(Real a, long k) { return a /= k; }
    friend Real operator+(Real a, long k) { return a += Real(k, a.prec()); }
    friend Real operator-(Real a, long k) { return a -= Real(k, a.prec()); }

    friend bool operator<(const Real &a, const Real &b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real &a, const Real &b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real &a, const Real &b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real &a, const Real &b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real &a, const Real &b) { return mpfr_equal_p(a.v_, b.v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long_round() const { return mpfr_get_si(v_, MPFR_RNDN); }
    long floor_long() const { return mpfr_get_si(v_, MPFR_RNDD); }
    // Binary exponent e with 2^(e-1) <= |x| < 2^e (very negative for zero).
    long exponent() const;
    // Decimal string with `digits` significant digits.
    std::string str(int digits = 0) const;

private:
    mpfr_t v_;
};

Real abs(const Real &x);
Real sqrt(const Real &x);
Real log(const Real &x);
Real exp(const Real &x);
Real sin(const Real &x);
Real cos(const Real &x);
Real atan2(const Real &y, const Real &x);
Real atanh(const Real &x);
Real log1p(const Real &x);
Real pow(const Real &x, long e);
Real max(const Real &a, const Real &b);
Real min(const Real &a, const Real &b);
Real round_to_long(const Real &x);

class Complex
{
public:
    explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(const Real &re) : re_(re), im_(Real::zero(re.prec())) {}
    Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    static Complex i(mpfr_prec_t prec) { return Complex(Real::zero(prec), Real::one(prec)); }

    const Real &re() const { return re_; }
    const Real &im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    Complex operator-() const { return Complex(-re_, -im_); }
    Complex &operator+=(const Complex &o);
    Complex &operator-=(const Complex &o);
    Complex &operator*=(const Complex &o);
    Complex &operator/=(const Complex &o);
    Complex &operator*=(const Real &r);
    Complex &operator/=(const Real &r);
    friend Complex operator+(Complex a, const Complex &b) { return a += b; }
    friend Complex operator-(Complex a, const Complex &b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex &b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex &b) { return a /= b; }
    friend Complex operator*(Complex a, const Real &b) { return a *= b; }
    friend Complex operator*(const Real &b, Complex a) { return a *= b; }
    friend Complex operator/(Complex a, const Real &b) { return a /= b; }
    friend Complex operator*(Complex a, long k) { return a *= Real(k, a.prec()); }
    friend Complex operator*(long k, Complex a) { return a *= Real(k, a.prec()); }
    friend Complex operator/(Complex a, long k) { return a /= Real(k, a.prec()); }

    Complex conj() const { return Complex(re_, -im_); }
    Real norm() const { return re_ * re_ + im_ * im_; }
    std::string str(int digits = 0) const;

private:
    Real re_, im_;
};

Real abs(const Complex &z);
Real arg(const Complex &z);
Complex exp(const Complex &z);
Complex log(const Complex &z); // principal branch
Complex sqrt(const Complex &z); // principal branch
Complex pow(const Complex &z, long e);
Complex from_rational(const Rational &re, const Rational &im, mpfr_prec_t prec);

} // namespace cmg::num

#endif

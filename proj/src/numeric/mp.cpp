#include "cmg/numeric/mp.hpp"

#include <algorithm>
#include <vector>

#include "cmg/errors.hpp"

namespace cmg::num
{

namespace
{

mpfr_prec_t pmax(const Real &a, const Real &b) { return std::max(a.prec(), b.prec()); }

// Round a result into a fresh value of precision p.
template <class F>
Real unary(const Real &x, F f)
{
    Real r(x.prec());
    f(r.get(), x.get(), MPFR_RNDN);
    return r;
}

} // namespace

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Rational &q, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpq_class m(q.num(), q.den());
    mpfr_set_q(v_, m.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string &decimal, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw ParseError("not a decimal number: '" + decimal + "'");
    }
}

Real::Real(const Real &o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real &&o) noexcept
{
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

Real &Real::operator=(const Real &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&o) noexcept
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec)
{
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

#define CMG_REAL_OP(op, fn)                                                                                            \
    Real &Real::operator op(const Real &o)                                                                             \
    {                                                                                                                  \
        mpfr_prec_t p = pmax(*this, o);                                                                                \
        if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);                                                             \
        fn(v_, v_, o.v_, MPFR_RNDN);                                                                                   \
        return *this;                                                                                                  \
    }
CMG_REAL_OP(+=, mpfr_add)
CMG_REAL_OP(-=, mpfr_sub)
CMG_REAL_OP(*=, mpfr_mul)
CMG_REAL_OP(/=, mpfr_div)
#undef CMG_REAL_OP

Real &Real::operator*=(long k)
{
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(long k)
{
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

long Real::exponent() const
{
    if (mpfr_zero_p(v_)) return -(1L << 30);
    return mpfr_get_exp(v_);
}

std::string Real::str(int digits) const
{
    if (digits <= 0) digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 1;
    std::vector<char> buf(digits + 64);
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
    if (n >= static_cast<int>(buf.size())) {
        buf.resize(n + 1);
        mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
    }
    return std::string(buf.data());
}

Real abs(const Real &x) { return unary(x, mpfr_abs); }
Real sqrt(const Real &x) { return unary(x, mpfr_sqrt); }
Real log(const Real &x) { return unary(x, mpfr_log); }
Real exp(const Real &x) { return unary(x, mpfr_exp); }
Real sin(const Real &x) { return unary(x, mpfr_sin); }
Real cos(const Real &x) { return unary(x, mpfr_cos); }
Real atanh(const Real &x) { return unary(x, mpfr_atanh); }
Real log1p(const Real &x) { return unary(x, mpfr_log1p); }

Real atan2(const Real &y, const Real &x)
{
    Real r(pmax(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real &x, long e)
{
    Real r(x.prec());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Real max(const Real &a, const Real &b) { return a < b ? b : a; }
Real min(const Real &a, const Real &b) { return a < b ? a : b; }
Real round_to_long(const Real &x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t) { return mpfr_round(r, a); }); }

Complex &Complex::operator+=(const Complex &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex &Complex::operator-=(const Complex &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex &Complex::operator*=(const Complex &o)
{
    Real r = re_ * o.re_ - im_ * o.im_;
    Real i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Complex &Complex::operator/=(const Complex &o)
{
    Real n = o.norm();
    if (n.is_zero()) throw DivisionByZero("complex division by zero");
    Real r = (re_ * o.re_ + im_ * o.im_) / n;
    Real i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Complex &Complex::operator*=(const Real &r)
{
    re_ *= r;
    im_ *= r;
    return *this;
}

Complex &Complex::operator/=(const Real &r)
{
    re_ /= r;
    im_ /= r;
    return *this;
}

std::string Complex::str(int digits) const
{
    std::string im = im_.str(digits);
    if (im.empty() || im[0] != '-') im = "+" + im;
    return re_.str(digits) + im + "i";
}

Real abs(const Complex &z)
{
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
    return r;
}

Real arg(const Complex &z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex &z)
{
    Real m = exp(z.re());
    return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex log(const Complex &z)
{
    if (z.re().is_zero() && z.im().is_zero()) throw DomainError("log of zero");
    return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex &z)
{
    // principal root: sqrt((|z| + x)/2) + i sign(y) sqrt((|z| - x)/2)
    Real m = abs(z);
    Real re = sqrt((m + z.re()) / 2L);
    Real im = sqrt(max((m - z.re()) / 2L, Real::zero(z.prec())));
    if (z.im().sign() < 0) im = -im;
    return Complex(re, im);
}

Complex pow(const Complex &z, long e)
{
    if (e < 0) return Complex(Real::one(z.prec())) / pow(z, -e);
    Complex r(Real::one(z.prec())), b = z;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Complex from_rational(const Rational &re, const Rational &im, mpfr_prec_t prec)
{
    return Complex(Real(re, prec), Real(im, prec));
}

} // namespace cmg::num

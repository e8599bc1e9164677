#include "cmg/exact/rational.hpp"

#include <cctype>

#include "cmg/errors.hpp"

namespace cmg
{

Rational::Rational(long num, long den)
{
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string &s0)
{
    std::string s = s0;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    if (s.empty()) throw ParseError("empty rational literal");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
            bool neg = !ip.empty() && ip[0] == '-';
            if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
            if (ip.empty()) ip = "0";
            mpz_class whole(ip + fp, 10);
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
            Rational r(whole, scale);
            return neg ? -r : r;
        }
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s0 + "'");
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument &) {
        throw ParseError("not a rational: '" + s0 + "'");
    }
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class Rational::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::optional<Rational> try_inverse(const Rational &r)
{
    if (r.is_zero()) return std::nullopt;
    return r.inverse();
}

std::optional<Rational> try_sqrt(const Rational &r)
{
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

} // namespace cmg

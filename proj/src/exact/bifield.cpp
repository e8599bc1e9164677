#include "cmg/exact/bifield.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "cmg/errors.hpp"

namespace cmg
{

namespace
{

// Q(mu) arithmetic on pairs (p, q) = p + q*mu with mu^2 = -mu - 2.
struct QMu {
    Rational p, q;
};

QMu mul(const QMu &a, const QMu &b)
{
    // (p1 + q1 mu)(p2 + q2 mu) = p1p2 + (p1q2 + q1p2) mu + q1q2 (-mu - 2)
    Rational qq = a.q * b.q;
    return {a.p * b.p - Rational(2) * qq, a.p * b.q + a.q * b.p - qq};
}
QMu add(const QMu &a, const QMu &b) { return {a.p + b.p, a.q + b.q}; }
QMu sub(const QMu &a, const QMu &b) { return {a.p - b.p, a.q - b.q}; }
Rational norm(const QMu &a) { return a.p * a.p - a.p * a.q + Rational(2) * a.q * a.q; }
QMu inv(const QMu &a)
{
    Rational n = norm(a);
    if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(mu)");
    // conj(mu) = -1 - mu
    return {(a.p - a.q) / n, -a.q / n};
}

} // namespace

BiField BiField::from_sqrt_m7(const QuadExt<-7> &q)
{
    return BiField(q.x() + q.y(), Rational(2) * q.y(), 0, 0);
}

std::optional<QuadExt<-7>> BiField::to_sqrt_m7() const
{
    if (!in_q_mu()) return std::nullopt;
    // p + q mu = p + q(-1 + s)/2 with s = sqrt(-7)
    return QuadExt<-7>(c_[0] - c_[1] / Rational(2), c_[1] / Rational(2));
}

BiField BiField::parse(const std::string &s)
{
    std::vector<Rational> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(Rational::parse(tok));
    if (parts.size() == 1) return BiField(parts[0]);
    if (parts.size() != 4) throw ParseError("Q(mu,i) literal needs 1 or 4 comma-separated rationals: '" + s + "'");
    return BiField(parts[0], parts[1], parts[2], parts[3]);
}

bool BiField::is_zero() const
{
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

BiField &BiField::operator+=(const BiField &o)
{
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

BiField &BiField::operator-=(const BiField &o)
{
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

BiField &BiField::operator*=(const BiField &o)
{
    QMu a{c_[0], c_[1]}, b{c_[2], c_[3]}, c{o.c_[0], o.c_[1]}, d{o.c_[2], o.c_[3]};
    // (a + b i)(c + d i) = (ac - bd) + (ad + bc) i
    QMu re = sub(mul(a, c), mul(b, d));
    QMu im = add(mul(a, d), mul(b, c));
    c_ = {re.p, re.q, im.p, im.q};
    return *this;
}

BiField BiField::inverse() const
{
    QMu a{c_[0], c_[1]}, b{c_[2], c_[3]};
    QMu n = add(mul(a, a), mul(b, b));
    QMu ni = inv(n);
    QMu re = mul(a, ni);
    QMu im = mul(QMu{-b.p, -b.q}, ni);
    return BiField(re.p, re.q, im.p, im.q);
}

BiField BiField::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    BiField r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BiField BiField::conj_i() const { return BiField(c_[0], c_[1], -c_[2], -c_[3]); }

BiField BiField::conj_mu() const
{
    // p + q mu -> p + q(-1 - mu) = (p - q) - q mu
    return BiField(c_[0] - c_[1], -c_[1], c_[2] - c_[3], -c_[3]);
}

BiField BiField::complex_conj() const { return conj_mu().conj_i(); }

Rational BiField::norm_to_q() const
{
    BiField n1 = *this * conj_i();
    BiField n2 = n1 * n1.conj_mu();
    return n2.c_[0];
}

std::complex<double> BiField::to_complex() const
{
    const std::complex<double> mu(-0.5, std::sqrt(7.0) / 2.0), I(0, 1);
    return c_[0].to_double() + c_[1].to_double() * mu + I * (c_[2].to_double() + c_[3].to_double() * mu);
}

std::string BiField::str() const
{
    static const char *names[4] = {"", "mu", "i", "i*mu"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k].is_zero()) continue;
        std::string coeff = c_[k].str();
        std::string term;
        if (k == 0) term = coeff;
        else if (c_[k].is_one()) term = names[k];
        else if (c_[k] == Rational(-1)) term = std::string("-") + names[k];
        else term = coeff + "*" + names[k];
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::optional<BiField> try_inverse(const BiField &b)
{
    if (b.is_zero()) return std::nullopt;
    return b.inverse();
}

std::optional<BiField> try_sqrt(const BiField &b)
{
    if (!b.is_rational()) return std::nullopt;
    if (auto r = try_sqrt(b[0])) return BiField(*r);
    if (auto r = try_sqrt(-b[0])) return BiField(0, 0, *r, 0);
    return std::nullopt;
}

} // namespace cmg

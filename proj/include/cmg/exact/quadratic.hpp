#ifndef CMG_EXACT_QUADRATIC_HPP
#define CMG_EXACT_QUADRATIC_HPP

#include <optional>
#include <ostream>
#include <string>

#include "cmg/errors.hpp"
#include "cmg/exact/rational.hpp"

namespace cmg
{

// x + y*sqrt(D) over Q. The squarefree tag D is part of the type, so mixing
// fields is a compile error rather than a runtime surprise.
template <long D>
class QuadExt
{
    static_assert(D != 0 && D != 1, "D must be squarefree and not 0 or 1");

public:
    QuadExt() = default;
    QuadExt(int v) : x_(v) {}
    QuadExt(long v) : x_(v) {}
    QuadExt(const Rational &x) : x_(x) {}
    QuadExt(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {}

    static constexpr long d() { return D; }
    static QuadExt root() { return QuadExt(Rational(0), Rational(1)); }

    const Rational &x() const { return x_; }
    const Rational &y() const { return y_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool is_rational() const { return y_.is_zero(); }

    QuadExt conj() const { return QuadExt(x_, -y_); }
    Rational norm() const { return x_ * x_ - Rational(D) * y_ * y_; }

    QuadExt operator-() const { return QuadExt(-x_, -y_); }
    QuadExt &operator+=(const QuadExt &o) { x_ += o.x_; y_ += o.y_; return *this; }
    QuadExt &operator-=(const QuadExt &o) { x_ -= o.x_; y_ -= o.y_; return *this; }
    QuadExt &operator*=(const QuadExt &o)
    {
        Rational nx = x_ * o.x_ + Rational(D) * y_ * o.y_;
        Rational ny = x_ * o.y_ + y_ * o.x_;
        x_ = std::move(nx);
        y_ = std::move(ny);
        return *this;
    }
    QuadExt inverse() const
    {
        Rational n = norm();
        if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt d)");
        return QuadExt(x_ / n, -y_ / n);
    }
    QuadExt &operator/=(const QuadExt &o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt a, const QuadExt &b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt &b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt &b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt &b) { return a /= b; }
    friend bool operator==(const QuadExt &a, const QuadExt &b) { return a.x_ == b.x_ && a.y_ == b.y_; }

    QuadExt pow(long e) const
    {
        if (e < 0) return inverse().pow(-e);
        QuadExt r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const
    {
        if (y_.is_zero()) return x_.str();
        std::string r = x_.is_zero() ? "" : x_.str();
        std::string rad = D == -1 ? "i" : "sqrt(" + std::to_string(D) + ")";
        std::string ys;
        if (y_.is_one()) ys = rad;
        else if (y_ == Rational(-1)) ys = "-" + rad;
        else ys = y_.str() + "*" + rad;
        if (r.empty()) return ys;
        return r + (ys[0] == '-' ? "" : "+") + ys;
    }
    friend std::ostream &operator<<(std::ostream &os, const QuadExt &q) { return os << q.str(); }

private:
    Rational x_, y_;
};

template <long D>
bool is_zero(const QuadExt<D> &q) { return q.is_zero(); }

template <long D>
std::optional<QuadExt<D>> try_inverse(const QuadExt<D> &q)
{
    if (q.is_zero()) return std::nullopt;
    return q.inverse();
}

// Square roots inside the field: rational squares, and for D < 0 also negative
// rationals times sqrt(D) (so sqrt(-1) = i in Q(i)). For Q(i) the general
// element p+qi is handled through the norm.
template <long D>
std::optional<QuadExt<D>> try_sqrt(const QuadExt<D> &q)
{
    if (q.is_rational()) {
        if (auto r = try_sqrt(q.x())) return QuadExt<D>(*r);
        if (auto r = try_sqrt(q.x() / Rational(D))) return QuadExt<D>(Rational(0), *r);
        return std::nullopt;
    }
    if constexpr (D == -1) {
        auto n = try_sqrt(q.norm());
        if (!n) return std::nullopt;
        for (const Rational &m : {*n, -*n}) {
            auto p = try_sqrt((q.x() + m) / Rational(2));
            if (p && !p->is_zero()) return QuadExt<D>(*p, q.y() / (Rational(2) * *p));
        }
    }
    return std::nullopt;
}

template <long D>
std::string to_string(const QuadExt<D> &q) { return q.str(); }

using Gaussian = QuadExt<-1>;

} // namespace cmg

#endif

#ifndef CMG_EXACT_POLY1_HPP
#define CMG_EXACT_POLY1_HPP

#include <string>
#include <utility>
#include <vector>

#include "cmg/errors.hpp"

namespace cmg
{

// Dense univariate polynomial over a field F, coefficients lowest degree first.
template <class F>
class Poly1
{
public:
    Poly1() = default;
    Poly1(std::vector<F> c) : c_(std::move(c)) { trim(); }
    Poly1(const F &c) : c_{c} { trim(); }
    static Poly1 x() { return Poly1(std::vector<F>{F(0), F(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    F coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : F(0); }
    F lead() const { return c_.empty() ? F(0) : c_.back(); }
    const std::vector<F> &coeffs() const { return c_; }

    Poly1 operator-() const
    {
        Poly1 r = *this;
        for (auto &v : r.c_) v = -v;
        return r;
    }
    Poly1 &operator+=(const Poly1 &o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly1 &operator-=(const Poly1 &o) { return *this += -o; }
    friend Poly1 operator+(Poly1 a, const Poly1 &b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1 &b) { return a -= b; }
    friend Poly1 operator*(const Poly1 &a, const Poly1 &b)
    {
        if (a.is_zero() || b.is_zero()) return Poly1();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(Poly1 a, const F &s)
    {
        for (auto &v : a.c_) v *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const Poly1 &a, const Poly1 &b) { return a.c_ == b.c_; }

    F operator()(const F &x) const
    {
        F r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    // Evaluation in any algebra containing F (e.g. a tower element).
    template <class A>
    A eval_in(const A &x, A one) const
    {
        A r = one * F(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + one * *it;
        return r;
    }

    Poly1 derivative() const
    {
        std::vector<F> r;
        for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * F(static_cast<int>(k)));
        return Poly1(std::move(r));
    }

    Poly1 monic() const
    {
        if (is_zero()) return *this;
        return *this * lead().inverse();
    }

    std::pair<Poly1, Poly1> divmod(const Poly1 &d) const
    {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly1 r = *this;
        std::vector<F> q(std::max(0, degree() - d.degree() + 1), F(0));
        F li = d.lead().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int sh = r.degree() - d.degree();
            F f = r.lead() * li;
            q[sh] = f;
            std::vector<F> sub(sh, F(0));
            for (const auto &v : d.c_) sub.push_back(v * f);
            r -= Poly1(std::move(sub));
        }
        return {Poly1(std::move(q)), r};
    }

    friend Poly1 gcd(Poly1 a, Poly1 b)
    {
        while (!b.is_zero()) {
            Poly1 r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k] == F(0)) continue;
            if (!s.empty()) s += " + ";
            s += "(" + to_string(c_[k]) + ")";
            if (k > 0) s += "*x^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
    std::vector<F> c_;
};

// Resultant by the Euclidean recursion. For monic f it equals the product of g
// over the roots of f (with multiplicity).
template <class F>
F resultant(const Poly1<F> &f, const Poly1<F> &g)
{
    if (f.is_zero() || g.is_zero()) return F(0);
    int m = f.degree(), n = g.degree();
    if (n == 0) return g.lead().pow(m);
    if (m == 0) return f.lead().pow(n);
    Poly1<F> r = f.divmod(g).second;
    F sign = ((m * n) % 2) ? F(-1) : F(1);
    if (r.is_zero()) return F(0);
    return sign * g.lead().pow(m - r.degree()) * resultant(g, r);
}

} // namespace cmg

#endif

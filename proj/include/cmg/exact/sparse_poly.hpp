#ifndef CMG_EXACT_SPARSE_POLY_HPP
#define CMG_EXACT_SPARSE_POLY_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>

#include "cmg/errors.hpp"
#include "cmg/exact/quadratic.hpp"
#include "cmg/exact/rational.hpp"

namespace cmg
{

namespace detail
{
// Out-of-class so that member is_zero() does not hide the ring hooks.
template <class S>
bool coeff_is_zero(const S &s)
{
    return is_zero(s);
}
} // namespace detail

// Sparse polynomial over scalar ring S in the variables described by V.
// V supplies: n, names, weights, and which variables may carry negative
// exponents (localisation at that variable). Weight of a monomial is the
// weighted sum of its exponents.
template <class S, class V>
class SparsePoly
{
public:
    static constexpr int nvars = V::n;
    using Exps = std::array<int, V::n>;
    using Terms = std::map<Exps, S>;

    SparsePoly() = default;
    SparsePoly(int c) : SparsePoly(S(c)) {}
    template <class Q = S>
        requires(!std::is_same_v<Q, Rational>)
    SparsePoly(const Rational &c) : SparsePoly(S(c))
    {
    }
    SparsePoly(const S &c)
    {
        if (!cmg_is_zero(c)) t_[Exps{}] = c;
    }
    static SparsePoly var(int j, int power = 1)
    {
        Exps e{};
        e[j] = power;
        return monomial(e, S(1));
    }
    static SparsePoly monomial(const Exps &e, const S &c)
    {
        for (int j = 0; j < V::n; ++j)
            if (e[j] < 0 && !V::invertible[j])
                throw DivisionByZero(std::string("negative power of non-invertible variable ") + V::names[j]);
        SparsePoly p;
        if (!cmg_is_zero(c)) p.t_[e] = c;
        return p;
    }

    const Terms &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exps{}); }
    S constant_term() const
    {
        auto it = t_.find(Exps{});
        return it == t_.end() ? S(0) : it->second;
    }
    S coeff(const Exps &e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? S(0) : it->second;
    }

    static int monomial_weight(const Exps &e)
    {
        int w = 0;
        for (int j = 0; j < V::n; ++j) w += V::weights[j] * e[j];
        return w;
    }
    // Weight if homogeneous (zero counts as homogeneous of any weight: nullopt).
    std::optional<int> homogeneous_weight() const
    {
        std::optional<int> w;
        for (const auto &[e, c] : t_) {
            int m = monomial_weight(e);
            if (w && *w != m) return std::nullopt;
            w = m;
        }
        return w;
    }
    bool is_homogeneous_of(int w) const
    {
        for (const auto &[e, c] : t_)
            if (monomial_weight(e) != w) return false;
        return true;
    }

    SparsePoly operator-() const
    {
        SparsePoly r = *this;
        for (auto &[e, c] : r.t_) c = -c;
        return r;
    }
    SparsePoly &operator+=(const SparsePoly &o)
    {
        for (const auto &[e, c] : o.t_) add_term(e, c);
        return *this;
    }
    SparsePoly &operator-=(const SparsePoly &o)
    {
        for (const auto &[e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    SparsePoly &operator*=(const SparsePoly &o)
    {
        *this = *this * o;
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly &b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly &b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b)
    {
        SparsePoly r;
        for (const auto &[e1, c1] : a.t_)
            for (const auto &[e2, c2] : b.t_) {
                Exps e;
                for (int j = 0; j < V::n; ++j) e[j] = e1[j] + e2[j];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    friend SparsePoly operator*(SparsePoly a, const S &s)
    {
        if (cmg_is_zero(s)) return SparsePoly();
        for (auto &[e, c] : a.t_) c *= s;
        return a;
    }
    friend SparsePoly operator*(const S &s, SparsePoly a) { return a * s; }
    friend bool operator==(const SparsePoly &a, const SparsePoly &b) { return a.t_ == b.t_; }

    SparsePoly pow(int k) const
    {
        if (k < 0) {
            auto inv = try_inverse(*this);
            if (!inv) throw DivisionByZero("negative power of non-unit polynomial");
            return inv->pow(-k);
        }
        SparsePoly r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    // Apply the derivation determined by the images of the variables
    // (Leibniz rule, valid for negative exponents too).
    SparsePoly derive(const std::array<SparsePoly, V::n> &images) const
    {
        SparsePoly r;
        for (const auto &[e, c] : t_)
            for (int j = 0; j < V::n; ++j) {
                if (e[j] == 0 || images[j].is_zero()) continue;
                Exps f = e;
                f[j] -= 1;
                r += monomial_unchecked(f, c * S(e[j])) * images[j];
            }
        return r;
    }

    // Ring homomorphism into R given images of the variables. Variables that
    // appear with negative exponent need an inverse image.
    template <class R>
    R substitute(const std::array<R, V::n> &images, const std::array<std::optional<R>, V::n> &inverse_images,
                 const std::function<R(const S &)> &embed) const
    {
        R r = embed(S(0));
        for (const auto &[e, c] : t_) {
            R m = embed(c);
            for (int j = 0; j < V::n; ++j) {
                if (e[j] > 0)
                    for (int k = 0; k < e[j]; ++k) m = m * images[j];
                else if (e[j] < 0) {
                    if (!inverse_images[j]) throw DivisionByZero(std::string("no inverse image for ") + V::names[j]);
                    for (int k = 0; k < -e[j]; ++k) m = m * *inverse_images[j];
                }
            }
            r = r + m;
        }
        return r;
    }

    template <class T>
    SparsePoly<T, V> map_coeffs(const std::function<T(const S &)> &f) const
    {
        SparsePoly<T, V> r;
        for (const auto &[e, c] : t_) r += SparsePoly<T, V>::monomial(e, f(c));
        return r;
    }

    std::string str() const
    {
        if (t_.empty()) return "0";
        std::string out;
        // highest weight first, as series coefficients are usually written
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto &[e, c] = *it;
            std::string mon;
            for (int j = 0; j < V::n; ++j) {
                if (e[j] == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += V::names[j];
                if (e[j] != 1) mon += "^" + std::to_string(e[j]);
            }
            std::string cs = to_string(c);
            bool composite = cs.find_first_of("+-", 1) != std::string::npos;
            std::string term;
            if (mon.empty()) term = composite ? "(" + cs + ")" : cs;
            else if (cs == "1") term = mon;
            else if (cs == "-1") term = "-" + mon;
            else term = (composite ? "(" + cs + ")" : cs) + "*" + mon;
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out;
    }
    friend std::ostream &operator<<(std::ostream &os, const SparsePoly &p) { return os << p.str(); }

private:
    static bool cmg_is_zero(const S &s) { return detail::coeff_is_zero(s); }
    static SparsePoly monomial_unchecked(const Exps &e, const S &c)
    {
        SparsePoly p;
        if (!cmg_is_zero(c)) p.t_[e] = c;
        return p;
    }
    void add_term(const Exps &e, const S &c)
    {
        if (cmg_is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (cmg_is_zero(it->second)) t_.erase(it);
    }

    Terms t_;
};

template <class S, class V>
bool is_zero(const SparsePoly<S, V> &p) { return p.is_zero(); }

// Units: single monomials whose variables are all invertible and whose scalar is a unit.
template <class S, class V>
std::optional<SparsePoly<S, V>> try_inverse(const SparsePoly<S, V> &p)
{
    if (p.terms().size() != 1) return std::nullopt;
    const auto &[e, c] = *p.terms().begin();
    auto ci = try_inverse(c);
    if (!ci) return std::nullopt;
    typename SparsePoly<S, V>::Exps f;
    for (int j = 0; j < V::n; ++j) {
        if (e[j] != 0 && !V::invertible[j]) return std::nullopt;
        f[j] = -e[j];
    }
    return SparsePoly<S, V>::monomial(f, *ci);
}

template <class S, class V>
std::optional<SparsePoly<S, V>> try_sqrt(const SparsePoly<S, V> &p)
{
    if (p.terms().size() != 1) return std::nullopt;
    const auto &[e, c] = *p.terms().begin();
    auto cs = try_sqrt(c);
    if (!cs) return std::nullopt;
    typename SparsePoly<S, V>::Exps f;
    for (int j = 0; j < V::n; ++j) {
        if (e[j] % 2 != 0) return std::nullopt;
        f[j] = e[j] / 2;
    }
    return SparsePoly<S, V>::monomial(f, *cs);
}

template <class S, class V>
std::string to_string(const SparsePoly<S, V> &p) { return p.str(); }

// Variables of the Weierstrass base: a (weight 4), b (weight 6, invertible so
// that the branch computations may divide by it), and the formal symbol E2
// (weight 2) needed only by v = v0 + (E2/12) z.
struct ABVars {
    static constexpr int n = 3;
    static constexpr std::array<const char *, 3> names{"a", "b", "E2"};
    static constexpr std::array<int, 3> weights{4, 6, 2};
    static constexpr std::array<bool, 3> invertible{false, true, false};
};

// Quasi-modular symbols E2, E4, E6, with E6 invertible.
struct EVars {
    static constexpr int n = 3;
    static constexpr std::array<const char *, 3> names{"E2", "E4", "E6"};
    static constexpr std::array<int, 3> weights{2, 4, 6};
    static constexpr std::array<bool, 3> invertible{false, false, true};
};

using WeightedPoly = SparsePoly<Gaussian, ABVars>;
using QMPoly = SparsePoly<Gaussian, EVars>;

} // namespace cmg

#endif

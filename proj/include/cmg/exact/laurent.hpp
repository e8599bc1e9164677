#ifndef CMG_EXACT_LAURENT_HPP
#define CMG_EXACT_LAURENT_HPP

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cmg/errors.hpp"
#include "cmg/exact/rational.hpp"
#include "cmg/exact/sparse_poly.hpp"

namespace cmg
{

// Coefficient rings must provide +, -, *, ==, construction from Rational, and
// the ADL hooks is_zero / try_inverse / try_sqrt / to_string.
template <class R>
concept CoeffRing = requires(R a, R b, Rational q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    R(q);
    { detail::coeff_is_zero(a) } -> std::convertible_to<bool>;
};

// Laurent series sum c_k z^k. Coefficients are known for k < trunc(); for
// an exact series (trunc() == kExact) all coefficients past the stored ones vanish.
template <CoeffRing R>
class TruncatedLaurent
{
public:
    static constexpr int kExact = INT_MAX / 4;

    // The zero series, exact.
    TruncatedLaurent() = default;
    // Zero up to (but excluding) z^trunc.
    static TruncatedLaurent zero(int trunc) { return TruncatedLaurent(0, {}, trunc); }
    static TruncatedLaurent constant(const R &c, int trunc = kExact) { return TruncatedLaurent(0, {c}, trunc); }
    static TruncatedLaurent monomial(const R &c, int k, int trunc = kExact) { return TruncatedLaurent(k, {c}, trunc); }
    static TruncatedLaurent z(int trunc = kExact) { return monomial(R(Rational(1)), 1, trunc); }
    TruncatedLaurent(int ord, std::vector<R> coeffs, int trunc) : ord_(ord), c_(std::move(coeffs)), trunc_(trunc)
    {
        normalize();
    }

    bool is_exact() const { return trunc_ >= kExact; }
    int trunc() const { return trunc_; }
    // Lowest exponent with a nonzero coefficient; for a series known to be zero
    // below trunc this is trunc (and kExact for the exact zero series).
    int ord() const { return c_.empty() ? trunc_ : ord_; }
    bool is_zero_known() const { return c_.empty(); }
    // Index past the last stored coefficient.
    int stored_end() const { return ord_ + static_cast<int>(c_.size()); }

    R coeff(int k) const
    {
        if (k >= trunc_)
            throw TruncationExhausted("coefficient of z^" + std::to_string(k) + " requested but series is known only below z^" +
                                      std::to_string(trunc_));
        if (c_.empty() || k < ord_ || k >= stored_end()) return R(Rational(0));
        return c_[k - ord_];
    }
    R lead() const
    {
        if (c_.empty()) throw NonInvertibleLead("leading coefficient of a series that is zero to its truncation");
        return c_.front();
    }
    R residue() const { return coeff(-1); }

    // The same series with its truncation lowered to n (n >= current is a no-op).
    TruncatedLaurent truncated(int n) const
    {
        if (n >= trunc_) return *this;
        std::vector<R> c;
        for (int k = ord_; k < std::min(n, stored_end()); ++k) c.push_back(c_[k - ord_]);
        return TruncatedLaurent(ord_, std::move(c), n);
    }

    TruncatedLaurent operator-() const
    {
        TruncatedLaurent r = *this;
        for (auto &v : r.c_) v = -v;
        return r;
    }

    friend TruncatedLaurent operator+(const TruncatedLaurent &a, const TruncatedLaurent &b) { return a.combine(b, 1); }
    friend TruncatedLaurent operator-(const TruncatedLaurent &a, const TruncatedLaurent &b) { return a.combine(b, -1); }

    friend TruncatedLaurent operator*(const TruncatedLaurent &a, const TruncatedLaurent &b)
    {
        int oa = a.ord(), ob = b.ord();
        // Pessimistic validity: unknown part of a meets the lowest term of b and vice versa.
        long long ta = a.is_exact() ? kExact : static_cast<long long>(a.trunc_) + (b.c_.empty() ? b.trunc_ : ob);
        long long tb = b.is_exact() ? kExact : static_cast<long long>(b.trunc_) + (a.c_.empty() ? a.trunc_ : oa);
        int t = static_cast<int>(std::min<long long>({ta, tb, kExact}));
        if (a.c_.empty() || b.c_.empty()) return zero(t);
        int lo = oa + ob;
        int hi = a.stored_end() + b.stored_end() - 1; // exclusive
        if (t < kExact) hi = std::min(hi, t);
        std::vector<R> r(std::max(0, hi - lo), R(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            int ei = oa + static_cast<int>(i);
            if (ei + ob >= hi) break;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                int e = ei + ob + static_cast<int>(j);
                if (e >= hi) break;
                r[e - lo] = r[e - lo] + a.c_[i] * b.c_[j];
            }
        }
        return TruncatedLaurent(lo, std::move(r), t);
    }
    friend TruncatedLaurent operator*(const TruncatedLaurent &a, const R &s)
    {
        TruncatedLaurent r = a;
        for (auto &v : r.c_) v = v * s;
        r.normalize();
        return r;
    }
    friend TruncatedLaurent operator*(const R &s, const TruncatedLaurent &a) { return a * s; }

    // Multiply by z^k.
    TruncatedLaurent shift(int k) const
    {
        return TruncatedLaurent(ord_ + k, c_, is_exact() ? kExact : trunc_ + k);
    }

    TruncatedLaurent derive() const
    {
        std::vector<R> r;
        for (std::size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] * R(Rational(ord_ + static_cast<int>(i))));
        return TruncatedLaurent(ord_ - 1, std::move(r), is_exact() ? kExact : trunc_ - 1);
    }

    // Antiderivative with zero constant term; requires a vanishing z^-1 coefficient.
    TruncatedLaurent integrate() const
    {
        std::vector<R> r;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int k = ord_ + static_cast<int>(i);
            if (k == -1) {
                if (!detail::coeff_is_zero(c_[i])) throw DomainError("integrating a series with nonzero residue");
                r.push_back(R(Rational(0)));
                continue;
            }
            r.push_back(c_[i] * R(Rational(1, k + 1)));
        }
        return TruncatedLaurent(ord_ + 1, std::move(r), is_exact() ? kExact : trunc_ + 1);
    }

    // Apply f to every coefficient (e.g. a derivation of the coefficient ring);
    // the validity range is unchanged.
    template <class F>
    TruncatedLaurent map(F &&f) const
    {
        std::vector<R> r;
        for (const auto &v : c_) r.push_back(f(v));
        return TruncatedLaurent(ord_, std::move(r), trunc_);
    }
    template <class T, class F>
    TruncatedLaurent<T> map_to(F &&f) const
    {
        std::vector<T> r;
        for (const auto &v : c_) r.push_back(f(v));
        return TruncatedLaurent<T>(ord_, std::move(r), trunc_);
    }

    // Multiplicative inverse, known below min(trunc - 2*ord, cap).
    TruncatedLaurent inv(int cap) const
    {
        if (c_.empty()) throw NonInvertibleLead("inverse of a series that is zero to its truncation");
        auto li = try_inverse(c_.front());
        if (!li) throw NonInvertibleLead("leading coefficient " + to_string(c_.front()) + " is not a unit");
        int o = ord_;
        int t = is_exact() ? cap : std::min(cap, trunc_ - 2 * o);
        int n = t - (-o); // number of coefficients of the result
        if (n <= 0) return zero(t);
        std::vector<R> g(n, R(Rational(0)));
        g[0] = *li;
        for (int m = 1; m < n; ++m) {
            R s(Rational(0));
            for (int j = 1; j <= m && j < static_cast<int>(c_.size()); ++j) s = s + c_[j] * g[m - j];
            g[m] = -(*li) * s;
        }
        return TruncatedLaurent(-o, std::move(g), t);
    }

    // Principal square root (leading coefficient chosen by try_sqrt, e.g. +i for -1).
    TruncatedLaurent sqrt(int cap) const
    {
        if (c_.empty()) throw NonInvertibleLead("square root of a series that is zero to its truncation");
        if (ord_ % 2 != 0) throw OddOrderSqrt("series of odd order " + std::to_string(ord_));
        auto s0 = try_sqrt(c_.front());
        if (!s0) throw NonInvertibleLead("leading coefficient " + to_string(c_.front()) + " has no square root in the ring");
        auto inv2s0 = try_inverse(*s0 * R(Rational(2)));
        if (!inv2s0) throw NonInvertibleLead("2*sqrt(lead) is not a unit");
        int o = ord_ / 2;
        int t = is_exact() ? cap : std::min(cap, trunc_ - ord_ + o);
        int n = t - o;
        if (n <= 0) return zero(t);
        std::vector<R> s(n, R(Rational(0)));
        s[0] = *s0;
        for (int m = 1; m < n; ++m) {
            R acc = m < static_cast<int>(c_.size()) ? c_[m] : R(Rational(0));
            for (int j = 1; j < m; ++j) acc = acc - s[j] * s[m - j];
            s[m] = acc * *inv2s0;
        }
        return TruncatedLaurent(o, std::move(s), t);
    }

    // f(g) for ord(g) >= 1, result capped at cap.
    TruncatedLaurent compose(const TruncatedLaurent &g, int cap) const
    {
        if (g.c_.empty()) throw CompositionOrderViolation("inner series is zero to its truncation");
        int og = g.ord_;
        if (og < 1) throw CompositionOrderViolation("inner series has order " + std::to_string(og) + " < 1");
        if (c_.empty()) {
            long long t = is_exact() ? cap : std::min<long long>(cap, static_cast<long long>(og) * trunc_);
            return zero(static_cast<int>(t));
        }
        long long t = cap;
        if (!is_exact()) t = std::min<long long>(t, static_cast<long long>(og) * trunc_);
        if (!g.is_exact()) t = std::min<long long>(t, static_cast<long long>(og) * (ord_ - 1) + g.trunc_);
        int T = static_cast<int>(t);
        int kmax = is_exact() ? stored_end() - 1 : trunc_ - 1;
        TruncatedLaurent acc = zero(T);
        // powers g^k for k >= ord, built upward; negative k via the inverse
        TruncatedLaurent base = g.truncated(T - og * (ord_ - 1) + og);
        TruncatedLaurent p;
        if (ord_ >= 0) {
            p = constant(R(Rational(1)));
            for (int k = 0; k < ord_; ++k) p = (p * base).truncated(T + og);
        } else {
            TruncatedLaurent gi = base.inv(T - og * (ord_ + 1) + og);
            p = constant(R(Rational(1)));
            for (int k = 0; k < -ord_; ++k) p = (p * gi).truncated(T + og);
        }
        for (int k = ord_; k <= kmax; ++k) {
            if (static_cast<long long>(og) * k >= T) break;
            R ck = coeff(k);
            if (!detail::coeff_is_zero(ck)) acc = acc + (p * ck).truncated(T);
            p = (p * base).truncated(T + og);
        }
        return acc.truncated(T);
    }

    // Compositional inverse of a series of order 1 with unit leading coefficient
    // (Lagrange inversion): g_n = [z^{n-1}] (z/f)^n / n.
    TruncatedLaurent revert(int cap) const
    {
        if (c_.empty() || ord_ != 1) throw CompositionOrderViolation("reversion needs a series of order exactly 1");
        int t = is_exact() ? cap : std::min(cap, trunc_);
        TruncatedLaurent h = shift(-1).inv(t); // z / f, order 0
        std::vector<R> g(std::max(0, t - 1), R(Rational(0)));
        TruncatedLaurent hp = constant(R(Rational(1)));
        for (int n = 1; n < t; ++n) {
            hp = (hp * h).truncated(t);
            g[n - 1] = hp.coeff(n - 1) * R(Rational(1, n));
        }
        return TruncatedLaurent(1, std::move(g), t);
    }

    // Substitute z -> c*z.
    TruncatedLaurent scale_var(const R &c) const
    {
        std::vector<R> r;
        R p = R(Rational(1));
        if (ord_ >= 0)
            for (int k = 0; k < ord_; ++k) p = p * c;
        else {
            auto ci = try_inverse(c);
            if (!ci) throw NonInvertibleLead("scale factor not a unit");
            for (int k = 0; k < -ord_; ++k) p = p * *ci;
        }
        for (const auto &v : c_) {
            r.push_back(v * p);
            p = p * c;
        }
        return TruncatedLaurent(ord_, std::move(r), trunc_);
    }

    // Equality on the common validity range.
    bool agrees_with(const TruncatedLaurent &o) const
    {
        int t = std::min(trunc_, o.trunc_);
        int lo = std::min(ord(), o.ord());
        if (t >= kExact) t = std::max(stored_end(), o.stored_end());
        for (int k = lo; k < t; ++k)
            if (!(coeff(k) == o.coeff(k))) return false;
        return true;
    }
    // First exponent below the common validity range where the two disagree.
    std::optional<int> first_difference(const TruncatedLaurent &o) const
    {
        int t = std::min(trunc_, o.trunc_);
        int lo = std::min(ord(), o.ord());
        if (t >= kExact) t = std::max(stored_end(), o.stored_end());
        for (int k = lo; k < t; ++k)
            if (!(coeff(k) == o.coeff(k))) return k;
        return std::nullopt;
    }

    std::string str(const std::string &var = "z") const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::coeff_is_zero(c_[i])) continue;
            int k = ord_ + static_cast<int>(i);
            std::string cs = to_string(c_[i]);
            if (!out.empty()) out += " + ";
            out += "(" + cs + ")";
            if (k != 0) out += "*" + var + (k == 1 ? "" : "^" + std::to_string(k));
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(" + var + "^" + std::to_string(trunc_) + ")";
        return out;
    }
    friend std::ostream &operator<<(std::ostream &os, const TruncatedLaurent &s) { return os << s.str(); }

private:
    void normalize()
    {
        // drop anything at or past trunc, then leading and trailing zeros
        if (!is_exact() && stored_end() > trunc_) c_.resize(std::max(0, trunc_ - ord_));
        std::size_t lead = 0;
        while (lead < c_.size() && detail::coeff_is_zero(c_[lead])) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            ord_ = 0;
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            ord_ += static_cast<int>(lead);
        }
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    TruncatedLaurent combine(const TruncatedLaurent &b, int sign) const
    {
        int t = std::min(trunc_, b.trunc_);
        if (c_.empty() && b.c_.empty()) return zero(t);
        int lo = c_.empty() ? b.ord_ : (b.c_.empty() ? ord_ : std::min(ord_, b.ord_));
        int hi = std::max(c_.empty() ? lo : stored_end(), b.c_.empty() ? lo : b.stored_end());
        hi = std::min(hi, t);
        std::vector<R> r(std::max(0, hi - lo), R(Rational(0)));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int k = ord_ + static_cast<int>(i);
            if (k < hi) r[k - lo] = r[k - lo] + c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            int k = b.ord_ + static_cast<int>(i);
            if (k < hi) r[k - lo] = sign > 0 ? r[k - lo] + b.c_[i] : r[k - lo] - b.c_[i];
        }
        return TruncatedLaurent(lo, std::move(r), t);
    }

    int ord_ = 0;
    std::vector<R> c_;
    int trunc_ = kExact;
};

} // namespace cmg

#endif

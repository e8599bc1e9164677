#ifndef CMG_EXACT_TOWER_HPP
#define CMG_EXACT_TOWER_HPP

#include <ostream>
#include <string>

#include "cmg/exact/bifield.hpp"

namespace cmg
{

// Minimal polynomial t^2 + p t + q over Q(mu, i).
struct QuadMinpoly {
    BiField p, q;
    friend bool operator==(const QuadMinpoly &, const QuadMinpoly &) = default;
};

// lo + hi*t in Q(mu, i)[t]/(t^2 + p t + q).
class TowerElem
{
public:
    TowerElem(QuadMinpoly m) : m_(std::move(m)) {}
    TowerElem(BiField lo, BiField hi, QuadMinpoly m) : lo_(std::move(lo)), hi_(std::move(hi)), m_(std::move(m)) {}
    static TowerElem t(const QuadMinpoly &m) { return TowerElem(0, 1, m); }

    const BiField &lo() const { return lo_; }
    const BiField &hi() const { return hi_; }
    const QuadMinpoly &minpoly() const { return m_; }
    bool is_zero() const { return lo_.is_zero() && hi_.is_zero(); }

    TowerElem operator-() const { return TowerElem(-lo_, -hi_, m_); }
    TowerElem &operator+=(const TowerElem &o);
    TowerElem &operator-=(const TowerElem &o);
    TowerElem &operator*=(const TowerElem &o);
    TowerElem &operator*=(const BiField &c);
    TowerElem &operator/=(const TowerElem &o) { return *this *= o.inverse(); }
    friend TowerElem operator+(TowerElem a, const TowerElem &b) { return a += b; }
    friend TowerElem operator-(TowerElem a, const TowerElem &b) { return a -= b; }
    friend TowerElem operator*(TowerElem a, const TowerElem &b) { return a *= b; }
    friend TowerElem operator*(TowerElem a, const BiField &b) { return a *= b; }
    friend TowerElem operator/(TowerElem a, const TowerElem &b) { return a /= b; }
    friend bool operator==(const TowerElem &a, const TowerElem &b)
    {
        return a.m_ == b.m_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    // Image under t -> t' = -p - t, the other root.
    TowerElem conj() const;
    // Product over both roots: lo^2 - lo*hi*p + hi^2*q.
    BiField norm() const;
    TowerElem inverse() const;

    std::string str() const { return "(" + lo_.str() + ")+(" + hi_.str() + ")*t"; }
    friend std::ostream &operator<<(std::ostream &os, const TowerElem &e) { return os << e.str(); }

private:
    void check(const TowerElem &o) const;
    BiField lo_, hi_;
    QuadMinpoly m_;
};

inline BiField field_norm(const TowerElem &x) { return x.norm(); }

} // namespace cmg

#endif

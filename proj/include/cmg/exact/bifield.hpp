#ifndef CMG_EXACT_BIFIELD_HPP
#define CMG_EXACT_BIFIELD_HPP

#include <array>
#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "cmg/exact/quadratic.hpp"
#include "cmg/exact/rational.hpp"

namespace cmg
{

// Element of Q(mu, i), mu^2 + mu + 2 = 0, stored on the basis {1, mu, i, i*mu}.
// Internally it is viewed as A + B*i with A, B in Q(mu).
class BiField
{
public:
    BiField() = default;
    BiField(int v) : c_{Rational(v), 0, 0, 0} {}
    BiField(const Rational &v) : c_{v, 0, 0, 0} {}
    BiField(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
    {
    }
    BiField(const Gaussian &g) : c_{g.x(), 0, g.y(), 0} {}
    // x + y*sqrt(-7) with sqrt(-7) = 2*mu + 1 (mu in the upper half plane).
    static BiField from_sqrt_m7(const QuadExt<-7> &q);

    static BiField mu() { return BiField(0, 1, 0, 0); }
    static BiField i() { return BiField(0, 0, 1, 0); }
    // "c0,c1,c2,c3" with rational entries.
    static BiField parse(const std::string &s);

    const Rational &operator[](int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    // Lies in Q(mu), i.e. no i-component.
    bool in_q_mu() const { return c_[2].is_zero() && c_[3].is_zero(); }
    std::optional<QuadExt<-7>> to_sqrt_m7() const;

    BiField operator-() const { return BiField(-c_[0], -c_[1], -c_[2], -c_[3]); }
    BiField &operator+=(const BiField &o);
    BiField &operator-=(const BiField &o);
    BiField &operator*=(const BiField &o);
    BiField &operator/=(const BiField &o) { return *this *= o.inverse(); }
    friend BiField operator+(BiField a, const BiField &b) { return a += b; }
    friend BiField operator-(BiField a, const BiField &b) { return a -= b; }
    friend BiField operator*(BiField a, const BiField &b) { return a *= b; }
    friend BiField operator/(BiField a, const BiField &b) { return a /= b; }
    friend bool operator==(const BiField &a, const BiField &b) { return a.c_ == b.c_; }

    BiField inverse() const;
    BiField pow(long e) const;
    // Complex conjugation of the standard embedding: i -> -i, mu -> conj(mu) = -1 - mu.
    BiField complex_conj() const;
    // i -> -i, mu fixed.
    BiField conj_i() const;
    // mu -> -1 - mu, i fixed.
    BiField conj_mu() const;
    Rational norm_to_q() const;

    // Standard embedding mu -> (-1 + i*sqrt 7)/2.
    std::complex<double> to_complex() const;

    std::string str() const;
    friend std::ostream &operator<<(std::ostream &os, const BiField &b) { return os << b.str(); }

private:
    std::array<Rational, 4> c_{};
};

inline bool is_zero(const BiField &b) { return b.is_zero(); }
std::optional<BiField> try_inverse(const BiField &b);
std::optional<BiField> try_sqrt(const BiField &b);
inline std::string to_string(const BiField &b) { return b.str(); }

} // namespace cmg

#endif

#ifndef CMG_EXACT_RATIONAL_HPP
#define CMG_EXACT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace cmg
{

// Canonical big rational. GMP keeps num/den reduced with den > 0; the wrapper only
// exists so that generic code never sees gmpxx expression templates.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class &n) : v_(n) {}
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q", and plain decimals such as "-1.25".
    static Rational parse(const std::string &s);

    const mpq_class &raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const;
    Rational pow(long e) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    // floor of the value, and the value reduced into [0,1)
    mpz_class floor() const;
    Rational frac() const;

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

// Ring contract hooks (found by ADL from the generic series/polynomial code).
inline bool is_zero(const Rational &r) { return r.is_zero(); }
std::optional<Rational> try_inverse(const Rational &r);
// Square root when the rational is a perfect square, otherwise nothing.
std::optional<Rational> try_sqrt(const Rational &r);
inline std::string to_string(const Rational &r) { return r.str(); }

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

} // namespace cmg

#endif

#ifndef CMG_NUMERIC_MODULAR_HPP
#define CMG_NUMERIC_MODULAR_HPP

#include <string>

#include "cmg/numeric/mp.hpp"

namespace cmg::num
{

// Element of SL2(Z); PSL2 computations treat g and -g as equal where it matters.
struct Mat2 {
    long a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }
    static Mat2 S() { return {0, -1, 1, 0}; }
    static Mat2 T(long n = 1) { return {1, n, 0, 1}; }

    Mat2 operator*(const Mat2 &o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 inverse() const { return {d, -b, -c, a}; }
    bool operator==(const Mat2 &o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    // Equal as elements of PSL2(Z).
    bool projectively_equal(const Mat2 &o) const
    {
        return *this == o || (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
    }
    Complex apply(const Complex &z) const;
    // c z + d
    Complex cocycle(const Complex &z) const;
    std::string str() const;
};

struct Reduced {
    Complex tau;  // gamma * tau_in, with |Re| <= 1/2 and |tau| >= 1
    Mat2 gamma;
};
// Standard reduction to the fundamental domain with witness.
Reduced reduce_fundamental(const Complex &tau);

struct Eisenstein {
    Complex e2, e4, e6;
};
// E2, E4, E6 at tau, each accurate to about 2^-P (relative to the size of the
// q-series value at the reduced point).
Eisenstein eisenstein_all(const Complex &tau, mpfr_prec_t P);
Complex eisenstein(int k, const Complex &tau, mpfr_prec_t P);

Complex j_invariant(const Complex &tau, mpfr_prec_t P);
// -2^12 3^3 a^3 / Delta with Delta = -16 (4 a^3 + 27 b^2); throws DegenerateCurve.
Complex j_from_ab(const Complex &a, const Complex &b);

// delta^2 G_2(tau, i) = 2 pi^2 E4 (E4^3 - E6^2) / E6^2.  Throws PoleAtI on the orbit of i.
Complex g_target(const Complex &tau, mpfr_prec_t P);

struct CurveAB {
    Complex a, b;
};
// Weierstrass model y^2 = x^3 + a x + b of C / (Z + Z tau).
CurveAB curve_from_tau(const Complex &tau, mpfr_prec_t P);

// The CM point (-B + sqrt(D)) / (2A), D = B^2 - 4AC < 0.
Complex cm_tau(long A, long B, long C, mpfr_prec_t P);

// Hyperbolic distance between two points of the upper half plane.
Real hyperbolic_distance(const Complex &z1, const Complex &z2);
// Distance from z to the PSL2(Z)-orbit of i.
Real distance_to_orbit_of_i(const Complex &z);

} // namespace cmg::num

#endif
